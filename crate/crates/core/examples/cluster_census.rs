//! Enumerates all clusters on {1..n} for small n and prints their cards.
//!
//! Run with: cargo run --release -p lieons-core --example cluster_census

use lieons_core::clusters::{compute_card, enumerate_clusters, enumerate_dee_clusters};

fn main() {
    for n in 2..=5u32 {
        let t = std::time::Instant::now();
        let clusters = enumerate_clusters(n).unwrap();
        let dee = enumerate_dee_clusters(n).unwrap();
        println!(
            "n={n}: {} clusters ({} dee-only) in {:?}",
            clusters.len(),
            dee.len(),
            t.elapsed()
        );
        for c in &clusters {
            let card = compute_card(c).unwrap();
            println!(
                "  card: n_t={} n_e={} n_d={} n_tr={} n_r={} t={:?} p={:?}",
                card.n_t, card.n_e, card.n_d, card.n_tr, card.n_r, card.tvec, card.pvec
            );
        }
    }
}

//! Builds every supported classical algebra at demonstration scale, prints
//! the leaf count and depth of its canonical complete disassembling, and
//! verifies the scheme.
//!
//! Run with: cargo run --release -p lieons-core --example classical_schemes

use lieons_core::classical::{canonical_scheme, make_classical, ClassicalSpec};
use lieons_core::scheme::{is_complete, verify_scheme};
use num_traits::One;

fn main() {
    let specs = [
        ClassicalSpec::so(3, vec![lieons_core::Rational::one(); 3]).unwrap(),
        ClassicalSpec::so(5, vec![lieons_core::Rational::one(); 5]).unwrap(),
        ClassicalSpec::sp(4).unwrap(),
        ClassicalSpec::gl(3).unwrap(),
        ClassicalSpec::sl(3).unwrap(),
        ClassicalSpec::u(2).unwrap(),
        ClassicalSpec::su(3).unwrap(),
    ];
    for spec in specs {
        let g = make_classical(&spec).unwrap();
        let scheme = canonical_scheme(&spec).unwrap();
        assert_eq!(scheme.node, g);
        let report = verify_scheme(&scheme);
        println!(
            "{}({})  dim {:>2}  leaves {:>2}  depth {}  verified: {}  complete: {}",
            spec.kind.name(),
            spec.n,
            g.dim(),
            scheme.leaves().len(),
            scheme.depth(),
            report.is_empty(),
            is_complete(&scheme),
        );
    }
}

//! DOT rendering of vertex graphs: solid undirected edges for tee links
//! (center to each end), dashed directed edges for dees (origin to end).

use lieons_core::lieon::{BaseFamily, BaseLieon};
use std::fmt::Write;

pub fn family_to_dot(f: &BaseFamily, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for v in f.support() {
        writeln!(out, "  v{v} [label=\"{v}\"];").unwrap();
    }
    for m in f.members() {
        match m {
            BaseLieon::Tee(t) => {
                let (i, j) = t.ends();
                let k = t.center();
                writeln!(out, "  v{i} -> v{k} [dir=none, style=solid];").unwrap();
                writeln!(out, "  v{j} -> v{k} [dir=none, style=solid];").unwrap();
            }
            BaseLieon::Dee(d) => {
                writeln!(out, "  v{} -> v{} [style=dashed];", d.origin(), d.end()).unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    out
}

//! Wire formats and DOT rendering shared by the `lieons` binary and its
//! tests.

pub mod docs;
pub mod dot;

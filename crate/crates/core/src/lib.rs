//! Exact computation with finite-dimensional Lie algebra structures viewed as
//! linear Poisson bivectors on the dual space.
//!
//! The crate is organized bottom-up:
//!
//! * [`exterior`] — graded multivector algebra over anticommuting coordinate
//!   symbols with affine polynomial coefficients, and the coordinate Schouten
//!   bracket;
//! * [`lie`] — Lie structures as sparse structure constants, their bivector
//!   duals, Jacobi/compatibility checks, modular theory and the matching
//!   construction for modular algebras;
//! * [`lieon`] — base lieons (tees and dees) on a fixed basis and the
//!   combinatorial pairwise-compatibility criteria;
//! * [`scheme`] — assembling schemes (verified disassembling trees) and the
//!   constructive procedures: solvable recursion, semidirect split, dressing
//!   decomposition, stripping by an involution;
//! * [`classical`] — constructors and canonical complete disassemblings of
//!   the classical algebras so/sp/gl/sl/u/su over the rationals;
//! * [`clusters`] — coaxial cluster enumeration, blocking-rule closure,
//!   cards, equivalence and coaxial Lie algebra synthesis.
//!
//! All scalars are arbitrary-precision rationals; every operation is exact.

pub mod classical;
pub mod clusters;
pub mod error;
pub mod exterior;
pub mod gen;
pub mod lie;
pub mod lieon;
pub mod matrix;
pub mod rational;
pub mod scheme;

pub use error::CoreError;
pub use exterior::{AffinePoly, MultiVector, WedgeMonomial};
pub use lie::{Covector, LieStructure, LieonKind, MatchQuadruple, ModularSplit};
pub use lieon::{BaseFamily, BaseLieon, Dee, Tee};
pub use matrix::Mat;
pub use rational::Rational;
pub use scheme::{AScheme, Involution};

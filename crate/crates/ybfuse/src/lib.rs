//! Exact-arithmetic construction of fused solutions of the Yang-Baxter
//! equation from four base kernels, together with the invariant subspaces
//! attached to standard Young tableaux, the matching primitive idempotents
//! of the symmetric group and of its standard deformation, and verifiers for
//! every identity at desk scale.
//!
//! All arithmetic is exact: arbitrary-precision rationals, univariate
//! polynomials over them, and reduced rational functions. There is no
//! floating point anywhere, so every check is an equality, not a tolerance.

pub mod algebra;
pub mod combinatorics;
pub mod emit;
pub mod error;
pub mod exact;
pub mod fusion;
pub mod golden;
pub mod grid;
pub mod kernels;
pub mod linalg;
pub mod perm;
pub mod report;
pub mod suites;

pub use error::{Error, Result};

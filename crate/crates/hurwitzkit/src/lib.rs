//! Exact computation of classical, weighted, multispecies and quantum
//! Hurwitz numbers, cross-verified through three independent routes, plus the
//! truncated coefficients of the associated hypergeometric 2D Toda
//! τ-functions.
//!
//! The three routes:
//!
//! 1. **Character sums** over branch configurations (Frobenius–Schur), in
//!    [`hurwitz::geometric_weighted`];
//! 2. **Content products** — Jucys–Murphy eigenvalues of the weight
//!    generating function, extracted as series coefficients, in
//!    [`hurwitz::character_weighted`] (the reference route);
//! 3. **Cayley-graph path enumeration** with per-signature weights, in
//!    [`cayley::combinatorial_f`].
//!
//! All arithmetic is exact: every result is an arbitrary-precision
//! [`Rational`]. Equality of the three routes, orthogonality of the
//! character tables, the block-order multinomial relation and the Schur ↔
//! power-sum bridge of the τ-series are enforced by the `acceptance`
//! integration suite.

pub mod cayley;
pub mod character;
pub mod error;
pub mod hurwitz;
pub mod partition;
pub mod perm;
pub mod rational;
pub mod series;
pub mod symfun;
pub mod tau;
pub mod weights;

pub use character::{character_table, character_table_with_max, CharacterTable, DEFAULT_MAX_N};
pub use error::{Error, Result};
pub use hurwitz::{BranchConfig, MultiDegree};
pub use partition::{enumerate_partitions, euler_characteristic, Partition};
pub use rational::{format_rational, parse_rational, Rational};
pub use series::SeriesPoly;
pub use tau::{SchurCoeffs, SeriesTable};
pub use weights::WeightSpec;

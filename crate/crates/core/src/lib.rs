//! Exact homology of labeled configuration spaces `C((M, M₀) × Rⁿ; X)` over
//! a field, as truncated Poincaré series in homological degree and
//! configuration length.
//!
//! The series machinery is generic over the [`Coefficient`] type; the
//! aliases below fix it to arbitrary precision integers, which is what the
//! command-line front end uses.

pub mod assembler;
pub mod betti;
pub mod counts;
pub mod decomposition;
pub mod error;
pub mod loop_homology;
pub mod oracle;
pub mod presets;
pub mod scalar;
pub mod series;
pub mod witt;

pub use assembler::{filtration_table, theorem_a, theorem_b, Mode, ProblemSpec};
pub use betti::{FieldChar, GradedBetti};
pub use counts::GradedCounts;
pub use error::{Error, Result};
pub use scalar::Coefficient;
pub use series::{BiSeries, Caps, FactorKind};

pub use num_bigint::BigUint;

/// Poincaré series with arbitrary precision coefficients.
pub type Series = BiSeries<BigUint>;
/// Poincaré series with `u64` coefficients; overflow is reported, never wrapped.
pub type Series64 = BiSeries<u64>;
/// Generator counts with arbitrary precision coefficients.
pub type Census = loop_homology::GeneratorCensus<BigUint>;

//! Exact and certified computations around rational approximations to ζ(3):
//! Apéry's sequences, perturbed families of them, their recurrences and
//! continued fractions, and high-precision error analysis.

pub mod analysis;
pub mod contfrac;
pub mod error;
pub mod exact;
pub mod families;
pub mod recurrence;

pub use analysis::FixedPrecisionValue;
pub use contfrac::IrregularCF;
pub use error::{Error, Result};
pub use exact::{BigInt, Poly, RatFun, Rational};
pub use families::{Approximant, FamilyParams, Perturbation, Source};
pub use recurrence::{Recurrence2, Terms};

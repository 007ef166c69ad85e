//! Exact coefficient rings: rationals, Laurent polynomials and rational
//! functions in `v` (with `q = v^2`), the quadratic field `Q(sqrt(q0))` used
//! when `v` is specialised, and its cyclotomic extensions for characters.

mod cyclo;
mod laurent;
pub mod linalg;
mod poly;
mod qpoly;
mod quantum;
mod ratfunc;
pub mod rational;
mod sqrt;
mod traits;

pub use cyclo::{CycloSqrt, MAX_CYCLO_PRIME};
pub use laurent::LaurentPolyV;
pub use qpoly::{interpolate_q, QPoly};
pub use quantum::{quantum_factorial, quantum_integer};
pub use ratfunc::RationalFunctionV;
pub use rational::Rational;
pub use sqrt::SqrtExt;
pub use traits::{Coeff, FieldCoeff, NumericCoeff};

//! Exact scalar and univariate-polynomial arithmetic.
//!
//! Three field families are supported: the rationals, the Gaussian
//! rationals and prime fields F_p.

mod field;
mod poly;
mod scalar;

pub use field::{Field, Prime};
pub use poly::Poly;
pub use scalar::Scalar;

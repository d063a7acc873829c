//! Exact computations with coadjoint orbits of the mirabolic subgroup `P_n`
//! of `GL(n)`.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactalg`]: exact scalars (ℚ, ℚ(i), F_p) and univariate polynomials.
//! - [`matrixkit`]: dense linear algebra, characteristic polynomials,
//!   invariant factors and similarity.
//! - [`liecore`]: `gl(n)`, `p_n`, the trace pairing, coadjoint actions and
//!   the moment map `gl(n)* → p_n*`.
//! - [`orbitclass`]: the inductive depth classification of `P_n`-orbits.
//! - [`catalog`]: named orbit representatives and verification suites for
//!   regular semisimple `GL(n)`-orbits.
//! - [`fforacle`]: brute-force orbit enumeration over small prime fields.

pub mod catalog;
pub mod error;
pub mod exactalg;
pub mod fforacle;
pub mod liecore;
pub mod matrixkit;
pub mod orbitclass;
pub mod sample;

pub use error::{Error, Result};
pub use exactalg::{Field, Poly, Prime, Scalar};
pub use matrixkit::Mat;

//! Dense exact linear algebra over any supported field.

mod charpoly;
mod json;
mod mat;
mod smith;

pub use charpoly::{berkowitz, char_poly, hessenberg};
pub use json::MatrixDoc;
pub use mat::Mat;
pub use smith::{
    centralizer_dim_by_rank, centralizer_dim_from_factors, companion, invariant_factors, similar,
};

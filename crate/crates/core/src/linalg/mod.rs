//! Exact dense linear algebra over Q(ζ_p) and its subrings.

mod exact;
mod matrix;
mod poly;
mod ring;

pub use exact::{char_poly, detect_permutation, galois_matrix, mat_inv, mat_mul, ExactMatrix};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use ring::Ring;

pub(crate) use exact::latex_matrix;

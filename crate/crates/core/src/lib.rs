//! Exact construction of the Weil representation of SL₂(F_p) and of minimal
//! integral models for its principal-series constituents over the ring of
//! integers of Q(√εp), ε = (-1)^{(p-1)/2}.
//!
//! The pipeline is: [`weil::weil_full`] builds the p-dimensional model,
//! [`weil::restrict_even`] cuts out the principal-series piece,
//! [`descent::vandermonde`] and [`descent::conjugate_model`] change basis,
//! and [`descent::minimal_model`] packages the result with quadratic-integer
//! entries. Everything is exact; the [`report`] types record what was checked.

pub mod cli;
pub mod descent;
pub mod error;
pub mod exact_number;
pub mod format;
pub mod heisenberg;
pub mod linalg;
pub mod report;
pub mod sl2;
pub mod weil;

pub use error::{Error, Result};
pub use exact_number::{CycElt, GaloisElt, QuadCoord};
pub use heisenberg::QuadForm;
pub use linalg::{ExactMatrix, Matrix, Ring};

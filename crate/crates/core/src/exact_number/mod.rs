//! Exact arithmetic in Q(ζ_p) and its quadratic subfield Q(√εp).

mod cyclotomic;
mod galois;
pub mod modular;
mod qpoly;
mod quadratic;

pub use cyclotomic::CycElt;
pub use galois::{eps_p, gauss_sum, sqrt_eps_p, GaloisElt};
pub use quadratic::{to_quadratic, NotInSubring, QuadCoord};

pub(crate) use cyclotomic::{format_rational, parse_rational};

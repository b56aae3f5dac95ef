//! Exact arithmetic in GF(p), GF(q = p^m) and GF(q³), the Frobenius
//! `ρ(t) = t^q`, and the canonical additive characters.
//!
//! Elements are small integers ([`Fe`]) interpreted by a [`Field`]; a
//! [`Tower`] bundles GF(q) and GF(q³) with the embedding between them.

mod character;
mod field;
pub mod poly;
mod tower;

pub use character::{add_char, add_char_checked, RootOfUnity};
pub use field::{Fe, Field, FieldDesc, FieldElem};
pub use poly::canonical_modulus;
pub use tower::Tower;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("unsupported degree: m = {m}, degree over base = {degree_over_base}")]
    BadDegree { m: u32, degree_over_base: u32 },
    #[error("modulus {0:?} is not monic irreducible of the right degree")]
    BadModulus(Vec<u32>),
    #[error("field of order {0} exceeds the supported size")]
    TooLarge(u64),
    #[error("coefficients {0:?} do not describe a field element")]
    BadCoefficients(Vec<u32>),
    #[error("mismatched field descriptor")]
    DescriptorMismatch,
    #[error("failed to embed GF(q) in GF(q^3)")]
    NoEmbedding,
}

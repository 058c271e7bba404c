//! Exact scalars: rationals, cyclotomic numbers and finite fields.

mod cyclotomic;
mod fq;
mod rational;

pub use cyclotomic::{cyclo_data, euler_phi, CycNum, CycloData};
pub use fq::{is_irreducible, is_prime, prime_power, Fq, FqField, DEFAULT_MAX_Q};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("conductor must be positive")]
    ZeroConductor,
    #[error("cannot promote conductor {from} to {to}: {from} does not divide {to}")]
    NotDivisible { from: u32, to: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no multiplicative inverse in F_q")]
    ZeroInverse,
    #[error("operands belong to different finite fields")]
    FieldMismatch,
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("field size {q} exceeds the configured bound {bound}")]
    FieldTooLarge { q: u32, bound: u32 },
    #[error("modulus is not a monic irreducible polynomial")]
    ReducibleModulus,
}

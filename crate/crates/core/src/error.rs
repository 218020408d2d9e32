use alloc::string::String;

/// Errors raised by field, polynomial, matrix and code operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field order {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds 2^16")]
    FieldTooLarge(u64),
    #[error("invalid field modulus: {0}")]
    InvalidModulus(String),
    #[error("element {rep} out of range for GF({q})")]
    ElementOutOfRange { rep: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{q0} is not p^s with s <= r for GF({q})")]
    InvalidBasePower { q0: u32, q: u32 },
    #[error("Hermitian inner product needs a field of square order, got GF({0})")]
    NotSquareOrder(u32),
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
    #[error("reciprocal undefined: polynomial has zero constant term")]
    ReciprocalUndefined,
    #[error("g does not divide x^n-1")]
    NotDivisor,
    #[error("ring length n must be at least 1")]
    ZeroLength,
    #[error("operation requires gcd(n, p) = 1 (n = {n}, p = {p})")]
    NotSemisimple { n: usize, p: u32 },
    #[error("x^n-1 has {0} irreducible factors; divisor enumeration is capped at 24")]
    TooManyFactors(usize),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("symplectic form needs even length, got {0}")]
    OddLength(usize),
    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("expected a 1-generator descriptor, got {0} generators")]
    NotOneGenerator(usize),
    #[error("enumerating {needed} codewords exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("minimum distance of the zero code is undefined")]
    ZeroCode,
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;

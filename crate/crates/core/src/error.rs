use thiserror::Error;

/// Errors produced by the codec, the list decoder and the designer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("extension degree {0} outside 2..=16")]
    InvalidDegree(u32),
    #[error("modulus {modulus:#x} is not a degree-{m} polynomial")]
    ModulusDegree { m: u32, modulus: u32 },
    #[error("modulus {modulus:#x} is not primitive: x has multiplicative order {order} < {expected}")]
    NonPrimitiveModulus { modulus: u32, order: u32, expected: u32 },
    #[error("division by zero in GF(2^m)")]
    DivisionByZero,
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
    #[error("no element of multiplicative order {n} in GF({q}): {n} does not divide {q}-1")]
    NoOrderNElement { n: usize, q: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("radius {tau} cannot be certified for RS({n},{k}) with multiplicity {multiplicity}")]
    RadiusTooLarge { n: usize, k: usize, tau: usize, multiplicity: u32 },
    #[error("interpolation failed: {0}")]
    InterpolationFailure(String),
    #[error("refusing to enumerate {0} messages")]
    TooLargeToEnumerate(u128),
    #[error("invalid CRC generator {generator:#x}: {reason}")]
    InvalidCrc { generator: u64, reason: &'static str },
    #[error("no feasible code: {0}")]
    NoFeasibleCode(String),
    #[error("argument out of domain: {0}")]
    DomainError(String),
    #[error("malformed data: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

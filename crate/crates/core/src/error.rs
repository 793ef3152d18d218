use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrimeModulus(u64),
    #[error("field of order {q}^{t} exceeds the supported size 2^31")]
    FieldTooLarge { q: u64, t: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("division by zero")]
    DivisionByZero,
    #[error("leading coefficient is not a unit")]
    NonUnitLeadingCoefficient,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("generator does not divide x^{p} - 1")]
    NotADivisor { p: usize },
    #[error("the zero code (generator x^{p} - 1) has no nonzero idempotent generator")]
    ZeroCode { p: usize },
    #[error("{a} and {p} are not coprime")]
    NotCoprime { a: u64, p: u64 },
    #[error("m = {m} must be at least 2 and divide p - 1 = {}", p - 1)]
    InvalidM { p: u64, m: u64 },
    #[error("{b} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { b: u64, p: u64 },
    #[error("multiplier {a} lies in class Q_{class} and gcd({class}, {m}) != 1, so it does not cycle the classes")]
    MultiplierNotCyclic { a: u64, class: usize, m: usize },
    #[error("q = {q} is not an m-adic residue modulo {p} (q mod p lies in Q_{class}, not Q_0)")]
    QNotResidue { q: u64, p: u64, class: usize },
    #[error("s = {s} is incompatible with q = {q}: need s >= 2 and (s - 1) | (q - 1)")]
    IncompatibleS { q: u64, s: usize },
    #[error("slot index {index} is out of range for m = {m}")]
    BadSlotIndex { index: usize, m: usize },
    #[error("expected {expected} slot indices, got {got}")]
    SlotCount { expected: usize, got: usize },
    #[error("enumeration of {size} codewords exceeds the cap {cap}; raise --cap to proceed")]
    TooLarge { size: u128, cap: u64 },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("determinant is {found}, expected {expected}")]
    DeterminantMismatch { expected: BigInt, found: BigInt },

    #[error("{entry} = {value} is not divisible by {p}")]
    DivisibilityViolation {
        entry: &'static str,
        value: BigInt,
        p: u64,
    },

    #[error("{0} is not an odd prime")]
    InvalidPrime(BigInt),

    #[error("elements belong to different groups (p = {left} vs p = {right})")]
    PrimeMismatch { left: u64, right: u64 },

    #[error("Dedekind sum s(h, k) needs k >= 1 and gcd(h, k) = 1, got h = {h}, k = {k}")]
    DedekindDomain { h: BigInt, k: BigInt },

    #[error("expected an element of Gamma0(p), got a Fricke coset element")]
    NotInGamma0,

    #[error("{left} and {right} are not joined by an edge of the Farey triangulation")]
    NotAnEdge { left: String, right: String },

    #[error("endpoint sequence must start with the base edge 1/0, 0/1")]
    WrongBaseEdge,

    #[error("endpoint sequence needs at least two vertices, got {0}")]
    TooFewEndpoints(usize),

    #[error("{0} is not a reduced fraction")]
    InvalidFraction(String),

    #[error("Im(z) = {imag} is below the threshold {threshold}; about {terms} series terms would be needed")]
    ImaginaryPartTooSmall {
        imag: String,
        threshold: String,
        terms: String,
    },

    #[error("precision must be at least {min} digits, got {found}")]
    PrecisionTooLow { min: usize, found: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("render options: {0}")]
    RenderOptions(String),

    #[error("arbitrary precision arithmetic failed: {0}")]
    Numeric(String),
}

impl Error {
    /// Stable machine-readable code, used by the CLI JSON errors and the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DeterminantMismatch { .. } => "determinant_mismatch",
            Error::DivisibilityViolation { .. } => "divisibility_violation",
            Error::InvalidPrime(_) => "invalid_prime",
            Error::PrimeMismatch { .. } => "prime_mismatch",
            Error::DedekindDomain { .. } => "dedekind_domain",
            Error::NotInGamma0 => "not_in_gamma0",
            Error::NotAnEdge { .. } => "not_an_edge",
            Error::WrongBaseEdge => "wrong_base_edge",
            Error::TooFewEndpoints(_) => "too_few_endpoints",
            Error::InvalidFraction(_) => "invalid_fraction",
            Error::ImaginaryPartTooSmall { .. } => "imaginary_part_too_small",
            Error::PrecisionTooLow { .. } => "precision_too_low",
            Error::Parse { .. } => "parse_error",
            Error::RenderOptions(_) => "render_options",
            Error::Numeric(_) => "numeric",
        }
    }

    /// Usage errors (malformed input text, bad options) as opposed to domain errors.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::RenderOptions(_))
    }
}

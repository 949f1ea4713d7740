use crate::series::Nome;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("nome mismatch: {left:?} vs {right:?}")]
    NomeMismatch { left: Nome, right: Nome },
    #[error("wrong nome: expected {expected}, found {found:?}")]
    WrongNome { expected: &'static str, found: Nome },
    #[error("exponent gap {gap} is not an integer")]
    NonIntegralExponentGap { gap: String },
    #[error("leading coefficient is zero, series cannot be inverted")]
    NonUnitLeadingCoefficient,
    #[error("leading coefficient {found} is not 1")]
    NonMonicLeadingCoefficient { found: String },
    #[error("hauptmodul series has a zero leading coefficient")]
    ZeroLeadingCoefficient,
    #[error("hauptmodul series must start at a positive integer power, found {found}")]
    NonIntegralHauptmodulExponent { found: String },

    #[error("inconsistent representation: {0}")]
    InconsistentRep(String),
    #[error("exponent data belong to different groups")]
    GroupMismatch,
    #[error("expected rank {expected}, found {found}")]
    WrongRank { expected: usize, found: usize },

    #[error("3Tr(L) = {0} is not an integer")]
    NonIntegralThreeTrace(String),
    #[error("3Tr(L) = {three_trace} is not congruent to d = {d} mod 3")]
    TraceDCongruenceViolation { three_trace: i64, d: u8 },
    #[error("exponents sum to {found}, expected {expected}")]
    ExponentSumMismatch { expected: String, found: String },
    #[error("{0} is not a root of the indicial polynomial")]
    NotAnExponent(String),
    #[error("resonance: exponent shifted by {shift} is again a root of the indicial polynomial")]
    Resonance { shift: usize },
    #[error("initial vector is not a left eigenvector of B0 for the given exponent")]
    NotLeftEigenvector,
    #[error("lower parameter c + {n} vanishes")]
    PoleInC { n: usize },
    #[error("form is identically zero through the truncation order")]
    ZeroForm,
    #[error("coefficient c vanishes; the noncyclic system degenerates")]
    DegenerateC,

    #[error("representation is reducible")]
    ReducibleRep,
    #[error("exponents {0} differ by an integer; the Frobenius pair is resonant")]
    ResonantExponents(String),
    #[error("the {0} construction does not give an irreducible representation")]
    NotIrreducible(&'static str),
    #[error("family parameter u vanishes")]
    DegenerateU,
    #[error("induction orbit is not normalized: {0}")]
    NormalizationError(String),
    #[error("3Tr(L) = {three_trace} has the parity opposite to e = {e}; only the k1 = 3Tr(L) branch has a series solution")]
    UnsupportedInductionBranch { three_trace: i64, e: u8 },
    #[error("the Jordan-block rank-2 form involves tau and has no q-expansion")]
    SymbolicComponent,

    #[error("invalid job: {0}")]
    Validation(String),
    #[error("step ({step}): {source}")]
    Step { step: char, source: Box<Error> },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Attaches the pipeline step letter (a)-(f) to an error.
    pub fn at_step(self, step: char) -> Error {
        match self {
            Error::Step { .. } => self,
            other => Error::Step { step, source: Box::new(other) },
        }
    }
}

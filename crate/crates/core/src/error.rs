use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the individual
/// subsystems; domain errors are meant to be actionable by the caller.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial has a non-real root; field is not totally real")]
    NotTotallyReal,
    #[error("polynomial is reducible over the rationals: {0}")]
    Reducible(String),
    #[error("the power basis {{1, t, t^2}} is not an integral basis (p = {0} divides the index); supply one explicitly")]
    NonMonogenicBasisRequired(u64),
    #[error("zero element where a nonzero one is required")]
    ZeroElement,
    #[error("zero ideal where a nonzero one is required")]
    ZeroIdeal,
    #[error("prime {0} divides the index [O_F : Z[t]]; supply its factorization externally")]
    IndexDivisor(u64),
    #[error("elements are not coprime to the given prime ideal")]
    NotCoprime,
    #[error("delta is a square in F, so F(sqrt(delta)) is not a quadratic extension")]
    DeltaSquare,
    #[error("square test inconclusive within height bound {0}; raise the bound or precision")]
    InconclusiveHeightBound(u64),
    #[error("search budget of {0} exhausted in {1}")]
    SearchBudgetExceeded(u64, &'static str),
    #[error("principality undecided: no generator found within the enumeration bound")]
    PrincipalityUndecided,
    #[error("no prime found below the scan bound {0}; raise the bound")]
    NoPrimeFoundInBound(u64),
    #[error("Hurwitz zeta has a pole at s = 1")]
    PoleAtOne,
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("functional-equation sign fit failed (residual {0})")]
    SignUnresolved(String),
    #[error("character sum over the Shintani set is {0}, not 0; the zeta-normalized evaluation does not apply")]
    NonvanishingCharacterSum(i64),
    #[error("ideal is not coprime to the conductor")]
    NotCoprimeToConductor,
    #[error("two-path cross-check failed: residual {0}")]
    CrossCheckFailed(String),
    #[error("workload cap exceeded: {0}")]
    WorkloadExceeded(String),
    #[error("height-bound audit failed during enumeration: {0}")]
    HeightBoundInsufficient(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

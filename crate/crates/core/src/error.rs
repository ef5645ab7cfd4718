use thiserror::Error;

/// Errors raised by the kernel and the computation routes.
///
/// Every variant has a stable machine-readable name (see [`Error::name`]),
/// which the command-line front end prints on precondition failures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term is not an invertible rational")]
    NonUnitConstantTerm,
    #[error("series has zero linear coefficient and cannot be reverted")]
    NotRevertible,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("epsilon window exhausted: need exponents {required_lo}..={required_hi}")]
    EpsWindowExhausted { required_lo: i64, required_hi: i64 },
    #[error("fixed-point sum kept a nonzero coefficient at eps^{exponent}")]
    NonCancellingPoles { exponent: i64 },
    #[error("negative binomial index k = {0}")]
    NegativeIndex(i64),
    #[error("coefficient at order {requested} requested beyond truncation order {truncation}")]
    BeyondTruncation { requested: i64, truncation: i64 },
    #[error("characteristic polynomial is not monic")]
    NotMonic,
    #[error("negative exponent {0} in alternant")]
    NegativeExponent(i64),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("rank bound violated: {0}")]
    RankBoundViolated(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("exponent underflow: {0}")]
    ExponentUnderflow(String),
    #[error("homogeneous basis only extends to h_{have}, need h_{need}")]
    BasisTooShort { have: usize, need: usize },
    #[error("invariant broken: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier used in machine-readable output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonUnitConstantTerm => "NonUnitConstantTerm",
            Error::NotRevertible => "NotRevertible",
            Error::NonzeroInnerConstant => "NonzeroInnerConstant",
            Error::EpsWindowExhausted { .. } => "EpsWindowExhausted",
            Error::NonCancellingPoles { .. } => "NonCancellingPoles",
            Error::NegativeIndex(_) => "NegativeIndex",
            Error::BeyondTruncation { .. } => "BeyondTruncation",
            Error::NotMonic => "NotMonic",
            Error::NegativeExponent(_) => "NegativeExponent",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::GuardExceeded(_) => "GuardExceeded",
            Error::RankBoundViolated(_) => "RankBoundViolated",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::ExponentUnderflow(_) => "ExponentUnderflow",
            Error::BasisTooShort { .. } => "BasisTooShort",
            Error::Internal(_) => "Internal",
            Error::Parse(_) => "Parse",
        }
    }

    /// True for errors that signal a violated caller precondition rather
    /// than a defect in the library.
    pub fn is_precondition(&self) -> bool {
        !matches!(
            self,
            Error::Internal(_) | Error::NonCancellingPoles { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised across the crate. Variant names are stable and printed
/// verbatim by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NoRootAboveOne: the polynomial has no real root greater than 1")]
    NoRootAboveOne,
    #[error("NoRootAboveOne: the polynomial has {0} real roots greater than 1")]
    SeveralRootsAboveOne(usize),
    #[error("NotSquarefree: the polynomial shares a factor with its derivative")]
    NotSquarefree,
    #[error("ReducibleDetected: rational root {0}")]
    ReducibleDetected(String),
    #[error("NotMonic: {0}")]
    NotMonic(String),
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("NotInvertible: element shares a factor with the minimal polynomial")]
    NotInvertible,
    #[error("RefinementLimit: interval refinement did not decide a sign")]
    RefinementLimit,
    #[error("EmptyPeriod")]
    EmptyPeriod,
    #[error("LengthMismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("OutOfInterval: value not in the expansion domain")]
    OutOfInterval,
    #[error("CapExceeded: no period detected within {0} steps")]
    CapExceeded(usize),
    #[error("NotAsmin: word is not alternately shift minimal")]
    NotAsmin,
    #[error("NotAsmax: word is not alternately shift maximal")]
    NotAsmax,
    #[error("EmptyAutomaton")]
    EmptyAutomaton,
    #[error("NoConvergence: power iteration did not converge")]
    NoConvergence,
    #[error("StateCapExceeded: more than {0} states")]
    StateCapExceeded(usize),
    #[error("InvalidBlock: input block {0} has no transition")]
    InvalidBlock(String),
    #[error("OutOfDomain: running remainder left its bounds at step {0}")]
    OutOfDomain(usize),
    #[error("ValueOutOfInterval: value not in the normalization domain")]
    ValueOutOfInterval,
    #[error("DigitOutOfRange: digit {0} outside the alphabet")]
    DigitOutOfRange(i64),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// The bare variant name, as used on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NoRootAboveOne | Error::SeveralRootsAboveOne(_) => "NoRootAboveOne",
            Error::NotSquarefree => "NotSquarefree",
            Error::ReducibleDetected(_) => "ReducibleDetected",
            Error::NotMonic(_) => "NotMonic",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotInvertible => "NotInvertible",
            Error::RefinementLimit => "RefinementLimit",
            Error::EmptyPeriod => "EmptyPeriod",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::OutOfInterval => "OutOfInterval",
            Error::CapExceeded(_) => "CapExceeded",
            Error::NotAsmin => "NotAsmin",
            Error::NotAsmax => "NotAsmax",
            Error::EmptyAutomaton => "EmptyAutomaton",
            Error::NoConvergence => "NoConvergence",
            Error::StateCapExceeded(_) => "StateCapExceeded",
            Error::InvalidBlock(_) => "InvalidBlock",
            Error::OutOfDomain(_) => "OutOfDomain",
            Error::ValueOutOfInterval => "ValueOutOfInterval",
            Error::DigitOutOfRange(_) => "DigitOutOfRange",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use std::fmt;

/// Errors surfaced by the exact-computation routines.
///
/// Most variants are mathematical domain errors; [`Error::DigitsOutOfRange`]
/// is a usage error. The distinction matters to callers that map errors to
/// process exit codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Reciprocal of a series whose constant term is not invertible.
    NonInvertibleSeries,
    /// The closed-form Fourier coefficient is stated for k >= 1 only.
    FourierIndexZero,
    /// The closed-form inner product requires both indices >= 1.
    InnerProductIndexZero,
    /// zeta has a simple pole at s = 1.
    ZetaPole,
    /// zeta(0) has no exact form in this library.
    ZetaAtZero,
    /// No exact closed form is known for zeta at odd integers >= 3.
    ZetaOddArgument(i64),
    /// Requested decimal digit count is outside the supported range.
    DigitsOutOfRange(usize),
}

impl Error {
    /// True when the error is a bad-parameter (usage) error rather than a
    /// mathematical domain error.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::DigitsOutOfRange(_))
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonInvertibleSeries => {
                write!(f, "series reciprocal requires an invertible constant term")
            }
            Error::FourierIndexZero => {
                write!(
                    f,
                    "the closed-form Fourier coefficient is defined for k >= 1 \
                     (B_0 = 1 has c_0 = 1 and c_n = 0 for n != 0)"
                )
            }
            Error::InnerProductIndexZero => {
                write!(
                    f,
                    "the closed-form inner product requires k >= 1 and l >= 1"
                )
            }
            Error::ZetaPole => write!(f, "zeta has a simple pole at s = 1"),
            Error::ZetaAtZero => {
                write!(
                    f,
                    "zeta(0) is not covered by the exact Bernoulli closed forms"
                )
            }
            Error::ZetaOddArgument(s) => {
                write!(
                    f,
                    "no exact closed form is known for zeta({s}) at odd integers >= 3"
                )
            }
            Error::DigitsOutOfRange(d) => {
                write!(f, "digits must be between 1 and 10000, got {d}")
            }
        }
    }
}

impl std::error::Error for Error {}

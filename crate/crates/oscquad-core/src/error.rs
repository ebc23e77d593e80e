//! Error type shared by the whole crate.

use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Bernoulli degree beyond the precomputed table.
    DegreeOverflow { degree: usize, max: usize },
    /// An oracle was asked for a derivative order it does not support.
    UnsupportedDerivative { order: usize, max: usize },
    /// Bump support leaves `[0,1]` or has non-positive width.
    SupportOutOfRange,
    /// The adaptive integrator hit its subdivision cap before reaching the
    /// requested tolerance.
    ToleranceNotMet { achieved: f64, requested: f64 },
    /// Algorithm budget the construction does not define (e.g. odd `n < 2s`
    /// for the periodization rule).
    InvalidBudget { n: usize, reason: &'static str },
    /// The periodization rule needs `k ≠ 0`.
    ZeroWaveNumber,
    /// `A^Tay-Per` is not defined for `n` in `(s, 2s)` at finite `s`.
    UndefinedBudget { n: usize, s: u32 },
    /// Argument outside the mathematical domain (e.g. `zeta` at `x ≤ 1`,
    /// `eps` outside `(0,1)`).
    Domain(&'static str),
    /// An `H^∞` norm failed to exhibit decay within the term cap; the input
    /// is not a member of the space.
    DivergentSum,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeOverflow { degree, max } => {
                write!(f, "Bernoulli degree {degree} exceeds table maximum {max}")
            }
            Error::UnsupportedDerivative { order, max } => {
                write!(f, "derivative order {order} unsupported (max {max})")
            }
            Error::SupportOutOfRange => write!(f, "bump support must lie inside [0,1]"),
            Error::ToleranceNotMet {
                achieved,
                requested,
            } => write!(
                f,
                "quadrature tolerance not met: achieved {achieved:.3e}, requested {requested:.3e}"
            ),
            Error::InvalidBudget { n, reason } => write!(f, "invalid budget n={n}: {reason}"),
            Error::ZeroWaveNumber => write!(f, "periodization rule requires k != 0"),
            Error::UndefinedBudget { n, s } => {
                write!(f, "budget n={n} lies in the undefined gap (s, 2s) for s={s}")
            }
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::DivergentSum => write!(f, "series shows no decay: input outside the space"),
        }
    }
}

impl core::error::Error for Error {}

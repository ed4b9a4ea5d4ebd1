use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("denominator vanishes under specialization")]
    DenominatorVanishes,
    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),
    #[error("spherical data degenerate: a_o = 0")]
    SphericalDegenerate,
    #[error("degenerate spectrum: {0}")]
    DegenerateSpectrum(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("singular parameter: {0}")]
    SingularParameter(String),
    #[error("point is not generic: {0}")]
    NonGenericPoint(String),
    #[error("point is not on the variety")]
    NotOnVariety,
    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Failures of the exact polynomial and matrix layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials are over different variable tables")]
    IncompatibleVars,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}` in table")]
    DuplicateVariable(String),
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("minor size {k} out of range for a {rows}x{cols} matrix")]
    MinorSizeOutOfRange { k: usize, rows: usize, cols: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("polynomial is constant in `{0}`")]
    ConstantInVariable(String),
    #[error("polynomial is not symmetric in `{0}` and `{1}`")]
    NotSymmetric(String, String),
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
    #[error("cannot parse polynomial: {0}")]
    ParsePoly(String),
}

/// Errors raised by the geometric and combinatorial layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("expected 5 pentahedral coefficients, got {0}")]
    WrongMuCount(usize),
    #[error("pentahedral coefficient mu{0} is zero")]
    ZeroMu(usize),
    #[error("degenerate pentahedron: mu{0} vanishes")]
    DegeneratePentahedron(usize),
    #[error("alpha undefined: mu0+mu1+mu2-mu3-mu4 = 0")]
    AlphaUndefined,
    #[error("beta undefined: mu0+mu3+mu4-mu1-mu2 = 0")]
    BetaUndefined,
    #[error("identity failure: {0}")]
    IdentityFailure(String),
    #[error("not on Kummer locus: cubic condition is {0}")]
    NotOnKummerLocus(String),
    #[error("zero denominator in {0}")]
    ZeroDenominator(&'static str),
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),
    #[error("points not coplanar: rank {0}, expected 3")]
    PointsNotCoplanar(usize),
    #[error("plane for {0} contains the line l01")]
    PlaneContainsLine(String),
    #[error("malformed divisor expression `{0}`")]
    MalformedDivisor(String),
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("invalid cyclic order `{0}`")]
    InvalidCyclicOrder(String),
    #[error("invalid index set: {0}")]
    InvalidIndices(String),
}

impl Error {
    /// Stable machine-readable code used in JSON error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Poly(PolyError::ParseRational(_)) => "malformed_rational",
            Error::Poly(PolyError::ParsePoly(_)) => "malformed_polynomial",
            Error::Poly(_) => "algebra",
            Error::WrongMuCount(_) | Error::ZeroMu(_) => "invalid_mu",
            Error::DegeneratePentahedron(_) => "degenerate_pentahedron",
            Error::AlphaUndefined => "alpha_undefined",
            Error::BetaUndefined => "beta_undefined",
            Error::IdentityFailure(_) => "identity_failure",
            Error::NotOnKummerLocus(_) => "not_on_kummer_locus",
            Error::ZeroDenominator(_) => "zero_denominator",
            Error::DegenerateCurve(_) => "degenerate_curve",
            Error::PointsNotCoplanar(_) => "points_not_coplanar",
            Error::PlaneContainsLine(_) => "plane_contains_line",
            Error::MalformedDivisor(_) => "malformed_divisor",
            Error::InvalidLabel(_) => "invalid_label",
            Error::InvalidCyclicOrder(_) => "invalid_cyclic_order",
            Error::InvalidIndices(_) => "invalid_indices",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

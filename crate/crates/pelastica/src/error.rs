use thiserror::Error;

/// Errors produced by curve construction, energy evaluation, optimization
/// and surgery operations.
#[derive(Debug, Error)]
pub enum CurveError {
    #[error("curve needs at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("curve data contains a non-finite value")]
    NonFinite,

    #[error("consecutive vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),

    #[error("curve is self-intersecting (segments {0} and {1} cross)")]
    SelfIntersecting(usize, usize),

    #[error("curve is clockwise (signed area {0} <= 0); counterclockwise input required")]
    Clockwise(f64),

    #[error("closure defect {defect:.3e} exceeds tolerance {tol:.3e}")]
    ClosureDefect { defect: f64, tol: f64 },

    #[error("closure projection failed: {0}")]
    ClosureProjection(String),

    #[error("turning number is {0}, expected 1")]
    BadTurning(i32),

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("exponent p must be > 1, got {0}")]
    BadExponent(f64),

    #[error("invalid integrand: {0}")]
    BadIntegrand(String),

    #[error("tabulated integrand evaluated at {0:.6e}, outside its grid [{1:.6e}, {2:.6e}]")]
    TabulatedOutOfRange(f64, f64, f64),

    #[error("quadrature for the integral of f(r)/r diverges near r = 0")]
    QuadratureDivergence,

    #[error("curve is not convex")]
    NotConvex,

    #[error("curve is not centrosymmetric (max angle defect {0:.3e})")]
    NotCentrosymmetric(f64),

    #[error("no equal-area parallel chord found: {0}")]
    ChordSearchFailed(String),

    #[error("no pair of antipodal straight segments found")]
    NoParallelSegments,

    #[error("no qualifying pair of convex-arc chords found: {0}")]
    NoQualifyingChords(String),

    #[error("perturbation width {eps:.3e} below grid resolution (need >= {min:.3e})")]
    EpsBelowResolution { eps: f64, min: f64 },

    #[error("least-squares fit is degenerate: {0}")]
    DegenerateFit(String),

    #[error("line search failed at iteration {iter}: {reason}")]
    LineSearchFailed { iter: usize, reason: String },

    #[error("invalid configuration: {0}")]
    BadConfig(String),
}

pub type Result<T> = std::result::Result<T, CurveError>;

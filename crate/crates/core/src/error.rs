use thiserror::Error;

/// Failures raised by the geometry engine.
///
/// Variants split into input errors (malformed data, bad arguments) and
/// domain violations, where the request is well formed but lies outside the
/// radius domain of the operation. See [`GeomError::is_domain_violation`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("non-convex polygon")]
    NonConvex,
    #[error("ball not centrally symmetric")]
    NotSymmetric,
    #[error("origin not interior")]
    OriginNotInterior,
    #[error("zero direction")]
    ZeroDirection,
    #[error("k too small")]
    KTooSmall,
    #[error("negative radius")]
    NegativeRadius,
    #[error("non-positive epsilon")]
    NonPositiveEpsilon,
    #[error("empty union")]
    EmptyUnion,
    #[error("grid too coarse")]
    GridTooCoarse,
    #[error("step must be positive")]
    NonPositiveStep,
    #[error("steps must be ≥ 1")]
    ZeroSteps,
    #[error("radius range must be increasing")]
    BadRange,
    #[error("radius below set distance")]
    RadiusBelowSetDistance,
    #[error("radius below union distance")]
    RadiusBelowUnionDistance,
    #[error("left witness needs r strictly above set distance")]
    LeftWitnessAtEndpoint,
}

impl GeomError {
    /// True for errors that mean "outside the mathematical domain" rather
    /// than "bad input".
    pub fn is_domain_violation(&self) -> bool {
        matches!(
            self,
            GeomError::RadiusBelowSetDistance
                | GeomError::RadiusBelowUnionDistance
                | GeomError::LeftWitnessAtEndpoint
        )
    }
}

pub type Result<T> = std::result::Result<T, GeomError>;

use thiserror::Error;

use crate::slopes::{Half, Slope};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed slope literal '{0}'")]
    MalformedSlope(String),
    #[error("0/0 is not a slope")]
    ZeroSlope,
    #[error("malformed curve literal '{0}' (expected \"(a,b)\")")]
    MalformedCurve(String),
    #[error("(0,0) is not a curve class")]
    ZeroCurve,
    #[error("curve ({0},{1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("malformed matrix literal '{0}' (expected \"[[a,b],[c,d]]\" or \"phi\")")]
    MalformedMatrix(String),
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(i64),
    #[error("integer overflow")]
    Overflow,

    #[error("{0} and {1} are not joined by a Farey edge")]
    NotAnEdge(Slope, Slope),
    #[error("{0} and {1} do not both lie in the {2:?} half")]
    WrongHalf(Slope, Slope, Half),
    #[error("path endpoints coincide at {0}")]
    DegeneratePath(Slope),
    #[error("a Farey path needs at least one vertex")]
    EmptyPath,
    #[error("a Farey path may not repeat a vertex")]
    RepeatedVertex,

    #[error("curve of slope {0} is parallel to the dividing set")]
    ParallelToDividing(Slope),
    #[error("dividing curve count must be a positive even integer, got {0}")]
    OddDividingCount(u64),
    #[error("ruling slope equals dividing slope {0}")]
    RulingEqualsDividing(Slope),

    #[error("expected {expected} signs for a path of {expected} edges, got {got}")]
    SignCountMismatch { expected: usize, got: usize },
    #[error("stack spans {got_from} -> {got_to}, but the outer slice spans {want_from} -> {want_to}")]
    SpanMismatch {
        got_from: Slope,
        got_to: Slope,
        want_from: Slope,
        want_to: Slope,
    },
    #[error("slices do not share interface slopes: {0} then {1}")]
    StackGap(Slope, Slope),
    #[error("empty slice stack")]
    EmptyStack,
    #[error("contact framing {0} must be at most -1")]
    FramingTooLarge(i64),
    #[error("malformed slice stack '{0}'")]
    MalformedStack(String),

    #[error("dividing set is outside the normalisation case analysis: {0}")]
    Inadmissible(String),
    #[error("dividing set has a contractible component")]
    Contractible,
    #[error("operation needs an arc-plus-closed-curve dividing set")]
    WrongKind,
    #[error("boundary-parallel dividing sets need at least one arc")]
    NoArcs,
    #[error("arc classes must be pairwise distinct")]
    RepeatedArc,
    #[error("chord diagrams need at least one chord")]
    NoChords,
    #[error("dividing set is not one of the two normal forms")]
    NotNormalized,
    #[error("annulus form is not one of the drawn dividing patterns: {0}")]
    BadAnnulusForm(String),

    #[error("no Legendrian figure-eight knot has tb = {tb}, rot = {rot}")]
    NotFigureEight { tb: i64, rot: i64 },
    #[error("tb = {0} exceeds the maximal Thurston-Bennequin number -3")]
    TbAboveMaximum(i64),
    #[error("contact surgery coefficient {0} is not positive")]
    NonPositiveCoefficient(String),

    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

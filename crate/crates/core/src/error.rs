use thiserror::Error;

use crate::exactpoly::RootBracket;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid interval: lo {lo} > hi {hi}")]
    InvalidInterval { lo: f64, hi: f64 },
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,
    #[error("endpoint overflow in {0}")]
    Overflow(&'static str),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("denominator vanishes at the evaluation point")]
    DenominatorZero,
    #[error("polynomial is not square-free")]
    NonSquareFree,
    #[error("polynomial has {} root(s) in the domain", .0.len())]
    HasRoots(Vec<RootBracket>),
    #[error("discriminant enclosure is negative beyond rounding slack")]
    NegativeDiscriminant,
    #[error("radicand enclosure is not positive")]
    NegativeRadicand,
    #[error("enclosures of the same quantity are disjoint: {0}")]
    EmptyIntersection(String),
    #[error("closed-form alpha* enclosure is disjoint from the Sturm bracket")]
    InconsistentAlphaStar,
    #[error("dependency {0} is not verified")]
    DependencyNotVerified(String),
    #[error("unknown claim id {0}")]
    UnknownClaimId(String),
    #[error("value not representable at the requested precision: {0}")]
    Precision(String),
}

//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("lattice coordinate exceeds supported magnitude")]
    CoordinateTooLarge,
    #[error("cone is not strongly convex")]
    NotStronglyConvex,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {0}: {1}")]
    Syntax(usize, String),
    #[error("unknown variable '{0}' at position {1}")]
    UnknownVariable(char, usize),
    #[error("negative exponent at position {0}")]
    NegativeExponent(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NewtonError {
    #[error("zero polynomial has no Newton data")]
    ZeroPolynomial,
    #[error("polynomial must vanish at the origin")]
    NonzeroConstantTerm,
    #[error("covector must have nonnegative coordinates")]
    NegativeCovector,
    #[error("prime must be at least {0}")]
    PrimeTooSmall(u64),
    #[error("prime {0} is too large for exhaustive sampling")]
    PrimeTooLarge(u64),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubdivisionError {
    #[error("ray {0} is not primitive")]
    NotPrimitive(String),
    #[error("ray {0} lies outside the fan support")]
    OutsideSupport(String),
    #[error("ray {0} meets a non-simplicial maximal cone; insert a wall first")]
    NonSimplicialCone(String),
    #[error("{0} and {1} are not rays of a common non-simplicial maximal cone")]
    NoCommonCone(String, String),
    #[error("wall through {0} and {1} does not split the cone")]
    WallDoesNotSplit(String, String),
    #[error("step {index} failed: {source}")]
    Step {
        index: usize,
        #[source]
        source: Box<SubdivisionError>,
    },
    #[error("non-simplicial cone present")]
    NonSimplicialFan,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("vector {0} is not contained in the cone")]
    NotInCone(String),
    #[error("minimal generators need a full-dimensional cone")]
    NotFullDimensional,
    #[error("resolution fan does not refine the dual fan")]
    NotARefinement,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JetError {
    #[error("non-prefix component: {0} present without its predecessor")]
    NonPrefixComponent(String),
    #[error("component must vanish on the distinguished locus coordinates")]
    BadCenter,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unsupported singularity '{0}': {1}")]
    Unsupported(String, String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChartError {
    #[error("chart maps need a regular full-dimensional cone")]
    NotRegular,
    #[error("zero polynomial has no pullback factorization")]
    ZeroPolynomial,
    #[error("exceptional exponent disagrees with the ray valuation on {0}")]
    ValuationMismatch(String),
    #[error("smoothness sampling needs primes >= 3, got {0}")]
    PrimeTooSmall(u64),
    #[error("prime {0} is too large for exhaustive sampling")]
    PrimeTooLarge(u64),
}

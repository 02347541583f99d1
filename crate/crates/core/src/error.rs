use thiserror::Error;

use crate::domain::Subset;
use crate::rational::Rat;

/// Errors produced by domain constructors and operations.
///
/// Validation reports the first violated axiom together with the witnessing
/// subsets, so a failing table can be repaired by hand.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set needs at least one point")]
    EmptyGround,
    #[error("ground set has {points} points, more than the {limit}-point mask bound")]
    TooManyPoints { points: usize, limit: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("label {0:?} is empty or contains a comma")]
    BadLabel(String),
    #[error("dense table for {points} points exceeds the cap of {limit} (raise the limit to allow 2^{points} entries)")]
    GroundTooLarge { points: usize, limit: usize },
    #[error("operands live on different ground sets")]
    GroundMismatch,
    #[error("point index {index} out of range for a {points}-point ground set")]
    BadPoint { index: usize, points: usize },

    #[error("expected {expected} values, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("no value assigned to subset {0}")]
    MissingEntry(Subset),
    #[error("value of the empty set is {value}, must be 0")]
    EmptyNotZero { value: Rat },
    #[error("value of the full set is {value}, must be 1")]
    FullNotOne { value: Rat },
    #[error("not monotone: value({smaller}) = {smaller_value} > {larger_value} = value({larger}) although {smaller} is a subset of {larger}")]
    NotMonotone {
        smaller: Subset,
        larger: Subset,
        smaller_value: Rat,
        larger_value: Rat,
    },
    #[error("value({subset}) = {value} lies outside [0, 1]")]
    OutOfRange { subset: Subset, value: Rat },

    #[error("weight of point {point} is {value}, must be nonnegative")]
    NegativeWeight { point: usize, value: Rat },
    #[error("weights sum to {total}, must sum to 1")]
    WeightsNotNormalized { total: Rat },

    #[error("generator set must be nonempty")]
    EmptyGeneratorSet,
    #[error("generator level {value} lies outside (0, 1]")]
    GeneratorValueOutOfRange { value: Rat },

    #[error("function value at point {point} is {value}, must be nonnegative")]
    NegativeFunction { point: usize, value: Rat },
    #[error("function value at point {point} is {value}, must lie in [0, 1]")]
    FunctionOutOfRange { point: usize, value: Rat },
    #[error("scalar {value} lies outside [0, 1]")]
    ScalarOutOfRange { value: Rat },

    #[error("constraint row has {found} coefficients, objective has {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("oracle instance too large: {0}")]
    TooLarge(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

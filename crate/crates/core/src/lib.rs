//! Exact computations with capacities (monotone normalized games) on finite
//! ground sets.
//!
//! The crate decides balancedness and core non-emptiness by exact rational
//! linear programming with re-verifiable certificates, evaluates Choquet and
//! t-normed integrals, and carries the capacity functor/monad operations,
//! including monad multiplication for generator-presented second-level
//! capacities.
//!
//! All scalar arithmetic is over arbitrary-precision fractions; there is no
//! floating point anywhere. Every value is immutable after construction and
//! every operation is a pure function, so concurrent use needs no locking.

pub mod domain;
pub mod error;
pub mod rational;
pub mod simplex;

pub use domain::{
    comonotone, Capacity, FuncOnX, GeneratedCapacity, Generator, GroundSet, ProbMeasure, Subset,
};
pub use error::{Error, Result};
pub use rational::Rat;

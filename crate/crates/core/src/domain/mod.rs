//! Ground sets, subsets, capacities, probability measures and functions.

mod capacity;
mod func;
mod ground;
mod measure;

pub use capacity::{Capacity, GeneratedCapacity, Generator};
pub use func::{comonotone, FuncOnX};
pub use ground::{GroundSet, Subset, ABSOLUTE_MAX_POINTS, DEFAULT_MAX_POINTS};
pub use measure::ProbMeasure;

pub(crate) use ground::check_same_ground;

//! Combinatorial objects shared by every other module.

mod partition;
mod rational;
mod staircase;

pub use partition::Partition;
pub use rational::ExactRational;
pub use staircase::{Staircase, TypeVector};

//! Graded automorphisms, their action, finite group enumeration and order tools.

pub mod constructors;
pub mod group;
pub mod map;
pub mod order;

pub use group::{FiniteGroup, DEFAULT_GROUP_CAP};
pub use map::{GradedAction, GradedMap};

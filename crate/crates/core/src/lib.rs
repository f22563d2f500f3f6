pub mod algebra;
pub mod autgroup;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod rational;
pub mod series;
pub mod structure;

pub use cyclotomic::Cyc;
pub use error::{Error, Result};
pub use rational::Rational;

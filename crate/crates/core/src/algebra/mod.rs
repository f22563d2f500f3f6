//! Graded algebras: skew polynomial rings, `O_q(M_2)` and general quadratic
//! PBW presentations.

pub mod monomial;
pub mod normal;
pub mod poly;
pub mod presentation;
pub mod twist;

pub use monomial::Monomial;
pub use poly::NCPoly;
pub use presentation::{PbwPresentation, PresentationKind, RelationSpec};
pub use twist::PartitionTwist;

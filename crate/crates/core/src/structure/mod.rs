//! Blocks, circles, classification of quasi-reflections and the decision
//! whether a group is generated by them.

pub mod blocks;
pub mod classify;
pub mod decomposition;
pub mod mgroup;
pub mod stc;

pub use classify::{classify, classify_to_degree, QRClass};
pub use decomposition::{block_circle_decomposition, circle_parameters, BlockCircleDecomp, DecompPart, PartKind};
pub use mgroup::{make_m_group, minus_one_ring};
pub use stc::{compare_order_distributions, decide_stc, StcReport};

//! Fixed rings: Reynolds operator, degreewise fixed spaces, generator sets
//! and the abelian free-module identity.

pub mod circle;
pub mod fixed;
pub mod free_module;
pub mod quantum;

pub use circle::circle_invariant_generators;
pub use fixed::{
    fixed_space_basis, fixed_space_unchecked, is_fixed, mine_generators, molien_coefficient, reynolds, verify_generators, DegreeStatus,
    GeneratorSet, SubalgebraSpan,
};
pub use free_module::{free_module_check, FreeModuleReport};
pub use quantum::{power_relations, PowerRelation};

//! Finite groups as multiplication tables, their maximal abelian subgroups,
//! and mechanical checkers for a family of structural theorems about them.

pub mod bitset;
pub mod catalog;
pub mod commuting;
pub mod families;
pub mod group;
pub mod maximal_abelian;
pub mod perm;
pub mod subgroup;
pub mod verify;

pub use bitset::ElementSet;
pub use catalog::{is_isomorphic, standard_corpus, CatalogEntry, CatalogError, Fingerprint};
pub use commuting::{center, commuting_graph, CommutingGraph};
pub use families::{direct_product, family, FamilyKind};
pub use group::{validate_cayley_table, Element, FiniteGroup, GroupError, DEFAULT_ORDER_CAP};
pub use maximal_abelian::{maximal_abelian_subgroups, MaximalAbelianFamily};
pub use perm::{from_permutation_generators, Permutation};
pub use subgroup::{
    all_subgroups, centralizer, closure, conjugate_subgroup, normalizer, Subgroup, SubgroupError,
};
pub use verify::{
    run_checks, SuiteOptions, SuiteRun, TheoremId, TheoremReport, Verdict, VerifyError,
};

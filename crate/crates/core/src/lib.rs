//! Essential subgroups of small finite groups.
//!
//! Groups are permutation groups whose elements are fully enumerated at
//! construction. On top of that substrate the crate computes normal-subgroup
//! lattices, socles, essential subgroups and `e(G)`, automorphism groups and
//! holomorphs, and constructs essential extensions. The [`harness`] module
//! checks the structural results about essential subgroups on a catalog of
//! small groups.

pub mod abelian;
pub mod actions;
pub mod aut;
pub mod construct;
pub mod error;
pub mod essential;
pub mod group;
pub mod harness;
pub mod hom;
pub mod iso;
pub mod lattice;
pub mod limits;
pub mod named;
pub mod perm;
pub mod spec_lang;
pub mod subgroup;

pub use abelian::{
    abelian_essential_extension, abelian_primary_decomposition, AbelianExtension,
    PrimaryDecomposition, PrimaryFactor,
};
pub use actions::{
    babcho_certify, coset_action, is_malnormal, is_self_normalizing, khma_certify,
    malnormal_certify, ClosureOutcome, GroupAction, StabilizerOutcome,
};
pub use aut::{
    automorphism_group, holomorph, is_complete, sdp, semidirect, AutGroup, Holomorph, Semidirect,
};
pub use construct::{direct_product, quotient, DirectProduct};
pub use error::{GroupError, Result};
pub use essential::{
    e_of, essential_subgroups, essentialize, has_proper_essential, is_essential,
    is_essential_by_definition, kk_conditions, socle, EssentialCertificate, Essentialization,
    KkConditions, Verdict,
};
pub use group::{close, FiniteGroup};
pub use harness::{catalog, run_suite, CaseReport, SuiteOptions, VerificationReport};
pub use hom::{hom_from_generator_images, Homomorphism};
pub use iso::is_isomorphic;
pub use lattice::{
    all_subgroups, conjugacy_classes, maximal_trivial_intersector, minimal_normal_subgroups,
    normal_complement, normal_subgroups, NormalLattice,
};
pub use limits::Limits;
pub use named::{make_named, NamedGroup};
pub use perm::Perm;
pub use spec_lang::{evaluate, parse, render, GroupSpec, SpecError};
pub use subgroup::{center, centralizer, normal_closure, normalizer, subgroup_generated, Subgroup};

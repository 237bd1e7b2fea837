//! Exact computational group theory for autocommuting probabilities.
//!
//! The crate builds finite groups from Cayley tables, enumerates their
//! automorphism groups, computes the generalized autocommuting probability
//! `Pr_g(H, Aut(K))` for subgroup pairs `H <= K` as exact rationals, checks
//! a suite of bounds and characterizations over a small-groups catalog, and
//! searches for autoisoclinisms between subgroup pairs.
//!
//! Start with the runnable examples in `examples/`; each one walks through
//! a major capability. The `autocomm` binary wraps the same library behind
//! a small command-line interface.

pub mod action;
pub mod aut;
pub mod autoiso;
pub mod cli;
pub mod error;
pub mod group;
pub mod iso;
pub mod named;
pub mod prob;
pub mod rational;
pub mod subgroup;
pub mod verifier;

pub use action::{
    absolute_centralizer, aut_centralizer_of_subgroup, autocommutator_set,
    autocommutator_subgroup, conjugacy_class, fixed_points, orbit, orbit_partition, stabilizer,
    t_set,
};
pub use aut::{automorphism_group, inner_automorphism_group, Automorphism, AutomorphismGroup};
pub use autoiso::{find_autoisoclinism, verify_invariance, AutoisoclinismWitness, PairData};
pub use error::{Error, Result};
pub use group::Group;
pub use iso::{classify, enumerate_isomorphisms, find_isomorphism, Isomorphism, StructureDescriptor};
pub use named::{make_named, parse_group_spec};
pub use prob::{
    distribution, pr_autocommuting, pr_g_bruteforce, pr_g_formula, pr_g_inner,
    pr_special_trivial_stabilizers, ProbabilityProfile,
};
pub use rational::Rational;
pub use subgroup::{all_subgroups, center, quotient_group, subgroup_generated, Subgroup};
pub use verifier::{run_catalog, BoundCheck, CatalogSpec, VerificationReport};

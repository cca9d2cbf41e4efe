//! Finite groups, matched pairs of groups and the bismash products built from cocycle tables.

mod bismash;
mod cocycle;
mod examples;
mod group;
mod pair;

pub use bismash::{
    build_group_bismash, encode_as_linked_pair, gamma_from_alpha, group_bismash_antipode, group_bismash_bialgebra,
    group_bismash_star,
};
pub use cocycle::{
    alpha_from_sigma, alpha_verdicts, trivial_alpha_conditions, unimodularity, verify_alpha, verify_sigma_tau,
    GroupCocycleData,
};
pub use examples::{c2, generate_example, ExampleKind};
pub use group::FiniteGroup;
pub use pair::{verify_matched_pair_groups, MatchedPairGroups};

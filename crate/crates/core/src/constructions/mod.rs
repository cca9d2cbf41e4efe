//! Dual, opposite variants, doubles, bicrossproducts, cocycle bismash
//! products, star lifts and twists.

mod common;
mod double;
mod dual;
mod linked_pair;
mod matched_pair;
mod star_lift;
mod twist;

pub use common::{structure_difference, Built};
pub use double::{double_direct, double_pair, drinfeld_double, yetter_drinfeld_module};
pub use dual::{dual, opposite_variants, tensor_product, Variant};
pub use matched_pair::{
    bicrossproduct, check_bicross_star_compat, check_matched_pair_integrals, gram_factorization_residual,
    verify_matched_pair, MatchedPairHopfData,
};
pub use linked_pair::{cocycle_bismash, cocycle_bismash_bialgebra, verify_cocycle_linked_pair, CocycleLinkedPairData};
pub use star_lift::{
    andruskiewitsch_conditions, attach_star_lift, check_integral_centrality, check_star_lift, coaction_star_residual,
    action_star_residual, linked_pair_centrality, star_lift_matrix, verify_singer_conditions, StarLiftData,
    StarLiftMode,
};
pub use twist::{
    bicharacter_cocycle, build_twist, star_cocycle_residual, trivial_cocycle, twist_positivity, twist_product,
    TwistData, TwistPositivity,
};

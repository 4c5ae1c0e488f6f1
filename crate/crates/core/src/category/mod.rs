//! Finite categories with named arrows, functors, natural transformations,
//! Hom functors and the Yoneda correspondence.
//!
//! Arrows are named, so parallel arrows may be distinct even when no
//! composition tells them apart; that situation is reported, never
//! quotiented away. Objects and arrows are indexed by the lexicographic order
//! of their names.

mod bifunctor;
mod cat;
mod functor;
mod hom;
mod nat;

pub use bifunctor::{
    assemble_functor, bifunctor_check, bifunctor_decompose, bifunctor_to_functor,
    functor_slices, functor_to_bifunctor, pair_bifunctors, Bifunctor,
};
pub use cat::{
    arrow_classify, arrow_laws, check_category, discrete, from_group, from_monoid, from_poset,
    inverse, iso_classes, opposite_cat, product_cat, set_arrow_name, set_category, set_token,
    split_product, ArrowClass, CatData, FinCat, SET_CAT_GUARD,
};
pub use functor::{
    all_functors, check_contravariant, check_functor, classify_functor, common_range_product,
    compose_functors, contravariant_from_antitone, find_cat_isomorphism, functor_from_monotone,
    op_universe_check, opposite_functor, pair_functor, unpair_functor, variance_convert, Functor,
    FunctorClass, Variance, FUNCTOR_GUARD,
};
pub use hom::{
    cayley, check_set_functor, compare_representations, dagger, hom_bifunctor, hom_functors,
    hom_set, set_nat_is_natural, set_nats, slice_nat, yoneda, yoneda_embedding,
    yoneda_naturality, HomBifunctor, SetFunctor, SetNat, Yoneda,
};
pub use nat::{
    all_nats, arrow_category, bridge_category, bridge_check, composition_functor,
    functor_category, hcompose, interchange_check, naturality, vcompose, BridgeCategory,
    BridgeCheck, CompositionFunctor, FunctorCategory, NatTrans,
};

#[cfg(test)]
mod tests;

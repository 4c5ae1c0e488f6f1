//! Families of subsets: the power functor, images of families, set
//! identities and nests, generated σ-algebras, filters and ultrafilters.

mod filter;
mod images;
mod sigma;

pub use filter::{
    all_filters, base_axioms, cofinite_filter, filter_ops, filter_transport, filter_transport_check,
    frechet_base, generated, is_filter, is_filter_base, point_filter, refinement,
    refinement_laws, ultrafilter_suite, upsets, elementary_filter, Direction, Filter, FilterBase,
    FilterOps, FILTER_GUARD,
};
pub use images::{
    backward_image, direct_image, direct_inverse_image, family_image_laws, family_images,
    forward_image, image_family, power_functor_check, power_map, preimage_family, FamilyImages,
};
pub use sigma::{
    is_sigma_algebra, nest_check, set_law_suite, sigma_by_intersection, sigma_equivalence_check,
    sigma_generate, sigma_generate_bounded, SigmaAlgebra, SIGMA_GUARD,
};

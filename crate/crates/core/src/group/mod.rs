//! Groups given by Cayley tables.
//!
//! Elements are addressed by their index in the carrier; masks stand for
//! subsets. Checkers return [`LawReport`](crate::report::LawReport)s and
//! constructors return errors when their input is not the claimed structure.

mod action;
mod base;
mod hom;
mod sub;

pub use action::{
    action_check, coordinate_space, coset_action, coset_action_laws, linear_space_check,
    similar_pair, stabilizer_suite, Field, GroupAction,
};
pub use base::{
    catalogue, check_group, cyclic, dihedral, find_isomorphism, group_laws, group_table_laws,
    groups_of_order,
    is_isomorphic, klein, power, power_laws, product, symmetric, FinGroup, CATALOGUE_GUARD,
    ISO_GUARD,
};
pub use hom::{
    all_homs, automorphism_group, automorphisms, conjugation, first_iso, hom_check, hom_laws, hom_report,
    image, inclusion, inner_automorphisms, kernel, reduction, sign, transfer_check,
    transformation_group, FirstIso, GroupHom, InnerAutomorphisms,
};
pub use sub::{
    abelianization_check, all_subgroups, center, commutant, commutator, commutator_laws,
    commutator_symbol, coset, coset_laws, cosets, cyclic_subgroup, generated_subgroup,
    is_normal, normal_subgroups, normality_criteria, normality_laws, quotient, quotient_laws,
    subgroup_check, subgroup_criteria, subgroup_criteria_laws, subgroup_of_mask, Quotient, Side,
    Subgroup, SUBSET_SCAN_GUARD,
};

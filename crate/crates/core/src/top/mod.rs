//! Closure operators, open and closed families, neighborhoods and bases on
//! finite carriers.
//!
//! Two constructions live side by side. [`closure_check`] tests a table
//! against the strict axioms (empty set, union, point fixing, idempotence),
//! which on a finite carrier only the identity satisfies. The closed-family
//! and base constructions drop point fixing and produce every finite
//! topology.

mod closure;
mod space;

pub use closure::{
    closure_check, closure_from_closed, closure_from_closed_check, satisfies_strict_axioms,
    strict_models_brute, strict_models_sampled, strict_models_search, ClosureOp,
    CLOSURE_TABLE_GUARD,
};
pub use space::{
    all_topologies, base_ops, closure_from_base, generated_topology, neighborhood_laws,
    neighborhoods, open_axioms, open_duality, point_base_check, BaseOps, Topology, TOPOLOGY_GUARD,
};

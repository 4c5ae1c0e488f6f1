//! Integers built from a discrete number system, and rationals as pairs of
//! integers with cross-multiplied equality and sign-aware order.

mod int;
mod rat;

pub use int::{build_discrete, int_add, int_group_check, int_mul, int_ring_check, ExactInt, IntWindow};
pub use rat::{
    dual_order_checks, embed_int, rat_add, rat_canon, rat_eq, rat_grid, rat_inv, rat_law_check,
    rat_le, rat_mul, rat_neg, Rat, RatClass,
};

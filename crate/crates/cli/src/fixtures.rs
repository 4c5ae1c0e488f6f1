//! The shipped document corpus and the outcome each document must produce.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// Every law holds: exit 0.
    Pass,
    /// Some law fails: exit 1.
    Fail,
    /// Rejected before any law runs: exit 2.
    Invalid,
}

impl Expect {
    pub fn exit_code(self) -> i32 {
        match self {
            Expect::Pass => 0,
            Expect::Fail => 1,
            Expect::Invalid => 2,
        }
    }
}

pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub expect: Expect,
}

macro_rules! fixture {
    ($name:literal, $expect:ident) => {
        Fixture {
            name: $name,
            text: include_str!(concat!("../fixtures/", $name, ".json")),
            expect: Expect::$expect,
        }
    };
}

pub static FIXTURES: &[Fixture] = &[
    fixture!("action_s3_natural", Pass),
    fixture!("action_unit_moves", Fail),
    fixture!("action_z3_regular", Pass),
    fixture!("base_not_covering", Fail),
    fixture!("base_overlap", Pass),
    fixture!("base_points", Pass),
    fixture!("category_chain2", Pass),
    fixture!("category_defect_klein", Fail),
    fixture!("category_defect_s3", Fail),
    fixture!("category_defect_z2xz3", Fail),
    fixture!("category_defect_z3", Fail),
    fixture!("category_defect_z4", Fail),
    fixture!("category_diamond", Pass),
    fixture!("category_idempotent", Pass),
    fixture!("category_parallel", Pass),
    fixture!("category_s3", Pass),
    fixture!("category_z2", Pass),
    fixture!("closure_identity", Pass),
    fixture!("closure_not_extensive", Fail),
    fixture!("closure_sierpinski", Fail),
    fixture!("error_not_total", Invalid),
    fixture!("error_shape", Invalid),
    fixture!("error_syntax", Invalid),
    fixture!("error_undeclared", Invalid),
    fixture!("error_unknown_kind", Invalid),
    fixture!("family_a_ab", Pass),
    fixture!("family_empty", Pass),
    fixture!("filterbase_a_ab", Pass),
    fixture!("filterbase_not_directed", Fail),
    fixture!("functor_chain2_collapse", Pass),
    fixture!("functor_chain2_swap", Fail),
    fixture!("functor_s3_contravariant", Fail),
    fixture!("functor_z2_contravariant", Pass),
    fixture!("group_klein", Pass),
    fixture!("group_no_unit", Fail),
    fixture!("group_s3", Pass),
    fixture!("group_z3", Pass),
    fixture!("hom_sign_s3", Pass),
    fixture!("hom_z2_z3_not_hom", Fail),
    fixture!("hom_z4_z2", Pass),
    fixture!("map_collapse", Pass),
    fixture!("nattrans_collapse_identity", Pass),
    fixture!("nattrans_s3_noncentral", Fail),
    fixture!("poset_antichain2", Pass),
    fixture!("poset_chain3", Pass),
    fixture!("poset_diamond", Pass),
    fixture!("poset_not_antisymmetric", Fail),
    fixture!("rational_window_4x3", Pass),
    fixture!("semilattice_chain3_join", Pass),
    fixture!("semilattice_left_projection", Fail),
    fixture!("set_abc", Pass),
    fixture!("topology_chain3", Pass),
    fixture!("topology_missing_union", Fail),
    fixture!("topology_sierpinski", Pass),
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

use proptest::prelude::*;

use structa_core::group::symmetric;
use structa_core::numbers::{build_discrete, int_add, int_mul, rat_add, rat_eq, rat_le, rat_mul, ExactInt, Rat};
use structa_core::order::{extend_chain, Poset};
use structa_core::sets::Family;
use structa_core::settools::{is_sigma_algebra, sigma_generate};
use structa_core::{FinMap, FinSet, Mask};

fn map_strategy() -> impl Strategy<Value = FinMap> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(n, m)| {
        prop::collection::vec(0..m, n).prop_map(move |table| {
            FinMap::from_table(FinSet::numbered("x", n), FinSet::numbered("y", m), table).unwrap()
        })
    })
}

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=40).prop_map(|(n, d)| Rat::new(n, d).unwrap())
}

/// A random order on `n` points: a strict upper-triangular relation, closed.
fn poset() -> impl Strategy<Value = Poset> {
    (1usize..=7).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut leq = vec![vec![false; n]; n];
            for i in 0..n {
                for j in 0..n {
                    leq[i][j] = i == j || (i < j && bits[i * n + j]);
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        leq[i][j] |= leq[i][k] && leq[k][j];
                    }
                }
            }
            Poset::from_fn(FinSet::numbered("p", n), |i, j| leq[i][j]).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn image_preserves_unions(f in map_strategy(), a in any::<u64>(), b in any::<u64>()) {
        let full = f.dom().full_mask();
        let (a, b) = (Mask(a).intersection(full), Mask(b).intersection(full));
        prop_assert_eq!(f.image(a.union(b)), f.image(a).union(f.image(b)));
        prop_assert!(f.image(a.intersection(b)).is_subset(f.image(a).intersection(f.image(b))));
        prop_assert!(a.is_subset(f.preimage(f.image(a))));
    }

    #[test]
    fn preimage_is_a_boolean_map(f in map_strategy(), a in any::<u64>(), b in any::<u64>()) {
        let m = f.cod().len();
        let full = f.cod().full_mask();
        let (a, b) = (Mask(a).intersection(full), Mask(b).intersection(full));
        prop_assert_eq!(f.preimage(a.union(b)), f.preimage(a).union(f.preimage(b)));
        prop_assert_eq!(f.preimage(a.intersection(b)), f.preimage(a).intersection(f.preimage(b)));
        prop_assert_eq!(f.preimage(a.complement(m)), f.preimage(a).complement(f.dom().len()));
        prop_assert!(f.image(f.preimage(a)).is_subset(a));
    }

    #[test]
    fn decomposition_recomposes(f in map_strategy()) {
        let d = f.decompose();
        prop_assert_eq!(d.recompose(), f.clone());
        prop_assert_eq!(d.partition.len(), f.range_mask().len());
        prop_assert!(d.quotient.inverse().is_ok());
    }

    #[test]
    fn window_addition_is_integer_addition(a in -50i64..=50, b in -50i64..=50) {
        let w = build_discrete(100).unwrap();
        let s = int_add(&w, &a.into(), &b.into()).unwrap();
        prop_assert_eq!(s.to_i64(), Some(a + b));
    }

    #[test]
    fn products_of_large_integers(a in any::<i64>(), b in -2000i64..=2000) {
        let p = int_mul(&ExactInt::from(a), &ExactInt::from(b));
        prop_assert_eq!(p.to_string(), (i128::from(a) * i128::from(b)).to_string());
    }

    #[test]
    fn rational_order_is_total_and_compatible(p in rat(), q in rat(), r in rat()) {
        prop_assert!(rat_le(&p, &q) || rat_le(&q, &p));
        if rat_le(&p, &q) {
            prop_assert!(rat_le(&rat_add(&p, &r), &rat_add(&q, &r)));
        }
        prop_assert!(rat_eq(&rat_mul(&p, &rat_add(&q, &r)), &rat_add(&rat_mul(&p, &q), &rat_mul(&p, &r))));
    }

    #[test]
    fn scaling_does_not_change_a_rational(n in -40i64..=40, d in 1i64..=40, k in 1i64..=40) {
        prop_assert!(rat_eq(&Rat::new(n, d).unwrap(), &Rat::new(n * k, d * k).unwrap()));
        prop_assert!(rat_eq(&Rat::new(-n, -d).unwrap(), &Rat::new(n, d).unwrap()));
    }

    #[test]
    fn symmetric_group_axioms(a in 0usize..24, b in 0usize..24, c in 0usize..24) {
        let g = symmetric(4).unwrap();
        prop_assert_eq!(g.op(g.op(a, b), c), g.op(a, g.op(b, c)));
        prop_assert_eq!(g.op(a, g.inv(a)), g.unit());
        prop_assert_eq!(g.power(a, 12), g.unit());
        prop_assert_eq!(g.inv(g.op(a, b)), g.op(g.inv(b), g.inv(a)));
    }

    #[test]
    fn extended_chains_are_maximal(p in poset()) {
        let chain = extend_chain(&p, &[]).unwrap();
        let m = chain.mask(&p).unwrap();
        let n = p.len();
        let is_chain = |m: Mask| m.iter().all(|i| m.iter().all(|j| p.comparable(i, j)));
        prop_assert!(is_chain(m));
        prop_assert!((0..n).all(|k| m.contains(k) || !is_chain(m.insert(k))));
        prop_assert!(p.maximal_chains().contains(&m));
    }

    #[test]
    fn generated_sigma_algebra_is_least(members in prop::collection::vec(0u64..16, 0..5), other in prop::collection::vec(0u64..16, 0..8)) {
        let c = FinSet::numbered("x", 4);
        let b = Family::from_masks(c.clone(), members.iter().map(|&m| Mask(m)));
        let s = sigma_generate(&b).unwrap();
        prop_assert!(is_sigma_algebra(s.family()));
        prop_assert!(members.iter().all(|&m| s.family().members().contains(&Mask(m))));
        let bigger = Family::from_masks(c, other.iter().chain(&members).map(|&m| Mask(m)));
        let t = sigma_generate(&bigger).unwrap();
        prop_assert!(s.family().members().iter().all(|m| t.family().members().contains(m)));
    }
}

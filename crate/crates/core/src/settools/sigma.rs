use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{Family, FinSet, Mask};

/// Default carrier bound for σ-algebra generation.
pub const SIGMA_GUARD: usize = 4;
const SIGMA_HARD_LIMIT: usize = 12;

/// Contains the carrier and is closed under complement and union.
pub fn is_sigma_algebra(f: &Family) -> bool {
    let n = f.carrier().len();
    let m = f.members();
    f.contains(Mask::full(n))
        && m.iter().all(|&a| f.contains(a.complement(n)))
        && m.iter().all(|&a| m.iter().all(|&b| f.contains(a.union(b))))
}

/// A family closed under complement and union, containing its carrier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SigmaAlgebra(Family);

impl SigmaAlgebra {
    pub fn new(family: Family) -> Result<Self> {
        let n = family.carrier().len();
        if !family.contains(Mask::full(n)) {
            return Err(Error::NotClosedFamily("the carrier is missing".into()));
        }
        for &a in family.members() {
            if !family.contains(a.complement(n)) {
                return Err(Error::NotClosedFamily(format!(
                    "complement of {}",
                    family.token(a)
                )));
            }
            for &b in family.members() {
                if !family.contains(a.union(b)) {
                    return Err(Error::NotClosedFamily(format!(
                        "{} ∪ {}",
                        family.token(a),
                        family.token(b)
                    )));
                }
            }
        }
        Ok(SigmaAlgebra(family))
    }

    pub fn family(&self) -> &Family {
        &self.0
    }

    pub fn into_family(self) -> Family {
        self.0
    }
}

/// `σ(B)` by closure iteration, for carriers up to [`SIGMA_GUARD`].
pub fn sigma_generate(b: &Family) -> Result<SigmaAlgebra> {
    sigma_generate_bounded(b, SIGMA_GUARD).map(|(s, _)| s)
}

/// `σ(B)` by closure iteration under an explicit carrier bound. Also returns
/// the number of rounds until the fixpoint.
pub fn sigma_generate_bounded(b: &Family, bound: usize) -> Result<(SigmaAlgebra, usize)> {
    let n = b.carrier().len();
    let bound = bound.min(SIGMA_HARD_LIMIT);
    if n > bound {
        return Err(Error::TooLarge {
            what: "carrier for σ-algebra generation",
            size: n,
            bound,
        });
    }
    let mut cur: BTreeSet<Mask> = b.members().iter().copied().collect();
    cur.insert(Mask::full(n));
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut next = cur.clone();
        for &a in &cur {
            next.insert(a.complement(n));
            for &c in &cur {
                next.insert(a.union(c));
            }
        }
        if next == cur {
            break;
        }
        cur = next;
    }
    let fam = b.with_members(cur);
    Ok((SigmaAlgebra::new(fam)?, rounds))
}

/// `⋂Σ(B)` over every σ-algebra on the carrier containing `B`.
pub fn sigma_by_intersection(b: &Family) -> Result<Family> {
    let n = b.carrier().len();
    if n > SIGMA_GUARD {
        return Err(Error::TooLarge {
            what: "carrier for σ-algebra enumeration",
            size: n,
            bound: SIGMA_GUARD,
        });
    }
    let mut common: Option<Vec<Mask>> = None;
    for f in Family::all(b.carrier())? {
        if b.is_subfamily(&f) && is_sigma_algebra(&f) {
            common = Some(match common {
                None => f.members().to_vec(),
                Some(c) => c.into_iter().filter(|&m| f.contains(m)).collect(),
            });
        }
    }
    Ok(b.with_members(common.expect("the power set is a σ-algebra")))
}

/// Closure iteration against the intersection definition.
pub fn sigma_equivalence_check(b: &Family) -> Result<LawReport> {
    let n = b.carrier().len();
    let (s, rounds) = sigma_generate_bounded(b, SIGMA_GUARD)?;
    let mut r = LawReport::new("sigma");
    let w = || b.to_string();
    r.check("settools.sigma.contains_generators", b.is_subfamily(s.family()), w);
    let (again, _) = sigma_generate_bounded(s.family(), SIGMA_GUARD)?;
    r.check("settools.sigma.fixed_point", again == s, w);
    r.check("settools.sigma.terminates", rounds <= 1usize << (1usize << n), w);
    r.check(
        "settools.sigma.intersection",
        &sigma_by_intersection(b)? == s.family(),
        w,
    );
    Ok(r)
}

fn union_of(ms: &[Mask]) -> Mask {
    ms.iter().fold(Mask::EMPTY, |a, &m| a.union(m))
}

fn inter_of(n: usize, ms: &[Mask]) -> Mask {
    ms.iter().fold(Mask::full(n), |a, &m| a.intersection(m))
}

/// Difference, distribution, DeMorgan and decomposition identities for
/// `A, B, C ⊆ carrier` and a family `X` on the carrier.
pub fn set_law_suite(
    carrier: &FinSet,
    a: &FinSet,
    b: &FinSet,
    c: &FinSet,
    x: &Family,
) -> Result<LawReport> {
    if x.carrier() != carrier {
        return Err(Error::CarrierMismatch(x.carrier().to_string()));
    }
    let n = carrier.len();
    let (a, b, c) = (carrier.mask_of(a)?, carrier.mask_of(b)?, carrier.mask_of(c)?);
    let xs = x.members();
    let mut r = LawReport::new("set-laws");
    let w = || {
        format!(
            "A={} B={} C={}",
            carrier.subset_token(a),
            carrier.subset_token(b),
            carrier.subset_token(c)
        )
    };
    let wx = || format!("A={} X={x}", carrier.subset_token(a));
    let comp = |m: Mask| m.complement(n);

    r.check(
        "settools.sets.difference_union",
        a.difference(b).difference(c) == a.difference(b.union(c)),
        w,
    );
    r.check(
        "settools.sets.difference_complement",
        a.difference(b) == a.intersection(comp(b)),
        w,
    );
    r.check(
        "settools.sets.distribute_intersection",
        a.intersection(b.union(c)) == a.intersection(b).union(a.intersection(c)),
        w,
    );
    r.check(
        "settools.sets.distribute_union",
        a.union(b.intersection(c)) == a.union(b).intersection(a.union(c)),
        w,
    );
    r.check(
        "settools.sets.decomposition",
        a == a.intersection(b).union(a.difference(b))
            && !a.intersection(b).meets(a.difference(b)),
        w,
    );
    r.check(
        "settools.sets.union_decomposition",
        a.union(b) == a.union(b.difference(a)) && !a.meets(b.difference(a)),
        w,
    );
    let meet_each: Vec<Mask> = xs.iter().map(|&m| a.intersection(m)).collect();
    let join_each: Vec<Mask> = xs.iter().map(|&m| a.union(m)).collect();
    r.check(
        "settools.sets.distribute_family",
        a.intersection(union_of(xs)) == union_of(&meet_each)
            && a.union(inter_of(n, xs)) == inter_of(n, &join_each),
        wx,
    );
    let comps: Vec<Mask> = xs.iter().map(|&m| comp(m)).collect();
    r.check(
        "settools.sets.demorgan",
        comp(union_of(xs)) == inter_of(n, &comps) && comp(inter_of(n, xs)) == union_of(&comps),
        wx,
    );
    Ok(r)
}

/// Identities for a finite nest `A₁ ⊆ … ⊆ Aₙ` or `A₁ ⊇ … ⊇ Aₙ`.
pub fn nest_check(carrier: &FinSet, nest: &[FinSet]) -> Result<LawReport> {
    let ms = nest
        .iter()
        .map(|s| carrier.mask_of(s))
        .collect::<Result<Vec<_>>>()?;
    let increasing = ms.windows(2).all(|p| p[0].is_subset(p[1]));
    let decreasing = ms.windows(2).all(|p| p[1].is_subset(p[0]));
    if ms.is_empty() || !(increasing || decreasing) {
        return Err(Error::Invalid("not a nest".into()));
    }
    let mut r = LawReport::new("nest");
    let w = || {
        ms.iter()
            .map(|&m| carrier.subset_token(m).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let disjoint = |parts: &[Mask]| {
        parts
            .iter()
            .enumerate()
            .all(|(i, &p)| parts[i + 1..].iter().all(|&q| !p.meets(q)))
    };
    if increasing {
        let parts: Vec<Mask> = (0..ms.len())
            .map(|i| if i == 0 { ms[0] } else { ms[i].difference(ms[i - 1]) })
            .collect();
        r.check(
            "settools.nest.increasing_union",
            union_of(&ms) == union_of(&parts) && disjoint(&parts),
            w,
        );
        for k in 0..ms.len() {
            r.check("settools.nest.increasing_prefix", ms[k] == union_of(&parts[..=k]), w);
        }
    }
    if decreasing {
        let last = *ms.last().expect("nonempty");
        let mut parts: Vec<Mask> = ms.windows(2).map(|p| p[0].difference(p[1])).collect();
        parts.push(last);
        r.check(
            "settools.nest.decreasing_first",
            ms[0] == union_of(&parts) && disjoint(&parts),
            w,
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> FinSet {
        FinSet::of(&["a", "b", "c"])
    }

    #[test]
    fn empty_generator_gives_trivial_algebra() {
        let s = abc();
        let sig = sigma_generate(&Family::empty(s.clone())).unwrap();
        assert_eq!(sig.family(), &Family::from_masks(s.clone(), [Mask::EMPTY, s.full_mask()]));
    }

    #[test]
    fn single_point_generator() {
        let s = abc();
        let sig = sigma_generate(&Family::of(&s, &[&["a"]])).unwrap();
        let expected = Family::of(&s, &[&[], &["a"], &["b", "c"], &["a", "b", "c"]]);
        assert_eq!(sig.family(), &expected);
    }

    #[test]
    fn closure_matches_intersection_on_three_points() {
        let s = abc();
        for b in Family::all(&s).unwrap() {
            sigma_equivalence_check(&b).unwrap().assert_passed();
        }
    }

    #[test]
    fn guard_applies() {
        let s = FinSet::numbered("x", 5);
        assert!(matches!(
            sigma_generate(&Family::empty(s.clone())),
            Err(Error::TooLarge { .. })
        ));
        let (big, _) = sigma_generate_bounded(&Family::empty(s), 8).unwrap();
        assert_eq!(big.family().len(), 2);
    }

    #[test]
    fn non_closed_family_rejected() {
        let s = abc();
        let f = Family::of(&s, &[&["a"], &["a", "b", "c"]]);
        assert!(matches!(SigmaAlgebra::new(f), Err(Error::NotClosedFamily(_))));
    }

    #[test]
    fn equal_sets() {
        let s = abc();
        let a = FinSet::of(&["a", "b"]);
        let r = set_law_suite(&s, &a, &a, &FinSet::empty(), &Family::empty(s.clone())).unwrap();
        r.assert_passed();
        let m = s.mask_of(&a).unwrap();
        assert!(m.difference(m).is_empty());
        assert_eq!(m.intersection(m), m);
    }

    #[test]
    fn decreasing_nest_of_four() {
        let s = FinSet::of(&["a", "b", "c", "d", "e"]);
        let nest = [
            FinSet::of(&["a", "b", "c", "d"]),
            FinSet::of(&["a", "b", "c"]),
            FinSet::of(&["a", "b"]),
            FinSet::of(&["a"]),
        ];
        let r = nest_check(&s, &nest).unwrap();
        r.assert_passed();
        assert!(r.get("settools.nest.decreasing_first").is_some());
    }

    #[test]
    fn non_nest_rejected() {
        let s = abc();
        let bad = [FinSet::of(&["a"]), FinSet::of(&["b"])];
        assert!(nest_check(&s, &bad).is_err());
    }
}

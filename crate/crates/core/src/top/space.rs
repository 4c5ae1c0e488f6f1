use std::collections::BTreeSet;
use std::fmt;

use super::closure::{closure_from_closed, ClosureOp};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{Family, FinSet, Mask, Symbol};

/// Largest carrier for exhaustive topology enumeration.
pub const TOPOLOGY_GUARD: usize = 4;

/// A family of open sets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Topology(Family);

impl Topology {
    pub fn new(open: Family) -> Result<Self> {
        let n = open.carrier().len();
        let tok = |a: Mask| open.token(a).to_string();
        if !open.contains(Mask::EMPTY) {
            return Err(Error::NotATopology("the empty set is not open".into()));
        }
        if !open.contains(Mask::full(n)) {
            return Err(Error::NotATopology("the carrier is not open".into()));
        }
        for &a in open.members() {
            for &b in open.members() {
                if !open.contains(a.union(b)) {
                    return Err(Error::NotATopology(format!("{} ∪ {}", tok(a), tok(b))));
                }
                if !open.contains(a.intersection(b)) {
                    return Err(Error::NotATopology(format!("{} ∩ {}", tok(a), tok(b))));
                }
            }
        }
        Ok(Topology(open))
    }

    pub fn discrete(carrier: &FinSet) -> Self {
        Topology(Family::power(carrier.clone()))
    }

    pub fn indiscrete(carrier: &FinSet) -> Self {
        Topology(Family::from_masks(
            carrier.clone(),
            [Mask::EMPTY, carrier.full_mask()],
        ))
    }

    pub fn carrier(&self) -> &FinSet {
        self.0.carrier()
    }

    pub fn open_sets(&self) -> &Family {
        &self.0
    }

    pub fn is_open(&self, a: Mask) -> bool {
        self.0.contains(a)
    }

    pub fn closed_sets(&self) -> Family {
        open_duality(self)
    }

    pub fn closure(&self) -> ClosureOp {
        closure_from_closed(&self.closed_sets()).expect("closed sets of a topology")
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The open-set axioms on an arbitrary family.
pub fn open_axioms(open: &Family) -> LawReport {
    let n = open.carrier().len();
    let tok = |a: Mask| open.token(a).to_string();
    let mut r = LawReport::new("open-sets");
    r.check("top.open.bounds", open.contains(Mask::EMPTY), || "∅".to_string());
    r.check("top.open.bounds", open.contains(Mask::full(n)), || tok(Mask::full(n)));
    for &a in open.members() {
        for &b in open.members() {
            r.check("top.open.union", open.contains(a.union(b)), || {
                format!("{} ∪ {}", tok(a), tok(b))
            });
            r.check("top.open.intersection", open.contains(a.intersection(b)), || {
                format!("{} ∩ {}", tok(a), tok(b))
            });
        }
    }
    r
}

/// Every topology on the carrier, by filtering all families.
pub fn all_topologies(carrier: &FinSet) -> Result<Vec<Topology>> {
    let n = carrier.len();
    if n > TOPOLOGY_GUARD {
        return Err(Error::TooLarge {
            what: "carrier for topology enumeration",
            size: n,
            bound: TOPOLOGY_GUARD,
        });
    }
    Ok(Family::all(carrier)?
        .filter_map(|f| Topology::new(f).ok())
        .collect())
}

/// The closed sets: complements of the open sets.
pub fn open_duality(t: &Topology) -> Family {
    let n = t.carrier().len();
    t.0.with_members(t.0.members().iter().map(|m| m.complement(n)))
}

/// `N` is a neighborhood of `x` when some open `V` has `x ∈ V ⊆ N`.
pub fn neighborhoods(t: &Topology, x: &Symbol) -> Result<Family> {
    let i = t.carrier().require(x)?;
    Ok(nbhds(t, i))
}

fn nbhds(t: &Topology, i: usize) -> Family {
    let n = t.carrier().len();
    let around: Vec<Mask> = t.0.members().iter().copied().filter(|v| v.contains(i)).collect();
    t.0.with_members(Mask::all(n).filter(|&a| around.iter().any(|v| v.is_subset(a))))
}

/// `Bx ⊆ O` and every neighborhood of `x` contains some `U ∈ Bx` with `x ∈ U`.
pub fn point_base_check(t: &Topology, x: &Symbol, bx: &Family) -> Result<bool> {
    let i = t.carrier().require(x)?;
    if bx.carrier() != t.carrier() {
        return Err(Error::CarrierMismatch(bx.carrier().to_string()));
    }
    Ok(is_point_base(t, i, bx))
}

fn is_point_base(t: &Topology, i: usize, bx: &Family) -> bool {
    bx.is_subfamily(&t.0)
        && nbhds(t, i).members().iter().all(|&nb| {
            bx.members()
                .iter()
                .any(|&u| u.contains(i) && u.is_subset(nb))
        })
}

/// Definition of a base: every nonempty open is the union of the members of
/// `B` it contains.
fn is_base_by_definition(t: &Topology, b: &Family) -> bool {
    b.is_subfamily(&t.0)
        && t.0.members().iter().all(|&v| {
            v.is_empty()
                || b.members()
                    .iter()
                    .filter(|u| u.is_subset(v))
                    .fold(Mask::EMPTY, |acc, &u| acc.union(u))
                    == v
        })
}

/// The criterion form: `x ∈ V ∈ O` gives `U ∈ B` with `x ∈ U ⊆ V`.
fn is_base_by_criterion(t: &Topology, b: &Family) -> bool {
    b.is_subfamily(&t.0)
        && t.0.members().iter().all(|&v| {
            v.iter().all(|x| {
                b.members()
                    .iter()
                    .any(|&u| u.contains(x) && u.is_subset(v))
            })
        })
}

/// Duality, neighborhood and base laws for a topology.
pub fn neighborhood_laws(t: &Topology) -> LawReport {
    let n = t.carrier().len();
    let c = t.carrier();
    let closed = t.closed_sets();
    let mut r = LawReport::new("neighborhoods");
    for a in Mask::all(n) {
        let w = || c.subset_token(a).to_string();
        r.check(
            "top.open.complement_closed",
            t.is_open(a) == closed.contains(a.complement(n)),
            w,
        );
        let nbhd_of_each = a.iter().all(|i| nbhds(t, i).contains(a));
        r.check("top.nbhd.open_iff_nbhd", t.is_open(a) == nbhd_of_each, w);
    }
    for &u in t.0.members() {
        for &v in t.0.members() {
            let w = || format!("{} {}", c.subset_token(u), c.subset_token(v));
            r.check("top.open.union", t.is_open(u.union(v)), w);
            r.check("top.open.intersection", t.is_open(u.intersection(v)), w);
        }
    }
    for i in 0..n {
        let w = || c.get(i).to_string();
        r.check("top.nbhd.base_is_point_base", is_point_base(t, i, &t.0), w);
        let base_nbhds = t.0.with_members(t.0.members().iter().copied().filter(|u| u.contains(i)));
        r.check("top.nbhd.base_nbhds_point_base", is_point_base(t, i, &base_nbhds), w);
    }
    r
}

/// `x ∈ Ā` iff every member of `B` containing `x` meets `A`.
pub fn closure_from_base(b: &Family) -> Result<ClosureOp> {
    let members = b.members().to_vec();
    ClosureOp::from_fn(b.carrier().clone(), |a| {
        (0..b.carrier().len())
            .filter(|&x| members.iter().all(|u| !u.contains(x) || u.meets(a)))
            .fold(Mask::EMPTY, |acc, x| acc.insert(x))
    })
}

/// The smallest topology containing `B`: finite intersections of members,
/// then all unions, plus `∅` and the carrier.
pub fn generated_topology(b: &Family) -> Topology {
    let n = b.carrier().len();
    let mut inter: BTreeSet<Mask> = b.members().iter().copied().collect();
    inter.insert(Mask::full(n));
    loop {
        let next: BTreeSet<Mask> = inter
            .iter()
            .flat_map(|&x| inter.iter().map(move |&y| x.intersection(y)))
            .chain(inter.iter().copied())
            .collect();
        if next == inter {
            break;
        }
        inter = next;
    }
    let mut opens: BTreeSet<Mask> = [Mask::EMPTY].into_iter().collect();
    for m in &inter {
        let add: Vec<Mask> = opens.iter().map(|o| o.union(*m)).collect();
        opens.extend(add);
    }
    Topology(b.with_members(opens))
}

#[derive(Clone, Debug)]
pub struct BaseOps {
    pub topology: Topology,
    /// Whether `B` is a base of the generated topology.
    pub is_base: bool,
    pub criterion: LawReport,
    pub closure: ClosureOp,
}

/// Topology, base criterion and closure for a covering family `B`.
pub fn base_ops(b: &Family) -> Result<BaseOps> {
    let c = b.carrier();
    let cover = b.union_all();
    if let Some(i) = (0..c.len()).find(|&i| !cover.contains(i)) {
        return Err(Error::NotCovering(c.get(i).to_string()));
    }
    let topology = generated_topology(b);
    let closure = closure_from_base(b)?;
    let by_def = is_base_by_definition(&topology, b);
    let by_crit = is_base_by_criterion(&topology, b);
    let mut r = LawReport::new("base");
    let w = || b.to_string();
    r.check("top.base.criterion", by_def == by_crit, w);
    r.check("top.base.open_sets", Topology::new(topology.0.clone()).is_ok(), w);
    if by_def {
        let from_closed = topology.closure();
        for a in Mask::all(c.len()) {
            r.check(
                "top.base.closure_equivalence",
                closure.apply(a) == from_closed.apply(a),
                || c.subset_token(a).to_string(),
            );
        }
        for i in 0..c.len() {
            r.check("top.nbhd.base_is_point_base", is_point_base(&topology, i, b), || {
                c.get(i).to_string()
            });
        }
    } else {
        r.note(format!("{b} is not a base of the topology it generates"));
    }
    Ok(BaseOps {
        topology,
        is_base: by_def,
        criterion: r,
        closure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> FinSet {
        FinSet::of(&["a", "b", "c"])
    }

    fn sym(s: &str) -> Symbol {
        Symbol::new(s).unwrap()
    }

    #[test]
    fn topology_counts() {
        let counts: Vec<usize> = (0..=3)
            .map(|n| all_topologies(&FinSet::numbered("x", n)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 29]);
    }

    #[test]
    fn discrete_neighborhoods() {
        let s = abc();
        let t = Topology::discrete(&s);
        let nb = neighborhoods(&t, &sym("a")).unwrap();
        assert_eq!(nb.len(), 4);
        assert!(nb.members().iter().all(|m| m.contains(0)));
        neighborhood_laws(&t).assert_passed();
    }

    #[test]
    fn sierpinski_neighborhoods() {
        let s = FinSet::of(&["a", "b"]);
        let t = Topology::new(Family::of(&s, &[&[], &["b"], &["a", "b"]])).unwrap();
        assert_eq!(neighborhoods(&t, &sym("a")).unwrap().members(), &[s.full_mask()]);
        assert_eq!(neighborhoods(&t, &sym("b")).unwrap().len(), 2);
        neighborhood_laws(&t).assert_passed();
    }

    #[test]
    fn indiscrete_neighborhoods() {
        let s = abc();
        let t = Topology::indiscrete(&s);
        for x in s.iter() {
            assert_eq!(neighborhoods(&t, x).unwrap().members(), &[s.full_mask()]);
        }
    }

    #[test]
    fn singleton_base_is_discrete() {
        let s = abc();
        let b = Family::of(&s, &[&["a"], &["b"], &["c"]]);
        let ops = base_ops(&b).unwrap();
        assert_eq!(ops.topology, Topology::discrete(&s));
        assert_eq!(ops.closure, ClosureOp::identity(&s).unwrap());
        ops.criterion.assert_passed();
    }

    #[test]
    fn overlapping_pair() {
        let s = abc();
        let b = Family::of(&s, &[&["a", "b"], &["b", "c"]]);
        let ops = base_ops(&b).unwrap();
        let expected = Family::of(&s, &[&[], &["b"], &["a", "b"], &["b", "c"], &["a", "b", "c"]]);
        assert_eq!(ops.topology.open_sets(), &expected);
        assert_eq!(ops.closure.apply(Mask::singleton(0)), Mask::singleton(0));
        assert!(!ops.is_base);
        ops.criterion.assert_passed();
    }

    #[test]
    fn every_topology_is_its_own_base() {
        for t in all_topologies(&abc()).unwrap() {
            let ops = base_ops(t.open_sets()).unwrap();
            assert!(ops.is_base);
            assert_eq!(ops.topology, t);
            ops.criterion.assert_passed();
        }
    }

    #[test]
    fn uncovered_point() {
        let s = abc();
        let b = Family::of(&s, &[&["a", "b"]]);
        assert_eq!(base_ops(&b).unwrap_err(), Error::NotCovering("c".into()));
    }

    #[test]
    fn point_base() {
        let s = abc();
        let t = Topology::discrete(&s);
        let bx = Family::of(&s, &[&["a"]]);
        assert!(point_base_check(&t, &sym("a"), &bx).unwrap());
        assert!(!point_base_check(&t, &sym("b"), &bx).unwrap());
    }
}

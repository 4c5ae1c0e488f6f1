use std::collections::BTreeSet;

use super::bounds::directed_pairwise;
use super::Poset;
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{FinMap, FinSet, Mask, Symbol};

/// Monotone self-map enumeration stops after this many maps.
pub const MONOTONE_CAP: usize = 200_000;

/// Directed subsets are enumerated up to this carrier size.
const DIRECTED_SCAN: usize = 16;

/// Chains are enumerated up to this many.
const CHAIN_CAP: usize = 1 << 16;

/// The completeness predicates of a finite poset.
///
/// Bounded completeness quantifies over nonempty subsets. Natural
/// completeness includes the empty chain, whose supremum is the minimum.
/// IS-completeness ranges over the nonempty chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completeness {
    pub directed_complete: bool,
    pub complete_partial_order: bool,
    pub naturally_complete: bool,
    pub is_complete: bool,
    pub upper_bound_complete: bool,
    pub lower_bound_complete: bool,
    pub bounded_complete: bool,
    pub complete_lattice: bool,
    pub report: LawReport,
}

/// Distinct sets `U(A)` for nonempty `A`, where `U(A)` is the intersection
/// of the principal sets `U({a})`. Closing the principal sets under
/// intersection reaches every such set without visiting subsets.
fn intersection_closure(principal: &[Mask]) -> BTreeSet<Mask> {
    let mut seen: BTreeSet<Mask> = principal.iter().copied().collect();
    let mut frontier: Vec<Mask> = seen.iter().copied().collect();
    while let Some(s) = frontier.pop() {
        for &p in principal {
            let t = s.intersection(p);
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    seen
}

fn upper_sets(p: &Poset) -> BTreeSet<Mask> {
    let principal: Vec<Mask> = (0..p.len())
        .map(|i| p.upper_bounds(Mask::singleton(i)))
        .collect();
    intersection_closure(&principal)
}

fn lower_sets(p: &Poset) -> BTreeSet<Mask> {
    let principal: Vec<Mask> = (0..p.len())
        .map(|i| p.lower_bounds(Mask::singleton(i)))
        .collect();
    intersection_closure(&principal)
}

/// Every nonempty directed subset has a supremum. Directed subsets are
/// enumerated on small carriers; above that a finite directed set always
/// contains an upper bound of itself, which is then its supremum.
fn directed_complete(p: &Poset, notes: &mut Vec<String>) -> bool {
    if p.len() > DIRECTED_SCAN {
        notes.push(format!(
            "directed subsets not enumerated on {} elements; each finite directed set holds its own maximum",
            p.len()
        ));
        return true;
    }
    Mask::all(p.len())
        .filter(|d| !d.is_empty() && directed_pairwise(p, *d))
        .all(|d| p.sup(d).is_some())
}

fn chains_capped(p: &Poset) -> Option<Vec<Mask>> {
    fn grow(p: &Poset, cur: Mask, from: usize, out: &mut Vec<Mask>) -> bool {
        if out.len() >= CHAIN_CAP {
            return false;
        }
        out.push(cur);
        for k in from..p.len() {
            if cur.iter().all(|x| p.comparable(x, k)) && !grow(p, cur.insert(k), k + 1, out) {
                return false;
            }
        }
        true
    }
    let mut out = Vec::new();
    grow(p, Mask::EMPTY, 0, &mut out).then_some(out)
}

/// All order-preserving maps `P → P`, or `TooLarge` past `cap`.
pub fn monotone_self_maps(p: &Poset, cap: usize) -> Result<Vec<FinMap>> {
    fn go(p: &Poset, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, cap: usize) -> bool {
        let k = table.len();
        if k == p.len() {
            out.push(table.clone());
            return out.len() <= cap;
        }
        for v in 0..p.len() {
            let ok = (0..k).all(|i| {
                (!p.leq(i, k) || p.leq(table[i], v)) && (!p.leq(k, i) || p.leq(v, table[i]))
            });
            if ok {
                table.push(v);
                let more = go(p, table, out, cap);
                table.pop();
                if !more {
                    return false;
                }
            }
        }
        true
    }
    let mut out = Vec::new();
    if !go(p, &mut Vec::new(), &mut out, cap) {
        return Err(Error::TooLarge {
            what: "monotone self-maps",
            size: out.len(),
            bound: cap,
        });
    }
    out.into_iter()
        .map(|t| FinMap::from_table(p.carrier().clone(), p.carrier().clone(), t))
        .collect()
}

pub fn completeness_report(p: &Poset) -> Completeness {
    let mut report = LawReport::new("completeness");
    let mut notes = Vec::new();
    let full = p.full();

    let directed = directed_complete(p, &mut notes);
    let has_min = p.min().is_some();
    let has_max = p.max().is_some();
    let cpo = directed && has_min;

    let uppers = upper_sets(p);
    let lowers = lower_sets(p);
    let upper_bc = uppers.iter().all(|&u| u.is_empty() || p.least(u).is_some());
    let lower_bc = lowers.iter().all(|&l| l.is_empty() || p.greatest(l).is_some());
    let complete_lattice = has_min
        && has_max
        && uppers.iter().all(|&u| p.least(u).is_some())
        && lowers.iter().all(|&l| p.greatest(l).is_some());

    let (naturally, is_complete) = match chains_capped(p) {
        Some(chains) => (
            chains.iter().all(|&c| p.sup(c).is_some()),
            chains.iter().filter(|c| !c.is_empty()).all(|&c| p.sup(c).is_some()),
        ),
        None => {
            notes.push("chains not enumerated; finite nonempty chains hold their maximum".into());
            (has_min, true)
        }
    };

    report.check("order.complete.finite_directed", directed, || {
        "a directed subset lacks a supremum".to_string()
    });
    report.check("order.complete.bounded_duality", upper_bc == lower_bc, || {
        format!("upper bound complete = {upper_bc}, lower bound complete = {lower_bc}")
    });
    report.check("order.complete.natural_implies_is", !naturally || is_complete, || {
        "naturally complete but not IS-complete".to_string()
    });
    // inf A, when it exists, is the supremum of the lower bounds of A. The
    // lower-bound sets of nonempty subsets are `lowers`; the empty subset
    // contributes the whole carrier.
    for &l in lowers.iter().chain(std::iter::once(&full)) {
        if let Some(m) = p.greatest(l) {
            report.check("order.complete.inf_is_sup_of_lower", p.sup(l) == Some(m), || {
                p.subset_string(l)
            });
        }
    }
    if complete_lattice {
        let op_directed = directed_complete(&p.opposite(), &mut Vec::new());
        report.check("order.complete.lattice_directed", directed && op_directed, || {
            "complete lattice with a non directed complete side".to_string()
        });
    }
    match monotone_self_maps(p, MONOTONE_CAP) {
        Ok(maps) => {
            let all_least = maps.iter().all(|f| {
                let fixed = (0..p.len())
                    .filter(|&i| f.at(i) == i)
                    .fold(Mask::EMPTY, Mask::insert);
                p.least(fixed).is_some()
            });
            report.check("order.complete.natural_fixpoint", all_least == naturally, || {
                format!("naturally complete = {naturally}, least fixed points = {all_least}")
            });
        }
        Err(_) => notes.push(format!(
            "more than {MONOTONE_CAP} monotone self-maps; fixed-point criterion skipped"
        )),
    }
    for n in notes {
        report.note(n);
    }
    Completeness {
        directed_complete: directed,
        complete_partial_order: cpo,
        naturally_complete: naturally,
        is_complete,
        upper_bound_complete: upper_bc,
        lower_bound_complete: lower_bc,
        bounded_complete: upper_bc || lower_bc,
        complete_lattice,
        report,
    }
}

/// Partial maps `L ⇀ L` ordered by restriction: `f ≤ g` when `g` extends `f`.
/// Elements are named like `{}` or `{a:b,b:a}`.
pub fn partial_map_poset(l: &FinSet) -> Result<Poset> {
    if l.len() > 3 {
        return Err(Error::TooLarge {
            what: "partial map carrier",
            size: l.len(),
            bound: 3,
        });
    }
    let n = l.len();
    let mut maps: Vec<Vec<Option<usize>>> = vec![Vec::new()];
    for _ in 0..n {
        maps = maps
            .into_iter()
            .flat_map(|m| {
                (0..=n).map(move |v| {
                    let mut m = m.clone();
                    m.push(v.checked_sub(1));
                    m
                })
            })
            .collect();
    }
    let name = |m: &[Option<usize>]| {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|v| format!("{}:{}", l.get(i), l.get(v))))
            .collect();
        Symbol::new(format!("{{{}}}", parts.join(","))).expect("token")
    };
    let carrier = FinSet::collect(maps.iter().map(|m| name(m)));
    let at: Vec<&Vec<Option<usize>>> = carrier
        .iter()
        .map(|s| maps.iter().find(|m| name(m) == *s).expect("named map"))
        .collect();
    Poset::from_fn(carrier, |i, j| {
        at[i].iter().zip(at[j]).all(|(a, b)| a.is_none() || a == b)
    })
}

/// Order-preserving maps `P → Q` under the pointwise order.
pub fn functor_order(maps: &[FinMap], p: &Poset, q: &Poset) -> Result<Poset> {
    for f in maps {
        if f.dom() != p.carrier() || f.cod() != q.carrier() {
            return Err(Error::Mismatch(format!("{f} is not a map between the given orders")));
        }
        for (i, j) in p.pairs() {
            if !q.leq(f.at(i), f.at(j)) {
                return Err(Error::NotMonotone(format!(
                    "{f}: {} <= {} but not {} <= {}",
                    p.carrier().get(i),
                    p.carrier().get(j),
                    q.carrier().get(f.at(i)),
                    q.carrier().get(f.at(j))
                )));
            }
        }
    }
    let named = |f: &FinMap| Symbol::new(f.to_string()).expect("map token");
    let carrier = FinSet::collect(maps.iter().map(named));
    let at: Vec<&FinMap> = carrier
        .iter()
        .map(|s| maps.iter().find(|f| named(f) == *s).expect("named map"))
        .collect();
    Poset::from_fn(carrier, |a, b| {
        (0..p.len()).all(|x| q.leq(at[a].at(x), at[b].at(x)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_is_complete_lattice() {
        let p = Poset::powerset(&FinSet::of(&["a", "b"])).unwrap();
        let c = completeness_report(&p);
        assert!(c.complete_lattice && c.bounded_complete && c.complete_partial_order);
        c.report.assert_passed();
    }

    #[test]
    fn antichain_is_directed_complete_only() {
        let c = completeness_report(&Poset::antichain(2));
        assert!(c.directed_complete);
        assert!(!c.complete_lattice);
        assert!(!c.naturally_complete);
        assert!(c.is_complete);
        c.report.assert_passed();
    }

    #[test]
    fn chain_has_every_flag() {
        let c = completeness_report(&Poset::chain(3));
        assert!(
            c.directed_complete
                && c.complete_partial_order
                && c.naturally_complete
                && c.is_complete
                && c.bounded_complete
                && c.complete_lattice
        );
        c.report.assert_passed();
    }

    #[test]
    fn partial_maps_counts_and_min() {
        let one = partial_map_poset(&FinSet::of(&["a"])).unwrap();
        assert_eq!(one.len(), 2);
        let two = partial_map_poset(&FinSet::of(&["a", "b"])).unwrap();
        assert_eq!(two.len(), 9);
        assert_eq!(two.carrier().get(two.min().unwrap()).as_str(), "{}");
        let c = completeness_report(&two);
        assert!(c.complete_partial_order && c.bounded_complete);
        assert!(!c.complete_lattice);
        c.report.assert_passed();
    }

    #[test]
    fn sup_of_compatible_maps_is_merge() {
        let p = partial_map_poset(&FinSet::of(&["a", "b"])).unwrap();
        let m = ["{}", "{a:b}", "{b:b}"]
            .iter()
            .map(|s| p.index(s).unwrap())
            .fold(Mask::EMPTY, Mask::insert);
        assert_eq!(p.carrier().get(p.sup(m).unwrap()).as_str(), "{a:b,b:b}");
    }

    #[test]
    fn pointwise_order_on_chain_maps() {
        let c = Poset::chain(3);
        let s = c.carrier();
        let bot = FinMap::constant(s, s, &Symbol::new("0").unwrap()).unwrap();
        let top = FinMap::constant(s, s, &Symbol::new("2").unwrap()).unwrap();
        let id = FinMap::identity(s);
        let o = functor_order(&[top.clone(), id.clone(), bot.clone()], &c, &c).unwrap();
        let ix = |f: &FinMap| o.index(&f.to_string()).unwrap();
        assert!(o.leq(ix(&bot), ix(&id)) && o.leq(ix(&id), ix(&top)));
        let single = functor_order(std::slice::from_ref(&id), &c, &c).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn crossing_maps_are_incomparable() {
        let c = Poset::chain(2);
        let s = c.carrier().clone();
        let d = Poset::antichain(2);
        let f = FinMap::from_table(s.clone(), d.carrier().clone(), vec![0, 0]).unwrap();
        let g = FinMap::from_table(s, d.carrier().clone(), vec![1, 1]).unwrap();
        let o = functor_order(&[f, g], &c, &d).unwrap();
        assert!(!o.comparable(0, 1));
    }

    #[test]
    fn non_monotone_input_rejected() {
        let c = Poset::chain(2);
        let s = c.carrier().clone();
        let swap = FinMap::from_table(s.clone(), s, vec![1, 0]).unwrap();
        assert!(matches!(
            functor_order(&[swap], &c, &c),
            Err(Error::NotMonotone(_))
        ));
    }

    #[test]
    fn monotone_maps_on_chain_two() {
        // Monotone self-maps of an n-chain: C(2n-1, n).
        assert_eq!(monotone_self_maps(&Poset::chain(2), 100).unwrap().len(), 3);
        assert_eq!(monotone_self_maps(&Poset::chain(3), 100).unwrap().len(), 10);
        assert!(monotone_self_maps(&Poset::chain(3), 5).is_err());
    }
}

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{Family, FinSet, Mask};

/// Largest carrier for which a full subset table is kept.
pub const CLOSURE_TABLE_GUARD: usize = 12;

/// A subset-to-subset table on a carrier, indexed by subset mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClosureOp {
    carrier: FinSet,
    table: Vec<Mask>,
}

impl ClosureOp {
    pub fn new(carrier: FinSet, table: Vec<Mask>) -> Result<Self> {
        let n = carrier.len();
        if n > CLOSURE_TABLE_GUARD {
            return Err(Error::TooLarge {
                what: "carrier for a closure table",
                size: n,
                bound: CLOSURE_TABLE_GUARD,
            });
        }
        if table.len() != 1 << n {
            return Err(Error::NotClosureTable(format!(
                "{} entries for {} subsets",
                table.len(),
                1usize << n
            )));
        }
        let full = carrier.full_mask();
        if let Some(i) = table.iter().position(|m| !m.is_subset(full)) {
            return Err(Error::NotClosureTable(format!(
                "entry for {} leaves the carrier",
                carrier.subset_token(Mask(i as u64))
            )));
        }
        Ok(ClosureOp { carrier, table })
    }

    pub fn from_fn(carrier: FinSet, f: impl Fn(Mask) -> Mask) -> Result<Self> {
        let n = carrier.len();
        if n > CLOSURE_TABLE_GUARD {
            return Err(Error::TooLarge {
                what: "carrier for a closure table",
                size: n,
                bound: CLOSURE_TABLE_GUARD,
            });
        }
        let table = Mask::all(n).map(f).collect();
        ClosureOp::new(carrier, table)
    }

    /// The discrete system: every subset is closed.
    pub fn identity(carrier: &FinSet) -> Result<Self> {
        ClosureOp::from_fn(carrier.clone(), |a| a)
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn table(&self) -> &[Mask] {
        &self.table
    }

    pub fn apply(&self, a: Mask) -> Mask {
        self.table[a.0 as usize]
    }

    /// Fixed points of the table.
    pub fn closed_sets(&self) -> Family {
        Family::from_masks(
            self.carrier.clone(),
            Mask::all(self.carrier.len()).filter(|&a| self.apply(a) == a),
        )
    }

    /// Complements of the closed sets.
    pub fn open_sets(&self) -> Family {
        let n = self.carrier.len();
        let closed = self.closed_sets();
        closed.with_members(closed.members().iter().map(|m| m.complement(n)))
    }
}

impl fmt::Debug for ClosureOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ClosureOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.carrier;
        let parts: Vec<String> = Mask::all(c.len())
            .map(|a| format!("{}->{}", c.subset_token(a), c.subset_token(self.apply(a))))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

fn strict_ok(table: &[Mask], n: usize) -> bool {
    let at = |a: Mask| table[a.0 as usize];
    at(Mask::EMPTY).is_empty()
        && (0..n).all(|i| at(Mask::singleton(i)) == Mask::singleton(i))
        && Mask::all(n).all(|a| Mask::all(n).all(|b| at(a.union(b)) == at(a).union(at(b))))
        && Mask::all(n).all(|a| at(at(a)) == at(a))
}

/// Empty set, point fixing, union and idempotence all hold.
pub fn satisfies_strict_axioms(op: &ClosureOp) -> bool {
    strict_ok(&op.table, op.carrier.len())
}

/// The strict axioms, the derived properties and the closed-set theorems.
pub fn closure_check(op: &ClosureOp) -> LawReport {
    let n = op.carrier.len();
    let c = &op.carrier;
    let tok = |a: Mask| c.subset_token(a).to_string();
    let mut r = LawReport::new("closure");
    r.check("top.closure.empty", op.apply(Mask::EMPTY).is_empty(), || "{}".to_string());
    for i in 0..n {
        let x = Mask::singleton(i);
        r.check("top.closure.point", op.apply(x) == x, || c.get(i).to_string());
    }
    for a in Mask::all(n) {
        let ca = op.apply(a);
        r.check("top.closure.idempotent", op.apply(ca) == ca, || tok(a));
        r.check("top.closure.extensive", a.is_subset(ca), || tok(a));
        for b in Mask::all(n) {
            let w = || format!("{} {}", tok(a), tok(b));
            r.check(
                "top.closure.union",
                op.apply(a.union(b)) == ca.union(op.apply(b)),
                w,
            );
            if a.is_subset(b) {
                r.check("top.closure.monotone", ca.is_subset(op.apply(b)), w);
            }
        }
    }
    let closed = op.closed_sets();
    for &d in closed.members() {
        for &e in closed.members() {
            let w = || format!("{} {}", tok(d), tok(e));
            r.check("top.closed.finite_union", closed.contains(d.union(e)), w);
            r.check("top.closed.intersection", closed.contains(d.intersection(e)), w);
        }
    }
    r.check("top.closed.intersection", closed.contains(Mask::full(n)), || {
        "the empty intersection".to_string()
    });
    r
}

fn require_closed_family(c: &Family) -> Result<()> {
    let n = c.carrier().len();
    let tok = |a: Mask| c.token(a).to_string();
    if !c.contains(Mask::EMPTY) {
        return Err(Error::NotClosedFamily("the empty set is missing".into()));
    }
    if !c.contains(Mask::full(n)) {
        return Err(Error::NotClosedFamily("the carrier is missing".into()));
    }
    for &a in c.members() {
        for &b in c.members() {
            if !c.contains(a.intersection(b)) {
                return Err(Error::NotClosedFamily(format!("{} ∩ {}", tok(a), tok(b))));
            }
            if !c.contains(a.union(b)) {
                return Err(Error::NotClosedFamily(format!("{} ∪ {}", tok(a), tok(b))));
            }
        }
    }
    Ok(())
}

/// `Cl A = ⋂{D ∈ C : A ⊆ D}`.
pub fn closure_from_closed(c: &Family) -> Result<ClosureOp> {
    require_closed_family(c)?;
    ClosureOp::from_fn(c.carrier().clone(), |a| {
        c.members()
            .iter()
            .filter(|&&d| a.is_subset(d))
            .fold(c.carrier().full_mask(), |acc, &d| acc.intersection(d))
    })
}

/// Properties of [`closure_from_closed`]. Point fixing is reported as a
/// note, since it only holds when every singleton is closed.
pub fn closure_from_closed_check(c: &Family) -> Result<LawReport> {
    let op = closure_from_closed(c)?;
    let n = c.carrier().len();
    let tok = |a: Mask| c.token(a).to_string();
    let mut r = LawReport::new("closure-from-closed");
    for a in Mask::all(n) {
        let ca = op.apply(a);
        r.check("top.closure.extensive", a.is_subset(ca), || tok(a));
        r.check("top.closure.idempotent", op.apply(ca) == ca, || tok(a));
        r.check("top.closure.empty", !a.is_empty() || ca.is_empty(), || tok(a));
        for b in Mask::all(n) {
            let w = || format!("{} {}", tok(a), tok(b));
            if a.is_subset(b) {
                r.check("top.closure.monotone", ca.is_subset(op.apply(b)), w);
            }
            r.check("top.closure.union", op.apply(a.union(b)) == ca.union(op.apply(b)), w);
        }
    }
    r.check("top.closed.recovered", &op.closed_sets() == c, || c.to_string());
    if !(0..n).all(|i| c.contains(Mask::singleton(i))) {
        r.note("point fixing fails: some singleton is not closed");
    }
    Ok(r)
}

fn bound(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge {
            what: "carrier for closure table enumeration",
            size: n,
            bound: limit,
        });
    }
    Ok(())
}

/// Every table `P(X) → P(X)` satisfying the strict axioms, by scanning all
/// `(2^n)^(2^n)` tables. Carriers of at most three points.
pub fn strict_models_brute(carrier: &FinSet) -> Result<Vec<ClosureOp>> {
    let n = carrier.len();
    bound(n, 3)?;
    let size = 1usize << n;
    let mut table = vec![Mask::EMPTY; size];
    let mut out = Vec::new();
    loop {
        if strict_ok(&table, n) {
            out.push(ClosureOp {
                carrier: carrier.clone(),
                table: table.clone(),
            });
        }
        let mut k = 0;
        loop {
            if k == size {
                return Ok(out);
            }
            if table[k].0 + 1 < size as u64 {
                table[k] = Mask(table[k].0 + 1);
                break;
            }
            table[k] = Mask::EMPTY;
            k += 1;
        }
    }
}

/// Every strict model, by backtracking over table entries in increasing mask
/// order and cutting a branch as soon as an assigned entry breaks the empty,
/// point or union axiom.
pub fn strict_models_search(carrier: &FinSet) -> Result<Vec<ClosureOp>> {
    let n = carrier.len();
    bound(n, 6)?;
    let size = 1usize << n;
    fn consistent(table: &[Mask], k: usize) -> bool {
        let m = Mask(k as u64);
        if k == 0 {
            return table[0].is_empty();
        }
        if m.len() == 1 {
            return table[k] == m;
        }
        (1..k)
            .filter(|&a| a & !k == 0)
            .all(|a| table[k] == table[a].union(table[k & !a]))
    }
    fn go(k: usize, size: usize, table: &mut Vec<Mask>, carrier: &FinSet, out: &mut Vec<ClosureOp>) {
        if k == size {
            let op = ClosureOp {
                carrier: carrier.clone(),
                table: table.clone(),
            };
            if satisfies_strict_axioms(&op) {
                out.push(op);
            }
            return;
        }
        for v in 0..size as u64 {
            table[k] = Mask(v);
            if consistent(table, k) {
                go(k + 1, size, table, carrier, out);
            }
        }
        table[k] = Mask::EMPTY;
    }
    let mut table = vec![Mask::EMPTY; size];
    let mut out = Vec::new();
    go(0, size, &mut table, carrier, &mut out);
    Ok(out)
}

/// Random tables and one-entry perturbations of the identity, checked
/// against the strict axioms. Returns the number of accepted tables that are
/// not the identity.
pub fn strict_models_sampled(carrier: &FinSet, samples: usize, seed: u64) -> Result<usize> {
    let n = carrier.len();
    bound(n, CLOSURE_TABLE_GUARD)?;
    let size = 1usize << n;
    let id = ClosureOp::identity(carrier)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rogue = 0;
    for s in 0..samples {
        let table: Vec<Mask> = if s % 2 == 0 {
            (0..size).map(|_| Mask(rng.gen_range(0..size as u64))).collect()
        } else {
            let mut t = id.table.clone();
            let k = rng.gen_range(0..size);
            t[k] = Mask(rng.gen_range(0..size as u64));
            t
        };
        let op = ClosureOp {
            carrier: carrier.clone(),
            table,
        };
        if satisfies_strict_axioms(&op) && op != id {
            rogue += 1;
        }
    }
    Ok(rogue)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> FinSet {
        FinSet::of(&["a", "b"])
    }

    #[test]
    fn identity_passes() {
        let op = ClosureOp::identity(&FinSet::of(&["a", "b", "c"])).unwrap();
        closure_check(&op).assert_passed();
    }

    #[test]
    fn only_identity_on_small_carriers() {
        for n in 0..=3 {
            let s = FinSet::numbered("x", n);
            let models = strict_models_brute(&s).unwrap();
            assert_eq!(models, vec![ClosureOp::identity(&s).unwrap()]);
        }
    }

    #[test]
    fn search_agrees_with_brute_force() {
        for n in 0..=3 {
            let s = FinSet::numbered("x", n);
            assert_eq!(strict_models_search(&s).unwrap(), vec![ClosureOp::identity(&s).unwrap()]);
        }
    }

    #[test]
    fn sampled_three_points() {
        let s = FinSet::of(&["a", "b", "c"]);
        assert_eq!(strict_models_sampled(&s, 5000, 7).unwrap(), 0);
    }

    #[test]
    fn idempotence_failure_has_witness() {
        let s = ab();
        // {a} -> {a,b} -> {a}
        let t = vec![Mask(0), Mask(0b11), Mask(0b10), Mask(0b01)];
        let r = closure_check(&ClosureOp::new(s, t).unwrap());
        let idem = r.get("top.closure.idempotent").unwrap();
        assert!(!idem.passed());
        assert_eq!(idem.witness.as_deref(), Some("{a,b}"));
    }

    #[test]
    fn sierpinski_closed_family() {
        let s = ab();
        let c = Family::of(&s, &[&[], &["b"], &["a", "b"]]);
        let op = closure_from_closed(&c).unwrap();
        assert_eq!(op.apply(Mask::singleton(0)), s.full_mask());
        assert_eq!(op.apply(Mask::singleton(1)), Mask::singleton(1));
        let r = closure_from_closed_check(&c).unwrap();
        r.assert_passed();
        assert!(!r.notes().is_empty());
    }

    #[test]
    fn full_power_gives_identity() {
        let s = FinSet::of(&["a", "b", "c"]);
        let op = closure_from_closed(&Family::power(s.clone())).unwrap();
        assert_eq!(op, ClosureOp::identity(&s).unwrap());
    }

    #[test]
    fn non_closed_family_has_witness() {
        let s = FinSet::of(&["a", "b", "c"]);
        let c = Family::of(&s, &[&[], &["a", "b"], &["b", "c"], &["a", "b", "c"]]);
        assert_eq!(
            closure_from_closed(&c).unwrap_err(),
            Error::NotClosedFamily("{a,b} ∩ {b,c}".into())
        );
    }

    #[test]
    fn bad_table_length() {
        assert!(matches!(
            ClosureOp::new(ab(), vec![Mask::EMPTY]),
            Err(Error::NotClosureTable(_))
        ));
    }
}

use super::Poset;
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{Mask, OpTable};

/// A lattice given by its order together with its join and meet tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTables {
    pub poset: Poset,
    pub join: OpTable,
    pub meet: OpTable,
}

/// Which way a semilattice table induces its order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// `x ≤ y` iff `x⋄y = y`.
    Join,
    /// `x ≤ y` iff `x⋄y = x`.
    Meet,
}

pub fn lattice_from_poset(p: &Poset) -> Result<LatticeTables> {
    let n = p.len();
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let pair = Mask::singleton(x).insert(y);
            let w = || format!("({},{})", p.carrier().get(x), p.carrier().get(y));
            join[x * n + y] = p.sup(pair).ok_or_else(|| Error::NotALattice(w()))?;
            meet[x * n + y] = p.inf(pair).ok_or_else(|| Error::NotALattice(w()))?;
        }
    }
    Ok(LatticeTables {
        poset: p.clone(),
        join: OpTable::from_fn(p.carrier().clone(), |x, y| join[x * n + y]),
        meet: OpTable::from_fn(p.carrier().clone(), |x, y| meet[x * n + y]),
    })
}

/// Commutative, associative and idempotent.
pub fn semilattice_check(table: &OpTable) -> bool {
    semilattice_witness(table).is_none()
}

fn semilattice_witness(table: &OpTable) -> Option<String> {
    let c = table.carrier();
    if let Some(x) = table.idempotence_witness() {
        return Some(format!("{x}⋄{x} ≠ {x}", x = c.get(x)));
    }
    if let Some((x, y)) = table.commutativity_witness() {
        return Some(format!("{}⋄{} ≠ {}⋄{}", c.get(x), c.get(y), c.get(y), c.get(x)));
    }
    if let Some((x, y, z)) = table.associativity_witness() {
        return Some(format!("associativity fails at ({},{},{})", c.get(x), c.get(y), c.get(z)));
    }
    None
}

/// Idempotence, commutativity and associativity, each on every instance.
pub fn semilattice_laws(table: &OpTable) -> LawReport {
    let c = table.carrier();
    let n = table.len();
    let mut r = LawReport::new("semilattice");
    for x in 0..n {
        r.check("order.semilattice.idempotent", table.get(x, x) == x, || c.get(x).to_string());
        for y in 0..n {
            r.check(
                "order.semilattice.commutative",
                table.get(x, y) == table.get(y, x),
                || format!("({},{})", c.get(x), c.get(y)),
            );
            for z in 0..n {
                r.check(
                    "order.semilattice.associative",
                    table.get(table.get(x, y), z) == table.get(x, table.get(y, z)),
                    || format!("({},{},{})", c.get(x), c.get(y), c.get(z)),
                );
            }
        }
    }
    r
}

pub fn order_from_semilattice(table: &OpTable, orientation: Orientation) -> Result<Poset> {
    if let Some(w) = semilattice_witness(table) {
        return Err(Error::NotSemilattice(w));
    }
    Poset::from_fn(table.carrier().clone(), |x, y| match orientation {
        Orientation::Join => table.get(x, y) == y,
        Orientation::Meet => table.get(x, y) == x,
    })
}

/// Builds a lattice from a join table and a meet table that induce the same
/// order: `x∨y = y` iff `x∧y = x`.
pub fn lattice_from_dual_pair(join: &OpTable, meet: &OpTable) -> Result<LatticeTables> {
    if join.carrier() != meet.carrier() {
        return Err(Error::NotDualPair("tables live on different carriers".into()));
    }
    let p = order_from_semilattice(join, Orientation::Join)?;
    order_from_semilattice(meet, Orientation::Meet)?;
    let c = join.carrier();
    let n = c.len();
    for x in 0..n {
        for y in 0..n {
            if (join.get(x, y) == y) != (meet.get(x, y) == x) {
                return Err(Error::NotDualPair(format!("({},{})", c.get(x), c.get(y))));
            }
        }
    }
    let l = lattice_from_poset(&p).map_err(|e| Error::NotDualPair(e.to_string()))?;
    if l.join != *join || l.meet != *meet {
        return Err(Error::NotDualPair("tables are not the induced sup and inf".into()));
    }
    Ok(l)
}

/// Checks the algebraic and order-theoretic identities of a lattice.
pub fn lattice_laws(l: &LatticeTables) -> LawReport {
    let p = &l.poset;
    let c = p.carrier();
    let n = p.len();
    let (j, m) = (&l.join, &l.meet);
    let mut r = LawReport::new("lattice");
    let w2 = |x: usize, y: usize| format!("({},{})", c.get(x), c.get(y));
    let w3 = |x: usize, y: usize, z: usize| format!("({},{},{})", c.get(x), c.get(y), c.get(z));
    for x in 0..n {
        r.check("order.lattice.idempotent", j.get(x, x) == x && m.get(x, x) == x, || {
            c.get(x).to_string()
        });
        for y in 0..n {
            let pair = Mask::singleton(x).insert(y);
            r.check(
                "order.lattice.join_is_sup",
                p.sup(pair) == Some(j.get(x, y)) && p.inf(pair) == Some(m.get(x, y)),
                || w2(x, y),
            );
            r.check(
                "order.lattice.order_from_tables",
                p.leq(x, y) == (j.get(x, y) == y) && p.leq(x, y) == (m.get(x, y) == x),
                || w2(x, y),
            );
            r.check(
                "order.lattice.commutative",
                j.get(x, y) == j.get(y, x) && m.get(x, y) == m.get(y, x),
                || w2(x, y),
            );
            r.check(
                "order.lattice.absorption",
                j.get(x, m.get(x, y)) == x && m.get(x, j.get(x, y)) == x,
                || w2(x, y),
            );
            for z in 0..n {
                r.check(
                    "order.lattice.associative",
                    j.get(j.get(x, y), z) == j.get(x, j.get(y, z))
                        && m.get(m.get(x, y), z) == m.get(x, m.get(y, z)),
                    || w3(x, y, z),
                );
                if p.leq(x, y) {
                    r.check(
                        "order.lattice.monotone",
                        p.leq(j.get(x, z), j.get(y, z)) && p.leq(m.get(x, z), m.get(y, z)),
                        || w3(x, y, z),
                    );
                }
            }
        }
    }
    if let Some(e) = j.unit() {
        r.check("order.lattice.units", Some(e) == p.min(), || {
            format!("join unit {} is not the minimum", c.get(e))
        });
    }
    if let Some(e) = m.unit() {
        r.check("order.lattice.units", Some(e) == p.max(), || {
            format!("meet unit {} is not the maximum", c.get(e))
        });
    }
    if n <= 6 {
        let nonempty: Vec<Mask> = Mask::all(n).filter(|s| !s.is_empty()).collect();
        let sup_all = |s: Mask| s.iter().fold(None, |acc: Option<usize>, x| {
            Some(acc.map_or(x, |a| j.get(a, x)))
        });
        for &a in &nonempty {
            r.check("order.lattice.finite_sup", p.sup(a) == sup_all(a), || p.subset_string(a));
            for &b in &nonempty {
                let lhs = p.sup(a.union(b));
                let rhs = match (p.sup(a), p.sup(b)) {
                    (Some(x), Some(y)) => Some(j.get(x, y)),
                    _ => None,
                };
                r.check("order.lattice.sup_of_union", lhs == rhs, || {
                    format!("{} {}", p.subset_string(a), p.subset_string(b))
                });
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::FinSet;

    #[test]
    fn chain_tables_are_max_min() {
        let c = Poset::chain(4);
        let l = lattice_from_poset(&c).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(l.join.get(x, y), x.max(y));
                assert_eq!(l.meet.get(x, y), x.min(y));
            }
        }
        lattice_laws(&l).assert_passed();
    }

    #[test]
    fn powerset_join_is_union() {
        let base = FinSet::of(&["a", "b"]);
        let p = Poset::powerset(&base).unwrap();
        let l = lattice_from_poset(&p).unwrap();
        let c = p.carrier();
        let idx = |s: &str| c.index_of_str(s).unwrap();
        assert_eq!(l.join.get(idx("{a}"), idx("{b}")), idx("{a,b}"));
        assert_eq!(l.meet.get(idx("{a}"), idx("{b}")), idx("{}"));
        lattice_laws(&l).assert_passed();
    }

    #[test]
    fn antichain_is_not_a_lattice() {
        assert!(matches!(
            lattice_from_poset(&Poset::antichain(2)),
            Err(Error::NotALattice(_))
        ));
    }

    #[test]
    fn max_table_induces_chain() {
        let c = Poset::chain(3);
        let max = OpTable::from_fn(c.carrier().clone(), |x, y| x.max(y));
        assert!(semilattice_check(&max));
        assert_eq!(order_from_semilattice(&max, Orientation::Join).unwrap(), c);
    }

    #[test]
    fn union_intersection_dual_pair() {
        let p = Poset::powerset(&FinSet::of(&["a", "b"])).unwrap();
        let l = lattice_from_poset(&p).unwrap();
        let back = lattice_from_dual_pair(&l.join, &l.meet).unwrap();
        assert_eq!(back.poset, p);
        let c = p.carrier();
        assert_eq!(l.join.unit(), c.index_of_str("{}"));
        assert_eq!(l.meet.unit(), c.index_of_str("{a,b}"));
    }

    #[test]
    fn group_table_is_not_semilattice() {
        let z2 = OpTable::from_fn(FinSet::of(&["e", "a"]), |x, y| x ^ y);
        assert!(!semilattice_check(&z2));
        assert!(matches!(
            order_from_semilattice(&z2, Orientation::Join),
            Err(Error::NotSemilattice(_))
        ));
    }

    #[test]
    fn repeated_table_is_not_dual() {
        let l = lattice_from_poset(&Poset::chain(3)).unwrap();
        assert!(matches!(
            lattice_from_dual_pair(&l.join, &l.join),
            Err(Error::NotDualPair(_))
        ));
        let swapped = lattice_from_dual_pair(&l.meet, &l.join).unwrap();
        assert_eq!(swapped.poset, l.poset.opposite());
    }
}

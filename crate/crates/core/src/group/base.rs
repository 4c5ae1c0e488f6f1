use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{FinMap, FinSet, Mask, OpTable, Symbol};

/// Largest order for which the Latin-square catalogue is built.
pub const CATALOGUE_GUARD: usize = 6;
/// Largest order for bijection searches (isomorphisms, automorphisms).
pub const ISO_GUARD: usize = 8;

/// A group given by its Cayley table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinGroup {
    table: OpTable,
    unit: usize,
    inv: Vec<usize>,
}

/// Validates a table as a group: nonempty, associative, with a two-sided
/// unit and two-sided inverses.
pub fn check_group(table: OpTable) -> Result<FinGroup> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty carrier".into()));
    }
    if n > 64 {
        return Err(Error::TooLarge {
            what: "group order",
            size: n,
            bound: 64,
        });
    }
    if let Some((x, y, z)) = table.associativity_witness() {
        let s = |i| table.name(i);
        return Err(Error::NotAGroup(format!(
            "({}⋄{})⋄{} ≠ {}⋄({}⋄{})",
            s(x),
            s(y),
            s(z),
            s(x),
            s(y),
            s(z)
        )));
    }
    let unit = table
        .unit()
        .ok_or_else(|| Error::NotAGroup("no two-sided unit".into()))?;
    let mut inv = Vec::with_capacity(n);
    for x in 0..n {
        let y = (0..n)
            .find(|&y| table.get(x, y) == unit && table.get(y, x) == unit)
            .ok_or_else(|| Error::NotAGroup(format!("{} has no inverse", table.name(x))))?;
        inv.push(y);
    }
    Ok(FinGroup { table, unit, inv })
}

impl FinGroup {
    /// Builds the table of `op` on named values; the result is validated.
    pub fn from_elements<T, F>(elements: Vec<(Symbol, T)>, op: F) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let carrier = FinSet::new(elements.iter().map(|(s, _)| s.clone()))?;
        let by_value: HashMap<T, usize> = elements
            .iter()
            .map(|(s, v)| (v.clone(), carrier.index_of(s).expect("member")))
            .collect();
        let mut values = vec![None; carrier.len()];
        for (s, v) in &elements {
            values[carrier.index_of(s).expect("member")] = Some(v.clone());
        }
        let values: Vec<T> = values.into_iter().map(|v| v.expect("filled")).collect();
        let n = values.len();
        let mut cells = Vec::with_capacity(n * n);
        for a in &values {
            for b in &values {
                let c = op(a, b);
                let k = *by_value
                    .get(&c)
                    .ok_or_else(|| Error::NotAGroup("operation leaves the carrier".into()))?;
                cells.push(k);
            }
        }
        check_group(OpTable::from_fn(carrier, |i, j| cells[i * n + j]))
    }

    pub fn table(&self) -> &OpTable {
        &self.table
    }

    pub fn carrier(&self) -> &FinSet {
        self.table.carrier()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &Symbol {
        self.table.name(a)
    }

    pub fn index(&self, s: &Symbol) -> Result<usize> {
        self.carrier().require(s)
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.carrier()
            .index_of_str(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn unit_symbol(&self) -> &Symbol {
        self.name(self.unit)
    }

    /// The inversion map as a [`FinMap`].
    pub fn inverse_map(&self) -> FinMap {
        FinMap::from_fn(self.carrier().clone(), self.carrier().clone(), |i| self.inv[i])
    }

    pub fn full(&self) -> Mask {
        Mask::full(self.len())
    }

    pub fn is_abelian(&self) -> bool {
        self.table.commutativity_witness().is_none()
    }

    /// `a↑n`: `a↑0 = e`, `a↑(n+1) = a↑n·a`, `a↑(−n) = (a↑n)⁻¹`. The exponent
    /// is reduced modulo the order of `a` first.
    pub fn power(&self, a: usize, n: i64) -> usize {
        let k = n.unsigned_abs() % self.order_of(a) as u64;
        let mut acc = self.unit;
        for _ in 0..k {
            acc = self.op(acc, a);
        }
        if n < 0 {
            self.inv(acc)
        } else {
            acc
        }
    }

    /// Least `k ≥ 1` with `a↑k = e`.
    pub fn order_of(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != self.unit {
            acc = self.op(acc, a);
            k += 1;
        }
        k
    }

    /// `AB = {a·b}` on masks.
    pub fn product_set(&self, a: Mask, b: Mask) -> Mask {
        let mut out = Mask::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out = out.insert(self.op(x, y));
            }
        }
        out
    }

    pub fn inverse_set(&self, a: Mask) -> Mask {
        a.iter().fold(Mask::EMPTY, |m, x| m.insert(self.inv(x)))
    }

    /// `xAy` on masks.
    pub fn translate(&self, x: usize, a: Mask, y: usize) -> Mask {
        a.iter()
            .fold(Mask::EMPTY, |m, h| m.insert(self.op(self.op(x, h), y)))
    }

    /// The subgroup generated by `a`: closure under products, starting from
    /// the unit.
    pub fn closure(&self, a: Mask) -> Mask {
        let mut cur = a.insert(self.unit);
        loop {
            let next = cur.union(self.product_set(cur, cur));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// The group on a subset closed under the operation, keeping names.
    pub fn restrict(&self, m: Mask) -> Result<FinGroup> {
        let idx: Vec<usize> = m.iter().collect();
        let carrier = self.carrier().subset(m);
        let mut cells = Vec::with_capacity(idx.len() * idx.len());
        for &a in &idx {
            for &b in &idx {
                let c = self.op(a, b);
                let k = idx.iter().position(|&x| x == c).ok_or_else(|| {
                    Error::NotSubgroup(format!("{}·{} leaves the subset", self.name(a), self.name(b)))
                })?;
                cells.push(k);
            }
        }
        let k = idx.len();
        check_group(OpTable::from_fn(carrier, |i, j| cells[i * k + j]))
    }

    /// The one-element group `{e}`.
    pub fn trivial() -> FinGroup {
        cyclic(1).expect("order one")
    }
}

/// `Zn` on `{0, …, n−1}` under addition mod `n`.
pub fn cyclic(n: usize) -> Result<FinGroup> {
    if n == 0 {
        return Err(Error::NotAGroup("empty carrier".into()));
    }
    let elems = (0..n).map(|i| (Symbol(i.to_string()), i)).collect();
    FinGroup::from_elements(elems, |a, b| (a + b) % n)
}

fn one_line(p: &[usize]) -> Symbol {
    Symbol(p.iter().map(|i| (i + 1).to_string()).collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out.sort();
    out
}

/// `Sn` on permutations in one-line notation (`"123"` is the unit), with
/// `(σ·τ)(i) = σ(τ(i))`.
pub fn symmetric(n: usize) -> Result<FinGroup> {
    if n == 0 || n > 5 {
        return Err(Error::TooLarge {
            what: "symmetric degree",
            size: n,
            bound: 5,
        });
    }
    let elems = permutations(n)
        .into_iter()
        .map(|p| (one_line(&p), p))
        .collect();
    FinGroup::from_elements(elems, |s: &Vec<usize>, t: &Vec<usize>| {
        t.iter().map(|&i| s[i]).collect()
    })
}

/// The symmetries of a regular `n`-gon: `rk` rotations and `sk` reflections.
pub fn dihedral(n: usize) -> Result<FinGroup> {
    if n < 3 {
        return Err(Error::Invalid("dihedral groups start at n = 3".into()));
    }
    let mut elems = Vec::new();
    for k in 0..n {
        elems.push((Symbol(format!("r{k}")), (false, k)));
        elems.push((Symbol(format!("s{k}")), (true, k)));
    }
    FinGroup::from_elements(elems, move |&(fa, a), &(fb, b)| {
        if fa {
            (!fb, (a + n - b) % n)
        } else {
            (fb, (a + b) % n)
        }
    })
}

/// The direct product with elements named `(x,y)`.
pub fn product(g: &FinGroup, h: &FinGroup) -> Result<FinGroup> {
    let elems = (0..g.len())
        .flat_map(|a| (0..h.len()).map(move |b| (a, b)))
        .map(|(a, b)| (crate::sets::pair_symbol(g.name(a), h.name(b)), (a, b)))
        .collect();
    FinGroup::from_elements(elems, |&(a, b), &(c, d)| (g.op(a, c), h.op(b, d)))
}

/// `Z2 × Z2`.
pub fn klein() -> FinGroup {
    let z2 = cyclic(2).expect("order two");
    product(&z2, &z2).expect("product of groups")
}

/// Axioms and derived identities of a group.
pub fn group_laws(g: &FinGroup) -> LawReport {
    let n = g.len();
    let mut r = LawReport::new("group");
    let s = |i| g.name(i).to_string();
    for a in 0..n {
        r.check("group.unit", g.op(g.unit, a) == a && g.op(a, g.unit) == a, || s(a));
        r.check(
            "group.inverse",
            g.op(a, g.inv(a)) == g.unit && g.op(g.inv(a), a) == g.unit,
            || s(a),
        );
        r.check("group.double_inverse", g.inv(g.inv(a)) == a, || s(a));
        for b in 0..n {
            let w = || format!("({},{})", s(a), s(b));
            for c in 0..n {
                r.check(
                    "group.associative",
                    g.op(g.op(a, b), c) == g.op(a, g.op(b, c)),
                    || format!("({},{},{})", s(a), s(b), s(c)),
                );
            }
            let right = (0..n).filter(|&x| g.op(a, x) == b).count();
            let left = (0..n).filter(|&y| g.op(y, a) == b).count();
            r.check("group.unique_solution", right == 1 && left == 1, w);
            let cancels = (0..n).all(|c| {
                (g.op(a, b) != g.op(a, c) || b == c) && (g.op(b, a) != g.op(c, a) || b == c)
            });
            r.check("group.cancellation", cancels, w);
        }
    }
    r
}

/// The group axioms on a raw table, each evaluated on every instance. Unit
/// and inverse are read against the least two-sided unit, if any.
pub fn group_table_laws(table: &OpTable) -> LawReport {
    let n = table.len();
    let mut r = LawReport::new("group-table");
    let s = |i: usize| table.name(i).to_string();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                r.check(
                    "group.associative",
                    table.get(table.get(a, b), c) == table.get(a, table.get(b, c)),
                    || format!("({},{},{})", s(a), s(b), s(c)),
                );
            }
        }
    }
    match table.unit() {
        Some(e) => {
            r.pass_many("group.unit", n as u64);
            for a in 0..n {
                let inv = (0..n).any(|b| table.get(a, b) == e && table.get(b, a) == e);
                r.check("group.inverse", inv, || s(a));
            }
        }
        None => {
            r.check("group.unit", false, || "no two-sided unit".to_string());
        }
    }
    r
}

/// Recursion, sign and additivity identities of `↑`, and commutativity of
/// each `⟨a⟩`.
pub fn power_laws(g: &FinGroup) -> LawReport {
    let n = g.len() as i64;
    let mut r = LawReport::new("power");
    let s = |i: usize| g.name(i).to_string();
    for a in 0..g.len() {
        r.check("group.power.zero", g.power(a, 0) == g.unit, || s(a));
        for k in -n..=n {
            let w = || format!("{} ↑ {k}", s(a));
            r.check("group.power.successor", g.power(a, k + 1) == g.op(g.power(a, k), a), w);
            r.check("group.power.negative", g.power(a, -k) == g.inv(g.power(a, k)), w);
            for m in -n..=n {
                r.check(
                    "group.power.additive",
                    g.power(a, k + m) == g.op(g.power(a, k), g.power(a, m)),
                    || format!("{} ↑ ({k}+{m})", s(a)),
                );
            }
        }
        let c = cyclic_mask(g, a);
        let abelian = c
            .iter()
            .all(|x| c.iter().all(|y| g.op(x, y) == g.op(y, x)));
        r.check(
            "group.cyclic.abelian_subgroup",
            abelian && g.product_set(c, g.inverse_set(c)).is_subset(c),
            || s(a),
        );
    }
    if g.is_abelian() {
        for a in 0..g.len() {
            for b in 0..g.len() {
                for k in -n..=n {
                    r.check(
                        "group.power.abelian_product",
                        g.power(g.op(a, b), k) == g.op(g.power(a, k), g.power(b, k)),
                        || format!("({}·{}) ↑ {k}", s(a), s(b)),
                    );
                }
            }
        }
    }
    r
}

/// `{a↑x : x ∈ Z}`; exponents in `[−|G|, |G|]` reach every power.
pub(crate) fn cyclic_mask(g: &FinGroup, a: usize) -> Mask {
    let n = g.len() as i64;
    (-n..=n).fold(Mask::EMPTY, |m, k| m.insert(g.power(a, k)))
}

/// Symbol-level `a↑n`.
pub fn power(g: &FinGroup, a: &Symbol, n: i64) -> Result<Symbol> {
    Ok(g.name(g.power(g.index(a)?, n)).clone())
}

/// An isomorphism `g → h`, if one exists, found by backtracking over
/// order-preserving assignments.
pub fn find_isomorphism(g: &FinGroup, h: &FinGroup) -> Result<Option<FinMap>> {
    let n = g.len();
    if n != h.len() {
        return Ok(None);
    }
    if n > ISO_GUARD {
        return Err(Error::TooLarge {
            what: "group order for isomorphism search",
            size: n,
            bound: ISO_GUARD,
        });
    }
    let og: Vec<usize> = (0..n).map(|a| g.order_of(a)).collect();
    let oh: Vec<usize> = (0..n).map(|a| h.order_of(a)).collect();
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        k: usize,
        g: &FinGroup,
        h: &FinGroup,
        og: &[usize],
        oh: &[usize],
        f: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = f.len();
        if k == n {
            return (0..n).all(|a| (0..n).all(|b| f[g.op(a, b)] == h.op(f[a], f[b])));
        }
        for t in 0..n {
            if used[t] || og[k] != oh[t] || (k == g.unit()) != (t == h.unit()) {
                continue;
            }
            f[k] = t;
            let consistent = (0..=k).all(|a| {
                (0..=k).all(|b| {
                    let c = g.op(a, b);
                    c > k || f[c] == h.op(f[a], f[b])
                })
            });
            if consistent {
                used[t] = true;
                if rec(k + 1, g, h, og, oh, f, used) {
                    return true;
                }
                used[t] = false;
            }
            f[k] = usize::MAX;
        }
        false
    }
    if rec(0, g, h, &og, &oh, &mut f, &mut used) {
        Ok(Some(FinMap::from_fn(g.carrier().clone(), h.carrier().clone(), |i| f[i])))
    } else {
        Ok(None)
    }
}

pub fn is_isomorphic(g: &FinGroup, h: &FinGroup) -> Result<bool> {
    Ok(find_isomorphism(g, h)?.is_some())
}

/// One representative per isomorphism class of groups of order `n`, found
/// by enumerating reduced Latin squares on `g0 … g(n−1)` with `g0` the unit
/// and keeping the associative ones.
pub fn groups_of_order(n: usize) -> Result<Vec<FinGroup>> {
    if n == 0 || n > CATALOGUE_GUARD {
        return Err(Error::TooLarge {
            what: "catalogue order",
            size: n,
            bound: CATALOGUE_GUARD,
        });
    }
    let carrier = FinSet::numbered("g", n);
    let mut cells = vec![usize::MAX; n * n];
    for i in 0..n {
        cells[i] = i;
        cells[i * n] = i;
    }
    let mut found: Vec<FinGroup> = Vec::new();
    fn fill(
        pos: usize,
        n: usize,
        cells: &mut Vec<usize>,
        carrier: &FinSet,
        found: &mut Vec<FinGroup>,
    ) -> Result<()> {
        if pos == n * n {
            let t = OpTable::from_fn(carrier.clone(), |i, j| cells[i * n + j]);
            if let Ok(g) = check_group(t) {
                for rep in found.iter() {
                    if is_isomorphic(rep, &g)? {
                        return Ok(());
                    }
                }
                found.push(g);
            }
            return Ok(());
        }
        let (i, j) = (pos / n, pos % n);
        if i == 0 || j == 0 {
            return fill(pos + 1, n, cells, carrier, found);
        }
        for v in 0..n {
            let row_ok = (0..j).all(|c| cells[i * n + c] != v);
            let col_ok = (0..i).all(|r| cells[r * n + j] != v);
            if row_ok && col_ok {
                cells[pos] = v;
                fill(pos + 1, n, cells, carrier, found)?;
            }
        }
        cells[pos] = usize::MAX;
        Ok(())
    }
    fill(0, n, &mut cells, &carrier, &mut found)?;
    Ok(found)
}

/// Every catalogued group of order `1..=max`.
pub fn catalogue(max: usize) -> Result<Vec<FinGroup>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(groups_of_order(n)?);
    }
    Ok(out)
}

impl fmt::Debug for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinGroup{}", self.carrier())
    }
}

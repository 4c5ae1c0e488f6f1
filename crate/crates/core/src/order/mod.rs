//! Partial orders: axioms, bounds, directed sets, chains and maximal
//! elements, lattices and semilattices, completeness, Galois connections.

mod bounds;
mod complete;
mod lattice;
mod maps;

pub use bounds::{bounds, extend_chain, is_directed, is_directed_by_finite_subsets, zorn_maximal, Bounds, TotalChain};
pub use complete::{
    completeness_report, functor_order, monotone_self_maps, partial_map_poset, Completeness,
};
pub use lattice::{
    lattice_from_dual_pair, lattice_from_poset, lattice_laws, order_from_semilattice,
    semilattice_check, semilattice_laws, LatticeTables, Orientation,
};
pub use maps::{galois_check, map_classify, OrderMapClass};

use std::fmt;

use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{FinSet, Mask, Symbol};

/// A binary relation on a finite carrier, as a dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    carrier: FinSet,
    rel: Vec<bool>,
}

impl Relation {
    pub fn new(carrier: FinSet, pairs: impl IntoIterator<Item = (Symbol, Symbol)>) -> Result<Self> {
        let n = carrier.len();
        let mut rel = vec![false; n * n];
        for (a, b) in pairs {
            let (i, j) = (carrier.require(&a)?, carrier.require(&b)?);
            rel[i * n + j] = true;
        }
        Ok(Relation { carrier, rel })
    }

    pub fn from_fn(carrier: FinSet, f: impl Fn(usize, usize) -> bool) -> Self {
        let n = carrier.len();
        let rel = (0..n * n).map(|c| f(c / n, c % n)).collect();
        Relation { carrier, rel }
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rel[i * self.carrier.len() + j]
    }

    /// Reflexive-transitive closure.
    pub fn closure(&self) -> Relation {
        let n = self.carrier.len();
        let mut rel = self.rel.clone();
        for i in 0..n {
            rel[i * n + i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i * n + k] {
                    for j in 0..n {
                        if rel[k * n + j] {
                            rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Relation {
            carrier: self.carrier.clone(),
            rel,
        }
    }
}

/// Outcome of [`check_order`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCheck {
    pub reflexive: bool,
    pub transitive: bool,
    pub antisymmetric: bool,
    pub total: bool,
    pub preorder: bool,
    pub partial: bool,
    pub natural: bool,
    /// One entry per axiom; a failing axiom carries its least witness.
    pub report: LawReport,
}

/// Evaluates each order axiom independently.
pub fn check_order(rel: &Relation) -> OrderCheck {
    let c = rel.carrier();
    let n = c.len();
    let mut report = LawReport::new("order-axioms");
    for i in 0..n {
        report.check("order.reflexive", rel.holds(i, i), || format!("({},{}) missing", c.get(i), c.get(i)));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && rel.holds(i, j) {
                report.check("order.antisymmetric", !rel.holds(j, i), || {
                    format!("{} <= {} <= {}", c.get(i), c.get(j), c.get(i))
                });
            }
            for k in 0..n {
                if rel.holds(i, j) && rel.holds(j, k) {
                    report.check("order.transitive", rel.holds(i, k), || {
                        format!("({},{},{})", c.get(i), c.get(j), c.get(k))
                    });
                }
            }
        }
    }
    for law in ["order.reflexive", "order.antisymmetric", "order.transitive"] {
        if report.get(law).is_none() {
            report.pass_many(law, 0);
        }
    }
    let ok = |law: &str| report.get(law).map(|c| c.passed()).unwrap_or(true);
    let reflexive = ok("order.reflexive");
    let antisymmetric = ok("order.antisymmetric");
    let transitive = ok("order.transitive");
    let total = (0..n).all(|i| (0..n).all(|j| rel.holds(i, j) || rel.holds(j, i)));
    let preorder = reflexive && transitive;
    let partial = preorder && antisymmetric;
    let natural = partial && total;
    report.note(format!("preorder = {preorder}, partial = {partial}, natural = {natural}"));
    OrderCheck {
        reflexive,
        transitive,
        antisymmetric,
        total,
        preorder,
        partial,
        natural,
        report,
    }
}

/// A partial order on a finite carrier of at most 64 elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    carrier: FinSet,
    leq: Vec<bool>,
}

impl Poset {
    /// Validates `rel` as a partial order.
    pub fn from_relation(rel: Relation) -> Result<Self> {
        rel.carrier().check_maskable()?;
        let check = check_order(&rel);
        if !check.partial {
            let failure = check
                .report
                .failures()
                .next()
                .map(|c| format!("{}: {}", c.law, c.witness.clone().unwrap_or_default()))
                .unwrap_or_default();
            return Err(Error::NotPartialOrder(failure));
        }
        Ok(Poset {
            carrier: rel.carrier,
            leq: rel.rel,
        })
    }

    pub fn new(carrier: FinSet, pairs: impl IntoIterator<Item = (Symbol, Symbol)>) -> Result<Self> {
        Poset::from_relation(Relation::new(carrier, pairs)?)
    }

    /// The partial order generated by `pairs` (reflexive-transitive closure).
    pub fn generated(
        carrier: FinSet,
        pairs: impl IntoIterator<Item = (Symbol, Symbol)>,
    ) -> Result<Self> {
        Poset::from_relation(Relation::new(carrier, pairs)?.closure())
    }

    /// Test helper: the order generated by string pairs.
    pub fn of(elements: &[&str], pairs: &[(&str, &str)]) -> Result<Self> {
        let carrier = FinSet::from_names(elements.iter().copied())?;
        let pairs = pairs
            .iter()
            .map(|(a, b)| Ok((Symbol::new(*a)?, Symbol::new(*b)?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::generated(carrier, pairs)
    }

    pub fn from_fn(carrier: FinSet, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Poset::from_relation(Relation::from_fn(carrier, leq))
    }

    pub(crate) fn from_fn_unchecked(carrier: FinSet, leq: impl Fn(usize, usize) -> bool) -> Self {
        let r = Relation::from_fn(carrier, leq);
        Poset {
            carrier: r.carrier,
            leq: r.rel,
        }
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Poset::from_fn_unchecked(FinSet::numbered("", n), |i, j| i <= j)
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_fn_unchecked(FinSet::numbered("x", n), |i, j| i == j)
    }

    /// `bot < a, b < top`.
    pub fn diamond() -> Self {
        Poset::of(
            &["bot", "a", "b", "top"],
            &[("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")],
        )
        .expect("diamond is a partial order")
    }

    /// Subsets of `base` under inclusion, named by their tokens.
    pub fn powerset(base: &FinSet) -> Result<Self> {
        if base.len() > 6 {
            return Err(Error::TooLarge {
                what: "powerset base",
                size: base.len(),
                bound: 6,
            });
        }
        let (carrier, mask_at) = base.powerset_tokens();
        Ok(Poset::from_fn_unchecked(carrier, |i, j| {
            mask_at[i].is_subset(mask_at[j])
        }))
    }

    /// Integers `-n..=n` in their natural order.
    pub fn int_window(n: i64) -> Self {
        let values: Vec<i64> = (-n..=n).collect();
        let carrier = FinSet::collect(values.iter().map(|v| Symbol::new(v.to_string()).expect("integer token")));
        let value_of: Vec<i64> = carrier
            .iter()
            .map(|s| s.as_str().parse().expect("integer token"))
            .collect();
        Poset::from_fn_unchecked(carrier, |i, j| value_of[i] <= value_of[j])
    }

    /// Componentwise order on pairs.
    pub fn product(p: &Poset, q: &Poset) -> Result<Self> {
        let carrier = p.carrier.product(&q.carrier);
        let coords: Vec<(usize, usize)> = carrier
            .iter()
            .map(|s| {
                let (a, b) = crate::sets::split_pair(s).expect("pair token");
                (p.carrier.index_of(&a).expect("left"), q.carrier.index_of(&b).expect("right"))
            })
            .collect();
        Poset::from_fn(carrier, |i, j| {
            p.leq(coords[i].0, coords[j].0) && q.leq(coords[i].1, coords[j].1)
        })
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.carrier.len() + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    pub fn leq_sym(&self, a: &Symbol, b: &Symbol) -> Result<bool> {
        Ok(self.leq(self.carrier.require(a)?, self.carrier.require(b)?))
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.carrier
            .index_of_str(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn relation(&self) -> Relation {
        Relation {
            carrier: self.carrier.clone(),
            rel: self.leq.clone(),
        }
    }

    /// All pairs `(a, b)` with `a ≤ b`, reflexive pairs included.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n * n)
            .map(move |c| (c / n, c % n))
            .filter(|&(i, j)| self.leq(i, j))
    }

    /// Covering pairs `a ⋖ b`, for rendering.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        self.pairs()
            .filter(|&(i, j)| i != j && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)))
            .collect()
    }

    pub fn opposite(&self) -> Poset {
        Poset::from_fn_unchecked(self.carrier.clone(), |i, j| self.leq(j, i))
    }

    pub fn full(&self) -> Mask {
        self.carrier.full_mask()
    }

    pub fn upper_bounds(&self, a: Mask) -> Mask {
        (0..self.len())
            .filter(|&u| a.iter().all(|x| self.leq(x, u)))
            .fold(Mask::EMPTY, Mask::insert)
    }

    pub fn lower_bounds(&self, a: Mask) -> Mask {
        (0..self.len())
            .filter(|&l| a.iter().all(|x| self.leq(l, x)))
            .fold(Mask::EMPTY, Mask::insert)
    }

    /// The element of `a` below every other element of `a`.
    pub fn least(&self, a: Mask) -> Option<usize> {
        a.iter().find(|&m| a.iter().all(|x| self.leq(m, x)))
    }

    pub fn greatest(&self, a: Mask) -> Option<usize> {
        a.iter().find(|&m| a.iter().all(|x| self.leq(x, m)))
    }

    pub fn sup(&self, a: Mask) -> Option<usize> {
        self.least(self.upper_bounds(a))
    }

    pub fn inf(&self, a: Mask) -> Option<usize> {
        self.greatest(self.lower_bounds(a))
    }

    pub fn min(&self) -> Option<usize> {
        self.least(self.full())
    }

    pub fn max(&self) -> Option<usize> {
        self.greatest(self.full())
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        !(0..self.len()).any(|j| self.lt(i, j))
    }

    pub fn is_chain(&self, a: Mask) -> bool {
        a.iter().all(|x| a.iter().all(|y| self.comparable(x, y)))
    }

    /// Every chain of the poset, including the empty chain.
    pub fn chains(&self) -> Vec<Mask> {
        let mut out = Vec::new();
        self.grow_chains(Mask::EMPTY, 0, &mut out);
        out
    }

    fn grow_chains(&self, cur: Mask, from: usize, out: &mut Vec<Mask>) {
        out.push(cur);
        for k in from..self.len() {
            if cur.iter().all(|x| self.comparable(x, k)) {
                self.grow_chains(cur.insert(k), k + 1, out);
            }
        }
    }

    /// Chains that cannot be extended.
    pub fn maximal_chains(&self) -> Vec<Mask> {
        let chains = self.chains();
        chains
            .iter()
            .copied()
            .filter(|&c| (0..self.len()).all(|k| c.contains(k) || !c.iter().all(|x| self.comparable(x, k))))
            .collect()
    }

    /// Elements of `a` listed in increasing order; `a` must be a chain.
    pub fn sort_chain(&self, a: Mask) -> Vec<usize> {
        let mut v: Vec<usize> = a.iter().collect();
        v.sort_by(|&x, &y| {
            if x == y {
                std::cmp::Ordering::Equal
            } else if self.leq(x, y) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        v
    }

    pub fn subset_string(&self, a: Mask) -> String {
        self.carrier.subset(a).to_string()
    }

    /// All partial orders on `{p0, ..., p(n-1)}`, by brute force over the
    /// three possible states of every unordered pair.
    pub fn all_labeled(n: usize) -> Result<Vec<Poset>> {
        if n > 5 {
            return Err(Error::TooLarge {
                what: "labeled poset enumeration",
                size: n,
                bound: 5,
            });
        }
        let carrier = FinSet::numbered("p", n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        let total = 3usize.pow(pairs.len() as u32);
        for mut code in 0..total {
            let mut rel = vec![false; n * n];
            for i in 0..n {
                rel[i * n + i] = true;
            }
            for &(i, j) in &pairs {
                match code % 3 {
                    1 => rel[i * n + j] = true,
                    2 => rel[j * n + i] = true,
                    _ => {}
                }
                code /= 3;
            }
            let transitive = (0..n).all(|i| {
                (0..n).all(|j| !rel[i * n + j] || (0..n).all(|k| !rel[j * n + k] || rel[i * n + k]))
            });
            if transitive {
                out.push(Poset {
                    carrier: carrier.clone(),
                    leq: rel,
                });
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .hasse()
            .into_iter()
            .map(|(i, j)| format!("{}<{}", self.carrier.get(i), self.carrier.get(j)))
            .collect();
        write!(f, "{} [{}]", self.carrier, covers.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(elements: &[&str], pairs: &[(&str, &str)]) -> Relation {
        let c = FinSet::of(elements);
        Relation::new(
            c,
            pairs
                .iter()
                .map(|(a, b)| (Symbol::new(*a).unwrap(), Symbol::new(*b).unwrap())),
        )
        .unwrap()
    }

    #[test]
    fn chain_is_natural() {
        let r = Poset::chain(3).relation();
        let c = check_order(&r);
        assert!(c.natural && c.partial && c.preorder);
    }

    #[test]
    fn diamond_is_partial_not_natural() {
        let c = check_order(&Poset::diamond().relation());
        assert!(c.partial);
        assert!(!c.natural);
        assert!(c.report.passed());
    }

    #[test]
    fn missing_transitivity_has_triple_witness() {
        let r = rel(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")],
        );
        let c = check_order(&r);
        assert!(!c.preorder);
        assert_eq!(
            c.report.get("order.transitive").unwrap().witness.as_deref(),
            Some("(a,b,c)")
        );
        assert!(matches!(
            Poset::from_relation(r),
            Err(Error::NotPartialOrder(_))
        ));
    }

    #[test]
    fn labeled_poset_counts() {
        // Known counts of labeled posets: 1, 1, 3, 19, 219, 4231.
        let counts: Vec<usize> = (0..=4).map(|n| Poset::all_labeled(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 3, 19, 219]);
    }

    #[test]
    fn powerset_order() {
        let p = Poset::powerset(&FinSet::of(&["a", "b"])).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.carrier().get(p.min().unwrap()).as_str(), "{}");
        assert_eq!(p.carrier().get(p.max().unwrap()).as_str(), "{a,b}");
    }

    #[test]
    fn maximal_chains_of_diamond() {
        let d = Poset::diamond();
        assert_eq!(d.maximal_chains().len(), 2);
        assert_eq!(d.chains().len(), 1 + 4 + 5 + 2);
    }
}

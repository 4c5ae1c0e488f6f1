use std::collections::BTreeSet;

use rayon::prelude::*;

use super::base::{check_group, cyclic_mask, FinGroup};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{FinMap, FinSet, Mask, OpTable, Partition, Symbol};

/// Largest order for scans over every subset of a group.
pub const SUBSET_SCAN_GUARD: usize = 12;

/// A subset of `parent` closed under products and inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup<'g> {
    parent: &'g FinGroup,
    mask: Mask,
}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g FinGroup {
        self.parent
    }

    pub fn mask(&self) -> Mask {
        self.mask
    }

    pub fn members(&self) -> FinSet {
        self.parent.carrier().subset(self.mask)
    }

    pub fn len(&self) -> usize {
        self.mask.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: usize) -> bool {
        self.mask.contains(a)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup<'_>) -> bool {
        self.mask.is_subset(other.mask)
    }

    pub fn as_group(&self) -> FinGroup {
        self.parent.restrict(self.mask).expect("closed subset")
    }

    pub fn token(&self) -> Symbol {
        self.parent.carrier().subset_token(self.mask)
    }

    pub fn whole(parent: &'g FinGroup) -> Self {
        Subgroup {
            parent,
            mask: parent.full(),
        }
    }

    pub fn unit(parent: &'g FinGroup) -> Self {
        Subgroup {
            parent,
            mask: Mask::singleton(parent.unit()),
        }
    }

    pub(crate) fn trusted(parent: &'g FinGroup, mask: Mask) -> Self {
        Subgroup { parent, mask }
    }
}

/// The three subgroup criteria on a nonempty subset: `H` is a group under
/// the restricted operation; `HH⁻¹ ⊆ H`; `HH ⊆ H` and `H⁻¹ ⊆ H`.
pub fn subgroup_criteria(g: &FinGroup, h: Mask) -> [bool; 3] {
    if h.is_empty() {
        return [false; 3];
    }
    let idx: Vec<usize> = h.iter().collect();
    let closed = idx
        .iter()
        .all(|&a| idx.iter().all(|&b| h.contains(g.op(a, b))));
    let first = closed && {
        let k = idx.len();
        let pos = |x: usize| idx.iter().position(|&y| y == x).expect("closed");
        let t = OpTable::from_fn(g.carrier().subset(h), |i, j| pos(g.op(idx[i], idx[j])));
        check_group(t).is_ok() && k > 0
    };
    let second = g.product_set(h, g.inverse_set(h)).is_subset(h);
    let third = g.product_set(h, h).is_subset(h) && g.inverse_set(h).is_subset(h);
    [first, second, third]
}

fn quotient_witness(g: &FinGroup, h: Mask) -> Option<(usize, usize)> {
    h.iter()
        .flat_map(|a| h.iter().map(move |b| (a, b)))
        .find(|&(a, b)| !h.contains(g.op(a, g.inv(b))))
}

/// Validates `h` as a subgroup of `g`. All three criteria are evaluated and
/// must agree.
pub fn subgroup_check<'g>(g: &'g FinGroup, h: &FinSet) -> Result<Subgroup<'g>> {
    let m = g.carrier().mask_of(h)?;
    subgroup_of_mask(g, m)
}

pub fn subgroup_of_mask(g: &FinGroup, m: Mask) -> Result<Subgroup<'_>> {
    if m.is_empty() {
        return Err(Error::EmptySubset);
    }
    let c = subgroup_criteria(g, m);
    if c[0] != c[1] || c[1] != c[2] {
        return Err(Error::Invalid(format!(
            "subgroup criteria disagree on {}: {c:?}",
            g.carrier().subset_token(m)
        )));
    }
    match quotient_witness(g, m) {
        None => Ok(Subgroup { parent: g, mask: m }),
        Some((a, b)) => Err(Error::NotSubgroup(format!(
            "({},{}): {}·{}⁻¹ = {} is outside",
            g.name(a),
            g.name(b),
            g.name(a),
            g.name(b),
            g.name(g.op(a, g.inv(b)))
        ))),
    }
}

/// `⟨a⟩ = {a↑x}`.
pub fn cyclic_subgroup(g: &FinGroup, a: usize) -> Subgroup<'_> {
    Subgroup {
        parent: g,
        mask: cyclic_mask(g, a),
    }
}

/// The subgroup generated by a subset.
pub fn generated_subgroup(g: &FinGroup, a: Mask) -> Subgroup<'_> {
    Subgroup {
        parent: g,
        mask: g.closure(a),
    }
}

/// Every subgroup, in mask order, found by adjoining one element at a time
/// starting from `{e}`.
pub fn all_subgroups(g: &FinGroup) -> Vec<Subgroup<'_>> {
    let mut seen: BTreeSet<Mask> = BTreeSet::new();
    let mut frontier = vec![Mask::singleton(g.unit())];
    seen.insert(frontier[0]);
    while let Some(h) = frontier.pop() {
        for x in 0..g.len() {
            if !h.contains(x) {
                let k = g.closure(h.insert(x));
                if seen.insert(k) {
                    frontier.push(k);
                }
            }
        }
    }
    seen.into_iter().map(|mask| Subgroup { parent: g, mask }).collect()
}

/// Criteria agreement over every nonempty subset.
pub fn subgroup_criteria_laws(g: &FinGroup) -> Result<LawReport> {
    let n = g.len();
    if n > SUBSET_SCAN_GUARD {
        return Err(Error::TooLarge {
            what: "group order for subset scan",
            size: n,
            bound: SUBSET_SCAN_GUARD,
        });
    }
    let disagreements: Vec<Mask> = (1u64..(1u64 << n))
        .into_par_iter()
        .map(Mask)
        .filter(|&m| {
            let c = subgroup_criteria(g, m);
            c[0] != c[1] || c[1] != c[2]
        })
        .collect();
    let mut r = LawReport::new("subgroup-criteria");
    r.pass_many("group.subgroup.criteria_agree", (1u64 << n) - 1 - disagreements.len() as u64);
    for m in disagreements {
        r.check("group.subgroup.criteria_agree", false, || {
            g.carrier().subset_token(m).to_string()
        });
    }
    let found: BTreeSet<Mask> = all_subgroups(g).iter().map(Subgroup::mask).collect();
    let scanned: BTreeSet<Mask> = (1u64..(1u64 << n))
        .map(Mask)
        .filter(|&m| subgroup_criteria(g, m)[1])
        .collect();
    r.check("group.subgroup.enumeration", found == scanned, || {
        format!("{} found, {} by scan", found.len(), scanned.len())
    });
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `Hx = {h·x}`.
    Right,
    /// `xH = {x·h}`.
    Left,
}

pub fn coset(h: &Subgroup<'_>, x: usize, side: Side) -> Mask {
    let g = h.parent;
    match side {
        Side::Right => g.translate(g.unit(), h.mask, x),
        Side::Left => g.translate(x, h.mask, g.unit()),
    }
}

fn coset_masks(h: &Subgroup<'_>, side: Side) -> Vec<Mask> {
    let set: BTreeSet<Mask> = (0..h.parent.len()).map(|x| coset(h, x, side)).collect();
    set.into_iter().collect()
}

/// The right or left cosets of `h` as a partition of the parent.
pub fn cosets(h: &Subgroup<'_>, side: Side) -> Result<Partition> {
    let g = h.parent;
    let blocks = coset_masks(h, side)
        .into_iter()
        .map(|m| g.carrier().subset(m))
        .collect();
    Partition::new(g.carrier().clone(), blocks)
}

/// Partition, translation and counting facts for both sides.
pub fn coset_laws(h: &Subgroup<'_>) -> LawReport {
    let g = h.parent;
    let n = g.len();
    let mut r = LawReport::new("cosets");
    let tok = |m: Mask| g.carrier().subset_token(m).to_string();
    for side in [Side::Right, Side::Left] {
        let blocks = coset_masks(h, side);
        let disjoint = blocks
            .iter()
            .enumerate()
            .all(|(i, &a)| blocks[i + 1..].iter().all(|&b| !a.meets(b)));
        let cover = blocks.iter().fold(Mask::EMPTY, |a, &b| a.union(b)) == g.full();
        r.check("group.coset.partition", disjoint && cover, || format!("{side:?}"));
        r.check("group.coset.contains_subgroup", blocks.contains(&h.mask), || {
            format!("{side:?}")
        });
        for x in 0..n {
            let translate: Vec<usize> = h
                .mask
                .iter()
                .map(|a| match side {
                    Side::Right => g.op(a, x),
                    Side::Left => g.op(x, a),
                })
                .collect();
            let image = translate.iter().fold(Mask::EMPTY, |m, &a| m.insert(a));
            r.check(
                "group.coset.translation_bijective",
                image == coset(h, x, side) && image.len() == h.len(),
                || format!("{side:?} {}", g.name(x)),
            );
            r.check(
                "group.coset.member",
                coset(h, x, side).contains(x),
                || format!("{side:?} {}", g.name(x)),
            );
        }
        r.check(
            "group.coset.lagrange",
            n.is_multiple_of(h.len()) && blocks.len() * h.len() == n,
            || format!("{side:?} {}", tok(h.mask)),
        );
    }
    for a in 0..n {
        for x in 0..n {
            let related = (0..n).any(|k| h.contains(k) && g.op(k, x) == a);
            r.check(
                "group.coset.class_relation",
                related == coset(h, x, Side::Right).contains(a)
                    && related == h.contains(g.op(a, g.inv(x))),
                || format!("({},{})", g.name(a), g.name(x)),
            );
        }
    }
    r.check(
        "group.coset.sides_equinumerous",
        coset_masks(h, Side::Right).len() == coset_masks(h, Side::Left).len(),
        || tok(h.mask),
    );
    r
}

/// The normality criteria `xN = Nx`, `xNx⁻¹ = N` and `xNx⁻¹ ⊆ N` for all
/// `x`.
pub fn normality_criteria(n: &Subgroup<'_>) -> [bool; 3] {
    let g = n.parent;
    let m = n.mask;
    let xs = 0..g.len();
    [
        xs.clone()
            .all(|x| g.translate(x, m, g.unit()) == g.translate(g.unit(), m, x)),
        xs.clone().all(|x| g.translate(x, m, g.inv(x)) == m),
        xs.clone().all(|x| g.translate(x, m, g.inv(x)).is_subset(m)),
    ]
}

fn normality_witness(n: &Subgroup<'_>) -> Option<(usize, usize)> {
    let g = n.parent;
    (0..g.len())
        .flat_map(|x| n.mask.iter().map(move |a| (x, a)))
        .find(|&(x, a)| !n.contains(g.op(g.op(x, a), g.inv(x))))
}

pub fn is_normal(n: &Subgroup<'_>) -> bool {
    normality_criteria(n)[2]
}

pub fn normal_subgroups(g: &FinGroup) -> Vec<Subgroup<'_>> {
    all_subgroups(g).into_iter().filter(is_normal).collect()
}

/// Agreement of the three normality criteria on every subgroup.
pub fn normality_laws(g: &FinGroup) -> LawReport {
    let mut r = LawReport::new("normality");
    for h in all_subgroups(g) {
        let c = normality_criteria(&h);
        r.check(
            "group.normal.criteria_agree",
            c[0] == c[1] && c[1] == c[2],
            || format!("{} {c:?}", h.token()),
        );
        if g.is_abelian() {
            r.check("group.normal.abelian", c[2], || h.token().to_string());
        }
    }
    r
}

/// `G/N` on right cosets, named by their subset tokens.
#[derive(Clone, Debug)]
pub struct Quotient<'g> {
    pub normal: Subgroup<'g>,
    pub group: FinGroup,
    /// `x ↦ Nx`.
    pub projection: FinMap,
}

/// Representatives `x ~ x'`, `y ~ y'` with `N(xy) ≠ N(x'y')`, if any.
fn representative_witness(h: &Subgroup<'_>) -> Option<[usize; 4]> {
    let g = h.parent;
    let n = g.len();
    let class: Vec<Mask> = (0..n).map(|x| coset(h, x, Side::Right)).collect();
    for x in 0..n {
        for x2 in class[x].iter() {
            for y in 0..n {
                for y2 in class[y].iter() {
                    if class[g.op(x, y)] != class[g.op(x2, y2)] {
                        return Some([x, x2, y, y2]);
                    }
                }
            }
        }
    }
    None
}

pub fn quotient<'g>(n: &Subgroup<'g>) -> Result<Quotient<'g>> {
    let g = n.parent;
    if let Some((x, a)) = normality_witness(n) {
        return Err(Error::NotNormal(format!(
            "{}·{}·{}⁻¹ = {}",
            g.name(x),
            g.name(a),
            g.name(x),
            g.name(g.op(g.op(x, a), g.inv(x)))
        )));
    }
    if let Some([x, x2, y, y2]) = representative_witness(n) {
        return Err(Error::IllDefinedQuotient(format!(
            "{}~{}, {}~{}",
            g.name(x),
            g.name(x2),
            g.name(y),
            g.name(y2)
        )));
    }
    let blocks = coset_masks(n, Side::Right);
    let tokens: Vec<Symbol> = blocks.iter().map(|&m| g.carrier().subset_token(m)).collect();
    let carrier = FinSet::new(tokens.iter().cloned())?;
    let pos: Vec<usize> = tokens
        .iter()
        .map(|t| carrier.index_of(t).expect("member"))
        .collect();
    let class_of: Vec<usize> = (0..g.len())
        .map(|x| pos[blocks.iter().position(|b| b.contains(x)).expect("cover")])
        .collect();
    let rep: Vec<usize> = {
        let mut rep = vec![0; blocks.len()];
        for (b, &m) in blocks.iter().enumerate() {
            rep[pos[b]] = m.iter().next().expect("nonempty");
        }
        rep
    };
    let table = OpTable::from_fn(carrier.clone(), |i, j| class_of[g.op(rep[i], rep[j])]);
    let group = check_group(table)?;
    let projection = FinMap::from_fn(g.carrier().clone(), carrier, |x| class_of[x]);
    Ok(Quotient {
        normal: *n,
        group,
        projection,
    })
}

/// Well-definedness against normality, and the quotient facts, over every
/// subgroup.
pub fn quotient_laws(g: &FinGroup) -> LawReport {
    let mut r = LawReport::new("quotient");
    for h in all_subgroups(g) {
        let w = || h.token().to_string();
        let well_defined = representative_witness(&h).is_none();
        r.check("group.quotient.well_defined_iff_normal", well_defined == is_normal(&h), w);
        let Ok(q) = quotient(&h) else { continue };
        r.check("group.quotient.order", q.group.len() * h.len() == g.len(), w);
        let p = &q.projection;
        let hom = (0..g.len()).all(|x| {
            (0..g.len()).all(|y| p.at(g.op(x, y)) == q.group.op(p.at(x), p.at(y)))
        });
        r.check("group.quotient.projection_hom", hom && p.classify().onto, w);
        if g.is_abelian() {
            r.check("group.quotient.abelian_inherits", q.group.is_abelian(), w);
        }
        if h.len() == 1 {
            r.check("group.quotient.trivial", hom && p.classify().bijective, w);
        }
        if h.len() == g.len() {
            r.check("group.quotient.trivial", q.group.len() == 1, w);
        }
    }
    r
}

/// `[a,b] = (a·b)·(a⁻¹·b⁻¹)`.
pub fn commutator(g: &FinGroup, a: usize, b: usize) -> usize {
    g.op(g.op(a, b), g.op(g.inv(a), g.inv(b)))
}

pub fn commutator_symbol(g: &FinGroup, a: &Symbol, b: &Symbol) -> Result<Symbol> {
    Ok(g.name(commutator(g, g.index(a)?, g.index(b)?)).clone())
}

/// The elements `a` for which `x ↦ [a,x]` is constantly `e`.
pub fn center(g: &FinGroup) -> Subgroup<'_> {
    let mask = (0..g.len())
        .filter(|&a| (0..g.len()).all(|x| commutator(g, a, x) == g.unit()))
        .fold(Mask::EMPTY, Mask::insert);
    Subgroup { parent: g, mask }
}

fn commutator_set(g: &FinGroup) -> Mask {
    let mut m = Mask::EMPTY;
    for a in 0..g.len() {
        for b in 0..g.len() {
            m = m.insert(commutator(g, a, b));
        }
    }
    m
}

/// Product closure of the commutators, and its inverse closure.
fn commutant_closures(g: &FinGroup) -> (Mask, Mask) {
    let mut cur = commutator_set(g);
    loop {
        let next = cur.union(g.product_set(cur, cur));
        if next == cur {
            break;
        }
        cur = next;
    }
    (cur, cur.union(g.inverse_set(cur)))
}

/// `[G,G]`: the commutators closed under products.
pub fn commutant(g: &FinGroup) -> Subgroup<'_> {
    let (mask, _) = commutant_closures(g);
    Subgroup { parent: g, mask }
}

/// Center and commutant facts, including minimality of the commutant among
/// normal subgroups with abelian quotient.
pub fn commutator_laws(g: &FinGroup) -> LawReport {
    let mut r = LawReport::new("commutators");
    let n = g.len();
    for a in 0..n {
        for b in 0..n {
            r.check(
                "group.commutator.inverse",
                g.inv(commutator(g, a, b)) == commutator(g, b, a),
                || format!("({},{})", g.name(a), g.name(b)),
            );
        }
    }
    let z = center(g);
    r.check("group.center.subgroup", subgroup_criteria(g, z.mask)[1], || {
        z.token().to_string()
    });
    for h in all_subgroups(g) {
        if h.mask.is_subset(z.mask) {
            r.check("group.center.central_normal", is_normal(&h), || h.token().to_string());
        }
    }
    let (products, inverses) = commutant_closures(g);
    let c = commutant(g);
    r.check("group.commutant.inverse_no_growth", products == inverses, || {
        c.token().to_string()
    });
    r.check(
        "group.commutant.normal",
        subgroup_criteria(g, c.mask)[1] && is_normal(&c),
        || c.token().to_string(),
    );
    for nn in normal_subgroups(g) {
        r.absorb(abelianization_check(&nn).expect("normal"));
    }
    r
}

/// `G/[G,G]` is abelian, and `G/N` is abelian iff `[G,G] ⊆ N`.
pub fn abelianization_check(nn: &Subgroup<'_>) -> Result<LawReport> {
    let g = nn.parent;
    let mut r = LawReport::new("abelianization");
    let c = commutant(g);
    let ab = quotient(&c)?;
    r.check("group.commutant.abelian_quotient", ab.group.is_abelian(), || {
        c.token().to_string()
    });
    let q = quotient(nn)?;
    r.check(
        "group.commutant.minimal",
        q.group.is_abelian() == c.mask.is_subset(nn.mask),
        || nn.token().to_string(),
    );
    Ok(r)
}

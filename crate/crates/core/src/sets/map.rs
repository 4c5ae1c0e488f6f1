use std::fmt;

use serde::Serialize;

use super::{Family, FinSet, Mask, SelectionRule, Symbol};
use crate::error::{Error, Result};
use crate::report::LawReport;

/// A total map between finite sets.
///
/// Two maps are equal when they have the same domain, the same codomain and
/// the same assignment.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinMap {
    dom: FinSet,
    cod: FinSet,
    table: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub monic: bool,
    pub onto: bool,
    pub bijective: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CompositionMode {
    /// `f.cod` must equal `g.dom`.
    #[default]
    Strict,
    /// Compose on the part of `f`'s domain that lands in `g.dom`.
    Restricting,
}

impl FinMap {
    /// Builds a map from `(x, f(x))` pairs. Every element of `dom` must be
    /// assigned exactly once and every value must lie in `cod`.
    pub fn new(
        dom: FinSet,
        cod: FinSet,
        pairs: impl IntoIterator<Item = (Symbol, Symbol)>,
    ) -> Result<Self> {
        let mut table = vec![usize::MAX; dom.len()];
        for (x, y) in pairs {
            let i = dom.require(&x)?;
            let j = cod.require(&y)?;
            if table[i] != usize::MAX {
                return Err(Error::Duplicate(format!("assignment for {x}")));
            }
            table[i] = j;
        }
        if let Some(i) = table.iter().position(|&j| j == usize::MAX) {
            return Err(Error::NotTotal(dom.get(i).to_string()));
        }
        Ok(FinMap { dom, cod, table })
    }

    /// Builds a map from string pairs; test and fixture helper.
    pub fn of(dom: &FinSet, cod: &FinSet, pairs: &[(&str, &str)]) -> Result<Self> {
        let pairs = pairs
            .iter()
            .map(|(x, y)| Ok((Symbol::new(*x)?, Symbol::new(*y)?)))
            .collect::<Result<Vec<_>>>()?;
        FinMap::new(dom.clone(), cod.clone(), pairs)
    }

    /// Builds a map from an index table: element `i` of `dom` goes to
    /// element `table[i]` of `cod`.
    pub fn from_table(dom: FinSet, cod: FinSet, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.len() {
            return Err(Error::NotTotal(format!(
                "table of length {} for domain of size {}",
                table.len(),
                dom.len()
            )));
        }
        if let Some(&j) = table.iter().find(|&&j| j >= cod.len()) {
            return Err(Error::CarrierMismatch(format!("index {j}")));
        }
        Ok(FinMap { dom, cod, table })
    }

    pub fn from_fn(dom: FinSet, cod: FinSet, f: impl Fn(usize) -> usize) -> Self {
        let table: Vec<usize> = (0..dom.len()).map(f).collect();
        debug_assert!(table.iter().all(|&j| j < cod.len()));
        FinMap { dom, cod, table }
    }

    pub fn identity(set: &FinSet) -> Self {
        FinMap {
            dom: set.clone(),
            cod: set.clone(),
            table: (0..set.len()).collect(),
        }
    }

    pub fn constant(dom: &FinSet, cod: &FinSet, value: &Symbol) -> Result<Self> {
        let j = cod.require(value)?;
        Ok(FinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            table: vec![j; dom.len()],
        })
    }

    /// The inclusion of `sub` into `sup`.
    pub fn inclusion(sub: &FinSet, sup: &FinSet) -> Result<Self> {
        let table = sub.iter().map(|x| sup.require(x)).collect::<Result<_>>()?;
        Ok(FinMap {
            dom: sub.clone(),
            cod: sup.clone(),
            table,
        })
    }

    /// Every map from `dom` to `cod`, in lexicographic table order.
    pub fn all<'a>(dom: &'a FinSet, cod: &'a FinSet) -> impl Iterator<Item = FinMap> + 'a {
        let n = dom.len();
        let m = cod.len();
        let total = if n == 0 {
            1
        } else if m == 0 {
            0
        } else {
            m.checked_pow(n as u32).expect("map space too large")
        };
        (0..total).map(move |mut code| {
            let mut table = vec![0; n];
            for slot in table.iter_mut().rev() {
                *slot = code % m.max(1);
                code /= m.max(1);
            }
            FinMap {
                dom: dom.clone(),
                cod: cod.clone(),
                table,
            }
        })
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn at(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn apply(&self, x: &Symbol) -> Result<&Symbol> {
        let i = self.dom.require(x)?;
        Ok(self.cod.get(self.table[i]))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Symbol, &Symbol)> {
        self.dom
            .iter()
            .zip(self.table.iter().map(|&j| self.cod.get(j)))
    }

    /// `g ∘ f` in strict mode.
    pub fn compose(g: &FinMap, f: &FinMap) -> Result<FinMap> {
        FinMap::compose_with(g, f, CompositionMode::Strict)
    }

    pub fn compose_with(g: &FinMap, f: &FinMap, mode: CompositionMode) -> Result<FinMap> {
        match mode {
            CompositionMode::Strict => {
                if f.cod != g.dom {
                    return Err(Error::CompositionMismatch(
                        f.cod.to_string(),
                        g.dom.to_string(),
                    ));
                }
                Ok(FinMap {
                    dom: f.dom.clone(),
                    cod: g.cod.clone(),
                    table: f.table.iter().map(|&j| g.table[j]).collect(),
                })
            }
            CompositionMode::Restricting => {
                let kept: Vec<(usize, usize)> = f
                    .table
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &j)| g.dom.index_of(f.cod.get(j)).map(|k| (i, g.table[k])))
                    .collect();
                let dom = FinSet::collect(kept.iter().map(|&(i, _)| f.dom.get(i).clone()));
                Ok(FinMap {
                    dom,
                    cod: g.cod.clone(),
                    table: kept.into_iter().map(|(_, v)| v).collect(),
                })
            }
        }
    }

    pub fn classify(&self) -> Classification {
        let mut counts = vec![0usize; self.cod.len()];
        for &j in &self.table {
            counts[j] += 1;
        }
        let monic = counts.iter().all(|&c| c <= 1);
        let onto = counts.iter().all(|&c| c >= 1);
        Classification {
            monic,
            onto,
            bijective: monic && onto,
        }
    }

    /// A left inverse `l` with `l ∘ f = id`. Values off the image go to the
    /// least element of the domain.
    pub fn left_inverse(&self) -> Result<FinMap> {
        if let Some(w) = self.non_monic_witness() {
            return Err(Error::NotMonic(w));
        }
        if self.dom.is_empty() && !self.cod.is_empty() {
            return Err(Error::Invalid(
                "a map out of the empty set has no left inverse into it".into(),
            ));
        }
        let mut table = vec![0usize; self.cod.len()];
        for (i, &j) in self.table.iter().enumerate() {
            table[j] = i;
        }
        Ok(FinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            table,
        })
    }

    /// A right inverse `r` with `f ∘ r = id`, choosing from each fiber by
    /// the lexicographic selection rule.
    pub fn right_inverse(&self) -> Result<FinMap> {
        self.right_inverse_with(SelectionRule::LexLeast)
    }

    pub fn right_inverse_with(&self, rule: SelectionRule) -> Result<FinMap> {
        let mut table = Vec::with_capacity(self.cod.len());
        for j in 0..self.cod.len() {
            let fiber = self.fiber_mask(j);
            match rule.pick(fiber) {
                Some(i) => table.push(i),
                None => return Err(Error::NotOnto(self.cod.get(j).to_string())),
            }
        }
        Ok(FinMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            table,
        })
    }

    pub fn inverse(&self) -> Result<FinMap> {
        if !self.classify().bijective {
            return Err(Error::NotBijective);
        }
        self.left_inverse()
    }

    fn non_monic_witness(&self) -> Option<String> {
        let mut seen = vec![usize::MAX; self.cod.len()];
        for (i, &j) in self.table.iter().enumerate() {
            if seen[j] != usize::MAX {
                return Some(format!(
                    "{} and {} both map to {}",
                    self.dom.get(seen[j]),
                    self.dom.get(i),
                    self.cod.get(j)
                ));
            }
            seen[j] = i;
        }
        None
    }

    pub fn image(&self, a: Mask) -> Mask {
        a.iter()
            .fold(Mask::EMPTY, |acc, i| acc.insert(self.table[i]))
    }

    pub fn preimage(&self, b: Mask) -> Mask {
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &j)| b.contains(j))
            .fold(Mask::EMPTY, |acc, (i, _)| acc.insert(i))
    }

    pub fn image_set(&self, a: &FinSet) -> Result<FinSet> {
        Ok(self.cod.subset(self.image(self.dom.mask_of(a)?)))
    }

    pub fn preimage_set(&self, b: &FinSet) -> Result<FinSet> {
        Ok(self.dom.subset(self.preimage(self.cod.mask_of(b)?)))
    }

    pub fn range_mask(&self) -> Mask {
        self.image(self.dom.full_mask())
    }

    pub fn fiber_mask(&self, j: usize) -> Mask {
        self.preimage(Mask::singleton(j))
    }

    /// `{x : f(x) = z}`.
    pub fn fiber(&self, z: &Symbol) -> Result<FinSet> {
        let j = self.cod.require(z)?;
        Ok(self.dom.subset(self.fiber_mask(j)))
    }

    /// The nonempty fibers, as a partition of the domain.
    pub fn fiber_partition(&self) -> Partition {
        let blocks = (0..self.cod.len())
            .map(|j| self.fiber_mask(j))
            .filter(|m| !m.is_empty())
            .map(|m| self.dom.subset(m))
            .collect();
        Partition::from_blocks_unchecked(self.dom.clone(), blocks)
    }

    /// Restriction to the subset `a` of the domain.
    pub fn restrict(&self, a: Mask) -> FinMap {
        FinMap {
            dom: self.dom.subset(a),
            cod: self.cod.clone(),
            table: a.iter().map(|i| self.table[i]).collect(),
        }
    }

    /// Factors `f` as `immersion ∘ quotient ∘ projection` through its fibers.
    pub fn decompose(&self) -> Decomposition {
        let partition = self.fiber_partition();
        let block_masks: Vec<Mask> = partition
            .blocks()
            .iter()
            .map(|b| self.dom.mask_of(b).expect("block inside domain"))
            .collect();
        let blocks = FinSet::collect(block_masks.iter().map(|&m| self.dom.subset_token(m)));
        let range = self.cod.subset(self.range_mask());
        let block_index = |m: Mask| {
            blocks
                .index_of(&self.dom.subset_token(m))
                .expect("block token present")
        };

        let mut proj = vec![0; self.dom.len()];
        let mut quot = vec![0; blocks.len()];
        for &m in &block_masks {
            let b = block_index(m);
            for i in m.iter() {
                proj[i] = b;
            }
            let first = m.iter().next().expect("blocks are nonempty");
            quot[b] = range
                .index_of(self.cod.get(self.table[first]))
                .expect("value in range");
        }
        Decomposition {
            projection: FinMap::from_table(self.dom.clone(), blocks.clone(), proj)
                .expect("projection table"),
            quotient: FinMap::from_table(blocks, range.clone(), quot).expect("quotient table"),
            immersion: FinMap::inclusion(&range, &self.cod).expect("range inside codomain"),
            partition,
        }
    }
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs().map(|(x, y)| format!("{x}->{y}")).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Blocks of an equivalence relation on a carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    carrier: FinSet,
    blocks: Vec<FinSet>,
}

impl Partition {
    pub fn new(carrier: FinSet, blocks: Vec<FinSet>) -> Result<Self> {
        let mut seen = FinSet::empty();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::EmptyMember("block".into()));
            }
            if !b.is_subset(&carrier) {
                return Err(Error::CarrierMismatch(b.to_string()));
            }
            if let Some(x) = b.iter().find(|x| seen.contains(x)) {
                return Err(Error::Duplicate(x.to_string()));
            }
            seen = seen.union(b);
        }
        if let Some(x) = carrier.iter().find(|x| !seen.contains(x)) {
            return Err(Error::NotCovering(x.to_string()));
        }
        Ok(Partition::from_blocks_unchecked(carrier, blocks))
    }

    pub(crate) fn from_blocks_unchecked(carrier: FinSet, mut blocks: Vec<FinSet>) -> Self {
        blocks.sort();
        Partition { carrier, blocks }
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn blocks(&self) -> &[FinSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: &Symbol) -> Option<&FinSet> {
        self.blocks.iter().find(|b| b.contains(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub projection: FinMap,
    pub quotient: FinMap,
    pub immersion: FinMap,
    pub partition: Partition,
}

impl Decomposition {
    pub fn recompose(&self) -> FinMap {
        let inner = FinMap::compose(&self.quotient, &self.projection).expect("shapes agree");
        FinMap::compose(&self.immersion, &inner).expect("shapes agree")
    }
}

/// Evaluates the image/preimage law set for `f` on subsets `a` of the
/// domain, `b` of the codomain, and a family `x` over either carrier.
pub fn image_calculus(f: &FinMap, a: &FinSet, b: &FinSet, x: &Family) -> Result<LawReport> {
    let am = f.dom().mask_of(a)?;
    let bm = f.cod().mask_of(b)?;
    let mut report = LawReport::new("image-calculus");
    let on_dom = x.carrier() == f.dom();
    let on_cod = x.carrier() == f.cod();
    if !on_dom && !on_cod {
        return Err(Error::CarrierMismatch(format!("family over {}", x.carrier())));
    }
    image_pair_laws(f, am, bm, &mut report);
    if on_dom {
        image_family_laws(f, x.members(), &mut report);
    }
    if on_cod {
        preimage_family_laws(f, x.members(), &mut report);
    }
    Ok(report)
}

pub(crate) fn image_pair_laws(f: &FinMap, a: Mask, b: Mask, report: &mut LawReport) {
    let class = f.classify();
    let fa = f.image(a);
    let pb = f.preimage(b);
    let w = || format!("f={f} A={} B={}", f.dom().subset(a), f.cod().subset(b));
    report.check(
        "core.image.galois",
        fa.is_subset(b) == a.is_subset(pb),
        w,
    );
    let pfa = f.preimage(fa);
    report.check("core.image.preimage_of_image", a.is_subset(pfa), w);
    if class.monic {
        report.check("core.image.preimage_of_image_monic", pfa == a, w);
    }
    let fpb = f.image(pb);
    report.check("core.image.image_of_preimage", fpb.is_subset(b), w);
    if class.onto {
        report.check("core.image.image_of_preimage_onto", fpb == b, w);
    }
    if class.monic && b.is_subset(f.range_mask()) {
        let fibers = b.iter().fold(Mask::EMPTY, |acc, j| acc.union(f.fiber_mask(j)));
        report.check("core.fiber.union_of_fibers", (fa == b) == (a == fibers), w);
    }
    let restricted = f.restrict(a);
    let lhs = f.dom().mask_of(&restricted.dom().subset(restricted.preimage(b)));
    report.check(
        "core.image.restriction_preimage",
        lhs == Ok(a.intersection(pb)),
        w,
    );
}

pub(crate) fn image_family_laws(f: &FinMap, members: &[Mask], report: &mut LawReport) {
    let n = f.dom().len();
    let m = f.cod().len();
    let w = || {
        let parts: Vec<String> = members.iter().map(|&a| f.dom().subset(a).to_string()).collect();
        format!("f={f} X={{{}}}", parts.join(","))
    };
    let union = members.iter().fold(Mask::EMPTY, |acc, &a| acc.union(a));
    let union_of_images = members
        .iter()
        .fold(Mask::EMPTY, |acc, &a| acc.union(f.image(a)));
    report.check("core.image.union", f.image(union) == union_of_images, w);

    let inter = members
        .iter()
        .fold(Mask::full(n), |acc, &a| acc.intersection(a));
    let inter_of_images = members
        .iter()
        .fold(Mask::full(m), |acc, &a| acc.intersection(f.image(a)));
    report.check(
        "core.image.intersection",
        f.image(inter).is_subset(inter_of_images),
        w,
    );
    if f.classify().monic && !members.is_empty() {
        report.check(
            "core.image.intersection_monic",
            f.image(inter) == inter_of_images,
            w,
        );
    }
}

pub(crate) fn preimage_family_laws(f: &FinMap, members: &[Mask], report: &mut LawReport) {
    let n = f.dom().len();
    let m = f.cod().len();
    let w = || {
        let parts: Vec<String> = members.iter().map(|&b| f.cod().subset(b).to_string()).collect();
        format!("f={f} Y={{{}}}", parts.join(","))
    };
    let union = members.iter().fold(Mask::EMPTY, |acc, &b| acc.union(b));
    let union_pre = members
        .iter()
        .fold(Mask::EMPTY, |acc, &b| acc.union(f.preimage(b)));
    report.check("core.preimage.union", f.preimage(union) == union_pre, w);
    let inter = members
        .iter()
        .fold(Mask::full(m), |acc, &b| acc.intersection(b));
    let inter_pre = members
        .iter()
        .fold(Mask::full(n), |acc, &b| acc.intersection(f.preimage(b)));
    report.check(
        "core.preimage.intersection",
        f.preimage(inter) == inter_pre,
        w,
    );
    for &b1 in members {
        for &b2 in members {
            report.check(
                "core.preimage.difference",
                f.preimage(b1.difference(b2)) == f.preimage(b1).difference(f.preimage(b2)),
                || {
                    format!(
                        "f={f} B1={} B2={}",
                        f.cod().subset(b1),
                        f.cod().subset(b2)
                    )
                },
            );
        }
    }
}

/// Checks that `(big_f, big_g)` is a natural pair under `(sa, sb)`:
/// `G(sa(x)) = sb(F(x))` for every `x`.
pub fn natural_pair_check(
    big_f: &FinMap,
    big_g: &FinMap,
    sa: &FinMap,
    sb: &FinMap,
) -> Result<LawReport> {
    if sa.dom() != big_f.dom() || sa.cod() != big_g.dom() {
        return Err(Error::Mismatch("sa must map dom F onto dom G".into()));
    }
    if sb.dom() != big_f.cod() || sb.cod() != big_g.cod() {
        return Err(Error::Mismatch("sb must map cod F into cod G".into()));
    }
    if !sa.classify().onto {
        let missing = (0..sa.cod().len())
            .find(|&j| sa.fiber_mask(j).is_empty())
            .expect("not onto");
        return Err(Error::NotOnto(sa.cod().get(missing).to_string()));
    }
    let mut report = LawReport::new("natural-pair");
    for i in 0..big_f.dom().len() {
        let left = big_g.at(sa.at(i));
        let right = sb.at(big_f.at(i));
        report.check("core.natural_pair.square", left == right, || {
            format!(
                "x={}: G(sa x)={} but sb(F x)={}",
                big_f.dom().get(i),
                big_g.cod().get(left),
                big_g.cod().get(right)
            )
        });
    }
    if big_f.dom().is_empty() {
        report.pass_many("core.natural_pair.square", 0);
    }
    Ok(report)
}

/// Factorization identities: `f = ι∘φ∘π` with `π` onto, `φ` bijective
/// and `ι` monic.
pub fn decompose_laws(f: &FinMap) -> LawReport {
    let d = f.decompose();
    let mut r = LawReport::new("decomposition");
    let w = || f.to_string();
    r.check("core.decompose.recompose", d.recompose() == *f, w);
    r.check("core.decompose.projection_onto", d.projection.classify().onto, w);
    r.check("core.decompose.quotient_bijective", d.quotient.classify().bijective, w);
    r.check("core.decompose.immersion_monic", d.immersion.classify().monic, w);
    r
}

fn sweep_families(carrier: &FinSet) -> Result<Vec<Vec<Mask>>> {
    carrier.check_maskable()?;
    let n = carrier.len();
    if n <= 3 {
        return Ok(Family::all(carrier)?.map(|x| x.members().to_vec()).collect());
    }
    let subsets: Vec<Mask> = Mask::all(n).collect();
    let mut out = vec![Vec::new()];
    for (i, &a) in subsets.iter().enumerate() {
        out.push(vec![a]);
        for &b in &subsets[i + 1..] {
            out.push(vec![a, b]);
        }
    }
    Ok(out)
}

/// The image/preimage law set for `f` over every `A ⊆ dom f`, every
/// `B ⊆ cod f` and every family on either side (families of at most two
/// members once a carrier has more than three points), with the
/// decomposition identities.
pub fn map_sweep(f: &FinMap) -> Result<LawReport> {
    let (n, m) = (f.dom().len(), f.cod().len());
    if n > 10 || m > 10 {
        return Err(Error::TooLarge {
            what: "carrier for an exhaustive map sweep",
            size: n.max(m),
            bound: 10,
        });
    }
    let mut r = LawReport::new("map-sweep");
    for a in Mask::all(n) {
        for b in Mask::all(m) {
            image_pair_laws(f, a, b, &mut r);
        }
    }
    for x in sweep_families(f.dom())? {
        image_family_laws(f, &x, &mut r);
    }
    for y in sweep_families(f.cod())? {
        preimage_family_laws(f, &y, &mut r);
    }
    r.absorb(decompose_laws(f));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> FinSet {
        FinSet::of(&["a", "b", "c"])
    }

    #[test]
    fn identity_composition_is_neutral() {
        let s = abc();
        let t = FinSet::of(&["x", "y"]);
        let f = FinMap::of(&s, &t, &[("a", "x"), ("b", "y"), ("c", "x")]).unwrap();
        assert_eq!(FinMap::compose(&FinMap::identity(&t), &f).unwrap(), f);
        assert_eq!(FinMap::compose(&f, &FinMap::identity(&s)).unwrap(), f);
    }

    #[test]
    fn constant_through_singleton() {
        let ab = FinSet::of(&["a", "b"]);
        let one = FinSet::of(&["1"]);
        let z = FinSet::of(&["z"]);
        let f = FinMap::of(&ab, &one, &[("a", "1"), ("b", "1")]).unwrap();
        let g = FinMap::of(&one, &z, &[("1", "z")]).unwrap();
        let gf = FinMap::compose(&g, &f).unwrap();
        assert_eq!(
            gf,
            FinMap::constant(&ab, &z, &Symbol::new("z").unwrap()).unwrap()
        );
    }

    #[test]
    fn strict_mismatch_errors() {
        let s = abc();
        let t = FinSet::of(&["x"]);
        let f = FinMap::constant(&s, &t, &Symbol::new("x").unwrap()).unwrap();
        assert!(matches!(
            FinMap::compose(&f, &f),
            Err(Error::CompositionMismatch(..))
        ));
    }

    #[test]
    fn restricting_composition_drops_points_outside() {
        let s = abc();
        let t = FinSet::of(&["a", "b", "q"]);
        let f = FinMap::of(&s, &t, &[("a", "a"), ("b", "q"), ("c", "b")]).unwrap();
        let g = FinMap::of(
            &FinSet::of(&["a", "b"]),
            &FinSet::of(&["z"]),
            &[("a", "z"), ("b", "z")],
        )
        .unwrap();
        let gf = FinMap::compose_with(&g, &f, CompositionMode::Restricting).unwrap();
        assert_eq!(gf.dom(), &FinSet::of(&["a", "c"]));
    }

    #[test]
    fn classification_examples() {
        let s = abc();
        let c = FinMap::identity(&s).classify();
        assert!(c.monic && c.onto && c.bijective);
        let ab = FinSet::of(&["a", "b"]);
        let z = FinSet::of(&["z"]);
        let k = FinMap::constant(&ab, &z, &Symbol::new("z").unwrap())
            .unwrap()
            .classify();
        assert!(k.onto && !k.monic && !k.bijective);
    }

    #[test]
    fn inverse_examples() {
        let ab = FinSet::of(&["a", "b"]);
        let swap = FinMap::of(&ab, &ab, &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(swap.inverse().unwrap(), swap);

        let xy = FinSet::of(&["x", "y"]);
        let f = FinMap::of(&FinSet::of(&["a"]), &xy, &[("a", "x")]).unwrap();
        let l = f.left_inverse().unwrap();
        assert_eq!(l.apply(&Symbol::new("y").unwrap()).unwrap().as_str(), "a");
        assert_eq!(FinMap::compose(&l, &f).unwrap(), FinMap::identity(f.dom()));

        let z = FinSet::of(&["z"]);
        let g = FinMap::constant(&ab, &z, &Symbol::new("z").unwrap()).unwrap();
        let r = g.right_inverse().unwrap();
        assert_eq!(r.apply(&Symbol::new("z").unwrap()).unwrap().as_str(), "a");
        assert_eq!(FinMap::compose(&g, &r).unwrap(), FinMap::identity(&z));

        assert!(matches!(g.left_inverse(), Err(Error::NotMonic(_))));
        assert!(matches!(f.right_inverse(), Err(Error::NotOnto(_))));
        assert!(matches!(f.inverse(), Err(Error::NotBijective)));
    }

    #[test]
    fn collapse_preimage_of_image_grows() {
        let ab = FinSet::of(&["a", "b"]);
        let z = FinSet::of(&["z"]);
        let f = FinMap::constant(&ab, &z, &Symbol::new("z").unwrap()).unwrap();
        let fa = f.image_set(&FinSet::of(&["a"])).unwrap();
        assert_eq!(f.preimage_set(&fa).unwrap(), ab);
    }

    #[test]
    fn fibers_of_identity_and_constant() {
        let s = abc();
        let id = FinMap::identity(&s);
        assert!(id.fiber_partition().blocks().iter().all(|b| b.len() == 1));
        let z = FinSet::of(&["z"]);
        let k = FinMap::constant(&s, &z, &Symbol::new("z").unwrap()).unwrap();
        assert_eq!(k.fiber_partition().blocks(), std::slice::from_ref(&s));
        assert!(matches!(
            k.fiber(&Symbol::new("q").unwrap()),
            Err(Error::CarrierMismatch(_))
        ));
    }

    #[test]
    fn decomposition_shapes() {
        let s = abc();
        let id = FinMap::identity(&s).decompose();
        assert!(id.partition.blocks().iter().all(|b| b.len() == 1));
        assert_eq!(id.immersion, FinMap::identity(&s));
        let z = FinSet::of(&["y", "z"]);
        let k = FinMap::constant(&s, &z, &Symbol::new("z").unwrap()).unwrap();
        let d = k.decompose();
        assert_eq!(d.quotient.dom().len(), 1);
        assert!(d.quotient.classify().bijective);
        assert_eq!(d.recompose(), k);
    }

    #[test]
    fn natural_pair_examples() {
        let s = abc();
        let id = FinMap::identity(&s);
        assert!(natural_pair_check(&id, &id, &id, &id).unwrap().passed());

        let perturbed = FinMap::of(&s, &s, &[("a", "b"), ("b", "b"), ("c", "c")]).unwrap();
        let r = natural_pair_check(&id, &perturbed, &id, &id).unwrap();
        assert!(!r.passed());
        let w = r.get("core.natural_pair.square").unwrap().witness.clone().unwrap();
        assert!(w.starts_with("x=a"));

        let not_onto = FinMap::of(&s, &s, &[("a", "a"), ("b", "a"), ("c", "c")]).unwrap();
        assert!(matches!(
            natural_pair_check(&id, &id, &not_onto, &id),
            Err(Error::NotOnto(_))
        ));
    }

    #[test]
    fn enumerates_all_maps() {
        let s = abc();
        let t = FinSet::of(&["x", "y", "z"]);
        assert_eq!(FinMap::all(&s, &t).count(), 27);
        assert_eq!(FinMap::all(&FinSet::empty(), &t).count(), 1);
        assert_eq!(FinMap::all(&s, &FinSet::empty()).count(), 0);
    }
}

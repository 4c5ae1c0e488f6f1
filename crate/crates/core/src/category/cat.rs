use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::FinGroup;
use crate::order::Poset;
use crate::report::LawReport;
use crate::sets::{pair_symbol, split_pair, FinMap, FinSet, OpTable, Symbol};

pub(crate) const NONE: usize = usize::MAX;

/// Largest number of arrows accepted by [`set_category`].
pub const SET_CAT_GUARD: usize = 1024;

/// A candidate category described by names. Nothing is assumed about it
/// until [`check_category`] or [`FinCat::new`] has looked at it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatData {
    pub objects: FinSet,
    /// `(name, src, tgt)`
    pub arrows: Vec<(Symbol, Symbol, Symbol)>,
    /// `(object, identity arrow)`
    pub identity: Vec<(Symbol, Symbol)>,
    /// `(g, f, g∘f)` for every composable pair
    pub comp: Vec<(Symbol, Symbol, Symbol)>,
}

impl CatData {
    pub fn of(
        objects: &[&str],
        arrows: &[(&str, &str, &str)],
        identity: &[(&str, &str)],
        comp: &[(&str, &str, &str)],
    ) -> Result<CatData> {
        let sym = |s: &str| Symbol::new(s);
        Ok(CatData {
            objects: FinSet::from_names(objects.iter().copied())?,
            arrows: arrows
                .iter()
                .map(|(a, s, t)| Ok((sym(a)?, sym(s)?, sym(t)?)))
                .collect::<Result<_>>()?,
            identity: identity
                .iter()
                .map(|(x, a)| Ok((sym(x)?, sym(a)?)))
                .collect::<Result<_>>()?,
            comp: comp
                .iter()
                .map(|(g, f, h)| Ok((sym(g)?, sym(f)?, sym(h)?)))
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Default)]
struct Tally {
    instances: u64,
    failures: u64,
    witness: Option<String>,
}

impl Tally {
    fn see(&mut self, holds: bool, witness: impl FnOnce() -> String) {
        self.instances += 1;
        if !holds {
            self.failures += 1;
            let w = witness();
            if self.witness.as_ref().is_none_or(|old| w < *old) {
                self.witness = Some(w);
            }
        }
    }

    fn flush(self, r: &mut LawReport, law: &str) {
        r.record(law, self.instances, self.failures, self.witness);
    }
}

/// Checks endpoints, totality of composition on composable pairs, the unit
/// laws and associativity. Distinct arrows that no composition can tell
/// apart are reported in a note.
///
/// With `require_unit` off and no identities declared, the data is checked
/// as an associative category.
pub fn check_category(data: &CatData, require_unit: bool) -> LawReport {
    let mut r = LawReport::new("category");
    let n = data.arrows.len();
    let mut index: HashMap<&Symbol, usize> = HashMap::new();
    let mut src = vec![NONE; n];
    let mut tgt = vec![NONE; n];
    for (k, (name, s, t)) in data.arrows.iter().enumerate() {
        let fresh = index.insert(name, k).is_none();
        r.check("cat.arrows.distinct", fresh, || name.to_string());
        let (si, ti) = (data.objects.index_of(s), data.objects.index_of(t));
        r.check("cat.arrows.endpoints", si.is_some() && ti.is_some(), || {
            name.to_string()
        });
        src[k] = si.unwrap_or(NONE);
        tgt[k] = ti.unwrap_or(NONE);
    }
    let name = |k: usize| data.arrows[k].0.as_str();

    let mut table = vec![NONE; n * n];
    for (g, f, h) in &data.comp {
        let (gi, fi, hi) = (index.get(g), index.get(f), index.get(h));
        let known = r.check("cat.comp.known", gi.is_some() && fi.is_some() && hi.is_some(), || {
            format!("({g},{f})")
        });
        if !known {
            continue;
        }
        let (gi, fi, hi) = (*gi.unwrap(), *fi.unwrap(), *hi.unwrap());
        let composable = src[gi] == tgt[fi] && src[gi] != NONE;
        r.check("cat.comp.domain", composable, || format!("({g},{f})"));
        r.check(
            "cat.comp.endpoints",
            src[hi] == src[fi] && tgt[hi] == tgt[gi],
            || format!("({g},{f})"),
        );
        let slot = &mut table[gi * n + fi];
        r.check("cat.comp.single", *slot == NONE || *slot == hi, || {
            format!("({g},{f})")
        });
        if *slot == NONE {
            *slot = hi;
        }
    }
    let mut total = Tally::default();
    for g in 0..n {
        for f in 0..n {
            if src[g] != NONE && src[g] == tgt[f] {
                total.see(table[g * n + f] != NONE, || format!("({},{})", name(g), name(f)));
            }
        }
    }
    total.flush(&mut r, "cat.comp.total");
    let comp = |g: usize, f: usize| table[g * n + f];

    if require_unit || !data.identity.is_empty() {
        let mut ident = vec![NONE; data.objects.len()];
        for (x, a) in &data.identity {
            let (xi, ai) = (data.objects.index_of(x), index.get(a));
            let ok = match (xi, ai) {
                (Some(xi), Some(&ai)) if src[ai] == xi && tgt[ai] == xi && ident[xi] == NONE => {
                    ident[xi] = ai;
                    true
                }
                _ => false,
            };
            r.check("cat.identity.exists", ok, || format!("{x}:{a}"));
        }
        for (x, &i) in data.objects.iter().zip(&ident) {
            if i == NONE {
                r.check("cat.identity.exists", false, || x.to_string());
            }
        }
        let mut left = Tally::default();
        let mut right = Tally::default();
        for f in 0..n {
            if src[f] == NONE || tgt[f] == NONE {
                continue;
            }
            let (ix, iy) = (ident[src[f]], ident[tgt[f]]);
            if iy != NONE {
                left.see(comp(iy, f) == f, || name(f).to_string());
            }
            if ix != NONE {
                right.see(comp(f, ix) == f, || name(f).to_string());
            }
        }
        left.flush(&mut r, "cat.unit.left");
        right.flush(&mut r, "cat.unit.right");
    } else {
        r.note("no identities declared: checked as an associative category");
    }

    let mut assoc = Tally::default();
    for f in 0..n {
        for g in 0..n {
            let gf = comp(g, f);
            if gf == NONE {
                continue;
            }
            for h in 0..n {
                let hg = comp(h, g);
                if hg == NONE {
                    continue;
                }
                let (a, b) = (comp(h, gf), comp(hg, f));
                assoc.see(a == b && a != NONE, || {
                    format!("({},{},{})", name(h), name(g), name(f))
                });
            }
        }
    }
    assoc.flush(&mut r, "cat.associative");

    for (a, b) in observational_pairs(n, &src, &tgt, &table) {
        r.note(format!(
            "arrows {} and {} are observationally equal",
            name(a),
            name(b)
        ));
    }
    r
}

/// Pairs of distinct parallel arrows with `f∘h = g∘h` and `i∘f = i∘g` for
/// every composable `h`, `i`.
fn observational_pairs(n: usize, src: &[usize], tgt: &[usize], table: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for f in 0..n {
        for g in f + 1..n {
            if src[f] != src[g] || tgt[f] != tgt[g] || src[f] == NONE || tgt[f] == NONE {
                continue;
            }
            let same = (0..n).all(|h| {
                (tgt[h] != src[f] || table[f * n + h] == table[g * n + h])
                    && (src[h] != tgt[f] || table[h * n + f] == table[h * n + g])
            });
            if same {
                out.push((f, g));
            }
        }
    }
    out
}

/// A finite category with named, possibly parallel arrows.
///
/// Objects and arrows are indexed in the lexicographic order of their
/// names, so two categories with the same names and tables compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCat {
    objects: FinSet,
    arrows: FinSet,
    src: Vec<usize>,
    tgt: Vec<usize>,
    ident: Vec<usize>,
    comp: Vec<usize>,
}

impl FinCat {
    pub fn new(data: &CatData) -> Result<FinCat> {
        let report = check_category(data, true);
        if let Some(bad) = report.failures().next() {
            return Err(Error::NotACategory(format!(
                "{} at {}",
                bad.law,
                bad.witness.as_deref().unwrap_or("?")
            )));
        }
        Ok(FinCat::trusted(data))
    }

    /// Builds the tables without checking any law.
    pub(crate) fn trusted(data: &CatData) -> FinCat {
        let objects = data.objects.clone();
        let arrows = FinSet::collect(data.arrows.iter().map(|a| a.0.clone()));
        let n = arrows.len();
        let mut src = vec![NONE; n];
        let mut tgt = vec![NONE; n];
        for (a, s, t) in &data.arrows {
            let k = arrows.index_of(a).expect("arrow name");
            src[k] = objects.index_of(s).expect("source object");
            tgt[k] = objects.index_of(t).expect("target object");
        }
        let mut ident = vec![NONE; objects.len()];
        for (x, a) in &data.identity {
            ident[objects.index_of(x).expect("object")] = arrows.index_of(a).expect("identity");
        }
        let mut comp = vec![NONE; n * n];
        for (g, f, h) in &data.comp {
            let (g, f) = (arrows.index_of(g).expect("g"), arrows.index_of(f).expect("f"));
            comp[g * n + f] = arrows.index_of(h).expect("g∘f");
        }
        FinCat {
            objects,
            arrows,
            src,
            tgt,
            ident,
            comp,
        }
    }

    pub fn objects(&self) -> &FinSet {
        &self.objects
    }

    pub fn arrows(&self) -> &FinSet {
        &self.arrows
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn object(&self, name: &str) -> Result<usize> {
        self.objects
            .index_of_str(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrows
            .index_of_str(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn object_name(&self, x: usize) -> &Symbol {
        self.objects.get(x)
    }

    pub fn arrow_name(&self, f: usize) -> &Symbol {
        self.arrows.get(f)
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.ident[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.ident[self.src[f]] == f
    }

    /// `g∘f`, when `tgt f = src g`.
    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        let h = self.comp[g * self.arrows.len() + f];
        (h != NONE).then_some(h)
    }

    pub(crate) fn comp_unchecked(&self, g: usize, f: usize) -> usize {
        self.comp[g * self.arrows.len() + f]
    }

    /// Arrows `a → b`, in index order.
    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows.len())
            .filter(|&f| self.src[f] == a && self.tgt[f] == b)
            .collect()
    }

    /// At most one arrow between any two objects.
    pub fn is_thin(&self) -> bool {
        let k = self.objects.len();
        let mut seen = vec![false; k * k];
        (0..self.arrows.len()).all(|f| !std::mem::replace(&mut seen[self.src[f] * k + self.tgt[f]], true))
    }

    /// Pairs `(g, f)` with `tgt f = src g`.
    pub fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.arrows.len();
        (0..n).flat_map(move |g| (0..n).filter(move |&f| self.src[g] == self.tgt[f]).map(move |f| (g, f)))
    }

    pub fn data(&self) -> CatData {
        let n = self.arrows.len();
        CatData {
            objects: self.objects.clone(),
            arrows: (0..n)
                .map(|f| {
                    (
                        self.arrows.get(f).clone(),
                        self.objects.get(self.src[f]).clone(),
                        self.objects.get(self.tgt[f]).clone(),
                    )
                })
                .collect(),
            identity: (0..self.objects.len())
                .map(|x| (self.objects.get(x).clone(), self.arrows.get(self.ident[x]).clone()))
                .collect(),
            comp: self
                .composable_pairs()
                .map(|(g, f)| {
                    (
                        self.arrows.get(g).clone(),
                        self.arrows.get(f).clone(),
                        self.arrows.get(self.comp_unchecked(g, f)).clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn check(&self) -> LawReport {
        check_category(&self.data(), true)
    }
}

impl fmt::Debug for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FinCat({} objects, {} arrows)",
            self.objects.len(),
            self.arrows.len()
        )
    }
}

fn sym(s: String) -> Symbol {
    Symbol(s)
}

/// One arrow `x<=y` for every pair `x ≤ y`.
pub fn from_poset(p: &Poset) -> FinCat {
    let c = p.carrier();
    let arrow = |i: usize, j: usize| sym(format!("{}<={}", c.get(i), c.get(j)));
    let pairs: Vec<(usize, usize)> = p.pairs().collect();
    let mut comp = Vec::new();
    for &(i, j) in &pairs {
        for &(j2, k) in &pairs {
            if j == j2 {
                comp.push((arrow(j, k), arrow(i, j), arrow(i, k)));
            }
        }
    }
    FinCat::trusted(&CatData {
        objects: c.clone(),
        arrows: pairs
            .iter()
            .map(|&(i, j)| (arrow(i, j), c.get(i).clone(), c.get(j).clone()))
            .collect(),
        identity: (0..c.len()).map(|i| (c.get(i).clone(), arrow(i, i))).collect(),
        comp,
    })
}

/// The one-object category `*` of a monoid: arrows are the elements and
/// composition is the table.
pub fn from_monoid(table: &OpTable) -> Result<FinCat> {
    if table.is_empty() {
        return Err(Error::Invalid("a monoid has at least its unit".into()));
    }
    if let Some((x, y, z)) = table.associativity_witness() {
        return Err(Error::Invalid(format!(
            "not associative at ({},{},{})",
            table.name(x),
            table.name(y),
            table.name(z)
        )));
    }
    let unit = table
        .unit()
        .ok_or_else(|| Error::Invalid("the operation has no unit".into()))?;
    let star = sym("*".into());
    let c = table.carrier();
    let mut comp = Vec::new();
    for g in 0..c.len() {
        for f in 0..c.len() {
            comp.push((c.get(g).clone(), c.get(f).clone(), c.get(table.get(g, f)).clone()));
        }
    }
    Ok(FinCat::trusted(&CatData {
        objects: FinSet::collect([star.clone()]),
        arrows: c.iter().map(|a| (a.clone(), star.clone(), star.clone())).collect(),
        identity: vec![(star, c.get(unit).clone())],
        comp,
    }))
}

pub fn from_group(g: &FinGroup) -> FinCat {
    from_monoid(g.table()).expect("a group is a monoid")
}

/// Identity arrows `1_x` only.
pub fn discrete(a: &FinSet) -> FinCat {
    let id = |x: &Symbol| sym(format!("1_{x}"));
    FinCat::trusted(&CatData {
        objects: a.clone(),
        arrows: a.iter().map(|x| (id(x), x.clone(), x.clone())).collect(),
        identity: a.iter().map(|x| (x.clone(), id(x))).collect(),
        comp: a.iter().map(|x| (id(x), id(x), id(x))).collect(),
    })
}

/// Same names, endpoints swapped, `f^op∘g^op = (g∘f)^op`. Applying it twice
/// gives back the input exactly.
pub fn opposite_cat(c: &FinCat) -> FinCat {
    let mut data = c.data();
    for a in &mut data.arrows {
        std::mem::swap(&mut a.1, &mut a.2);
    }
    for t in &mut data.comp {
        std::mem::swap(&mut t.0, &mut t.1);
    }
    FinCat::trusted(&data)
}

/// Objects and arrows are pairs `(x,y)`; composition is componentwise.
pub fn product_cat(c1: &FinCat, c2: &FinCat) -> FinCat {
    let (n1, n2) = (c1.arrow_count(), c2.arrow_count());
    let obj = |x: usize, y: usize| pair_symbol(c1.object_name(x), c2.object_name(y));
    let arr = |f: usize, g: usize| pair_symbol(c1.arrow_name(f), c2.arrow_name(g));
    let mut arrows = Vec::with_capacity(n1 * n2);
    for f in 0..n1 {
        for g in 0..n2 {
            arrows.push((arr(f, g), obj(c1.src(f), c2.src(g)), obj(c1.tgt(f), c2.tgt(g))));
        }
    }
    let mut identity = Vec::new();
    for x in 0..c1.object_count() {
        for y in 0..c2.object_count() {
            identity.push((obj(x, y), arr(c1.identity(x), c2.identity(y))));
        }
    }
    let mut comp = Vec::new();
    for (h, f) in c1.composable_pairs() {
        for (i, g) in c2.composable_pairs() {
            comp.push((
                arr(h, i),
                arr(f, g),
                arr(c1.comp_unchecked(h, f), c2.comp_unchecked(i, g)),
            ));
        }
    }
    FinCat::trusted(&CatData {
        objects: c1.objects().product(c2.objects()),
        arrows,
        identity,
        comp,
    })
}

/// Recovers `(C1, C2)` from a category whose names are all pairs and whose
/// tables are those of `C1 × C2`.
pub fn split_product(p: &FinCat) -> Result<(FinCat, FinCat)> {
    let data = p.data();
    let split = |s: &Symbol| split_pair(s).ok_or(Error::NotProduct);
    let mut halves: [CatData; 2] = std::array::from_fn(|_| CatData {
        objects: FinSet::empty(),
        arrows: Vec::new(),
        identity: Vec::new(),
        comp: Vec::new(),
    });
    let mut objs: [Vec<Symbol>; 2] = [Vec::new(), Vec::new()];
    for x in data.objects.iter() {
        let (a, b) = split(x)?;
        objs[0].push(a);
        objs[1].push(b);
    }
    for (k, half) in halves.iter_mut().enumerate() {
        half.objects = FinSet::collect(objs[k].drain(..));
    }
    let pick = |k: usize, (a, b): (Symbol, Symbol)| if k == 0 { a } else { b };
    for (a, s, t) in &data.arrows {
        for (k, half) in halves.iter_mut().enumerate() {
            half.arrows.push((pick(k, split(a)?), pick(k, split(s)?), pick(k, split(t)?)));
        }
    }
    for (x, a) in &data.identity {
        for (k, half) in halves.iter_mut().enumerate() {
            half.identity.push((pick(k, split(x)?), pick(k, split(a)?)));
        }
    }
    for (g, f, h) in &data.comp {
        for (k, half) in halves.iter_mut().enumerate() {
            half.comp.push((pick(k, split(g)?), pick(k, split(f)?), pick(k, split(h)?)));
        }
    }
    for half in &mut halves {
        half.arrows.sort();
        half.arrows.dedup();
        half.identity.sort();
        half.identity.dedup();
        half.comp.sort();
        half.comp.dedup();
    }
    let [d1, d2] = halves;
    let c1 = FinCat::new(&d1).map_err(|_| Error::NotProduct)?;
    let c2 = FinCat::new(&d2).map_err(|_| Error::NotProduct)?;
    if product_cat(&c1, &c2) != *p {
        return Err(Error::NotProduct);
    }
    Ok((c1, c2))
}

/// The full subcategory of finite sets on `sets`: every map between two of
/// them is an arrow. Objects are named by set tokens, arrows by
/// `dom>cod:[x->y,...]`.
pub fn set_category(sets: &[FinSet]) -> Result<FinCat> {
    let mut sets: Vec<FinSet> = sets.to_vec();
    sets.sort();
    sets.dedup();
    let mut count = 0usize;
    for a in &sets {
        for b in &sets {
            count = count.saturating_add(map_count(a.len(), b.len()));
        }
    }
    if count > SET_CAT_GUARD {
        return Err(Error::TooLarge {
            what: "set category arrows",
            size: count,
            bound: SET_CAT_GUARD,
        });
    }
    let mut arrows = Vec::new();
    let mut maps: Vec<(usize, usize, FinMap)> = Vec::new();
    for (i, a) in sets.iter().enumerate() {
        for (j, b) in sets.iter().enumerate() {
            for m in FinMap::all(a, b) {
                arrows.push((set_arrow_name(&m), set_token(a), set_token(b)));
                maps.push((i, j, m));
            }
        }
    }
    let mut comp = Vec::new();
    for (gi, (j, _, g)) in maps.iter().enumerate() {
        for (fi, (_, j2, f)) in maps.iter().enumerate() {
            if j == j2 {
                let gf = FinMap::compose(g, f)?;
                comp.push((arrows[gi].0.clone(), arrows[fi].0.clone(), set_arrow_name(&gf)));
            }
        }
    }
    Ok(FinCat::trusted(&CatData {
        objects: FinSet::collect(sets.iter().map(set_token)),
        identity: sets
            .iter()
            .map(|s| (set_token(s), set_arrow_name(&FinMap::identity(s))))
            .collect(),
        arrows,
        comp,
    }))
}

fn map_count(a: usize, b: usize) -> usize {
    (0..a).try_fold(1usize, |acc, _| acc.checked_mul(b)).unwrap_or(usize::MAX)
}

pub fn set_token(s: &FinSet) -> Symbol {
    sym(s.to_string())
}

pub fn set_arrow_name(m: &FinMap) -> Symbol {
    sym(format!("{}>{}:{}", m.dom(), m.cod(), m))
}

/// Flags of an arrow found by exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ArrowClass {
    pub iso: bool,
    /// `f∘g = f∘h` implies `g = h`
    pub left_cancellable: bool,
    /// `g∘f = h∘f` implies `g = h`
    pub right_cancellable: bool,
    /// some `l` with `l∘f = 1`
    pub left_invertible: bool,
    /// some `r` with `f∘r = 1`
    pub right_invertible: bool,
}

pub fn arrow_classify(c: &FinCat, f: usize) -> Result<ArrowClass> {
    if f >= c.arrow_count() {
        return Err(Error::UnknownSymbol(format!("arrow #{f}")));
    }
    let n = c.arrow_count();
    let (a, b) = (c.src(f), c.tgt(f));
    let into_a: Vec<usize> = (0..n).filter(|&g| c.tgt(g) == a).collect();
    let from_b: Vec<usize> = (0..n).filter(|&g| c.src(g) == b).collect();
    let left_cancellable = into_a.iter().all(|&g| {
        into_a
            .iter()
            .all(|&h| c.src(g) != c.src(h) || g == h || c.comp(f, g) != c.comp(f, h))
    });
    let right_cancellable = from_b.iter().all(|&g| {
        from_b
            .iter()
            .all(|&h| c.tgt(g) != c.tgt(h) || g == h || c.comp(g, f) != c.comp(h, f))
    });
    let lefts = inverses(c, f, true);
    let rights = inverses(c, f, false);
    let iso = lefts.iter().any(|l| rights.contains(l));
    Ok(ArrowClass {
        iso,
        left_cancellable,
        right_cancellable,
        left_invertible: !lefts.is_empty(),
        right_invertible: !rights.is_empty(),
    })
}

/// Left inverses `l∘f = 1_a` (`left`) or right inverses `f∘r = 1_b`.
fn inverses(c: &FinCat, f: usize, left: bool) -> Vec<usize> {
    let (a, b) = (c.src(f), c.tgt(f));
    c.hom(b, a)
        .into_iter()
        .filter(|&g| {
            if left {
                c.comp(g, f) == Some(c.identity(a))
            } else {
                c.comp(f, g) == Some(c.identity(b))
            }
        })
        .collect()
}

/// The two-sided inverse of `f`, if any.
pub fn inverse(c: &FinCat, f: usize) -> Option<usize> {
    let rights = inverses(c, f, false);
    inverses(c, f, true).into_iter().find(|l| rights.contains(l))
}

/// Invertibility implies cancellability, inverses are unique, and "there
/// is an iso a → b" is an equivalence relation on objects.
pub fn arrow_laws(c: &FinCat) -> LawReport {
    let mut r = LawReport::new("arrows");
    let name = |f: usize| c.arrow_name(f).to_string();
    for f in 0..c.arrow_count() {
        let k = arrow_classify(c, f).expect("arrow index");
        r.check("cat.arrow.left_inverse_cancels", !k.left_invertible || k.left_cancellable, || name(f));
        r.check("cat.arrow.right_inverse_cancels", !k.right_invertible || k.right_cancellable, || name(f));
        let lefts = inverses(c, f, true);
        let rights = inverses(c, f, false);
        let both: Vec<&usize> = lefts.iter().filter(|l| rights.contains(l)).collect();
        r.check("cat.arrow.inverse_unique", both.len() <= 1, || name(f));
        if !lefts.is_empty() && !rights.is_empty() {
            r.check("cat.arrow.inverse_unique", lefts == rights && lefts.len() == 1, || name(f));
        }
    }
    let k = c.object_count();
    let related = |a: usize, b: usize| c.hom(a, b).into_iter().any(|f| inverse(c, f).is_some());
    let rel: Vec<bool> = (0..k * k).map(|i| related(i / k, i % k)).collect();
    for a in 0..k {
        r.check("cat.iso.equivalence", rel[a * k + a], || c.object_name(a).to_string());
        for b in 0..k {
            r.check("cat.iso.equivalence", rel[a * k + b] == rel[b * k + a], || {
                format!("({},{})", c.object_name(a), c.object_name(b))
            });
            for d in 0..k {
                r.check(
                    "cat.iso.equivalence",
                    !(rel[a * k + b] && rel[b * k + d]) || rel[a * k + d],
                    || format!("({},{},{})", c.object_name(a), c.object_name(b), c.object_name(d)),
                );
            }
        }
    }
    r
}

/// Isomorphism classes of objects.
pub fn iso_classes(c: &FinCat) -> Vec<FinSet> {
    let k = c.object_count();
    let mut seen = vec![false; k];
    let mut out = Vec::new();
    for a in 0..k {
        if seen[a] {
            continue;
        }
        let block: Vec<usize> = (0..k)
            .filter(|&b| c.hom(a, b).into_iter().any(|f| inverse(c, f).is_some()))
            .collect();
        for &b in &block {
            seen[b] = true;
        }
        out.push(FinSet::collect(block.into_iter().map(|b| c.object_name(b).clone())));
    }
    out
}

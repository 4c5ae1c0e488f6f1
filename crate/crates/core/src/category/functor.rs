use std::fmt;
use std::sync::Arc;

use super::cat::{arrow_classify, from_poset, opposite_cat, product_cat, split_product, FinCat};
use crate::error::{Error, Result};
use crate::order::Poset;
use crate::report::LawReport;
use crate::sets::{pair_symbol, split_pair, FinMap, Symbol};

/// Largest number of functors or natural transformations an enumeration
/// will produce.
pub const FUNCTOR_GUARD: usize = 4096;

/// Object and arrow tables between two categories. The tables are only
/// shape-checked on construction; [`check_functor`] and
/// [`check_contravariant`] decide what they are.
#[derive(Clone, PartialEq, Eq)]
pub struct Functor {
    src: Arc<FinCat>,
    tgt: Arc<FinCat>,
    on_obj: Vec<usize>,
    on_arr: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Functor {
    pub fn raw(
        src: Arc<FinCat>,
        tgt: Arc<FinCat>,
        on_obj: Vec<usize>,
        on_arr: Vec<usize>,
    ) -> Result<Functor> {
        if on_obj.len() != src.object_count() || on_arr.len() != src.arrow_count() {
            return Err(Error::Mismatch("table length differs from the source".into()));
        }
        if on_obj.iter().any(|&x| x >= tgt.object_count())
            || on_arr.iter().any(|&f| f >= tgt.arrow_count())
        {
            return Err(Error::Mismatch("table entry outside the target".into()));
        }
        Ok(Functor {
            src,
            tgt,
            on_obj,
            on_arr,
        })
    }

    /// Tables that must satisfy the covariant laws.
    pub fn new(
        src: Arc<FinCat>,
        tgt: Arc<FinCat>,
        on_obj: Vec<usize>,
        on_arr: Vec<usize>,
    ) -> Result<Functor> {
        let f = Functor::raw(src, tgt, on_obj, on_arr)?;
        let r = check_functor(&f);
        if let Some(bad) = r.failures().next() {
            return Err(Error::NotAFunctor(format!(
                "{} at {}",
                bad.law,
                bad.witness.as_deref().unwrap_or("?")
            )));
        }
        Ok(f)
    }

    pub fn from_names(
        src: Arc<FinCat>,
        tgt: Arc<FinCat>,
        on_obj: &[(&str, &str)],
        on_arr: &[(&str, &str)],
    ) -> Result<Functor> {
        let mut obj = vec![usize::MAX; src.object_count()];
        for (x, y) in on_obj {
            obj[src.object(x)?] = tgt.object(y)?;
        }
        let mut arr = vec![usize::MAX; src.arrow_count()];
        for (f, g) in on_arr {
            arr[src.arrow(f)?] = tgt.arrow(g)?;
        }
        if let Some(x) = obj.iter().position(|&y| y == usize::MAX) {
            return Err(Error::NotTotal(src.object_name(x).to_string()));
        }
        if let Some(f) = arr.iter().position(|&g| g == usize::MAX) {
            return Err(Error::NotTotal(src.arrow_name(f).to_string()));
        }
        Functor::raw(src, tgt, obj, arr)
    }

    pub fn identity(c: &Arc<FinCat>) -> Functor {
        Functor {
            src: c.clone(),
            tgt: c.clone(),
            on_obj: (0..c.object_count()).collect(),
            on_arr: (0..c.arrow_count()).collect(),
        }
    }

    /// Everything to `x` and its identity.
    pub fn constant(src: &Arc<FinCat>, tgt: &Arc<FinCat>, x: usize) -> Functor {
        Functor {
            src: src.clone(),
            tgt: tgt.clone(),
            on_obj: vec![x; src.object_count()],
            on_arr: vec![tgt.identity(x); src.arrow_count()],
        }
    }

    pub fn src(&self) -> &Arc<FinCat> {
        &self.src
    }

    pub fn tgt(&self) -> &Arc<FinCat> {
        &self.tgt
    }

    pub fn obj(&self, x: usize) -> usize {
        self.on_obj[x]
    }

    pub fn arr(&self, f: usize) -> usize {
        self.on_arr[f]
    }

    pub fn on_obj(&self) -> &[usize] {
        &self.on_obj
    }

    pub fn on_arr(&self) -> &[usize] {
        &self.on_arr
    }

    /// Same tables, read against other categories with the same names.
    pub(crate) fn reframe(&self, src: Arc<FinCat>, tgt: Arc<FinCat>) -> Functor {
        Functor {
            src,
            tgt,
            on_obj: self.on_obj.clone(),
            on_arr: self.on_arr.clone(),
        }
    }
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let objs: Vec<String> = (0..self.on_obj.len())
            .map(|x| format!("{}->{}", self.src.object_name(x), self.tgt.object_name(self.on_obj[x])))
            .collect();
        let arrs: Vec<String> = (0..self.on_arr.len())
            .map(|a| format!("{}->{}", self.src.arrow_name(a), self.tgt.arrow_name(self.on_arr[a])))
            .collect();
        write!(f, "Functor[{}; {}]", objs.join(","), arrs.join(","))
    }
}

fn same(a: &Arc<FinCat>, b: &Arc<FinCat>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Endpoints, units, composition, and that isomorphisms go to isomorphisms.
pub fn check_functor(f: &Functor) -> LawReport {
    variance_report(f, Variance::Covariant)
}

/// The same laws with arrows reversed: `𝔉f: 𝔉b → 𝔉a` and
/// `𝔉(g∘f) = 𝔉f∘𝔉g`.
pub fn check_contravariant(f: &Functor) -> LawReport {
    variance_report(f, Variance::Contravariant)
}

fn variance_report(fu: &Functor, v: Variance) -> LawReport {
    let (c, d) = (&*fu.src, &*fu.tgt);
    let prefix = match v {
        Variance::Covariant => "cat.functor",
        Variance::Contravariant => "cat.contra",
    };
    let law = |s: &str| format!("{prefix}.{s}");
    let mut r = LawReport::new(match v {
        Variance::Covariant => "functor",
        Variance::Contravariant => "contravariant",
    });
    let an = |f: usize| c.arrow_name(f).to_string();
    for f in 0..c.arrow_count() {
        let (s, t) = match v {
            Variance::Covariant => (fu.obj(c.src(f)), fu.obj(c.tgt(f))),
            Variance::Contravariant => (fu.obj(c.tgt(f)), fu.obj(c.src(f))),
        };
        let g = fu.arr(f);
        r.check(&law("objects"), d.src(g) == s && d.tgt(g) == t, || an(f));
    }
    for x in 0..c.object_count() {
        r.check(&law("unit"), fu.arr(c.identity(x)) == d.identity(fu.obj(x)), || {
            c.object_name(x).to_string()
        });
    }
    let mut instances = 0u64;
    let mut failures = 0u64;
    let mut witness: Option<String> = None;
    for (g, f) in c.composable_pairs() {
        let gf = fu.arr(c.comp_unchecked(g, f));
        let img = match v {
            Variance::Covariant => d.comp(fu.arr(g), fu.arr(f)),
            Variance::Contravariant => d.comp(fu.arr(f), fu.arr(g)),
        };
        instances += 1;
        if img != Some(gf) {
            failures += 1;
            let w = format!("({},{})", an(g), an(f));
            if witness.as_ref().is_none_or(|old| w < *old) {
                witness = Some(w);
            }
        }
    }
    r.record(&law("composition"), instances, failures, witness);
    if v == Variance::Covariant && r.passed() {
        for f in 0..c.arrow_count() {
            if arrow_classify(c, f).map(|k| k.iso).unwrap_or(false) {
                let iso = arrow_classify(d, fu.arr(f)).map(|k| k.iso).unwrap_or(false);
                r.check("cat.functor.preserves_iso", iso, || an(f));
            }
        }
    }
    r
}

/// `g∘f`, defined when the target of `f` is the source of `g`.
pub fn compose_functors(g: &Functor, f: &Functor) -> Result<Functor> {
    if !same(&f.tgt, &g.src) {
        return Err(Error::Mismatch("target of the first functor is not the source of the second".into()));
    }
    Ok(Functor {
        src: f.src.clone(),
        tgt: g.tgt.clone(),
        on_obj: f.on_obj.iter().map(|&x| g.obj(x)).collect(),
        on_arr: f.on_arr.iter().map(|&a| g.arr(a)).collect(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FunctorClass {
    /// onto every hom-set `{a→b} → {𝔉a→𝔉b}`
    pub full: bool,
    /// monic on every hom-set
    pub faithful: bool,
    /// faithful with a monic object map
    pub embedding: bool,
}

pub fn classify_functor(f: &Functor) -> FunctorClass {
    let (c, d) = (&*f.src, &*f.tgt);
    let k = c.object_count();
    let mut full = true;
    let mut faithful = true;
    for a in 0..k {
        for b in 0..k {
            let mut image: Vec<usize> = c.hom(a, b).into_iter().map(|g| f.arr(g)).collect();
            let before = image.len();
            image.sort_unstable();
            image.dedup();
            faithful &= image.len() == before;
            full &= image.len() == d.hom(f.obj(a), f.obj(b)).len();
        }
    }
    let mut objs = f.on_obj.clone();
    objs.sort_unstable();
    objs.dedup();
    FunctorClass {
        full,
        faithful,
        embedding: faithful && objs.len() == k,
    }
}

/// Every functor `C → D`, in lexicographic order of their tables. With
/// `injective`, only those monic on objects and arrows.
pub fn all_functors(src: &Arc<FinCat>, tgt: &Arc<FinCat>, injective: bool) -> Result<Vec<Functor>> {
    let (c, d) = (&**src, &**tgt);
    let (k, n) = (c.object_count(), c.arrow_count());
    // composition constraints, filed under the largest arrow they mention
    let mut by_max: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); n];
    for (g, f) in c.composable_pairs() {
        let h = c.comp_unchecked(g, f);
        by_max[g.max(f).max(h)].push((g, f, h));
    }
    let mut out = Vec::new();
    let mut obj = vec![0usize; k];
    let mut arr = vec![0usize; n];
    let mut used_obj = vec![false; d.object_count()];
    let mut used_arr = vec![false; d.arrow_count()];
    struct Search<'a> {
        c: &'a FinCat,
        d: &'a FinCat,
        injective: bool,
        by_max: &'a [Vec<(usize, usize, usize)>],
    }
    fn arrows(
        s: &Search,
        i: usize,
        obj: &[usize],
        arr: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if i == arr.len() {
            if out.len() >= FUNCTOR_GUARD {
                return Err(Error::TooLarge {
                    what: "functor enumeration",
                    size: out.len() + 1,
                    bound: FUNCTOR_GUARD,
                });
            }
            out.push(arr.clone());
            return Ok(());
        }
        let (a, b) = (obj[s.c.src(i)], obj[s.c.tgt(i)]);
        let cands = if s.c.is_identity(i) {
            vec![s.d.identity(a)]
        } else {
            s.d.hom(a, b)
        };
        for g in cands {
            if s.injective && used[g] {
                continue;
            }
            arr[i] = g;
            let ok = s.by_max[i]
                .iter()
                .all(|&(x, y, z)| s.d.comp(arr[x], arr[y]) == Some(arr[z]));
            if ok {
                used[g] = true;
                arrows(s, i + 1, obj, arr, used, out)?;
                used[g] = false;
            }
        }
        Ok(())
    }
    let s = Search {
        c,
        d,
        injective,
        by_max: &by_max,
    };
    fn objects(
        s: &Search,
        x: usize,
        obj: &mut Vec<usize>,
        used_obj: &mut Vec<bool>,
        arr: &mut Vec<usize>,
        used_arr: &mut Vec<bool>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) -> Result<()> {
        if x == obj.len() {
            let mut tables = Vec::new();
            arrows(s, 0, obj, arr, used_arr, &mut tables)?;
            if out.len() + tables.len() > FUNCTOR_GUARD {
                return Err(Error::TooLarge {
                    what: "functor enumeration",
                    size: out.len() + tables.len(),
                    bound: FUNCTOR_GUARD,
                });
            }
            out.extend(tables.into_iter().map(|t| (obj.clone(), t)));
            return Ok(());
        }
        for y in 0..s.d.object_count() {
            if s.injective && used_obj[y] {
                continue;
            }
            obj[x] = y;
            used_obj[y] = true;
            objects(s, x + 1, obj, used_obj, arr, used_arr, out)?;
            used_obj[y] = false;
        }
        Ok(())
    }
    if injective && (k != d.object_count() || n != d.arrow_count()) {
        return Ok(Vec::new());
    }
    objects(&s, 0, &mut obj, &mut used_obj, &mut arr, &mut used_arr, &mut out)?;
    out.sort();
    Ok(out
        .into_iter()
        .map(|(on_obj, on_arr)| Functor {
            src: src.clone(),
            tgt: tgt.clone(),
            on_obj,
            on_arr,
        })
        .collect())
}

/// An isomorphism of categories, by exhaustive search.
pub fn find_cat_isomorphism(c: &Arc<FinCat>, d: &Arc<FinCat>) -> Result<Option<Functor>> {
    Ok(all_functors(c, d, true)?.into_iter().next())
}

/// Same tables between the opposite categories.
pub fn opposite_functor(f: &Functor) -> Functor {
    f.reframe(Arc::new(opposite_cat(&f.src)), Arc::new(opposite_cat(&f.tgt)))
}

/// `op` is an involution on the given categories, sends categories to
/// categories and functors to functors, and respects identities and
/// composition of the given functors.
pub fn op_universe_check(cats: &[Arc<FinCat>], functors: &[Functor]) -> LawReport {
    let mut r = LawReport::new("opposite");
    for c in cats {
        let op = Arc::new(opposite_cat(c));
        r.check("cat.op.involution", opposite_cat(&op) == **c, || format!("{c:?}"));
        r.check("cat.op.category", op.check().passed(), || format!("{c:?}"));
        let id_op = opposite_functor(&Functor::identity(c));
        r.check("cat.op.identity", id_op == Functor::identity(&op), || format!("{c:?}"));
    }
    for f in functors {
        if check_functor(f).passed() {
            r.check("cat.op.functor", check_functor(&opposite_functor(f)).passed(), || {
                format!("{f:?}")
            });
        }
        for g in functors {
            if let Ok(gf) = compose_functors(g, f) {
                let lhs = opposite_functor(&gf);
                let rhs = compose_functors(&opposite_functor(g), &opposite_functor(f));
                r.check("cat.op.composition", rhs.as_ref() == Ok(&lhs), || {
                    format!("({g:?},{f:?})")
                });
            }
        }
    }
    r
}

/// Retargets the tables to `D^op`. A contravariant assignment becomes a
/// covariant functor and a covariant one becomes contravariant; the
/// returned variance is that of the input. Applying it twice is the
/// identity.
pub fn variance_convert(f: &Functor) -> Result<(Functor, Variance)> {
    let contra = check_contravariant(f);
    let v = if contra.passed() {
        Variance::Contravariant
    } else {
        let co = check_functor(f);
        if !co.passed() {
            let bad = co.failures().next().expect("a failing law");
            return Err(Error::VarianceError(format!(
                "{} at {}",
                bad.law,
                bad.witness.as_deref().unwrap_or("?")
            )));
        }
        Variance::Covariant
    };
    Ok((f.reframe(f.src.clone(), Arc::new(opposite_cat(&f.tgt))), v))
}

fn poset_arrow(p: &Poset, i: usize, j: usize) -> String {
    format!("{}<={}", p.carrier().get(i), p.carrier().get(j))
}

fn poset_functor(p: &Poset, q: &Poset, m: &FinMap, reverse: bool) -> Result<Functor> {
    if m.dom() != p.carrier() || m.cod() != q.carrier() {
        return Err(Error::CarrierMismatch(m.to_string()));
    }
    for (i, j) in p.pairs() {
        let (x, y) = if reverse { (m.at(j), m.at(i)) } else { (m.at(i), m.at(j)) };
        if !q.leq(x, y) {
            return Err(Error::NotMonotone(format!(
                "{} <= {}",
                p.carrier().get(i),
                p.carrier().get(j)
            )));
        }
    }
    let (c, d) = (Arc::new(from_poset(p)), Arc::new(from_poset(q)));
    let on_obj = (0..p.len()).map(|i| m.at(i)).collect();
    let mut on_arr = vec![0; c.arrow_count()];
    for (i, j) in p.pairs() {
        let (x, y) = if reverse { (m.at(j), m.at(i)) } else { (m.at(i), m.at(j)) };
        on_arr[c.arrow(&poset_arrow(p, i, j))?] = d.arrow(&poset_arrow(q, x, y))?;
    }
    Functor::raw(c, d, on_obj, on_arr)
}

/// The functor of an order-preserving map.
pub fn functor_from_monotone(p: &Poset, q: &Poset, m: &FinMap) -> Result<Functor> {
    poset_functor(p, q, m, false)
}

/// The contravariant assignment of an order-reversing map.
pub fn contravariant_from_antitone(p: &Poset, q: &Poset, m: &FinMap) -> Result<Functor> {
    poset_functor(p, q, m, true)
}

pub(crate) fn pair_object(p: &FinCat, a: &Symbol, b: &Symbol) -> usize {
    p.objects().index_of(&pair_symbol(a, b)).expect("pair object")
}

pub(crate) fn pair_arrow(p: &FinCat, f: &Symbol, g: &Symbol) -> usize {
    p.arrows().index_of(&pair_symbol(f, g)).expect("pair arrow")
}

/// `x ↦ (𝔣x, 𝔤x)` into `D1 × D2`.
pub fn pair_functor(f: &Functor, g: &Functor) -> Result<Functor> {
    if !same(&f.src, &g.src) {
        return Err(Error::Mismatch("functors do not share a domain".into()));
    }
    let p = Arc::new(product_cat(&f.tgt, &g.tgt));
    let c = &f.src;
    let on_obj = (0..c.object_count())
        .map(|x| pair_object(&p, f.tgt.object_name(f.obj(x)), g.tgt.object_name(g.obj(x))))
        .collect();
    let on_arr = (0..c.arrow_count())
        .map(|a| pair_arrow(&p, f.tgt.arrow_name(f.arr(a)), g.tgt.arrow_name(g.arr(a))))
        .collect();
    Functor::raw(c.clone(), p, on_obj, on_arr)
}

/// Splits a functor into a product into its two components.
pub fn unpair_functor(fu: &Functor) -> Result<(Functor, Functor)> {
    let (d1, d2) = split_product(&fu.tgt)?;
    let (d1, d2) = (Arc::new(d1), Arc::new(d2));
    let c = &fu.src;
    let mut tables: [(Vec<usize>, Vec<usize>); 2] = Default::default();
    for x in 0..c.object_count() {
        let (a, b) = split_pair(fu.tgt.object_name(fu.obj(x))).ok_or(Error::NotProduct)?;
        tables[0].0.push(d1.objects().require(&a)?);
        tables[1].0.push(d2.objects().require(&b)?);
    }
    for f in 0..c.arrow_count() {
        let (a, b) = split_pair(fu.tgt.arrow_name(fu.arr(f))).ok_or(Error::NotProduct)?;
        tables[0].1.push(d1.arrows().require(&a)?);
        tables[1].1.push(d2.arrows().require(&b)?);
    }
    let [(o1, a1), (o2, a2)] = tables;
    Ok((
        Functor::raw(c.clone(), d1, o1, a1)?,
        Functor::raw(c.clone(), d2, o2, a2)?,
    ))
}

/// `(a, b) ↦ (𝔣a, 𝔤b)` from `C1 × C2` into `D × D`, for functors with a
/// common range.
pub fn common_range_product(f: &Functor, g: &Functor) -> Result<Functor> {
    if !same(&f.tgt, &g.tgt) {
        return Err(Error::Mismatch("functors do not share a range".into()));
    }
    let src = Arc::new(product_cat(&f.src, &g.src));
    let tgt = Arc::new(product_cat(&f.tgt, &g.tgt));
    let d = &f.tgt;
    let mut on_obj = vec![0; src.object_count()];
    for a in 0..f.src.object_count() {
        for b in 0..g.src.object_count() {
            let x = pair_object(&src, f.src.object_name(a), g.src.object_name(b));
            on_obj[x] = pair_object(&tgt, d.object_name(f.obj(a)), d.object_name(g.obj(b)));
        }
    }
    let mut on_arr = vec![0; src.arrow_count()];
    for h in 0..f.src.arrow_count() {
        for i in 0..g.src.arrow_count() {
            let x = pair_arrow(&src, f.src.arrow_name(h), g.src.arrow_name(i));
            on_arr[x] = pair_arrow(&tgt, d.arrow_name(f.arr(h)), d.arrow_name(g.arr(i)));
        }
    }
    Functor::raw(src, tgt, on_obj, on_arr)
}

use std::sync::Arc;

use super::cat::{opposite_cat, product_cat, split_product, FinCat};
use super::functor::{check_functor, pair_arrow, pair_object, Functor};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::split_pair;

/// An assignment `C1 × C2 → D`, contravariant in the first argument and
/// covariant in the second: for `f: a → c` and `g: b → d`,
/// `𝔅(f, g): 𝔅(c, b) → 𝔅(a, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bifunctor {
    c1: Arc<FinCat>,
    c2: Arc<FinCat>,
    tgt: Arc<FinCat>,
    on_obj: Vec<usize>,
    on_arr: Vec<usize>,
}

impl Bifunctor {
    /// Tables indexed `a * |O C2| + b` and `f * |A C2| + g`.
    pub fn raw(
        c1: Arc<FinCat>,
        c2: Arc<FinCat>,
        tgt: Arc<FinCat>,
        on_obj: Vec<usize>,
        on_arr: Vec<usize>,
    ) -> Result<Bifunctor> {
        if on_obj.len() != c1.object_count() * c2.object_count()
            || on_arr.len() != c1.arrow_count() * c2.arrow_count()
        {
            return Err(Error::Mismatch("table length differs from the source".into()));
        }
        if on_obj.iter().any(|&x| x >= tgt.object_count())
            || on_arr.iter().any(|&f| f >= tgt.arrow_count())
        {
            return Err(Error::Mismatch("table entry outside the target".into()));
        }
        Ok(Bifunctor {
            c1,
            c2,
            tgt,
            on_obj,
            on_arr,
        })
    }

    pub fn c1(&self) -> &Arc<FinCat> {
        &self.c1
    }

    pub fn c2(&self) -> &Arc<FinCat> {
        &self.c2
    }

    pub fn tgt(&self) -> &Arc<FinCat> {
        &self.tgt
    }

    pub fn obj(&self, a: usize, b: usize) -> usize {
        self.on_obj[a * self.c2.object_count() + b]
    }

    pub fn arr(&self, f: usize, g: usize) -> usize {
        self.on_arr[f * self.c2.arrow_count() + g]
    }

    /// `𝔅(a, −)` as a functor `C2 → D`.
    pub fn left_slice(&self, a: usize) -> Functor {
        let c2 = &self.c2;
        Functor::raw(
            c2.clone(),
            self.tgt.clone(),
            (0..c2.object_count()).map(|b| self.obj(a, b)).collect(),
            (0..c2.arrow_count())
                .map(|g| self.arr(self.c1.identity(a), g))
                .collect(),
        )
        .expect("slice tables fit")
    }

    /// `𝔅(−, b)` as a functor `C1^op → D`.
    pub fn right_slice(&self, b: usize) -> Functor {
        let c1 = &self.c1;
        Functor::raw(
            Arc::new(opposite_cat(c1)),
            self.tgt.clone(),
            (0..c1.object_count()).map(|a| self.obj(a, b)).collect(),
            (0..c1.arrow_count())
                .map(|f| self.arr(f, self.c2.identity(b)))
                .collect(),
        )
        .expect("slice tables fit")
    }
}

/// Units, endpoints, `𝔅(h∘f, i∘g) = 𝔅(f, i)∘𝔅(h, g)` computed from the two
/// composition tables, and the same law read through the composition of
/// `C1^op × C2`, where `(f, i)∘(h, g) = (h∘f, i∘g)`.
pub fn bifunctor_check(b: &Bifunctor) -> LawReport {
    let mut r = LawReport::new("bifunctor");
    let (c1, c2, d) = (&*b.c1, &*b.c2, &*b.tgt);
    let pair = |f: usize, g: usize| format!("({},{})", c1.arrow_name(f), c2.arrow_name(g));
    for x in 0..c1.object_count() {
        for y in 0..c2.object_count() {
            r.check(
                "cat.bifunctor.unit",
                b.arr(c1.identity(x), c2.identity(y)) == d.identity(b.obj(x, y)),
                || format!("({},{})", c1.object_name(x), c2.object_name(y)),
            );
        }
    }
    for f in 0..c1.arrow_count() {
        for g in 0..c2.arrow_count() {
            let k = b.arr(f, g);
            r.check(
                "cat.bifunctor.endpoints",
                d.src(k) == b.obj(c1.tgt(f), c2.src(g)) && d.tgt(k) == b.obj(c1.src(f), c2.tgt(g)),
                || pair(f, g),
            );
        }
    }
    let mut comp = (0u64, 0u64, None::<String>);
    for (h, f) in c1.composable_pairs() {
        for (i, g) in c2.composable_pairs() {
            let lhs = b.arr(c1.comp_unchecked(h, f), c2.comp_unchecked(i, g));
            let rhs = d.comp(b.arr(f, i), b.arr(h, g));
            comp.0 += 1;
            if rhs != Some(lhs) {
                comp.1 += 1;
                let w = format!("{}∘{}", pair(f, i), pair(h, g));
                if comp.2.as_ref().is_none_or(|old| w < *old) {
                    comp.2 = Some(w);
                }
            }
        }
    }
    r.record("cat.bifunctor.composition", comp.0, comp.1, comp.2);

    let e = bifunctor_to_functor(b);
    let p = e.src();
    let mut lr = (0u64, 0u64, None::<String>);
    for (u, v) in p.composable_pairs() {
        let w = p.comp_unchecked(u, v);
        lr.0 += 1;
        if d.comp(e.arr(u), e.arr(v)) != Some(e.arr(w)) {
            lr.1 += 1;
            let s = format!("{}∘{}", p.arrow_name(u), p.arrow_name(v));
            if lr.2.as_ref().is_none_or(|old| s < *old) {
                lr.2 = Some(s);
            }
        }
    }
    r.record("cat.bifunctor.left_right", lr.0, lr.1, lr.2);
    r
}

/// The same tables as a functor on `C1^op × C2`.
pub fn bifunctor_to_functor(b: &Bifunctor) -> Functor {
    let p = Arc::new(product_cat(&opposite_cat(&b.c1), &b.c2));
    let (c1, c2) = (&b.c1, &b.c2);
    let mut on_obj = vec![0; p.object_count()];
    for x in 0..c1.object_count() {
        for y in 0..c2.object_count() {
            on_obj[pair_object(&p, c1.object_name(x), c2.object_name(y))] = b.obj(x, y);
        }
    }
    let mut on_arr = vec![0; p.arrow_count()];
    for f in 0..c1.arrow_count() {
        for g in 0..c2.arrow_count() {
            on_arr[pair_arrow(&p, c1.arrow_name(f), c2.arrow_name(g))] = b.arr(f, g);
        }
    }
    Functor::raw(p, b.tgt.clone(), on_obj, on_arr).expect("bridge tables fit")
}

/// Reads a functor on `E × C2` as a bifunctor on `E^op × C2`.
pub fn functor_to_bifunctor(f: &Functor) -> Result<Bifunctor> {
    let (e, c2) = split_product(f.src())?;
    let c1 = Arc::new(opposite_cat(&e));
    let c2 = Arc::new(c2);
    let p = f.src();
    let mut on_obj = Vec::with_capacity(c1.object_count() * c2.object_count());
    for x in 0..c1.object_count() {
        for y in 0..c2.object_count() {
            on_obj.push(f.obj(pair_object(p, c1.object_name(x), c2.object_name(y))));
        }
    }
    let mut on_arr = Vec::with_capacity(c1.arrow_count() * c2.arrow_count());
    for a in 0..c1.arrow_count() {
        for g in 0..c2.arrow_count() {
            on_arr.push(f.arr(pair_arrow(p, c1.arrow_name(a), c2.arrow_name(g))));
        }
    }
    Bifunctor::raw(c1, c2, f.tgt().clone(), on_obj, on_arr)
}

/// Splits a bifunctor into `D1 × D2` into its two component bifunctors.
pub fn bifunctor_decompose(b: &Bifunctor) -> Result<(Bifunctor, Bifunctor)> {
    let (d1, d2) = split_product(&b.tgt)?;
    let (d1, d2) = (Arc::new(d1), Arc::new(d2));
    let mut o = (Vec::new(), Vec::new());
    for &x in &b.on_obj {
        let (l, r) = split_pair(b.tgt.object_name(x)).ok_or(Error::NotProduct)?;
        o.0.push(d1.objects().require(&l)?);
        o.1.push(d2.objects().require(&r)?);
    }
    let mut a = (Vec::new(), Vec::new());
    for &f in &b.on_arr {
        let (l, r) = split_pair(b.tgt.arrow_name(f)).ok_or(Error::NotProduct)?;
        a.0.push(d1.arrows().require(&l)?);
        a.1.push(d2.arrows().require(&r)?);
    }
    Ok((
        Bifunctor::raw(b.c1.clone(), b.c2.clone(), d1, o.0, a.0)?,
        Bifunctor::raw(b.c1.clone(), b.c2.clone(), d2, o.1, a.1)?,
    ))
}

/// Recombines two bifunctors on the same source into one into `D1 × D2`.
pub fn pair_bifunctors(p: &Bifunctor, q: &Bifunctor) -> Result<Bifunctor> {
    if p.c1 != q.c1 || p.c2 != q.c2 {
        return Err(Error::Mismatch("bifunctors do not share a source".into()));
    }
    let t = Arc::new(product_cat(&p.tgt, &q.tgt));
    let on_obj = p
        .on_obj
        .iter()
        .zip(&q.on_obj)
        .map(|(&x, &y)| pair_object(&t, p.tgt.object_name(x), q.tgt.object_name(y)))
        .collect();
    let on_arr = p
        .on_arr
        .iter()
        .zip(&q.on_arr)
        .map(|(&f, &g)| pair_arrow(&t, p.tgt.arrow_name(f), q.tgt.arrow_name(g)))
        .collect();
    Bifunctor::raw(p.c1.clone(), p.c2.clone(), t, on_obj, on_arr)
}

/// The families of a functor `𝔉` on `C1 × C2`: `𝔉_x = 𝔉(x, −)` for each
/// object of `C1`, and `𝔉_y = 𝔉(−, y)` for each object of `C2`.
pub fn functor_slices(f: &Functor) -> Result<(Vec<Functor>, Vec<Functor>)> {
    let (c1, c2) = split_product(f.src())?;
    let (c1, c2) = (Arc::new(c1), Arc::new(c2));
    let p = f.src();
    let rows = (0..c1.object_count())
        .map(|x| {
            let ix = c1.identity(x);
            Functor::raw(
                c2.clone(),
                f.tgt().clone(),
                (0..c2.object_count())
                    .map(|y| f.obj(pair_object(p, c1.object_name(x), c2.object_name(y))))
                    .collect(),
                (0..c2.arrow_count())
                    .map(|g| f.arr(pair_arrow(p, c1.arrow_name(ix), c2.arrow_name(g))))
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = (0..c2.object_count())
        .map(|y| {
            let iy = c2.identity(y);
            Functor::raw(
                c1.clone(),
                f.tgt().clone(),
                (0..c1.object_count())
                    .map(|x| f.obj(pair_object(p, c1.object_name(x), c2.object_name(y))))
                    .collect(),
                (0..c1.arrow_count())
                    .map(|h| f.arr(pair_arrow(p, c1.arrow_name(h), c2.arrow_name(iy))))
                    .collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((rows, cols))
}

/// Builds `𝔉: C1 × C2 → D` from functors `𝔑_x: C2 → D` (one per object of
/// `C1`) and `𝔏_y: C1 → D` (one per object of `C2`) with `𝔏_y x = 𝔑_x y`,
/// setting `𝔉(f, g) = 𝔏_d f ∘ 𝔑_a g` for `f: a → c`, `g: b → d`. Fails
/// unless `𝔏_d f ∘ 𝔑_a g = 𝔑_c g ∘ 𝔏_b f` for every such pair.
#[allow(clippy::needless_range_loop)]
pub fn assemble_functor(
    c1: &Arc<FinCat>,
    c2: &Arc<FinCat>,
    rows: &[Functor],
    cols: &[Functor],
) -> Result<Functor> {
    if rows.len() != c1.object_count() || cols.len() != c2.object_count() {
        return Err(Error::Mismatch("one functor per object is needed".into()));
    }
    let d = rows
        .first()
        .map(|f| f.tgt().clone())
        .or_else(|| cols.first().map(|f| f.tgt().clone()))
        .ok_or_else(|| Error::Mismatch("empty families".into()))?;
    if rows.iter().any(|f| **f.src() != **c2 || *f.tgt() != d)
        || cols.iter().any(|f| **f.src() != **c1 || *f.tgt() != d)
    {
        return Err(Error::Mismatch("family members have the wrong shape".into()));
    }
    for x in 0..c1.object_count() {
        for y in 0..c2.object_count() {
            if cols[y].obj(x) != rows[x].obj(y) {
                return Err(Error::IncompatibleFamilies(format!(
                    "objects ({},{})",
                    c1.object_name(x),
                    c2.object_name(y)
                )));
            }
        }
    }
    let p = Arc::new(product_cat(c1, c2));
    let mut on_arr = vec![0; p.arrow_count()];
    for f in 0..c1.arrow_count() {
        for g in 0..c2.arrow_count() {
            let (a, c) = (c1.src(f), c1.tgt(f));
            let (b, dd) = (c2.src(g), c2.tgt(g));
            let one = d.comp(cols[dd].arr(f), rows[a].arr(g));
            let other = d.comp(rows[c].arr(g), cols[b].arr(f));
            if one.is_none() || one != other {
                return Err(Error::IncompatibleFamilies(format!(
                    "({},{})",
                    c1.arrow_name(f),
                    c2.arrow_name(g)
                )));
            }
            on_arr[pair_arrow(&p, c1.arrow_name(f), c2.arrow_name(g))] = one.unwrap();
        }
    }
    let mut on_obj = vec![0; p.object_count()];
    for x in 0..c1.object_count() {
        for y in 0..c2.object_count() {
            on_obj[pair_object(&p, c1.object_name(x), c2.object_name(y))] = rows[x].obj(y);
        }
    }
    let f = Functor::raw(p, d, on_obj, on_arr)?;
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

use std::sync::Arc;

use super::bifunctor::Bifunctor;
use super::cat::{from_group, opposite_cat, set_arrow_name, set_category, set_token, FinCat};
use super::functor::{Functor, Variance, FUNCTOR_GUARD};
use super::nat::NatTrans;
use crate::error::{Error, Result};
use crate::group::{hom_check, transformation_group, FinGroup, GroupHom};
use crate::report::LawReport;
use crate::sets::{FinMap, FinSet, Symbol};

/// A functor into finite sets, carrying the sets and maps themselves.
/// A contravariant one sends `f: a → b` to a map `𝔉b → 𝔉a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFunctor {
    src: Arc<FinCat>,
    variance: Variance,
    sets: Vec<FinSet>,
    maps: Vec<FinMap>,
}

impl SetFunctor {
    pub fn raw(src: Arc<FinCat>, variance: Variance, sets: Vec<FinSet>, maps: Vec<FinMap>) -> Result<SetFunctor> {
        if sets.len() != src.object_count() || maps.len() != src.arrow_count() {
            return Err(Error::Mismatch("one set per object and one map per arrow".into()));
        }
        Ok(SetFunctor {
            src,
            variance,
            sets,
            maps,
        })
    }

    /// Checked version of [`SetFunctor::raw`].
    pub fn new(src: Arc<FinCat>, variance: Variance, sets: Vec<FinSet>, maps: Vec<FinMap>) -> Result<SetFunctor> {
        let f = SetFunctor::raw(src, variance, sets, maps)?;
        let r = check_set_functor(&f);
        if let Some(bad) = r.failures().next() {
            return Err(Error::NotAFunctor(format!(
                "{} at {}",
                bad.law,
                bad.witness.as_deref().unwrap_or("?")
            )));
        }
        Ok(f)
    }

    pub fn src(&self) -> &Arc<FinCat> {
        &self.src
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn set(&self, x: usize) -> &FinSet {
        &self.sets[x]
    }

    pub fn map(&self, f: usize) -> &FinMap {
        &self.maps[f]
    }

    pub fn sets(&self) -> &[FinSet] {
        &self.sets
    }

    /// The category of all maps between the sets used here.
    pub fn set_category(&self) -> Result<FinCat> {
        set_category(&self.sets)
    }

    /// The same data as a covariant functor into `setcat` (from `C^op` for
    /// a contravariant one). `setcat` must contain every set and map used.
    pub fn realize(&self, setcat: &Arc<FinCat>) -> Result<Functor> {
        let src = match self.variance {
            Variance::Covariant => self.src.clone(),
            Variance::Contravariant => Arc::new(opposite_cat(&self.src)),
        };
        let on_obj = self
            .sets
            .iter()
            .map(|s| setcat.objects().require(&set_token(s)))
            .collect::<Result<_>>()?;
        let on_arr = self
            .maps
            .iter()
            .map(|m| setcat.arrows().require(&set_arrow_name(m)))
            .collect::<Result<_>>()?;
        Functor::raw(src, setcat.clone(), on_obj, on_arr)
    }
}

pub fn check_set_functor(f: &SetFunctor) -> LawReport {
    let mut r = LawReport::new("set-functor");
    let c = &*f.src;
    for a in 0..c.arrow_count() {
        let (s, t) = match f.variance {
            Variance::Covariant => (c.src(a), c.tgt(a)),
            Variance::Contravariant => (c.tgt(a), c.src(a)),
        };
        r.check(
            "cat.setfunctor.objects",
            f.maps[a].dom() == &f.sets[s] && f.maps[a].cod() == &f.sets[t],
            || c.arrow_name(a).to_string(),
        );
    }
    for x in 0..c.object_count() {
        r.check(
            "cat.setfunctor.unit",
            f.maps[c.identity(x)] == FinMap::identity(&f.sets[x]),
            || c.object_name(x).to_string(),
        );
    }
    for (g, h) in c.composable_pairs() {
        let gh = &f.maps[c.comp_unchecked(g, h)];
        let img = match f.variance {
            Variance::Covariant => FinMap::compose(&f.maps[g], &f.maps[h]),
            Variance::Contravariant => FinMap::compose(&f.maps[h], &f.maps[g]),
        };
        r.check("cat.setfunctor.composition", img.as_ref() == Ok(gh), || {
            format!("({},{})", c.arrow_name(g), c.arrow_name(h))
        });
    }
    r
}

/// `{a → b}` as a set of arrow names.
pub fn hom_set(c: &FinCat, a: usize, b: usize) -> FinSet {
    FinSet::collect(c.hom(a, b).into_iter().map(|f| c.arrow_name(f).clone()))
}

fn postcompose(c: &FinCat, x: usize, f: usize) -> FinMap {
    let (dom, cod) = (hom_set(c, x, c.src(f)), hom_set(c, x, c.tgt(f)));
    let table = dom
        .iter()
        .map(|h| {
            let h = c.arrow(h.as_str()).expect("hom element");
            cod.index_of(c.arrow_name(c.comp_unchecked(f, h))).expect("composite")
        })
        .collect();
    FinMap::from_table(dom, cod, table).expect("hom map")
}

fn precompose(c: &FinCat, x: usize, f: usize) -> FinMap {
    let (dom, cod) = (hom_set(c, c.tgt(f), x), hom_set(c, c.src(f), x));
    let table = dom
        .iter()
        .map(|h| {
            let h = c.arrow(h.as_str()).expect("hom element");
            cod.index_of(c.arrow_name(c.comp_unchecked(h, f))).expect("composite")
        })
        .collect();
    FinMap::from_table(dom, cod, table).expect("hom map")
}

/// `𝔏_x = {x → −}` with `f ↦ f∘−`, and the contravariant `ℜ_x = {− → x}`
/// with `f ↦ −∘f`.
pub fn hom_functors(c: &Arc<FinCat>, x: usize) -> (SetFunctor, SetFunctor) {
    let k = c.object_count();
    let l = SetFunctor {
        src: c.clone(),
        variance: Variance::Covariant,
        sets: (0..k).map(|a| hom_set(c, x, a)).collect(),
        maps: (0..c.arrow_count()).map(|f| postcompose(c, x, f)).collect(),
    };
    let r = SetFunctor {
        src: c.clone(),
        variance: Variance::Contravariant,
        sets: (0..k).map(|a| hom_set(c, a, x)).collect(),
        maps: (0..c.arrow_count()).map(|f| precompose(c, x, f)).collect(),
    };
    (l, r)
}

/// `Hom: C × C → Set` into the category of maps between hom-sets, with
/// `Hom(f, g) = g∘−∘f`.
#[derive(Clone, Debug)]
pub struct HomBifunctor {
    pub setcat: Arc<FinCat>,
    pub bifunctor: Bifunctor,
}

pub fn hom_bifunctor(c: &Arc<FinCat>) -> Result<HomBifunctor> {
    let k = c.object_count();
    let n = c.arrow_count();
    let homs: Vec<FinSet> = (0..k * k).map(|i| hom_set(c, i / k, i % k)).collect();
    let setcat = Arc::new(set_category(&homs)?);
    let on_obj = homs
        .iter()
        .map(|s| setcat.objects().require(&set_token(s)))
        .collect::<Result<_>>()?;
    let mut on_arr = Vec::with_capacity(n * n);
    for f in 0..n {
        for g in 0..n {
            let (dom, cod) = (&homs[c.tgt(f) * k + c.src(g)], &homs[c.src(f) * k + c.tgt(g)]);
            let table = dom
                .iter()
                .map(|i| {
                    let i = c.arrow(i.as_str()).expect("hom element");
                    let gif = c.comp_unchecked(c.comp_unchecked(g, i), f);
                    cod.index_of(c.arrow_name(gif)).expect("composite")
                })
                .collect();
            let m = FinMap::from_table(dom.clone(), cod.clone(), table)?;
            on_arr.push(setcat.arrows().require(&set_arrow_name(&m))?);
        }
    }
    let bifunctor = Bifunctor::raw(c.clone(), c.clone(), setcat.clone(), on_obj, on_arr)?;
    Ok(HomBifunctor { setcat, bifunctor })
}

/// `τ_f x = 𝔅(f, 1_x): 𝔅(c, x) → 𝔅(a, x)` for `f: a → c`, from `𝔅(c, −)`
/// to `𝔅(a, −)`.
pub fn slice_nat(b: &Bifunctor, f: usize) -> Result<NatTrans> {
    let c1 = b.c1();
    if f >= c1.arrow_count() {
        return Err(Error::UnknownSymbol(format!("arrow #{f}")));
    }
    let c2 = b.c2();
    let comps = (0..c2.object_count())
        .map(|x| b.arr(f, c2.identity(x)))
        .collect();
    NatTrans::new(b.left_slice(c1.tgt(f)), b.left_slice(c1.src(f)), comps)
}

/// A transformation between set-valued functors on the same category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetNat {
    pub components: Vec<FinMap>,
}

impl SetNat {
    /// `(σ·τ)x = σx∘τx`.
    pub fn then(&self, sigma: &SetNat) -> Result<SetNat> {
        Ok(SetNat {
            components: self
                .components
                .iter()
                .zip(&sigma.components)
                .map(|(t, s)| FinMap::compose(s, t))
                .collect::<Result<_>>()?,
        })
    }
}

/// Every natural transformation between two covariant set-valued functors,
/// chosen element by element with naturality checked as soon as both ends
/// of a square are known.
pub fn set_nats(g: &SetFunctor, f: &SetFunctor) -> Result<Vec<SetNat>> {
    if g.src != f.src || g.variance != Variance::Covariant || f.variance != Variance::Covariant {
        return Err(Error::Mismatch("covariant functors on one category are needed".into()));
    }
    let c = &*g.src;
    let k = c.object_count();
    // variables: (object, element of G object)
    let mut vars: Vec<(usize, usize)> = Vec::new();
    let mut var_of: Vec<Vec<usize>> = Vec::new();
    for x in 0..k {
        var_of.push((0..g.sets[x].len()).map(|e| vars.len() + e).collect());
        vars.extend((0..g.sets[x].len()).map(|e| (x, e)));
    }
    // constraint: value(var_of[d][G h (e)]) = F h (value(var_of[s][e]))
    let mut cons: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); vars.len()];
    for h in 0..c.arrow_count() {
        let (s, d) = (c.src(h), c.tgt(h));
        for e in 0..g.sets[s].len() {
            let (u, v) = (var_of[s][e], var_of[d][g.maps[h].at(e)]);
            cons[u.max(v)].push((u, v, h));
        }
    }
    let mut value = vec![0usize; vars.len()];
    let mut out: Vec<Vec<usize>> = Vec::new();
    fn go(
        i: usize,
        vars: &[(usize, usize)],
        f: &SetFunctor,
        cons: &[Vec<(usize, usize, usize)>],
        value: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        if i == vars.len() {
            if out.len() >= FUNCTOR_GUARD {
                return Err(Error::TooLarge {
                    what: "natural transformation enumeration",
                    size: out.len() + 1,
                    bound: FUNCTOR_GUARD,
                });
            }
            out.push(value.clone());
            return Ok(());
        }
        for y in 0..f.sets[vars[i].0].len() {
            value[i] = y;
            if cons[i].iter().all(|&(u, v, h)| value[v] == f.maps[h].at(value[u])) {
                go(i + 1, vars, f, cons, value, out)?;
            }
        }
        Ok(())
    }
    go(0, &vars, f, &cons, &mut value, &mut out)?;
    out.into_iter()
        .map(|vals| {
            let components = (0..k)
                .map(|x| {
                    let table = var_of[x].iter().map(|&v| vals[v]).collect();
                    FinMap::from_table(g.sets[x].clone(), f.sets[x].clone(), table)
                })
                .collect::<Result<_>>()?;
            Ok(SetNat { components })
        })
        .collect()
}

pub fn set_nat_is_natural(g: &SetFunctor, f: &SetFunctor, t: &SetNat) -> bool {
    let c = &*g.src;
    (0..c.arrow_count()).all(|h| {
        let (s, d) = (c.src(h), c.tgt(h));
        FinMap::compose(&t.components[d], &g.maps[h]) == FinMap::compose(&f.maps[h], &t.components[s])
    })
}

/// `Nat(𝔏_a, 𝔉)`, the map `φ(τ) = τa(1_a)` onto `𝔉a` and its inverse
/// `x ↦ τ_x` with `τ_x c(f) = 𝔉f(x)`.
#[derive(Clone, Debug)]
pub struct Yoneda {
    pub hom: SetFunctor,
    pub nat_set: Vec<SetNat>,
    /// from the names `n0, n1, ...` of `nat_set` to `𝔉a`
    pub phi: FinMap,
    /// `τ_x` for each element of `𝔉a`, in order
    pub inverse: Vec<SetNat>,
    pub report: LawReport,
}

fn numbered(prefix: &str, n: usize) -> Vec<Symbol> {
    let w = n.max(1).to_string().len();
    (0..n).map(|i| Symbol(format!("{prefix}{i:0w$}"))).collect()
}

pub fn yoneda(c: &Arc<FinCat>, a: usize, f: &SetFunctor) -> Result<Yoneda> {
    if f.src != *c {
        return Err(Error::Mismatch("functor is not on this category".into()));
    }
    let (l, _) = hom_functors(c, a);
    let nat_set = set_nats(&l, f)?;
    let one = l.sets[a]
        .index_of(c.arrow_name(c.identity(a)))
        .expect("identity in its hom-set");
    let names = numbered("n", nat_set.len());
    let fa = f.sets[a].clone();
    let phi = FinMap::from_table(
        FinSet::collect(names),
        fa.clone(),
        nat_set.iter().map(|t| t.components[a].at(one)).collect(),
    )?;
    let inverse: Vec<SetNat> = (0..fa.len())
        .map(|x| {
            let components = (0..c.object_count())
                .map(|d| {
                    let table = l.sets[d]
                        .iter()
                        .map(|h| f.maps[c.arrow(h.as_str()).expect("arrow")].at(x))
                        .collect();
                    FinMap::from_table(l.sets[d].clone(), f.sets[d].clone(), table)
                })
                .collect::<Result<_>>()?;
            Ok(SetNat { components })
        })
        .collect::<Result<_>>()?;
    let mut r = LawReport::new("yoneda");
    r.check("cat.yoneda.bijective", phi.classify().bijective, || format!("{phi}"));
    for (x, t) in inverse.iter().enumerate() {
        r.check("cat.yoneda.inverse_natural", set_nat_is_natural(&l, f, t), || {
            fa.get(x).to_string()
        });
        let back = nat_set.iter().position(|s| s == t);
        r.check(
            "cat.yoneda.inverse",
            back.is_some_and(|k| phi.at(k) == x),
            || fa.get(x).to_string(),
        );
    }
    for (k, t) in nat_set.iter().enumerate() {
        r.check("cat.yoneda.inverse", inverse.get(phi.at(k)) == Some(t), || {
            format!("n{k}")
        });
    }
    Ok(Yoneda {
        hom: l,
        nat_set,
        phi,
        inverse,
        report: r,
    })
}

/// `f†: 𝔏_c → 𝔏_a` for `f: a → c`, with components `h ↦ h∘f`.
pub fn dagger(c: &Arc<FinCat>, f: usize) -> SetNat {
    SetNat {
        components: (0..c.object_count())
            .map(|x| {
                let (dom, cod) = (hom_set(c, c.tgt(f), x), hom_set(c, c.src(f), x));
                let table = dom
                    .iter()
                    .map(|h| {
                        let h = c.arrow(h.as_str()).expect("hom element");
                        cod.index_of(c.arrow_name(c.comp_unchecked(h, f))).expect("composite")
                    })
                    .collect();
                FinMap::from_table(dom, cod, table).expect("hom map")
            })
            .collect(),
    }
}

/// Naturality of `Φ` in the object argument: for `f: a → c` and
/// `α ∈ Nat(𝔏_a, 𝔉)`, `α·f†` lies in `Nat(𝔏_c, 𝔉)` and
/// `φ(α·f†) = 𝔉f(φ α)`. With `taus` between `𝔉` and `𝔊`, also
/// `φ(τ·α) = τa(φ α)`.
pub fn yoneda_naturality(c: &Arc<FinCat>, f: &SetFunctor, g: &SetFunctor, taus: &[SetNat]) -> Result<LawReport> {
    let mut r = LawReport::new("yoneda-naturality");
    let k = c.object_count();
    let yf: Vec<Yoneda> = (0..k).map(|a| yoneda(c, a, f)).collect::<Result<_>>()?;
    let yg: Vec<Yoneda> = (0..k).map(|a| yoneda(c, a, g)).collect::<Result<_>>()?;
    for h in 0..c.arrow_count() {
        let (a, b) = (c.src(h), c.tgt(h));
        let d = dagger(c, h);
        for (i, alpha) in yf[a].nat_set.iter().enumerate() {
            let moved = d.then(alpha)?;
            let pos = yf[b].nat_set.iter().position(|s| *s == moved);
            let expect = f.maps[h].at(yf[a].phi.at(i));
            r.check(
                "cat.yoneda.phi_natural",
                pos.is_some_and(|p| yf[b].phi.at(p) == expect),
                || format!("({},n{i})", c.arrow_name(h)),
            );
        }
    }
    for (j, tau) in taus.iter().enumerate() {
        r.check("cat.yoneda.tau_natural", set_nat_is_natural(f, g, tau), || format!("tau{j}"));
        for a in 0..k {
            for (i, alpha) in yf[a].nat_set.iter().enumerate() {
                let moved = alpha.then(tau)?;
                let pos = yg[a].nat_set.iter().position(|s| *s == moved);
                let expect = tau.components[a].at(yf[a].phi.at(i));
                r.check(
                    "cat.yoneda.phi_natural",
                    pos.is_some_and(|p| yg[a].phi.at(p) == expect),
                    || format!("(tau{j},{},n{i})", c.object_name(a)),
                );
            }
        }
    }
    Ok(r)
}

/// For every pair of objects, `f ↦ f†` is a bijection
/// `{b → a} → Nat(𝔏_a, 𝔏_b)`.
pub fn yoneda_embedding(c: &Arc<FinCat>) -> Result<LawReport> {
    let mut r = LawReport::new("yoneda-embedding");
    let k = c.object_count();
    let ls: Vec<SetFunctor> = (0..k).map(|a| hom_functors(c, a).0).collect();
    for a in 0..k {
        for b in 0..k {
            let nats = set_nats(&ls[a], &ls[b])?;
            let images: Vec<SetNat> = c.hom(b, a).into_iter().map(|f| dagger(c, f)).collect();
            let pair = || format!("({},{})", c.object_name(a), c.object_name(b));
            let mut hit = vec![false; nats.len()];
            let mut faithful = true;
            for img in &images {
                match nats.iter().position(|t| t == img) {
                    Some(p) if !hit[p] => hit[p] = true,
                    _ => faithful = false,
                }
            }
            r.check("cat.yoneda.embedding_faithful", faithful, pair);
            r.check("cat.yoneda.embedding_full", hit.iter().all(|&h| h), pair);
        }
    }
    Ok(r)
}

/// `G` onto its group of left translations, read off `𝔏_*` on the
/// one-object category of `G`.
pub fn cayley(g: &FinGroup) -> Result<GroupHom> {
    let c = Arc::new(from_group(g));
    let (l, _) = hom_functors(&c, 0);
    // arrows of the one-object category are the elements, in carrier order
    let maps: Vec<FinMap> = (0..g.len()).map(|x| l.maps[x].clone()).collect();
    let t = transformation_group(g.carrier(), &maps)?;
    let map = FinMap::new(
        g.carrier().clone(),
        t.carrier().clone(),
        maps.iter()
            .enumerate()
            .map(|(x, m)| (g.name(x).clone(), Symbol(m.to_string()))),
    )?;
    hom_check(g, &t, &map)
}

/// For representations `(x, β)` and `(y, γ)` of `𝔉` (natural
/// transformations `𝔏_x → 𝔉`, `𝔏_y → 𝔉` with bijective components), the
/// unique isomorphism `f: x → y` with `γ = β·f†`.
pub fn compare_representations(
    c: &Arc<FinCat>,
    f: &SetFunctor,
    (x, beta): (usize, &SetNat),
    (y, gamma): (usize, &SetNat),
) -> Result<usize> {
    for (o, t) in [(x, beta), (y, gamma)] {
        let (l, _) = hom_functors(c, o);
        let bijective = t.components.len() == c.object_count()
            && t.components.iter().all(|m| m.classify().bijective);
        if !bijective || !set_nat_is_natural(&l, f, t) {
            return Err(Error::NotARepresentation(c.object_name(o).to_string()));
        }
    }
    let found: Vec<usize> = c
        .hom(x, y)
        .into_iter()
        .filter(|&h| super::cat::inverse(c, h).is_some())
        .filter(|&h| dagger(c, h).then(beta).as_ref() == Ok(gamma))
        .collect();
    match found.as_slice() {
        [h] => Ok(*h),
        [] => Err(Error::NotIsomorphicRepresentations),
        _ => Err(Error::Invalid("more than one connecting isomorphism".into())),
    }
}

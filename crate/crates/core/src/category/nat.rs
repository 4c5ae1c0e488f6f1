use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::cat::{product_cat, CatData, FinCat};
use super::functor::{all_functors, compose_functors, pair_arrow, pair_object, Functor, FUNCTOR_GUARD};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{pair_symbol, FinSet, Symbol};

/// Components `τa: 𝔉a → 𝔊a` for parallel functors `𝔉, 𝔊`. Such a family
/// is a bridge; it is natural when every square commutes, which
/// [`bridge_check`] decides.
#[derive(Clone, PartialEq, Eq)]
pub struct NatTrans {
    from: Functor,
    to: Functor,
    comps: Vec<usize>,
}

impl NatTrans {
    pub fn new(from: Functor, to: Functor, comps: Vec<usize>) -> Result<NatTrans> {
        if from.src() != to.src() || from.tgt() != to.tgt() {
            return Err(Error::Mismatch("functors are not parallel".into()));
        }
        let (c, d) = (from.src(), from.tgt());
        if comps.len() != c.object_count() {
            return Err(Error::Mismatch("one component per object is needed".into()));
        }
        for (x, &t) in comps.iter().enumerate() {
            if t >= d.arrow_count() || d.src(t) != from.obj(x) || d.tgt(t) != to.obj(x) {
                return Err(Error::EndpointError(format!(
                    "component at {}",
                    c.object_name(x)
                )));
            }
        }
        Ok(NatTrans { from, to, comps })
    }

    pub fn from_names(from: Functor, to: Functor, comps: &[(&str, &str)]) -> Result<NatTrans> {
        let (c, d) = (from.src().clone(), from.tgt().clone());
        let mut table = vec![usize::MAX; c.object_count()];
        for (x, t) in comps {
            table[c.object(x)?] = d.arrow(t)?;
        }
        if let Some(x) = table.iter().position(|&t| t == usize::MAX) {
            return Err(Error::NotTotal(c.object_name(x).to_string()));
        }
        NatTrans::new(from, to, table)
    }

    /// `1_𝔉`.
    pub fn identity(f: &Functor) -> NatTrans {
        let comps = (0..f.src().object_count())
            .map(|x| f.tgt().identity(f.obj(x)))
            .collect();
        NatTrans {
            from: f.clone(),
            to: f.clone(),
            comps,
        }
    }

    pub fn from(&self) -> &Functor {
        &self.from
    }

    pub fn to(&self) -> &Functor {
        &self.to
    }

    pub fn at(&self, x: usize) -> usize {
        self.comps[x]
    }

    pub fn components(&self) -> &[usize] {
        &self.comps
    }
}

impl fmt::Debug for NatTrans {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, d) = (self.from.src(), self.from.tgt());
        let parts: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .map(|(x, &t)| format!("{}:{}", c.object_name(x), d.arrow_name(t)))
            .collect();
        write!(f, "NatTrans[{}]", parts.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct BridgeCheck {
    pub is_bridge: bool,
    pub is_natural: bool,
    /// least arrow whose square fails
    pub witness: Option<String>,
    pub report: LawReport,
}

fn square_holds(t: &NatTrans, f: usize) -> bool {
    let (c, d) = (t.from.src(), t.from.tgt());
    let (a, b) = (c.src(f), c.tgt(f));
    d.comp(t.comps[b], t.from.arr(f)) == d.comp(t.to.arr(f), t.comps[a])
}

pub fn naturality(t: &NatTrans) -> LawReport {
    let mut r = LawReport::new("naturality");
    let c = t.from.src();
    for f in 0..c.arrow_count() {
        r.check("cat.nat.square", square_holds(t, f), || c.arrow_name(f).to_string());
    }
    r
}

/// Builds the bridge (failing with `EndpointError` on a misplaced
/// component) and decides naturality. Into a category with at most one
/// arrow between two objects every bridge is natural, which is recorded.
pub fn bridge_check(from: &Functor, to: &Functor, comps: Vec<usize>) -> Result<BridgeCheck> {
    let t = NatTrans::new(from.clone(), to.clone(), comps)?;
    let mut report = naturality(&t);
    let natural = report.passed();
    if from.tgt().is_thin() {
        report.check("cat.bridge.thin_natural", natural, || "square".to_string());
    }
    let witness = report.get("cat.nat.square").and_then(|c| c.witness.clone());
    Ok(BridgeCheck {
        is_bridge: true,
        is_natural: natural,
        witness,
        report,
    })
}

/// The category whose objects are the components `τa` and whose arrows are
/// formal `τ(f): τa → τb` with `τ(g)∘τ(f) = τ(g∘f)`, with the functor
/// `a ↦ τa`, `f ↦ τ(f)`. Defined when distinct objects get distinct
/// components.
#[derive(Clone, Debug)]
pub struct BridgeCategory {
    pub cat: Arc<FinCat>,
    pub functor: Functor,
}

pub fn bridge_category(t: &NatTrans) -> Result<BridgeCategory> {
    let (c, d) = (t.from.src(), t.from.tgt());
    let mut seen: HashMap<usize, usize> = HashMap::new();
    for x in 0..c.object_count() {
        if let Some(y) = seen.insert(t.comps[x], x) {
            return Err(Error::Invalid(format!(
                "components at {} and {} coincide",
                c.object_name(y),
                c.object_name(x)
            )));
        }
    }
    let obj = |x: usize| d.arrow_name(t.comps[x]).clone();
    let arr = |f: usize| Symbol(format!("τ({})", c.arrow_name(f)));
    let data = CatData {
        objects: FinSet::collect((0..c.object_count()).map(obj)),
        arrows: (0..c.arrow_count())
            .map(|f| (arr(f), obj(c.src(f)), obj(c.tgt(f))))
            .collect(),
        identity: (0..c.object_count()).map(|x| (obj(x), arr(c.identity(x)))).collect(),
        comp: c
            .composable_pairs()
            .map(|(g, f)| (arr(g), arr(f), arr(c.comp_unchecked(g, f))))
            .collect(),
    };
    let cat = Arc::new(FinCat::new(&data)?);
    let on_obj = (0..c.object_count())
        .map(|x| cat.objects().require(&obj(x)))
        .collect::<Result<_>>()?;
    let on_arr = (0..c.arrow_count())
        .map(|f| cat.arrows().require(&arr(f)))
        .collect::<Result<_>>()?;
    let functor = Functor::raw(c.clone(), cat.clone(), on_obj, on_arr)?;
    Ok(BridgeCategory { cat, functor })
}

/// `(σ·τ)x = σx∘τx` for `τ: 𝔉 → 𝔥` and `σ: 𝔥 → 𝔍`.
pub fn vcompose(s: &NatTrans, t: &NatTrans) -> Result<NatTrans> {
    if t.to != s.from {
        return Err(Error::Mismatch("codomain of τ is not the domain of σ".into()));
    }
    let d = t.from.tgt();
    let comps = (0..t.comps.len())
        .map(|x| d.comp(s.comps[x], t.comps[x]).expect("components compose"))
        .collect();
    Ok(NatTrans {
        from: t.from.clone(),
        to: s.to.clone(),
        comps,
    })
}

/// Every natural transformation `𝔉 → 𝔊`, lexicographically by components.
pub fn all_nats(f: &Functor, g: &Functor) -> Result<Vec<NatTrans>> {
    if f.src() != g.src() || f.tgt() != g.tgt() {
        return Err(Error::Mismatch("functors are not parallel".into()));
    }
    let (c, d) = (f.src().clone(), f.tgt().clone());
    let k = c.object_count();
    let mut squares: Vec<Vec<usize>> = vec![Vec::new(); k];
    for a in 0..c.arrow_count() {
        squares[c.src(a).max(c.tgt(a))].push(a);
    }
    let cands: Vec<Vec<usize>> = (0..k).map(|x| d.hom(f.obj(x), g.obj(x))).collect();
    let mut out = Vec::new();
    let mut comps = vec![0; k];
    #[allow(clippy::too_many_arguments)]
    fn go(
        x: usize,
        f: &Functor,
        g: &Functor,
        cands: &[Vec<usize>],
        squares: &[Vec<usize>],
        comps: &mut Vec<usize>,
        out: &mut Vec<NatTrans>,
    ) -> Result<()> {
        if x == comps.len() {
            if out.len() >= FUNCTOR_GUARD {
                return Err(Error::TooLarge {
                    what: "natural transformation enumeration",
                    size: out.len() + 1,
                    bound: FUNCTOR_GUARD,
                });
            }
            out.push(NatTrans {
                from: f.clone(),
                to: g.clone(),
                comps: comps.clone(),
            });
            return Ok(());
        }
        let (c, d) = (f.src(), f.tgt());
        for &t in &cands[x] {
            comps[x] = t;
            let ok = squares[x].iter().all(|&a| {
                let (s, e) = (c.src(a), c.tgt(a));
                d.comp(comps[e], f.arr(a)) == d.comp(g.arr(a), comps[s])
            });
            if ok {
                go(x + 1, f, g, cands, squares, comps, out)?;
            }
        }
        Ok(())
    }
    go(0, f, g, &cands, &squares, &mut comps, &mut out)?;
    Ok(out)
}

/// `Cat(C, D)`: all functors as objects, all natural transformations as
/// arrows, vertical composition.
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    pub cat: Arc<FinCat>,
    pub functors: Vec<Functor>,
    pub nats: Vec<NatTrans>,
}

impl FunctorCategory {
    pub fn functor_index(&self, f: &Functor) -> Option<usize> {
        let i = self.functors.iter().position(|g| g == f)?;
        self.cat.objects().index_of(&functor_name(i, self.functors.len()))
    }

    pub fn nat_index(&self, t: &NatTrans) -> Option<usize> {
        let i = self.nats.iter().position(|s| s == t)?;
        self.cat.arrows().index_of(&nat_name(i, self.nats.len()))
    }

    /// The functor behind object `x` of `cat`.
    pub fn functor_at(&self, x: usize) -> &Functor {
        &self.functors[parse_index(self.cat.object_name(x))]
    }

    pub fn nat_at(&self, a: usize) -> &NatTrans {
        &self.nats[parse_index(self.cat.arrow_name(a))]
    }
}

fn width(n: usize) -> usize {
    n.max(1).to_string().len()
}

fn functor_name(i: usize, n: usize) -> Symbol {
    Symbol(format!("F{:0w$}", i, w = width(n)))
}

fn nat_name(i: usize, n: usize) -> Symbol {
    Symbol(format!("t{:0w$}", i, w = width(n)))
}

fn parse_index(s: &Symbol) -> usize {
    s.as_str()[1..].parse().expect("generated name")
}

pub fn functor_category(c: &Arc<FinCat>, d: &Arc<FinCat>) -> Result<FunctorCategory> {
    let functors = all_functors(c, d, false)?;
    let mut nats = Vec::new();
    let mut ends = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for t in all_nats(f, g)? {
                nats.push(t);
                ends.push((i, j));
                if nats.len() > FUNCTOR_GUARD {
                    return Err(Error::TooLarge {
                        what: "natural transformations",
                        size: nats.len(),
                        bound: FUNCTOR_GUARD,
                    });
                }
            }
        }
    }
    let (nf, nn) = (functors.len(), nats.len());
    let lookup: HashMap<(usize, usize, &[usize]), usize> = nats
        .iter()
        .enumerate()
        .map(|(k, t)| ((ends[k].0, ends[k].1, t.components()), k))
        .collect();
    let mut comp = Vec::new();
    for (k1, s) in nats.iter().enumerate() {
        for (k2, t) in nats.iter().enumerate() {
            if ends[k2].1 != ends[k1].0 {
                continue;
            }
            let st = vcompose(s, t)?;
            let k = *lookup
                .get(&(ends[k2].0, ends[k1].1, st.components()))
                .ok_or_else(|| Error::Invalid("vertical composite is not natural".into()))?;
            comp.push((nat_name(k1, nn), nat_name(k2, nn), nat_name(k, nn)));
        }
    }
    let identity = functors
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let id = NatTrans::identity(f);
            let k = lookup[&(i, i, id.components())];
            (functor_name(i, nf), nat_name(k, nn))
        })
        .collect();
    let data = CatData {
        objects: FinSet::collect((0..nf).map(|i| functor_name(i, nf))),
        arrows: (0..nn)
            .map(|k| (nat_name(k, nn), functor_name(ends[k].0, nf), functor_name(ends[k].1, nf)))
            .collect(),
        identity,
        comp,
    };
    Ok(FunctorCategory {
        cat: Arc::new(FinCat::trusted(&data)),
        functors,
        nats,
    })
}

/// `α∘τ` for `τ: 𝔣 → 𝔥` between functors `C → D` and `α: 𝔤 → 𝔦` between
/// functors `D → E`: `(α∘τ)x = α(𝔥x)∘𝔤(τx)`. Fails if the other formula
/// `𝔦(τx)∘α(𝔣x)` disagrees, which happens only when `α` is not natural.
pub fn hcompose(alpha: &NatTrans, tau: &NatTrans) -> Result<NatTrans> {
    if tau.from.tgt() != alpha.from.src() {
        return Err(Error::Mismatch("τ does not land where α starts".into()));
    }
    let e = alpha.from.tgt();
    let (f, h) = (&tau.from, &tau.to);
    let (g, i) = (&alpha.from, &alpha.to);
    let mut comps = Vec::with_capacity(tau.comps.len());
    for x in 0..tau.comps.len() {
        let one = e.comp(alpha.comps[h.obj(x)], g.arr(tau.comps[x]));
        let two = e.comp(i.arr(tau.comps[x]), alpha.comps[f.obj(x)]);
        match (one, two) {
            (Some(a), Some(b)) if a == b => comps.push(a),
            _ => {
                return Err(Error::Invalid(format!(
                    "horizontal formulas disagree at {}",
                    f.src().object_name(x)
                )))
            }
        }
    }
    Ok(NatTrans {
        from: compose_functors(g, f)?,
        to: compose_functors(i, h)?,
        comps,
    })
}

/// `(β·α)∘(σ·τ) = (β∘σ)·(α∘τ)` for `τ: 𝔉 → 𝔊`, `σ: 𝔊 → 𝔍` between
/// functors `C → D` and `α: 𝔉' → 𝔊'`, `β: 𝔊' → 𝔍'` between functors `D → E`.
pub fn interchange_check(
    alpha: &NatTrans,
    beta: &NatTrans,
    sigma: &NatTrans,
    tau: &NatTrans,
) -> Result<LawReport> {
    let lhs = hcompose(&vcompose(beta, alpha)?, &vcompose(sigma, tau)?)?;
    let rhs = vcompose(&hcompose(beta, sigma)?, &hcompose(alpha, tau)?)?;
    let mut r = LawReport::new("interchange");
    r.check("cat.interchange", lhs == rhs, || format!("{lhs:?} ≠ {rhs:?}"));
    Ok(r)
}

/// `Cat(C,D) × Cat(D,E) → Cat(C,E)`, `(𝔣, 𝔤) ↦ 𝔤∘𝔣`, `(τ, α) ↦ α∘τ`.
#[derive(Clone, Debug)]
pub struct CompositionFunctor {
    pub cd: FunctorCategory,
    pub de: FunctorCategory,
    pub ce: FunctorCategory,
    pub functor: Functor,
}

pub fn composition_functor(
    c: &Arc<FinCat>,
    d: &Arc<FinCat>,
    e: &Arc<FinCat>,
) -> Result<CompositionFunctor> {
    let cd = functor_category(c, d)?;
    let de = functor_category(d, e)?;
    let ce = functor_category(c, e)?;
    let p = Arc::new(product_cat(&cd.cat, &de.cat));
    let mut on_obj = vec![0; p.object_count()];
    for x in 0..cd.cat.object_count() {
        for y in 0..de.cat.object_count() {
            let gf = compose_functors(de.functor_at(y), cd.functor_at(x))?;
            let z = ce
                .functor_index(&gf)
                .ok_or_else(|| Error::Invalid("composite functor missing".into()))?;
            on_obj[pair_object(&p, cd.cat.object_name(x), de.cat.object_name(y))] = z;
        }
    }
    let mut on_arr = vec![0; p.arrow_count()];
    for a in 0..cd.cat.arrow_count() {
        for b in 0..de.cat.arrow_count() {
            let h = hcompose(de.nat_at(b), cd.nat_at(a))?;
            let z = ce
                .nat_index(&h)
                .ok_or_else(|| Error::Invalid("horizontal composite missing".into()))?;
            on_arr[pair_arrow(&p, cd.cat.arrow_name(a), de.cat.arrow_name(b))] = z;
        }
    }
    let functor = Functor::raw(p, ce.cat.clone(), on_obj, on_arr)?;
    Ok(CompositionFunctor { cd, de, ce, functor })
}

/// `D(𝔣, 𝔤)`: objects are arrows `σ: 𝔣a → 𝔤b`, named `((a,b),σ)`; an arrow
/// from `σ: 𝔣a → 𝔤b` to `ρ: 𝔣c → 𝔤d` is a pair `h: a → c`, `i: b → d` with
/// `ρ∘𝔣h = 𝔤i∘σ`.
pub fn arrow_category(f: &Functor, g: &Functor) -> Result<FinCat> {
    if f.tgt() != g.tgt() {
        return Err(Error::Mismatch("functors do not share a range".into()));
    }
    let (c1, c2, d) = (f.src(), g.src(), f.tgt());
    let mut objects: Vec<(usize, usize, usize)> = Vec::new();
    for a in 0..c1.object_count() {
        for b in 0..c2.object_count() {
            for s in d.hom(f.obj(a), g.obj(b)) {
                objects.push((a, b, s));
            }
        }
    }
    let oname = |&(a, b, s): &(usize, usize, usize)| {
        pair_symbol(&pair_symbol(c1.object_name(a), c2.object_name(b)), d.arrow_name(s))
    };
    // arrows: (source object, target object, h, i)
    let mut arrows: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (p, &(a, b, s)) in objects.iter().enumerate() {
        for (q, &(c, dd, r)) in objects.iter().enumerate() {
            for h in c1.hom(a, c) {
                for i in c2.hom(b, dd) {
                    if d.comp(r, f.arr(h)) == d.comp(g.arr(i), s) {
                        arrows.push((p, q, h, i));
                    }
                }
            }
        }
    }
    let aname = |&(p, q, h, i): &(usize, usize, usize, usize)| {
        Symbol(format!(
            "[{},{}]:{}=>{}",
            c1.arrow_name(h),
            c2.arrow_name(i),
            oname(&objects[p]),
            oname(&objects[q])
        ))
    };
    let index: HashMap<(usize, usize, usize, usize), usize> =
        arrows.iter().enumerate().map(|(k, &a)| (a, k)).collect();
    let mut comp = Vec::new();
    for x in &arrows {
        for y in &arrows {
            // x after y
            if y.1 == x.0 {
                let h = c1.comp_unchecked(x.2, y.2);
                let i = c2.comp_unchecked(x.3, y.3);
                let k = *index
                    .get(&(y.0, x.1, h, i))
                    .ok_or_else(|| Error::NotAFunctor("pasted square does not commute".into()))?;
                comp.push((aname(x), aname(y), aname(&arrows[k])));
            }
        }
    }
    let data = CatData {
        objects: FinSet::collect(objects.iter().map(oname)),
        arrows: arrows
            .iter()
            .map(|a| (aname(a), oname(&objects[a.0]), oname(&objects[a.1])))
            .collect(),
        identity: objects
            .iter()
            .enumerate()
            .map(|(p, o)| {
                let id = (p, p, c1.identity(o.0), c2.identity(o.1));
                (oname(o), aname(&id))
            })
            .collect(),
        comp,
    };
    FinCat::new(&data)
}

//! Named law suites. Each sweeps a family of structures exhaustively, or by
//! seeded sampling where exhaustion is out of reach.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use structa_core::category::{
    arrow_category, arrow_laws, bridge_category, check_category, discrete, from_group, from_poset, functor_category,
    hom_functors, interchange_check, opposite_cat, product_cat, vcompose, yoneda, yoneda_embedding, CatData, FinCat,
    Functor, FunctorCategory, NatTrans, SetFunctor, Variance,
};
use structa_core::group::{
    all_homs, all_subgroups, catalogue, center, commutant, coset_action_laws, cyclic, first_iso, inner_automorphisms,
    klein, normality_laws, quotient, sign, stabilizer_suite, subgroup_criteria_laws, symmetric, GroupAction,
};
use structa_core::numbers::{build_discrete, dual_order_checks, int_add, int_group_check, int_ring_check, rat_law_check};
use structa_core::order::{
    extend_chain, lattice_from_poset, lattice_laws, order_from_semilattice, zorn_maximal, Orientation, Poset,
};
use structa_core::sets::{map_sweep, Family};
use structa_core::settools::{all_filters, filter_ops, refinement_laws, sigma_equivalence_check, ultrafilter_suite};
use structa_core::top::{
    all_topologies, base_ops, closure_from_closed_check, neighborhood_laws, strict_models_brute, strict_models_sampled,
    strict_models_search,
};
use structa_core::{FinMap, FinSet, LawReport, Mask, Result as CoreResult, Symbol};

use crate::error::CliError;
use crate::fixtures::{Expect, FIXTURES};

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: DEFAULT_SEED }
    }
}

pub const SUITES: &[(&str, &str)] = &[
    ("functions", "image and preimage calculus for every map between sets of at most three points"),
    ("categories", "category and arrow laws on constructed categories, and planted associativity defects"),
    ("interchange", "sampled grids of natural transformations and both horizontal composites"),
    ("yoneda", "the Yoneda bijection on chains, cyclic groups and two small categories"),
    ("integers", "integer addition on a discrete window and the ring laws"),
    ("rationals", "field and order laws on a window of rationals"),
    ("lattices", "lattices from posets on at most four points and back"),
    ("zorn", "maximal elements and maximal chains on posets of at most five points"),
    ("groups", "subgroups, normality and the first isomorphism theorem up to order six"),
    ("actions", "coset actions and stabilizers in S3"),
    ("filters", "filters and ultrafilters on at most four points"),
    ("sigma", "generated sigma-algebras for every family on three points"),
    ("topology", "topologies on at most three points, bases, neighborhoods, closures, and the strict closure axioms"),
    ("cli", "the shipped documents: exit codes, canonical text and thread independence"),
];

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<LawReport, CliError> {
    match name {
        "functions" => Ok(functions()?),
        "categories" => categories(),
        "interchange" => Ok(interchange(config.seed)?),
        "yoneda" => Ok(yoneda_suite()?),
        "integers" => Ok(integers(config.seed)?),
        "rationals" => Ok(rationals()?),
        "lattices" => Ok(lattices()?),
        "zorn" => Ok(zorn()?),
        "groups" => Ok(groups()?),
        "actions" => Ok(actions()?),
        "filters" => Ok(filters()?),
        "sigma" => Ok(sigma()?),
        "topology" => Ok(topology(config.seed)?),
        "cli" => cli(),
        "all" => {
            let mut all = LawReport::new("all");
            for (name, _) in SUITES {
                all.absorb(run_suite(name, config)?);
            }
            Ok(all)
        }
        _ => Err(CliError::UnknownSuite(name.to_string())),
    }
}

/// Runs `f` on every item in parallel and absorbs the reports in order.
fn sweep<T, F>(suite: &str, items: &[T], f: F) -> CoreResult<LawReport>
where
    T: Sync,
    F: Fn(&T) -> CoreResult<LawReport> + Sync + Send,
{
    let parts: Vec<CoreResult<LawReport>> = items.par_iter().map(f).collect();
    let mut r = LawReport::new(suite);
    for p in parts {
        r.absorb(p?);
    }
    Ok(r)
}

pub fn all_maps(dom: &FinSet, cod: &FinSet) -> Vec<FinMap> {
    let (n, m) = (dom.len(), cod.len());
    if m == 0 {
        return if n == 0 {
            vec![FinMap::from_fn(dom.clone(), cod.clone(), |_| 0)]
        } else {
            Vec::new()
        };
    }
    let count = m.pow(n as u32);
    (0..count)
        .map(|mut k| {
            let table = (0..n)
                .map(|_| {
                    let d = k % m;
                    k /= m;
                    d
                })
                .collect();
            FinMap::from_table(dom.clone(), cod.clone(), table).expect("table in range")
        })
        .collect()
}

fn functions() -> CoreResult<LawReport> {
    let sets: Vec<FinSet> = (0..=3).map(|n| FinSet::numbered("p", n)).collect();
    let maps: Vec<FinMap> = sets
        .iter()
        .flat_map(|a| sets.iter().flat_map(move |b| all_maps(a, b)))
        .collect();
    let mut r = sweep("functions", &maps, map_sweep)?;
    for f in &maps {
        let left = FinMap::compose(f, &FinMap::identity(f.dom()))?;
        let right = FinMap::compose(&FinMap::identity(f.cod()), f)?;
        r.check("core.compose.identity", left == *f && right == *f, || f.to_string());
    }
    let endo = all_maps(&sets[3], &sets[3]);
    let triples: Vec<(usize, usize)> = (0..endo.len()).flat_map(|h| (0..endo.len()).map(move |g| (h, g))).collect();
    r.absorb(sweep("functions", &triples, |&(h, g)| {
        let (h, g) = (&endo[h], &endo[g]);
        let hg = FinMap::compose(h, g)?;
        let mut r = LawReport::new("functions");
        for f in &endo {
            let lhs = FinMap::compose(h, &FinMap::compose(g, f)?)?;
            let rhs = FinMap::compose(&hg, f)?;
            r.check("core.compose.associative", lhs == rhs, || format!("({h},{g},{f})"));
        }
        Ok(r)
    })?);
    Ok(r)
}

/// The constructed categories of the `categories` suite.
pub fn category_corpus() -> CoreResult<Vec<(String, Arc<FinCat>)>> {
    let mut out: Vec<(String, FinCat)> = Vec::new();
    for n in 1..=4 {
        out.push((format!("chain{n}"), from_poset(&Poset::chain(n))));
    }
    out.push(("diamond".into(), from_poset(&Poset::diamond())));
    out.push(("antichain2".into(), from_poset(&Poset::antichain(2))));
    out.push(("powerset2".into(), from_poset(&Poset::powerset(&FinSet::of(&["a", "b"]))?)));
    for n in 1..=4 {
        out.push((format!("Z{n}"), from_group(&cyclic(n)?)));
    }
    out.push(("klein".into(), from_group(&klein())));
    out.push(("S3".into(), from_group(&symmetric(3)?)));
    let chain2 = Arc::new(from_poset(&Poset::chain(2)));
    let z2 = Arc::new(from_group(&cyclic(2)?));
    let disc2 = Arc::new(discrete(&FinSet::of(&["u", "v"])));
    out.push(("chain2xZ2".into(), product_cat(&chain2, &z2)));
    out.push(("chain2xchain2".into(), product_cat(&chain2, &chain2)));
    out.push(("discrete2xchain2".into(), product_cat(&disc2, &chain2)));
    let opposites: Vec<(String, FinCat)> = ["chain3", "diamond", "S3", "chain2xZ2"]
        .iter()
        .map(|name| {
            let c = &out.iter().find(|(n, _)| n == name).expect("corpus member").1;
            (format!("{name}^op"), opposite_cat(c))
        })
        .collect();
    out.extend(opposites);
    let fc_chain = functor_category(&chain2, &chain2)?;
    let fc_disc = functor_category(&disc2, &chain2)?;
    let fc_z2 = functor_category(&z2, &z2)?;
    out.push(("[chain2,chain2]".into(), (*fc_chain.cat).clone()));
    out.push(("[discrete2,chain2]".into(), (*fc_disc.cat).clone()));
    out.push(("[Z2,Z2]".into(), (*fc_z2.cat).clone()));
    let moving = |fc: &FunctorCategory| -> NatTrans {
        fc.nats
            .iter()
            .find(|t| t.from() != t.to())
            .or_else(|| fc.nats.iter().find(|t| t.components().iter().any(|&a| !fc_is_identity(t, a))))
            .unwrap_or(&fc.nats[0])
            .clone()
    };
    out.push(("bridge(chain2)".into(), (*bridge_category(&moving(&fc_chain))?.cat).clone()));
    out.push(("bridge(Z2)".into(), (*bridge_category(&moving(&fc_z2))?.cat).clone()));
    let id_chain = Functor::identity(&chain2);
    let id_z2 = Functor::identity(&z2);
    out.push(("arrows(chain2)".into(), arrow_category(&id_chain, &id_chain)?));
    out.push(("arrows(Z2)".into(), arrow_category(&id_z2, &id_z2)?));
    Ok(out.into_iter().map(|(n, c)| (n, Arc::new(c))).collect())
}

fn fc_is_identity(t: &NatTrans, a: usize) -> bool {
    t.from().tgt().is_identity(a)
}

/// Names of the shipped category documents with a planted associativity defect.
pub fn defect_fixtures() -> impl Iterator<Item = &'static crate::fixtures::Fixture> {
    FIXTURES.iter().filter(|f| f.name.starts_with("category_defect_"))
}

fn categories() -> Result<LawReport, CliError> {
    let corpus = category_corpus()?;
    let mut r = sweep("categories", &corpus, |(_, c)| {
        let mut r = check_category(&c.data(), true);
        r.absorb(arrow_laws(c));
        Ok(r)
    })?;
    r.note(format!("{} constructed categories", corpus.len()));
    for fx in defect_fixtures() {
        let doc = crate::doc::parse_shape(fx.text)?;
        let data: CatData = crate::model::build_cat_data(&doc, "$")?;
        let found = check_category(&data, true);
        let assoc = found.get("cat.associative");
        let hit = assoc.is_some_and(|a| !a.passed());
        r.check("cat.defect.found", hit, || fx.name.to_string());
        if let Some(w) = assoc.and_then(|a| a.witness.as_ref()) {
            r.note(format!("{}: associativity fails at {w}", fx.name));
        }
    }
    Ok(r)
}

/// Both formulas for the horizontal composite `α∘τ`, compared at every object.
pub fn hcompose_agreement(alpha: &NatTrans, tau: &NatTrans, r: &mut LawReport) {
    let e = alpha.from().tgt();
    let (f, h) = (tau.from(), tau.to());
    let (g, i) = (alpha.from(), alpha.to());
    for x in 0..f.src().object_count() {
        let one = e.comp(alpha.at(h.obj(x)), g.arr(tau.at(x)));
        let two = e.comp(i.arr(tau.at(x)), alpha.at(f.obj(x)));
        r.check("cat.hcompose.agree", one.is_some() && one == two, || {
            f.src().object_name(x).to_string()
        });
    }
}

/// Natural transformations of `fc` grouped by the index of their source functor.
fn by_source(fc: &FunctorCategory) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); fc.functors.len()];
    for (k, t) in fc.nats.iter().enumerate() {
        out[fc.functor_index(t.from()).expect("listed functor")].push(k);
    }
    out
}

pub const INTERCHANGE_GRIDS: usize = 1000;

fn interchange(seed: u64) -> CoreResult<LawReport> {
    let pool: Vec<Arc<FinCat>> = vec![
        Arc::new(from_poset(&Poset::chain(1))),
        Arc::new(from_poset(&Poset::chain(2))),
        Arc::new(from_poset(&Poset::chain(3))),
        Arc::new(discrete(&FinSet::of(&["u", "v"]))),
        Arc::new(from_group(&cyclic(2)?)),
        Arc::new(from_group(&cyclic(3)?)),
        Arc::new(from_poset(&Poset::diamond())),
    ];
    let k = pool.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let fcs: Vec<FunctorCategory> = pairs
        .par_iter()
        .map(|&(i, j)| functor_category(&pool[i], &pool[j]))
        .collect::<CoreResult<_>>()?;
    let starts: Vec<Vec<Vec<usize>>> = fcs.iter().map(by_source).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |fc: usize, rng: &mut ChaCha8Rng| {
        let first = rng.gen_range(0..fcs[fc].nats.len());
        let mid = fcs[fc].functor_index(fcs[fc].nats[first].to()).expect("listed functor");
        let next = &starts[fc][mid];
        (first, next[rng.gen_range(0..next.len())])
    };
    let grids: Vec<(usize, usize, usize, usize, usize, usize)> = (0..INTERCHANGE_GRIDS)
        .map(|_| {
            let (c, d, e) = (rng.gen_range(0..k), rng.gen_range(0..k), rng.gen_range(0..k));
            let (cd, de) = (c * k + d, d * k + e);
            let (tau, sigma) = pick(cd, &mut rng);
            let (alpha, beta) = pick(de, &mut rng);
            (cd, tau, sigma, de, alpha, beta)
        })
        .collect();
    let mut r = sweep("interchange", &grids, |&(cd, tau, sigma, de, alpha, beta)| {
        let (tau, sigma) = (&fcs[cd].nats[tau], &fcs[cd].nats[sigma]);
        let (alpha, beta) = (&fcs[de].nats[alpha], &fcs[de].nats[beta]);
        let mut r = interchange_check(alpha, beta, sigma, tau)?;
        hcompose_agreement(alpha, tau, &mut r);
        hcompose_agreement(beta, sigma, &mut r);
        hcompose_agreement(&vcompose(beta, alpha)?, &vcompose(sigma, tau)?, &mut r);
        Ok(r)
    })?;
    r.note(format!("{INTERCHANGE_GRIDS} grids, seed {seed}"));
    Ok(r)
}

/// Adds `1∘f = f = f∘1` for every arrow to a composition table.
pub fn with_units(mut data: CatData) -> CatData {
    let unit = |x: &Symbol| data.identity.iter().find(|(o, _)| o == x).map(|(_, a)| a.clone());
    let mut extra = Vec::new();
    for (f, s, t) in &data.arrows {
        if let Some(i) = unit(t) {
            extra.push((i, f.clone(), f.clone()));
        }
        if let Some(i) = unit(s) {
            extra.push((f.clone(), i, f.clone()));
        }
    }
    for e in extra {
        if !data.comp.iter().any(|c| c.0 == e.0 && c.1 == e.1) {
            data.comp.push(e);
        }
    }
    data
}

/// Two hand-built three-object categories: a parallel pair followed by a
/// coequalizing arrow, and an idempotent absorbed by the arrow out of it.
pub fn small_categories() -> CoreResult<Vec<(String, Arc<FinCat>)>> {
    let parallel = CatData::of(
        &["a", "b", "c"],
        &[
            ("1a", "a", "a"),
            ("1b", "b", "b"),
            ("1c", "c", "c"),
            ("f", "a", "b"),
            ("g", "a", "b"),
            ("h", "b", "c"),
            ("k", "a", "c"),
        ],
        &[("a", "1a"), ("b", "1b"), ("c", "1c")],
        &[("h", "f", "k"), ("h", "g", "k")],
    )?;
    let parallel = with_units(parallel);
    let idempotent = CatData::of(
        &["x", "y", "z"],
        &[
            ("1x", "x", "x"),
            ("1y", "y", "y"),
            ("1z", "z", "z"),
            ("e", "x", "x"),
            ("u", "x", "y"),
            ("v", "y", "z"),
            ("vu", "x", "z"),
        ],
        &[("x", "1x"), ("y", "1y"), ("z", "1z")],
        &[("e", "e", "e"), ("u", "e", "u"), ("v", "u", "vu"), ("vu", "e", "vu")],
    )?;
    let idempotent = with_units(idempotent);
    Ok(vec![
        ("parallel".into(), Arc::new(FinCat::new(&parallel)?)),
        ("idempotent".into(), Arc::new(FinCat::new(&idempotent)?)),
    ])
}

fn constant_functor(c: &Arc<FinCat>, set: &FinSet) -> CoreResult<SetFunctor> {
    let sets = vec![set.clone(); c.object_count()];
    let maps = vec![FinMap::identity(set); c.arrow_count()];
    SetFunctor::new(c.clone(), Variance::Covariant, sets, maps)
}

/// Set-valued functors used as test inputs on `c`.
pub fn yoneda_inputs(c: &Arc<FinCat>, growing: bool, parity: bool) -> CoreResult<Vec<SetFunctor>> {
    let mut out: Vec<SetFunctor> = (0..c.object_count()).map(|x| hom_functors(c, x).0).collect();
    out.push(constant_functor(c, &FinSet::of(&["*"]))?);
    out.push(constant_functor(c, &FinSet::of(&["p", "q"]))?);
    if growing {
        let sets: Vec<FinSet> = (0..c.object_count()).map(|x| FinSet::numbered("e", x + 1)).collect();
        let maps = (0..c.arrow_count())
            .map(|f| FinMap::from_table(sets[c.src(f)].clone(), sets[c.tgt(f)].clone(), (0..=c.src(f)).collect()))
            .collect::<CoreResult<_>>()?;
        out.push(SetFunctor::new(c.clone(), Variance::Covariant, sets, maps)?);
    }
    if parity {
        let two = FinSet::of(&["even", "odd"]);
        let maps = (0..c.arrow_count())
            .map(|f| {
                let shift = c.arrow_name(f).as_str().parse::<usize>().expect("numbered element") % 2;
                FinMap::from_table(two.clone(), two.clone(), vec![shift, 1 - shift])
            })
            .collect::<CoreResult<_>>()?;
        out.push(SetFunctor::new(c.clone(), Variance::Covariant, vec![two; 1], maps)?);
    }
    Ok(out)
}

pub type YonedaCase = (String, Arc<FinCat>, Vec<SetFunctor>);

/// Categories, with their functor inputs, for the Yoneda suite.
pub fn yoneda_cases() -> CoreResult<Vec<YonedaCase>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        let c = Arc::new(from_poset(&Poset::chain(n)));
        let inputs = yoneda_inputs(&c, true, false)?;
        out.push((format!("chain{n}"), c, inputs));
    }
    for n in 1..=4 {
        let c = Arc::new(from_group(&cyclic(n)?));
        let inputs = yoneda_inputs(&c, false, n % 2 == 0)?;
        out.push((format!("Z{n}"), c, inputs));
    }
    for (name, c) in small_categories()? {
        let inputs = yoneda_inputs(&c, false, false)?;
        out.push((name, c, inputs));
    }
    Ok(out)
}

fn yoneda_suite() -> CoreResult<LawReport> {
    let cases = yoneda_cases()?;
    let jobs: Vec<(usize, usize, usize)> = cases
        .iter()
        .enumerate()
        .flat_map(|(i, (_, c, fs))| (0..c.object_count()).flat_map(move |a| (0..fs.len()).map(move |f| (i, a, f))))
        .collect();
    let mut r = sweep("yoneda", &jobs, |&(i, a, f)| {
        let (name, c, fs) = &cases[i];
        let y = yoneda(c, a, &fs[f])?;
        let mut r = y.report;
        r.check("cat.yoneda.count", y.nat_set.len() == fs[f].set(a).len(), || {
            format!("{name} at {} with input {f}", c.object_name(a))
        });
        Ok(r)
    })?;
    r.absorb(sweep("yoneda", &cases, |(_, c, _)| yoneda_embedding(c))?);
    Ok(r)
}

pub const INT_PAIRS: usize = 10_000;

fn integers(seed: u64) -> CoreResult<LawReport> {
    let mut r = int_group_check(30)?;
    let w = build_discrete(200)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(i64, i64)> = (0..INT_PAIRS)
        .map(|_| (rng.gen_range(-100..=100), rng.gen_range(-100..=100)))
        .collect();
    r.absorb(sweep("integers", &pairs, |&(a, b)| {
        let sum = int_add(&w, &a.into(), &b.into())?;
        let mut r = LawReport::new("integers");
        r.check("numbers.int.add_oracle", sum.to_i64() == Some(a + b), || format!("{a}+{b}"));
        Ok(r)
    })?);
    r.absorb(int_ring_check(INT_PAIRS, 100, seed));
    Ok(r)
}

fn rationals() -> CoreResult<LawReport> {
    let mut r = rat_law_check(6, 6);
    r.absorb(dual_order_checks(6)?);
    Ok(r)
}

/// Pairwise suprema and infima by scanning bounds.
pub fn pairwise_bounds_exist(p: &Poset) -> bool {
    let n = p.len();
    let extreme = |x: usize, y: usize, up: bool| {
        let bounds: Vec<usize> = (0..n)
            .filter(|&z| if up { p.leq(x, z) && p.leq(y, z) } else { p.leq(z, x) && p.leq(z, y) })
            .collect();
        bounds
            .iter()
            .any(|&b| bounds.iter().all(|&z| if up { p.leq(b, z) } else { p.leq(z, b) }))
    };
    (0..n).all(|x| (0..n).all(|y| extreme(x, y, true) && extreme(x, y, false)))
}

fn lattices() -> CoreResult<LawReport> {
    let posets: Vec<Poset> = (0..=4)
        .map(Poset::all_labeled)
        .collect::<CoreResult<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    sweep("lattices", &posets, |p| {
        let mut r = LawReport::new("lattices");
        let built = lattice_from_poset(p);
        r.check("order.lattice.exists_iff_pairwise", built.is_ok() == pairwise_bounds_exist(p), || {
            p.to_string()
        });
        if let Ok(l) = built {
            r.absorb(lattice_laws(&l));
            let back = order_from_semilattice(&l.join, Orientation::Join)? == *p
                && order_from_semilattice(&l.meet, Orientation::Meet)? == *p;
            r.check("order.lattice.roundtrip", back, || p.to_string());
        }
        Ok(r)
    })
}

/// Whether `chain` is a chain to which no further element can be added.
pub fn is_maximal_chain(p: &Poset, chain: Mask) -> bool {
    let n = p.len();
    let is_chain = |m: Mask| m.iter().all(|x| m.iter().all(|y| p.leq(x, y) || p.leq(y, x)));
    is_chain(chain) && (0..n).all(|k| chain.contains(k) || !is_chain(chain.insert(k)))
}

fn zorn() -> CoreResult<LawReport> {
    let posets: Vec<Poset> = (0..=5)
        .map(Poset::all_labeled)
        .collect::<CoreResult<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    sweep("zorn", &posets, |p| {
        let mut r = LawReport::new("zorn");
        let n = p.len();
        let bounded = p.chains().iter().all(|&c| (0..n).any(|u| c.iter().all(|x| p.leq(x, u))));
        let m = zorn_maximal(p);
        r.check("order.zorn.bounded", m.is_ok() == bounded, || p.to_string());
        if let Ok(m) = m {
            let i = p.carrier().require(&m)?;
            r.check("order.zorn.maximal", (0..n).all(|j| !p.lt(i, j)), || p.to_string());
        }
        let starts: Vec<Vec<Symbol>> = std::iter::once(Vec::new())
            .chain(p.carrier().iter().map(|s| vec![s.clone()]))
            .collect();
        for s in &starts {
            let chain = extend_chain(p, s)?;
            r.check("order.chain.maximal", is_maximal_chain(p, chain.mask(p)?), || p.to_string());
        }
        Ok(r)
    })
}

fn groups() -> CoreResult<LawReport> {
    let cat = catalogue(6)?;
    let mut r = sweep("groups", &cat, |g| {
        let mut r = subgroup_criteria_laws(g)?;
        r.absorb(normality_laws(g));
        Ok(r)
    })?;
    let small: Vec<_> = cat.iter().filter(|g| g.len() <= 4).collect();
    let pairs: Vec<(usize, usize)> = (0..small.len()).flat_map(|i| (0..small.len()).map(move |j| (i, j))).collect();
    r.absorb(sweep("groups", &pairs, |&(i, j)| {
        let mut r = LawReport::new("groups");
        for h in all_homs(small[i], small[j])? {
            r.absorb(first_iso(&h)?.report);
        }
        Ok(r)
    })?);
    let s3 = symmetric(3)?;
    r.absorb(first_iso(&sign(&s3)?)?.report);
    let c = commutant(&s3);
    r.check("group.s3.commutant", c.len() == 3, || c.token().to_string());
    let z = center(&s3);
    r.check("group.s3.center", z.len() == 1, || z.token().to_string());
    let inner = inner_automorphisms(&s3)?;
    r.check("group.s3.inner", inner.group.len() == 6, || inner.group.len().to_string());
    let ab = quotient(&c)?;
    r.check("group.s3.abelianization", ab.group.len() == 2 && ab.group.is_abelian(), || {
        ab.group.len().to_string()
    });
    Ok(r)
}

fn actions() -> CoreResult<LawReport> {
    let s3 = symmetric(3)?;
    let mut r = LawReport::new("actions");
    for h in all_subgroups(&s3).iter().filter(|h| matches!(h.len(), 2 | 3)) {
        r.absorb(coset_action_laws(h)?);
    }
    let natural = GroupAction::natural(s3)?;
    for point in ["1", "2", "3"] {
        r.absorb(stabilizer_suite(&natural, &Symbol::new(point)?, true)?);
    }
    Ok(r)
}

fn filters() -> CoreResult<LawReport> {
    let mut r = LawReport::new("filters");
    for n in 0..=4 {
        let c = FinSet::numbered("x", n);
        r.absorb(ultrafilter_suite(&c)?);
        let all = all_filters(&c)?;
        r.absorb(sweep("filters", &all, |f| Ok(filter_ops(f.family())?.report))?);
        if n <= 3 {
            r.absorb(refinement_laws(&c)?);
        }
    }
    Ok(r)
}

fn sigma() -> CoreResult<LawReport> {
    let c = FinSet::numbered("x", 3);
    let families: Vec<Family> = Family::all(&c)?.collect();
    let mut r = sweep("sigma", &families, sigma_equivalence_check)?;
    r.note(format!("{} families", families.len()));
    Ok(r)
}

pub const STRICT_SAMPLES: usize = 20_000;

fn topology(seed: u64) -> CoreResult<LawReport> {
    let mut r = LawReport::new("topology");
    let three = FinSet::numbered("x", 3);
    let count = all_topologies(&three)?.len();
    r.check("top.enum.count", count == 29, || count.to_string());
    for n in 0..=3 {
        let ts = all_topologies(&FinSet::numbered("x", n))?;
        r.absorb(sweep("topology", &ts, |t| {
            let mut r = base_ops(t.open_sets())?.criterion;
            r.absorb(closure_from_closed_check(&t.closed_sets())?);
            r.absorb(neighborhood_laws(t));
            Ok(r)
        })?);
    }
    for n in 0..=2 {
        let c = FinSet::numbered("x", n);
        let models = strict_models_brute(&c)?;
        let only_id = models.len() == 1 && models[0].table().iter().enumerate().all(|(k, m)| m.0 == k as u64);
        r.check("top.strict.discrete_only", only_id, || format!("{n} points, brute force"));
    }
    let models = strict_models_search(&three)?;
    let only_id = models.len() == 1 && models[0].table().iter().enumerate().all(|(k, m)| m.0 == k as u64);
    r.check("top.strict.discrete_only", only_id, || "3 points, search".to_string());
    let stray = strict_models_sampled(&three, STRICT_SAMPLES, seed)?;
    r.check("top.strict.discrete_only", stray == 0, || format!("{stray} sampled tables"));
    Ok(r)
}

fn cli() -> Result<LawReport, CliError> {
    let mut r = LawReport::new("cli");
    let pool = |n: usize| rayon::ThreadPoolBuilder::new().num_threads(n).build().expect("thread pool");
    let (one, eight) = (pool(1), pool(8));
    for fx in FIXTURES {
        let outcome = crate::check_text(fx.text, crate::DEFAULT_MAX_SIZE);
        let code = crate::exit_code(&outcome);
        r.check("cli.exit_code", code == fx.expect.exit_code(), || format!("{}: {code}", fx.name));
        if fx.expect == Expect::Invalid {
            continue;
        }
        let text = crate::doc::parse_shape(fx.text)?.render();
        r.check("cli.roundtrip", text == fx.text, || fx.name.to_string());
        let show = |res: Result<LawReport, CliError>| match res {
            Ok(rep) => crate::render_report(&rep, false) + &crate::render_report(&rep, true),
            Err(e) => e.to_string(),
        };
        let a = one.install(|| show(crate::check_text(fx.text, crate::DEFAULT_MAX_SIZE)));
        let b = eight.install(|| show(crate::check_text(fx.text, crate::DEFAULT_MAX_SIZE)));
        r.check("cli.jobs", a == b, || fx.name.to_string());
    }
    Ok(r)
}

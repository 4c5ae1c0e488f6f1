//! Acceptance criteria. Each criterion runs the relevant suite and then
//! recomputes the key facts with a brute-force oracle written here, against
//! primitive accessors only.

use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use structa_cli::fixtures::{Expect, FIXTURES};
use structa_cli::suites::{self, SuiteConfig};
use structa_core::category::{
    check_category, discrete, from_group, from_poset, functor_category, hcompose, hom_functors, yoneda, FinCat,
    NatTrans, SetFunctor,
};
use structa_core::group::{
    all_homs, all_subgroups, catalogue, coset_action, symmetric, FinGroup, GroupAction,
};
use structa_core::numbers::{
    build_discrete, embed_int, int_add, int_mul, rat_add, rat_eq, rat_le, rat_mul, ExactInt, Rat,
};
use structa_core::order::{extend_chain, lattice_from_poset, zorn_maximal, Poset};
use structa_core::sets::Family;
use structa_core::settools::{all_filters, sigma_generate};
use structa_core::top::{all_topologies, base_ops, strict_models_sampled, strict_models_search};
use structa_core::{FinSet, LawReport, Mask};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

const SEED: u64 = 7_041_993;

fn suite(name: &str) -> Result<LawReport, String> {
    let r = suites::run_suite(name, &SuiteConfig::default()).map_err(|e| e.to_string())?;
    if !r.passed() {
        return Err(format!("suite {name} failed:\n{r}"));
    }
    Ok(r)
}

fn instances(r: &LawReport, law: &str) -> u64 {
    r.get(law).map_or(0, |c| c.instances)
}

fn require(r: &LawReport, laws: &[&str]) -> Result<(), String> {
    match laws.iter().find(|l| instances(r, l) == 0) {
        Some(l) => Err(format!("{l} not exercised")),
        None => Ok(()),
    }
}

fn bits(m: Mask) -> u64 {
    m.0
}

fn c1_function_calculus() -> Outcome {
    let r = suite("functions")?;
    let total = r.summary().instances;
    ensure!(total >= 100_000, "only {total} checks");
    require(&r, &["core.decompose.recompose", "core.compose.associative", "core.compose.identity"])?;
    let mut checked = 0u64;
    for n in 0..=3usize {
        for m in 0..=3usize {
            let dom = FinSet::numbered("d", n);
            let cod = FinSet::numbered("c", m);
            for f in suites::all_maps(&dom, &cod) {
                let table: Vec<usize> = (0..n).map(|i| f.at(i)).collect();
                for a in 0..1u64 << n {
                    let want = (0..n).filter(|&i| a >> i & 1 == 1).fold(0, |s, i| s | 1 << table[i]);
                    ensure!(bits(f.image(Mask(a))) == want, "image of {a:b} under {f}");
                    checked += 1;
                }
                for b in 0..1u64 << m {
                    let want = (0..n).filter(|&i| b >> table[i] & 1 == 1).fold(0, |s, i| s | 1 << i);
                    ensure!(bits(f.preimage(Mask(b))) == want, "preimage of {b:b} under {f}");
                    checked += 1;
                }
                let fibers: u64 = (0..m).map(|y| bits(f.preimage(Mask(1 << y)))).fold(0, |s, x| {
                    assert_eq!(s & x, 0, "fibers overlap");
                    s | x
                });
                ensure!(fibers == (1 << n) - 1, "fibers of {f} do not cover");
            }
        }
    }
    Ok(format!("{total} suite checks, {checked} oracle comparisons"))
}

/// Least `(h,g,f)` where `h∘(g∘f) ≠ (h∘g)∘f`, read straight from the JSON.
fn assoc_oracle(text: &str) -> Option<String> {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    let arrows: Vec<String> = v["arrows"].as_array().unwrap().iter().map(|a| a[0].as_str().unwrap().to_string()).collect();
    let comp: HashMap<(String, String), String> = v["composition"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let s = |k: usize| t[k].as_str().unwrap().to_string();
            ((s(0), s(1)), s(2))
        })
        .collect();
    let at = |g: &String, f: &String| comp.get(&(g.clone(), f.clone())).cloned();
    let mut bad = BTreeSet::new();
    for f in &arrows {
        for g in &arrows {
            let Some(gf) = at(g, f) else { continue };
            for h in &arrows {
                let Some(hg) = at(h, g) else { continue };
                if at(h, &gf) != at(&hg, f) || at(h, &gf).is_none() {
                    bad.insert(format!("({h},{g},{f})"));
                }
            }
        }
    }
    bad.into_iter().next()
}

fn c2_category_laws() -> Outcome {
    suite("categories")?;
    let corpus = suites::category_corpus().map_err(|e| e.to_string())?;
    ensure!(corpus.len() >= 20, "corpus has {} members", corpus.len());
    for marker in ["chain", "Z", "x", "^op", "[", "bridge", "arrows"] {
        ensure!(corpus.iter().any(|(n, _)| n.contains(marker)), "no {marker} member");
    }
    for (name, c) in &corpus {
        ensure!(check_category(&c.data(), true).passed(), "{name} fails");
    }
    let defects: Vec<_> = suites::defect_fixtures().collect();
    ensure!(defects.len() == 5, "{} defect fixtures", defects.len());
    for fx in &defects {
        let want = assoc_oracle(fx.text).ok_or_else(|| format!("{}: oracle finds no defect", fx.name))?;
        let doc = structa_cli::doc::parse_shape(fx.text).map_err(|e| e.to_string())?;
        let data = structa_cli::model::build_cat_data(&doc, "$").map_err(|e| e.to_string())?;
        let found = check_category(&data, true);
        let got = found.get("cat.associative").and_then(|c| c.witness.clone());
        ensure!(got.as_deref() == Some(want.as_str()), "{}: witness {got:?}, oracle {want}", fx.name);
        let others = found.failures().filter(|c| c.law != "cat.associative").count();
        ensure!(others == 0, "{}: defect is not only associativity", fx.name);
    }
    Ok(format!("{} categories, 5 planted defects located", corpus.len()))
}

/// `(σ·τ)x = σx∘τx`.
fn vert(d: &FinCat, sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    sigma.iter().zip(tau).map(|(&s, &t)| d.comp(s, t).expect("composable")).collect()
}

fn c3_interchange() -> Outcome {
    let r = suite("interchange")?;
    let grids = instances(&r, "cat.interchange");
    ensure!(grids >= 1000, "{grids} grids");
    ensure!(instances(&r, "cat.hcompose.agree") >= 1000, "horizontal agreement not exercised");
    let pool: Vec<Arc<FinCat>> = vec![
        Arc::new(from_poset(&Poset::chain(2))),
        Arc::new(from_poset(&Poset::chain(3))),
        Arc::new(discrete(&FinSet::of(&["u", "v"]))),
        Arc::new(from_group(&structa_core::group::cyclic(2).unwrap())),
        Arc::new(from_poset(&Poset::diamond())),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut fcs = HashMap::new();
    let mut done = 0;
    while done < 300 {
        let (c, d, e) = (rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len()), rng.gen_range(0..pool.len()));
        let cd = fcs.entry((c, d)).or_insert_with(|| functor_category(&pool[c], &pool[d]).unwrap()).clone();
        let de = fcs.entry((d, e)).or_insert_with(|| functor_category(&pool[d], &pool[e]).unwrap()).clone();
        let pick = |rng: &mut ChaCha8Rng, nats: &[NatTrans]| -> (NatTrans, NatTrans) {
            let t = nats[rng.gen_range(0..nats.len())].clone();
            let next: Vec<&NatTrans> = nats.iter().filter(|s| s.from() == t.to()).collect();
            (t, next[rng.gen_range(0..next.len())].clone())
        };
        let (tau, sigma) = pick(&mut rng, &cd.nats);
        let (alpha, beta) = pick(&mut rng, &de.nats);
        let (dc, ec) = (&pool[d], &pool[e]);
        // Both horizontal formulas from components and functor tables.
        let horiz = |a: &NatTrans, t: &NatTrans| -> Result<Vec<usize>, String> {
            let ea = a.from().tgt().clone();
            (0..t.from().src().object_count())
                .map(|x| {
                    let one = ea.comp(a.at(t.to().obj(x)), a.from().arr(t.at(x)));
                    let two = ea.comp(a.to().arr(t.at(x)), a.at(t.from().obj(x)));
                    match (one, two) {
                        (Some(p), Some(q)) if p == q => Ok(p),
                        _ => Err(format!("horizontal formulas disagree at object {x}")),
                    }
                })
                .collect()
        };
        let ba = vert(ec, beta.components(), alpha.components());
        let st = vert(dc, sigma.components(), tau.components());
        let ba_nat = NatTrans::new(alpha.from().clone(), beta.to().clone(), ba).unwrap();
        let st_nat = NatTrans::new(tau.from().clone(), sigma.to().clone(), st).unwrap();
        let lhs = horiz(&ba_nat, &st_nat)?;
        let rhs = vert(ec, &horiz(&beta, &sigma)?, &horiz(&alpha, &tau)?);
        ensure!(lhs == rhs, "interchange fails on grid {done}");
        let core = hcompose(&alpha, &tau).map_err(|e| e.to_string())?;
        ensure!(core.components() == horiz(&alpha, &tau)?.as_slice(), "hcompose disagrees on grid {done}");
        done += 1;
    }
    Ok(format!("{grids} suite grids, {done} oracle grids"))
}

/// Calls `visit` with every tuple `t` where `t[k] < sizes[k]`.
fn for_each_tuple(sizes: &[usize], visit: &mut dyn FnMut(&[usize])) {
    let mut t = vec![0; sizes.len()];
    if sizes.contains(&0) {
        return;
    }
    loop {
        visit(&t);
        let mut k = 0;
        loop {
            if k == sizes.len() {
                return;
            }
            t[k] += 1;
            if t[k] < sizes[k] {
                break;
            }
            t[k] = 0;
            k += 1;
        }
    }
}

/// Natural transformations `𝔏_a → F` by enumerating every choice of components.
fn count_nats(c: &FinCat, a: usize, f: &SetFunctor) -> usize {
    let k = c.object_count();
    let homs: Vec<Vec<usize>> = (0..k).map(|x| c.hom(a, x)).collect();
    // One slot per (object, arrow a → object), valued in F of that object.
    let slots: Vec<(usize, usize)> = (0..k).flat_map(|x| homs[x].iter().map(move |&h| (x, h))).collect();
    let sizes: Vec<usize> = slots.iter().map(|&(x, _)| f.set(x).len()).collect();
    if slots.is_empty() {
        return 1;
    }
    let slot_of: HashMap<usize, usize> = slots.iter().enumerate().map(|(i, &(_, h))| (h, i)).collect();
    let mut count = 0;
    for_each_tuple(&sizes, &mut |t| {
        let natural = (0..c.arrow_count()).all(|g| {
            homs[c.src(g)].iter().all(|&h| {
                let gh = c.comp(g, h).expect("composable");
                f.map(g).at(t[slot_of[&h]]) == t[slot_of[&gh]]
            })
        });
        count += usize::from(natural);
    });
    count
}

fn c4_yoneda() -> Outcome {
    let r = suite("yoneda")?;
    let cases = suites::yoneda_cases().map_err(|e| e.to_string())?;
    let mut pairs = 0;
    for (name, c, inputs) in &cases {
        for a in 0..c.object_count() {
            for (i, f) in inputs.iter().enumerate() {
                let brute = count_nats(c, a, f);
                let y = yoneda(c, a, f).map_err(|e| e.to_string())?;
                ensure!(brute == f.set(a).len(), "{name}: brute force {brute} ≠ |F a| for input {i}");
                ensure!(y.nat_set.len() == brute, "{name}: module found {} nats", y.nat_set.len());
                ensure!(y.report.passed(), "{name}: round trip fails");
                pairs += 1;
            }
            for b in 0..c.object_count() {
                let (lb, _) = hom_functors(c, b);
                let brute = count_nats(c, a, &lb);
                ensure!(brute == c.hom(b, a).len(), "{name}: embedding not full and faithful");
            }
        }
    }
    ensure!(instances(&r, "cat.yoneda.embedding_full") > 0, "embedding not checked");
    Ok(format!("{} categories, {pairs} (object, functor) pairs", cases.len()))
}

fn c5_integers() -> Outcome {
    let r = suite("integers")?;
    ensure!(instances(&r, "numbers.int.add_oracle") >= 61 * 61 + 10_000, "too few additions");
    let small = build_discrete(60).map_err(|e| e.to_string())?;
    for a in -30i64..=30 {
        for b in -30i64..=30 {
            let s = int_add(&small, &a.into(), &b.into()).map_err(|e| e.to_string())?;
            ensure!(s.to_i64().map(i128::from) == Some(a as i128 + b as i128), "{a}+{b}");
        }
    }
    let w = build_discrete(200).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..10_000 {
        let (a, b): (i64, i64) = (rng.gen_range(-100..=100), rng.gen_range(-100..=100));
        let s = int_add(&w, &a.into(), &b.into()).map_err(|e| e.to_string())?;
        ensure!(s.to_i64().map(i128::from) == Some(a as i128 + b as i128), "{a}+{b}");
        let p = int_mul(&ExactInt::from(a), &ExactInt::from(b));
        ensure!(p.to_i64().map(i128::from) == Some(a as i128 * b as i128), "{a}·{b}");
    }
    for law in ["numbers.int.mul_distributive", "numbers.int.mul_associative", "numbers.int.mul_commutative"] {
        ensure!(instances(&r, law) >= 10_000, "{law} has {} instances", instances(&r, law));
    }
    Ok(format!("{} suite checks, 3721 + 20000 oracle sums and products", r.summary().instances))
}

fn c6_rationals() -> Outcome {
    let r = suite("rationals")?;
    let grid: Vec<(i64, i64)> = (-6..=6).flat_map(|n| (1..=6).map(move |d| (n, d))).collect();
    let rat = |(n, d): (i64, i64)| Rat::new(n, d).unwrap();
    for &p in &grid {
        for &q in &grid {
            let (rp, rq) = (rat(p), rat(q));
            ensure!(rat_le(&rp, &rq) == (p.0 * q.1 <= q.0 * p.1), "order at {p:?} {q:?}");
            let sum = Rat::new(p.0 * q.1 + q.0 * p.1, p.1 * q.1).unwrap();
            ensure!(rat_eq(&rat_add(&rp, &rq), &sum), "sum at {p:?} {q:?}");
            let product = Rat::new(p.0 * q.0, p.1 * q.1).unwrap();
            ensure!(rat_eq(&rat_mul(&rp, &rq), &product), "product at {p:?} {q:?}");
        }
    }
    for a in -6i64..=6 {
        for b in -6i64..=6 {
            let (ea, eb) = (embed_int(&a.into()), embed_int(&b.into()));
            ensure!(rat_eq(&rat_add(&ea, &eb), &embed_int(&(a + b).into())), "embedding of {a}+{b}");
            ensure!(rat_le(&ea, &eb) == (a <= b), "embedding of {a}≤{b}");
            ensure!(rat_eq(&rat_mul(&ea, &eb), &embed_int(&(a * b).into())), "embedding of {a}·{b}");
        }
    }
    require(
        &r,
        &[
            "numbers.rat.total",
            "numbers.rat.transitive",
            "numbers.rat.add_inverse",
            "numbers.rat.mul_inverse",
            "numbers.rat.add_associative",
            "numbers.rat.mul_associative",
        ],
    )?;
    Ok(format!("{} suite checks, {} oracle pairs", r.summary().instances, grid.len() * grid.len()))
}

fn labeled(n: usize) -> Result<Vec<Poset>, String> {
    Poset::all_labeled(n).map_err(|e| e.to_string())
}

/// Number of partial orders on a labeled `n`-set, by scanning every relation.
fn brute_order_count(n: usize) -> usize {
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    (0u64..1 << cells.len())
        .filter(|&r| {
            let leq = |i: usize, j: usize| i == j || cells.iter().position(|&c| c == (i, j)).is_some_and(|k| r >> k & 1 == 1);
            (0..n).all(|i| (0..n).all(|j| i == j || !(leq(i, j) && leq(j, i))))
                && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq(i, j) && leq(j, k)) || leq(i, k))))
        })
        .count()
}

fn c7_lattices() -> Outcome {
    let r = suite("lattices")?;
    let mut lattices = 0;
    for (n, want) in [1usize, 1, 3, 19, 219].into_iter().enumerate() {
        let ps = labeled(n)?;
        ensure!(ps.len() == want && brute_order_count(n) == want, "{} posets on {n} points", ps.len());
        for p in &ps {
            let exists = (0..n).all(|x| {
                (0..n).all(|y| {
                    let ub: Vec<usize> = (0..n).filter(|&z| p.leq(x, z) && p.leq(y, z)).collect();
                    let lb: Vec<usize> = (0..n).filter(|&z| p.leq(z, x) && p.leq(z, y)).collect();
                    ub.iter().any(|&s| ub.iter().all(|&z| p.leq(s, z))) && lb.iter().any(|&s| lb.iter().all(|&z| p.leq(z, s)))
                })
            });
            let built = lattice_from_poset(p);
            ensure!(built.is_ok() == exists, "lattice detection on {p:?}");
            if let Ok(l) = built {
                lattices += 1;
                for x in 0..n {
                    for y in 0..n {
                        ensure!((l.join.get(x, y) == y) == p.leq(x, y), "join order at ({x},{y})");
                        ensure!((l.meet.get(x, y) == x) == p.leq(x, y), "meet order at ({x},{y})");
                    }
                }
            }
        }
    }
    ensure!(instances(&r, "order.lattice.roundtrip") == lattices, "roundtrip count");
    require(&r, &["order.lattice.absorption", "order.lattice.idempotent", "order.lattice.monotone"])?;
    Ok(format!("243 posets, {lattices} lattices"))
}

fn is_chain(p: &Poset, m: u64) -> bool {
    let n = p.len();
    (0..n).all(|i| (0..n).all(|j| m >> i & 1 == 0 || m >> j & 1 == 0 || p.leq(i, j) || p.leq(j, i)))
}

fn c8_zorn() -> Outcome {
    suite("zorn")?;
    let mut total = 0;
    for (n, want) in [1usize, 1, 3, 19, 219, 4231].into_iter().enumerate() {
        let ps = labeled(n)?;
        ensure!(ps.len() == want, "{} posets on {n} points", ps.len());
        for p in &ps {
            let chains: Vec<u64> = (0u64..1 << n).filter(|&m| is_chain(p, m)).collect();
            let bounded = chains.iter().all(|&c| (0..n).any(|u| (0..n).all(|x| c >> x & 1 == 0 || p.leq(x, u))));
            let m = zorn_maximal(p);
            ensure!(m.is_ok() == bounded, "zorn on {n} points");
            if let Ok(m) = m {
                let i = p.carrier().index_of(&m).unwrap();
                ensure!((0..n).all(|j| j == i || !p.leq(i, j)), "{m} is not maximal");
            }
            let chain = extend_chain(p, &[]).map_err(|e| e.to_string())?;
            let mask = bits(chain.mask(p).map_err(|e| e.to_string())?);
            ensure!(is_chain(p, mask), "extend_chain output is not a chain");
            ensure!((0..n).all(|k| mask >> k & 1 == 1 || !is_chain(p, mask | 1 << k)), "chain not maximal");
            total += 1;
        }
    }
    Ok(format!("{total} posets"))
}

fn element_order(g: &FinGroup, a: usize) -> usize {
    let mut x = a;
    let mut k = 1;
    while x != g.unit() {
        x = g.op(x, a);
        k += 1;
    }
    k
}

fn brute_subgroups(g: &FinGroup) -> usize {
    let n = g.len();
    (1u64..1 << n)
        .filter(|&m| {
            let has = |x: usize| m >> x & 1 == 1;
            has(g.unit()) && (0..n).all(|a| !has(a) || (0..n).all(|b| !has(b) || has(g.op(a, b))))
        })
        .count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn c9_groups() -> Outcome {
    let r = suite("groups")?;
    require(
        &r,
        &["group.subgroup.criteria_agree", "group.normal.criteria_agree", "group.iso.well_defined", "group.iso.bijective"],
    )?;
    let cat = catalogue(6).map_err(|e| e.to_string())?;
    ensure!(cat.len() == 8, "{} groups of order at most 6", cat.len());
    for g in &cat {
        ensure!(all_subgroups(g).len() == brute_subgroups(g), "subgroup count for order {}", g.len());
    }
    let cyclic: Vec<&FinGroup> = cat.iter().filter(|g| (0..g.len()).any(|a| element_order(g, a) == g.len())).collect();
    let mut homs = 0;
    for g in cyclic.iter().filter(|g| g.len() <= 4) {
        for h in cyclic.iter().filter(|h| h.len() <= 4) {
            let found = all_homs(g, h).map_err(|e| e.to_string())?.len();
            ensure!(found == gcd(g.len(), h.len()), "|Hom(Z{}, Z{})| = {found}", g.len(), h.len());
            homs += found;
        }
    }
    let s3 = symmetric(3).unwrap();
    let n = s3.len();
    let comm = |a: usize, b: usize| s3.op(s3.op(a, b), s3.op(s3.inv(a), s3.inv(b)));
    let mut derived: BTreeSet<usize> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| comm(a, b)).collect();
    loop {
        let next: BTreeSet<usize> = derived.iter().flat_map(|&a| derived.iter().map(move |&b| (a, b))).map(|(a, b)| s3.op(a, b)).collect();
        if next.is_subset(&derived) {
            break;
        }
        derived.extend(next);
    }
    ensure!(derived.len() == 3, "[S3,S3] has order {}", derived.len());
    let center = (0..n).filter(|&z| (0..n).all(|a| s3.op(z, a) == s3.op(a, z))).count();
    ensure!(center == 1, "center of S3 has order {center}");
    let conj: BTreeSet<Vec<usize>> = (0..n).map(|x| (0..n).map(|a| s3.op(s3.op(x, a), s3.inv(x))).collect()).collect();
    ensure!(conj.len() == 6, "{} inner automorphisms", conj.len());
    ensure!(n / derived.len() == 2, "abelianization order");
    Ok(format!("8 groups, {homs} cyclic homomorphisms counted"))
}

fn c10_actions() -> Outcome {
    let r = suite("actions")?;
    require(&r, &["group.stabilizer.similar", "group.coset_action.fixes_iff_member"])?;
    let s3 = symmetric(3).unwrap();
    let natural = GroupAction::natural(s3.clone()).map_err(|e| e.to_string())?;
    for x in 0..3 {
        let orbit: BTreeSet<usize> = (0..6).map(|g| natural.apply(g, x)).collect();
        let stab = (0..6).filter(|&g| natural.apply(g, x) == x).count();
        ensure!(orbit.len() * stab == 6, "orbit-stabilizer at point {x}");
    }
    let mut shapes = 0;
    for h in all_subgroups(&s3).iter().filter(|h| matches!(h.len(), 2 | 3)) {
        let act = coset_action(h).map_err(|e| e.to_string())?;
        let k = act.carrier().len();
        ensure!(k * h.len() == 6, "{k} cosets of a subgroup of order {}", h.len());
        let orbit: BTreeSet<usize> = (0..6).map(|g| act.apply(g, 0)).collect();
        ensure!(orbit.len() == k, "coset action not transitive");
        let kernel: BTreeSet<usize> = (0..6).filter(|&g| (0..k).all(|c| act.apply(g, c) == c)).collect();
        let core: BTreeSet<usize> = (0..6)
            .filter(|&g| (0..6).all(|x| h.contains(s3.op(s3.op(s3.inv(x), g), x))))
            .collect();
        ensure!(kernel == core, "kernel differs from the intersection of conjugates");
        shapes += 1;
    }
    ensure!(shapes == 4, "{shapes} subgroups of order 2 or 3");
    Ok("3 points, 4 coset actions".to_string())
}

/// Proper filters on `n` points as bitsets of subset masks.
fn brute_filters(n: usize) -> Vec<u64> {
    let subsets = 1usize << n;
    let fams: u64 = 1 << subsets;
    (1..fams)
        .filter(|&f| {
            let has = |a: usize| f >> a & 1 == 1;
            !has(0)
                && (0..subsets).all(|a| !has(a) || (0..subsets).all(|b| !has(b) || has(a & b)))
                && (0..subsets).all(|a| !has(a) || (0..subsets).all(|b| a & !b != 0 || has(b)))
        })
        .collect()
}

fn c11_filters() -> Outcome {
    let r = suite("filters")?;
    require(&r, &["settools.ultra.union_prime", "settools.filter.minimal", "settools.filter.union_of_principal"])?;
    let mut total = 0;
    for n in 0..=4usize {
        let brute = brute_filters(n);
        let found = all_filters(&FinSet::numbered("x", n)).map_err(|e| e.to_string())?;
        ensure!(found.len() == brute.len(), "{} filters on {n} points, oracle {}", found.len(), brute.len());
        ensure!(brute.len() == (1 << n) - 1, "oracle count on {n} points");
        let maximal: Vec<u64> = brute.iter().copied().filter(|&f| !brute.iter().any(|&g| g != f && g & f == f)).collect();
        ensure!(maximal.len() == n, "{} maximal filters on {n} points", maximal.len());
        ensure!(found.iter().filter(|f| f.is_ultra()).count() == n, "ultrafilter count on {n} points");
        for f in &found {
            let prime = (0u64..1 << n).all(|a| {
                (0u64..1 << n).all(|b| !f.contains(Mask(a | b)) || f.contains(Mask(a)) || f.contains(Mask(b)))
            });
            ensure!(prime == f.is_ultra(), "union-prime disagrees with ultra on {n} points");
            let k = f.kernel();
            ensure!(f.family().members().iter().all(|&m| k.is_subset(m)) && f.contains(k), "filter not principal");
        }
        total += found.len();
    }
    Ok(format!("{total} filters"))
}

fn is_sigma(f: u64) -> bool {
    let has = |a: usize| f >> a & 1 == 1;
    has(0) && (0..8).all(|a| !has(a) || (has(7 & !a) && (0..8).all(|b| !has(b) || has(a | b))))
}

fn c12_sigma() -> Outcome {
    let r = suite("sigma")?;
    let c = FinSet::numbered("x", 3);
    let algebras: Vec<u64> = (0u64..1 << 8).filter(|&f| is_sigma(f)).collect();
    for b in 0u64..1 << 8 {
        let want = algebras.iter().filter(|&&s| s & b == b).fold(u64::MAX, |acc, &s| acc & s);
        let fam = Family::from_masks(c.clone(), (0..8).filter(|&a| b >> a & 1 == 1).map(Mask));
        let got = sigma_generate(&fam).map_err(|e| e.to_string())?;
        let got = got.family().members().iter().fold(0u64, |acc, m| acc | 1 << m.0);
        ensure!(got == want, "σ of family {b:08b}");
    }
    ensure!(instances(&r, "settools.sigma.intersection") == 256, "suite covered {} families", instances(&r, "settools.sigma.intersection"));
    Ok(format!("256 families, {} sigma-algebras", algebras.len()))
}

fn is_topology(n: usize, f: u64) -> bool {
    let full = (1 << n) - 1;
    let has = |a: usize| f >> a & 1 == 1;
    has(0) && has(full) && (0..=full).all(|a| !has(a) || (0..=full).all(|b| !has(b) || (has(a | b) && has(a & b))))
}

/// Strict closure tables on three points: the empty set and points are
/// forced, so only the four larger subsets range over all values.
fn strict_three() -> usize {
    let free = [3usize, 5, 6, 7];
    let mut count = 0;
    for_each_tuple(&[8, 8, 8, 8], &mut |t| {
        let mut table = [0usize, 1, 2, 0, 4, 0, 0, 0];
        for (k, &a) in free.iter().enumerate() {
            table[a] = t[k];
        }
        let ok = (0..8).all(|a| table[table[a]] == table[a]) && (0..8).all(|a| (0..8).all(|b| table[a | b] == table[a] | table[b]));
        count += usize::from(ok);
    });
    count
}

fn c13_topology() -> Outcome {
    let r = suite("topology")?;
    for (n, want) in [(1usize, 1usize), (2, 4), (3, 29)] {
        let brute = (0u64..1 << (1 << n)).filter(|&f| is_topology(n, f)).count();
        let found = all_topologies(&FinSet::numbered("x", n)).map_err(|e| e.to_string())?;
        ensure!(brute == want && found.len() == want, "{} topologies on {n} points", found.len());
        for t in &found {
            let closed: Vec<u64> = t.closed_sets().members().iter().map(|m| m.0).collect();
            let ops = base_ops(t.open_sets()).map_err(|e| e.to_string())?;
            for a in 0u64..1 << n {
                let cl = closed.iter().filter(|&&d| a & !d == 0).fold((1u64 << n) - 1, |acc, &d| acc & d);
                ensure!(ops.closure.apply(Mask(a)).0 == cl, "closure of {a:b} in {t:?}");
            }
        }
    }
    for n in 0..=2usize {
        let size = 1usize << n;
        let mut strict = 0;
        for_each_tuple(&vec![size; size], &mut |t| {
            let ok = t[0] == 0
                && (0..n).all(|i| t[1 << i] == 1 << i)
                && (0..size).all(|a| t[t[a]] == t[a])
                && (0..size).all(|a| (0..size).all(|b| t[a | b] == t[a] | t[b]));
            if ok {
                assert!((0..size).all(|a| t[a] == a), "non-identity strict table");
                strict += 1;
            }
        });
        ensure!(strict == 1, "{strict} strict tables on {n} points");
    }
    ensure!(strict_three() == 1, "strict tables on three points");
    let three = FinSet::numbered("x", 3);
    let search = strict_models_search(&three).map_err(|e| e.to_string())?;
    ensure!(search.len() == 1 && search[0].table().iter().enumerate().all(|(k, m)| m.0 == k as u64), "search");
    ensure!(strict_models_sampled(&three, 5_000, SEED).map_err(|e| e.to_string())? == 0, "sampling found a model");
    ensure!(instances(&r, "top.base.closure_equivalence") > 0, "closure equivalence not exercised");
    Ok("29 topologies on 3 points, identity the only strict model".to_string())
}

fn run_bin(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_structa")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn c14_cli() -> Outcome {
    suite("cli")?;
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut round_trips = 0;
    let mut codes = BTreeSet::new();
    for fx in FIXTURES {
        let path = dir.join(format!("{}.json", fx.name));
        let on_disk = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        ensure!(on_disk == fx.text, "{} differs from the embedded copy", fx.name);
        if fx.expect != Expect::Invalid {
            let doc = structa_cli::doc::parse_shape(&on_disk).map_err(|e| e.to_string())?;
            ensure!(doc.render() == on_disk, "{} does not round-trip", fx.name);
            round_trips += 1;
        }
        let p = path.to_str().unwrap();
        let (c1, o1) = run_bin(&["--jobs", "1", "check", p]);
        let (c8, o8) = run_bin(&["--jobs", "8", "check", p]);
        let (j1, jo1) = run_bin(&["--jobs", "1", "--json", "check", p]);
        let (j8, jo8) = run_bin(&["--jobs", "8", "--json", "check", p]);
        ensure!(o1 == o8 && jo1 == jo8, "{}: output depends on --jobs", fx.name);
        let want = fx.expect.exit_code();
        ensure!([c1, c8, j1, j8].iter().all(|&c| c == want), "{}: exit {c1}, expected {want}", fx.name);
        codes.insert(want);
    }
    ensure!(round_trips >= 30, "{round_trips} round-tripping fixtures");
    ensure!(codes.len() == 3, "exit codes covered: {codes:?}");
    let (c, _) = run_bin(&["suite", "no-such-suite"]);
    ensure!(c == 2, "unknown suite exits {c}");
    let (c, _) = run_bin(&["check"]);
    ensure!(c == 2, "missing argument exits {c}");
    Ok(format!("{} fixtures, {round_trips} round-trip, exit codes {codes:?}", FIXTURES.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 14] = [
        ("function calculus", c1_function_calculus),
        ("category laws", c2_category_laws),
        ("interchange law", c3_interchange),
        ("yoneda", c4_yoneda),
        ("integers", c5_integers),
        ("rationals", c6_rationals),
        ("lattices", c7_lattices),
        ("zorn and chains", c8_zorn),
        ("groups", c9_groups),
        ("actions", c10_actions),
        ("filters", c11_filters),
        ("sigma-algebras", c12_sigma),
        ("topology", c13_topology),
        ("cli", c14_cli),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

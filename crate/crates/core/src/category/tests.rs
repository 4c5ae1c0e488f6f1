use std::sync::Arc;

use super::*;
use crate::error::Error;
use crate::group::{cyclic, reduction, symmetric};
use crate::order::Poset;
use crate::sets::{FinMap, FinSet};

fn arc(c: FinCat) -> Arc<FinCat> {
    Arc::new(c)
}

fn chain(n: usize) -> Arc<FinCat> {
    arc(from_poset(&Poset::chain(n)))
}

fn groupoid() -> Arc<FinCat> {
    let data = CatData::of(
        &["x", "y"],
        &[("1x", "x", "x"), ("1y", "y", "y"), ("u", "x", "y"), ("v", "y", "x")],
        &[("x", "1x"), ("y", "1y")],
        &[
            ("1x", "1x", "1x"),
            ("1y", "1y", "1y"),
            ("u", "1x", "u"),
            ("1y", "u", "u"),
            ("v", "1y", "v"),
            ("1x", "v", "v"),
            ("u", "v", "1y"),
            ("v", "u", "1x"),
        ],
    )
    .unwrap();
    arc(FinCat::new(&data).unwrap())
}

#[test]
fn generated_categories_pass() {
    let one = CatData::of(&["o"], &[("1", "o", "o")], &[("o", "1")], &[("1", "1", "1")]).unwrap();
    assert!(check_category(&one, true).passed());
    let cats = [
        from_poset(&Poset::diamond()),
        from_poset(&Poset::chain(3)),
        from_group(&symmetric(3).unwrap()),
        discrete(&FinSet::of(&["a", "b"])),
        product_cat(&from_poset(&Poset::chain(2)), &from_group(&cyclic(2).unwrap())),
        opposite_cat(&from_poset(&Poset::diamond())),
        (*groupoid()).clone(),
    ];
    for c in &cats {
        c.check().assert_passed();
        arrow_laws(c).assert_passed();
        assert!(c.check().notes().is_empty());
    }
    assert_eq!(from_poset(&Poset::chain(2)).arrow_count(), 3);
    let z2 = from_group(&cyclic(2).unwrap());
    assert_eq!((z2.object_count(), z2.arrow_count()), (1, 2));
    assert!((0..2).all(|f| arrow_classify(&z2, f).unwrap().iso));
    let d = discrete(&FinSet::of(&["a", "b"]));
    assert_eq!(d.arrow_count(), 2);
    assert!((0..2).all(|f| d.is_identity(f)));
}

#[test]
fn broken_associativity_has_least_witness() {
    // e unit; a∘a = b, a∘b = a, b∘a = b, b∘b = a
    let t = [("a", "a", "b"), ("a", "b", "a"), ("b", "a", "b"), ("b", "b", "a")];
    let mut comp: Vec<(&str, &str, &str)> = t.to_vec();
    for x in ["e", "a", "b"] {
        comp.push(("e", x, x));
        comp.push((x, "e", x));
    }
    comp.sort();
    comp.dedup();
    let data = CatData::of(
        &["*"],
        &[("a", "*", "*"), ("b", "*", "*"), ("e", "*", "*")],
        &[("*", "e")],
        &comp,
    )
    .unwrap();
    let r = check_category(&data, true);
    let table = |g: &str, f: &str| comp.iter().find(|c| c.0 == g && c.1 == f).unwrap().2;
    let mut oracle = Vec::new();
    for h in ["a", "b", "e"] {
        for g in ["a", "b", "e"] {
            for f in ["a", "b", "e"] {
                if table(h, table(g, f)) != table(table(h, g), f) {
                    oracle.push(format!("({h},{g},{f})"));
                }
            }
        }
    }
    oracle.sort();
    let check = r.get("cat.associative").unwrap();
    assert_eq!(check.failures as usize, oracle.len());
    assert_eq!(check.witness.as_deref(), Some(oracle[0].as_str()));
    assert!(matches!(FinCat::new(&data), Err(Error::NotACategory(_))));
}

#[test]
fn unit_toggle_and_observational_note() {
    // two parallel arrows in an associative category without units, with
    // every composite landing on p
    let data = CatData::of(
        &["o"],
        &[("p", "o", "o"), ("q", "o", "o")],
        &[],
        &[("p", "p", "p"), ("p", "q", "p"), ("q", "p", "p"), ("q", "q", "p")],
    )
    .unwrap();
    let loose = check_category(&data, false);
    assert!(loose.passed());
    assert!(loose.notes().iter().any(|n| n.contains("observationally equal")));
    assert!(!check_category(&data, true).passed());
}

#[test]
fn arrow_flags() {
    let c2 = chain(2);
    let up = c2.arrow("0<=1").unwrap();
    let k = arrow_classify(&c2, up).unwrap();
    assert!(k.left_cancellable && k.right_cancellable);
    assert!(!k.iso && !k.left_invertible && !k.right_invertible);
    let id = arrow_classify(&c2, c2.identity(0)).unwrap();
    assert!(id.iso && id.left_cancellable && id.right_cancellable && id.left_invertible && id.right_invertible);
    let z3 = from_group(&cyclic(3).unwrap());
    assert!((0..3).all(|f| arrow_classify(&z3, f).unwrap().iso));
    let g = groupoid();
    assert_eq!(iso_classes(&g).len(), 1);
    assert_eq!(iso_classes(&c2).len(), 2);
}

#[test]
fn functor_classes() {
    let c = chain(3);
    let id = Functor::identity(&c);
    check_functor(&id).assert_passed();
    let k = classify_functor(&id);
    assert!(k.full && k.faithful && k.embedding);

    let (z4, z2) = (cyclic(4).unwrap(), cyclic(2).unwrap());
    let red = reduction(4, 2).unwrap();
    let (c4, c2) = (arc(from_group(&z4)), arc(from_group(&z2)));
    let arrs = (0..4).map(|x| red.map().at(x)).collect();
    let f = Functor::new(c4.clone(), c2.clone(), vec![0], arrs).unwrap();
    let k = classify_functor(&f);
    assert!(k.full && !k.faithful);
    // the hom scan oracle: Hom(Z4, Z2) as functors has exactly two members
    assert_eq!(all_functors(&c4, &c2, false).unwrap().len(), 2);

    let diamond = arc(from_poset(&Poset::diamond()));
    let point = arc(discrete(&FinSet::of(&["o"])));
    let k = classify_functor(&Functor::constant(&diamond, &point, 0));
    assert!(!k.full && k.faithful && !k.embedding);

    assert_eq!(all_functors(&chain(2), &chain(2), false).unwrap().len(), 3);
}

#[test]
fn opposites() {
    let d = arc(discrete(&FinSet::of(&["a", "b"])));
    assert_eq!(opposite_cat(&d), *d);
    let c2 = chain(2);
    let rev = arc(from_poset(&Poset::chain(2).opposite()));
    let op = arc(opposite_cat(&c2));
    let iso = find_cat_isomorphism(&op, &rev).unwrap().unwrap();
    check_functor(&iso).assert_passed();
    let cats = vec![c2.clone(), d.clone(), arc(from_group(&symmetric(3).unwrap())), groupoid()];
    let mut functors = Vec::new();
    for a in &cats {
        for b in &cats {
            if a.arrow_count() * b.arrow_count() <= 64 {
                functors.extend(all_functors(a, b, false).unwrap().into_iter().take(6));
            }
        }
    }
    op_universe_check(&cats, &functors).assert_passed();
}

#[test]
fn variance() {
    let p = Poset::int_window(2);
    let neg = FinMap::from_fn(p.carrier().clone(), p.carrier().clone(), |i| {
        let v: i64 = p.carrier().get(i).as_str().parse().unwrap();
        p.carrier().index_of_str(&(-v).to_string()).unwrap()
    });
    assert!(functor_from_monotone(&p, &p, &neg).is_err());
    let contra = contravariant_from_antitone(&p, &p, &neg).unwrap();
    check_contravariant(&contra).assert_passed();
    let (co, v) = variance_convert(&contra).unwrap();
    assert_eq!(v, Variance::Contravariant);
    check_functor(&co).assert_passed();
    let (back, v2) = variance_convert(&co).unwrap();
    assert_eq!(v2, Variance::Covariant);
    assert_eq!(back, contra);

    let base = FinSet::of(&["a", "b"]);
    let pw = Poset::powerset(&base).unwrap();
    let (_, masks) = base.powerset_tokens();
    let comp = FinMap::from_fn(pw.carrier().clone(), pw.carrier().clone(), |i| {
        let m = masks[i].complement(2);
        masks.iter().position(|&x| x == m).unwrap()
    });
    let contra = contravariant_from_antitone(&pw, &pw, &comp).unwrap();
    let (co, _) = variance_convert(&contra).unwrap();
    check_functor(&co).assert_passed();

    // a pair of arrows sent nowhere sensible is neither
    let c = chain(2);
    let bad = Functor::raw(c.clone(), c.clone(), vec![0, 0], vec![0, 1, 0]).unwrap();
    assert!(matches!(variance_convert(&bad), Err(Error::VarianceError(_))));
}

#[test]
fn products_and_pairs() {
    let c = chain(3);
    let point = arc(discrete(&FinSet::of(&["o"])));
    let cp = arc(product_cat(&c, &point));
    assert!(find_cat_isomorphism(&cp, &c).unwrap().is_some());
    let sq = arc(product_cat(&chain(2), &chain(2)));
    let order = arc(from_poset(&Poset::product(&Poset::chain(2), &Poset::chain(2)).unwrap()));
    assert!(find_cat_isomorphism(&sq, &order).unwrap().is_some());
    let g = arc(from_group(&cyclic(3).unwrap()));
    assert_eq!(product_cat(&c, &g).arrow_count(), c.arrow_count() * g.arrow_count());
    assert_eq!(
        opposite_cat(&product_cat(&c, &g)),
        product_cat(&opposite_cat(&c), &opposite_cat(&g))
    );

    let id = Functor::identity(&c);
    let diag = pair_functor(&id, &id).unwrap();
    check_functor(&diag).assert_passed();
    let (f, g2) = unpair_functor(&diag).unwrap();
    assert_eq!((f.clone(), g2.clone()), (id.clone(), id.clone()));
    assert_eq!(pair_functor(&f, &g2).unwrap(), diag);
    assert!(matches!(unpair_functor(&id), Err(Error::NotProduct)));
}

#[test]
fn bifunctors() {
    let c2 = chain(2);
    let hom = hom_bifunctor(&c2).unwrap();
    bifunctor_check(&hom.bifunctor).assert_passed();
    let f = bifunctor_to_functor(&hom.bifunctor);
    check_functor(&f).assert_passed();
    assert_eq!(functor_to_bifunctor(&f).unwrap(), hom.bifunctor);

    // f: C1^op → D contravariant-in-name, g: C2 → D
    let c3 = chain(3);
    let d = chain(3);
    let fs = all_functors(&arc(opposite_cat(&c2)), &d, false).unwrap();
    let gs = all_functors(&c3, &d, false).unwrap();
    let prod = common_range_product(&fs[1], &gs[2]).unwrap();
    check_functor(&prod).assert_passed();
    let b = functor_to_bifunctor(&prod).unwrap();
    bifunctor_check(&b).assert_passed();
    let (p, q) = bifunctor_decompose(&b).unwrap();
    bifunctor_check(&p).assert_passed();
    assert_eq!(pair_bifunctors(&p, &q).unwrap(), b);
}

#[test]
fn naturality_and_bridges() {
    let c3 = chain(3);
    let fs = all_functors(&c3, &c3, false).unwrap();
    let id = Functor::identity(&c3);
    let t = bridge_check(&id, &id, NatTrans::identity(&id).components().to_vec()).unwrap();
    assert!(t.is_natural && t.is_bridge);
    // pointwise f ≤ g gives a canonical bridge, natural by thinness
    let mut seen = 0;
    for f in &fs {
        for g in &fs {
            if (0..3).all(|x| f.obj(x) <= g.obj(x)) {
                let comps = (0..3).map(|x| c3.hom(f.obj(x), g.obj(x))[0]).collect();
                let b = bridge_check(f, g, comps).unwrap();
                assert!(b.is_natural);
                b.report.assert_passed();
                seen += 1;
            }
        }
    }
    assert!(seen > fs.len());

    // conjugation by x on S3 is naturally isomorphic to the identity with
    // component x; any other component breaks a square
    let s3 = symmetric(3).unwrap();
    let c = arc(from_group(&s3));
    let x = s3.element("213").unwrap();
    let conj = Functor::new(
        c.clone(),
        c.clone(),
        vec![0],
        (0..6).map(|a| s3.op(s3.op(x, a), s3.inv(x))).collect(),
    )
    .unwrap();
    let idc = Functor::identity(&c);
    assert!(bridge_check(&idc, &conj, vec![x]).unwrap().is_natural);
    let y = s3.element("132").unwrap();
    let bad = bridge_check(&idc, &conj, vec![y]).unwrap();
    assert!(!bad.is_natural);
    assert!(bad.witness.is_some());

    let c2 = chain(2);
    let f0 = Functor::constant(&c2, &c2, 0);
    assert!(matches!(
        bridge_check(&f0, &f0, vec![c2.arrow("0<=1").unwrap(); 2]),
        Err(Error::EndpointError(_))
    ));

    let tau = NatTrans::identity(&conj);
    let bc = bridge_category(&NatTrans::new(idc.clone(), conj.clone(), vec![x]).unwrap()).unwrap();
    bc.cat.check().assert_passed();
    check_functor(&bc.functor).assert_passed();
    assert!(bridge_category(&tau).is_ok());
}

fn nat_oracle(f: &Functor, g: &Functor) -> usize {
    // every choice of components, kept when all squares commute
    let (c, d) = (f.src(), f.tgt());
    let choices: Vec<Vec<usize>> = (0..c.object_count()).map(|x| d.hom(f.obj(x), g.obj(x))).collect();
    let mut count = 0;
    let total: usize = choices.iter().map(Vec::len).product();
    for mut code in 0..total {
        let mut comps = Vec::new();
        for ch in &choices {
            comps.push(ch[code % ch.len()]);
            code /= ch.len();
        }
        let ok = (0..c.arrow_count()).all(|a| {
            d.comp(comps[c.tgt(a)], f.arr(a)) == d.comp(g.arr(a), comps[c.src(a)])
        });
        count += ok as usize;
    }
    count
}

#[test]
fn functor_categories() {
    let c2 = chain(2);
    let cat = functor_category(&c2, &c2).unwrap();
    assert_eq!(cat.cat.object_count(), 3);
    let oracle: usize = cat
        .functors
        .iter()
        .flat_map(|f| cat.functors.iter().map(move |g| nat_oracle(f, g)))
        .sum();
    assert_eq!(cat.cat.arrow_count(), oracle);
    cat.cat.check().assert_passed();

    let s3 = arc(from_group(&symmetric(3).unwrap()));
    let z2 = arc(from_group(&cyclic(2).unwrap()));
    let cat = functor_category(&z2, &s3).unwrap();
    cat.cat.check().assert_passed();
    let oracle: usize = cat
        .functors
        .iter()
        .flat_map(|f| cat.functors.iter().map(move |g| nat_oracle(f, g)))
        .sum();
    assert_eq!(cat.cat.arrow_count(), oracle);

    for t in &cat.nats {
        let l = vcompose(&NatTrans::identity(t.to()), t).unwrap();
        let r = vcompose(t, &NatTrans::identity(t.from())).unwrap();
        assert_eq!((&l, &r), (t, t));
    }
}

#[test]
fn horizontal_and_interchange() {
    let (c, d, e) = (chain(2), chain(2), chain(3));
    let cd = functor_category(&c, &d).unwrap();
    let de = functor_category(&d, &e).unwrap();
    for a in &de.nats {
        let idd = NatTrans::identity(&Functor::identity(&d));
        assert_eq!(hcompose(a, &idd).unwrap(), *a);
    }
    let mut grids = 0;
    for t in &cd.nats {
        for s in cd.nats.iter().filter(|s| s.from() == t.to()) {
            for a in &de.nats {
                for b in de.nats.iter().filter(|b| b.from() == a.to()) {
                    interchange_check(a, b, s, t).unwrap().assert_passed();
                    grids += 1;
                }
            }
        }
    }
    assert!(grids > 100);

    let cf = composition_functor(&c, &d, &e).unwrap();
    check_functor(&cf.functor).assert_passed();
    cf.ce.cat.check().assert_passed();
}

#[test]
fn arrow_categories() {
    let d = arc(discrete(&FinSet::of(&["a", "b"])));
    let id = Functor::identity(&d);
    let ac = arrow_category(&id, &id).unwrap();
    assert_eq!(ac.object_count(), 2);
    let c2 = chain(2);
    let id = Functor::identity(&c2);
    let ac = arrow_category(&id, &id).unwrap();
    assert_eq!(ac.object_count(), 3);
    ac.check().assert_passed();
    // brute force over the order: objects are pairs a ≤ b, and a square
    // (a,b) → (c,d) exists iff a ≤ c and b ≤ d, commuting by thinness
    let p = Poset::chain(2);
    let objs: Vec<(usize, usize)> = (0..2)
        .flat_map(|a| (0..2).map(move |b| (a, b)))
        .filter(|&(a, b)| p.leq(a, b))
        .collect();
    assert_eq!(objs.len(), ac.object_count());
    let mut squares = 0;
    for &(a, b) in &objs {
        for &(c, d) in &objs {
            squares += (p.leq(a, c) && p.leq(b, d)) as usize;
        }
    }
    assert_eq!(ac.arrow_count(), squares);
}

#[test]
fn hom_functors_and_slices() {
    let d = arc(discrete(&FinSet::of(&["a", "b"])));
    assert_eq!(hom_set(&d, 0, 0).len(), 1);
    assert!(hom_set(&d, 0, 1).is_empty());
    let z2 = arc(from_group(&cyclic(2).unwrap()));
    let (l, r) = hom_functors(&z2, 0);
    assert_eq!(l.set(0).len(), 2);
    check_set_functor(&l).assert_passed();
    check_set_functor(&r).assert_passed();
    let c3 = chain(3);
    let p = Poset::chain(3);
    for a in 0..3 {
        for b in 0..3 {
            assert_eq!(hom_set(&c3, a, b).len(), p.leq(a, b) as usize);
        }
    }

    let hom = hom_bifunctor(&c3).unwrap();
    bifunctor_check(&hom.bifunctor).assert_passed();
    let id = c3.identity(1);
    let t = slice_nat(&hom.bifunctor, id).unwrap();
    assert_eq!(t, NatTrans::identity(&hom.bifunctor.left_slice(1)));
    for f in 0..c3.arrow_count() {
        naturality(&slice_nat(&hom.bifunctor, f).unwrap()).assert_passed();
    }

    // the families of L and R reassemble into Hom on C^op × C
    let setcat = &hom.setcat;
    let rows: Vec<Functor> = (0..3).map(|x| hom_functors(&c3, x).0.realize(setcat).unwrap()).collect();
    let cols: Vec<Functor> = (0..3).map(|y| hom_functors(&c3, y).1.realize(setcat).unwrap()).collect();
    let op = arc(opposite_cat(&c3));
    let assembled = assemble_functor(&op, &c3, &rows, &cols).unwrap();
    assert_eq!(assembled, bifunctor_to_functor(&hom.bifunctor));
    let (rows2, cols2) = functor_slices(&assembled).unwrap();
    assert_eq!((rows2, cols2), (rows.clone(), cols.clone()));

    let mut bent = cols.clone();
    bent[2] = Functor::constant(&op, setcat, bent[2].obj(0));
    assert!(matches!(
        assemble_functor(&op, &c3, &rows, &bent),
        Err(Error::IncompatibleFamilies(_))
    ));
}

#[test]
fn yoneda_counts() {
    let c3 = chain(3);
    for a in 0..3 {
        let (l, _) = hom_functors(&c3, a);
        let y = yoneda(&c3, a, &l).unwrap();
        assert_eq!(y.nat_set.len(), hom_set(&c3, a, a).len());
        y.report.assert_passed();
    }
    let (l0, _) = hom_functors(&c3, 0);
    assert_eq!(yoneda(&c3, 0, &l0).unwrap().nat_set.len(), 1);
    let z3 = arc(from_group(&cyclic(3).unwrap()));
    let (l, _) = hom_functors(&z3, 0);
    let y = yoneda(&z3, 0, &l).unwrap();
    assert_eq!(y.nat_set.len(), 3);
    y.report.assert_passed();

    let g = groupoid();
    let (lx, _) = hom_functors(&g, 0);
    let (ly, _) = hom_functors(&g, 1);
    let taus = set_nats(&lx, &ly).unwrap();
    yoneda_naturality(&g, &lx, &ly, &taus).unwrap().assert_passed();
    for c in [c3.clone(), z3.clone(), g.clone(), arc(discrete(&FinSet::of(&["a", "b"])))] {
        yoneda_embedding(&c).unwrap().assert_passed();
    }
}

#[test]
fn cayley_and_representations() {
    let z3 = cyclic(3).unwrap();
    let h = cayley(&z3).unwrap();
    assert!(h.is_iso());
    assert_eq!(h.tgt().len(), 3);
    assert!(h.tgt().is_abelian());

    let g = groupoid();
    let (lx, _) = hom_functors(&g, 0);
    let beta = set_nats(&lx, &lx)
        .unwrap()
        .into_iter()
        .find(|t| t.components.iter().all(|m| m.classify().bijective && *m == FinMap::identity(m.dom())))
        .unwrap();
    assert_eq!(compare_representations(&g, &lx, (0, &beta), (0, &beta)).unwrap(), g.identity(0));
    let u = g.arrow("u").unwrap();
    let gamma = dagger(&g, u);
    assert_eq!(compare_representations(&g, &lx, (0, &beta), (1, &gamma)).unwrap(), u);

    let c2 = chain(2);
    let (l0, _) = hom_functors(&c2, 0);
    let (l1, _) = hom_functors(&c2, 1);
    let up = set_nats(&l1, &l0).unwrap();
    assert!(matches!(
        compare_representations(&c2, &l0, (1, &up[0]), (1, &up[0])),
        Err(Error::NotARepresentation(_))
    ));
}

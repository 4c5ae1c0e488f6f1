use super::Poset;
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::FinMap;

/// How a map between posets interacts with their orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderMapClass {
    pub preserving: bool,
    pub reversing: bool,
    /// `a ≤ b ⇔ f a ≤ f b`.
    pub embedding: bool,
    /// An onto embedding.
    pub order_bijective: bool,
    pub monic: bool,
    pub bijective: bool,
    /// The same flags for `f: P^op → Q^op`.
    pub dual_preserving: bool,
    pub dual_order_bijective: bool,
    pub report: LawReport,
}

fn require_shape(f: &FinMap, p: &Poset, q: &Poset) -> Result<()> {
    if f.dom() != p.carrier() || f.cod() != q.carrier() {
        return Err(Error::Mismatch(format!(
            "{f} is not a map {} -> {}",
            p.carrier(),
            q.carrier()
        )));
    }
    Ok(())
}

fn flags(f: &FinMap, p: &Poset, q: &Poset) -> (bool, bool, bool) {
    let preserving = p.pairs().all(|(a, b)| q.leq(f.at(a), f.at(b)));
    let reversing = p.pairs().all(|(a, b)| q.leq(f.at(b), f.at(a)));
    let n = p.len();
    let reflecting = (0..n).all(|a| (0..n).all(|b| !q.leq(f.at(a), f.at(b)) || p.leq(a, b)));
    (preserving, reversing, preserving && reflecting)
}

pub fn map_classify(f: &FinMap, p: &Poset, q: &Poset) -> Result<OrderMapClass> {
    require_shape(f, p, q)?;
    let (preserving, reversing, embedding) = flags(f, p, q);
    let cls = f.classify();
    let order_bijective = embedding && cls.onto;
    let (dual_preserving, _, dual_embedding) = flags(f, &p.opposite(), &q.opposite());
    let dual_order_bijective = dual_embedding && cls.onto;

    let mut report = LawReport::new("order-map");
    report.check("order.map.embedding_monic", !embedding || cls.monic, || f.to_string());
    report.check("order.map.order_bijective_bijective", !order_bijective || cls.bijective, || {
        f.to_string()
    });
    report.check("order.map.dual_invariance", order_bijective == dual_order_bijective, || {
        f.to_string()
    });
    report.check("order.map.dual_preserving", preserving == dual_preserving, || f.to_string());
    Ok(OrderMapClass {
        preserving,
        reversing,
        embedding,
        order_bijective,
        monic: cls.monic,
        bijective: cls.bijective,
        dual_preserving,
        dual_order_bijective,
        report,
    })
}

/// Checks `f: P → Q`, `g: Q → P` as a Galois connection in both forms: the
/// monotone unit/counit form and the comparability form `f p ≤ q ⇔ p ≤ g q`.
/// The two forms are equivalent, which is recorded as its own law.
pub fn galois_check(f: &FinMap, g: &FinMap, p: &Poset, q: &Poset) -> Result<LawReport> {
    require_shape(f, p, q)?;
    require_shape(g, q, p)?;
    let (pc, qc) = (p.carrier(), q.carrier());
    let mut r = LawReport::new("galois");
    let mut axioms = true;
    for (a, b) in p.pairs() {
        axioms &= r.check("order.galois.f_monotone", q.leq(f.at(a), f.at(b)), || {
            format!("{} <= {}", pc.get(a), pc.get(b))
        });
    }
    for (a, b) in q.pairs() {
        axioms &= r.check("order.galois.g_monotone", p.leq(g.at(a), g.at(b)), || {
            format!("{} <= {}", qc.get(a), qc.get(b))
        });
    }
    for x in 0..p.len() {
        axioms &= r.check("order.galois.unit", p.leq(x, g.at(f.at(x))), || pc.get(x).to_string());
    }
    for y in 0..q.len() {
        axioms &= r.check("order.galois.counit", q.leq(f.at(g.at(y)), y), || qc.get(y).to_string());
    }
    let mut comparable = true;
    for x in 0..p.len() {
        for y in 0..q.len() {
            comparable &= r.check(
                "order.galois.comparable",
                q.leq(f.at(x), y) == p.leq(x, g.at(y)),
                || format!("({},{})", pc.get(x), qc.get(y)),
            );
        }
    }
    r.check("order.galois.equivalence", axioms == comparable, || {
        format!("axioms hold = {axioms}, comparability holds = {comparable}")
    });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::{FinSet, Mask};

    #[test]
    fn identity_on_chain_is_order_bijective() {
        let c = Poset::chain(3);
        let m = map_classify(&FinMap::identity(c.carrier()), &c, &c).unwrap();
        assert!(m.order_bijective && m.preserving && m.dual_order_bijective);
        m.report.assert_passed();
    }

    #[test]
    fn negation_reverses() {
        let w = Poset::int_window(2);
        let neg = FinMap::from_fn(w.carrier().clone(), w.carrier().clone(), |i| {
            let v: i64 = w.carrier().get(i).as_str().parse().unwrap();
            w.index(&(-v).to_string()).unwrap()
        });
        let m = map_classify(&neg, &w, &w).unwrap();
        assert!(m.reversing && !m.preserving && m.bijective);
        let into_op = map_classify(&neg, &w, &w.opposite()).unwrap();
        assert!(into_op.order_bijective);
    }

    #[test]
    fn halving_preserves_without_embedding() {
        let c = Poset::chain(4);
        let half = FinMap::from_fn(c.carrier().clone(), c.carrier().clone(), |i| i / 2);
        let m = map_classify(&half, &c, &c).unwrap();
        assert!(m.preserving && !m.embedding);
    }

    #[test]
    fn identity_adjunction() {
        let c = Poset::diamond();
        let id = FinMap::identity(c.carrier());
        galois_check(&id, &id, &c, &c).unwrap().assert_passed();
    }

    fn image_preimage() -> (Poset, Poset, FinMap, FinMap) {
        let x = FinSet::of(&["a", "b"]);
        let y = FinSet::of(&["u", "v"]);
        let h = FinMap::of(&x, &y, &[("a", "u"), ("b", "u")]).unwrap();
        let px = Poset::powerset(&x).unwrap();
        let py = Poset::powerset(&y).unwrap();
        let mask = |p: &Poset, base: &FinSet, i: usize| {
            let tok = p.carrier().get(i);
            base.iter()
                .enumerate()
                .filter(|(_, s)| tok.as_str().trim_matches(|c| c == '{' || c == '}').split(',').any(|t| t == s.as_str()))
                .fold(Mask::EMPTY, |m, (k, _)| m.insert(k))
        };
        let f = FinMap::from_fn(px.carrier().clone(), py.carrier().clone(), |i| {
            let img = h.image(mask(&px, &x, i));
            py.index(y.subset_token(img).as_str()).unwrap()
        });
        let g = FinMap::from_fn(py.carrier().clone(), px.carrier().clone(), |i| {
            let pre = h.preimage(mask(&py, &y, i));
            px.index(x.subset_token(pre).as_str()).unwrap()
        });
        (px, py, f, g)
    }

    #[test]
    fn image_preimage_connection() {
        let (px, py, f, g) = image_preimage();
        galois_check(&f, &g, &px, &py).unwrap().assert_passed();
    }

    #[test]
    fn perturbed_right_adjoint_fails_both_forms() {
        let (px, py, f, g) = image_preimage();
        let mut t = g.table().to_vec();
        let top = py.index("{u,v}").unwrap();
        t[top] = px.index("{a}").unwrap();
        let g2 = FinMap::from_table(g.dom().clone(), g.cod().clone(), t).unwrap();
        let r = galois_check(&f, &g2, &px, &py).unwrap();
        assert!(!r.get("order.galois.comparable").unwrap().passed());
        assert!(r.failures().any(|c| c.law != "order.galois.comparable"));
        assert!(r.get("order.galois.equivalence").unwrap().passed());
    }
}

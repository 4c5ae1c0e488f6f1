use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{Family, FinMap, FinSet, Mask};

const POWER_BOUND: usize = 8;

fn guard(s: &FinSet) -> Result<()> {
    if s.len() > POWER_BOUND {
        return Err(Error::TooLarge {
            what: "power set base",
            size: s.len(),
            bound: POWER_BOUND,
        });
    }
    Ok(())
}

/// `𝔓f: 𝔓A → 𝔓B`, `S ↦ f[S]`, on subset tokens.
pub fn power_map(f: &FinMap) -> Result<FinMap> {
    guard(f.dom())?;
    guard(f.cod())?;
    let (pd, dm) = f.dom().powerset_tokens();
    let (pc, _) = f.cod().powerset_tokens();
    Ok(FinMap::from_fn(pd, pc.clone(), |i| {
        let tok = f.cod().subset_token(f.image(dm[i]));
        pc.index_of(&tok).expect("subset token")
    }))
}

fn power_of(m: Mask) -> Vec<Mask> {
    let mut v: Vec<Mask> = m.subsets().collect();
    v.sort();
    v
}

/// Functor laws of `𝔓` at `f`, and the power-set identities on the subsets
/// of the domain.
pub fn power_functor_check(f: &FinMap) -> Result<LawReport> {
    let pf = power_map(f)?;
    let mut r = LawReport::new("power-functor");
    let (dom, cod) = (f.dom(), f.cod());
    let (_, dm) = dom.powerset_tokens();
    for (i, &a) in dm.iter().enumerate() {
        // Elementwise image, by symbol lookup.
        let img = FinSet::collect(dom.subset(a).iter().map(|x| f.apply(x).expect("in domain").clone()));
        r.check("settools.power.image", pf.cod().get(pf.at(i)) == &cod.subset_token(cod.mask_of(&img)?), || {
            dom.subset_token(a).to_string()
        });
    }
    let pid = power_map(&FinMap::identity(dom))?;
    r.check("settools.power.identity", pid == FinMap::identity(pid.dom()), || {
        "𝔓 of the identity".to_string()
    });
    let endos: Vec<FinMap> = if cod.len().pow(cod.len() as u32) <= 256 {
        FinMap::all(cod, cod).collect()
    } else {
        std::iter::once(FinMap::identity(cod))
            .chain(cod.iter().map(|y| FinMap::constant(cod, cod, y).expect("point")))
            .collect()
    };
    for g in &endos {
        let lhs = power_map(&FinMap::compose(g, f)?)?;
        let rhs = FinMap::compose(&power_map(g)?, &pf)?;
        r.check("settools.power.composition", lhs == rhs, || format!("g={g}"));
    }
    for &a in &dm {
        let pa = power_of(a);
        let union_pa = pa.iter().fold(Mask::EMPTY, |acc, &m| acc.union(m));
        r.check("settools.power.union_of_power", union_pa == a, || dom.subset_token(a).to_string());
        for &b in &dm {
            let pb = power_of(b);
            let w = || format!("A={} B={}", dom.subset_token(a), dom.subset_token(b));
            let inter: Vec<Mask> = pa.iter().copied().filter(|m| pb.contains(m)).collect();
            r.check("settools.power.intersection", inter == power_of(a.intersection(b)), w);
            let pab = power_of(a.union(b));
            r.check(
                "settools.power.union",
                pa.iter().chain(pb.iter()).all(|m| pab.contains(m)),
                w,
            );
            r.check("settools.power.family_bound", a.is_subset(a.union(b)) && pab.contains(&a) && pab.contains(&b), w);
            if a.is_subset(b) {
                r.check(
                    "settools.power.monotone",
                    pa.iter().all(|m| pb.contains(m)) && f.image(a).is_subset(f.image(b)),
                    w,
                );
            }
        }
    }
    Ok(r)
}

/// `f[[X]] = {f[A] : A ∈ X}`.
pub fn image_family(f: &FinMap, x: &Family) -> Family {
    Family::from_masks(f.cod().clone(), x.members().iter().map(|&a| f.image(a)))
}

/// `f⁻¹[[Y]] = {f⁻¹B : B ∈ Y}`.
pub fn preimage_family(f: &FinMap, y: &Family) -> Family {
    Family::from_masks(f.dom().clone(), y.members().iter().map(|&b| f.preimage(b)))
}

/// `f[X] = {B ⊆ cod : f⁻¹B ∈ X}`.
pub fn direct_image(f: &FinMap, x: &Family) -> Family {
    Family::from_masks(
        f.cod().clone(),
        Mask::all(f.cod().len()).filter(|&b| x.contains(f.preimage(b))),
    )
}

/// `f⁻¹[Y] = {A ⊆ dom : f[A] ∈ Y}`.
pub fn direct_inverse_image(f: &FinMap, y: &Family) -> Family {
    Family::from_masks(
        f.dom().clone(),
        Mask::all(f.dom().len()).filter(|&a| y.contains(f.image(a))),
    )
}

/// `f→A`: the subsets of the codomain whose preimage is `A`.
pub fn forward_image(f: &FinMap, a: Mask) -> Family {
    Family::from_masks(
        f.cod().clone(),
        Mask::all(f.cod().len()).filter(|&b| f.preimage(b) == a),
    )
}

/// `f←B`: the subsets of the domain whose image is `B`.
pub fn backward_image(f: &FinMap, b: Mask) -> Family {
    Family::from_masks(
        f.dom().clone(),
        Mask::all(f.dom().len()).filter(|&a| f.image(a) == b),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyImages {
    /// `f[[X]]`
    pub image_family: Family,
    /// `f⁻¹[[Y]]`
    pub preimage_family: Family,
    /// `f[X]`
    pub direct: Family,
    /// `f⁻¹[Y]`
    pub direct_inverse: Family,
}

fn require_families(f: &FinMap, x: &Family, y: &Family) -> Result<()> {
    guard(f.dom())?;
    guard(f.cod())?;
    if x.carrier() != f.dom() {
        return Err(Error::CarrierMismatch(format!("X lives on {}, expected {}", x.carrier(), f.dom())));
    }
    if y.carrier() != f.cod() {
        return Err(Error::CarrierMismatch(format!("Y lives on {}, expected {}", y.carrier(), f.cod())));
    }
    Ok(())
}

pub fn family_images(f: &FinMap, x: &Family, y: &Family) -> Result<FamilyImages> {
    require_families(f, x, y)?;
    Ok(FamilyImages {
        image_family: image_family(f, x),
        preimage_family: preimage_family(f, y),
        direct: direct_image(f, x),
        direct_inverse: direct_inverse_image(f, y),
    })
}

/// The fiber, forward/backward image and family image identities for `f`
/// with `X` over the domain and `Y` over the codomain.
pub fn family_image_laws(f: &FinMap, x: &Family, y: &Family) -> Result<LawReport> {
    let imgs = family_images(f, x, y)?;
    let mut r = LawReport::new("family-images");
    let cls = f.classify();
    let (dom, cod) = (f.dom(), f.cod());
    let range = f.range_mask();
    let outside = cod.full_mask().difference(range);
    let pf = power_map(f)?;
    let (_, dm) = dom.powerset_tokens();
    let x_nonempty = !x.contains(Mask::EMPTY);
    let y_nonempty = !y.contains(Mask::EMPTY);

    for b in Mask::all(cod.len()) {
        let w = || format!("f={f} B={}", cod.subset_token(b));
        let back = backward_image(f, b);
        let union_back = back.union_all();
        let tok = cod.subset_token(b);
        let fiber = (0..dm.len())
            .filter(|&i| pf.cod().get(pf.at(i)) == &tok)
            .map(|i| dm[i]);
        r.check("settools.images.backward_is_fiber", back == Family::from_masks(dom.clone(), fiber), w);
        if !back.is_empty() {
            let pre = f.preimage(b);
            r.check("settools.images.fiber_max", back.contains(pre) && union_back == pre, w);
        }
        if cls.onto {
            r.check(
                "settools.images.onto_direct",
                imgs.direct.contains(b) == x.contains(union_back),
                w,
            );
        }
        if x_nonempty && b.is_subset(range) {
            r.check(
                "settools.images.theorem_direct",
                imgs.direct.contains(b) == x.contains(union_back),
                w,
            );
        }
    }
    for a in Mask::all(dom.len()) {
        let w = || format!("f={f} A={}", dom.subset_token(a));
        let fwd = forward_image(f, a);
        let fa = f.image(a);
        let bracket: Vec<Mask> = outside.subsets().map(|e| fa.union(e)).collect();
        let bracket = Family::from_masks(cod.clone(), bracket);
        r.check("settools.images.forward_bracket", fwd.is_subfamily(&bracket), w);
        if cls.monic {
            r.check("settools.images.forward_bracket_monic", fwd == bracket, w);
            let by_fibers = y.members().iter().any(|&b| {
                b.is_subset(range)
                    && a == b.iter().fold(Mask::EMPTY, |acc, j| acc.union(f.fiber_mask(j)))
            });
            r.check(
                "settools.images.monic_inverse",
                imgs.direct_inverse.contains(a) == by_fibers,
                w,
            );
            if y_nonempty {
                r.check(
                    "settools.images.theorem_inverse",
                    imgs.direct_inverse.contains(a) == y.contains(fwd.intersection_all()),
                    w,
                );
            }
        }
    }
    if cls.bijective {
        r.check("settools.images.bijective", imgs.direct == imgs.image_family, || f.to_string());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> FinSet {
        FinSet::of(&["a", "b", "c"])
    }

    #[test]
    fn power_of_identity_is_identity() {
        let s = abc();
        let p = power_map(&FinMap::identity(&s)).unwrap();
        assert_eq!(p, FinMap::identity(p.dom()));
    }

    #[test]
    fn collapse_map_power_table() {
        let s = abc();
        let t = FinSet::of(&["y", "z"]);
        let f = FinMap::of(&s, &t, &[("a", "z"), ("b", "z"), ("c", "y")]).unwrap();
        let p = power_map(&f).unwrap();
        assert_eq!(p.dom().len(), 8);
        let img = |tok: &str| p.apply(&p.dom().symbol(tok).unwrap()).unwrap().to_string();
        assert_eq!(img("{a,b}"), "{z}");
        assert_eq!(img("{a,c}"), "{y,z}");
        assert_eq!(img("{}"), "{}");
        power_functor_check(&f).unwrap().assert_passed();
    }

    #[test]
    fn union_of_powers_is_strictly_smaller() {
        let s = FinSet::of(&["a", "b"]);
        let (a, b) = (Mask::singleton(0), Mask::singleton(1));
        let union: Vec<Mask> = power_of(a).into_iter().chain(power_of(b)).collect();
        let full = power_of(a.union(b));
        assert!(union.iter().all(|m| full.contains(m)));
        assert!(!union.contains(&s.full_mask()));
    }

    #[test]
    fn bijection_images_agree() {
        let s = abc();
        let f = FinMap::of(&s, &s, &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let x = Family::of(&s, &[&["a"], &["a", "c"]]);
        assert_eq!(direct_image(&f, &x), image_family(&f, &x));
    }

    #[test]
    fn collapse_backward_image_is_fiber() {
        let s = abc();
        let t = FinSet::of(&["y", "z"]);
        let f = FinMap::of(&s, &t, &[("a", "z"), ("b", "z"), ("c", "y")]).unwrap();
        let z = t.mask_of(&FinSet::of(&["z"])).unwrap();
        let back = backward_image(&f, z);
        assert_eq!(back, Family::of(&s, &[&["a"], &["b"], &["a", "b"]]));
        let x = Family::of(&s, &[&["a", "b"], &["c"]]);
        let y = Family::of(&t, &[&["z"]]);
        family_image_laws(&f, &x, &y).unwrap().assert_passed();
    }

    #[test]
    fn wrong_carrier_is_rejected() {
        let s = abc();
        let f = FinMap::identity(&s);
        let other = Family::of(&FinSet::of(&["q"]), &[&["q"]]);
        assert!(matches!(
            family_images(&f, &other, &Family::empty(s.clone())),
            Err(Error::CarrierMismatch(_))
        ));
    }
}

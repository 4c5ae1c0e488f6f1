use super::base::{FinGroup, ISO_GUARD};
use super::sub::{all_subgroups, center, is_normal, quotient, subgroup_criteria, Subgroup};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{FinMap, FinSet, Mask, Symbol};

/// A map between group carriers that preserves the operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    src: FinGroup,
    tgt: FinGroup,
    map: FinMap,
}

pub fn hom_check(src: &FinGroup, tgt: &FinGroup, map: &FinMap) -> Result<GroupHom> {
    if map.dom() != src.carrier() {
        return Err(Error::CarrierMismatch(format!("domain {}", map.dom())));
    }
    if map.cod() != tgt.carrier() {
        return Err(Error::CarrierMismatch(format!("codomain {}", map.cod())));
    }
    let n = src.len();
    for x in 0..n {
        for y in 0..n {
            if map.at(src.op(x, y)) != tgt.op(map.at(x), map.at(y)) {
                return Err(Error::NotHomomorphism(format!(
                    "({},{})",
                    src.name(x),
                    src.name(y)
                )));
            }
        }
    }
    Ok(GroupHom {
        src: src.clone(),
        tgt: tgt.clone(),
        map: map.clone(),
    })
}

impl GroupHom {
    pub fn src(&self) -> &FinGroup {
        &self.src
    }

    pub fn tgt(&self) -> &FinGroup {
        &self.tgt
    }

    pub fn map(&self) -> &FinMap {
        &self.map
    }

    pub fn at(&self, x: usize) -> usize {
        self.map.at(x)
    }

    pub fn is_epi(&self) -> bool {
        self.map.classify().onto
    }

    pub fn is_iso(&self) -> bool {
        self.map.classify().bijective
    }

    pub fn identity(g: &FinGroup) -> GroupHom {
        GroupHom {
            src: g.clone(),
            tgt: g.clone(),
            map: FinMap::identity(g.carrier()),
        }
    }

    /// The homomorphism sending everything to the unit.
    pub fn trivial(src: &FinGroup, tgt: &FinGroup) -> GroupHom {
        GroupHom {
            src: src.clone(),
            tgt: tgt.clone(),
            map: FinMap::from_fn(src.carrier().clone(), tgt.carrier().clone(), |_| tgt.unit()),
        }
    }
}

/// Product, unit and inverse preservation.
pub fn hom_laws(h: &GroupHom) -> LawReport {
    let (g1, g2) = (&h.src, &h.tgt);
    let mut r = LawReport::new("hom");
    for x in 0..g1.len() {
        for y in 0..g1.len() {
            r.check(
                "group.hom.product",
                h.at(g1.op(x, y)) == g2.op(h.at(x), h.at(y)),
                || format!("({},{})", g1.name(x), g1.name(y)),
            );
        }
        r.check("group.hom.inverse", h.at(g1.inv(x)) == g2.inv(h.at(x)), || {
            g1.name(x).to_string()
        });
    }
    r.check("group.hom.unit", h.at(g1.unit()) == g2.unit(), String::new);
    r
}

/// Homomorphism laws of an arbitrary map between the carriers; once they
/// hold, the transfer facts and the first isomorphism theorem as well.
pub fn hom_report(src: &FinGroup, tgt: &FinGroup, map: &FinMap) -> Result<LawReport> {
    if map.dom() != src.carrier() {
        return Err(Error::CarrierMismatch(format!("domain {}", map.dom())));
    }
    if map.cod() != tgt.carrier() {
        return Err(Error::CarrierMismatch(format!("codomain {}", map.cod())));
    }
    let h = GroupHom {
        src: src.clone(),
        tgt: tgt.clone(),
        map: map.clone(),
    };
    let mut r = hom_laws(&h);
    if r.passed() {
        r.absorb(transfer_check(&h));
        r.absorb(first_iso(&h)?.report);
    }
    Ok(r)
}

/// `Nul h = h⁻¹(e)`.
pub fn kernel(h: &GroupHom) -> Subgroup<'_> {
    Subgroup::trusted(&h.src, h.map.fiber_mask(h.tgt.unit()))
}

pub fn image(h: &GroupHom) -> Subgroup<'_> {
    Subgroup::trusted(&h.tgt, h.map.range_mask())
}

/// Transfer of subgroups and normal subgroups along `h`, over every subgroup
/// of both groups. The normal-image item needs `h` onto; when it is not,
/// the item is skipped and a note records it.
pub fn transfer_check(h: &GroupHom) -> LawReport {
    let (g1, g2) = (&h.src, &h.tgt);
    let mut r = LawReport::new("transfer");
    let k = kernel(h);
    r.check(
        "group.hom.kernel_normal",
        subgroup_criteria(g1, k.mask())[1] && is_normal(&k),
        || k.token().to_string(),
    );
    let epi = h.is_epi();
    if !epi {
        r.note("map is not onto: images of normal subgroups are not checked for normality");
    }
    for s in all_subgroups(g1) {
        let img = h.map.image(s.mask());
        let w = || s.token().to_string();
        let img_ok = subgroup_criteria(g2, img)[1];
        r.check("group.hom.image_subgroup", img_ok, w);
        if epi && is_normal(&s) && img_ok {
            r.check(
                "group.hom.image_normal_epi",
                is_normal(&Subgroup::trusted(g2, img)),
                w,
            );
        }
    }
    for s in all_subgroups(g2) {
        let pre = h.map.preimage(s.mask());
        let w = || s.token().to_string();
        let pre_ok = subgroup_criteria(g1, pre)[1];
        r.check("group.hom.preimage_subgroup", pre_ok, w);
        if is_normal(&s) && pre_ok {
            r.check(
                "group.hom.preimage_normal",
                is_normal(&Subgroup::trusted(g1, pre)),
                w,
            );
        }
    }
    r
}

/// `φ: G/Nul h → Im h`, `(Nul h)x ↦ h(x)`, with its checks.
#[derive(Clone, Debug)]
pub struct FirstIso {
    pub quotient: FinGroup,
    pub image: FinGroup,
    pub phi: GroupHom,
    pub report: LawReport,
}

pub fn first_iso(h: &GroupHom) -> Result<FirstIso> {
    let (g1, g2) = (&h.src, &h.tgt);
    let k = kernel(h);
    let q = quotient(&k)?;
    let im = image(h);
    let image_group = im.as_group();
    let mut r = LawReport::new("first-iso");
    let p = &q.projection;
    for x in 0..g1.len() {
        for y in 0..g1.len() {
            if p.at(x) == p.at(y) {
                r.check("group.iso.well_defined", h.at(x) == h.at(y), || {
                    format!("({},{})", g1.name(x), g1.name(y))
                });
            }
        }
    }
    let m = q.group.len();
    let mut table = vec![usize::MAX; m];
    for x in 0..g1.len() {
        let target = g2.name(h.at(x));
        table[p.at(x)] = image_group.index(target)?;
    }
    let phi_map = FinMap::from_table(
        q.group.carrier().clone(),
        image_group.carrier().clone(),
        table,
    )?;
    let phi = hom_check(&q.group, &image_group, &phi_map)?;
    r.check("group.iso.hom", hom_laws(&phi).passed(), String::new);
    r.check("group.iso.bijective", phi.is_iso(), || phi_map.to_string());
    r.check(
        "group.iso.count",
        g1.len() == k.len() * im.len(),
        || format!("{} ≠ {}·{}", g1.len(), k.len(), im.len()),
    );
    if h.is_epi() && k.len() == 1 {
        r.check("group.iso.epi_trivial_kernel", h.is_iso(), || h.map.to_string());
    }
    Ok(FirstIso {
        quotient: q.group,
        image: image_group,
        phi,
        report: r,
    })
}

fn hom_tables(g1: &FinGroup, g2: &FinGroup, injective: bool) -> Vec<Vec<usize>> {
    fn rec(
        k: usize,
        g1: &FinGroup,
        g2: &FinGroup,
        injective: bool,
        f: &mut [usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == f.len() {
            out.push(f.to_vec());
            return;
        }
        for t in 0..g2.len() {
            if injective && f[..k].contains(&t) {
                continue;
            }
            f[k] = t;
            let ok = (0..=k).all(|a| {
                (0..=k).all(|b| {
                    let c = g1.op(a, b);
                    c > k || f[c] == g2.op(f[a], f[b])
                })
            });
            if ok {
                rec(k + 1, g1, g2, injective, f, out);
            }
        }
        f[k] = usize::MAX;
    }
    let mut out = Vec::new();
    rec(0, g1, g2, injective, &mut vec![usize::MAX; g1.len()], &mut out);
    out
}

/// Every homomorphism `g1 → g2`, by backtracking over assignments.
pub fn all_homs(g1: &FinGroup, g2: &FinGroup) -> Result<Vec<GroupHom>> {
    let space = (g2.len() as f64).powi(g1.len() as i32);
    if space > 1e7 {
        return Err(Error::TooLarge {
            what: "map space for homomorphism search",
            size: space as usize,
            bound: 10_000_000,
        });
    }
    hom_tables(g1, g2, false)
        .into_iter()
        .map(|t| {
            let map = FinMap::from_table(g1.carrier().clone(), g2.carrier().clone(), t)?;
            hom_check(g1, g2, &map)
        })
        .collect()
}

/// Every automorphism, for `|G| ≤` [`ISO_GUARD`].
pub fn automorphisms(g: &FinGroup) -> Result<Vec<FinMap>> {
    if g.len() > ISO_GUARD {
        return Err(Error::TooLarge {
            what: "group order for automorphism enumeration",
            size: g.len(),
            bound: ISO_GUARD,
        });
    }
    hom_tables(g, g, true)
        .into_iter()
        .map(|t| FinMap::from_table(g.carrier().clone(), g.carrier().clone(), t))
        .collect()
}

/// The group of the given bijections of `carrier` under `f·g = f∘g`,
/// named by their tables. The maps must be closed under composition.
pub fn transformation_group(carrier: &FinSet, maps: &[FinMap]) -> Result<FinGroup> {
    if let Some(m) = maps
        .iter()
        .find(|m| m.dom() != carrier || m.cod() != carrier || !m.classify().bijective)
    {
        return Err(Error::NotAction(format!("{m} is not a bijection of {carrier}")));
    }
    let mut maps: Vec<FinMap> = maps.to_vec();
    maps.sort_by(|a, b| a.table().cmp(b.table()));
    maps.dedup();
    let names: Vec<Symbol> = maps.iter().map(|m| Symbol(m.to_string())).collect();
    let elems = names.into_iter().zip(maps.iter().map(|m| m.table().to_vec())).collect();
    FinGroup::from_elements(elems, |f: &Vec<usize>, g: &Vec<usize>| {
        g.iter().map(|&i| f[i]).collect()
    })
}

/// `Aut(G)` under composition.
pub fn automorphism_group(g: &FinGroup) -> Result<FinGroup> {
    transformation_group(g.carrier(), &automorphisms(g)?)
}

/// `𝔞_x(a) = x·a·x⁻¹`.
pub fn conjugation(g: &FinGroup, x: usize) -> FinMap {
    FinMap::from_fn(g.carrier().clone(), g.carrier().clone(), |a| {
        g.op(g.op(x, a), g.inv(x))
    })
}

/// `Inn(G)` with the epimorphism `x ↦ 𝔞_x` and its checks.
#[derive(Clone, Debug)]
pub struct InnerAutomorphisms {
    pub group: FinGroup,
    pub hom: GroupHom,
    pub report: LawReport,
}

pub fn inner_automorphisms(g: &FinGroup) -> Result<InnerAutomorphisms> {
    let maps: Vec<FinMap> = (0..g.len()).map(|x| conjugation(g, x)).collect();
    let mut r = LawReport::new("inner-automorphisms");
    for (x, m) in maps.iter().enumerate() {
        let auto = m.classify().bijective && hom_check(g, g, m).is_ok();
        r.check("group.inner.automorphism", auto, || g.name(x).to_string());
    }
    let inn = transformation_group(g.carrier(), &maps)?;
    let table: Vec<usize> = maps
        .iter()
        .map(|m| inn.index(&Symbol(m.to_string())))
        .collect::<Result<_>>()?;
    let map = FinMap::from_table(g.carrier().clone(), inn.carrier().clone(), table)?;
    let hom = hom_check(g, &inn, &map);
    r.check("group.inner.epimorphism", hom.as_ref().is_ok_and(GroupHom::is_epi), || {
        map.to_string()
    });
    let hom = hom?;
    let k = kernel(&hom);
    let z = center(g);
    r.check("group.inner.kernel_is_center", k.mask() == z.mask(), || {
        format!("{} vs {}", k.token(), z.token())
    });
    let iso = first_iso(&hom)?;
    r.absorb(iso.report.clone());
    r.check("group.inner.quotient_iso", iso.phi.is_iso(), String::new);
    if g.len() <= ISO_GUARD {
        let aut = automorphism_group(g)?;
        let inn_mask = (0..inn.len())
            .map(|i| aut.index(inn.name(i)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .fold(Mask::EMPTY, Mask::insert);
        let s = Subgroup::trusted(&aut, inn_mask);
        r.check(
            "group.inner.normal_in_aut",
            subgroup_criteria(&aut, inn_mask)[1] && is_normal(&s),
            || s.token().to_string(),
        );
    } else {
        r.note(format!(
            "Inn ◁ Aut not checked: order {} exceeds {ISO_GUARD}",
            g.len()
        ));
    }
    Ok(InnerAutomorphisms {
        group: inn,
        hom,
        report: r,
    })
}

/// The sign of each permutation of `symmetric(n)`, as a homomorphism to `Z2`.
pub fn sign(sn: &FinGroup) -> Result<GroupHom> {
    let z2 = super::base::cyclic(2)?;
    let parity = |s: &Symbol| {
        let p: Vec<u32> = s.as_str().chars().filter_map(|c| c.to_digit(10)).collect();
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2
    };
    let map = FinMap::from_fn(sn.carrier().clone(), z2.carrier().clone(), |i| {
        parity(sn.name(i))
    });
    hom_check(sn, &z2, &map)
}

/// Reduction `Zm → Zn`, `x ↦ x mod n`, for `n | m`.
pub fn reduction(m: usize, n: usize) -> Result<GroupHom> {
    let (zm, zn) = (super::base::cyclic(m)?, super::base::cyclic(n)?);
    let map = FinMap::from_fn(zm.carrier().clone(), zn.carrier().clone(), |i| {
        let v: usize = zm.name(i).as_str().parse().expect("numeral");
        zn.element(&(v % n).to_string()).expect("residue")
    });
    hom_check(&zm, &zn, &map)
}

/// The inclusion of a subgroup into its parent.
pub fn inclusion(s: &Subgroup<'_>) -> Result<GroupHom> {
    let sub = s.as_group();
    let map = FinMap::inclusion(sub.carrier(), s.parent().carrier())?;
    hom_check(&sub, s.parent(), &map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::base::{cyclic, is_isomorphic, symmetric};
    use crate::group::sub::cyclic_subgroup;

    #[test]
    fn sign_kernel_is_rotations() {
        let s3 = symmetric(3).unwrap();
        let sg = sign(&s3).unwrap();
        assert_eq!(kernel(&sg).members(), FinSet::of(&["123", "231", "312"]));
        hom_laws(&sg).assert_passed();
        transfer_check(&sg).assert_passed();
        let fi = first_iso(&sg).unwrap();
        fi.report.assert_passed();
        assert!(fi.phi.is_iso());
        assert!(is_isomorphic(&fi.quotient, &cyclic(2).unwrap()).unwrap());
    }

    #[test]
    fn trivial_and_identity() {
        let s3 = symmetric(3).unwrap();
        let t = GroupHom::trivial(&s3, &cyclic(2).unwrap());
        assert_eq!(kernel(&t).len(), 6);
        let id = GroupHom::identity(&s3);
        let fi = first_iso(&id).unwrap();
        fi.report.assert_passed();
        assert_eq!(fi.quotient.len(), 6);
    }

    #[test]
    fn non_hom_rejected() {
        let z2 = cyclic(2).unwrap();
        let m = FinMap::of(z2.carrier(), z2.carrier(), &[("0", "1"), ("1", "0")]).unwrap();
        assert_eq!(hom_check(&z2, &z2, &m), Err(Error::NotHomomorphism("(0,0)".into())));
    }

    #[test]
    fn inclusion_skips_normal_image() {
        let s3 = symmetric(3).unwrap();
        let r = cyclic_subgroup(&s3, s3.element("231").unwrap());
        let inc = inclusion(&r).unwrap();
        let rep = transfer_check(&inc);
        rep.assert_passed();
        assert!(rep.get("group.hom.image_normal_epi").is_none());
        assert_eq!(rep.notes().len(), 1);
    }

    #[test]
    fn reduction_mod_two() {
        let h = reduction(4, 2).unwrap();
        assert_eq!(kernel(&h).members(), FinSet::of(&["0", "2"]));
        let fi = first_iso(&h).unwrap();
        fi.report.assert_passed();
        assert_eq!(fi.quotient.len(), 2);
    }

    #[test]
    fn inner_automorphisms_of_s3() {
        let s3 = symmetric(3).unwrap();
        let inn = inner_automorphisms(&s3).unwrap();
        inn.report.assert_passed();
        assert_eq!(inn.group.len(), 6);
        assert_eq!(kernel(&inn.hom).len(), 1);
        let z4 = cyclic(4).unwrap();
        let inn = inner_automorphisms(&z4).unwrap();
        inn.report.assert_passed();
        assert_eq!(inn.group.len(), 1);
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&cyclic(5).unwrap()).unwrap().len(), 4);
        assert_eq!(automorphisms(&symmetric(3).unwrap()).unwrap().len(), 6);
        assert_eq!(automorphisms(&crate::group::base::klein()).unwrap().len(), 6);
        assert_eq!(all_homs(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap().len(), 2);
    }
}

use std::fmt;

use crate::error::{Error, Result};
use crate::order::{is_directed, Poset};
use crate::report::LawReport;
use crate::sets::{Family, FinMap, FinSet, Mask, Symbol};

use super::images::{direct_image, image_family, preimage_family};

/// Largest carrier for which every filter is enumerated.
pub const FILTER_GUARD: usize = 5;
const CLOSURE_GUARD: usize = 16;

fn guard(what: &'static str, n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::TooLarge { what, size: n, bound });
    }
    Ok(())
}

/// Condition a): any two members contain a third member in their intersection.
fn condition_a(f: &Family) -> bool {
    let m = f.members();
    m.iter().all(|&a| {
        m.iter()
            .all(|&b| m.iter().any(|&h| h.is_subset(a.intersection(b))))
    })
}

pub fn is_filter_base(f: &Family) -> bool {
    !f.is_empty() && !f.contains(Mask::EMPTY) && condition_a(f)
}

fn upward_closed(f: &Family) -> bool {
    let n = f.carrier().len();
    f.members()
        .iter()
        .all(|&a| (0..n).all(|i| f.contains(a.insert(i))))
}

/// The filter-base conditions on an arbitrary family: at least one member,
/// no empty member, and every two members contain a common member.
pub fn base_axioms(f: &Family) -> LawReport {
    let mut r = LawReport::new("filter-base");
    let tok = |a: Mask| f.token(a).to_string();
    r.check("settools.base.nonempty", !f.is_empty(), || "no members".to_string());
    for &a in f.members() {
        r.check("settools.base.no_empty_member", !a.is_empty(), || tok(a));
        for &b in f.members() {
            let common = f.members().iter().any(|&c| c.is_subset(a.intersection(b)));
            r.check("settools.base.directed", common, || format!("{} ∩ {}", tok(a), tok(b)));
        }
    }
    r
}

pub fn is_filter(f: &Family) -> bool {
    let m = f.members();
    !f.is_empty()
        && !f.contains(Mask::EMPTY)
        && m.iter().all(|&a| m.iter().all(|&b| f.contains(a.intersection(b))))
        && upward_closed(f)
}

fn upward_closure(f: &Family) -> Family {
    let n = f.carrier().len();
    f.with_members(Mask::all(n).filter(|&a| f.members().iter().any(|&b| b.is_subset(a))))
}

/// A validated filter base.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FilterBase(Family);

impl FilterBase {
    pub fn new(family: Family) -> Result<Self> {
        if family.contains(Mask::EMPTY) {
            return Err(Error::EmptyMemberInBase);
        }
        if family.is_empty() {
            return Err(Error::Invalid("a filter base has at least one member".into()));
        }
        if let Some((a, b)) = pair_without_member(&family) {
            return Err(Error::Invalid(format!(
                "no member inside {} ∩ {}",
                family.token(a),
                family.token(b)
            )));
        }
        Ok(FilterBase(family))
    }

    pub fn family(&self) -> &Family {
        &self.0
    }

    pub fn carrier(&self) -> &FinSet {
        self.0.carrier()
    }
}

fn pair_without_member(f: &Family) -> Option<(Mask, Mask)> {
    let m = f.members();
    for &a in m {
        for &b in m {
            if !m.iter().any(|&h| h.is_subset(a.intersection(b))) {
                return Some((a, b));
            }
        }
    }
    None
}

impl fmt::Display for FilterBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A validated filter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Filter(Family);

impl Filter {
    pub fn new(family: Family) -> Result<Self> {
        let base = FilterBase::new(family)?;
        if !is_filter(base.family()) {
            return Err(Error::Invalid(format!("{} is not a filter", base.family())));
        }
        Ok(Filter(base.0))
    }

    pub fn family(&self) -> &Family {
        &self.0
    }

    pub fn carrier(&self) -> &FinSet {
        self.0.carrier()
    }

    pub fn contains(&self, a: Mask) -> bool {
        self.0.contains(a)
    }

    pub fn as_base(&self) -> FilterBase {
        FilterBase(self.0.clone())
    }

    /// The least `A` with neither `A` nor `Aᶜ` in the filter.
    pub fn ultra_witness(&self) -> Option<Mask> {
        let n = self.carrier().len();
        Mask::all(n).find(|&a| !self.contains(a) && !self.contains(a.complement(n)))
    }

    pub fn is_ultra(&self) -> bool {
        self.ultra_witness().is_none()
    }

    /// The intersection of all members.
    pub fn kernel(&self) -> Mask {
        self.0.intersection_all()
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `⟨B⟩`: every subset containing a member of `B`.
pub fn generated(base: &FilterBase) -> Result<Filter> {
    guard("carrier for upward closure", base.carrier().len(), CLOSURE_GUARD)?;
    Ok(Filter(upward_closure(base.family())))
}

fn principal(carrier: &FinSet, a: Mask) -> Filter {
    Filter(upward_closure(&Family::from_masks(carrier.clone(), [a])))
}

/// `⟨x⟩`, the filter of all sets containing `x`.
pub fn point_filter(carrier: &FinSet, x: &Symbol) -> Result<Filter> {
    guard("carrier for upward closure", carrier.len(), CLOSURE_GUARD)?;
    let i = carrier.require(x)?;
    Ok(principal(carrier, Mask::singleton(i)))
}

/// Every upward closed family on the carrier, by backtracking over subsets
/// from the largest down.
pub fn upsets(carrier: &FinSet) -> Result<Vec<Family>> {
    let n = carrier.len();
    guard("carrier for filter enumeration", n, FILTER_GUARD)?;
    let mut order: Vec<Mask> = Mask::all(n).collect();
    order.sort_by_key(|m| std::cmp::Reverse(m.len()));
    let mut out = Vec::new();
    let mut chosen = vec![false; 1 << n];
    fn go(
        k: usize,
        n: usize,
        order: &[Mask],
        chosen: &mut Vec<bool>,
        out: &mut Vec<Vec<Mask>>,
    ) {
        if k == order.len() {
            out.push(
                (0..chosen.len())
                    .filter(|&i| chosen[i])
                    .map(|i| Mask(i as u64))
                    .collect(),
            );
            return;
        }
        let m = order[k];
        go(k + 1, n, order, chosen, out);
        if (0..n).all(|i| m.contains(i) || chosen[m.insert(i).0 as usize]) {
            chosen[m.0 as usize] = true;
            go(k + 1, n, order, chosen, out);
            chosen[m.0 as usize] = false;
        }
    }
    go(0, n, &order, &mut chosen, &mut out);
    let mut fams: Vec<Family> = out
        .into_iter()
        .map(|ms| Family::from_masks(carrier.clone(), ms))
        .collect();
    fams.sort();
    Ok(fams)
}

/// Every filter on the carrier, in canonical order.
pub fn all_filters(carrier: &FinSet) -> Result<Vec<Filter>> {
    Ok(upsets(carrier)?
        .into_iter()
        .filter(is_filter)
        .map(Filter)
        .collect())
}

/// `B ⪯ C`: every member of `B` contains a member of `C`.
pub fn refinement(b: &Family, c: &Family) -> Result<bool> {
    if b.carrier() != c.carrier() {
        return Err(Error::CarrierMismatch(format!("{} vs {}", b.carrier(), c.carrier())));
    }
    Ok(finer(b, c))
}

fn finer(b: &Family, c: &Family) -> bool {
    b.members()
        .iter()
        .all(|&x| c.members().iter().any(|&y| y.is_subset(x)))
}

#[derive(Clone, Debug)]
pub struct FilterOps {
    pub is_base: bool,
    pub is_filter: bool,
    /// `⟨B⟩`, present when the input is a base.
    pub generated: Option<Filter>,
    /// `F ↦ ⟨F⟩` for each member of the generated filter.
    pub principal_decomposition: Vec<(Mask, Filter)>,
    pub report: LawReport,
}

pub fn filter_ops(input: &Family) -> Result<FilterOps> {
    let carrier = input.carrier();
    guard("carrier for upward closure", carrier.len(), CLOSURE_GUARD)?;
    if input.contains(Mask::EMPTY) {
        return Err(Error::EmptyMemberInBase);
    }
    let is_base = is_filter_base(input);
    let is_filter = is_filter(input);
    let mut r = LawReport::new("filter-ops");
    if !is_base {
        return Ok(FilterOps {
            is_base,
            is_filter,
            generated: None,
            principal_decomposition: Vec::new(),
            report: r,
        });
    }
    let gen = Filter(upward_closure(input));
    let w = || input.to_string();
    r.check("settools.filter.generated_is_filter", self::is_filter(gen.family()), w);
    r.check("settools.filter.contains_base", input.is_subfamily(gen.family()), w);
    r.check(
        "settools.filter.fixed_iff_filter",
        (gen.family() == input) == is_filter,
        w,
    );
    if carrier.len() <= 4 {
        for f in all_filters(carrier)? {
            if input.is_subfamily(f.family()) {
                r.check(
                    "settools.filter.minimal",
                    gen.family().is_subfamily(f.family()),
                    || format!("{input} inside {f}"),
                );
            }
        }
    }
    let decomposition: Vec<(Mask, Filter)> = gen
        .family()
        .members()
        .iter()
        .map(|&a| (a, principal(carrier, a)))
        .collect();
    let union = gen.family().with_members(
        decomposition
            .iter()
            .flat_map(|(_, p)| p.family().members().iter().copied()),
    );
    r.check("settools.filter.union_of_principal", &union == gen.family(), w);
    let m = gen.family().members();
    let directed = m.iter().all(|&a| {
        m.iter()
            .all(|&b| m.iter().any(|&h| h.is_subset(a) && h.is_subset(b)))
    });
    r.check("settools.filter.downward_directed", directed, w);
    Ok(FilterOps {
        is_base,
        is_filter,
        generated: Some(gen),
        principal_decomposition: decomposition,
        report: r,
    })
}

fn all_bases(carrier: &FinSet) -> Result<Vec<Family>> {
    guard("carrier for base enumeration", carrier.len(), 3)?;
    Ok(Family::all(carrier)?.filter(is_filter_base).collect())
}

/// Refinement and `⟨·⟩` laws over every base on a carrier of at most three
/// points.
pub fn refinement_laws(carrier: &FinSet) -> Result<LawReport> {
    let bases = all_bases(carrier)?;
    let gens: Vec<Family> = bases.iter().map(upward_closure).collect();
    let mut r = LawReport::new("refinement");
    let nb = bases.len();
    let rel: Vec<Vec<bool>> = bases
        .iter()
        .map(|b| bases.iter().map(|c| finer(b, c)).collect())
        .collect();
    for i in 0..nb {
        let wi = || bases[i].to_string();
        r.check("settools.refine.reflexive", rel[i][i], wi);
        r.check("settools.refine.extensive", bases[i].is_subfamily(&gens[i]), wi);
        r.check("settools.refine.idempotent", upward_closure(&gens[i]) == gens[i], wi);
        for j in 0..nb {
            let w = || format!("{} / {}", bases[i], bases[j]);
            r.check(
                "settools.refine.mutual_iff_same_filter",
                (rel[i][j] && rel[j][i]) == (gens[i] == gens[j]),
                w,
            );
            if bases[i].is_subfamily(&bases[j]) {
                r.check("settools.refine.monotone", gens[i].is_subfamily(&gens[j]), w);
            }
            if is_filter(&bases[i]) && is_filter(&bases[j]) {
                r.check(
                    "settools.refine.filter_inclusion",
                    bases[i].is_subfamily(&bases[j]) == rel[i][j],
                    w,
                );
                if rel[i][j] && rel[j][i] {
                    r.check("settools.refine.filter_antisymmetric", i == j, w);
                }
            }
            if rel[i][j] {
                for k in 0..nb {
                    if rel[j][k] {
                        r.check("settools.refine.transitive", rel[i][k], || {
                            format!("{} / {} / {}", bases[i], bases[j], bases[k])
                        });
                    }
                }
            }
        }
    }
    Ok(r)
}

/// Ultrafilter characterisations over every filter on the carrier.
pub fn ultrafilter_suite(carrier: &FinSet) -> Result<LawReport> {
    let n = carrier.len();
    let filters = all_filters(carrier)?;
    let fams: Vec<&Family> = filters.iter().map(|f| f.family()).collect();
    let mut r = LawReport::new("ultrafilter");
    let mut ultras = Vec::new();
    for (i, f) in filters.iter().enumerate() {
        let w = || f.to_string();
        let ultra = f.is_ultra();
        if ultra {
            ultras.push(f);
        }
        let maximal = fams
            .iter()
            .all(|g| !finer(fams[i], g) || *g == fams[i]);
        r.check("settools.ultra.maximal", ultra == maximal, w);
        let prime = Mask::all(n).all(|a| {
            Mask::all(n).all(|b| !f.contains(a.union(b)) || f.contains(a) || f.contains(b))
        });
        r.check("settools.ultra.union_prime", ultra == prime, w);
        for g in &filters {
            let union = f.family().with_members(
                f.family()
                    .members()
                    .iter()
                    .chain(g.family().members())
                    .copied(),
            );
            if !is_filter(&union) {
                continue;
            }
            let u = Filter(union);
            let w2 = || format!("{f} ∪ {g}");
            if u.is_ultra() {
                r.check("settools.ultra.union_split", f.is_ultra() || g.is_ultra(), w2);
            }
            if f.is_ultra() {
                r.check("settools.ultra.union_absorbs", u.is_ultra(), w2);
            }
        }
    }
    for x in carrier.iter() {
        let p = point_filter(carrier, x)?;
        r.check("settools.ultra.point", p.is_ultra(), || x.to_string());
    }
    for u in &ultras {
        let k = u.kernel();
        r.check(
            "settools.ultra.principal",
            k.len() == 1 && u == &&principal(carrier, k),
            || u.to_string(),
        );
    }
    r.check("settools.ultra.count", ultras.len() == n, || {
        format!("{} ultrafilters on {n} points", ultras.len())
    });
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `f[[B]]` for a base on the domain.
    Forward,
    /// `f⁻¹[[B]]` for a base on the codomain.
    Backward,
}

pub fn filter_transport(f: &FinMap, base: &FilterBase, dir: Direction) -> Result<FilterBase> {
    match dir {
        Direction::Forward => {
            if base.carrier() != f.dom() {
                return Err(Error::CarrierMismatch(base.carrier().to_string()));
            }
            FilterBase::new(image_family(f, base.family()))
        }
        Direction::Backward => {
            if base.carrier() != f.cod() {
                return Err(Error::CarrierMismatch(base.carrier().to_string()));
            }
            let range = f.range_mask();
            if let Some(&m) = base.family().members().iter().find(|m| !m.meets(range)) {
                return Err(Error::MeetingConditionFailed(base.family().token(m).to_string()));
            }
            FilterBase::new(preimage_family(f, base.family()))
        }
    }
}

/// Checks the transport of `base` along `f` against the definitions.
pub fn filter_transport_check(f: &FinMap, base: &FilterBase, dir: Direction) -> Result<LawReport> {
    let mut r = LawReport::new("filter-transport");
    let w = || format!("f={f} B={base}");
    match dir {
        Direction::Forward => {
            let img = image_family(f, base.family());
            r.check("settools.transport.forward_base", is_filter_base(&img), w);
            let gen_img = generated(&filter_transport(f, base, dir)?)?;
            let direct = direct_image(f, generated(base)?.family());
            r.check("settools.transport.generated_is_direct", gen_img.family() == &direct, w);
        }
        Direction::Backward => {
            if base.carrier() != f.cod() {
                return Err(Error::CarrierMismatch(base.carrier().to_string()));
            }
            let range = f.range_mask();
            let meets = base.family().members().iter().all(|m| m.meets(range));
            let pre = preimage_family(f, base.family());
            r.check("settools.transport.backward_iff_meeting", is_filter_base(&pre) == meets, w);
        }
    }
    Ok(r)
}

/// Cofinite sets of a finite carrier include `∅`, so no cofinite filter exists.
pub fn cofinite_filter(carrier: &FinSet) -> Result<Filter> {
    Err(Error::Degenerate(format!(
        "every subset of {carrier} is finite, so the empty set is cofinite"
    )))
}

/// `{𝐢ᶜ}` where `𝐢` is the down set of `i` in a directed index set.
pub fn frechet_base(index: &Poset) -> Result<FilterBase> {
    if index.is_empty() || !is_directed(index, index.carrier())? {
        return Err(Error::Invalid("index set is not directed".into()));
    }
    let full = index.full();
    let members: Vec<Mask> = (0..index.len())
        .map(|i| full.difference(index.lower_bounds(Mask::singleton(i))))
        .collect();
    if let Some(i) = members.iter().position(|m| m.is_empty()) {
        return Err(Error::Degenerate(format!(
            "the complement of the down set of {} is empty",
            index.carrier().get(i)
        )));
    }
    FilterBase::new(Family::from_masks(index.carrier().clone(), members))
}

/// `η[⟨{𝐢ᶜ}⟩]` for a net `η: I → X`.
pub fn elementary_filter(net: &FinMap, index: &Poset) -> Result<Filter> {
    if net.dom() != index.carrier() {
        return Err(Error::CarrierMismatch(net.dom().to_string()));
    }
    let base = frechet_base(index)?;
    Filter::new(direct_image(net, generated(&base)?.family()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> FinSet {
        FinSet::of(&["a", "b", "c"])
    }

    #[test]
    fn dedekind_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| upsets(&FinSet::numbered("x", n)).unwrap().len())
            .collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168, 7581]);
    }

    #[test]
    fn two_points_have_three_filters() {
        let s = FinSet::of(&["a", "b"]);
        let fs = all_filters(&s).unwrap();
        assert_eq!(fs.len(), 3);
        let whole = fs.iter().find(|f| f.family().len() == 1).unwrap();
        assert!(!whole.is_ultra());
        let w = whole.ultra_witness().unwrap();
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn trivial_filter_of_carrier() {
        let s = abc();
        let ops = filter_ops(&Family::of(&s, &[&["a", "b", "c"]])).unwrap();
        assert!(ops.is_filter);
        assert_eq!(ops.generated.unwrap().family().len(), 1);
        ops.report.assert_passed();
    }

    #[test]
    fn base_generates_point_filter() {
        let s = abc();
        let ops = filter_ops(&Family::of(&s, &[&["a"], &["a", "b"]])).unwrap();
        assert!(ops.is_base && !ops.is_filter);
        let expected = Family::of(&s, &[&["a"], &["a", "b"], &["a", "c"], &["a", "b", "c"]]);
        assert_eq!(ops.generated.unwrap().family(), &expected);
        assert_eq!(point_filter(&s, &Symbol::new("a").unwrap()).unwrap().family(), &expected);
        ops.report.assert_passed();
    }

    #[test]
    fn empty_member_rejected() {
        let s = abc();
        let fam = Family::from_masks(s, [Mask::EMPTY]);
        assert_eq!(filter_ops(&fam).unwrap_err(), Error::EmptyMemberInBase);
        assert_eq!(FilterBase::new(fam).unwrap_err(), Error::EmptyMemberInBase);
    }

    #[test]
    fn refinement_examples() {
        let s = abc();
        let ab = Family::of(&s, &[&["a", "b"]]);
        let a = Family::of(&s, &[&["a"]]);
        assert!(refinement(&ab, &a).unwrap());
        assert!(!refinement(&a, &ab).unwrap());
        let b1 = Family::of(&s, &[&["a"]]);
        let b2 = Family::of(&s, &[&["a"], &["a", "b"]]);
        assert!(refinement(&b1, &b2).unwrap() && refinement(&b2, &b1).unwrap());
        refinement_laws(&s).unwrap().assert_passed();
    }

    #[test]
    fn ultrafilters_on_three_points() {
        let s = abc();
        let ultras: Vec<Filter> = all_filters(&s).unwrap().into_iter().filter(Filter::is_ultra).collect();
        assert_eq!(ultras.len(), 3);
        let kernels: Vec<Mask> = ultras.iter().map(Filter::kernel).collect();
        assert!(kernels.iter().all(|k| k.len() == 1));
        assert_eq!(kernels.iter().fold(Mask::EMPTY, |a, &k| a.union(k)), s.full_mask());
        ultrafilter_suite(&s).unwrap().assert_passed();
    }

    #[test]
    fn single_point_single_filter() {
        let s = FinSet::of(&["a"]);
        let fs = all_filters(&s).unwrap();
        assert_eq!(fs.len(), 1);
        assert!(fs[0].is_ultra());
    }

    #[test]
    fn collapse_transports_point_filter() {
        let s = abc();
        let t = FinSet::of(&["y", "z"]);
        let f = FinMap::of(&s, &t, &[("a", "z"), ("b", "z"), ("c", "y")]).unwrap();
        let pa = point_filter(&s, &Symbol::new("a").unwrap()).unwrap();
        let img = filter_transport(&f, &pa.as_base(), Direction::Forward).unwrap();
        let pz = point_filter(&t, &Symbol::new("z").unwrap()).unwrap();
        assert_eq!(generated(&img).unwrap(), pz);
        filter_transport_check(&f, &pa.as_base(), Direction::Forward)
            .unwrap()
            .assert_passed();
    }

    #[test]
    fn backward_transport_needs_meeting() {
        let s = FinSet::of(&["a"]);
        let t = FinSet::of(&["y", "z"]);
        let f = FinMap::of(&s, &t, &[("a", "z")]).unwrap();
        let base = FilterBase::new(Family::of(&t, &[&["y"]])).unwrap();
        assert!(matches!(
            filter_transport(&f, &base, Direction::Backward),
            Err(Error::MeetingConditionFailed(_))
        ));
        filter_transport_check(&f, &base, Direction::Backward)
            .unwrap()
            .assert_passed();
    }

    #[test]
    fn identity_transport() {
        let s = abc();
        let base = FilterBase::new(Family::of(&s, &[&["a", "b"], &["b"]])).unwrap();
        let id = FinMap::identity(&s);
        for dir in [Direction::Forward, Direction::Backward] {
            assert_eq!(filter_transport(&id, &base, dir).unwrap(), base);
        }
    }

    #[test]
    fn finite_carriers_are_degenerate() {
        assert!(matches!(cofinite_filter(&abc()), Err(Error::Degenerate(_))));
        assert!(matches!(frechet_base(&Poset::chain(3)), Err(Error::Degenerate(_))));
        let net = FinMap::identity(Poset::chain(2).carrier());
        assert!(matches!(elementary_filter(&net, &Poset::chain(2)), Err(Error::Degenerate(_))));
    }
}

use std::collections::BTreeSet;

use super::base::FinGroup;
use super::hom::{hom_check, GroupHom};
use super::sub::{all_subgroups, coset, is_normal, subgroup_criteria, Side, Subgroup};
use crate::error::{Error, Result};
use crate::report::LawReport;
use crate::sets::{FinMap, FinSet, Mask, Symbol};

/// A group acting on a finite set: `act[g]` is the bijection `x ↦ g∗̄x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group: FinGroup,
    carrier: FinSet,
    act: Vec<FinMap>,
}

impl GroupAction {
    /// Accepts one bijection of `carrier` per group element, in carrier
    /// order. The homomorphism law is checked by [`action_check`].
    pub fn new(group: FinGroup, carrier: FinSet, act: Vec<FinMap>) -> Result<Self> {
        if act.len() != group.len() {
            return Err(Error::NotAction(format!(
                "{} maps for a group of order {}",
                act.len(),
                group.len()
            )));
        }
        for (g, m) in act.iter().enumerate() {
            if m.dom() != &carrier || m.cod() != &carrier {
                return Err(Error::NotAction(format!("{} acts off the carrier", group.name(g))));
            }
            if !m.classify().bijective {
                return Err(Error::NotAction(format!("{} acts by {m}", group.name(g))));
            }
        }
        Ok(GroupAction { group, carrier, act })
    }

    pub fn from_fn(group: FinGroup, carrier: FinSet, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let act = (0..group.len())
            .map(|g| FinMap::from_fn(carrier.clone(), carrier.clone(), |x| f(g, x)))
            .collect();
        GroupAction::new(group, carrier, act)
    }

    /// Every element acts as the identity.
    pub fn trivial(group: FinGroup, carrier: FinSet) -> Self {
        GroupAction::from_fn(group, carrier, |_, x| x).expect("identity maps")
    }

    /// Left multiplication on the group itself.
    pub fn regular(group: FinGroup) -> Self {
        let carrier = group.carrier().clone();
        let g2 = group.clone();
        GroupAction::from_fn(group, carrier, move |g, x| g2.op(g, x)).expect("translations")
    }

    /// `symmetric(n)` on the points `1 … n`.
    pub fn natural(sn: FinGroup) -> Result<Self> {
        let n = sn.name(0).as_str().len();
        let points = FinSet::collect((1..=n).map(|i| Symbol(i.to_string())));
        let perms: Vec<Vec<usize>> = (0..sn.len())
            .map(|g| {
                sn.name(g)
                    .as_str()
                    .chars()
                    .map(|c| c.to_digit(10).and_then(|d| (d as usize).checked_sub(1)))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::Invalid(format!("{} is not a one-line permutation", sn.name(g))))
            })
            .collect::<Result<_>>()?;
        GroupAction::from_fn(sn, points, |g, x| perms[g][x])
    }

    pub fn group(&self) -> &FinGroup {
        &self.group
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn maps(&self) -> &[FinMap] {
        &self.act
    }

    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.act[g].at(x)
    }

    pub fn orbit(&self, x: usize) -> Mask {
        (0..self.group.len()).fold(Mask::EMPTY, |m, g| m.insert(self.apply(g, x)))
    }

    pub fn is_transitive(&self) -> bool {
        self.carrier.is_empty() || self.orbit(0) == Mask::full(self.carrier.len())
    }

    /// `G_{a↦b} = {x : x∗̄a = b}`.
    pub fn transporter(&self, a: usize, b: usize) -> Mask {
        (0..self.group.len())
            .filter(|&g| self.apply(g, a) == b)
            .fold(Mask::EMPTY, Mask::insert)
    }

    /// `Inv(a) = G_{a↦a}`.
    pub fn stabilizer(&self, a: usize) -> Mask {
        self.transporter(a, a)
    }

    /// The elements acting as the identity.
    pub fn nucleus(&self) -> Mask {
        (0..self.group.len())
            .filter(|&g| (0..self.carrier.len()).all(|x| self.apply(g, x) == x))
            .fold(Mask::EMPTY, Mask::insert)
    }
}

/// The homomorphism law `(a·b)∗̄ = a∗̄ ∘ b∗̄` and the nucleus facts.
pub fn action_check(a: &GroupAction) -> LawReport {
    let g = &a.group;
    let n = a.carrier.len();
    let mut r = LawReport::new("action");
    for x in 0..g.len() {
        for y in 0..g.len() {
            let ok = (0..n).all(|p| a.apply(g.op(x, y), p) == a.apply(x, a.apply(y, p)));
            r.check("group.action.hom", ok, || format!("({},{})", g.name(x), g.name(y)));
        }
    }
    r.check(
        "group.action.unit",
        (0..n).all(|p| a.apply(g.unit(), p) == p),
        String::new,
    );
    let nul = a.nucleus();
    let stabs = (0..n).fold(g.full(), |m, p| m.intersection(a.stabilizer(p)));
    r.check("group.action.nucleus_stabilizers", nul == stabs, || {
        g.carrier().subset_token(nul).to_string()
    });
    if r.get("group.action.hom").is_some_and(|c| c.passed()) {
        let s = Subgroup::trusted(g, nul);
        r.check(
            "group.action.nucleus_normal",
            subgroup_criteria(g, nul)[1] && is_normal(&s),
            || s.token().to_string(),
        );
    }
    r.note(format!("nucleus {}", g.carrier().subset_token(nul)));
    r.note(if a.is_transitive() { "transitive" } else { "not transitive" });
    r
}

/// `a∗̄(xH) = (a·x)H` on the left cosets of `h`, named by their tokens.
pub fn coset_action(h: &Subgroup<'_>) -> Result<GroupAction> {
    let g = h.parent();
    let blocks: Vec<Mask> = (0..g.len())
        .map(|x| coset(h, x, Side::Left))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let carrier = FinSet::new(blocks.iter().map(|&m| g.carrier().subset_token(m)))?;
    let index_of = |m: Mask| {
        carrier
            .index_of(&g.carrier().subset_token(m))
            .expect("coset token")
    };
    let rep: Vec<usize> = (0..carrier.len())
        .map(|i| {
            let m = blocks
                .iter()
                .copied()
                .find(|&m| index_of(m) == i)
                .expect("block");
            m.iter().next().expect("nonempty")
        })
        .collect();
    let table: Vec<Vec<usize>> = (0..g.len())
        .map(|a| {
            rep.iter()
                .map(|&x| index_of(coset(h, g.op(a, x), Side::Left)))
                .collect()
        })
        .collect();
    GroupAction::from_fn(g.clone(), carrier, |a, i| table[a][i])
}

/// Transitivity, the fixed coset, and `N ⊆ Nul = ⋂ xHx⁻¹ ⊆ H` for normal
/// `N ⊆ H`.
pub fn coset_action_laws(h: &Subgroup<'_>) -> Result<LawReport> {
    let g = h.parent();
    let a = coset_action(h)?;
    let mut r = action_check(&a);
    let w = || h.token().to_string();
    r.check("group.coset_action.transitive", a.is_transitive(), w);
    let home = a.carrier.require(&h.token())?;
    for x in 0..g.len() {
        r.check(
            "group.coset_action.fixes_iff_member",
            (a.apply(x, home) == home) == h.contains(x),
            || g.name(x).to_string(),
        );
    }
    let nul = a.nucleus();
    let conj = (0..g.len()).fold(g.full(), |m, x| m.intersection(g.translate(x, h.mask(), g.inv(x))));
    r.check("group.coset_action.nucleus_conjugates", nul == conj, w);
    r.check("group.coset_action.nucleus_inside", nul.is_subset(h.mask()), w);
    for n in all_subgroups(g) {
        if is_normal(&n) && n.mask().is_subset(h.mask()) {
            r.check("group.coset_action.normal_in_nucleus", n.mask().is_subset(nul), || {
                n.token().to_string()
            });
        }
    }
    Ok(r)
}

/// `f` bijective, `iso` an isomorphism, and `f(a∗̄₁x) = (iso a)∗̄₂(f x)`.
pub fn similar_pair(a1: &GroupAction, a2: &GroupAction, f: &FinMap, iso: &GroupHom) -> bool {
    f.dom() == a1.carrier()
        && f.cod() == a2.carrier()
        && f.classify().bijective
        && iso.src() == a1.group()
        && iso.tgt() == a2.group()
        && iso.is_iso()
        && (0..a1.group.len()).all(|g| {
            (0..a1.carrier.len()).all(|x| f.at(a1.apply(g, x)) == a2.apply(iso.at(g), f.at(x)))
        })
}

/// Stabilizer facts at `a`. With `similarity`, the action must be transitive
/// and the comparison with the coset action on `G/x Inv(a)` is added.
pub fn stabilizer_suite(act: &GroupAction, a: &Symbol, similarity: bool) -> Result<LawReport> {
    let g = &act.group;
    let n = act.carrier.len();
    let ai = act.carrier.require(a)?;
    let mut r = LawReport::new("stabilizer");
    let inv_a = act.stabilizer(ai);
    r.check("group.stabilizer.subgroup", subgroup_criteria(g, inv_a)[1], || a.to_string());
    let stabs = (0..n).fold(g.full(), |m, p| m.intersection(act.stabilizer(p)));
    r.check("group.stabilizer.nucleus", act.nucleus() == stabs, || a.to_string());
    if !similarity {
        return Ok(r);
    }
    if !act.is_transitive() {
        let missing = (0..n)
            .find(|&b| !act.orbit(ai).contains(b))
            .expect("some point outside the orbit");
        return Err(Error::NotTransitive(format!(
            "{} is not reachable from {a}",
            act.carrier.get(missing)
        )));
    }
    let inv_sub = Subgroup::trusted(g, inv_a);
    for b in 0..n {
        let t = act.transporter(ai, b);
        let wb = || act.carrier.get(b).to_string();
        r.check(
            "group.stabilizer.transporter_coset",
            t.iter().all(|x| coset(&inv_sub, x, Side::Left) == t),
            wb,
        );
        let inv_b = act.stabilizer(b);
        r.check(
            "group.stabilizer.conjugate",
            t.iter().all(|x| g.translate(x, inv_a, g.inv(x)) == inv_b),
            wb,
        );
    }
    let cosets = coset_action(&inv_sub)?;
    let table = (0..n)
        .map(|b| {
            cosets
                .carrier
                .require(&g.carrier().subset_token(act.transporter(ai, b)))
        })
        .collect::<Result<Vec<_>>>()?;
    let f = FinMap::from_table(act.carrier.clone(), cosets.carrier.clone(), table)?;
    r.check("group.stabilizer.coset_bijection", f.classify().bijective, || f.to_string());
    let id = hom_check(g, g, &FinMap::identity(g.carrier()))?;
    r.check("group.stabilizer.similar", similar_pair(act, &cosets, &f, &id), || {
        f.to_string()
    });
    Ok(r)
}

/// A finite field given by addition and multiplication tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    add: FinGroup,
    mul: Vec<usize>,
    zero: usize,
    one: usize,
}

impl Field {
    /// Checks the field axioms: abelian addition, an abelian multiplicative
    /// group on the nonzero part, and distributivity.
    pub fn new(add: FinGroup, mul: Vec<usize>) -> Result<Self> {
        let n = add.len();
        if mul.len() != n * n {
            return Err(Error::Mismatch(format!("{} product cells for {n} scalars", mul.len())));
        }
        if n < 2 {
            return Err(Error::Invalid("a field has at least two elements".into()));
        }
        if !add.is_abelian() {
            return Err(Error::Invalid("addition is not commutative".into()));
        }
        let zero = add.unit();
        let m = |a: usize, b: usize| mul[a * n + b];
        let nonzero: Vec<usize> = (0..n).filter(|&a| a != zero).collect();
        let one = nonzero
            .iter()
            .copied()
            .find(|&e| nonzero.iter().all(|&a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::Invalid("no multiplicative unit".into()))?;
        for &a in &nonzero {
            if !nonzero.iter().any(|&b| m(a, b) == one) {
                return Err(Error::Invalid(format!("{} has no reciprocal", add.name(a))));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if m(a, b) != m(b, a) {
                    return Err(Error::Invalid("multiplication is not commutative".into()));
                }
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::Invalid("multiplication is not associative".into()));
                    }
                    if m(a, add.op(b, c)) != add.op(m(a, b), m(a, c)) {
                        return Err(Error::Invalid(format!(
                            "distributivity fails at ({},{},{})",
                            add.name(a),
                            add.name(b),
                            add.name(c)
                        )));
                    }
                }
            }
        }
        Ok(Field { add, mul, zero, one })
    }

    /// `Z_p` for a prime `p`.
    pub fn prime(p: usize) -> Result<Self> {
        if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        let add = super::base::cyclic(p)?;
        let val: Vec<usize> = (0..p)
            .map(|i| add.name(i).as_str().parse().expect("numeral"))
            .collect();
        let idx = |v: usize| val.iter().position(|&x| x == v).expect("residue");
        let mul = (0..p * p).map(|c| idx(val[c / p] * val[c % p] % p)).collect();
        Field::new(add, mul)
    }

    pub fn carrier(&self) -> &FinSet {
        self.add.carrier()
    }

    pub fn len(&self) -> usize {
        self.add.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn name(&self, a: usize) -> &Symbol {
        self.add.name(a)
    }
}

/// `K^dim` over a prime field with componentwise scalar multiplication.
/// Returns the field, the vector group and the table `act[a][u]`.
pub fn coordinate_space(p: usize, dim: usize) -> Result<(Field, FinGroup, Vec<Vec<usize>>)> {
    let k = Field::prime(p)?;
    if dim == 0 || p.pow(dim as u32) > 64 {
        return Err(Error::TooLarge {
            what: "coordinate space size",
            size: p.saturating_pow(dim as u32),
            bound: 64,
        });
    }
    let mut vectors: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..dim {
        vectors = vectors
            .into_iter()
            .flat_map(|v| {
                (0..p).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    let name = |v: &Vec<usize>| {
        let parts: Vec<String> = v.iter().map(|c| k.name(*c).to_string()).collect();
        if dim == 1 {
            Symbol(parts[0].clone())
        } else {
            Symbol(format!("({})", parts.join(",")))
        }
    };
    let elems = vectors.iter().map(|v| (name(v), v.clone())).collect();
    let kk = k.clone();
    let v = FinGroup::from_elements(elems, move |a: &Vec<usize>, b: &Vec<usize>| {
        a.iter().zip(b).map(|(&x, &y)| kk.add(x, y)).collect()
    })?;
    let coords: Vec<Vec<usize>> = (0..v.len())
        .map(|i| {
            vectors
                .iter()
                .find(|w| name(w) == *v.name(i))
                .expect("named vector")
                .clone()
        })
        .collect();
    let act = (0..k.len())
        .map(|a| {
            (0..v.len())
                .map(|u| {
                    let w: Vec<usize> = coords[u].iter().map(|&c| k.mul(a, c)).collect();
                    v.index(&name(&w)).expect("vector")
                })
                .collect()
        })
        .collect();
    Ok((k, v, act))
}

/// Scalar action `act[a][u] = a∗̄u` of a field on an abelian group, checked
/// in two forms. The homomorphism form: `(a+b)∗̄u = (a∗̄u)·(b∗̄u)`, every
/// nonzero `a∗̄` an automorphism, and `(a·b)∗̄ = a∗̄ ∘ b∗̄` on nonzero
/// scalars. The axiom form: the same scalar sum law, `a∗̄(u·v) =
/// (a∗̄u)·(a∗̄v)`, `1∗̄u = u` and `(a·b)∗̄u = a∗̄(b∗̄u)` for all scalars.
#[allow(clippy::needless_range_loop)]
pub fn linear_space_check(k: &Field, v: &FinGroup, act: &[Vec<usize>]) -> Result<LawReport> {
    if !v.is_abelian() {
        return Err(Error::Invalid("vector group is not abelian".into()));
    }
    if act.len() != k.len() || act.iter().any(|row| row.len() != v.len()) {
        return Err(Error::Mismatch(format!(
            "action table must be {}×{}",
            k.len(),
            v.len()
        )));
    }
    if act.iter().flatten().any(|&w| w >= v.len()) {
        return Err(Error::CarrierMismatch("action value".into()));
    }
    let (nk, nv) = (k.len(), v.len());
    let mut r = LawReport::new("linear-space");
    let ws = |a: usize, u: usize| format!("({},{})", k.name(a), v.name(u));
    let mut scalar_sum = true;
    for a in 0..nk {
        for b in 0..nk {
            for u in 0..nv {
                let ok = act[k.add(a, b)][u] == v.op(act[a][u], act[b][u]);
                scalar_sum &= ok;
                r.check("group.linear.scalar_sum", ok, || {
                    format!("({},{},{})", k.name(a), k.name(b), v.name(u))
                });
            }
        }
    }
    let nonzero: Vec<usize> = (0..nk).filter(|&a| a != k.zero()).collect();
    let mut automorphism = true;
    for &a in &nonzero {
        let m = FinMap::from_fn(v.carrier().clone(), v.carrier().clone(), |u| act[a][u]);
        let ok = m.classify().bijective && hom_check(v, v, &m).is_ok();
        automorphism &= ok;
        r.check("group.linear.automorphism", ok, || k.name(a).to_string());
    }
    let mut mul_hom = true;
    for &a in &nonzero {
        for &b in &nonzero {
            let ok = (0..nv).all(|u| act[k.mul(a, b)][u] == act[a][act[b][u]]);
            mul_hom &= ok;
            r.check("group.linear.mul_hom", ok, || format!("({},{})", k.name(a), k.name(b)));
        }
    }
    let mut vector_sum = true;
    let mut scalar_assoc = true;
    for a in 0..nk {
        for u in 0..nv {
            for w in 0..nv {
                let ok = act[a][v.op(u, w)] == v.op(act[a][u], act[a][w]);
                vector_sum &= ok;
                r.check("group.linear.vector_sum", ok, || {
                    format!("({},{},{})", k.name(a), v.name(u), v.name(w))
                });
            }
        }
        for b in 0..nk {
            let ok = (0..nv).all(|u| act[k.mul(a, b)][u] == act[a][act[b][u]]);
            scalar_assoc &= ok;
            r.check("group.linear.scalar_assoc", ok, || {
                format!("({},{})", k.name(a), k.name(b))
            });
        }
    }
    let mut unit = true;
    for u in 0..nv {
        let ok = act[k.one()][u] == u;
        unit &= ok;
        r.check("group.linear.unit_scalar", ok, || ws(k.one(), u));
    }
    let hom_form = scalar_sum && automorphism && mul_hom;
    let axiom_form = scalar_sum && vector_sum && unit && scalar_assoc;
    r.check("group.linear.forms_agree", hom_form == axiom_form, || {
        format!("hom form {hom_form}, axiom form {axiom_form}")
    });
    r.note(format!("hom form {}", if hom_form { "holds" } else { "fails" }));
    r.note(format!("axiom form {}", if axiom_form { "holds" } else { "fails" }));
    Ok(r)
}

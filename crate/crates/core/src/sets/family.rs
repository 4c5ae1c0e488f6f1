use std::fmt;

use super::{FinMap, FinSet, Mask};
use crate::error::{Error, Result};

/// A family of subsets of a carrier, stored as canonical sorted masks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family {
    carrier: FinSet,
    members: Vec<Mask>,
}

impl Family {
    pub fn new(carrier: FinSet, members: impl IntoIterator<Item = FinSet>) -> Result<Self> {
        carrier.check_maskable()?;
        let masks = members
            .into_iter()
            .map(|m| carrier.mask_of(&m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Family::from_masks(carrier, masks))
    }

    pub fn from_masks(carrier: FinSet, members: impl IntoIterator<Item = Mask>) -> Self {
        let full = carrier.full_mask();
        let mut members: Vec<Mask> = members.into_iter().collect();
        debug_assert!(members.iter().all(|m| m.is_subset(full)));
        members.sort();
        members.dedup();
        Family { carrier, members }
    }

    /// Test helper: panics on bad input.
    pub fn of(carrier: &FinSet, members: &[&[&str]]) -> Self {
        Family::new(carrier.clone(), members.iter().map(|m| FinSet::of(m)))
            .expect("valid family")
    }

    pub fn empty(carrier: FinSet) -> Self {
        Family {
            carrier,
            members: Vec::new(),
        }
    }

    /// Every subset of the carrier.
    pub fn power(carrier: FinSet) -> Self {
        let n = carrier.len();
        Family::from_masks(carrier, Mask::all(n))
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn members(&self) -> &[Mask] {
        &self.members
    }

    pub fn member_sets(&self) -> impl Iterator<Item = FinSet> + '_ {
        self.members.iter().map(|&m| self.carrier.subset(m))
    }

    pub fn contains(&self, m: Mask) -> bool {
        self.members.binary_search(&m).is_ok()
    }

    pub fn contains_set(&self, s: &FinSet) -> bool {
        self.carrier
            .mask_of(s)
            .map(|m| self.contains(m))
            .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subfamily(&self, other: &Family) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn union_all(&self) -> Mask {
        self.members.iter().fold(Mask::EMPTY, |a, &m| a.union(m))
    }

    /// Intersection of all members; the carrier for the empty family.
    pub fn intersection_all(&self) -> Mask {
        self.members
            .iter()
            .fold(self.carrier.full_mask(), |a, &m| a.intersection(m))
    }

    pub fn with_members(&self, members: impl IntoIterator<Item = Mask>) -> Family {
        Family::from_masks(self.carrier.clone(), members)
    }

    pub fn token(&self, m: Mask) -> super::Symbol {
        self.carrier.subset_token(m)
    }

    /// The set of member tokens, usable as the domain of a [`FinMap`].
    pub fn as_token_set(&self) -> FinSet {
        FinSet::collect(self.members.iter().map(|&m| self.token(m)))
    }

    /// All families on an `n`-element carrier, where `n ≤ 4`.
    pub fn all(carrier: &FinSet) -> Result<impl Iterator<Item = Family> + '_> {
        let n = carrier.len();
        if n > 4 {
            return Err(Error::TooLarge {
                what: "carrier for family enumeration",
                size: n,
                bound: 4,
            });
        }
        let subsets = 1usize << n;
        Ok((0..1u64 << subsets).map(move |code| {
            Family::from_masks(
                carrier.clone(),
                (0..subsets as u64)
                    .filter(|i| code >> i & 1 == 1)
                    .map(Mask),
            )
        }))
    }
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.member_sets().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Deterministic stand-in for a choice function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SelectionRule {
    #[default]
    LexLeast,
    LexGreatest,
}

impl SelectionRule {
    pub fn pick(self, m: Mask) -> Option<usize> {
        match self {
            SelectionRule::LexLeast => m.iter().next(),
            SelectionRule::LexGreatest => m.iter().last(),
        }
    }
}

/// A selection function on the members of `family`: each member token maps
/// to an element of that member.
pub fn select(family: &Family, rule: SelectionRule) -> Result<FinMap> {
    let dom = family.as_token_set();
    let carrier = family.carrier().clone();
    let mut table = vec![0; dom.len()];
    for &m in family.members() {
        let i = dom.index_of(&family.token(m)).expect("token present");
        table[i] = rule
            .pick(m)
            .ok_or_else(|| Error::EmptyMember(family.token(m).to_string()))?;
    }
    FinMap::from_table(dom, carrier, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::Symbol;

    #[test]
    fn singleton_family_forces_selection() {
        let c = FinSet::of(&["a", "b"]);
        let fam = Family::of(&c, &[&["a"], &["b"]]);
        let sel = select(&fam, SelectionRule::LexLeast).unwrap();
        for (tok, val) in sel.pairs() {
            assert_eq!(tok.as_str(), format!("{{{val}}}"));
        }
    }

    #[test]
    fn lexicographic_selection() {
        let c = FinSet::of(&["a", "b", "c"]);
        let fam = Family::of(&c, &[&["a", "b"], &["b", "c"]]);
        let sel = select(&fam, SelectionRule::LexLeast).unwrap();
        let at = |t: &str| sel.apply(&Symbol::new(t).unwrap()).unwrap().to_string();
        assert_eq!(at("{a,b}"), "a");
        assert_eq!(at("{b,c}"), "b");
    }

    #[test]
    fn empty_member_rejected() {
        let c = FinSet::of(&["a"]);
        let fam = Family::of(&c, &[&[], &["a"]]);
        assert!(matches!(
            select(&fam, SelectionRule::LexLeast),
            Err(Error::EmptyMember(_))
        ));
    }

    #[test]
    fn selection_feeds_right_inverse() {
        let dom = FinSet::of(&["a", "b", "c"]);
        let cod = FinSet::of(&["x", "y"]);
        let f = FinMap::of(&dom, &cod, &[("a", "y"), ("b", "x"), ("c", "y")]).unwrap();
        let fibers = Family::from_masks(dom.clone(), (0..2).map(|j| f.fiber_mask(j)));
        let sel = select(&fibers, SelectionRule::LexLeast).unwrap();
        let r = f.right_inverse().unwrap();
        for j in 0..cod.len() {
            let tok = dom.subset_token(f.fiber_mask(j));
            assert_eq!(sel.apply(&tok).unwrap(), r.apply(cod.get(j)).unwrap());
        }
        assert_eq!(FinMap::compose(&f, &r).unwrap(), FinMap::identity(&cod));
    }

    #[test]
    fn family_enumeration_counts() {
        let c = FinSet::of(&["a", "b"]);
        assert_eq!(Family::all(&c).unwrap().count(), 16);
        assert!(Family::all(&FinSet::numbered("p", 5)).is_err());
    }
}

use super::Poset;
use crate::error::{Error, Result};
use crate::sets::{FinSet, Mask, Symbol};

/// Bounds of a subset. `sup`/`inf` of the empty set are the minimum and
/// maximum of the poset when those exist, and absent otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub upper: FinSet,
    pub lower: FinSet,
    pub sup: Option<Symbol>,
    pub inf: Option<Symbol>,
    pub max: Option<Symbol>,
    pub min: Option<Symbol>,
}

pub fn bounds(p: &Poset, a: &FinSet) -> Result<Bounds> {
    let m = p.carrier().mask_of(a)?;
    let name = |i: Option<usize>| i.map(|i| p.carrier().get(i).clone());
    Ok(Bounds {
        upper: p.carrier().subset(p.upper_bounds(m)),
        lower: p.carrier().subset(p.lower_bounds(m)),
        sup: name(p.sup(m)),
        inf: name(p.inf(m)),
        max: name(p.greatest(m)),
        min: name(p.least(m)),
    })
}

/// Every pair of `a` has an upper bound inside `a`.
pub fn is_directed(p: &Poset, a: &FinSet) -> Result<bool> {
    let m = p.carrier().mask_of(a)?;
    if m.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(directed_pairwise(p, m))
}

pub(crate) fn directed_pairwise(p: &Poset, m: Mask) -> bool {
    m.iter().all(|x| {
        m.iter()
            .all(|y| m.iter().any(|z| p.leq(x, z) && p.leq(y, z)))
    })
}

/// Every finite subset of `a` has an upper bound inside `a`.
pub fn is_directed_by_finite_subsets(p: &Poset, a: &FinSet) -> Result<bool> {
    let m = p.carrier().mask_of(a)?;
    if m.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(directed_finite(p, m))
}

pub(crate) fn directed_finite(p: &Poset, m: Mask) -> bool {
    m.subsets()
        .all(|s| p.upper_bounds(s).meets(m))
}

/// A chain listed in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalChain {
    pub elements: Vec<Symbol>,
}

impl TotalChain {
    pub fn top(&self) -> Option<&Symbol> {
        self.elements.last()
    }

    pub fn mask(&self, p: &Poset) -> Result<Mask> {
        p.carrier().mask_of(&FinSet::collect(self.elements.iter().cloned()))
    }
}

/// Extends `chain` to a maximal chain, adding comparable elements in
/// lexicographic order until none is left.
pub fn extend_chain(p: &Poset, chain: &[Symbol]) -> Result<TotalChain> {
    let mut cur = Mask::EMPTY;
    for s in chain {
        cur = cur.insert(p.carrier().require(s)?);
    }
    if !p.is_chain(cur) {
        return Err(Error::NotAChain(p.subset_string(cur)));
    }
    loop {
        let next = (0..p.len())
            .find(|&k| !cur.contains(k) && cur.iter().all(|x| p.comparable(x, k)));
        match next {
            Some(k) => cur = cur.insert(k),
            None => break,
        }
    }
    Ok(TotalChain {
        elements: p
            .sort_chain(cur)
            .into_iter()
            .map(|i| p.carrier().get(i).clone())
            .collect(),
    })
}

/// A maximal element, obtained as the top of a maximal chain. Fails when
/// some chain has no upper bound.
pub fn zorn_maximal(p: &Poset) -> Result<Symbol> {
    if let Some(c) = p
        .chains()
        .into_iter()
        .find(|&c| p.upper_bounds(c).is_empty())
    {
        return Err(Error::UnboundedChain(p.subset_string(c)));
    }
    let chain = extend_chain(p, &[])?;
    Ok(chain
        .top()
        .cloned()
        .expect("a bounded nonempty poset has a nonempty maximal chain"))
}

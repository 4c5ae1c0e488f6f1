use serde::Serialize;

use super::{FinMap, FinSet, Symbol};
use crate::error::{Error, Result};

/// Dynamics of an endofunction under iteration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EndoReport {
    /// Fixed points of the map.
    pub invariant_points: FinSet,
    /// The image consists of fixed points.
    pub is_once_effective: bool,
    /// Every trajectory reaches this fixed point.
    pub stabilizes_at: Option<Symbol>,
    /// Least `n ≥ 1` with `fⁿ` constant to a fixed point.
    pub nilpotent_at: Option<(Symbol, usize)>,
    /// `f, f², ...` up to the step bound.
    #[serde(skip)]
    pub iterates: Vec<FinMap>,
}

/// Analyzes `f: X → X`. `max_steps` bounds the iterate sequence and
/// defaults to `|X|`, which every trajectory needs at most to enter its cycle.
pub fn endo_analyze(f: &FinMap, max_steps: Option<usize>) -> Result<EndoReport> {
    if f.dom() != f.cod() {
        return Err(Error::Mismatch(format!(
            "endofunction required, got {} -> {}",
            f.dom(),
            f.cod()
        )));
    }
    let n = f.dom().len();
    let steps = max_steps.unwrap_or(n).max(1);
    let fixed: Vec<usize> = (0..n).filter(|&i| f.at(i) == i).collect();
    let invariant_points = FinSet::collect(fixed.iter().map(|&i| f.dom().get(i).clone()));
    let is_once_effective = f.table().iter().all(|&j| f.at(j) == j);

    let mut iterates = vec![f.clone()];
    while iterates.len() < steps {
        let last = iterates.last().expect("nonempty");
        iterates.push(FinMap::compose(f, last).expect("endofunction"));
    }

    let constant_fixed = |g: &FinMap| -> Option<usize> {
        let first = *g.table().first()?;
        (f.at(first) == first && g.table().iter().all(|&j| j == first)).then_some(first)
    };
    let nilpotent_at = iterates
        .iter()
        .enumerate()
        .find_map(|(k, g)| constant_fixed(g).map(|a| (f.dom().get(a).clone(), k + 1)));

    // Trajectories enter their cycle within |X| steps, so f^|X| decides it.
    let deep = if n == 0 {
        None
    } else {
        let mut g = f.clone();
        for _ in 1..n {
            g = FinMap::compose(f, &g).expect("endofunction");
        }
        constant_fixed(&g)
    };
    let stabilizes_at = deep.map(|a| f.dom().get(a).clone());

    Ok(EndoReport {
        invariant_points,
        is_once_effective,
        stabilizes_at,
        nilpotent_at,
        iterates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_once_effective() {
        let s = FinSet::of(&["a", "b", "c"]);
        let r = endo_analyze(&FinMap::identity(&s), None).unwrap();
        assert_eq!(r.invariant_points, s);
        assert!(r.is_once_effective);
        assert_eq!(r.stabilizes_at, None);
    }

    #[test]
    fn retraction_onto_b() {
        let s = FinSet::of(&["a", "b"]);
        let f = FinMap::of(&s, &s, &[("a", "b"), ("b", "b")]).unwrap();
        let r = endo_analyze(&f, None).unwrap();
        assert!(r.is_once_effective);
        assert_eq!(r.stabilizes_at.as_ref().map(Symbol::as_str), Some("b"));
        let (a, n) = r.nilpotent_at.unwrap();
        assert_eq!((a.as_str(), n), ("b", 1));
    }

    #[test]
    fn chain_needs_two_steps() {
        let s = FinSet::of(&["a", "b", "c"]);
        let f = FinMap::of(&s, &s, &[("a", "b"), ("b", "c"), ("c", "c")]).unwrap();
        let r = endo_analyze(&f, None).unwrap();
        assert!(!r.is_once_effective);
        assert_eq!(r.nilpotent_at.map(|(a, n)| (a.to_string(), n)), Some(("c".into(), 2)));
    }

    #[test]
    fn three_cycle_has_no_fixed_points() {
        let s = FinSet::of(&["a", "b", "c"]);
        let f = FinMap::of(&s, &s, &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let r = endo_analyze(&f, None).unwrap();
        assert!(r.invariant_points.is_empty());
        assert!(!r.is_once_effective);
        assert_eq!(r.stabilizes_at, None);
        assert_eq!(r.iterates.len(), 3);
    }
}

//! Finite sets of symbols, total maps between them, and the calculus of
//! images, fibers, decompositions, folds and endofunction dynamics.

mod endo;
mod family;
mod map;
mod operation;

pub use endo::{endo_analyze, EndoReport};
pub use family::{select, Family, SelectionRule};
pub use map::{
    decompose_laws, image_calculus, map_sweep, natural_pair_check, Classification, CompositionMode, Decomposition, FinMap,
    Partition,
};
pub use operation::{fold, Fold, OpTable};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// An atomic object name. Equality is token equality; order is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Symbol(pub(crate) String);

impl Symbol {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() || token.chars().any(char::is_whitespace) {
            return Err(Error::InvalidSymbol(token));
        }
        Ok(Symbol(token))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for Symbol {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// Subset of a carrier, as a bitmask over the carrier's canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mask(pub u64);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(n: usize) -> Mask {
        assert!(n <= 64, "carrier of {n} elements does not fit a mask");
        if n == 64 {
            Mask(u64::MAX)
        } else {
            Mask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Mask {
        Mask(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Mask {
        Mask(self.0 | 1u64 << i)
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn intersection(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn difference(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    pub fn complement(self, n: usize) -> Mask {
        Mask::full(n).difference(self)
    }

    pub fn is_subset(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn meets(self, other: Mask) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// All subsets of an `n`-element carrier, in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Mask> {
        assert!(n < 64, "powerset of {n} elements is not enumerable");
        (0..1u64 << n).map(Mask)
    }

    /// All subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = Mask> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Mask(cur))
        })
    }
}

/// A finite set of symbols, duplicate free and stored in canonical order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct FinSet {
    elements: Vec<Symbol>,
}

impl FinSet {
    pub fn empty() -> Self {
        FinSet::default()
    }

    /// Builds a set, rejecting duplicates.
    pub fn new(elements: impl IntoIterator<Item = Symbol>) -> Result<Self> {
        let mut elements: Vec<Symbol> = elements.into_iter().collect();
        elements.sort();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Duplicate(w[0].to_string()));
        }
        Ok(FinSet { elements })
    }

    /// Builds a set from raw tokens, validating each as a [`Symbol`].
    pub fn from_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols = names
            .into_iter()
            .map(Symbol::new)
            .collect::<Result<Vec<_>>>()?;
        FinSet::new(symbols)
    }

    /// Test and fixture helper: panics on invalid input.
    pub fn of(names: &[&str]) -> Self {
        FinSet::from_names(names.iter().copied()).expect("valid symbol list")
    }

    /// Builds a set, silently merging duplicates.
    pub fn collect(elements: impl IntoIterator<Item = Symbol>) -> Self {
        let mut elements: Vec<Symbol> = elements.into_iter().collect();
        elements.sort();
        elements.dedup();
        FinSet { elements }
    }

    /// The set `{prefix0, prefix1, ...}` with `n` elements, zero padded so
    /// lexicographic order agrees with numeric order.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        let width = n.saturating_sub(1).to_string().len();
        FinSet::collect((0..n).map(|i| Symbol(format!("{prefix}{i:0width$}"))))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Symbol> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &Symbol {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &Symbol) -> Option<usize> {
        self.elements.binary_search(s).ok()
    }

    pub fn index_of_str(&self, s: &str) -> Option<usize> {
        self.elements.binary_search_by(|e| e.as_str().cmp(s)).ok()
    }

    pub fn require(&self, s: &Symbol) -> Result<usize> {
        self.index_of(s)
            .ok_or_else(|| Error::CarrierMismatch(s.to_string()))
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.index_of_str(name)
            .map(|i| self.elements[i].clone())
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.index_of(s).is_some()
    }

    pub fn is_subset(&self, other: &FinSet) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    pub fn union(&self, other: &FinSet) -> FinSet {
        FinSet::collect(self.iter().chain(other.iter()).cloned())
    }

    pub fn intersection(&self, other: &FinSet) -> FinSet {
        FinSet {
            elements: self
                .iter()
                .filter(|e| other.contains(e))
                .cloned()
                .collect(),
        }
    }

    pub fn difference(&self, other: &FinSet) -> FinSet {
        FinSet {
            elements: self
                .iter()
                .filter(|e| !other.contains(e))
                .cloned()
                .collect(),
        }
    }

    /// The bitmask of `subset` relative to this carrier.
    pub fn mask_of(&self, subset: &FinSet) -> Result<Mask> {
        self.check_maskable()?;
        let mut m = Mask::EMPTY;
        for s in subset.iter() {
            m = m.insert(self.require(s)?);
        }
        Ok(m)
    }

    pub fn subset(&self, mask: Mask) -> FinSet {
        FinSet {
            elements: mask.iter().map(|i| self.elements[i].clone()).collect(),
        }
    }

    pub fn full_mask(&self) -> Mask {
        Mask::full(self.len())
    }

    pub fn check_maskable(&self) -> Result<()> {
        if self.len() > 64 {
            return Err(Error::TooLarge {
                what: "carrier",
                size: self.len(),
                bound: 64,
            });
        }
        Ok(())
    }

    /// Renders a subset as a single token, e.g. `{a,b}`.
    pub fn subset_token(&self, mask: Mask) -> Symbol {
        let names: Vec<&str> = mask.iter().map(|i| self.elements[i].as_str()).collect();
        Symbol(format!("{{{}}}", names.join(",")))
    }

    /// The subsets of this set as tokens, with the mask behind each token.
    pub fn powerset_tokens(&self) -> (FinSet, Vec<Mask>) {
        let mut pairs: Vec<(Symbol, Mask)> = Mask::all(self.len())
            .map(|m| (self.subset_token(m), m))
            .collect();
        pairs.sort();
        let masks = pairs.iter().map(|p| p.1).collect();
        (
            FinSet {
                elements: pairs.into_iter().map(|p| p.0).collect(),
            },
            masks,
        )
    }

    /// Cartesian product with elements named `(x,y)`.
    pub fn product(&self, other: &FinSet) -> FinSet {
        FinSet::collect(
            self.iter()
                .flat_map(|x| other.iter().map(move |y| pair_symbol(x, y))),
        )
    }
}

/// The token `(x,y)` naming an ordered pair.
pub fn pair_symbol(x: &Symbol, y: &Symbol) -> Symbol {
    Symbol(format!("({x},{y})"))
}

/// Splits a pair token `(x,y)` at its top-level comma.
pub fn split_pair(s: &Symbol) -> Option<(Symbol, Symbol)> {
    let inner = s.as_str().strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for (i, c) in inner.char_indices() {
        match c {
            '(' | '{' | '[' => depth += 1,
            ')' | '}' | ']' => depth -= 1,
            ',' if depth == 0 => {
                let (l, r) = (&inner[..i], &inner[i + 1..]);
                return Some((Symbol::new(l).ok()?, Symbol::new(r).ok()?));
            }
            _ => {}
        }
    }
    None
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.elements.iter().map(Symbol::as_str).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl<'a> IntoIterator for &'a FinSet {
    type Item = &'a Symbol;
    type IntoIter = std::slice::Iter<'a, Symbol>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbols_reject_whitespace_and_empty() {
        assert!(Symbol::new("a b").is_err());
        assert!(Symbol::new("").is_err());
        assert!(Symbol::new("x1").is_ok());
    }

    #[test]
    fn finset_is_canonical_and_duplicate_free() {
        let s = FinSet::of(&["c", "a", "b"]);
        let names: Vec<&str> = s.iter().map(Symbol::as_str).collect();
        assert_eq!(names, ["a", "b", "c"]);
        assert!(matches!(
            FinSet::from_names(["a", "a"]),
            Err(Error::Duplicate(_))
        ));
    }

    #[test]
    fn mask_subsets_enumerates_all() {
        let m = Mask(0b1011);
        let subs: Vec<u64> = m.subsets().map(|s| s.0).collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|&s| s & !0b1011 == 0));
    }

    #[test]
    fn pair_tokens_split_at_top_level() {
        let a = Symbol::new("(x,y)").unwrap();
        let b = Symbol::new("z").unwrap();
        let p = pair_symbol(&a, &b);
        assert_eq!(p.as_str(), "((x,y),z)");
        assert_eq!(split_pair(&p), Some((a, b)));
    }

    #[test]
    fn numbered_sorts_numerically() {
        let s = FinSet::numbered("p", 12);
        assert_eq!(s.get(2).as_str(), "p02");
        assert_eq!(s.get(11).as_str(), "p11");
    }
}

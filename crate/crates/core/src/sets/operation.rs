use super::{FinSet, Symbol};
use crate::error::{Error, Result};

/// A total binary operation on a finite carrier, stored as a dense table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OpTable {
    carrier: FinSet,
    table: Vec<usize>,
}

impl OpTable {
    /// Builds a table from `(x, y, x⋄y)` triples; every cell must be given
    /// exactly once.
    pub fn new(
        carrier: FinSet,
        triples: impl IntoIterator<Item = (Symbol, Symbol, Symbol)>,
    ) -> Result<Self> {
        let n = carrier.len();
        let mut table = vec![usize::MAX; n * n];
        for (x, y, z) in triples {
            let (i, j, k) = (carrier.require(&x)?, carrier.require(&y)?, carrier.require(&z)?);
            if table[i * n + j] != usize::MAX {
                return Err(Error::Duplicate(format!("cell ({x},{y})")));
            }
            table[i * n + j] = k;
        }
        if let Some(c) = table.iter().position(|&k| k == usize::MAX) {
            return Err(Error::NotTotal(format!(
                "cell ({},{})",
                carrier.get(c / n),
                carrier.get(c % n)
            )));
        }
        Ok(OpTable { carrier, table })
    }

    pub fn from_fn(carrier: FinSet, op: impl Fn(usize, usize) -> usize) -> Self {
        let n = carrier.len();
        let table = (0..n * n).map(|c| op(c / n, c % n)).collect();
        OpTable { carrier, table }
    }

    /// Test helper over string triples.
    pub fn of(carrier: &FinSet, triples: &[(&str, &str, &str)]) -> Result<Self> {
        let t = triples
            .iter()
            .map(|(x, y, z)| Ok((Symbol::new(*x)?, Symbol::new(*y)?, Symbol::new(*z)?)))
            .collect::<Result<Vec<_>>>()?;
        OpTable::new(carrier.clone(), t)
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.table[i * self.carrier.len() + j]
    }

    pub fn apply(&self, x: &Symbol, y: &Symbol) -> Result<&Symbol> {
        let (i, j) = (self.carrier.require(x)?, self.carrier.require(y)?);
        Ok(self.carrier.get(self.get(i, j)))
    }

    pub fn triples(&self) -> impl Iterator<Item = (&Symbol, &Symbol, &Symbol)> {
        let n = self.carrier.len();
        (0..n * n).map(move |c| {
            (
                self.carrier.get(c / n),
                self.carrier.get(c % n),
                self.carrier.get(self.table[c]),
            )
        })
    }

    pub fn name(&self, i: usize) -> &Symbol {
        self.carrier.get(i)
    }

    /// First `(x,y,z)` with `(x⋄y)⋄z ≠ x⋄(y⋄z)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                for z in 0..n {
                    if self.get(xy, z) != self.get(x, self.get(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.get(x, y) != self.get(y, x))
    }

    pub fn idempotence_witness(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.get(x, x) != x)
    }

    /// The two-sided unit, if one exists.
    pub fn unit(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&e| (0..n).all(|x| self.get(e, x) == x && self.get(x, e) == x))
    }

    /// The table with arguments swapped.
    pub fn transpose(&self) -> OpTable {
        OpTable::from_fn(self.carrier.clone(), |i, j| self.get(j, i))
    }
}

/// Result of folding a sequence with an operation: the final value and each
/// partial value `x1, x1⋄x2, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fold {
    pub result: Symbol,
    pub partials: Vec<Symbol>,
}

/// Left fold of `seq` under `op`.
pub fn fold(op: &OpTable, seq: &[Symbol]) -> Result<Fold> {
    let (first, rest) = seq.split_first().ok_or(Error::EmptyFold)?;
    let mut acc = op.carrier().require(first)?;
    let mut partials = vec![first.clone()];
    for x in rest {
        acc = op.get(acc, op.carrier().require(x)?);
        partials.push(op.name(acc).clone());
    }
    Ok(Fold {
        result: op.name(acc).clone(),
        partials,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn max_chain() -> OpTable {
        OpTable::from_fn(FinSet::of(&["1", "2", "3"]), |i, j| i.max(j))
    }

    fn syms(names: &[&str]) -> Vec<Symbol> {
        names.iter().map(|n| Symbol::new(*n).unwrap()).collect()
    }

    #[test]
    fn fold_single_element() {
        let op = max_chain();
        let r = fold(&op, &syms(&["2"])).unwrap();
        assert_eq!(r.result.as_str(), "2");
    }

    #[test]
    fn fold_max_partials() {
        let r = fold(&max_chain(), &syms(&["1", "3", "2"])).unwrap();
        assert_eq!(r.result.as_str(), "3");
        assert_eq!(r.partials, syms(&["1", "3", "3"]));
    }

    #[test]
    fn fold_power_matches_repeated_multiply() {
        let z4 = FinSet::of(&["0", "1", "2", "3"]);
        let add = OpTable::from_fn(z4.clone(), |i, j| (i + j) % 4);
        let a = syms(&["3"]);
        let seq: Vec<Symbol> = a.iter().cycle().take(3).cloned().collect();
        let r = fold(&add, &seq).unwrap();
        let oracle = add.get(add.get(3, 3), 3);
        assert_eq!(r.result, *z4.get(oracle));
    }

    #[test]
    fn empty_fold_errors() {
        assert_eq!(fold(&max_chain(), &[]), Err(Error::EmptyFold));
    }

    #[test]
    fn missing_cell_named() {
        let c = FinSet::of(&["a", "b"]);
        let err = OpTable::of(&c, &[("a", "a", "a"), ("a", "b", "b"), ("b", "a", "b")]);
        assert_eq!(err, Err(Error::NotTotal("cell (b,b)".into())));
    }
}

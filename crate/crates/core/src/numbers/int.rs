use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::order::{map_classify, Poset};
use crate::report::LawReport;
use crate::sets::{FinMap, FinSet, Symbol};

/// An arbitrary-precision integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactInt(BigInt);

impl ExactInt {
    pub fn zero() -> Self {
        ExactInt(BigInt::zero())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> ExactInt {
        ExactInt(self.0.abs())
    }

    pub fn to_i64(&self) -> Option<i64> {
        i64::try_from(&self.0).ok()
    }

    pub fn parse(s: &str) -> Result<Self> {
        s.parse::<BigInt>()
            .map(ExactInt)
            .map_err(|_| Error::Invalid(format!("not an integer: {s}")))
    }
}

impl From<i64> for ExactInt {
    fn from(v: i64) -> Self {
        ExactInt(BigInt::from(v))
    }
}

impl From<BigInt> for ExactInt {
    fn from(v: BigInt) -> Self {
        ExactInt(v)
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for ExactInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&ExactInt> for &ExactInt {
            type Output = ExactInt;
            fn $m(self, rhs: &ExactInt) -> ExactInt {
                ExactInt((&self.0).$m(&rhs.0))
            }
        }
        impl $tr for ExactInt {
            type Output = ExactInt;
            fn $m(self, rhs: ExactInt) -> ExactInt {
                ExactInt(self.0.$m(rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for &ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-&self.0)
    }
}

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        ExactInt(-self.0)
    }
}

/// The integers `-n..=n` as a discrete number system: the natural order and
/// the successor arrows `x → x+1`.
#[derive(Clone, Debug)]
pub struct IntWindow {
    n: i64,
    poset: Poset,
    succ: FinMap,
    /// Value of each carrier index.
    values: Vec<i64>,
    /// `shifts[b + 2n]` is `+b` on carrier indices, built by composing the
    /// successor (or its inverse) `|b|` times.
    shifts: Vec<Vec<Option<usize>>>,
}

fn window_set(lo: i64, hi: i64) -> FinSet {
    FinSet::collect((lo..=hi).map(|v| Symbol::new(v.to_string()).expect("integer token")))
}

pub fn build_discrete(n: i64) -> Result<IntWindow> {
    if n < 1 {
        return Err(Error::Invalid(format!("window radius must be at least 1, got {n}")));
    }
    let poset = Poset::int_window(n);
    let values: Vec<i64> = poset
        .carrier()
        .iter()
        .map(|s| s.as_str().parse().expect("integer token"))
        .collect();
    let lower = window_set(-n, n - 1);
    let upper = window_set(-n + 1, n);
    let succ = FinMap::from_fn(lower.clone(), upper.clone(), |i| {
        let v: i64 = lower.get(i).as_str().parse().expect("integer token");
        upper.index_of_str(&(v + 1).to_string()).expect("successor in window")
    });

    let carrier = poset.carrier().clone();
    // One step of the successor and of its inverse, on carrier indices.
    let step = |map: &FinMap| -> Vec<Option<usize>> {
        carrier
            .iter()
            .map(|s| {
                map.dom()
                    .index_of(s)
                    .map(|i| carrier.require(map.cod().get(map.at(i))).expect("window"))
            })
            .collect()
    };
    let up = step(&succ);
    let down = step(&succ.inverse().expect("successor is bijective"));
    let len = carrier.len();
    let compose = |s: &[Option<usize>], t: &[Option<usize>]| -> Vec<Option<usize>> {
        t.iter().map(|x| x.and_then(|i| s[i])).collect()
    };
    let identity: Vec<Option<usize>> = (0..len).map(Some).collect();
    let mut positive = vec![identity.clone()];
    let mut negative = vec![identity];
    for _ in 0..2 * n {
        let next = compose(&up, positive.last().expect("nonempty"));
        positive.push(next);
        let next = compose(&down, negative.last().expect("nonempty"));
        negative.push(next);
    }
    let mut shifts: Vec<Vec<Option<usize>>> = negative.into_iter().skip(1).rev().collect();
    shifts.extend(positive);
    Ok(IntWindow {
        n,
        poset,
        succ,
        values,
        shifts,
    })
}

impl IntWindow {
    pub fn radius(&self) -> i64 {
        self.n
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// The successor arrows `[-n, n-1] → [-n+1, n]`.
    pub fn succ(&self) -> &FinMap {
        &self.succ
    }

    fn index(&self, v: i64) -> Option<usize> {
        if v.abs() > self.n {
            return None;
        }
        self.poset.carrier().index_of_str(&v.to_string())
    }

    fn shift(&self, b: i64) -> Option<&[Option<usize>]> {
        if b.abs() > 2 * self.n {
            return None;
        }
        Some(&self.shifts[(b + 2 * self.n) as usize])
    }

    /// The automorphism `+b`, restricted to the part of the window it keeps
    /// inside the window.
    pub fn automorphism(&self, b: i64) -> Result<FinMap> {
        let overflow = || Error::WindowOverflow(format!("+{b}"), self.n as u64);
        let t = self.shift(b).ok_or_else(overflow)?;
        let c = self.poset.carrier();
        let dom = FinSet::collect((0..c.len()).filter(|&i| t[i].is_some()).map(|i| c.get(i).clone()));
        Ok(FinMap::from_fn(dom.clone(), c.clone(), |i| {
            t[c.require(dom.get(i)).expect("subset")].expect("in domain")
        }))
    }

    /// `a + b`, computed by applying the composed successor functor `+b` to `a`.
    pub fn add(&self, a: i64, b: i64) -> Result<i64> {
        let overflow = || Error::WindowOverflow(format!("{a}+{b}"), self.n as u64);
        let i = self.index(a).ok_or_else(overflow)?;
        let t = self.shift(b).ok_or_else(overflow)?;
        t[i].map(|j| self.values[j]).ok_or_else(overflow)
    }
}

pub fn int_add(w: &IntWindow, a: &ExactInt, b: &ExactInt) -> Result<ExactInt> {
    let overflow = || Error::WindowOverflow(format!("{a}+{b}"), w.n as u64);
    let a = a.to_i64().ok_or_else(overflow)?;
    let b = b.to_i64().ok_or_else(overflow)?;
    w.add(a, b).map(ExactInt::from)
}

/// `a · b` by the successor recursion: `a·0 = 0`, `a·(x+1) = a·x + a` for
/// `x ≥ 0` and `a·(x−1) = a·x − a` for `x ≤ 0`.
pub fn int_mul(a: &ExactInt, b: &ExactInt) -> ExactInt {
    let mut x = ExactInt::zero();
    let mut acc = ExactInt::zero();
    let one = ExactInt::from(1);
    if b.is_negative() {
        while &x != b {
            acc = &acc - a;
            x = &x - &one;
        }
    } else {
        while &x != b {
            acc = &acc + a;
            x = &x + &one;
        }
    }
    acc
}

/// Window checks of the successor structure and of addition by composed
/// successors, for sums of terms with `|x| ≤ n`.
pub fn int_group_check(n: i64) -> Result<LawReport> {
    let w = build_discrete(3 * n.max(1))?;
    let mut r = LawReport::new("integers");
    let c = w.poset.carrier();
    let lower = w.succ.dom();
    let upper = w.succ.cod();
    for s in c.iter() {
        let out = lower.contains(s) as usize;
        let inc = upper.contains(s) as usize;
        let v: i64 = s.as_str().parse().expect("integer token");
        let interior = v.abs() < w.n;
        r.check("numbers.discrete.unique_successor", !interior || (out == 1 && inc == 1), || {
            s.to_string()
        });
    }
    let lower_poset = Poset::from_fn_unchecked(lower.clone(), |i, j| {
        let (a, b): (i64, i64) = (lower.get(i).as_str().parse().unwrap(), lower.get(j).as_str().parse().unwrap());
        a <= b
    });
    let upper_poset = Poset::from_fn_unchecked(upper.clone(), |i, j| {
        let (a, b): (i64, i64) = (upper.get(i).as_str().parse().unwrap(), upper.get(j).as_str().parse().unwrap());
        a <= b
    });
    let cls = map_classify(&w.succ, &lower_poset, &upper_poset)?;
    r.check("numbers.discrete.succ_order_bijective", cls.order_bijective, || {
        "successor".to_string()
    });

    let range: Vec<i64> = (-n..=n).collect();
    let add = |a: i64, b: i64| w.add(a, b).expect("inside the enlarged window");
    for &a in &range {
        r.check("numbers.int.unit", add(a, 0) == a && add(0, a) == a, || a.to_string());
        r.check("numbers.int.inverse", add(a, -a) == 0, || a.to_string());
        for &b in &range {
            let sum = ExactInt::from(a) + ExactInt::from(b);
            r.check("numbers.int.add_oracle", ExactInt::from(add(a, b)) == sum, || {
                format!("{a}+{b}")
            });
            r.check("numbers.int.commutative", add(a, b) == add(b, a), || format!("({a},{b})"));
            if a <= b {
                // Components x+a ≤ x+b of the transformation +a → +b.
                let ok = range.iter().all(|&x| add(x, a) <= add(x, b));
                r.check("numbers.int.natural_transformation", ok, || format!("+{a} -> +{b}"));
            }
            for &z in &range {
                r.check(
                    "numbers.int.associative",
                    add(add(a, b), z) == add(a, add(b, z)),
                    || format!("({a},{b},{z})"),
                );
            }
        }
        // +a is an order embedding on its domain.
        let t = w.shift(a).expect("inside the doubled window");
        let dom: Vec<usize> = (0..c.len()).filter(|&i| t[i].is_some()).collect();
        let embeds = dom.iter().all(|&i| {
            dom.iter().all(|&j| {
                w.poset.leq(i, j) == w.poset.leq(t[i].unwrap(), t[j].unwrap())
            })
        });
        r.check("numbers.int.shift_embedding", embeds, || format!("+{a}"));
    }
    // Functors +x and +y commute.
    for &a in &range {
        for &b in &range {
            let (ta, tb) = (w.shift(a).unwrap(), w.shift(b).unwrap());
            let ab: Vec<Option<usize>> = tb.iter().map(|x| x.and_then(|i| ta[i])).collect();
            let ba: Vec<Option<usize>> = ta.iter().map(|x| x.and_then(|i| tb[i])).collect();
            let agree = (0..c.len()).all(|i| match (ab[i], ba[i]) {
                (Some(x), Some(y)) => x == y,
                _ => true,
            });
            r.check("numbers.int.functors_commute", agree, || format!("(+{a},+{b})"));
        }
    }
    Ok(r)
}

/// Ring laws of the recursive product on `samples` random triples with
/// entries in `-bound..=bound`.
pub fn int_ring_check(samples: usize, bound: i64, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut r = LawReport::new("integer-product");
    for _ in 0..samples {
        let [a, b, x] = [0; 3].map(|_| ExactInt::from(rng.gen_range(-bound..=bound)));
        let w = || format!("({a},{b},{x})");
        r.check("numbers.int.mul_oracle", int_mul(&a, &b) == &a * &b, w);
        r.check("numbers.int.mul_commutative", int_mul(&a, &b) == int_mul(&b, &a), w);
        r.check(
            "numbers.int.mul_distributive",
            int_mul(&(&a + &b), &x) == int_mul(&a, &x) + int_mul(&b, &x),
            w,
        );
        r.check(
            "numbers.int.mul_associative",
            int_mul(&int_mul(&a, &b), &x) == int_mul(&a, &int_mul(&b, &x)),
            w,
        );
    }
    r
}

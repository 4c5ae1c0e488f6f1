use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::int::{int_mul, ExactInt};
use crate::error::{Error, Result};
use crate::order::{check_order, Relation};
use crate::report::LawReport;
use crate::sets::{FinSet, Symbol};

/// A pair `a/c` with `c ≠ 0`. Distinct pairs may be equal as rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rat {
    num: ExactInt,
    den: ExactInt,
}

/// The canonical representative of a rational: positive denominator,
/// numerator and denominator coprime.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RatClass {
    num: ExactInt,
    den: ExactInt,
}

impl Rat {
    pub fn new(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat {
            num: num.into(),
            den,
        })
    }

    pub fn num(&self) -> &ExactInt {
        &self.num
    }

    pub fn den(&self) -> &ExactInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.split_once('/') {
            Some((a, c)) => Rat::new(ExactInt::parse(a)?, ExactInt::parse(c)?),
            None => Rat::new(ExactInt::parse(s)?, 1),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl RatClass {
    pub fn rat(&self) -> Rat {
        Rat {
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn num(&self) -> &ExactInt {
        &self.num
    }

    pub fn den(&self) -> &ExactInt {
        &self.den
    }
}

impl fmt::Display for RatClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == ExactInt::from(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `a/c = b/d` iff `a·d = b·c`.
pub fn rat_eq(p: &Rat, q: &Rat) -> bool {
    &p.num * &q.den == &q.num * &p.den
}

pub fn rat_canon(p: &Rat) -> RatClass {
    let g = ExactInt::from(p.num.value().gcd(p.den.value()));
    let (mut num, mut den) = (
        ExactInt::from(p.num.value() / g.value()),
        ExactInt::from(p.den.value() / g.value()),
    );
    if den.is_negative() {
        num = -num;
        den = -den;
    }
    RatClass { num, den }
}

/// `(a/c)·(b/d) = (a·b)/(c·d)`.
pub fn rat_mul(p: &Rat, q: &Rat) -> Rat {
    Rat {
        num: &p.num * &q.num,
        den: &p.den * &q.den,
    }
}

/// `a/c + b/d = (a·d + b·c)/(c·d)`.
pub fn rat_add(p: &Rat, q: &Rat) -> Rat {
    Rat {
        num: &(&p.num * &q.den) + &(&q.num * &p.den),
        den: &p.den * &q.den,
    }
}

pub fn rat_neg(p: &Rat) -> Rat {
    Rat {
        num: -&p.num,
        den: p.den.clone(),
    }
}

/// `(a/c)⁻¹ = c/a`.
pub fn rat_inv(p: &Rat) -> Result<Rat> {
    Rat::new(p.den.clone(), p.num.clone())
}

/// `a/c ≤ b/d` iff `a·d ≤ b·c` when `c·d > 0` and `b·c ≤ a·d` when `c·d < 0`.
pub fn rat_le(p: &Rat, q: &Rat) -> bool {
    let ad = &p.num * &q.den;
    let bc = &q.num * &p.den;
    if (&p.den * &q.den).is_positive() {
        ad <= bc
    } else {
        bc <= ad
    }
}

/// `ι(x) = x/1`.
pub fn embed_int(a: &ExactInt) -> Rat {
    Rat {
        num: a.clone(),
        den: ExactInt::from(1),
    }
}

/// Every `a/c` with `|a| ≤ num_bound` and `1 ≤ |c| ≤ den_bound`, negative
/// denominators included.
pub fn rat_grid(num_bound: i64, den_bound: i64) -> Vec<Rat> {
    let mut out = Vec::new();
    for a in -num_bound..=num_bound {
        for c in (-den_bound..=den_bound).filter(|&c| c != 0) {
            out.push(Rat::new(a, c).expect("nonzero denominator"));
        }
    }
    out
}

/// Order and group laws of the rationals on a grid of representatives.
pub fn rat_law_check(num_bound: i64, den_bound: i64) -> LawReport {
    let grid = rat_grid(num_bound, den_bound);
    let mut r = LawReport::new("rationals");
    let zero = Rat::new(0, 1).expect("unit");
    let one = Rat::new(1, 1).expect("unit");
    for p in &grid {
        let cp = rat_canon(p);
        r.check("numbers.rat.canon_idempotent", rat_canon(&cp.rat()) == cp, || p.to_string());
        r.check("numbers.rat.canon_equal", rat_eq(p, &cp.rat()), || p.to_string());
        r.check("numbers.rat.reflexive", rat_le(p, p), || p.to_string());
        r.check("numbers.rat.add_unit", rat_eq(&rat_add(p, &zero), p), || p.to_string());
        r.check("numbers.rat.add_inverse", rat_eq(&rat_add(p, &rat_neg(p)), &zero), || {
            p.to_string()
        });
        r.check("numbers.rat.sign_swap", rat_eq(&rat_neg(p), &Rat { num: p.num.clone(), den: -&p.den }), || {
            p.to_string()
        });
        if !p.is_zero() {
            let inv = rat_inv(p).expect("nonzero");
            r.check("numbers.rat.mul_unit", rat_eq(&rat_mul(p, &one), p), || p.to_string());
            r.check("numbers.rat.mul_inverse", rat_eq(&rat_mul(p, &inv), &one), || p.to_string());
        }
        for q in &grid {
            let (pq, qp) = (rat_le(p, q), rat_le(q, p));
            r.check("numbers.rat.total", pq || qp, || format!("({p},{q})"));
            r.check("numbers.rat.antisymmetric", !(pq && qp) || rat_eq(p, q), || {
                format!("({p},{q})")
            });
            r.check(
                "numbers.rat.eq_is_canon",
                rat_eq(p, q) == (rat_canon(p) == rat_canon(q)),
                || format!("({p},{q})"),
            );
            r.check("numbers.rat.add_commutative", rat_eq(&rat_add(p, q), &rat_add(q, p)), || {
                format!("({p},{q})")
            });
            r.check("numbers.rat.mul_commutative", rat_eq(&rat_mul(p, q), &rat_mul(q, p)), || {
                format!("({p},{q})")
            });
            for s in &grid {
                if pq && rat_le(q, s) {
                    r.check("numbers.rat.transitive", rat_le(p, s), || format!("({p},{q},{s})"));
                }
                r.check(
                    "numbers.rat.add_associative",
                    rat_eq(&rat_add(&rat_add(p, q), s), &rat_add(p, &rat_add(q, s))),
                    || format!("({p},{q},{s})"),
                );
                r.check(
                    "numbers.rat.mul_associative",
                    rat_eq(&rat_mul(&rat_mul(p, q), s), &rat_mul(p, &rat_mul(q, s))),
                    || format!("({p},{q},{s})"),
                );
                if pq && !s.is_zero() {
                    let positive = rat_le(&zero, s);
                    let (ps, qs) = (rat_mul(p, s), rat_mul(q, s));
                    let ok = if positive { rat_le(&ps, &qs) } else { rat_le(&qs, &ps) };
                    r.check("numbers.rat.scaling", ok, || format!("({p},{q},{s})"));
                }
            }
        }
        // Equal rationals give equal results: a/c · x/x and a/c + 0/x.
        for x in (1..=den_bound).chain(-den_bound..=-1) {
            let xx = Rat::new(x, x).expect("nonzero");
            let zx = Rat::new(0, x).expect("nonzero");
            r.check("numbers.rat.well_defined", rat_eq(&rat_mul(p, &xx), p) && rat_eq(&rat_add(p, &zx), p), || {
                format!("{p} with x = {x}")
            });
        }
    }
    // The grid of classes is a natural order.
    let classes: Vec<RatClass> = {
        let mut v: Vec<RatClass> = grid.iter().map(rat_canon).collect();
        v.sort();
        v.dedup();
        v
    };
    let carrier = FinSet::collect(classes.iter().map(|c| Symbol::new(c.to_string()).expect("token")));
    let at: Vec<Rat> = carrier
        .iter()
        .map(|s| Rat::parse(s.as_str()).expect("class token"))
        .collect();
    let check = check_order(&Relation::from_fn(carrier, |i, j| rat_le(&at[i], &at[j])));
    r.check("numbers.rat.grid_natural", check.natural, || {
        "classes of the grid are not totally ordered".to_string()
    });
    r
}

/// Embedding of integers, the row/column duality, and the sign maps `p`, `r`,
/// `q = p∘r` on windows of radius `n`.
pub fn dual_order_checks(n: i64) -> Result<LawReport> {
    if n < 1 {
        return Err(Error::Invalid(format!("window radius must be at least 1, got {n}")));
    }
    let mut r = LawReport::new("dual-orders");
    let ints: Vec<ExactInt> = (-n..=n).map(ExactInt::from).collect();
    for a in &ints {
        for b in &ints {
            let (ia, ib) = (embed_int(a), embed_int(b));
            r.check("numbers.embed.add", rat_eq(&rat_add(&ia, &ib), &embed_int(&(a + b))), || {
                format!("({a},{b})")
            });
            r.check(
                "numbers.embed.mul",
                rat_eq(&rat_mul(&ia, &ib), &embed_int(&int_mul(a, b))),
                || format!("({a},{b})"),
            );
            r.check("numbers.embed.order", (a <= b) == rat_le(&ia, &ib), || format!("({a},{b})"));
            r.check("numbers.embed.injective", (a == b) == rat_eq(&ia, &ib), || {
                format!("({a},{b})")
            });
        }
    }
    // Rows x/c and columns a/x, both for 0 < x ≤ n; x/c ↦ a/x is an order
    // bijectivity from the row order onto the opposite of the column order.
    let pos: Vec<i64> = (1..=n).collect();
    for &a in &pos {
        for &c in &pos {
            for &x in &pos {
                for &y in &pos {
                    let row = rat_le(&Rat::new(x, c)?, &Rat::new(y, c)?);
                    let col = rat_le(&Rat::new(a, y)?, &Rat::new(a, x)?);
                    r.check("numbers.dual.row_column", row == col, || {
                        format!("a = {a}, c = {c}, ({x},{y})")
                    });
                }
            }
        }
    }
    let den: Vec<i64> = (-n..=n).filter(|&d| d != 0).collect();
    let grid: Vec<Rat> = ints
        .iter()
        .flat_map(|a| den.iter().map(move |&d| Rat::new(a.clone(), d).expect("nonzero")))
        .collect();
    let p = |x: &Rat| Rat { num: x.num.clone(), den: -&x.den };
    let rr = |x: &Rat| Rat { num: -&x.num, den: x.den.clone() };
    let q = |x: &Rat| p(&rr(x));
    for x in &grid {
        r.check("numbers.dual.q_involution", q(&q(x)) == *x, || x.to_string());
        r.check("numbers.dual.p_is_r", rat_eq(&p(x), &rr(x)), || x.to_string());
        for y in &grid {
            let le = rat_le(x, y);
            r.check("numbers.dual.p_reverses", le == rat_le(&p(y), &p(x)), || {
                format!("({x},{y})")
            });
            r.check("numbers.dual.r_reverses", le == rat_le(&rr(y), &rr(x)), || {
                format!("({x},{y})")
            });
            r.check("numbers.dual.q_preserves", le == rat_le(&q(x), &q(y)), || {
                format!("({x},{y})")
            });
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, c: i64) -> Rat {
        Rat::new(a, c).unwrap()
    }

    #[test]
    fn equality_examples() {
        assert!(rat_eq(&q(1, 2), &q(2, 4)));
        assert!(rat_eq(&q(-1, 2), &q(1, -2)));
        assert_eq!(rat_canon(&q(1, -2)).to_string(), "-1/2");
        assert_eq!(Rat::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn arithmetic_examples() {
        assert!(rat_eq(&rat_mul(&q(1, 2), &q(2, 1)), &q(1, 1)));
        assert_eq!(rat_canon(&rat_add(&q(1, 2), &q(1, 3))).to_string(), "5/6");
        for x in 1..=9 {
            assert!(rat_eq(&rat_add(&q(3, 7), &q(0, x)), &q(3, 7)));
        }
        assert_eq!(rat_inv(&q(0, 5)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn order_examples() {
        assert!(rat_le(&q(1, 2), &q(1, 1)));
        assert!(!rat_le(&q(1, 1), &q(1, 2)));
        assert!(rat_le(&q(-1, 2), &q(1, -3)));
        assert!(rat_le(&q(1, -2), &q(1, 3)));
    }

    #[test]
    fn embedding_example() {
        let (two, three) = (ExactInt::from(2), ExactInt::from(3));
        let s = rat_add(&embed_int(&two), &embed_int(&three));
        assert!(rat_eq(&s, &embed_int(&ExactInt::from(5))));
    }

    #[test]
    fn small_grid_laws() {
        rat_law_check(2, 2).assert_passed();
        dual_order_checks(3).unwrap().assert_passed();
    }

    #[test]
    fn gcd_matches_divisor_search() {
        for a in -40i64..=40 {
            for c in (-40i64..=40).filter(|&c| c != 0) {
                let g = (1..=a.abs().max(c.abs()))
                    .filter(|d| a % d == 0 && c % d == 0)
                    .max()
                    .unwrap();
                let k = rat_canon(&q(a, c));
                let sign = if c < 0 { -1 } else { 1 };
                assert_eq!(k.num().to_i64(), Some(sign * a / g), "{a}/{c}");
                assert_eq!(k.den().to_i64(), Some(sign * c / g), "{a}/{c}");
            }
        }
    }
}

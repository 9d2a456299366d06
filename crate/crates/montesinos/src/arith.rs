//! Exact rational arithmetic over arbitrary-precision integers.
//!
//! [`Fraction`] is the universal scalar of the crate: slopes, tangle
//! fractions, twists and solver entries are all stored reduced with a
//! positive denominator. The value ∞ is represented as `1/0`; it takes part
//! in ordering and in the Farey-neighbor relation but not in field
//! arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Greatest common divisor of two non-negative integers, with `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.abs().gcd(&b.abs())
}

/// `gcd` on machine integers, used by the closed-form oracles.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least common multiple, `lcm(0, x) = 0`.
pub fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    a.abs().lcm(&b.abs())
}

/// A reduced rational number `p/q` with `q > 0`, or ∞ = `1/0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Builds `num/den` in lowest terms. A zero denominator yields ∞
    /// regardless of the numerator's sign; `0/0` is rejected.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, Error> {
        let (mut num, mut den) = (num.into(), den.into());
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::Arithmetic("0/0 is not a fraction".into()));
            }
            return Ok(Self::infinity());
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        Ok(Fraction {
            num: num / &g,
            den: den / g,
        })
    }

    /// `num/den` for arguments known to be valid; panics on `0/0`.
    pub fn from_ints(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("0/0 is not a fraction")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Fraction {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn infinity() -> Self {
        Fraction {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero() && !self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fraction {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// Largest integer not exceeding the value (finite values only).
    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&self.den)
    }

    /// The fractional part `x - floor(x)`, in `[0, 1)`.
    pub fn fract(&self) -> Fraction {
        let r = self.num.mod_floor(&self.den);
        Fraction {
            num: r,
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self, Error> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Numerator and denominator as `i64`, when both fit.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.num.to_i64()?, self.den.to_i64()?))
    }

    fn assert_finite(&self, op: &str) {
        assert!(!self.is_infinite(), "∞ does not take part in {op}");
    }
}

/// True iff `|p·s − q·r| = 1` for `a = p/q`, `b = r/s` (∞ = 1/0 included).
pub fn is_farey_neighbor(a: &Fraction, b: &Fraction) -> bool {
    let d = &a.num * &b.den - &a.den * &b.num;
    d.abs().is_one()
}

/// Canonical continued-fraction expansion `[a0; a1, …, ak]` of a finite
/// fraction, with the last term greater than 1 whenever `k > 0`. Zero maps
/// to the empty expansion.
pub fn continued_fraction(a: &Fraction) -> Vec<BigInt> {
    a.assert_finite("continued fractions");
    let mut out = Vec::new();
    if a.is_zero() {
        return out;
    }
    let (mut p, mut q) = (a.num.clone(), a.den.clone());
    while !q.is_zero() {
        let (t, r) = p.div_mod_floor(&q);
        out.push(t);
        p = q;
        q = r;
    }
    out
}

/// Rebuilds a fraction from its continued-fraction terms; the empty
/// expansion is zero.
pub fn from_continued_fraction(terms: &[BigInt]) -> Fraction {
    let Some((last, rest)) = terms.split_last() else {
        return Fraction::zero();
    };
    let (mut p, mut q) = (last.clone(), BigInt::one());
    for t in rest.iter().rev() {
        let np = t * &p + &q;
        q = p;
        p = np;
    }
    Fraction::new(p, q).expect("continued fraction convergents are never 0/0")
}

/// The two Stern–Brocot parents of a non-integer fraction: its Farey
/// neighbors with strictly smaller denominator, in increasing order.
/// Integers (and ∞) have none.
pub fn stern_brocot_parents(a: &Fraction) -> Vec<Fraction> {
    if a.is_infinite() || a.is_integer() {
        return Vec::new();
    }
    // Solve p·d − q·c = ±1 with 0 < d < q; the two solutions are the parents.
    let (p, q) = (&a.num, &a.den);
    let ext = p.extended_gcd(q);
    // ext.x · p + ext.y · q = 1, so d = x mod q gives p·d ≡ 1 (mod q).
    let d1 = ext.x.mod_floor(q);
    let c1 = (p * &d1 - BigInt::one()) / q;
    let d2 = q - &d1;
    let c2 = (p * &d2 + BigInt::one()) / q;
    let mut out = vec![
        Fraction::new(c1, d1).expect("nonzero denominator"),
        Fraction::new(c2, d2).expect("nonzero denominator"),
    ];
    out.sort();
    out
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `p/q` or a bare integer `p`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Parse {
            input: s.to_string(),
            position: 0,
            message: "expected p/q".into(),
        };
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Fraction::new(p, q)
            }
            None => Ok(Fraction::integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

impl serde::Serialize for Fraction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Serializes a big integer as its decimal string, for `serialize_with`.
pub fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::integer(n)
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        self.assert_finite("negation");
        Fraction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        -self.clone()
    }
}

macro_rules! field_op {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Fraction> for &Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                self.assert_finite(stringify!($method));
                rhs.assert_finite(stringify!($method));
                let f: fn(&Fraction, &Fraction) -> Fraction = $body;
                f(self, rhs)
            }
        }
        impl $trait<Fraction> for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Fraction> for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                (&self).$method(rhs)
            }
        }
    };
}

field_op!(Add, add, |a, b| Fraction::new(
    &a.num * &b.den + &b.num * &a.den,
    &a.den * &b.den
)
.unwrap());
field_op!(Sub, sub, |a, b| Fraction::new(
    &a.num * &b.den - &b.num * &a.den,
    &a.den * &b.den
)
.unwrap());
field_op!(Mul, mul, |a, b| Fraction::new(
    &a.num * &b.num,
    &a.den * &b.den
)
.unwrap());
field_op!(Div, div, |a, b| {
    assert!(!b.is_zero(), "division by zero");
    Fraction::new(&a.num * &b.den, &a.den * &b.num).unwrap()
});

impl std::iter::Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: i64, q: i64) -> Fraction {
        Fraction::from_ints(p, q)
    }

    #[test]
    fn gcd_cases() {
        assert_eq!(gcd(&8.into(), &8.into()), 8.into());
        assert_eq!(gcd(&0.into(), &7.into()), 7.into());
        assert_eq!(gcd(&0.into(), &0.into()), 0.into());
        let (a, b) = (2_000_001u64, 3_000_000u64);
        let naive = (1..=a.min(b))
            .rev()
            .find(|d| a % d == 0 && b % d == 0)
            .unwrap();
        assert_eq!(gcd(&a.into(), &b.into()), naive.into());
        assert_eq!(gcd_u64(a, b), naive);
    }

    #[test]
    fn reduction_and_infinity() {
        assert_eq!(f(6, -4), f(-3, 2));
        assert_eq!(f(-5, 0), Fraction::infinity());
        assert_eq!(Fraction::infinity().to_string(), "1/0");
        assert!(Fraction::new(0, 0).is_err());
        assert!(Fraction::infinity() > f(1_000_000, 1));
        assert_eq!(f(0, 5).to_string(), "0/1");
    }

    #[test]
    fn farey_examples() {
        assert!(is_farey_neighbor(&f(1, 7), &f(0, 1)));
        assert!(is_farey_neighbor(&f(1, 3), &f(1, 2)));
        assert!(!is_farey_neighbor(&f(1, 4), &f(1, 2)));
        assert!(is_farey_neighbor(&Fraction::infinity(), &f(3, 1)));
    }

    #[test]
    fn continued_fraction_examples() {
        assert!(continued_fraction(&f(0, 1)).is_empty());
        assert_eq!(continued_fraction(&f(1, 7)), vec![0.into(), 7.into()]);
        let cf = continued_fraction(&f(7, 11));
        assert_eq!(cf, vec![0.into(), 1.into(), 1.into(), 1.into(), 3.into()]);
        assert_eq!(from_continued_fraction(&cf), f(7, 11));
        assert_eq!(
            from_continued_fraction(&continued_fraction(&f(-7, 11))),
            f(-7, 11)
        );
    }

    #[test]
    fn parents() {
        assert_eq!(stern_brocot_parents(&f(2, 5)), vec![f(1, 3), f(1, 2)]);
        assert_eq!(stern_brocot_parents(&f(-1, 3)), vec![f(-1, 2), f(0, 1)]);
        assert_eq!(stern_brocot_parents(&f(1, 2)), vec![f(0, 1), f(1, 1)]);
        assert!(stern_brocot_parents(&f(4, 1)).is_empty());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/7", "-2/5", "1/0", "0/1"] {
            assert_eq!(s.parse::<Fraction>().unwrap().to_string(), s);
        }
        assert_eq!("4".parse::<Fraction>().unwrap(), f(4, 1));
        assert!("x/2".parse::<Fraction>().is_err());
    }
}

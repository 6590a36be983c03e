//! Exact scalars: rationals and residues modulo a prime.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// The ground field shared by every operand of an operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting non-primes.
    pub fn prime(p: u64) -> Result<Field, Error> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::Parse(format!("{p} is not a prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElem {
        match *self {
            Field::Rational => FieldElem::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => FieldElem::Fp {
                v: (n as i128).rem_euclid(p as i128) as u64,
                p,
            },
        }
    }

    /// `num / den`, or `None` when `den` vanishes in this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Option<FieldElem> {
        self.from_i64(num).div(&self.from_i64(den))
    }

    /// Parses `"a"`, `"-a"` or `"a/b"`. Residues are reduced modulo `p`.
    pub fn parse(&self, s: &str) -> Result<FieldElem, Error> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad scalar {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        if d.is_zero() {
            return Err(bad());
        }
        match *self {
            Field::Rational => Ok(FieldElem::Q(BigRational::new(n, d))),
            Field::Prime(p) => {
                let reduce =
                    |x: &BigInt| -> u64 { x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64") };
                let num = FieldElem::Fp { v: reduce(&n), p };
                let den = FieldElem::Fp { v: reduce(&d), p };
                num.div(&den).ok_or_else(bad)
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact scalar. Rationals are kept reduced with positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

impl FieldElem {
    pub fn field(&self) -> Field {
        match self {
            FieldElem::Q(_) => Field::Rational,
            FieldElem::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Q(q) => q.is_zero(),
            FieldElem::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Q(q) => q.is_one(),
            FieldElem::Fp { v, .. } => *v == 1,
        }
    }

    fn mismatch(a: &FieldElem, b: &FieldElem) -> ! {
        panic!("field mismatch: {} vs {}", a.field(), b.field())
    }

    /// Sum. Panics if the operands live in different fields; callers
    /// validate fields at the map level.
    pub fn add(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a + b),
            (FieldElem::Fp { v: a, p }, FieldElem::Fp { v: b, p: q }) if p == q => FieldElem::Fp {
                v: ((*a as u128 + *b as u128) % *p as u128) as u64,
                p: *p,
            },
            _ => Self::mismatch(self, other),
        }
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElem {
        match self {
            FieldElem::Q(a) => FieldElem::Q(-a),
            FieldElem::Fp { v, p } => FieldElem::Fp { v: (p - v) % p, p: *p },
        }
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        match (self, other) {
            (FieldElem::Q(a), FieldElem::Q(b)) => FieldElem::Q(a * b),
            (FieldElem::Fp { v: a, p }, FieldElem::Fp { v: b, p: q }) if p == q => FieldElem::Fp {
                v: mulmod(*a, *b, *p),
                p: *p,
            },
            _ => Self::mismatch(self, other),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<FieldElem> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            FieldElem::Q(a) => FieldElem::Q(a.recip()),
            FieldElem::Fp { v, p } => FieldElem::Fp {
                v: powmod(*v, p - 2, *p),
                p: *p,
            },
        })
    }

    pub fn div(&self, other: &FieldElem) -> Option<FieldElem> {
        other.inv().map(|i| self.mul(&i))
    }

    /// In-place `self += a * b`, skipping work when a factor is zero.
    pub fn add_product(&mut self, a: &FieldElem, b: &FieldElem) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        match (&mut *self, a, b) {
            (FieldElem::Q(s), FieldElem::Q(x), FieldElem::Q(y)) => {
                if s.is_integer() && x.is_integer() && y.is_integer() {
                    *s = BigRational::from_integer(s.numer() + x.numer() * y.numer());
                } else if x.is_one() {
                    *s += y;
                } else if y.is_one() {
                    *s += x;
                } else {
                    *s += x * y;
                }
            }
            _ => *self = self.add(&a.mul(b)),
        }
    }
}

impl fmt::Display for FieldElem {
    /// Canonical text: `"a"` or `"a/b"` for rationals, the least
    /// non-negative residue for `F_p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Q(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElem::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl FieldElem {
    /// Rational value as a pair of small integers, when it fits.
    pub fn as_small_ratio(&self) -> Option<(i64, i64)> {
        match self {
            FieldElem::Q(q) => Some((q.numer().to_i64()?, q.denom().to_i64()?)),
            FieldElem::Fp { v, .. } => Some((i64::try_from(*v).ok()?, 1)),
        }
    }

    pub fn is_negative(&self) -> bool {
        matches!(self, FieldElem::Q(q) if q.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_reduced() {
        let q = Field::Rational;
        let x = q.parse("6/-4").unwrap();
        assert_eq!(x.to_string(), "-3/2");
        assert_eq!(q.parse("4/2").unwrap().to_string(), "2");
        let half = q.from_ratio(1, 2).unwrap();
        assert_eq!(half.add(&half), q.one());
    }

    #[test]
    fn residues_reduce_and_invert() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(2));
        assert_eq!(f.parse("-1/2").unwrap(), f.from_i64(1));
        assert_eq!(f.from_i64(-1).to_string(), "2");
        assert!(f.parse("1/3").is_err());
        assert_eq!(f.from_i64(2).inv().unwrap(), f.from_i64(2));
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(4).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let _ = Field::Rational.one().add(&Field::Prime(5).one());
    }

    #[test]
    fn add_product_matches_mul() {
        let q = Field::Rational;
        let mut s = q.from_ratio(1, 3).unwrap();
        s.add_product(&q.from_ratio(2, 5).unwrap(), &q.from_i64(5));
        assert_eq!(s, q.from_ratio(7, 3).unwrap());
        let mut t = q.from_i64(-4);
        t.add_product(&q.from_i64(3), &q.from_i64(2));
        assert_eq!(t, q.from_i64(2));
        t.add_product(&q.from_i64(-1), &q.from_i64(2));
        assert!(t.is_zero());
    }
}

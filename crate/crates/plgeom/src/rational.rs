//! Exact rational scalars and points.
//!
//! `Rational` is the only scalar type used by the geometric predicates. It is
//! kept in lowest terms with a positive denominator, so equality, ordering
//! and hashing agree with numeric equality. Values whose numerator and
//! denominator fit in 64 bits are stored inline and combined through 128-bit
//! intermediates, which covers essentially all geometry in this crate;
//! anything larger falls back to arbitrary precision, still exact.
//! Serialization uses the compact string form `"p/q"` (just `"p"` for
//! integers), which round-trips bit-identically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

// Both variants are lowest terms with positive denominator, and a value
// representable as `Small` is never stored as `Big`, so the derived
// equality and hash agree with numeric equality. `Small` additionally
// keeps the numerator above `i64::MIN` so negation cannot overflow.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

/// Exact rational scalar in lowest terms, denominator positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer in rational literal: {0}")]
    BadInteger(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

impl Rational {
    // Normalizes a fraction whose parts arose from at most one addition of
    // products of 64-bit values, so they fit i128 with room to spare.
    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert_ne!(den, 0);
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = num.unsigned_abs().gcd(&den.unsigned_abs());
        let (num, den) = if g > 1 {
            (num / g as i128, den / g as i128)
        } else {
            (num, den)
        };
        if num.unsigned_abs() <= i64::MAX as u128 && den <= i64::MAX as i128 {
            Rational(Repr::Small {
                num: num as i64,
                den: den as i64,
            })
        } else {
            Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            ))))
        }
    }

    // `b` is already in lowest terms; store it inline when it fits.
    fn from_big(b: BigRational) -> Self {
        if let (Some(num), Some(den)) = (b.numer().to_i64(), b.denom().to_i64()) {
            if num != i64::MIN {
                return Rational(Repr::Small { num, den });
            }
        }
        Rational(Repr::Big(Box::new(b)))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(b) => (**b).clone(),
        }
    }

    /// Builds `numer / denom`, normalizing sign and common factors.
    ///
    /// Panics if `denom` is zero; use [`Rational::from_str`] for fallible
    /// parsing of untrusted input.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        Rational::from_big(BigRational::new(numer, denom))
    }

    pub fn from_int(n: i64) -> Self {
        if n == i64::MIN {
            return Rational::from_i128(n as i128, 1);
        }
        Rational(Repr::Small { num: n, den: 1 })
    }

    /// Shorthand for small literal fractions, `ratio(3, 4) == 3/4`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert_ne!(denom, 0, "zero denominator");
        Rational::from_i128(numer as i128, denom as i128)
    }

    pub fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rational(Repr::Small { num: 1, den: 1 })
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num == 0,
            Repr::Big(b) => b.is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Sign as -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => Rational(Repr::Small {
                num: num.abs(),
                den: *den,
            }),
            Repr::Big(b) => Rational(Repr::Big(Box::new(b.abs()))),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    /// Midpoint of two rationals.
    pub fn mid(a: &Rational, b: &Rational) -> Rational {
        (a + b) / Rational::from_int(2)
    }

    /// Lossy conversion for display purposes only; never used in predicates.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small { num, den } => *num as f64 / *den as f64,
            Repr::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) => {
                (*an as i128 * *bd as i128).cmp(&(*bn as i128 * *ad as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

fn add_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) = (&a.0, &b.0) {
        let n = *an as i128 * *bd as i128 + *bn as i128 * *ad as i128;
        return Rational::from_i128(n, *ad as i128 * *bd as i128);
    }
    Rational::from_big(a.to_big() + b.to_big())
}

fn sub_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) = (&a.0, &b.0) {
        let n = *an as i128 * *bd as i128 - *bn as i128 * *ad as i128;
        return Rational::from_i128(n, *ad as i128 * *bd as i128);
    }
    Rational::from_big(a.to_big() - b.to_big())
}

fn mul_impl(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) = (&a.0, &b.0) {
        return Rational::from_i128(*an as i128 * *bn as i128, *ad as i128 * *bd as i128);
    }
    Rational::from_big(a.to_big() * b.to_big())
}

fn div_impl(a: &Rational, b: &Rational) -> Rational {
    assert!(!b.is_zero(), "division by zero");
    if let (Repr::Small { num: an, den: ad }, Repr::Small { num: bn, den: bd }) = (&a.0, &b.0) {
        return Rational::from_i128(*an as i128 * *bd as i128, *ad as i128 * *bn as i128);
    }
    Rational::from_big(a.to_big() / b.to_big())
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(self, rhs)
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $impl_fn(&self, rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $impl_fn(self, &rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_impl);
impl_binop!(Sub, sub, sub_impl);
impl_binop!(Mul, mul, mul_impl);
impl_binop!(Div, div, div_impl);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Rational(Repr::Small {
                num: -num,
                den: *den,
            }),
            Repr::Big(b) => Rational(Repr::Big(Box::new(-(**b).clone()))),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

// Debug mirrors Display; the reduced fraction is already the most readable
// exact form.
impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let (numer, denom) = match s.split_once('/') {
            None => (s, "1"),
            Some((n, d)) => (n, d),
        };
        let numer = BigInt::from_str(numer.trim())
            .map_err(|_| ParseRationalError::BadInteger(numer.trim().to_owned()))?;
        let denom = BigInt::from_str(denom.trim())
            .map_err(|_| ParseRationalError::BadInteger(denom.trim().to_owned()))?;
        if denom.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        Ok(Rational::new(numer, denom))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Exact point in the plane. Lexicographic order (x, then y).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(Rational, Rational)", into = "(Rational, Rational)")]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(Rational::from_int(x), Rational::from_int(y))
    }

    pub fn midpoint(&self, other: &Point2) -> Point2 {
        Point2::new(
            Rational::mid(&self.x, &other.x),
            Rational::mid(&self.y, &other.y),
        )
    }

    /// Affine interpolation `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point2, t: &Rational) -> Point2 {
        Point2::new(
            &self.x + t * (&other.x - &self.x),
            &self.y + t * (&other.y - &self.y),
        )
    }
}

impl From<(Rational, Rational)> for Point2 {
    fn from((x, y): (Rational, Rational)) -> Self {
        Point2 { x, y }
    }
}

impl From<Point2> for (Rational, Rational) {
    fn from(p: Point2) -> Self {
        (p.x, p.y)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_to_lowest_terms() {
        let r = Rational::ratio(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert!(r.denom().is_positive());
        assert_eq!(r, Rational::ratio(-3, 2));
    }

    #[test]
    fn integers_print_without_denominator() {
        assert_eq!(Rational::ratio(8, 4).to_string(), "2");
        assert_eq!(Rational::from_int(-7).to_string(), "-7");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parsing_round_trips() {
        for s in ["3/7", "-3/7", "12", "0", "-1/2"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("6/4".parse::<Rational>().unwrap().to_string(), "3/2");
        assert_eq!("4/-8".parse::<Rational>().unwrap().to_string(), "-1/2");
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert_eq!(
            "1/0".parse::<Rational>(),
            Err(ParseRationalError::ZeroDenominator)
        );
        assert!("".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = Rational::ratio(1, 3);
        let b = Rational::ratio(1, 6);
        assert_eq!(&a + &b, Rational::ratio(1, 2));
        assert_eq!(&a - &b, Rational::ratio(1, 6));
        assert_eq!(&a * &b, Rational::ratio(1, 18));
        assert_eq!(&a / &b, Rational::from_int(2));
        assert_eq!(-&a, Rational::ratio(-1, 3));
        assert_eq!(Rational::mid(&a, &b), Rational::ratio(1, 4));
    }

    #[test]
    fn values_survive_the_64_bit_boundary() {
        // Grows past the inline range and comes back down to it; every step
        // stays exact and equality keeps matching small literals.
        let big = Rational::from_int(1 << 62) * Rational::from_int(1 << 62);
        assert_eq!(big.to_string(), format!("{}", (1u128 << 124)));
        let back = &big / &big;
        assert_eq!(back, Rational::one());
        let tiny = Rational::one() / &big;
        assert_eq!(&tiny * &big, Rational::one());
        let sum = &big + Rational::ratio(1, 3);
        assert_eq!(&sum - &big, Rational::ratio(1, 3));
        assert!(big > Rational::from_int(i64::MAX));
        assert!(-&big < Rational::from_int(i64::MIN));
    }

    #[test]
    fn huge_values_round_trip_through_strings() {
        let s = "170141183460469231731687303715884105728/3";
        let r: Rational = s.parse().unwrap();
        assert_eq!(r.to_string(), s);
        let js = serde_json::to_string(&r).unwrap();
        let back: Rational = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn json_uses_fraction_strings() {
        let r = Rational::ratio(-5, 3);
        let js = serde_json::to_string(&r).unwrap();
        assert_eq!(js, "\"-5/3\"");
        let back: Rational = serde_json::from_str(&js).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn point_serializes_as_pair() {
        let p = Point2::new(Rational::ratio(1, 2), Rational::from_int(-3));
        let js = serde_json::to_string(&p).unwrap();
        assert_eq!(js, "[\"1/2\",\"-3\"]");
        let back: Point2 = serde_json::from_str(&js).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn point_order_is_lexicographic() {
        let a = Point2::from_ints(0, 5);
        let b = Point2::from_ints(1, -5);
        let c = Point2::from_ints(1, 0);
        assert!(a < b && b < c);
    }

    #[test]
    fn lerp_and_midpoint() {
        let a = Point2::from_ints(0, 0);
        let b = Point2::from_ints(4, 2);
        assert_eq!(a.midpoint(&b), Point2::from_ints(2, 1));
        assert_eq!(
            a.lerp(&b, &Rational::ratio(1, 4)),
            Point2::new(Rational::from_int(1), Rational::ratio(1, 2))
        );
    }
}

//! Exact rational scalars and the rounding functions built on them.
//!
//! [`Rat`] is a reduced fraction of two big integers. Every scalar that
//! appears in the decision procedures lives here, so no floating point
//! arithmetic ever touches a verdict.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    /// `num / den`, reduced. Fails when `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num.into(), den)))
    }

    /// Shorthand for small literals; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Rat::new(num, den).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn recip(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &rhs.0))
    }

    /// Midpoint of `self` and `other`.
    pub fn midpoint(&self, other: &Rat) -> Rat {
        Rat((&self.0 + &other.0) / BigInt::from(2))
    }

    /// Lossy conversion, used only for drawing.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The integer value, if this rational is an integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn parse_integer(token: &str) -> Option<BigInt> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

/// Parses `-3/2`, `7`, `−6/4` (Unicode minus accepted). Decimal notation is
/// rejected.
impl FromStr for Rat {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::ParseRational(text.to_string());
        let trimmed = text.trim();
        let (negative, body) = if let Some(rest) = trimmed.strip_prefix('-') {
            (true, rest)
        } else if let Some(rest) = trimmed.strip_prefix('\u{2212}') {
            (true, rest)
        } else {
            (false, trimmed.strip_prefix('+').unwrap_or(trimmed))
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (parse_integer(n).ok_or_else(bad)?, parse_integer(d).ok_or_else(bad)?),
            None => (parse_integer(body).ok_or_else(bad)?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        let num = if negative { -num } else { num };
        Rat::new(num, den)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division panics on a zero divisor, like the integer types; use
// `checked_div` where the divisor is not known to be nonzero.
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// A strictly positive rational.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosRat(Rat);

impl PosRat {
    pub fn new(value: Rat) -> Result<Self> {
        if value.is_positive() {
            Ok(PosRat(value))
        } else {
            Err(Error::NotPositive(value))
        }
    }

    pub fn get(&self) -> &Rat {
        &self.0
    }

    pub fn into_inner(self) -> Rat {
        self.0
    }
}

impl TryFrom<Rat> for PosRat {
    type Error = Error;
    fn try_from(value: Rat) -> Result<Self> {
        PosRat::new(value)
    }
}

impl std::ops::Deref for PosRat {
    type Target = Rat;
    fn deref(&self) -> &Rat {
        &self.0
    }
}

impl fmt::Display for PosRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for PosRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for PosRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// `(⌊x⌋, ⌈x⌉)`.
pub fn floor_ceil(x: &Rat) -> (BigInt, BigInt) {
    (x.floor(), x.ceil())
}

/// Strict floor and strict ceiling: the largest integer strictly below `x`
/// and the smallest integer strictly above it.
pub fn strict_floor_ceil(x: &Rat) -> (BigInt, BigInt) {
    (x.ceil() - 1, x.floor() + 1)
}

pub fn strict_floor(x: &Rat) -> BigInt {
    x.ceil() - 1
}

pub fn strict_ceil(x: &Rat) -> BigInt {
    x.floor() + 1
}

/// `a·⌊x/a⌋`, the largest multiple of `a` not exceeding `x` when `a > 0`.
pub fn round_down_scaled(x: &Rat, a: &Rat) -> Result<Rat> {
    let q = x.checked_div(a)?;
    Ok(a * Rat::from_int(q.floor()))
}

/// `a·⟦x/a⟧` with the strict floor; `x` itself when `a = 0`.
pub fn strict_round_down_scaled(x: &Rat, a: &Rat) -> Rat {
    if a.is_zero() {
        return x.clone();
    }
    a * Rat::from_int(strict_floor(&(x / a)))
}

/// `a·⟦x/a⟧'` with the strict ceiling; `x` itself when `a = 0`.
///
/// Equal to `strict_round_down_scaled(x, -a)` for every `a`.
pub fn strict_round_up_scaled(x: &Rat, a: &Rat) -> Rat {
    if a.is_zero() {
        return x.clone();
    }
    a * Rat::from_int(strict_ceil(&(x / a)))
}

/// Outcome of an extended gcd or lcm. Rational inputs are always
/// commensurable; the other variant is kept for real-valued inputs, which
/// this crate does not represent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extended {
    Value(PosRat),
    Incommensurable,
}

impl Extended {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            Extended::Value(v) => Some(v.get()),
            Extended::Incommensurable => None,
        }
    }
}

/// Brings `u` and `v` over the common denominator `den(u)·den(v)/gcd`.
fn common_numerators(u: &Rat, v: &Rat) -> (BigInt, BigInt, BigInt) {
    let den = u.denom().lcm(v.denom());
    let a = u.numer() * (&den / u.denom());
    let b = v.numer() * (&den / v.denom());
    (a, b, den)
}

/// The positive generator `w` of `uℤ + vℤ = wℤ`.
pub fn egcd(u: &PosRat, v: &PosRat) -> Extended {
    let (a, b, den) = common_numerators(u, v);
    let w = Rat::new(a.gcd(&b), den).expect("positive denominator");
    Extended::Value(PosRat(w))
}

/// The positive generator `w` of `uℤ ∩ vℤ = wℤ`.
pub fn elcm(u: &PosRat, v: &PosRat) -> Extended {
    let (a, b, den) = common_numerators(u, v);
    let w = Rat::new(a.lcm(&b), den).expect("positive denominator");
    Extended::Value(PosRat(w))
}

/// Writes a negative rational as `-q/p` with coprime `p, q ≥ 1`; returns `(p, q)`.
pub fn lowest_terms_neg(alpha: &Rat) -> Result<(BigInt, BigInt)> {
    if !alpha.is_negative() {
        return Err(Error::NotNegative(alpha.clone()));
    }
    Ok((alpha.denom().clone(), -alpha.numer()))
}

/// `(p, q)` from [`lowest_terms_neg`] narrowed to machine integers.
pub fn lowest_terms_neg_u64(alpha: &Rat) -> Result<(u64, u64)> {
    let (p, q) = lowest_terms_neg(alpha)?;
    Ok((to_u64(&p)?, to_u64(&q)?))
}

pub(crate) fn to_u64(n: &BigInt) -> Result<u64> {
    n.to_u64().ok_or_else(|| Error::Overflow(n.to_string()))
}

impl PartialEq<i64> for Rat {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rat {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

//! Numeric weights.
//!
//! Graphs are generic over [`Weight`]. The default is [`Rational`], an exact
//! arbitrary-precision fraction, which keeps every cut and strength
//! comparison exact. `f64` is available as a fast mode; results in that mode
//! agree with the exact mode to roughly `1e-9` relative error.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Relative tolerance documented for the `f64` weight mode.
pub const FLOAT_RELATIVE_TOLERANCE: f64 = 1e-9;

pub trait Weight:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    fn from_ratio(r: &Rational) -> Self;
    /// Exact rational value. For `f64` this is the dyadic value of the float.
    fn to_ratio(&self) -> Rational;
    fn to_f64(&self) -> f64;
    fn from_u64(k: u64) -> Self;
    fn parse_weight(s: &str) -> Result<Self, String>;
    fn is_integer(&self) -> bool;
}

impl Weight for Rational {
    const EXACT: bool = true;

    fn from_ratio(r: &Rational) -> Self {
        r.clone()
    }

    fn to_ratio(&self) -> Rational {
        self.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_u64(k: u64) -> Self {
        Rational::from_integer(BigInt::from(k))
    }

    fn parse_weight(s: &str) -> Result<Self, String> {
        parse_rational(s)
    }

    fn is_integer(&self) -> bool {
        Rational::is_integer(self)
    }
}

impl Weight for f64 {
    const EXACT: bool = false;

    fn from_ratio(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_ratio(&self) -> Rational {
        Rational::from_float(*self).unwrap_or_else(Rational::zero)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_u64(k: u64) -> Self {
        k as f64
    }

    fn parse_weight(s: &str) -> Result<Self, String> {
        if s.contains('/') {
            parse_rational(s).map(|r| Self::from_ratio(&r))
        } else {
            s.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad weight {s:?}: {e}"))
        }
    }

    fn is_integer(&self) -> bool {
        self.fract() == 0.0
    }
}

/// Parses `"p/q"`, an integer, or a decimal such as `"0.25"` or `"1e-3"`
/// into an exact fraction.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty number".into());
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(Rational::new(p, q));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = s[pos + 1..]
                .parse()
                .map_err(|_| format!("bad exponent in {s:?}"))?;
            (&s[..pos], exp)
        }
        None => (s, 0),
    };
    let (negative, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(format!("bad number {s:?}"));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(format!("bad number {s:?}"));
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = digits.parse().map_err(|_| format!("bad number {s:?}"))?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// Rational from a float, rounded up to the given denominator.
pub fn ceil_to_denominator(x: f64, denominator: u64) -> Rational {
    let scaled = (x * denominator as f64).ceil();
    let numer = BigInt::from(scaled as i128);
    Rational::new(numer, BigInt::from(denominator))
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn max_weight<W: Weight>(a: W, b: W) -> W {
    if b > a {
        b
    } else {
        a
    }
}

pub fn min_weight<W: Weight>(a: W, b: W) -> W {
    if b < a {
        b
    } else {
        a
    }
}

pub fn abs_diff<W: Weight>(a: &W, b: &W) -> W {
    if a >= b {
        a.clone() - b.clone()
    } else {
        b.clone() - a.clone()
    }
}

/// `2^exp` in the weight type.
pub fn pow2<W: Weight>(exp: i32) -> W {
    let base = W::from_u64(2);
    let mut out = W::one();
    for _ in 0..exp.unsigned_abs() {
        out = out * base.clone();
    }
    if exp < 0 {
        W::one() / out
    } else {
        out
    }
}

/// `floor(log2(x))` for positive `x`, computed with exact comparisons.
pub fn floor_log2<W: Weight>(x: &W) -> i32 {
    debug_assert!(*x > W::zero());
    let guess = x.to_f64().log2();
    let mut j = if guess.is_finite() { guess.floor() as i32 } else { 0 };
    while pow2::<W>(j) > *x {
        j -= 1;
    }
    while pow2::<W>(j + 1) <= *x {
        j += 1;
    }
    j
}

/// Dyadic class `j` with `2^(j-1) <= x < 2^j`.
pub fn dyadic_class<W: Weight>(x: &W) -> i32 {
    floor_log2(x) + 1
}

/// Exact `p/q` rendering, used by the JSON reports.
pub fn ratio_string(r: &Rational) -> String {
    let r = r.reduced();
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_unit<W: Weight>(w: &W) -> bool {
    w.is_one()
}

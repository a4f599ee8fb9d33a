//! Exact scalars in the quadratic field ℚ(√2).
//!
//! A [`Scalar`] is stored as a pair of reduced big rationals `(a, b)` standing
//! for `a + b·√2`. All arithmetic is exact, so equality and zero tests are
//! decidable and every identity checked by this crate is checked to exact zero.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// An element `rat + sqrt2·√2` of ℚ(√2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    rat: BigRational,
    sqrt2: BigRational,
}

impl Scalar {
    pub fn new(rat: BigRational, sqrt2: BigRational) -> Self {
        Scalar { rat, sqrt2 }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            rat: BigRational::from_integer(BigInt::from(n)),
            sqrt2: BigRational::zero(),
        }
    }

    /// `num/den` as a rational scalar. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar {
            rat: BigRational::new(BigInt::from(num), BigInt::from(den)),
            sqrt2: BigRational::zero(),
        }
    }

    /// `a + b√2` with integer parts.
    pub fn quadratic(a: i64, b: i64) -> Self {
        Scalar {
            rat: BigRational::from_integer(BigInt::from(a)),
            sqrt2: BigRational::from_integer(BigInt::from(b)),
        }
    }

    pub fn sqrt2() -> Self {
        Scalar::quadratic(0, 1)
    }

    pub fn rat_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.sqrt2
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.sqrt2.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.sqrt2.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.sqrt2.is_zero()
    }

    /// Galois conjugate `a − b√2`.
    pub fn conjugate(&self) -> Self {
        Scalar {
            rat: self.rat.clone(),
            sqrt2: -&self.sqrt2,
        }
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> BigRational {
        &self.rat * &self.rat - BigRational::from_integer(BigInt::from(2)) * &self.sqrt2 * &self.sqrt2
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // a² − 2b² ≠ 0 whenever (a, b) ≠ 0 because √2 is irrational.
        let n = self.norm();
        Ok(Scalar {
            rat: &self.rat / &n,
            sqrt2: -&self.sqrt2 / &n,
        })
    }

    /// Sign of the real number `a + b√2`, decided exactly.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.rat);
        let sb = sign_of(&self.sqrt2);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with 2b²
        let a2 = &self.rat * &self.rat;
        let b2 = BigRational::from_integer(BigInt::from(2)) * &self.sqrt2 * &self.sqrt2;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        ratio_to_f64(&self.rat) + ratio_to_f64(&self.sqrt2) * std::f64::consts::SQRT_2
    }

    pub fn scale_int(&self, k: i64) -> Self {
        if k == 1 {
            return self.clone();
        }
        let k = BigRational::from_integer(BigInt::from(k));
        Scalar {
            rat: &self.rat * &k,
            sqrt2: &self.sqrt2 * &k,
        }
    }

    /// Canonical, whitespace-free text form: `p/q` or `p/q+r/s*sqrt2`.
    pub fn to_canonical(&self) -> String {
        let rat = fmt_ratio(&self.rat);
        if self.sqrt2.is_zero() {
            return rat;
        }
        let s = fmt_ratio(&self.sqrt2.abs());
        let sign = if self.sqrt2.is_negative() { '-' } else { '+' };
        format!("{rat}{sign}{s}*sqrt2")
    }
}

fn sign_of(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

fn fmt_ratio(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_ratio(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Parses the sqrt2 coefficient of a term such as `3/2*sqrt2`, `sqrt2`, `-sqrt2`.
fn parse_sqrt2_term(term: &str) -> Option<BigRational> {
    let t = term.trim();
    let body = t.strip_suffix("sqrt2")?.trim_end();
    let body = body.strip_suffix('*').unwrap_or(body).trim();
    match body {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => parse_ratio(body),
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;

    /// Accepts `p`, `p/q`, `r/s*sqrt2`, `p/q+r/s*sqrt2`, `p/q - sqrt2` and the
    /// like, with arbitrary whitespace.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = || ScalarError::Parse(input.to_string());
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        // split into signed terms at '+'/'-' that are not leading
        let bytes = compact.as_bytes();
        let mut cuts = vec![0];
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' && bytes[i - 1] != b'*' {
                cuts.push(i);
            }
        }
        cuts.push(bytes.len());
        let mut out = Scalar::zero();
        for w in cuts.windows(2) {
            let term = &compact[w[0]..w[1]];
            let term = term.strip_prefix('+').unwrap_or(term);
            if term.is_empty() {
                return Err(err());
            }
            if term.ends_with("sqrt2") {
                out.sqrt2 += parse_sqrt2_term(term).ok_or_else(err)?;
            } else {
                out.rat += parse_ratio(term).ok_or_else(err)?;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rat = if self.rat.is_integer() {
            self.rat.numer().to_string()
        } else {
            fmt_ratio(&self.rat)
        };
        if self.sqrt2.is_zero() {
            return f.write_str(&rat);
        }
        let mag = self.sqrt2.abs();
        let coef = if mag.is_one() {
            String::new()
        } else if mag.is_integer() {
            format!("{}*", mag.numer())
        } else {
            format!("{}*", fmt_ratio(&mag))
        };
        if self.rat.is_zero() {
            let sign = if self.sqrt2.is_negative() { "-" } else { "" };
            write!(f, "{sign}{coef}sqrt2")
        } else {
            let sign = if self.sqrt2.is_negative() { '-' } else { '+' };
            write!(f, "{rat}{sign}{coef}sqrt2")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::new(r, BigRational::zero())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            rat: -self.rat,
            sqrt2: -self.sqrt2,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            rat: -&self.rat,
            sqrt2: -&self.sqrt2,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            rat: &self.rat + &rhs.rat,
            sqrt2: &self.sqrt2 + &rhs.sqrt2,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            rat: &self.rat - &rhs.rat,
            sqrt2: &self.sqrt2 - &rhs.sqrt2,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.sqrt2.is_zero() && rhs.sqrt2.is_zero() {
            return Scalar {
                rat: &self.rat * &rhs.rat,
                sqrt2: BigRational::zero(),
            };
        }
        let two = BigRational::from_integer(BigInt::from(2));
        Scalar {
            rat: &self.rat * &rhs.rat + two * &self.sqrt2 * &rhs.sqrt2,
            sqrt2: &self.rat * &rhs.sqrt2 + &self.sqrt2 * &rhs.rat,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::recip`] to handle it.
    fn div(self, rhs: &Scalar) -> Scalar {
        if rhs.sqrt2.is_zero() {
            assert!(!rhs.rat.is_zero(), "division by zero scalar");
            return Scalar {
                rat: &self.rat / &rhs.rat,
                sqrt2: &self.sqrt2 / &rhs.rat,
            };
        }
        self * &rhs.recip().expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.rat += &rhs.rat;
        if !rhs.sqrt2.is_zero() {
            self.sqrt2 += &rhs.sqrt2;
        }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        self.rat -= &rhs.rat;
        if !rhs.sqrt2.is_zero() {
            self.sqrt2 -= &rhs.sqrt2;
        }
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| &acc * &x)
    }
}

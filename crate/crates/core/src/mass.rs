//! Probability mass arithmetic.
//!
//! Solvers are generic over [`Mass`] so the same code runs on `f64` for
//! benchmarks and on exact rationals for oracle checks. Float comparisons use
//! an absolute tolerance of [`FLOAT_TOL`]; rational comparisons are exact.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Sub};

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

pub const FLOAT_TOL: f64 = 1e-9;

/// Exact probability type.
pub type Exact = Ratio<i128>;

pub trait Mass:
    Copy
    + Debug
    + Display
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Zero
    + Send
    + Sync
    + 'static
{
    fn one() -> Self;
    fn from_count(n: usize) -> Self;
    fn to_f64(self) -> f64;
    fn abs(self) -> Self;
    /// Parses `"0.25"`, `"1/4"` or `"1"`.
    fn parse_prob(s: &str) -> Option<Self>;

    fn approx_eq(self, other: Self) -> bool;

    fn approx_lt(self, other: Self) -> bool {
        self < other && !self.approx_eq(other)
    }

    fn approx_le(self, other: Self) -> bool {
        self < other || self.approx_eq(other)
    }

    fn is_positive(self) -> bool {
        self > Self::zero()
    }
}

impl Mass for f64 {
    fn one() -> Self {
        1.0
    }
    fn from_count(n: usize) -> Self {
        n as f64
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn parse_prob(s: &str) -> Option<Self> {
        match s.split_once('/') {
            Some((a, b)) => {
                let a: f64 = a.trim().parse().ok()?;
                let b: f64 = b.trim().parse().ok()?;
                (b != 0.0).then(|| a / b)
            }
            None => s.trim().parse().ok(),
        }
        .filter(|v: &f64| v.is_finite())
    }
    fn approx_eq(self, other: Self) -> bool {
        (self - other).abs() <= FLOAT_TOL
    }
}

impl Mass for Exact {
    fn one() -> Self {
        Ratio::from_integer(1)
    }
    fn from_count(n: usize) -> Self {
        Ratio::from_integer(n as i128)
    }
    fn to_f64(self) -> f64 {
        ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }
    fn abs(self) -> Self {
        Signed::abs(&self)
    }
    fn parse_prob(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => {
                let a = parse_decimal(a.trim())?;
                let b = parse_decimal(b.trim())?;
                (!b.is_zero()).then(|| a / b)
            }
            None => parse_decimal(s),
        }
    }
    fn approx_eq(self, other: Self) -> bool {
        self == other
    }
}

/// Exact value of a plain decimal literal such as `-12.0375`.
fn parse_decimal(s: &str) -> Option<Exact> {
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) || frac.len() > 30 {
        return None;
    }
    let scale = 10i128.checked_pow(frac.len() as u32)?;
    let int_part: i128 = if int.is_empty() { 0 } else { int.parse().ok()? };
    let frac_part: i128 = if frac.is_empty() { 0 } else { frac.parse().ok()? };
    let numer = int_part.checked_mul(scale)?.checked_add(frac_part)?;
    let v = Ratio::new(numer, scale);
    Some(if neg { -v } else { v })
}

/// `Display` wrapper that prints a mass as a float with fixed precision.
pub struct Approx<M>(pub M, pub usize);

impl<M: Mass> Display for Approx<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:.*}", self.1, self.0.to_f64())
    }
}

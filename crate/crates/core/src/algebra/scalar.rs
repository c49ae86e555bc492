//! Pluggable scalar backends.
//!
//! Every type in this crate is generic over a [`Scalar`]: either exact
//! arbitrary-precision rationals ([`BigRational`]) or binary64 floats.  The
//! backend is a static type parameter, so exact tests can never silently
//! degrade to floating point.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Which backend a computation ran on, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Rational,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => write!(f, "rational"),
            Backend::Float => write!(f, "float"),
        }
    }
}

impl std::str::FromStr for Backend {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" | "exact" => Ok(Backend::Rational),
            "float" | "f64" => Ok(Backend::Float),
            other => Err(Error::Parse(format!("unknown backend `{other}`"))),
        }
    }
}

/// Numeric backend for all algebraic types.
///
/// The rational backend performs every ring operation exactly and reports an
/// error instead of producing a NaN; the float backend compares with an
/// absolute tolerance of [`Scalar::EPSILON`] (scaled by the magnitude of the
/// operands once they exceed 1).
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const BACKEND: Backend;
    /// Absolute comparison tolerance (zero on the rational backend).
    const EPSILON: f64;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    /// Exact ratio `num/den`; panics if `den == 0` (caller bug).
    fn from_ratio(num: i64, den: i64) -> Self;

    fn is_zero(&self) -> bool;
    /// Backend equality: exact for rationals, tolerant for floats.
    fn scalar_eq(&self, other: &Self) -> bool;
    /// Multiplicative inverse; [`Error::DivisionByZero`] on zero.
    fn invert(&self) -> Result<Self>;
    /// Square root.  Rational backend: exact root or
    /// [`Error::NotARationalSquare`]; float backend: `f64::sqrt`.
    fn sqrt(&self) -> Result<Self>;

    fn to_f64(&self) -> f64;
    /// Parse from the literal grammar of this backend.
    fn parse(text: &str) -> Result<Self>;
}

fn exact_bigint_sqrt(n: &BigInt) -> Option<BigInt> {
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

impl Scalar for BigRational {
    const BACKEND: Backend = Backend::Rational;
    const EPSILON: f64 = 0.0;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in from_ratio");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn scalar_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn invert(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.recip())
    }

    fn sqrt(&self) -> Result<Self> {
        if self.is_negative() {
            return Err(Error::NegativeSquareRoot);
        }
        // `Ratio` keeps itself reduced, so numerator and denominator must be
        // perfect squares separately.
        let numer = exact_bigint_sqrt(self.numer());
        let denom = exact_bigint_sqrt(self.denom());
        match (numer, denom) {
            (Some(n), Some(d)) => Ok(BigRational::new(n, d)),
            _ => Err(Error::NotARationalSquare(self.to_string())),
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse(text: &str) -> Result<Self> {
        parse_rational(text)
    }
}

/// Parses `p`, `p/q`, or a plain decimal such as `-0.25` into an exact
/// rational.
fn parse_rational(text: &str) -> Result<BigRational> {
    let trimmed = text.trim();
    let invalid = || Error::Parse(format!("invalid rational `{trimmed}`"));
    if trimmed.is_empty() {
        return Err(invalid());
    }
    if let Some((num, den)) = trimmed.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| invalid())?;
        let den: BigInt = den.trim().parse().map_err(|_| invalid())?;
        if Zero::is_zero(&den) {
            return Err(Error::DivisionByZero);
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int_part, frac_part)) = trimmed.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(invalid());
        }
        let digits = format!("{int_digits}{frac_part}");
        let mantissa: BigInt = digits.parse().map_err(|_| invalid())?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(BigRational::new(mantissa * BigInt::from(sign), scale));
    }
    let n: BigInt = trimmed.parse().map_err(|_| invalid())?;
    Ok(BigRational::from_integer(n))
}

impl Scalar for f64 {
    const BACKEND: Backend = Backend::Float;
    const EPSILON: f64 = 1e-12;

    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator in from_ratio");
        num as f64 / den as f64
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn scalar_eq(&self, other: &Self) -> bool {
        // `<f64 as Scalar>` path: bare `Self::EPSILON` would pick the
        // inherent machine epsilon instead of the comparison tolerance.
        let scale = 1f64.max(self.abs()).max(other.abs());
        (self - other).abs() <= <f64 as Scalar>::EPSILON * scale
    }

    fn invert(&self) -> Result<Self> {
        if *self == 0.0 {
            return Err(Error::DivisionByZero);
        }
        Ok(1.0 / self)
    }

    fn sqrt(&self) -> Result<Self> {
        if *self < 0.0 {
            return Err(Error::NegativeSquareRoot);
        }
        Ok(f64::sqrt(*self))
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if let Some((num, den)) = trimmed.split_once('/') {
            let num: f64 = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid float `{trimmed}`")))?;
            let den: f64 = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid float `{trimmed}`")))?;
            if den == 0.0 {
                return Err(Error::DivisionByZero);
            }
            return Ok(num / den);
        }
        trimmed
            .parse()
            .map_err(|_| Error::Parse(format!("invalid float `{trimmed}`")))
    }
}

/// Formats a scalar for CLI output: rationals verbatim, floats with 17
/// significant digits so the printed form parses back to the same bits.
pub fn display_scalar<S: Scalar>(s: &S) -> String {
    match S::BACKEND {
        Backend::Rational => s.to_string(),
        Backend::Float => format!("{:.16e}", s.to_f64()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(num: i64, den: i64) -> BigRational {
        BigRational::from_ratio(num, den)
    }

    #[test]
    fn rational_parse_forms() {
        assert_eq!(BigRational::parse("3/4").unwrap(), rat(3, 4));
        assert_eq!(BigRational::parse("-7").unwrap(), rat(-7, 1));
        assert_eq!(BigRational::parse("0.25").unwrap(), rat(1, 4));
        assert_eq!(BigRational::parse("-1.5").unwrap(), rat(-3, 2));
        assert!(BigRational::parse("1/0").is_err());
        assert!(BigRational::parse("abc").is_err());
    }

    #[test]
    fn rational_sqrt_exact_or_error() {
        assert_eq!(rat(9, 4).sqrt().unwrap(), rat(3, 2));
        assert_eq!(rat(0, 1).sqrt().unwrap(), rat(0, 1));
        assert!(matches!(
            rat(2, 1).sqrt(),
            Err(Error::NotARationalSquare(_))
        ));
        assert!(matches!(rat(-1, 1).sqrt(), Err(Error::NegativeSquareRoot)));
    }

    #[test]
    fn rational_invert_rejects_zero() {
        assert_eq!(rat(2, 3).invert().unwrap(), rat(3, 2));
        assert_eq!(rat(0, 1).invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn float_eq_uses_tolerance() {
        assert!(1.0f64.scalar_eq(&(1.0 + 1e-14)));
        assert!(!1.0f64.scalar_eq(&1.001));
        // Tolerance scales with magnitude above 1.
        assert!(1e6f64.scalar_eq(&(1e6 + 1e-7)));
    }

    #[test]
    fn float_display_round_trips() {
        for x in [1.0 / 3.0, -2.5e-7, 1234.5678] {
            let shown = display_scalar(&x);
            assert_eq!(f64::parse(&shown).unwrap(), x);
        }
    }
}

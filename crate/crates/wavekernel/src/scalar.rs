//! Gaussian-rational scalars: complex numbers with arbitrary-precision
//! rational real and imaginary parts, the only number type used by the
//! verification core.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. Kept in lowest terms with a positive denominator
/// by the underlying representation.
pub type Rational = BigRational;

/// Builds a rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `num/den`. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses a rational from `"num/den"` or `"num"` form.
pub fn parse_rational(s: &str) -> Result<Rational, ScalarParseError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| ScalarParseError::new(s))?;
    let d = BigInt::from_str(den).map_err(|_| ScalarParseError::new(s))?;
    if d.is_zero() {
        return Err(ScalarParseError::new(s));
    }
    Ok(Rational::new(n, d))
}

/// Renders a rational as `"num/den"`, omitting a unit denominator.
pub fn rational_string(r: &Rational) -> String {
    r.to_string()
}

/// Error produced when a scalar or rational string cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid exact number literal: {literal:?}")]
pub struct ScalarParseError {
    literal: String,
}

impl ScalarParseError {
    fn new(s: &str) -> Self {
        Self { literal: s.to_owned() }
    }
}

/// A Gaussian rational: `re + im·i` with exact rational parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// The real scalar `num/den`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    pub fn from_rational(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    /// The purely imaginary scalar `(num/den)·i`.
    pub fn imag_ratio(num: i64, den: i64) -> Self {
        Self::new(Rational::zero(), rat(num, den))
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate: negates the imaginary part.
    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Multiplies by a plain integer.
    pub fn scale_int(&self, k: i64) -> Self {
        let f = rat_int(k);
        Self::new(&self.re * &f, &self.im * &f)
    }

    /// `re² + im²`, the squared modulus; zero only for the zero scalar.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Fails on zero instead of panicking so a
    /// verification run can record the error.
    pub fn checked_inv(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self::new(&self.re / &n, -&self.im / &n))
    }

    /// Exact division. Fails on a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, DivisionByZero> {
        Ok(self * &rhs.checked_inv()?)
    }

    /// Parses `"a/b"`, `"c/d i"` or `"a/b±c/d i"` (spaces optional, unit
    /// denominators and unit imaginary coefficients may be omitted).
    pub fn parse(s: &str) -> Result<Self, ScalarParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ScalarParseError::new(s));
        }
        if let Some(body) = compact.strip_suffix('i') {
            // Split an explicit real part from the imaginary tail, if any.
            if let Some(pos) = split_point(body) {
                let (re_part, im_part) = body.split_at(pos);
                let re = parse_rational(re_part).map_err(|_| ScalarParseError::new(s))?;
                let im = parse_signed_coeff(im_part).ok_or_else(|| ScalarParseError::new(s))?;
                return Ok(Self::new(re, im));
            }
            let im = parse_signed_coeff(body).ok_or_else(|| ScalarParseError::new(s))?;
            return Ok(Self::new(Rational::zero(), im));
        }
        let re = parse_rational(&compact).map_err(|_| ScalarParseError::new(s))?;
        Ok(Self::from_rational(re))
    }
}

/// Index of the sign that separates the real part from the imaginary part,
/// ignoring a leading sign on the real part. Rational literals contain no
/// exponent marks, so any interior `+`/`-` is a separator.
fn split_point(body: &str) -> Option<usize> {
    body.char_indices()
        .skip(1)
        .filter(|(_, c)| *c == '+' || *c == '-')
        .map(|(idx, _)| idx)
        .last()
}

/// Parses the coefficient in front of `i`: empty or a signed rational.
fn parse_signed_coeff(part: &str) -> Option<Rational> {
    match part {
        "" | "+" => Some(Rational::one()),
        "-" => Some(-Rational::one()),
        other => parse_rational(other).ok(),
    }
}

/// Error value for exact division by zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("division by zero in exact arithmetic")]
pub struct DivisionByZero;

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_mag = self.im.abs();
        let im_body = if im_mag.is_one() { String::new() } else { im_mag.to_string() };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_body}i");
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{sign}{im_body}i", self.re)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("exact division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(re: (i64, i64), im: (i64, i64)) -> Scalar {
        Scalar::new(rat(re.0, re.1), rat(im.0, im.1))
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_int(2).to_string(), "2");
        assert_eq!(Scalar::from_ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::imag_ratio(5, 2).to_string(), "5/2i");
        assert_eq!(s((1, 2), (3, 4)).to_string(), "1/2+3/4i");
        assert_eq!(s((1, 2), (-3, 4)).to_string(), "1/2-3/4i");
        assert_eq!(s((-1, 2), (1, 1)).to_string(), "-1/2+i");
    }

    #[test]
    fn parse_round_trips_display() {
        let samples = [
            s((0, 1), (0, 1)),
            s((7, 3), (0, 1)),
            s((-7, 3), (0, 1)),
            s((0, 1), (1, 1)),
            s((0, 1), (-1, 1)),
            s((0, 1), (-5, 9)),
            s((2, 1), (1, 1)),
            s((1, 2), (3, 4)),
            s((-1, 2), (-3, 4)),
        ];
        for v in samples {
            assert_eq!(Scalar::parse(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn parse_accepts_unreduced_and_spaced_forms() {
        assert_eq!(Scalar::parse("2/4").unwrap(), Scalar::from_ratio(1, 2));
        assert_eq!(Scalar::parse(" 1/2 + 3/4 i ").unwrap(), s((1, 2), (3, 4)));
        assert_eq!(Scalar::parse("-2/-4").unwrap(), Scalar::from_ratio(1, 2));
        assert_eq!(Scalar::parse("3/1").unwrap(), Scalar::from_int(3));
    }

    #[test]
    fn parse_rejects_malformed_literals() {
        for bad in ["", "i i", "1/0", "1+", "+", "2x", "1/2+3/4j", "1..2"] {
            assert!(Scalar::parse(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn field_operations() {
        let a = s((1, 2), (3, 4));
        let b = s((-2, 3), (5, 7));
        let prod = &a * &b;
        assert_eq!(prod, s((-73, 84), (-1, 7)));
        assert_eq!(&prod / &b, a);
        assert_eq!(&a - &a, Scalar::zero());
        assert_eq!(&a.conj().conj(), &a);
        assert_eq!((&a * &a.conj()).im(), &Rational::zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(DivisionByZero));
        assert_eq!(Scalar::zero().checked_inv(), Err(DivisionByZero));
    }
}

//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! Arithmetic never rounds. Mixing the two rings promotes the rational
//! operand into the Gaussian rationals, so sums and products are total;
//! operations that require a homogeneous ring (matrix elimination) check
//! the tags up front instead.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which exact field a scalar lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    Rational,
    Gaussian,
}

impl Ring {
    /// The smallest ring containing both operands.
    pub fn join(self, other: Ring) -> Ring {
        if self == Ring::Gaussian || other == Ring::Gaussian {
            Ring::Gaussian
        } else {
            Ring::Rational
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Rational => write!(f, "rational"),
            Ring::Gaussian => write!(f, "gaussian"),
        }
    }
}

/// An exact scalar: a rational p/q or a Gaussian rational a + b·i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian(BigRational, BigRational),
}

impl Scalar {
    pub fn zero(ring: Ring) -> Scalar {
        match ring {
            Ring::Rational => Scalar::Rational(BigRational::zero()),
            Ring::Gaussian => Scalar::Gaussian(BigRational::zero(), BigRational::zero()),
        }
    }

    pub fn one(ring: Ring) -> Scalar {
        match ring {
            Ring::Rational => Scalar::Rational(BigRational::one()),
            Ring::Gaussian => Scalar::Gaussian(BigRational::one(), BigRational::zero()),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Scalar {
        Scalar::Gaussian(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_fraction(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn gaussian_from_ints(re: i64, im: i64) -> Scalar {
        Scalar::Gaussian(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    pub fn ring(&self) -> Ring {
        match self {
            Scalar::Rational(_) => Ring::Rational,
            Scalar::Gaussian(..) => Ring::Gaussian,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian(re, im) => re.is_zero() && im.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Gaussian(re, im) => re.is_one() && im.is_zero(),
        }
    }

    /// Re-tag into `ring`; promoting a rational is lossless, demoting a
    /// Gaussian requires a zero imaginary part.
    pub fn into_ring(self, ring: Ring) -> Result<Scalar> {
        match (self, ring) {
            (s @ Scalar::Rational(_), Ring::Rational) => Ok(s),
            (s @ Scalar::Gaussian(..), Ring::Gaussian) => Ok(s),
            (Scalar::Rational(r), Ring::Gaussian) => Ok(Scalar::Gaussian(r, BigRational::zero())),
            (Scalar::Gaussian(re, im), Ring::Rational) => {
                if im.is_zero() {
                    Ok(Scalar::Rational(re))
                } else {
                    Err(Error::MixedRings)
                }
            }
        }
    }

    fn parts(&self) -> (BigRational, BigRational) {
        match self {
            Scalar::Rational(r) => (r.clone(), BigRational::zero()),
            Scalar::Gaussian(re, im) => (re.clone(), im.clone()),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let (ar, ai) = self.parts();
                let (br, bi) = other.parts();
                Scalar::Gaussian(ar + br, ai + bi)
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let (ar, ai) = self.parts();
                let (br, bi) = other.parts();
                Scalar::Gaussian(&ar * &br - &ai * &bi, &ar * &bi + &ai * &br)
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Gaussian(re, im) => Scalar::Gaussian(-re, -im),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Gaussian(re, im) => {
                let norm = re * re + im * im;
                Scalar::Gaussian(re / &norm, -(im / &norm))
            }
        })
    }

    /// Exact division; panics on division by zero (callers check).
    pub fn div(&self, other: &Scalar) -> Scalar {
        let inv = other.inverse().expect("division by zero scalar");
        self.mul(&inv)
    }

    pub fn pow(&self, mut exp: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.ring());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Renders a rational as "p/q" (denominator always shown).
    fn fmt_rational(r: &BigRational) -> String {
        format!("{}/{}", r.numer(), r.denom())
    }

    /// Parses "p/q" or a bare integer "p".
    pub fn parse_rational(s: &str) -> Result<Scalar> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Scalar::Rational(BigRational::new(num, den)))
    }

    /// Parses the rendered form: "p/q" or "p/q+r/s*i" / "p/q-r/s*i".
    pub fn parse(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if let Some(body) = s.strip_suffix("*i") {
            // Split at the sign that separates the two components; skip the
            // leading sign of the real part.
            let mut split = None;
            for (idx, ch) in body.char_indices().skip(1) {
                if (ch == '+' || ch == '-') && !body[..idx].ends_with('/') {
                    split = Some((idx, ch));
                }
            }
            let (idx, sign) = split.ok_or_else(|| Error::Parse(format!("bad scalar {s:?}")))?;
            let re = Scalar::parse_rational(&body[..idx])?;
            let im = Scalar::parse_rational(&body[idx + 1..])?;
            let im = if sign == '-' { im.neg() } else { im };
            let (re, _) = re.parts();
            let (im_val, _) = im.parts();
            Ok(Scalar::Gaussian(re, im_val))
        } else {
            Scalar::parse_rational(s)
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", Scalar::fmt_rational(r)),
            Scalar::Gaussian(re, im) => {
                if im.is_negative() {
                    write!(
                        f,
                        "{}-{}*i",
                        Scalar::fmt_rational(re),
                        Scalar::fmt_rational(&-im)
                    )
                } else {
                    write!(
                        f,
                        "{}+{}*i",
                        Scalar::fmt_rational(re),
                        Scalar::fmt_rational(im)
                    )
                }
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$imp(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$imp(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$imp(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::add(self, rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::sub(self, rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::mul(self, rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_display_always_shows_denominator() {
        assert_eq!(Scalar::from_int(3).to_string(), "3/1");
        assert_eq!(Scalar::from_fraction(-4, 6).to_string(), "-2/3");
    }

    #[test]
    fn gaussian_display_folds_sign() {
        assert_eq!(Scalar::gaussian_from_ints(0, 1).to_string(), "0/1+1/1*i");
        assert_eq!(Scalar::gaussian_from_ints(-1, -2).to_string(), "-1/1-2/1*i");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["3/1", "-2/3", "0/1+1/1*i", "-1/1-2/1*i", "5/7+0/1*i"] {
            let v = Scalar::parse(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!(Scalar::parse("7").unwrap(), Scalar::from_int(7));
    }

    #[test]
    fn mixed_ring_arithmetic_promotes() {
        let a = Scalar::from_int(2);
        let b = Scalar::i();
        let prod = a.mul(&b);
        assert_eq!(prod, Scalar::gaussian_from_ints(0, 2));
        assert_eq!(prod.ring(), Ring::Gaussian);
    }

    #[test]
    fn powers_of_i_cycle() {
        let i = Scalar::i();
        assert_eq!(i.pow(2), Scalar::gaussian_from_ints(-1, 0));
        assert_eq!(i.pow(4), Scalar::one(Ring::Gaussian));
        assert_eq!(i.pow(0), Scalar::one(Ring::Gaussian));
    }

    #[test]
    fn gaussian_inverse() {
        let z = Scalar::gaussian_from_ints(1, 2);
        let w = z.inverse().unwrap();
        assert!(z.mul(&w).is_one());
        assert!(Scalar::zero(Ring::Gaussian).inverse().is_none());
    }

    #[test]
    fn demotion_requires_zero_imaginary_part() {
        let z = Scalar::gaussian_from_ints(3, 0);
        assert_eq!(z.into_ring(Ring::Rational).unwrap(), Scalar::from_int(3));
        assert!(Scalar::i().into_ring(Ring::Rational).is_err());
    }
}

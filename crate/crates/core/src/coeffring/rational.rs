//! Exact rational scalars.
//!
//! [`Rational`] wraps [`dashu_ratio::RBig`], which keeps values reduced with
//! a positive denominator and stores small numbers inline. The wrapper pins
//! down the textual form (`p/q`, `/1` omitted) and turns division by zero
//! into an error instead of a panic.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use dashu_int::ops::{Gcd, UnsignedAbs};
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use crate::error::{Error, Result};

/// An exact arbitrary-precision fraction in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(RBig);

impl Rational {
    pub fn zero() -> Self {
        Rational(RBig::ZERO)
    }

    pub fn one() -> Self {
        Rational(RBig::ONE)
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(RBig::from(n))
    }

    pub fn from_ibig(n: IBig) -> Self {
        Rational(RBig::from(n))
    }

    /// Builds `num/den`, reducing. Fails when `den` is zero.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(RBig::from_parts_signed(IBig::from(num), IBig::from(den))))
    }

    /// Like [`Rational::new`] for compile-time known, nonzero denominators.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn numer(&self) -> &IBig {
        self.0.numerator()
    }

    pub fn denom(&self) -> &UBig {
        self.0.denominator()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_int()
    }

    pub fn is_negative(&self) -> bool {
        *self.0.numerator() < IBig::ZERO
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            i64::try_from(self.0.numerator().clone()).ok()
        } else {
            None
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Self::one().checked_div(self)
    }

    /// Integer power; negative exponents invert and fail on zero.
    pub fn pow(&self, exp: i32) -> Result<Rational> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.pow(exp as isize)))
    }

    pub fn factorial(n: u32) -> Rational {
        let mut acc = IBig::ONE;
        for i in 2..=n {
            acc *= IBig::from(i);
        }
        Rational::from_ibig(acc)
    }

    pub(crate) fn is_reduced(&self) -> bool {
        let d = self.0.denominator();
        *d > UBig::ZERO && self.0.numerator().unsigned_abs().gcd(d) == UBig::ONE
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_int() {
            write!(f, "{}", self.0.numerator())
        } else {
            write!(f, "{}/{}", self.0.numerator(), self.0.denominator())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p`, `-p`, `p/q` and `-p/q` with decimal integers. No decimals.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a rational literal: {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = |t: &str, signed: bool| {
            let body = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
            !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
        };
        if !digits(num, true) {
            return Err(bad());
        }
        let num: IBig = num.parse().map_err(|_| bad())?;
        let den: UBig = match den {
            Some(d) if digits(d, false) => d.parse().map_err(|_| bad())?,
            Some(_) => return Err(bad()),
            None => UBig::ONE,
        };
        if den == UBig::ZERO {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(RBig::from_parts(num, den)))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }

        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }

        impl $assign_tr<&Rational> for Rational {
            fn $assign(&mut self, rhs: &Rational) {
                self.0.$assign(&rhs.0);
            }
        }

        impl $assign_tr for Rational {
            fn $assign(&mut self, rhs: Rational) {
                self.0.$assign(rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Exact binomial coefficient, zero when `j > n`.
pub fn binom(n: u32, j: u32) -> Rational {
    if j > n {
        return Rational::zero();
    }
    let j = j.min(n - j);
    let mut acc = UBig::ONE;
    for i in 0..j {
        acc = acc * UBig::from(n - i) / UBig::from(i + 1);
    }
    Rational(RBig::from(acc))
}

//! Truncated formal power series in `x` with [`MultiPoly`] coefficients.
//!
//! A [`Series`] of order `N` carries exactly the coefficients of
//! `x^0..=x^N`; everything above is unknown, not zero. Binary operations
//! keep the smaller order of their operands, and division by a series of
//! valuation `v` gives up `v` orders.

mod atoms;

pub use atoms::{polylog_of_one_minus_exp_neg, AtomSpec};

use crate::coeffring::{MultiPoly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Series {
    coeffs: Vec<MultiPoly>,
}

impl Series {
    /// Builds a series from exactly `order + 1` coefficients.
    pub fn new(order: usize, coeffs: Vec<MultiPoly>) -> Result<Series> {
        if coeffs.len() != order + 1 {
            return Err(Error::LengthMismatch {
                order,
                expected: order + 1,
                found: coeffs.len(),
            });
        }
        Ok(Series { coeffs })
    }

    pub(crate) fn from_coeffs(coeffs: Vec<MultiPoly>) -> Series {
        assert!(!coeffs.is_empty(), "a series has at least one coefficient");
        Series { coeffs }
    }

    pub fn from_rationals<I: IntoIterator<Item = Rational>>(coeffs: I) -> Series {
        Series::from_coeffs(coeffs.into_iter().map(MultiPoly::constant).collect())
    }

    /// The coefficients as rationals, if none of them involves a symbol.
    pub fn scalars(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(MultiPoly::as_constant).collect()
    }

    pub fn zero(order: usize) -> Series {
        Series::from_coeffs(vec![MultiPoly::zero(); order + 1])
    }

    pub fn one(order: usize) -> Series {
        Series::monomial(0, order)
    }

    /// `x^k` truncated at `order` (the zero series when `k > order`).
    pub fn monomial(k: usize, order: usize) -> Series {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = MultiPoly::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    /// Index of the first nonzero coefficient, `None` if all vanish.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<Series> {
        if order > self.order() {
            return Err(Error::InsufficientOrder {
                reached: self.order(),
                needed: order,
            });
        }
        Ok(Series::from_coeffs(self.coeffs[..=order].to_vec()))
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::from_coeffs(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn add(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series::from_coeffs((0..=order).map(|n| &self.coeffs[n] + &other.coeffs[n]).collect())
    }

    pub fn sub(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series::from_coeffs((0..=order).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect())
    }

    /// Cauchy product, truncated at the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        if let (Some(a), Some(b)) = (self.scalars(), other.scalars()) {
            let mut out = vec![Rational::zero(); order + 1];
            for (i, x) in a[..=order].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b[..=order - i].iter().enumerate() {
                    if !y.is_zero() {
                        out[i + j] += x * y;
                    }
                }
            }
            return Series::from_rationals(out);
        }
        let mut out = vec![MultiPoly::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (scalar_a, rest) = (a.as_constant(), order - i);
            for (j, b) in other.coeffs[..=rest].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                match (&scalar_a, b.as_constant()) {
                    (Some(ca), _) => out[i + j].add_scaled(b, ca),
                    (None, Some(cb)) => out[i + j].add_scaled(a, &cb),
                    (None, None) => out[i + j].add_product(a, b),
                }
            }
        }
        Series::from_coeffs(out)
    }

    /// Valuation-aware division `self / divisor`.
    ///
    /// With `v` the divisor's valuation, the quotient has order
    /// `min(self.order, divisor.order) − v`. The divisor's leading
    /// coefficient must be a rational constant.
    pub fn div(&self, divisor: &Series) -> Result<Series> {
        let v = divisor.valuation().ok_or(Error::ZeroDivisor)?;
        let lead = divisor.coeffs[v].as_constant().ok_or(Error::NonConstantUnit)?;
        let inv = lead.recip()?;
        if let Some(vf) = self.valuation() {
            if vf < v {
                return Err(Error::ValuationMismatch {
                    dividend: vf,
                    divisor: v,
                });
            }
        }
        let base = self.order().min(divisor.order());
        if base < v {
            return Err(Error::InsufficientOrder {
                reached: base,
                needed: v,
            });
        }
        let order = base - v;
        let mut q: Vec<MultiPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n + v].clone();
            for i in 1..=n {
                let d = &divisor.coeffs[v + i];
                if d.is_zero() || q[n - i].is_zero() {
                    continue;
                }
                match d.as_constant() {
                    Some(c) => acc.add_scaled(&q[n - i], &-c),
                    None => acc = &acc - &(d * &q[n - i]),
                }
            }
            q.push(acc.scale(&inv));
        }
        Ok(Series::from_coeffs(q))
    }

    /// `self^exp` by repeated squaring; `f^0 = 1`.
    pub fn pow(&self, exp: u32) -> Series {
        let mut acc = Series::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `Σ_j outer[j]·inner^j`, truncated at `inner.order()`.
    ///
    /// `inner` must have zero constant term so only `j ≤ order` contribute.
    pub fn compose(outer: &[Rational], inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = inner.order();
        let top = match outer.len() {
            0 => return Ok(Series::zero(order)),
            len => (len - 1).min(order),
        };
        // Horner: (((c_top)·g + c_{top−1})·g + …) + c_0
        let mut acc = Series::zero(order);
        for c in outer[..=top].iter().rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = &acc.coeffs[0] + &MultiPoly::constant(c.clone());
        }
        Ok(acc)
    }

    /// The family members `n!·[x^n]` for `n = 0..=order`.
    pub fn extract_sequence(&self) -> Vec<MultiPoly> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= Rational::from(n as i64);
                }
                c.scale(&fact)
            })
            .collect()
    }
}

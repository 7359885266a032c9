//! Dense truncated power series with exact integer coefficients.
//!
//! A [`Series`] of truncation order `N` stores the coefficients of
//! `z^0 ..= z^N`. Binary operations require both operands to carry the same
//! order and fail with [`Error::OrderMismatch`] otherwise; nothing is ever
//! re-truncated implicitly.

mod product;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Builds a series from its coefficient list; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument(
                "a series needs at least one coefficient".into(),
            ));
        }
        Ok(Series { coeffs })
    }

    /// Convenience constructor for small literal series.
    ///
    /// Panics if `coeffs` is empty.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Series {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn constant(c: impl Into<BigInt>, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c.into();
        s
    }

    /// The series `z`, truncated at `order` (which collapses to zero at order 0).
    pub fn variable(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = BigInt::from(1);
        }
        s
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&BigInt> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.truncation_order(),
        })
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::OrderMismatch {
                left: self.truncation_order(),
                right: other.truncation_order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Series { coeffs })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Series { coeffs })
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let coeffs = product::truncated_product(&self.coeffs, &other.coeffs, self.coeffs.len());
        Ok(Series { coeffs })
    }

    /// `self · factor(z^d)`, where `factor` is given at order `N / d` for
    /// `self` at order `N`. The coefficients of `self` are split by residue
    /// mod `d`, so every product runs at roughly `N / d` terms instead of
    /// through a stretched, mostly-zero operand.
    pub fn mul_stretched(&self, factor: &Series, d: usize) -> Result<Series> {
        if d == 0 {
            return Err(Error::InvalidStretch);
        }
        let order = self.truncation_order();
        if factor.truncation_order() != order / d {
            return Err(Error::OrderMismatch {
                left: order / d,
                right: factor.truncation_order(),
            });
        }
        if d == 1 {
            return self.mul(factor);
        }
        let mut out = Series::zero(order);
        for r in 0..d.min(order + 1) {
            let class: Vec<BigInt> = self.coeffs[r..].iter().step_by(d).cloned().collect();
            let len = class.len();
            let product = product::truncated_product(&class, &factor.coeffs, len);
            for (j, c) in product.into_iter().enumerate() {
                out.coeffs[r + j * d] = c;
            }
        }
        Ok(out)
    }

    /// Drops every coefficient above `order`.
    pub fn truncated(&self, order: usize) -> Result<Series> {
        if order > self.truncation_order() {
            return Err(Error::OrderMismatch {
                left: self.truncation_order(),
                right: order,
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Substitutes `z -> z^d`.
    pub fn stretch(&self, d: usize) -> Result<Series> {
        if d == 0 {
            return Err(Error::InvalidStretch);
        }
        if d == 1 {
            return Ok(self.clone());
        }
        let order = self.truncation_order();
        let mut out = Series::zero(order);
        for (n, c) in self.coeffs.iter().enumerate().take(order / d + 1) {
            out.coeffs[n * d] = c.clone();
        }
        Ok(out)
    }

    /// Multiplies by `z^d`, dropping whatever falls past the truncation order.
    pub fn shift(&self, d: usize) -> Series {
        let mut out = Series::zero(self.truncation_order());
        for (n, c) in self.coeffs.iter().enumerate() {
            match out.coeffs.get_mut(n + d) {
                Some(slot) => *slot = c.clone(),
                None => break,
            }
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Smallest exponent with a nonzero coefficient, if any.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let unit = mag == BigInt::from(1);
            match (n, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("z")?,
                (1, false) => write!(f, "{mag}z")?,
                (_, true) => write!(f, "z^{n}")?,
                (_, false) => write!(f, "{mag}z^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.coeffs.len())
    }
}

//! Power series truncated at a fixed degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{exact_string, is_zero, Scalar};

/// Coefficients `c_0 … c_D` of a series modulo `t^{D+1}`.
#[derive(Clone, PartialEq)]
pub struct SeriesTrunc<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> SeriesTrunc<S> {
    /// Pads or cuts `coeffs` to length `degree + 1`.
    pub fn new(mut coeffs: Vec<S>, degree: usize) -> Self {
        coeffs.resize(degree + 1, S::zero());
        SeriesTrunc { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], degree: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| S::of(c)).collect(), degree)
    }

    pub fn one(degree: usize) -> Self {
        Self::new(vec![S::one()], degree)
    }

    /// `1 / (1 − t)^k` expanded to `degree`.
    pub fn inverse_power_of_one_minus_t(k: u32, degree: usize) -> Self {
        Self::from_i64(&[1, -1], degree)
            .powi(-(k as i64))
            .expect("unit constant term")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    pub fn truncate(&self, degree: usize) -> Self {
        Self::new(self.coeffs.clone(), degree)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::Dimension(format!(
                "series truncated at {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(SeriesTrunc {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(SeriesTrunc {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        SeriesTrunc {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c).collect(),
        }
    }

    /// Cauchy product truncated at the common degree.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.degree();
        let mut out = vec![S::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                if !is_zero(b) {
                    out[i + j] += a.clone() * b;
                }
            }
        }
        Ok(SeriesTrunc { coeffs: out })
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        if is_zero(&self.coeffs[0]) {
            return Err(Error::InvalidArgument(
                "series with zero constant term is not invertible".into(),
            ));
        }
        let d = self.degree();
        let inv0 = S::one() / self.coeffs[0].clone();
        let mut out = vec![S::zero(); d + 1];
        out[0] = inv0.clone();
        for k in 1..=d {
            let mut acc = S::zero();
            for j in 1..=k {
                if !is_zero(&self.coeffs[j]) {
                    acc += self.coeffs[j].clone() * &out[k - j];
                }
            }
            out[k] = -(acc * &inv0);
        }
        Ok(SeriesTrunc { coeffs: out })
    }

    /// Integer power; negative exponents go through [`Self::inverse`].
    pub fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one(self.degree());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&sq)?;
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.multiply(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Substitutes `t → −t`.
    pub fn negate_variable(&self) -> Self {
        SeriesTrunc {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    /// Coefficients as integers, if they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<i128>> {
        self.coeffs.iter().map(|c| c.as_integer()).collect()
    }
}

/// Free function form of [`SeriesTrunc::multiply`].
pub fn series_multiply<S: Scalar>(
    a: &SeriesTrunc<S>,
    b: &SeriesTrunc<S>,
) -> Result<SeriesTrunc<S>> {
    a.multiply(b)
}

impl<S: Scalar> fmt::Debug for SeriesTrunc<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(exact_string).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.degree() + 1)
    }
}

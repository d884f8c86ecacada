//! Power series in an auxiliary variable `t`, truncated above a fixed degree.

use crate::intpoly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct TruncatedSeries {
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    /// The constant series `1`, keeping degrees `0..=max_degree`.
    pub(crate) fn one(max_degree: usize) -> TruncatedSeries {
        let mut coeffs = vec![Polynomial::zero(); max_degree + 1];
        coeffs[0] = Polynomial::one();
        TruncatedSeries { coeffs }
    }

    /// Builds a series from its leading coefficients, truncating the rest.
    pub(crate) fn from_coeffs(max_degree: usize, leading: Vec<Polynomial>) -> TruncatedSeries {
        let mut coeffs = leading;
        coeffs.resize(max_degree + 1, Polynomial::zero());
        coeffs.truncate(max_degree + 1);
        TruncatedSeries { coeffs }
    }

    pub(crate) fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub(crate) fn into_coefficient(mut self, k: usize) -> Polynomial {
        std::mem::take(&mut self.coeffs[k])
    }

    /// Full truncated product.
    pub(crate) fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let max = self.max_degree().min(other.max_degree());
        let mut coeffs = vec![Polynomial::zero(); max + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(max + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(max + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    /// In-place multiplication by `1 + c·t`.
    pub(crate) fn mul_linear(&mut self, c: &Polynomial) {
        for k in (1..self.coeffs.len()).rev() {
            if !self.coeffs[k - 1].is_zero() {
                let add = &self.coeffs[k - 1] * c;
                self.coeffs[k] += &add;
            }
        }
    }
}

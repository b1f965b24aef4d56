//! Power series in `u`, `v` truncated by total degree.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{Exp, LaurentPoly};

/// Power series known up to and including total degree `order`.
///
/// Terms carry only non-negative exponents with `p + q <= order`. Binary
/// operations return the smaller of the two orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: i64,
    terms: LaurentPoly,
}

impl TruncatedSeries {
    /// Truncates `poly` to `order`. Fails on negative exponents.
    pub fn from_poly(poly: &LaurentPoly, order: i64) -> Result<Self> {
        if !poly.is_polynomial() {
            return Err(Error::LaurentNotExpandable);
        }
        Ok(TruncatedSeries { order, terms: poly.truncate(order) })
    }

    pub fn zero(order: i64) -> Self {
        TruncatedSeries { order, terms: LaurentPoly::zero() }
    }

    pub fn one(order: i64) -> Self {
        TruncatedSeries { order, terms: LaurentPoly::one().truncate(order) }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn terms(&self) -> &LaurentPoly {
        &self.terms
    }

    pub fn into_terms(self) -> LaurentPoly {
        self.terms
    }

    pub fn coeff(&self, p: i64, q: i64) -> BigRational {
        self.terms.coeff(p, q)
    }

    /// Lowers the order; asking for a higher order than known is an error.
    pub fn truncate(&self, order: i64) -> Result<Self> {
        if order > self.order {
            return Err(Error::invariant(format!(
                "cannot raise series order from {} to {order}",
                self.order
            )));
        }
        Ok(TruncatedSeries { order, terms: self.terms.truncate(order) })
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        TruncatedSeries { order, terms: (&self.terms + &other.terms).truncate(order) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        TruncatedSeries { order, terms: (&self.terms - &other.terms).truncate(order) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        TruncatedSeries { order, terms: self.terms.mul_truncated(&other.terms, order) }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries { order: self.order, terms: self.terms.scale(c) }
    }

    /// Multiplies by `(uv)^k`, which makes the series known to `order + 2k`.
    pub fn shift_uv(&self, k: i64) -> Self {
        TruncatedSeries { order: self.order + 2 * k, terms: self.terms.mul_monomial(k, k) }
    }

    /// `(1 - u^a v^b) * self` at the same order.
    pub fn mul_binomial(&self, a: i64, b: i64) -> Self {
        let shifted = self.terms.mul_monomial(a, b).truncate(self.order);
        TruncatedSeries { order: self.order, terms: &self.terms - &shifted }
    }

    pub fn is_uv_symmetric(&self) -> bool {
        self.terms.is_uv_symmetric()
    }

    /// Coefficients that are negative or non-integral, if any.
    pub fn non_count_coefficients(&self) -> Vec<(Exp, BigRational)> {
        self.terms
            .terms()
            .filter(|(_, c)| !c.is_integer() || *c < &BigRational::zero())
            .map(|(e, c)| (e, c.clone()))
            .collect()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.terms, self.order + 1)
    }
}

/// Dense coefficient grid over `p + q <= order`, used for expansion.
pub(crate) struct Dense {
    order: i64,
    width: usize,
    cells: Vec<BigRational>,
}

impl Dense {
    pub(crate) fn from_poly(p: &LaurentPoly, order: i64) -> Self {
        let width = (order + 1) as usize;
        let mut cells = vec![BigRational::zero(); width * width];
        for (e, c) in p.terms() {
            if e.total() <= order {
                cells[e.p as usize * width + e.q as usize] = c.clone();
            }
        }
        Dense { order, width, cells }
    }

    /// In place `x <- x / (1 - u^a v^b)` by the geometric recurrence
    /// `y[p,q] = x[p,q] + y[p-a,q-b]`.
    pub(crate) fn divide_by_binomial(&mut self, a: i64, b: i64) {
        for p in a..=self.order {
            for q in b..=(self.order - p) {
                let src = (p - a) as usize * self.width + (q - b) as usize;
                if self.cells[src].is_zero() {
                    continue;
                }
                let add = self.cells[src].clone();
                self.cells[p as usize * self.width + q as usize] += add;
            }
        }
    }

    pub(crate) fn into_series(self) -> TruncatedSeries {
        let width = self.width;
        let order = self.order;
        let terms = LaurentPoly::from_terms(
            self.cells
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| ((i / width) as i64, (i % width) as i64, c))
                .filter(|(p, q, _)| p + q <= order),
        );
        TruncatedSeries { order, terms }
    }
}

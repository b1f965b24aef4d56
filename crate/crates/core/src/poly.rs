//! Sparse bivariate Laurent polynomials in `u`, `v` over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exponent pair of a monomial `u^p v^q`.
///
/// Ordered graded-lexicographically with `u > v`: first by total degree,
/// then by the `u` exponent. The same order drives display (ascending)
/// and long division (leading term = largest).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Exp {
    pub p: i64,
    pub q: i64,
}

impl Exp {
    pub const fn new(p: i64, q: i64) -> Self {
        Exp { p, q }
    }

    pub fn total(self) -> i64 {
        self.p + self.q
    }

    fn divides(self, other: Exp) -> bool {
        self.p <= other.p && self.q <= other.q
    }
}

impl Ord for Exp {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total(), self.p).cmp(&(other.total(), other.p))
    }
}

impl PartialOrd for Exp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Exp {
    type Output = Exp;
    fn add(self, rhs: Exp) -> Exp {
        Exp::new(self.p + rhs.p, self.q + rhs.q)
    }
}

impl Sub for Exp {
    type Output = Exp;
    fn sub(self, rhs: Exp) -> Exp {
        Exp::new(self.p - rhs.p, self.q - rhs.q)
    }
}

/// A finite sum of terms `c * u^p * v^q` with `p, q` arbitrary integers.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exp, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigRational, p: i64, q: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::new(p, q), c);
        }
        LaurentPoly { terms }
    }

    /// `u^p v^q` with coefficient one.
    pub fn mono(p: i64, q: i64) -> Self {
        Self::monomial(BigRational::one(), p, q)
    }

    pub fn u() -> Self {
        Self::mono(1, 0)
    }

    pub fn v() -> Self {
        Self::mono(0, 1)
    }

    /// `(uv)^k`.
    pub fn uv_pow(k: i64) -> Self {
        Self::mono(k, k)
    }

    /// `1 - u^a v^b`.
    pub fn binomial(a: i64, b: i64) -> Self {
        let mut out = Self::one();
        out.add_term(Exp::new(a, b), -BigRational::one());
        out
    }

    /// `1 + c * u^a v^b`.
    pub fn one_plus(c: i64, a: i64, b: i64) -> Self {
        let mut out = Self::one();
        out.add_term(Exp::new(a, b), rat(c));
        out
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, BigRational)>,
    {
        let mut out = Self::zero();
        for (p, q, c) in iter {
            out.add_term(Exp::new(p, q), c);
        }
        out
    }

    /// Builds from integer coefficients; handy in tests and closed forms.
    pub fn from_int_terms(terms: &[(i64, i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(p, q, c)| (p, q, rat(c))))
    }

    pub fn add_term(&mut self, e: Exp, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Terms in ascending graded order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exp, &BigRational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, p: i64, q: i64) -> BigRational {
        self.terms.get(&Exp::new(p, q)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest term in the graded order.
    pub fn leading(&self) -> Option<(Exp, &BigRational)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Componentwise minimum exponent, `(0, 0)` for the zero polynomial.
    pub fn min_exponents(&self) -> Exp {
        let mut it = self.terms.keys();
        match it.next() {
            None => Exp::new(0, 0),
            Some(first) => it.fold(*first, |acc, e| Exp::new(acc.p.min(e.p), acc.q.min(e.q))),
        }
    }

    pub fn max_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.total()).max()
    }

    /// No negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.p >= 0 && e.q >= 0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Invariant under `u <-> v`.
    pub fn is_uv_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&Exp::new(e.q, e.p)) == Some(c))
    }

    pub fn swap_uv(&self) -> Self {
        self.map_exponents(|e| Exp::new(e.q, e.p))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, p: i64, q: i64) -> Self {
        let shift = Exp::new(p, q);
        self.map_exponents(|e| e + shift)
    }

    /// Keeps only terms of total degree at most `order`.
    pub fn truncate(&self, order: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.total() <= order)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    fn map_exponents(&self, f: impl Fn(Exp) -> Exp) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(f(*e), c.clone());
        }
        out
    }

    /// Product keeping only terms with total degree `<= order`.
    pub fn mul_truncated(&self, other: &Self, order: i64) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = *ea + *eb;
                if e.total() <= order {
                    out.add_term(e, ca * cb);
                }
            }
        }
        out
    }

    /// Integer power. Negative powers exist only for monomials, the units
    /// of the Laurent ring.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            if self.len() != 1 {
                return Err(Error::NotInvertible(self.clone()));
            }
            let (e, c) = self.leading().expect("one term");
            let inv = LaurentPoly::monomial(c.recip(), -e.p, -e.q);
            return inv.pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Non-negative power; never fails.
    pub fn powu(&self, k: u32) -> Self {
        self.pow(i64::from(k)).expect("non-negative power")
    }

    /// `(uv)^dim * p(1/u, 1/v)`: the duality involution.
    pub fn dual_substitute(&self, dim: i64) -> Self {
        self.map_exponents(|e| Exp::new(dim - e.p, dim - e.q))
    }

    /// `p(-u^2, -v^2)`.
    pub fn negate_square_substitute(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let c = if (e.p + e.q) % 2 == 0 { c.clone() } else { -c };
            out.add_term(Exp::new(2 * e.p, 2 * e.q), c);
        }
        out
    }

    /// `p(t, t)`.
    pub fn specialize_diagonal(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(e.total(), c.clone());
        }
        out
    }

    /// Exact quotient `num / den`, failing with the remainder if `den`
    /// does not divide `num`.
    pub fn exact_divide(num: &Self, den: &Self) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        // Clear monomial content so both sides are honest polynomials; a
        // Laurent quotient exists iff the polynomial quotient does.
        let ns = num.min_exponents();
        let ds = den.min_exponents();
        let mut rem = num.mul_monomial(-ns.p, -ns.q);
        let den = den.mul_monomial(-ds.p, -ds.q);
        let (lead_e, lead_c) = {
            let (e, c) = den.leading().expect("nonzero");
            (e, c.clone())
        };
        let mut quot = Self::zero();
        let mut remainder = Self::zero();
        while let Some((e, c)) = rem.leading() {
            let c = c.clone();
            if lead_e.divides(e) {
                let shift = e - lead_e;
                let t = &c / &lead_c;
                for (de, dc) in &den.terms {
                    rem.add_term(*de + shift, -(dc * &t));
                }
                quot.add_term(shift, t);
            } else {
                rem.add_term(e, -c.clone());
                remainder.add_term(e, c);
            }
        }
        if !remainder.is_zero() {
            return Err(Error::InexactDivision {
                remainder: remainder.mul_monomial(ns.p, ns.q),
            });
        }
        Ok(quot.mul_monomial(ns.p - ds.p, ns.q - ds.q))
    }

    /// Evaluates at rational `(u, v)`; only for polynomials (no negative
    /// exponents) or nonzero arguments.
    pub fn eval(&self, u: &BigRational, v: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            acc += c * pow_rat(u, e.p) * pow_rat(v, e.q);
        }
        acc
    }
}

fn pow_rat(x: &BigRational, k: i64) -> BigRational {
    if k >= 0 {
        num_traits::pow(x.clone(), k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-BigRational::one())
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(*ea + *eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, var: &str, k: i64, first: &mut bool) -> fmt::Result {
    if k == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    if k == 1 {
        write!(f, "{var}")
    } else {
        write!(f, "{var}^{k}")
    }
}

fn write_term(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    vars: &[(&str, i64)],
    leading: bool,
) -> fmt::Result {
    let mag = c.abs();
    match (leading, c.is_negative()) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    let is_const = vars.iter().all(|(_, k)| *k == 0);
    let mut first = true;
    if is_const || !mag.is_one() {
        write!(f, "{mag}")?;
        first = false;
    }
    for (var, k) in vars {
        write_monomial(f, var, *k, &mut first)?;
    }
    Ok(())
}

/// Canonical text: terms ascending by `(p+q, p)`, e.g. `1 + 2*u*v + u^2*v^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            write_term(f, c, &[("u", e.p), ("v", e.q)], i == 0)?;
        }
        Ok(())
    }
}

/// Univariate Laurent polynomial in `t`, the image of `u = v = t`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct UniPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out.add_term(k as i64, rat(*c));
        }
        out
    }

    pub fn add_term(&mut self, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn coeff(&self, k: i64) -> BigRational {
        self.terms.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            write_term(f, c, &[("t", *k)], i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms)
    }

    #[test]
    fn distributivity_example() {
        let a = LaurentPoly::one_plus(1, 1, 0);
        let b = LaurentPoly::one_plus(1, 0, 1);
        assert_eq!(&a * &b, p(&[(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]));
    }

    #[test]
    fn cube_of_one_plus_u() {
        let a = LaurentPoly::one_plus(1, 1, 0);
        assert_eq!(a.powu(3), p(&[(0, 0, 1), (1, 0, 3), (2, 0, 3), (3, 0, 1)]));
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = p(&[(0, 0, 3), (2, -1, -7), (4, 4, 1)]);
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn negative_power_of_non_unit_fails() {
        let a = LaurentPoly::one_plus(1, 1, 0);
        match a.pow(-1) {
            Err(e @ Error::NotInvertible(_)) => {
                assert!(e.to_string().contains("not invertible as polynomial"))
            }
            other => panic!("{other:?}"),
        }
        let m = LaurentPoly::monomial(rat(2), 1, -2);
        let inv = m.pow(-2).unwrap();
        assert!((&inv * &m.powu(2)) == LaurentPoly::one());
    }

    #[test]
    fn divide_difference_of_squares() {
        let q = LaurentPoly::exact_divide(&LaurentPoly::binomial(2, 2), &LaurentPoly::binomial(1, 1))
            .unwrap();
        assert_eq!(q, LaurentPoly::one_plus(1, 1, 1));
    }

    #[test]
    fn divide_unequal_variables_reports_remainder() {
        let err = LaurentPoly::exact_divide(&LaurentPoly::one_plus(1, 1, 0), &LaurentPoly::one_plus(1, 0, 1))
            .unwrap_err();
        match err {
            Error::InexactDivision { remainder } => assert!(!remainder.is_zero()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn divide_with_laurent_shift() {
        let den = LaurentPoly::binomial(1, 1).mul_monomial(-1, 0);
        let quo = p(&[(-2, 3, 1), (0, 0, 5)]);
        let num = &quo * &den;
        assert_eq!(LaurentPoly::exact_divide(&num, &den).unwrap(), quo);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(LaurentPoly::one().dual_substitute(1), LaurentPoly::uv_pow(1));
        let jac = &LaurentPoly::one_plus(1, 1, 0) * &LaurentPoly::one_plus(1, 0, 1);
        assert_eq!(jac.dual_substitute(1), jac);
    }

    #[test]
    fn negate_square_examples() {
        assert_eq!(LaurentPoly::one_plus(1, 1, 0).negate_square_substitute(), LaurentPoly::one_plus(-1, 2, 0));
        assert_eq!(LaurentPoly::uv_pow(1).negate_square_substitute(), LaurentPoly::uv_pow(2));
        assert_eq!(
            LaurentPoly::one_plus(1, 1, 0).powu(2).negate_square_substitute(),
            p(&[(0, 0, 1), (2, 0, -2), (4, 0, 1)])
        );
    }

    #[test]
    fn diagonal_examples() {
        let jac = &LaurentPoly::one_plus(1, 1, 0) * &LaurentPoly::one_plus(1, 0, 1);
        assert_eq!(jac.specialize_diagonal(), UniPoly::from_int_coeffs(&[1, 2, 1]));
        assert!((&LaurentPoly::u() - &LaurentPoly::v()).specialize_diagonal().is_zero());
        let x = p(&[(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
        assert_eq!(x.specialize_diagonal(), UniPoly::from_int_coeffs(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn canonical_text() {
        let x = p(&[(2, 2, 1), (0, 0, 1), (1, 1, 2)]);
        assert_eq!(x.to_string(), "1 + 2*u*v + u^2*v^2");
        let y = LaurentPoly::from_terms([(0, 1, rat(-1)), (1, 0, BigRational::new(1.into(), 2.into()))]);
        assert_eq!(y.to_string(), "-v + 1/2*u");
        assert_eq!(LaurentPoly::mono(-1, 0).to_string(), "u^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}

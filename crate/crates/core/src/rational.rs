//! Rational functions whose denominators are products of binomials
//! `(1 - u^a v^b)^k`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::series::TruncatedSeries;

/// One denominator factor `(1 - u^a v^b)^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    pub a: i64,
    pub b: i64,
    pub k: i64,
}

impl Binomial {
    pub fn new(a: i64, b: i64, k: i64) -> Result<Self> {
        if a <= 0 || b <= 0 || k <= 0 {
            return Err(Error::BadDenominator { a, b, k });
        }
        Ok(Binomial { a, b, k })
    }
}

/// `scalar * numerator / prod (1 - u^a v^b)^k`.
///
/// Every denominator factor has constant term one, so the value is a
/// formal power series whenever the numerator is a polynomial. Equality
/// is decided by cross-multiplication; no canonical form is computed.
#[derive(Debug, Clone)]
pub struct FactoredRational {
    scalar: BigRational,
    numerator: LaurentPoly,
    /// `(a, b) -> k`.
    denominator: BTreeMap<(i64, i64), i64>,
}

impl FactoredRational {
    pub fn new(numerator: LaurentPoly, factors: &[(i64, i64, i64)], scalar: BigRational) -> Result<Self> {
        let mut denominator = BTreeMap::new();
        for &(a, b, k) in factors {
            let f = Binomial::new(a, b, k)?;
            *denominator.entry((f.a, f.b)).or_insert(0) += f.k;
        }
        Ok(FactoredRational { scalar, numerator, denominator })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        FactoredRational {
            scalar: BigRational::one(),
            numerator: p,
            denominator: BTreeMap::new(),
        }
    }

    /// `1 / prod (1 - u^a v^b)^k`.
    pub fn inverse_of(factors: &[(i64, i64, i64)]) -> Result<Self> {
        Self::new(LaurentPoly::one(), factors, BigRational::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    /// Denominator factors in sorted order.
    pub fn factors(&self) -> Vec<Binomial> {
        self.denominator
            .iter()
            .map(|(&(a, b), &k)| Binomial { a, b, k })
            .collect()
    }

    /// The denominator multiplied out.
    pub fn denominator_poly(&self) -> LaurentPoly {
        expand_factors(&self.denominator)
    }

    /// `scalar * numerator` as one polynomial.
    pub fn scaled_numerator(&self) -> LaurentPoly {
        self.numerator.scale(&self.scalar)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        FactoredRational {
            scalar: &self.scalar * c,
            numerator: self.numerator.clone(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        FactoredRational {
            scalar: self.scalar.clone(),
            numerator: &self.numerator * p,
            denominator: self.denominator.clone(),
        }
    }

    pub fn mul_monomial(&self, p: i64, q: i64) -> Self {
        FactoredRational {
            scalar: self.scalar.clone(),
            numerator: self.numerator.mul_monomial(p, q),
            denominator: self.denominator.clone(),
        }
    }

    /// Cancels every copy of `(1 - u^a v^b)` we can; returns the number
    /// removed. Used to simplify after multiplying by a binomial.
    pub fn cancel_factor(&mut self, a: i64, b: i64) -> i64 {
        let mut removed = 0;
        let binom = LaurentPoly::binomial(a, b);
        while let Some(k) = self.denominator.get(&(a, b)).copied() {
            match LaurentPoly::exact_divide(&self.numerator, &binom) {
                Ok(q) => {
                    self.numerator = q;
                    if k == 1 {
                        self.denominator.remove(&(a, b));
                    } else {
                        self.denominator.insert((a, b), k - 1);
                    }
                    removed += 1;
                }
                Err(_) => break,
            }
        }
        removed
    }

    /// The value as a Laurent polynomial, if the denominator divides out.
    pub fn to_laurent_poly(&self) -> Result<LaurentPoly> {
        LaurentPoly::exact_divide(&self.scaled_numerator(), &self.denominator_poly())
    }

    /// Exact equality by cross-multiplying over the uncommon factors.
    pub fn equals(&self, other: &Self) -> bool {
        self.difference_residual(other).is_zero()
    }

    /// `self.num * other.den - other.num * self.den` after removing the
    /// common part of the two denominators; zero iff the values agree.
    pub fn difference_residual(&self, other: &Self) -> LaurentPoly {
        let (only_self, only_other) = split_uncommon(&self.denominator, &other.denominator);
        let lhs = &self.scaled_numerator() * &expand_factors(&only_other);
        let rhs = &other.scaled_numerator() * &expand_factors(&only_self);
        &lhs - &rhs
    }

    /// Formal expansion up to total degree `order`.
    pub fn series_expand(&self, order: i64) -> Result<TruncatedSeries> {
        if !self.numerator.is_polynomial() {
            return Err(Error::LaurentNotExpandable);
        }
        let order = order.max(0);
        let mut dense = crate::series::Dense::from_poly(&self.scaled_numerator(), order);
        for (&(a, b), &k) in &self.denominator {
            for _ in 0..k {
                dense.divide_by_binomial(a, b);
            }
        }
        Ok(dense.into_series())
    }

    pub fn is_uv_symmetric(&self) -> bool {
        let swapped = FactoredRational {
            scalar: self.scalar.clone(),
            numerator: self.numerator.swap_uv(),
            denominator: self.denominator.iter().map(|(&(a, b), &k)| ((b, a), k)).collect(),
        };
        self.equals(&swapped)
    }
}

fn expand_factors(den: &BTreeMap<(i64, i64), i64>) -> LaurentPoly {
    den.iter().fold(LaurentPoly::one(), |acc, (&(a, b), &k)| {
        &acc * &LaurentPoly::binomial(a, b).powu(k as u32)
    })
}

type FactorMap = BTreeMap<(i64, i64), i64>;

fn split_uncommon(x: &FactorMap, y: &FactorMap) -> (FactorMap, FactorMap) {
    let mut only_x = FactorMap::new();
    let mut only_y = FactorMap::new();
    for (key, &kx) in x {
        let ky = y.get(key).copied().unwrap_or(0);
        if kx > ky {
            only_x.insert(*key, kx - ky);
        }
    }
    for (key, &ky) in y {
        let kx = x.get(key).copied().unwrap_or(0);
        if ky > kx {
            only_y.insert(*key, ky - kx);
        }
    }
    (only_x, only_y)
}

fn combine(x: &FactoredRational, y: &FactoredRational, sign: i64) -> FactoredRational {
    let mut common = x.denominator.clone();
    for (key, &k) in &y.denominator {
        let slot = common.entry(*key).or_insert(0);
        *slot = (*slot).max(k);
    }
    let (_, x_missing) = split_uncommon(&x.denominator, &common);
    let (_, y_missing) = split_uncommon(&y.denominator, &common);
    let (scalar, xs, ys) = if x.scalar == y.scalar {
        (x.scalar.clone(), x.numerator.clone(), y.numerator.clone())
    } else {
        (BigRational::one(), x.scaled_numerator(), y.scaled_numerator())
    };
    let xs = &xs * &expand_factors(&x_missing);
    let ys = &ys * &expand_factors(&y_missing);
    let numerator = if sign >= 0 { &xs + &ys } else { &xs - &ys };
    FactoredRational { scalar, numerator, denominator: common }
}

impl Add<&FactoredRational> for &FactoredRational {
    type Output = FactoredRational;
    fn add(self, rhs: &FactoredRational) -> FactoredRational {
        combine(self, rhs, 1)
    }
}

impl Sub<&FactoredRational> for &FactoredRational {
    type Output = FactoredRational;
    fn sub(self, rhs: &FactoredRational) -> FactoredRational {
        combine(self, rhs, -1)
    }
}

impl Neg for &FactoredRational {
    type Output = FactoredRational;
    fn neg(self) -> FactoredRational {
        self.scale(&-BigRational::one())
    }
}

impl Mul<&FactoredRational> for &FactoredRational {
    type Output = FactoredRational;
    fn mul(self, rhs: &FactoredRational) -> FactoredRational {
        let mut denominator = self.denominator.clone();
        for (key, &k) in &rhs.denominator {
            *denominator.entry(*key).or_insert(0) += k;
        }
        FactoredRational {
            scalar: &self.scalar * &rhs.scalar,
            numerator: &self.numerator * &rhs.numerator,
            denominator,
        }
    }
}

impl PartialEq for FactoredRational {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

/// Factored text form, e.g. `1/2 * (1 + u) / ((1-u*v)^2*(1-u^2*v^2))`.
impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.scalar.is_one() {
            write!(f, "{} * ", self.scalar)?;
        }
        if self.denominator.is_empty() {
            if self.scalar.is_one() {
                return write!(f, "{}", self.numerator);
            }
            return write!(f, "({})", self.numerator);
        }
        if self.numerator.len() > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        write!(f, " / (")?;
        for (i, (&(a, b), &k)) in self.denominator.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "(1-{})", LaurentPoly::mono(a, b))?;
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        write!(f, ")")
    }
}

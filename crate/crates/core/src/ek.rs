//! Equivariant Hodge-Poincare series of the semistable locus by the
//! Harder-Narasimhan recursion, and its rank-2 closed form.

use std::collections::HashMap;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hn::{check_genus, enumerate_hn_types};
use crate::poly::{Exp, LaurentPoly};
use crate::rational::FactoredRational;
use crate::series::TruncatedSeries;

/// Memo key: the series depends on the degree only modulo the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SsKey {
    pub rank: i64,
    pub degree_residue: i64,
    pub genus: i64,
}

impl SsKey {
    pub fn new(rank: i64, degree: i64, genus: i64) -> Self {
        SsKey { rank, degree_residue: degree.rem_euclid(rank), genus }
    }
}

/// Run statistics reported next to a computed series.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SsStats {
    pub memo_hits: u64,
    pub memo_misses: u64,
    /// HN types summed over, across all recursion levels.
    pub types_used: u64,
}

/// Memoizing evaluator for the recursion. One instance per worker; the
/// results do not depend on how the memo was filled.
#[derive(Debug, Default)]
pub struct SsRecursion {
    memo: HashMap<SsKey, TruncatedSeries>,
    use_memo: bool,
    stats: SsStats,
}

impl SsRecursion {
    pub fn new() -> Self {
        SsRecursion { memo: HashMap::new(), use_memo: true, stats: SsStats::default() }
    }

    /// Evaluator that recomputes every subproblem.
    pub fn without_memo() -> Self {
        SsRecursion { use_memo: false, ..Self::new() }
    }

    pub fn stats(&self) -> &SsStats {
        &self.stats
    }

    pub fn series(&mut self, n: i64, d: i64, g: i64, order: i64) -> Result<TruncatedSeries> {
        check_genus(g, 2)?;
        if n < 1 {
            return Err(Error::BadRank(n));
        }
        self.eval(n, d, g, order.max(0))
    }

    // The memo is keyed by `d mod n`; without it every call works with the
    // actual degree, which keeps degree-shift invariance a real check.
    fn eval(&mut self, n: i64, d: i64, g: i64, order: i64) -> Result<TruncatedSeries> {
        let key = SsKey::new(n, d, g);
        if self.use_memo {
            if let Some(s) = self.memo.get(&key) {
                if s.order() >= order {
                    self.stats.memo_hits += 1;
                    return s.truncate(order);
                }
            }
        }
        self.stats.memo_misses += 1;
        let mut acc = leading_term(n, g)?.series_expand(order)?;
        // (uv)^c shifts total degree by 2c, so only types with 2c <= order
        // matter and their factors are needed to order - 2c.
        for (t, c) in enumerate_hn_types(n, d, g, order / 2)? {
            self.stats.types_used += 1;
            let inner = order - 2 * c;
            let mut prod = TruncatedSeries::one(inner);
            for q in &t.quotients {
                let s = self.eval(q.rank, q.degree, g, inner)?;
                prod = prod.mul(&s);
            }
            acc = acc.sub(&prod.shift_uv(c));
        }
        if self.use_memo {
            self.memo.insert(key, acc.clone());
        }
        Ok(acc)
    }
}

/// `prod_{l=1}^n (1 + u^l v^{l-1})^g (1 + u^{l-1} v^l)^g
///   / ((1 - u^n v^n) prod_{l=1}^{n-1} (1 - u^l v^l)^2)`.
pub fn leading_term(n: i64, g: i64) -> Result<FactoredRational> {
    let mut num = LaurentPoly::one();
    for l in 1..=n {
        let a = LaurentPoly::one_plus(1, l, l - 1).powu(g as u32);
        let b = LaurentPoly::one_plus(1, l - 1, l).powu(g as u32);
        num = &(&num * &a) * &b;
    }
    let mut factors = vec![(n, n, 1)];
    factors.extend((1..n).map(|l| (l, l, 2)));
    FactoredRational::new(num, &factors, BigRational::one())
}

/// Result of [`hp_ss_series`] with its bookkeeping.
#[derive(Debug, Clone)]
pub struct SsReport {
    pub series: TruncatedSeries,
    pub rank: i64,
    pub degree: i64,
    pub genus: i64,
    /// `p = d + n(1 - g)`; informational only.
    pub p: i64,
    pub stats: SsStats,
    /// Coefficients that are not non-negative integers.
    pub violations: Vec<(Exp, BigRational)>,
}

/// Semistable series for rank `n`, degree `d`, genus `g`, to total degree
/// `order`.
pub fn hp_ss_series(n: i64, d: i64, g: i64, order: i64) -> Result<TruncatedSeries> {
    SsRecursion::new().series(n, d, g, order)
}

/// Like [`hp_ss_series`] but also reports statistics and any coefficient
/// that fails to be a non-negative integer.
pub fn hp_ss_report(n: i64, d: i64, g: i64, order: i64) -> Result<SsReport> {
    let mut rec = SsRecursion::new();
    let series = rec.series(n, d, g, order)?;
    let violations = series.non_count_coefficients();
    Ok(SsReport {
        series,
        rank: n,
        degree: d,
        genus: g,
        p: d + n * (1 - g),
        stats: rec.stats().clone(),
        violations,
    })
}

/// Rank 2, even degree:
/// `[(1+u)^g(1+v)^g(1+u^2v)^g(1+uv^2)^g - (uv)^{g+1}(1+u)^{2g}(1+v)^{2g}]
///   / ((1 - u^2v^2)(1 - uv)^2)`.
pub fn hp_ss_rank2_closed_form(g: i64) -> Result<FactoredRational> {
    check_genus(g, 2)?;
    let gu = g as u32;
    let jac = crate::hodge::hp_jacobian(g)?;
    let twisted = &LaurentPoly::one_plus(1, 2, 1).powu(gu) * &LaurentPoly::one_plus(1, 1, 2).powu(gu);
    let num = &(&jac * &twisted) - &(&jac * &jac).mul_monomial(g + 1, g + 1);
    FactoredRational::new(num, &[(2, 2, 1), (1, 1, 2)], BigRational::one())
}

/// `HP` of the moduli space of stable bundles when `gcd(n, d) = 1`:
/// `(1 - uv)` times the semistable series, certified to terminate.
pub fn stable_coprime_polynomial(n: i64, d: i64, g: i64) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    if n < 1 {
        return Err(Error::BadRank(n));
    }
    if n.gcd(&d) != 1 {
        return Err(Error::NotCoprime { rank: n, degree: d });
    }
    let top = 2 * (n * n * (g - 1) + 1);
    let order = top + 2;
    let series = hp_ss_series(n, d, g, order)?.mul_binomial(1, 1);
    let tail: Vec<_> = series.terms().terms().filter(|(e, _)| e.total() > top).collect();
    if !tail.is_empty() {
        return Err(Error::invariant(format!(
            "series does not terminate at total degree {top}: {} nonzero terms beyond",
            tail.len()
        )));
    }
    Ok(series.into_terms())
}

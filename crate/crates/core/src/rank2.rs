//! Rank 2, even degree: subtract the deeper strata from the semistable
//! series to get the polynomials of the stable locus.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::beta::{index_set, sl2_adjoint_system, stratum_codim, torus_pm2_system, z_dimension};
use crate::ek::hp_ss_rank2_closed_form;
use crate::error::{Error, Result};
use crate::hn::{check_genus, codim_deeper_stratum, ReductiveClass};
use crate::hodge::{hp_bgl, hp_jacobian, hp_nt_zts, hp_plusminus_jac_pair};
use crate::poly::LaurentPoly;
use crate::rational::FactoredRational;
use crate::series::TruncatedSeries;

/// A stratum of the semistable locus: its complex codimension and its
/// equivariant Hodge-Poincare series.
#[derive(Debug, Clone, Serialize)]
pub struct StratumRecord {
    pub label: String,
    pub codim: i64,
    pub contribution: FactoredRational,
}

/// Complex dimension of the moduli space of rank `n` bundles.
pub fn moduli_dimension(n: i64, g: i64) -> i64 {
    n * n * (g - 1) + 1
}

fn cross_check(what: &str, a: i64, b: i64) -> Result<()> {
    if a != b {
        return Err(Error::invariant(format!("{what}: {a} != {b}")));
    }
    Ok(())
}

fn check_equal(what: String, a: &FactoredRational, b: &FactoredRational) -> Result<()> {
    let residual = a.difference_residual(b);
    if !residual.is_zero() {
        return Err(Error::Mismatch { what, residual });
    }
    Ok(())
}

/// `HP(BT) = 1 / (1 - uv)^2`.
fn hp_bt() -> FactoredRational {
    FactoredRational::inverse_of(&[(1, 1, 2)]).expect("valid factors")
}

/// The split locus `L (+) L`: `HP(BGL(2)) HP(Jac)` in codimension `3g`.
pub fn stratum_gl2(g: i64) -> Result<StratumRecord> {
    check_genus(g, 2)?;
    let codim = 3 * g;
    cross_check(
        "codim of GL(2) stratum",
        codim,
        codim_deeper_stratum(&ReductiveClass::new(&[(2, 1)]), 2, g)?,
    )?;
    let contribution = hp_bgl(2)?.mul_poly(&hp_jacobian(g)?);
    Ok(StratumRecord { label: "GL(2)".into(), codim, contribution })
}

/// Non-split extensions of `L` by `L`:
/// `(1 - (uv)^g) (1+u)^g (1+v)^g / (1 - uv)^2` in codimension `2g - 1`.
pub fn stratum_beta1(g: i64) -> Result<StratumRecord> {
    check_genus(g, 2)?;
    let ws = sl2_adjoint_system(g as u32);
    let idx = index_set(&ws)?;
    if idx.len() != 1 {
        return Err(Error::invariant(format!("adjoint SL(2) system has {} unstable indices", idx.len())));
    }
    let codim = 2 * g - 1;
    cross_check("codim of beta stratum over GL(2)", codim, stratum_codim(&ws, &idx[0]))?;
    let jac = hp_jacobian(g)?;
    let contribution = FactoredRational::new(&LaurentPoly::binomial(g, g) * &jac, &[(1, 1, 2)], BigRational::one())?;
    // HP_{N cap Stab beta}(Z^s) (1 - (uv)^{z+1}) with z read off the weights
    let z = z_dimension(&ws, &idx[0]);
    let fixed_locus = hp_bt().mul_poly(&jac).mul_poly(&LaurentPoly::binomial(z + 1, z + 1));
    check_equal(format!("beta stratum over GL(2) vs fixed-locus form, g = {g}"), &contribution, &fixed_locus)?;
    Ok(StratumRecord { label: "GL(2),beta".into(), codim, contribution })
}

/// The split locus `L1 (+) L2`, `L1 != L2`: `HP_{N(T)}(Z_T^s)` in
/// codimension `2g - 2`.
pub fn stratum_t(g: i64) -> Result<StratumRecord> {
    check_genus(g, 2)?;
    let codim = 2 * g - 2;
    cross_check(
        "codim of T stratum",
        codim,
        codim_deeper_stratum(&ReductiveClass::new(&[(1, 1), (1, 1)]), 2, g)?,
    )?;
    Ok(StratumRecord { label: "T".into(), codim, contribution: hp_nt_zts(g)? })
}

/// Non-split extensions of `L2` by `L1`, `L1 != L2`:
/// `(1 - (uv)^{g-1}) [J^2 - (uv)^g J] / (1 - uv)^2` in codimension `g - 1`.
pub fn stratum_beta2(g: i64) -> Result<StratumRecord> {
    check_genus(g, 2)?;
    let ws = torus_pm2_system(g as u32);
    let idx = index_set(&ws)?;
    if idx.len() != 1 {
        return Err(Error::invariant(format!("torus system has {} unstable indices", idx.len())));
    }
    let codim = g - 1;
    cross_check("codim of beta stratum over T", codim, stratum_codim(&ws, &idx[0]))?;
    let jac = hp_jacobian(g)?;
    let off_diagonal = &(&jac * &jac) - &jac.mul_monomial(g, g);
    let (plus, minus) = hp_plusminus_jac_pair(g)?;
    if &plus + &minus != off_diagonal {
        return Err(Error::Mismatch {
            what: format!("HP^+ + HP^- vs HP(Jac x Jac minus diagonal), g = {g}"),
            residual: &(&plus + &minus) - &off_diagonal,
        });
    }
    let contribution = FactoredRational::new(
        &LaurentPoly::binomial(g - 1, g - 1) * &off_diagonal,
        &[(1, 1, 2)],
        BigRational::one(),
    )?;
    let z = z_dimension(&ws, &idx[0]);
    let fixed_locus = hp_bt().mul_poly(&off_diagonal).mul_poly(&LaurentPoly::binomial(z + 1, z + 1));
    check_equal(format!("beta stratum over T vs fixed-locus form, g = {g}"), &contribution, &fixed_locus)?;
    Ok(StratumRecord { label: "T,beta".into(), codim, contribution })
}

/// The four strata in blow-up order.
pub fn rank2_strata(g: i64) -> Result<Vec<StratumRecord>> {
    Ok(vec![stratum_gl2(g)?, stratum_beta1(g)?, stratum_t(g)?, stratum_beta2(g)?])
}

/// `ss - sum (uv)^codim * contribution` over a common factored denominator.
pub fn assemble_stable_hp(ss: &FactoredRational, strata: &[StratumRecord]) -> Result<FactoredRational> {
    let mut acc = ss.clone();
    for s in strata {
        if s.codim <= 0 {
            return Err(Error::NonPositiveCodim { label: s.label.clone(), codim: s.codim });
        }
        acc = &acc - &s.contribution.mul_monomial(s.codim, s.codim);
    }
    Ok(acc)
}

/// Truncated-series analogue of [`assemble_stable_hp`], for an `ss` input
/// known only to some order.
pub fn assemble_stable_series(ss: &TruncatedSeries, strata: &[StratumRecord]) -> Result<TruncatedSeries> {
    let order = ss.order();
    let mut acc = ss.clone();
    for s in strata {
        if s.codim <= 0 {
            return Err(Error::NonPositiveCodim { label: s.label.clone(), codim: s.codim });
        }
        let inner = order - 2 * s.codim;
        if inner < 0 {
            continue;
        }
        acc = acc.sub(&s.contribution.series_expand(inner)?.shift_uv(s.codim));
    }
    Ok(acc)
}

/// `[2 J (1+u^2v)^g (1+uv^2)^g - (uv)^{g-1} J^2 (2 - (uv)^{g-1} + (uv)^{g+1})
///   - (uv)^{2g-2} (1-u^2)^g (1-v^2)^g (1-uv)^2] / (2 (1-uv)(1-u^2v^2))`.
pub fn hp_stable_rank2_closed_form(g: i64) -> Result<FactoredRational> {
    let gu = g as u32;
    let jac = hp_jacobian(g)?;
    let twisted = &LaurentPoly::one_plus(1, 2, 1).powu(gu) * &LaurentPoly::one_plus(1, 1, 2).powu(gu);
    let neg = &LaurentPoly::one_plus(-1, 2, 0).powu(gu) * &LaurentPoly::one_plus(-1, 0, 2).powu(gu);
    let jac2 = &jac * &jac;
    let mut bracket = LaurentPoly::constant(BigRational::from_integer(2.into()));
    bracket -= &LaurentPoly::uv_pow(g - 1);
    bracket += &LaurentPoly::uv_pow(g + 1);
    let t1 = (&jac * &twisted).scale(&BigRational::from_integer(2.into()));
    let t2 = (&jac2 * &bracket).mul_monomial(g - 1, g - 1);
    let t3 = (&neg * &LaurentPoly::binomial(1, 1).powu(2)).mul_monomial(2 * g - 2, 2 * g - 2);
    let num = &(&t1 - &t2) - &t3;
    FactoredRational::new(num, &[(1, 1, 1), (2, 2, 1)], BigRational::new(1.into(), 2.into()))
}

/// `[2 J (1+u^2v)^g (1+uv^2)^g - J^2 (1 + 2(uv)^{g+1} - u^2v^2)
///   - (1-u^2)^g (1-v^2)^g (1-uv)^2] / (2 (1-uv)(1-u^2v^2))`.
pub fn hd_stable_rank2_closed_form(g: i64) -> Result<FactoredRational> {
    let gu = g as u32;
    let jac = hp_jacobian(g)?;
    let twisted = &LaurentPoly::one_plus(1, 2, 1).powu(gu) * &LaurentPoly::one_plus(1, 1, 2).powu(gu);
    let neg = &LaurentPoly::one_plus(-1, 2, 0).powu(gu) * &LaurentPoly::one_plus(-1, 0, 2).powu(gu);
    let jac2 = &jac * &jac;
    let mut bracket = LaurentPoly::one();
    bracket += &LaurentPoly::uv_pow(g + 1).scale(&BigRational::from_integer(2.into()));
    bracket -= &LaurentPoly::uv_pow(2);
    let t1 = (&jac * &twisted).scale(&BigRational::from_integer(2.into()));
    let t2 = &jac2 * &bracket;
    let t3 = &neg * &LaurentPoly::binomial(1, 1).powu(2);
    let num = &(&t1 - &t2) - &t3;
    FactoredRational::new(num, &[(1, 1, 1), (2, 2, 1)], BigRational::new(1.into(), 2.into()))
}

fn certify_polynomial(f: &FactoredRational, what: &str) -> Result<LaurentPoly> {
    let poly = f.to_laurent_poly().map_err(|e| match e {
        Error::InexactDivision { remainder } => Error::Mismatch {
            what: format!("{what} is not a polynomial"),
            residual: remainder,
        },
        other => other,
    })?;
    if !poly.has_integer_coefficients() {
        return Err(Error::invariant(format!("{what} has non-integer coefficients")));
    }
    Ok(poly)
}

/// Hodge-Poincare polynomial of the stable locus of the rank-2, even
/// degree moduli space, assembled from the stratification and certified
/// against the closed form.
pub fn hp_moduli_stable_rank2(g: i64) -> Result<LaurentPoly> {
    check_genus(g, 2)?;
    let ss = hp_ss_rank2_closed_form(g)?;
    let assembled = assemble_stable_hp(&ss, &rank2_strata(g)?)?;
    let mut quotient = assembled.mul_poly(&LaurentPoly::binomial(1, 1));
    quotient.cancel_factor(1, 1);
    let poly = certify_polynomial(&quotient, "assembled Hodge-Poincare series")?;
    let closed = hp_stable_rank2_closed_form(g)?;
    check_equal(
        format!("stratification vs closed-form Hodge-Poincare polynomial, g = {g}"),
        &FactoredRational::from_poly(poly.clone()),
        &closed,
    )?;
    Ok(poly)
}

/// Hodge-Deligne polynomial `(uv)^{4g-3} HP(1/u, 1/v)`, certified against
/// its closed form.
pub fn hodge_deligne_stable_rank2(g: i64) -> Result<LaurentPoly> {
    let hp = hp_moduli_stable_rank2(g)?;
    let hd = hp.dual_substitute(moduli_dimension(2, g));
    check_equal(
        format!("dual polynomial vs closed-form Hodge-Deligne polynomial, g = {g}"),
        &FactoredRational::from_poly(hd.clone()),
        &hd_stable_rank2_closed_form(g)?,
    )?;
    Ok(hd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn stratum_codims() {
        assert_eq!(stratum_gl2(2).unwrap().codim, 6);
        assert_eq!(stratum_beta1(3).unwrap().codim, 5);
        assert_eq!(stratum_t(2).unwrap().codim, 2);
        assert_eq!(stratum_beta2(4).unwrap().codim, 3);
    }

    #[test]
    fn gl2_contribution_is_product() {
        let s = stratum_gl2(3).unwrap();
        assert_eq!(s.contribution, hp_bgl(2).unwrap().mul_poly(&hp_jacobian(3).unwrap()));
        assert_eq!(s.contribution.series_expand(0).unwrap().coeff(0, 0), rat(1));
    }

    #[test]
    fn beta1_numerator_cancels_one_pole() {
        let mut c = stratum_beta1(2).unwrap().contribution;
        assert_eq!(c.cancel_factor(1, 1), 1);
    }

    #[test]
    fn beta_strata_genus_two_series() {
        // (1 - u^2v^2) J / (1-uv)^2 = (1 + uv) J / (1 - uv)
        let b1 = stratum_beta1(2).unwrap().contribution.series_expand(6).unwrap();
        let alt = FactoredRational::new(&LaurentPoly::one_plus(1, 1, 1) * &hp_jacobian(2).unwrap(), &[(1, 1, 1)], rat(1))
            .unwrap()
            .series_expand(6)
            .unwrap();
        assert_eq!(b1, alt);
        assert_eq!(b1.coeff(1, 1), rat(4 + 2));
        // g = 2: (1 - uv) (J^2 - (uv)^2 J) / (1-uv)^2
        let b2 = stratum_beta2(2).unwrap().contribution;
        let mut c = b2.clone();
        assert_eq!(c.cancel_factor(1, 1), 1);
        assert_eq!(b2.series_expand(0).unwrap().coeff(0, 0), rat(1));
    }

    #[test]
    fn assemble_edge_cases() {
        let ss = hp_ss_rank2_closed_form(2).unwrap();
        assert_eq!(assemble_stable_hp(&ss, &[]).unwrap(), ss);
        let rec = StratumRecord { label: "self".into(), codim: 3, contribution: ss.clone() };
        let want = ss.mul_poly(&LaurentPoly::binomial(3, 3));
        assert_eq!(assemble_stable_hp(&ss, &[rec]).unwrap(), want);
        let bad = StratumRecord { label: "open".into(), codim: 0, contribution: ss.clone() };
        assert!(matches!(assemble_stable_hp(&ss, &[bad]), Err(Error::NonPositiveCodim { .. })));
    }

    #[test]
    fn genus_two_polynomial() {
        let hp = hp_moduli_stable_rank2(2).unwrap();
        assert_eq!(hp.constant_term(), rat(1));
        assert!(hp.is_uv_symmetric());
        assert!(hp.is_polynomial());
        assert!(hp.max_total_degree().unwrap() <= 2 * moduli_dimension(2, 2));
        let hd = hodge_deligne_stable_rank2(2).unwrap();
        assert_eq!(hd.dual_substitute(5), hp);
    }

    #[test]
    fn odd_genus_bounds() {
        assert!(hp_moduli_stable_rank2(1).is_err());
    }
}

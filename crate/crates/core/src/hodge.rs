//! Closed-form Hodge-Poincare building blocks for Jacobians and
//! classifying spaces.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::LaurentPoly;
use crate::rational::FactoredRational;

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn check_nonneg(g: i64) -> Result<()> {
    if g < 0 {
        return Err(Error::GenusOutOfRange { genus: g, min: 0 });
    }
    Ok(())
}

/// `(1 + u)^g (1 + v)^g`.
pub fn hp_jacobian(g: i64) -> Result<LaurentPoly> {
    check_nonneg(g)?;
    let gu = g as u32;
    Ok(&LaurentPoly::one_plus(1, 1, 0).powu(gu) * &LaurentPoly::one_plus(1, 0, 1).powu(gu))
}

/// `prod_{k=1}^N (1 - u^k v^k)^{-1}`.
pub fn hp_bgl(n: i64) -> Result<FactoredRational> {
    if n < 1 {
        return Err(Error::BadRank(n));
    }
    let factors: Vec<_> = (1..=n).map(|k| (k, k, 1)).collect();
    FactoredRational::inverse_of(&factors)
}

/// `prod_{k=2}^N (1 - u^k v^k)^{-1}`.
pub fn hp_bsl(n: i64) -> Result<FactoredRational> {
    if n < 1 {
        return Err(Error::BadRank(n));
    }
    let factors: Vec<_> = (2..=n).map(|k| (k, k, 1)).collect();
    FactoredRational::inverse_of(&factors)
}

/// Invariant and anti-invariant parts of `HP(BT)`, `T` the maximal torus
/// of `GL(2)` under the Weyl group swap.
pub fn hp_plusminus_bt() -> (FactoredRational, FactoredRational) {
    let den = [(1, 1, 1), (2, 2, 1)];
    let plus = FactoredRational::inverse_of(&den).expect("valid factors");
    let minus = FactoredRational::new(LaurentPoly::uv_pow(1), &den, BigRational::one()).expect("valid factors");
    (plus, minus)
}

/// `(HP^+, HP^-)` of `Jac x Jac \ diagonal` under the swap:
///
/// * plus  = ½ J² + ½ J(-u², -v²) - (uv)^g J
/// * minus = ½ J² - ½ J(-u², -v²)
///
/// with `J = (1+u)^g (1+v)^g`. Both are certified integral.
pub fn hp_plusminus_jac_pair(g: i64) -> Result<(LaurentPoly, LaurentPoly)> {
    let jac = hp_jacobian(g)?;
    let sq = (&jac * &jac).scale(&half());
    let twisted = jac.negate_square_substitute().scale(&half());
    let diag = jac.mul_monomial(g, g);
    let plus = &(&sq + &twisted) - &diag;
    let minus = &sq - &twisted;
    for (name, p) in [("plus", &plus), ("minus", &minus)] {
        if !p.has_integer_coefficients() {
            return Err(Error::invariant(format!("half-integer coefficient in {name} part for g = {g}")));
        }
    }
    Ok((plus, minus))
}

/// `HP_{N(T)}(Z_T^s)` composed as `HP^+(BT) HP^+ + HP^-(BT) HP^-`, then
/// checked against its closed form
/// `[½ J²(1+uv) + ½ (1-u²)^g(1-v²)^g (1-uv) - (uv)^g J] / ((1-uv)(1-u²v²))`.
pub fn hp_nt_zts(g: i64) -> Result<FactoredRational> {
    if g < 1 {
        return Err(Error::GenusOutOfRange { genus: g, min: 1 });
    }
    let (bt_plus, bt_minus) = hp_plusminus_bt();
    let (jac_plus, jac_minus) = hp_plusminus_jac_pair(g)?;
    let composed = &bt_plus.mul_poly(&jac_plus) + &bt_minus.mul_poly(&jac_minus);
    let closed = hp_nt_zts_closed_form(g)?;
    let residual = composed.difference_residual(&closed);
    if !residual.is_zero() {
        return Err(Error::Mismatch { what: format!("HP_N(T)(Z_T^s) closed form, g = {g}"), residual });
    }
    Ok(composed)
}

pub(crate) fn hp_nt_zts_closed_form(g: i64) -> Result<FactoredRational> {
    let gu = g as u32;
    let jac = hp_jacobian(g)?;
    let sq = &jac * &jac;
    let neg = &LaurentPoly::one_plus(-1, 2, 0).powu(gu) * &LaurentPoly::one_plus(-1, 0, 2).powu(gu);
    let a = (&sq * &LaurentPoly::one_plus(1, 1, 1)).scale(&half());
    let b = (&neg * &LaurentPoly::binomial(1, 1)).scale(&half());
    let num = &(&a + &b) - &jac.mul_monomial(g, g);
    FactoredRational::new(num, &[(1, 1, 1), (2, 2, 1)], BigRational::one())
}

//! Exact convex geometry behind the stratification index set.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::QVec;

/// Largest point set accepted by [`min_norm_point`].
pub const MAX_POINTS: usize = 16;
/// Largest ambient dimension accepted by [`min_norm_point`].
pub const MAX_DIM: usize = 4;

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(a: &[BigRational]) -> BigRational {
    dot(a, a)
}

fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn lex_cmp(a: &[BigRational], b: &[BigRational]) -> Ordering {
    a.iter().cmp(b.iter())
}

/// A weight with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub v: QVec,
    pub mult: u32,
}

/// Torus weights of a representation together with the roots of the
/// acting group and the functionals cutting out the positive chamber
/// `{x : s.x >= 0}`. The inner product is the standard dot product.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSystem {
    pub dim: usize,
    pub weights: Vec<Weight>,
    #[serde(default)]
    pub roots: Vec<QVec>,
    #[serde(default)]
    pub chamber: Vec<QVec>,
}

impl WeightSystem {
    pub fn validate(&self) -> Result<()> {
        let vecs = self
            .weights
            .iter()
            .map(|w| &w.v)
            .chain(self.roots.iter())
            .chain(self.chamber.iter());
        for v in vecs {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
            }
        }
        if self.weights.iter().any(|w| w.mult == 0) {
            return Err(Error::Parse("weight multiplicity must be at least 1".into()));
        }
        for r in &self.roots {
            let neg: Vec<BigRational> = r.0.iter().map(|x| -x).collect();
            if !self.roots.iter().any(|s| s.0 == neg) {
                return Err(Error::RootSystemNotClosed);
            }
        }
        Ok(())
    }

    pub fn in_chamber(&self, x: &[BigRational]) -> bool {
        self.chamber.iter().all(|s| !dot(s, x).is_negative())
    }

    /// Distinct weight vectors in order of first appearance.
    fn distinct_weights(&self) -> Vec<Vec<BigRational>> {
        let mut out: Vec<Vec<BigRational>> = Vec::new();
        for w in &self.weights {
            if !out.contains(&w.v.0) {
                out.push(w.v.0.clone());
            }
        }
        out
    }

    /// `{alpha - beta : alpha . beta = |beta|^2}` acted on by the roots
    /// orthogonal to `beta`; the chamber is kept.
    pub fn shifted(&self, beta: &[BigRational]) -> WeightSystem {
        let nb = norm2(beta);
        WeightSystem {
            dim: self.dim,
            weights: self
                .weights
                .iter()
                .filter(|w| dot(&w.v, beta) == nb)
                .map(|w| Weight { v: QVec(sub(&w.v, beta)), mult: w.mult })
                .collect(),
            roots: self.roots.iter().filter(|r| dot(r, beta).is_zero()).cloned().collect(),
            chamber: self.chamber.clone(),
        }
    }
}

/// A nonzero element of the index set with the weights on its hyperplane.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaIndex {
    pub beta: QVec,
    /// Indices into `WeightSystem::weights` with `alpha . beta = |beta|^2`.
    pub support: Vec<usize>,
}

/// Solves `a x = b` over the rationals; `None` if `a` is singular.
#[allow(clippy::needless_range_loop)]
fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Projection of the origin onto the affine hull of `pts`, with
/// barycentric coordinates; `None` if `pts` is affinely dependent.
fn affine_projection(pts: &[&Vec<BigRational>]) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
    let base = pts[0];
    let dirs: Vec<Vec<BigRational>> = pts[1..].iter().map(|p| sub(p, base)).collect();
    let k = dirs.len();
    let gram: Vec<Vec<BigRational>> = dirs
        .iter()
        .map(|di| dirs.iter().map(|dj| dot(di, dj)).collect())
        .collect();
    let rhs: Vec<BigRational> = dirs.iter().map(|di| -dot(di, base)).collect();
    let mu = if k == 0 { Vec::new() } else { solve(gram, rhs)? };
    let mut x = base.clone();
    for (m, di) in mu.iter().zip(&dirs) {
        for (xc, dc) in x.iter_mut().zip(di) {
            *xc += m * dc;
        }
    }
    let mut lambda = vec![BigRational::one() - mu.iter().sum::<BigRational>()];
    lambda.extend(mu);
    Some((x, lambda))
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Exact closest point to the origin of `Conv(points)`.
///
/// Enumerates affinely independent subsets by size, projects the origin
/// onto their affine hull, and keeps the first projection that lies in the
/// simplex and supports every input point (`x . p >= |x|^2`).
pub fn min_norm_point(points: &[Vec<BigRational>]) -> Result<Vec<BigRational>> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let r = first.len();
    if let Some(p) = points.iter().find(|p| p.len() != r) {
        return Err(Error::DimensionMismatch { expected: r, got: p.len() });
    }
    if r > MAX_DIM {
        return Err(Error::BudgetExceeded(format!("dimension {r} > {MAX_DIM}")));
    }
    let mut distinct: Vec<&Vec<BigRational>> = Vec::new();
    for p in points {
        if !distinct.contains(&p) {
            distinct.push(p);
        }
    }
    if distinct.len() > MAX_POINTS {
        return Err(Error::BudgetExceeded(format!("{} points > {MAX_POINTS}", distinct.len())));
    }
    let m = distinct.len();
    let mut found = None;
    for size in 1..=(r + 1).min(m) {
        combinations(m, size, |idx| {
            let subset: Vec<&Vec<BigRational>> = idx.iter().map(|&i| distinct[i]).collect();
            let Some((x, lambda)) = affine_projection(&subset) else {
                return false;
            };
            if lambda.iter().any(|l| l.is_negative()) {
                return false;
            }
            let nx = norm2(&x);
            if distinct.iter().all(|p| dot(&x, p) >= nx) {
                found = Some(x);
                return true;
            }
            false
        });
        if found.is_some() {
            break;
        }
    }
    found.ok_or_else(|| Error::invariant("no min-norm certificate found"))
}

/// Nonzero index-set points in the positive chamber, ordered by norm and
/// then lexicographically.
pub fn index_set(ws: &WeightSystem) -> Result<Vec<BetaIndex>> {
    ws.validate()?;
    let distinct = ws.distinct_weights();
    if distinct.len() > MAX_POINTS {
        return Err(Error::BudgetExceeded(format!("{} distinct weights > {MAX_POINTS}", distinct.len())));
    }
    let mut betas: Vec<Vec<BigRational>> = Vec::new();
    let mut rejected: Vec<Vec<BigRational>> = Vec::new();
    for mask in 1u32..(1u32 << distinct.len()) {
        let subset: Vec<Vec<BigRational>> = (0..distinct.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| distinct[i].clone())
            .collect();
        let beta = min_norm_point(&subset)?;
        if beta.iter().all(|x| x.is_zero()) || betas.contains(&beta) || rejected.contains(&beta) {
            continue;
        }
        let nb = norm2(&beta);
        let on_plane: Vec<Vec<BigRational>> =
            distinct.iter().filter(|a| dot(a, &beta) == nb).cloned().collect();
        if ws.in_chamber(&beta) && min_norm_point(&on_plane)? == beta {
            betas.push(beta);
        } else {
            rejected.push(beta);
        }
    }
    betas.sort_by(|a, b| norm2(a).cmp(&norm2(b)).then_with(|| lex_cmp(a, b)));
    Ok(betas
        .into_iter()
        .map(|beta| {
            let nb = norm2(&beta);
            let support = ws
                .weights
                .iter()
                .enumerate()
                .filter(|(_, w)| dot(&w.v, &beta) == nb)
                .map(|(i, _)| i)
                .collect();
            BetaIndex { beta: QVec(beta), support }
        })
        .collect())
}

/// `n(beta) - #{roots gamma : gamma . beta < 0}` where `n(beta)` counts
/// weights (with multiplicity) strictly below the `beta`-hyperplane.
pub fn stratum_codim(ws: &WeightSystem, beta: &BetaIndex) -> i64 {
    let nb = norm2(&beta.beta);
    let below: i64 = ws
        .weights
        .iter()
        .filter(|w| dot(&w.v, &beta.beta) < nb)
        .map(|w| i64::from(w.mult))
        .sum();
    let neg_roots = ws.roots.iter().filter(|r| dot(r, &beta.beta).is_negative()).count() as i64;
    below - neg_roots
}

/// Number of weights (with multiplicity) on the `beta`-hyperplane, minus
/// one: the dimension of the projectivized fixed locus.
pub fn z_dimension(ws: &WeightSystem, beta: &BetaIndex) -> i64 {
    let nb = norm2(&beta.beta);
    ws.weights
        .iter()
        .filter(|w| dot(&w.v, &beta.beta) == nb)
        .map(|w| i64::from(w.mult))
        .sum::<i64>()
        - 1
}

/// A sequence of mutually orthogonal, nonzero index points.
pub type BetaSequence = Vec<QVec>;

/// All beta-sequences of length at most `max_len`, built depth first: a
/// sequence extends `(beta_1)` by a sequence of the shifted system
/// [`WeightSystem::shifted`].
pub fn beta_sequences(ws: &WeightSystem, max_len: usize) -> Result<Vec<BetaSequence>> {
    if max_len == 0 || ws.weights.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for idx in index_set(ws)? {
        out.push(vec![idx.beta.clone()]);
        let rest = beta_sequences(&ws.shifted(&idx.beta), max_len - 1)?;
        for tail in rest {
            let mut seq = vec![idx.beta.clone()];
            seq.extend(tail);
            out.push(seq);
        }
    }
    Ok(out)
}

/// `sum_j e_j - ½ #(roots killed at step j)`.
///
/// `e_j` counts weights on every earlier hyperplane and strictly below the
/// `j`-th; the roots killed at step `j` are those orthogonal to every
/// earlier `beta_k` but not to `beta_j`.
pub fn d_beta_sequence(ws: &WeightSystem, seq: &[QVec]) -> Result<i64> {
    let norms: Vec<BigRational> = seq.iter().map(|b| norm2(b)).collect();
    let mut total = 0i64;
    for j in 0..seq.len() {
        let e: i64 = ws
            .weights
            .iter()
            .filter(|w| (0..j).all(|k| dot(&w.v, &seq[k]) == norms[k]) && dot(&w.v, &seq[j]) < norms[j])
            .map(|w| i64::from(w.mult))
            .sum();
        let killed = ws
            .roots
            .iter()
            .filter(|r| (0..j).all(|k| dot(r, &seq[k]).is_zero()) && !dot(r, &seq[j]).is_zero())
            .count() as i64;
        if killed % 2 != 0 {
            return Err(Error::RootSystemNotClosed);
        }
        total += e - killed / 2;
    }
    Ok(total)
}

/// The adjoint `SL(2)` system on `H^1(O) (x) sl(2)`: weights `2, 0, -2`
/// each with multiplicity `g`, roots `±2`.
pub fn sl2_adjoint_system(g: u32) -> WeightSystem {
    let w = |x: i64| Weight { v: QVec::ints(&[x]), mult: g };
    WeightSystem {
        dim: 1,
        weights: vec![w(2), w(0), w(-2)],
        roots: vec![QVec::ints(&[2]), QVec::ints(&[-2])],
        chamber: vec![QVec::ints(&[1])],
    }
}

/// The torus system on `H^1(Hom(L1,L2)) + H^1(Hom(L2,L1))`: weights `±2`
/// each with multiplicity `g - 1`, no roots. Needs `g >= 2`.
pub fn torus_pm2_system(g: u32) -> WeightSystem {
    let w = |x: i64| Weight { v: QVec::ints(&[x]), mult: g.saturating_sub(1) };
    WeightSystem {
        dim: 1,
        weights: vec![w(2), w(-2)],
        roots: Vec::new(),
        chamber: vec![QVec::ints(&[1])],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<BigRational>> {
        raw.iter().map(|p| p.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn origin_in_hull() {
        assert_eq!(min_norm_point(&pts(&[&[2], &[0], &[-2]])).unwrap(), vec![rat(0)]);
    }

    #[test]
    fn segment_midpoint() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(min_norm_point(&pts(&[&[1, 0], &[0, 1]])).unwrap(), vec![half.clone(), half]);
    }

    #[test]
    fn triangle_edge() {
        assert_eq!(min_norm_point(&pts(&[&[2, 0], &[0, 2], &[2, 2]])).unwrap(), vec![rat(1), rat(1)]);
    }

    #[test]
    fn empty_input() {
        assert!(matches!(min_norm_point(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn budgets_enforced() {
        let big: Vec<Vec<BigRational>> = (0..17).map(|i| vec![rat(i)]).collect();
        assert!(matches!(min_norm_point(&big), Err(Error::BudgetExceeded(_))));
        assert!(matches!(min_norm_point(&[vec![rat(1); 5]]), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn section_six_systems() {
        for g in 2..=10u32 {
            let sl2 = sl2_adjoint_system(g);
            let idx = index_set(&sl2).unwrap();
            assert_eq!(idx.len(), 1);
            assert_eq!(idx[0].beta, QVec::ints(&[2]));
            assert_eq!(stratum_codim(&sl2, &idx[0]), 2 * i64::from(g) - 1);
            assert_eq!(z_dimension(&sl2, &idx[0]), i64::from(g) - 1);

            let torus = torus_pm2_system(g);
            let idx = index_set(&torus).unwrap();
            assert_eq!(idx.len(), 1);
            assert_eq!(idx[0].beta, QVec::ints(&[2]));
            assert_eq!(stratum_codim(&torus, &idx[0]), i64::from(g) - 1);
        }
    }

    #[test]
    fn single_weight_in_chamber() {
        let ws = WeightSystem {
            dim: 2,
            weights: vec![Weight { v: QVec::ints(&[1, 3]), mult: 2 }],
            roots: vec![],
            chamber: vec![QVec::ints(&[1, 0])],
        };
        let idx = index_set(&ws).unwrap();
        assert_eq!(idx.len(), 1);
        assert_eq!(idx[0].beta, QVec::ints(&[1, 3]));
        assert_eq!(stratum_codim(&ws, &idx[0]), 0);
    }

    #[test]
    fn root_closure_checked() {
        let mut ws = sl2_adjoint_system(2);
        ws.roots.pop();
        assert!(matches!(index_set(&ws), Err(Error::RootSystemNotClosed)));
    }

    #[test]
    fn sequences_of_section_six_systems() {
        for ws in [sl2_adjoint_system(3), torus_pm2_system(3)] {
            let seqs = beta_sequences(&ws, 4).unwrap();
            assert_eq!(seqs, vec![vec![QVec::ints(&[2])]]);
            assert_eq!(d_beta_sequence(&ws, &seqs[0]).unwrap(), stratum_codim(&ws, &index_set(&ws).unwrap()[0]));
        }
        assert_eq!(d_beta_sequence(&sl2_adjoint_system(4), &[QVec::ints(&[2])]).unwrap(), 7);
        let empty = WeightSystem { dim: 1, weights: vec![], roots: vec![], chamber: vec![] };
        assert!(beta_sequences(&empty, 3).unwrap().is_empty());
    }

    #[test]
    fn length_two_sequence() {
        // A=(2,1), B=(2,-1), C=(-1,0); beta_1=(2,0) on {A,B}, shifted {(0,±1)}
        let ws = WeightSystem {
            dim: 2,
            weights: vec![
                Weight { v: QVec::ints(&[2, 1]), mult: 1 },
                Weight { v: QVec::ints(&[2, -1]), mult: 1 },
                Weight { v: QVec::ints(&[-1, 0]), mult: 1 },
            ],
            roots: vec![],
            chamber: vec![QVec::ints(&[1, 0])],
        };
        let seqs = beta_sequences(&ws, 2).unwrap();
        let target = vec![QVec::ints(&[2, 0]), QVec::ints(&[0, 1])];
        assert!(seqs.contains(&target));
        assert!(seqs.contains(&vec![QVec::ints(&[2, 0]), QVec::ints(&[0, -1])]));
        // e_1 = #{C} = 1, e_2 = #{B} = 1
        assert_eq!(d_beta_sequence(&ws, &target).unwrap(), 2);
    }

    #[test]
    fn odd_killed_roots_rejected() {
        let ws = WeightSystem {
            dim: 1,
            weights: vec![Weight { v: QVec::ints(&[2]), mult: 1 }],
            roots: vec![QVec::ints(&[2])],
            chamber: vec![],
        };
        assert!(matches!(d_beta_sequence(&ws, &[QVec::ints(&[2])]), Err(Error::RootSystemNotClosed)));
    }
}

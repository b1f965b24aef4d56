//! Harder-Narasimhan types and the reductive classes met in the blow-up.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One semistable quotient of the canonical filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Quotient {
    pub rank: i64,
    pub degree: i64,
}

/// Ordered tuple of quotients with strictly decreasing slopes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HnType {
    pub quotients: Vec<Quotient>,
}

impl HnType {
    pub fn new(pairs: &[(i64, i64)]) -> Result<Self> {
        let t = HnType {
            quotients: pairs.iter().map(|&(rank, degree)| Quotient { rank, degree }).collect(),
        };
        t.validate()?;
        Ok(t)
    }

    pub fn rank(&self) -> i64 {
        self.quotients.iter().map(|q| q.rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.quotients.iter().map(|q| q.degree).sum()
    }

    pub fn len(&self) -> usize {
        self.quotients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quotients.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        if self.quotients.is_empty() {
            return Err(Error::InvalidHnType("no quotients".into()));
        }
        if let Some(q) = self.quotients.iter().find(|q| q.rank <= 0) {
            return Err(Error::InvalidHnType(format!("non-positive rank {}", q.rank)));
        }
        for w in self.quotients.windows(2) {
            // d_j / n_j > d_{j+1} / n_{j+1}
            if w[0].degree * w[1].rank <= w[1].degree * w[0].rank {
                return Err(Error::InvalidHnType(format!(
                    "slopes not strictly decreasing at {}/{} , {}/{}",
                    w[0].degree, w[0].rank, w[1].degree, w[1].rank
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for HnType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, q) in self.quotients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({},{})", q.rank, q.degree)?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_genus(g: i64, min: i64) -> Result<()> {
    if g < min {
        return Err(Error::GenusOutOfRange { genus: g, min });
    }
    Ok(())
}

/// `sum_{j < i} (n_i d_j - n_j d_i + n_i n_j (g - 1))`.
pub fn codim_hn(t: &HnType, g: i64) -> Result<i64> {
    check_genus(g, 1)?;
    t.validate()?;
    Ok(codim_unchecked(&t.quotients, g))
}

fn codim_unchecked(qs: &[Quotient], g: i64) -> i64 {
    let mut total = 0;
    for i in 0..qs.len() {
        for j in 0..i {
            let (a, b) = (qs[j], qs[i]);
            total += b.rank * a.degree - a.rank * b.degree + b.rank * a.rank * (g - 1);
        }
    }
    total
}

/// Ordered compositions of `n` into at least two positive parts.
fn compositions(n: i64) -> Vec<Vec<i64>> {
    fn rec(rest: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            return;
        }
        for part in 1..=rest {
            cur.push(part);
            rec(rest - part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// All HN types of rank `n`, degree `d` with `P >= 2` quotients and
/// codimension at most `max_codim`, sorted by codimension then
/// lexicographically.
///
/// Write the codimension as `S + (g - 1) * sum_{j<i} n_i n_j` with `S` the
/// sum of the slope-gap terms `n_i d_j - n_j d_i`, each a positive integer.
/// For fixed ranks this leaves a budget `B = max_codim - (g - 1) sum n_i n_j`
/// with `S <= B`. Since `n d_j - n_j d = sum_{i != j} ±(slope-gap term)`, we
/// get `|n d_j - n_j d| <= B`, so every `d_j` lies in
/// `[(n_j d - B) / n, (n_j d + B) / n]`.
pub fn enumerate_hn_types(n: i64, d: i64, g: i64, max_codim: i64) -> Result<Vec<(HnType, i64)>> {
    check_genus(g, 1)?;
    if n < 1 {
        return Err(Error::BadRank(n));
    }
    let mut found = Vec::new();
    for ranks in compositions(n) {
        let pairs = ranks.len() as i64 * (ranks.len() as i64 - 1) / 2;
        let mut rank_term = 0;
        for i in 0..ranks.len() {
            for j in 0..i {
                rank_term += ranks[i] * ranks[j];
            }
        }
        let budget = max_codim - (g - 1) * rank_term;
        if budget < pairs {
            continue;
        }
        let bounds: Vec<(i64, i64)> = ranks
            .iter()
            .map(|&nj| (Integer::div_ceil(&(nj * d - budget), &n), Integer::div_floor(&(nj * d + budget), &n)))
            .collect();
        let mut degrees = Vec::with_capacity(ranks.len());
        fill_degrees(&ranks, &bounds, d, g, max_codim, &mut degrees, &mut found);
    }
    found.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    Ok(found)
}

fn fill_degrees(
    ranks: &[i64],
    bounds: &[(i64, i64)],
    d: i64,
    g: i64,
    max_codim: i64,
    degrees: &mut Vec<i64>,
    out: &mut Vec<(HnType, i64)>,
) {
    let j = degrees.len();
    if j + 1 == ranks.len() {
        let last = d - degrees.iter().sum::<i64>();
        if last < bounds[j].0 || last > bounds[j].1 {
            return;
        }
        degrees.push(last);
        let t = HnType {
            quotients: ranks
                .iter()
                .zip(degrees.iter())
                .map(|(&rank, &degree)| Quotient { rank, degree })
                .collect(),
        };
        if t.validate().is_ok() {
            let c = codim_unchecked(&t.quotients, g);
            if c <= max_codim {
                out.push((t, c));
            }
        }
        degrees.pop();
        return;
    }
    for dj in bounds[j].0..=bounds[j].1 {
        // prune on the running slope condition
        if let Some(&prev) = degrees.last() {
            if prev * ranks[j] <= dj * ranks[j - 1] {
                continue;
            }
        }
        degrees.push(dj);
        fill_degrees(ranks, bounds, d, g, max_codim, degrees, out);
        degrees.pop();
    }
}

/// Unordered multiset of pairs `(m_j, n_j)`: the class of `prod GL(m_j)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReductiveClass {
    /// Sorted descending, so equal multisets compare equal.
    pub pairs: Vec<(i64, i64)>,
}

impl ReductiveClass {
    pub fn new(pairs: &[(i64, i64)]) -> Self {
        let mut pairs = pairs.to_vec();
        pairs.sort_by(|a, b| b.cmp(a));
        ReductiveClass { pairs }
    }

    /// `sum m_j^2`, the dimension of the group.
    pub fn dim(&self) -> i64 {
        self.pairs.iter().map(|(m, _)| m * m).sum()
    }
}

impl fmt::Display for ReductiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (m, nj)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({m},{nj})")?;
        }
        write!(f, "}}")
    }
}

/// An enumerated class with its boundary flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub class: ReductiveClass,
    pub dim: i64,
    /// `sum m_j^2 = m^2` but not the top class `{(m, n/m)}`.
    pub boundary: bool,
}

/// Reductive classes for rank `n`, degree `d`, in blow-up order
/// (decreasing `sum m_j^2`, ties broken lexicographically). The center
/// class `{(1, n)}` is left out.
pub fn enumerate_reductive_classes(n: i64, d: i64) -> Result<Vec<ClassEntry>> {
    if n < 1 {
        return Err(Error::BadRank(n));
    }
    let m = n.gcd(&d);
    // all pairs admissible by (iii), m_j <= m by (ii)
    let atoms: Vec<(i64, i64)> = (1..=m)
        .flat_map(|mj| (1..=n).map(move |nj| (mj, nj)))
        .filter(|&(mj, nj)| mj * nj <= n && (nj * d) % n == 0)
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    multisets(&atoms, 0, n, m * m, &mut cur, &mut out);
    let top = ReductiveClass::new(&[(m, n / m)]);
    let mut entries: Vec<ClassEntry> = out
        .into_iter()
        .map(|pairs| ReductiveClass::new(&pairs))
        .filter(|c| c.pairs != vec![(1, n)])
        .map(|class| {
            let dim = class.dim();
            let boundary = dim == m * m && class != top;
            ClassEntry { class, dim, boundary }
        })
        .collect();
    entries.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| b.class.cmp(&a.class)));
    Ok(entries)
}

fn multisets(
    atoms: &[(i64, i64)],
    start: usize,
    rest: i64,
    dim_left: i64,
    cur: &mut Vec<(i64, i64)>,
    out: &mut Vec<Vec<(i64, i64)>>,
) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for i in start..atoms.len() {
        let (mj, nj) = atoms[i];
        if mj * nj > rest || mj * mj > dim_left {
            continue;
        }
        cur.push((mj, nj));
        multisets(atoms, i, rest - mj * nj, dim_left - mj * mj, cur, out);
        cur.pop();
    }
}

/// `(g - 1)(n^2 - sum n_j^2) + sum (m_j^2 - 1)`.
pub fn codim_deeper_stratum(c: &ReductiveClass, n: i64, g: i64) -> Result<i64> {
    check_genus(g, 1)?;
    let sum_n2: i64 = c.pairs.iter().map(|(_, nj)| nj * nj).sum();
    let sum_m2: i64 = c.pairs.iter().map(|(mj, _)| mj * mj - 1).sum();
    Ok((g - 1) * (n * n - sum_n2) + sum_m2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_quotient_has_zero_codim() {
        assert_eq!(codim_hn(&HnType::new(&[(2, 3)]).unwrap(), 2).unwrap(), 0);
    }

    #[test]
    fn rank_two_codims() {
        assert_eq!(codim_hn(&HnType::new(&[(1, 1), (1, -1)]).unwrap(), 2).unwrap(), 3);
        assert_eq!(codim_hn(&HnType::new(&[(1, 1), (1, 0)]).unwrap(), 2).unwrap(), 2);
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(HnType::new(&[(1, 0), (1, 0)]).is_err());
        assert!(HnType::new(&[(1, -1), (1, 1)]).is_err());
        assert!(HnType::new(&[]).is_err());
        assert!(codim_hn(&HnType::new(&[(1, 1)]).unwrap(), 0).is_err());
    }

    #[test]
    fn rank_one_has_no_types() {
        for d in -3..=3 {
            assert!(enumerate_hn_types(1, d, 2, 20).unwrap().is_empty());
        }
    }

    #[test]
    fn rank_two_even_degree() {
        let got = enumerate_hn_types(2, 0, 2, 10).unwrap();
        let expected: Vec<(HnType, i64)> = (1..=4)
            .map(|k| (HnType::new(&[(1, k), (1, -k)]).unwrap(), 2 * k + 1))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn rank_two_odd_degree() {
        let got = enumerate_hn_types(2, 1, 2, 6).unwrap();
        let expected: Vec<(HnType, i64)> = (1..=3)
            .map(|k| (HnType::new(&[(1, k), (1, 1 - k)]).unwrap(), 2 * k))
            .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn reductive_classes_rank_two() {
        let even = enumerate_reductive_classes(2, 4).unwrap();
        let classes: Vec<_> = even.iter().map(|e| e.class.clone()).collect();
        assert_eq!(classes, vec![ReductiveClass::new(&[(2, 1)]), ReductiveClass::new(&[(1, 1), (1, 1)])]);
        assert!(even.iter().all(|e| !e.boundary));
        assert!(enumerate_reductive_classes(2, 1).unwrap().is_empty());
        assert!(enumerate_reductive_classes(2, -3).unwrap().is_empty());
    }

    #[test]
    fn reductive_classes_rank_three() {
        let got: Vec<_> = enumerate_reductive_classes(3, 3)
            .unwrap()
            .into_iter()
            .map(|e| e.class)
            .collect();
        assert_eq!(
            got,
            vec![
                ReductiveClass::new(&[(3, 1)]),
                ReductiveClass::new(&[(2, 1), (1, 1)]),
                ReductiveClass::new(&[(1, 1), (1, 1), (1, 1)]),
                ReductiveClass::new(&[(1, 2), (1, 1)]),
            ]
        );
    }

    #[test]
    fn composite_gcd_boundary_flag() {
        // m = 4: {(2,2),(2,2)}... sum m^2 = 8 < 16; {(4,1)} is the top class
        let entries = enumerate_reductive_classes(4, 0).unwrap();
        assert_eq!(entries[0].class, ReductiveClass::new(&[(4, 1)]));
        assert!(!entries[0].boundary);
        assert!(entries.iter().all(|e| e.dim <= 16));
    }

    #[test]
    fn deeper_codims() {
        for g in 1..=10 {
            assert_eq!(codim_deeper_stratum(&ReductiveClass::new(&[(2, 1)]), 2, g).unwrap(), 3 * g);
            assert_eq!(codim_deeper_stratum(&ReductiveClass::new(&[(1, 1), (1, 1)]), 2, g).unwrap(), 2 * g - 2);
            assert_eq!(codim_deeper_stratum(&ReductiveClass::new(&[(1, 1), (1, 2)]), 3, g).unwrap(), 4 * (g - 1));
        }
    }
}

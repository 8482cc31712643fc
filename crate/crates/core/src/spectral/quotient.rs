//! Equitable partitions and the spectral radius of their quotient matrices.
//!
//! The quotient of an equitable partition of a symmetric matrix is similar to
//! a symmetric matrix, so its characteristic polynomial has only real roots.
//! For such a polynomial the number of roots above `x` equals the sign
//! variations in `P(x), P'(x), …, P^(k)(x)` (Budan–Fourier is exact when all
//! roots are real). Hence `x >= ρ` exactly when every derivative is
//! nonnegative at `x`, a monotone predicate that bisection can follow.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

use super::SpectralError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientMatrix {
    pub parts: Vec<VertexSet>,
    /// Row-major `k × k`; entry `(i, j)` is the number of neighbours in part
    /// `j` of any vertex of part `i`.
    pub entries: Vec<Vec<i64>>,
}

impl QuotientMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim()).map(|i| self.entries[i][i]).sum()
    }
}

/// Quotient matrix of `parts`, or the first `(vertex, part)` pair that breaks
/// equitability.
pub fn quotient(g: &Graph, parts: &[VertexSet]) -> Result<QuotientMatrix, SpectralError> {
    let n = g.order();
    let mut covered = VertexSet::empty(n);
    for (i, p) in parts.iter().enumerate() {
        if p.universe() != n {
            return Err(SpectralError::NotAPartition(format!(
                "part {i} has universe {}",
                p.universe()
            )));
        }
        if p.is_empty() {
            return Err(SpectralError::NotAPartition(format!("part {i} is empty")));
        }
        if !covered.is_disjoint(p) {
            return Err(SpectralError::NotAPartition(format!(
                "part {i} overlaps an earlier part"
            )));
        }
        covered = covered.union(p);
    }
    if covered.len() != n {
        return Err(SpectralError::NotAPartition(format!(
            "{} of {n} vertices covered",
            covered.len()
        )));
    }
    let mut entries = Vec::with_capacity(parts.len());
    for p in parts {
        let mut members = p.iter();
        let first = members.next().expect("nonempty part");
        let row: Vec<i64> = parts
            .iter()
            .map(|q| g.degree_into(first, q) as i64)
            .collect();
        for v in members {
            for (j, q) in parts.iter().enumerate() {
                if g.degree_into(v, q) as i64 != row[j] {
                    return Err(SpectralError::NotEquitable { vertex: v, part: j });
                }
            }
        }
        entries.push(row);
    }
    Ok(QuotientMatrix {
        parts: parts.to_vec(),
        entries,
    })
}

/// Characteristic polynomial `det(xI − M)` by Faddeev–LeVerrier in exact
/// integer arithmetic. `coeffs[i]` is the coefficient of `x^i`.
pub fn characteristic_polynomial(m: &[Vec<i64>]) -> Result<Vec<i128>, SpectralError> {
    let k = m.len();
    let mut coeffs = vec![0i128; k + 1];
    coeffs[k] = 1;
    let a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    // running matrix M_j, starting from M_0 = 0
    let mut mk = vec![vec![0i128; k]; k];
    for j in 1..=k {
        let mut next = vec![vec![0i128; k]; k];
        for r in 0..k {
            for c in 0..k {
                let mut acc = 0i128;
                for t in 0..k {
                    acc = acc
                        .checked_add(
                            a[r][t]
                                .checked_mul(mk[t][c])
                                .ok_or(SpectralError::Overflow)?,
                        )
                        .ok_or(SpectralError::Overflow)?;
                }
                next[r][c] = acc;
            }
            next[r][r] = next[r][r]
                .checked_add(coeffs[k - j + 1])
                .ok_or(SpectralError::Overflow)?;
        }
        let mut tr = 0i128;
        for r in 0..k {
            for t in 0..k {
                tr = tr
                    .checked_add(
                        a[r][t]
                            .checked_mul(next[t][r])
                            .ok_or(SpectralError::Overflow)?,
                    )
                    .ok_or(SpectralError::Overflow)?;
            }
        }
        debug_assert_eq!(tr % j as i128, 0);
        coeffs[k - j] = -tr / j as i128;
        mk = next;
    }
    Ok(coeffs)
}

fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Largest root of a monic, real-rooted polynomial inside `[lo, hi]`, found by
/// bisection on the "all derivatives nonnegative" predicate to `tol`.
pub fn largest_real_root(coeffs: &[i128], lo: f64, hi: f64, tol: f64) -> f64 {
    let mut derivs: Vec<Vec<f64>> = Vec::new();
    let mut cur: Vec<i128> = coeffs.to_vec();
    while cur.len() > 1 {
        derivs.push(cur.iter().map(|&c| c as f64).collect());
        cur = cur
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as i128)
            .collect();
    }
    let above = |x: f64| derivs.iter().all(|d| horner(d, x) >= 0.0);
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if above(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Dense power iteration on `M + I`, for quotients too large for exact
/// coefficients.
fn dense_power(m: &[Vec<i64>]) -> Result<f64, SpectralError> {
    let k = m.len();
    let mut x = vec![1.0 / (k as f64).sqrt(); k];
    let mut residual = f64::INFINITY;
    for _ in 0..1_000_000 {
        let mx: Vec<f64> = m
            .iter()
            .map(|r| r.iter().zip(&x).map(|(&a, b)| a as f64 * b).sum())
            .collect();
        // Rayleigh-type estimate for a nonsymmetric matrix: ratio on the max entry
        let (i, _) =
            x.iter().enumerate().fold(
                (0, f64::MIN),
                |best, (i, &v)| if v > best.1 { (i, v) } else { best },
            );
        let est = mx[i] / x[i];
        residual = mx
            .iter()
            .zip(&x)
            .map(|(a, b)| (a - est * b).abs())
            .fold(0.0, f64::max);
        if residual <= 1e-12 {
            return Ok(est);
        }
        let y: Vec<f64> = mx.iter().zip(&x).map(|(a, b)| a + b).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        x = y.into_iter().map(|v| v / norm).collect();
    }
    Err(SpectralError::NotConverged {
        iterations: 1_000_000,
        residual,
    })
}

/// Spectral radius of an equitable quotient; equals that of the graph when
/// the graph is connected.
pub fn quotient_rho(q: &QuotientMatrix) -> Result<f64, SpectralError> {
    let sums = q.row_sums();
    let lo = *sums.iter().min().ok_or(SpectralError::EmptyGraph)? as f64;
    let hi = *sums.iter().max().expect("nonempty") as f64;
    if lo == hi {
        return Ok(hi);
    }
    match characteristic_polynomial(&q.entries) {
        Ok(coeffs) => Ok(largest_real_root(&coeffs, lo, hi, 1e-12)),
        Err(SpectralError::Overflow) => dense_power(&q.entries),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{book_family, g_na};
    use crate::spectral::spectral_radius_default;

    #[test]
    fn single_part_of_complete_graph() {
        let k7 = Graph::complete(7).unwrap();
        let q = quotient(&k7, &[k7.vertex_set()]).unwrap();
        assert_eq!(q.entries, vec![vec![6]]);
        assert_eq!(quotient_rho(&q).unwrap(), 6.0);
    }

    #[test]
    fn book_quotient_rows() {
        let (n, s, b) = (30i64, 3i64, 5i64);
        let c = book_family(n as usize, s as usize, b as usize).unwrap();
        let q = quotient(&c.graph, &c.parts()).unwrap();
        assert_eq!(
            q.entries,
            vec![
                vec![s - 1, n - b - s - 1, b + 1],
                vec![s, n - b - s - 2, 0],
                vec![s, 0, 0]
            ]
        );
        let full = spectral_radius_default(&c.graph).unwrap().rho;
        assert!((quotient_rho(&q).unwrap() - full).abs() <= 1e-8);
    }

    #[test]
    fn g_na_quotient_is_equitable() {
        let c = g_na(17, 3).unwrap();
        let q = quotient(&c.graph, &c.parts()).unwrap();
        assert_eq!(q.dim(), 4);
        let full = spectral_radius_default(&c.graph).unwrap().rho;
        assert!((quotient_rho(&q).unwrap() - full).abs() <= 1e-8);
    }

    #[test]
    fn irregular_partition_is_rejected() {
        let p4 = Graph::path(4).unwrap();
        let err = quotient(&p4, &[p4.vertex_set()]).unwrap_err();
        assert_eq!(err, SpectralError::NotEquitable { vertex: 1, part: 0 });
        let half = VertexSet::range(4, 0..2);
        assert!(matches!(
            quotient(&p4, std::slice::from_ref(&half)),
            Err(SpectralError::NotAPartition(_))
        ));
        assert!(matches!(
            quotient(&p4, &[half.clone(), half]),
            Err(SpectralError::NotAPartition(_))
        ));
        // ends vs middle of P_4 is equitable
        let ends = VertexSet::from_vertices(4, [0, 3]).unwrap();
        let mid = VertexSet::from_vertices(4, [1, 2]).unwrap();
        let q = quotient(&p4, &[ends, mid]).unwrap();
        let want = 2.0 * (std::f64::consts::PI / 5.0).cos();
        assert!((quotient_rho(&q).unwrap() - want).abs() < 1e-11);
    }

    #[test]
    fn faddeev_leverrier_small_cases() {
        // [[0,1],[1,0]] -> x^2 - 1
        assert_eq!(
            characteristic_polynomial(&[vec![0, 1], vec![1, 0]]).unwrap(),
            vec![-1, 0, 1]
        );
        // upper triangular: (x-2)(x-3)(x-5)
        let m = vec![vec![2, 7, 1], vec![0, 3, 4], vec![0, 0, 5]];
        assert_eq!(
            characteristic_polynomial(&m).unwrap(),
            vec![-30, 31, -10, 1]
        );
    }

    #[test]
    fn bisection_picks_largest_root() {
        // (x-1)(x-2)(x-3) from a bracket containing all three roots
        let r = largest_real_root(&[-6, 11, -6, 1], 0.0, 4.0, 1e-13);
        assert!((r - 3.0).abs() < 1e-12);
        // double root at the top
        let r = largest_real_root(&[4, -4, 1], 0.0, 5.0, 1e-13);
        assert!((r - 2.0).abs() < 1e-6);
    }

    #[test]
    fn dense_fallback_matches() {
        let c = book_family(20, 2, 4).unwrap();
        let q = quotient(&c.graph, &c.parts()).unwrap();
        let exact = quotient_rho(&q).unwrap();
        assert!((dense_power(&q.entries).unwrap() - exact).abs() < 1e-9);
    }
}

use serde::Serialize;

use crate::graph::Graph;

use super::SpectralError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerOptions {
    /// Bound on `‖A x − ρ x‖∞`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PowerOptions {
    fn default() -> Self {
        PowerOptions {
            tol: 1e-10,
            max_iter: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Unit eigenvector for `rho`. Strictly positive on connected input; for
    /// disconnected input it is supported on the component attaining `rho`.
    pub perron: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

/// Power iteration on `A + I` from the all-ones vector. The shift keeps the
/// dominant eigenvalue isolated on bipartite graphs, where `±ρ` would
/// otherwise both be dominant.
fn power_connected(adj: &[Vec<u32>], opts: PowerOptions) -> Result<SpectralResult, SpectralError> {
    let n = adj.len();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut ax = vec![0.0; n];
    let mut last_residual = f64::INFINITY;
    for it in 1..=opts.max_iter {
        for (v, row) in adj.iter().enumerate() {
            ax[v] = row.iter().map(|&u| x[u as usize]).sum();
        }
        let rq: f64 = x.iter().zip(&ax).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, ai)| (ai - rq * xi).abs())
            .fold(0.0, f64::max);
        last_residual = residual;
        if residual <= opts.tol {
            return Ok(SpectralResult {
                rho: rq,
                perron: x,
                iterations: it,
                residual,
            });
        }
        let norm = x
            .iter()
            .zip(&ax)
            .map(|(xi, ai)| (xi + ai) * (xi + ai))
            .sum::<f64>()
            .sqrt();
        for (xi, ai) in x.iter_mut().zip(&ax) {
            *xi = (*xi + ai) / norm;
        }
    }
    Err(SpectralError::NotConverged {
        iterations: opts.max_iter,
        residual: last_residual,
    })
}

/// Largest adjacency eigenvalue with its Perron vector.
///
/// Disconnected graphs are handled component by component and the largest
/// radius wins; the earliest component wins ties.
pub fn spectral_radius(g: &Graph, opts: PowerOptions) -> Result<SpectralResult, SpectralError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    if g.is_connected() {
        return power_connected(&g.adjacency_lists(), opts);
    }
    let mut best: Option<(SpectralResult, Vec<usize>)> = None;
    for part in g.components() {
        let (sub, map) = g.induced(&part)?;
        let r = power_connected(&sub.adjacency_lists(), opts)?;
        if best.as_ref().is_none_or(|(b, _)| r.rho > b.rho) {
            best = Some((r, map));
        }
    }
    let (r, map) = best.expect("at least one component");
    let mut perron = vec![0.0; n];
    for (i, &v) in map.iter().enumerate() {
        perron[v] = r.perron[i];
    }
    Ok(SpectralResult { perron, ..r })
}

pub fn spectral_radius_default(g: &Graph) -> Result<SpectralResult, SpectralError> {
    spectral_radius(g, PowerOptions::default())
}

#[cfg(test)]
fn support(r: &SpectralResult) -> crate::graph::VertexSet {
    use crate::graph::VertexSet;
    VertexSet::from_vertices(
        r.perron.len(),
        r.perron
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0.0)
            .map(|(i, _)| i),
    )
    .expect("indices within range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rho(g: &Graph) -> f64 {
        spectral_radius_default(g).unwrap().rho
    }

    #[test]
    fn closed_forms() {
        for n in [2usize, 3, 7, 40] {
            assert!((rho(&Graph::complete(n).unwrap()) - (n as f64 - 1.0)).abs() <= 1e-9);
            assert!((rho(&Graph::star(n).unwrap()) - ((n - 1) as f64).sqrt()).abs() <= 1e-9);
        }
        for n in [3usize, 4, 9, 64] {
            assert!((rho(&Graph::cycle(n).unwrap()) - 2.0).abs() <= 1e-9);
        }
        // path P_n: 2 cos(pi / (n+1))
        for n in [2usize, 5, 12] {
            let want = 2.0 * (std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!((rho(&Graph::path(n).unwrap()) - want).abs() <= 1e-9);
        }
    }

    #[test]
    fn perron_vector_contract() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 2)])
            .unwrap();
        let r = spectral_radius_default(&g).unwrap();
        assert!(r.perron.iter().all(|&x| x > 0.0));
        let norm: f64 = r.perron.iter().map(|x| x * x).sum();
        assert!((norm - 1.0).abs() < 1e-12);
        assert!(r.residual <= 1e-10);
    }

    #[test]
    fn disconnected_takes_largest_component() {
        let g = Graph::complete(4)
            .unwrap()
            .disjoint_union(&Graph::cycle(5).unwrap())
            .unwrap();
        let r = spectral_radius_default(&g).unwrap();
        assert!((r.rho - 3.0).abs() < 1e-9);
        assert_eq!(support(&r).to_vec(), vec![0, 1, 2, 3]);
        let isolated = Graph::edgeless(3).unwrap();
        assert_eq!(rho(&isolated), 0.0);
        assert_eq!(
            spectral_radius_default(&Graph::edgeless(0).unwrap()),
            Err(SpectralError::EmptyGraph)
        );
    }

    #[test]
    fn not_converged_is_reported() {
        let g = Graph::path(30).unwrap();
        let err = spectral_radius(
            &g,
            PowerOptions {
                tol: 1e-14,
                max_iter: 3,
            },
        )
        .unwrap_err();
        assert!(matches!(
            err,
            SpectralError::NotConverged { iterations: 3, .. }
        ));
    }
}

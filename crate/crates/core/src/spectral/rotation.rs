use crate::graph::{Graph, VertexSet};

use super::SpectralError;

/// Moves the edges `{vj v : v ∈ S}` to `{vi v : v ∈ S}`.
///
/// `S` must be nonempty, avoid `vi`, lie inside `N(vj)` and miss `N(vi)`.
pub fn edge_rotation(
    g: &Graph,
    vi: usize,
    vj: usize,
    s: &VertexSet,
) -> Result<Graph, SpectralError> {
    let n = g.order();
    let bad = |msg: String| Err(SpectralError::BadRotation(msg));
    if vi >= n || vj >= n || vi == vj {
        return bad(format!(
            "need distinct vertices below {n}, got {vi} and {vj}"
        ));
    }
    if s.universe() != n {
        return bad(format!(
            "set universe {} does not match order {n}",
            s.universe()
        ));
    }
    if s.is_empty() {
        return bad("S is empty".into());
    }
    if s.contains(vi) {
        return bad(format!("S contains v_i = {vi}"));
    }
    if let Some(v) = s.iter().find(|&v| !g.has_edge(vj, v)) {
        return bad(format!("{v} is not a neighbour of {vj}"));
    }
    if let Some(v) = s.iter().find(|&v| g.has_edge(vi, v)) {
        return bad(format!("{vi}{v} is already an edge"));
    }
    let removed: Vec<_> = s.iter().map(|v| (vj, v)).collect();
    let added: Vec<_> = s.iter().map(|v| (vi, v)).collect();
    Ok(g.without_edges(&removed)?.with_edges(&added)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::spectral_radius_default;

    #[test]
    fn path_end_rotation_is_a_path() {
        // P_5: 0-1-2-3-4; move edge 1-0 to 4-0
        let p = Graph::path(5).unwrap();
        let s = VertexSet::from_vertices(5, [0]).unwrap();
        let q = edge_rotation(&p, 4, 1, &s).unwrap();
        assert_eq!(q.size(), 4);
        assert!(q.is_connected());
        assert_eq!(q.max_degree(), 2);
        let r0 = spectral_radius_default(&p).unwrap().rho;
        let r1 = spectral_radius_default(&q).unwrap().rho;
        assert!((r0 - r1).abs() < 1e-9);
    }

    #[test]
    fn rejects_bad_sets() {
        let g = Graph::path(5).unwrap();
        let empty = VertexSet::empty(5);
        assert!(matches!(
            edge_rotation(&g, 0, 2, &empty),
            Err(SpectralError::BadRotation(_))
        ));
        let contains_vi = VertexSet::from_vertices(5, [1]).unwrap();
        assert!(edge_rotation(&g, 1, 2, &contains_vi).is_err());
        let not_nbr = VertexSet::from_vertices(5, [4]).unwrap();
        assert!(edge_rotation(&g, 0, 2, &not_nbr).is_err());
        let present = VertexSet::from_vertices(5, [2]).unwrap();
        assert!(edge_rotation(&g, 1, 3, &present).is_err());
        assert!(edge_rotation(&g, 3, 3, &present).is_err());
    }
}

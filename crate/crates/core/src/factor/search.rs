//! Backtracking over edge subsets with degree-window propagation.
//!
//! Edges are branched in lexicographic order of their endpoints, include
//! before exclude. After every decision the touched vertices are re-checked:
//! a vertex whose reachable degrees `[deg, deg + undecided]` miss the window
//! is a conflict, and a vertex whose only admissible degree is `deg + undecided`
//! (resp. `deg`) forces its undecided edges in (resp. out).

use crate::graph::Graph;

use super::{DegreeBounds, FactorCertificate, FactorError, Limits, SEARCH_SOFT_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum SearchVerdict {
    Exists { certificate: FactorCertificate },
    NoFactor,
}

impl SearchVerdict {
    pub fn has_factor(&self) -> bool {
        matches!(self, SearchVerdict::Exists { .. })
    }

    pub fn certificate(&self) -> Option<&FactorCertificate> {
        match self {
            SearchVerdict::Exists { certificate } => Some(certificate),
            SearchVerdict::NoFactor => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeState {
    Open,
    In,
    Out,
}

struct Search {
    edges: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    state: Vec<EdgeState>,
    deg: Vec<usize>,
    open: Vec<usize>,
    trail: Vec<usize>,
    bounds: DegreeBounds,
    parity: bool,
}

impl Search {
    fn new(g: &Graph, bounds: DegreeBounds, parity: bool) -> Self {
        let edges: Vec<_> = g.edges().collect();
        let mut incident = vec![Vec::new(); g.order()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let open = incident.iter().map(Vec::len).collect();
        Search {
            state: vec![EdgeState::Open; edges.len()],
            edges,
            incident,
            deg: vec![0; g.order()],
            open,
            trail: Vec::new(),
            bounds,
            parity,
        }
    }

    /// Smallest and largest admissible final degree for `v`, if any.
    fn window(&self, v: usize) -> Option<(usize, usize)> {
        let lo_reach = self.deg[v];
        let hi_reach = self.deg[v] + self.open[v];
        let mut lo = self.bounds.lower.max(lo_reach);
        let mut hi = self.bounds.upper.min(hi_reach);
        if self.parity {
            let want = self.bounds.lower % 2;
            if lo % 2 != want {
                lo += 1;
            }
            if hi % 2 != want {
                hi = hi.checked_sub(1)?;
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    fn assign(&mut self, e: usize, take: bool, queue: &mut Vec<usize>) {
        debug_assert!(self.state[e] == EdgeState::Open);
        let (u, v) = self.edges[e];
        self.state[e] = if take { EdgeState::In } else { EdgeState::Out };
        for w in [u, v] {
            self.open[w] -= 1;
            if take {
                self.deg[w] += 1;
            }
            queue.push(w);
        }
        self.trail.push(e);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail above mark");
            let (u, v) = self.edges[e];
            let took = self.state[e] == EdgeState::In;
            for w in [u, v] {
                self.open[w] += 1;
                if took {
                    self.deg[w] -= 1;
                }
            }
            self.state[e] = EdgeState::Open;
        }
    }

    /// Runs propagation to a fixpoint; `false` on conflict.
    fn propagate(&mut self, queue: &mut Vec<usize>) -> bool {
        while let Some(v) = queue.pop() {
            let Some((lo, hi)) = self.window(v) else {
                return false;
            };
            let all_in = lo == self.deg[v] + self.open[v];
            let all_out = hi == self.deg[v];
            if self.open[v] > 0 && (all_in || all_out) {
                for i in 0..self.incident[v].len() {
                    let e = self.incident[v][i];
                    if self.state[e] == EdgeState::Open {
                        self.assign(e, all_in, queue);
                    }
                }
            }
        }
        true
    }

    fn solve(&mut self, from: usize) -> bool {
        let Some(e) = (from..self.edges.len()).find(|&e| self.state[e] == EdgeState::Open) else {
            return true;
        };
        for take in [true, false] {
            let mark = self.trail.len();
            let mut queue = Vec::new();
            self.assign(e, take, &mut queue);
            if self.propagate(&mut queue) && self.solve(e + 1) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }

    fn certificate(&self) -> FactorCertificate {
        let edges: Vec<_> = self
            .edges
            .iter()
            .zip(&self.state)
            .filter(|(_, &s)| s == EdgeState::In)
            .map(|(&e, _)| e)
            .collect();
        FactorCertificate {
            edges,
            degrees: self.deg.clone(),
        }
    }
}

/// Looks for a spanning subgraph with every degree in `bounds` (and of the
/// parity of `bounds.lower` when `parity` is set).
pub fn decide_by_search(
    g: &Graph,
    bounds: DegreeBounds,
    parity: bool,
    limits: Limits,
) -> Result<SearchVerdict, FactorError> {
    if bounds.lower > bounds.upper {
        return Err(FactorError::InvalidParams(format!(
            "lower {} > upper {}",
            bounds.lower, bounds.upper
        )));
    }
    if parity && bounds.lower % 2 != bounds.upper % 2 {
        return Err(FactorError::ParityPreconditionViolated(format!(
            "a = {} and b = {} differ in parity",
            bounds.lower, bounds.upper
        )));
    }
    let m = g.size();
    if m > SEARCH_SOFT_LIMIT {
        if !limits.force {
            return Err(FactorError::SizeLimitExceeded {
                what: "edge count",
                value: m,
                limit: SEARCH_SOFT_LIMIT,
                hint: " (use force to override)",
            });
        }
        if !limits.quiet {
            log::warn!("edge search forced on m = {m}; worst case explores 2^{m} subsets");
        }
    }
    let mut search = Search::new(g, bounds, parity);
    let mut queue: Vec<usize> = (0..g.order()).collect();
    if !search.propagate(&mut queue) || !search.solve(0) {
        return Ok(SearchVerdict::NoFactor);
    }
    Ok(SearchVerdict::Exists {
        certificate: search.certificate(),
    })
}

/// Checks that `cert` lists distinct edges of `g` whose degrees match the
/// stored degree vector and lie in the window.
pub fn verify_certificate(
    g: &Graph,
    cert: &FactorCertificate,
    bounds: DegreeBounds,
    parity: bool,
) -> bool {
    let n = g.order();
    if cert.degrees.len() != n {
        return false;
    }
    let mut deg = vec![0usize; n];
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in &cert.edges {
        if !g.has_edge(u, v) || !seen.insert((u.min(v), u.max(v))) {
            return false;
        }
        deg[u] += 1;
        deg[v] += 1;
    }
    deg == cert.degrees && deg.iter().all(|&d| bounds.admits(d, parity))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::g_na;
    use crate::factor::ParityParams;

    fn window(a: usize, b: usize) -> DegreeBounds {
        DegreeBounds::new(a, b).unwrap()
    }

    #[test]
    fn k4_two_factor_is_a_four_cycle() {
        let k4 = Graph::complete(4).unwrap();
        let v = decide_by_search(&k4, window(2, 2), true, Limits::default()).unwrap();
        let cert = v.certificate().unwrap();
        assert_eq!(cert.edges.len(), 4);
        assert_eq!(cert.degrees, vec![2; 4]);
        assert!(verify_certificate(&k4, cert, window(2, 2), true));
        let c4 = Graph::from_edges(4, &cert.edges).unwrap();
        assert!(c4.is_connected());
    }

    #[test]
    fn c4_certificate_and_tampering() {
        let c4 = Graph::cycle(4).unwrap();
        let v = decide_by_search(&c4, window(2, 2), true, Limits::default()).unwrap();
        let mut cert = v.certificate().unwrap().clone();
        assert!(verify_certificate(&c4, &cert, window(2, 2), true));
        cert.edges.pop();
        assert!(!verify_certificate(&c4, &cert, window(2, 2), true));
        let (u, w) = cert.edges[0];
        let mut bogus = cert.clone();
        bogus.edges.push((u, w));
        assert!(!verify_certificate(&c4, &bogus, window(2, 2), true));
    }

    #[test]
    fn g_na_has_no_parity_factor() {
        let c = g_na(11, 2).unwrap();
        let p = ParityParams::new(2, 4).unwrap();
        let v = decide_by_search(&c.graph, p.bounds(), true, Limits::forced()).unwrap();
        assert_eq!(v, SearchVerdict::NoFactor);
        // dropping parity, a [2,4]-factor does exist
        let plain = decide_by_search(&c.graph, p.bounds(), false, Limits::forced()).unwrap();
        assert!(verify_certificate(
            &c.graph,
            plain.certificate().unwrap(),
            p.bounds(),
            false
        ));
    }

    #[test]
    fn soft_limit() {
        let k10 = Graph::complete(10).unwrap();
        assert!(matches!(
            decide_by_search(&k10, window(1, 1), true, Limits::default()),
            Err(FactorError::SizeLimitExceeded { .. })
        ));
        let v = decide_by_search(&k10, window(1, 1), true, Limits::forced()).unwrap();
        assert!(v.has_factor());
    }

    #[test]
    fn zero_lower_bound_and_isolated_vertices() {
        let g = Graph::edgeless(3).unwrap();
        assert!(decide_by_search(&g, window(0, 2), true, Limits::default())
            .unwrap()
            .has_factor());
        assert!(!decide_by_search(&g, window(1, 1), true, Limits::default())
            .unwrap()
            .has_factor());
    }
}

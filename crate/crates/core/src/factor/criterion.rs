//! Exhaustive search for a violating pair `(S, T)`.
//!
//! Vertices are visited in ascending degree order (ties by label) and each is
//! tried in `T`, then `S`, then neither. A subtree is abandoned once a lower
//! bound on `η` over all its completions is at least `−1`; since `η` is even,
//! such a subtree holds no pair with `η <= −2`.
//!
//! Bound for a partial assignment `(S_p, T_p, N_p)` with unassigned `U`:
//!
//! ```text
//! b|S_p| − a|T_p| + Σ_{x∈T_p} d_{G−S_p}(x) − c(G[N_p]) + Σ_{u∈U} min(−a, b − |N(u) ∩ T_p|)
//! ```
//!
//! An unassigned vertex sent to `T` adds at least `−a`; sent to `S` it adds `b`
//! and removes at most `|N(u) ∩ T_p|` from the degree sum of `T_p`; sent to
//! neither it adds at most one component. `c(G[N_p])` bounds the components
//! already seeded by assigned-neither vertices.

use crate::exec::Execution;
use crate::graph::{BitIter, Graph, VertexSet};

use super::{
    CriterionWitness, FactorError, Limits, ParityParams, CRITERION_HARD_LIMIT, CRITERION_SOFT_LIMIT,
};

/// Depth at which the enumeration tree is cut into independent tasks.
const SPLIT_DEPTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CriterionVerdict {
    Exists,
    NoFactor { witness: CriterionWitness },
}

impl CriterionVerdict {
    pub fn has_factor(&self) -> bool {
        matches!(self, CriterionVerdict::Exists)
    }

    pub fn witness(&self) -> Option<&CriterionWitness> {
        match self {
            CriterionVerdict::Exists => None,
            CriterionVerdict::NoFactor { witness } => Some(witness),
        }
    }
}

struct Enumerator {
    n: usize,
    full: u64,
    adj: Vec<u64>,
    order: Vec<usize>,
    a: i64,
    b: i64,
}

#[derive(Clone, Copy)]
struct Pair {
    s: u64,
    t: u64,
    neither: u64,
}

impl Enumerator {
    fn new(g: &Graph, params: &ParityParams) -> Self {
        let n = g.order();
        let adj: Vec<u64> = (0..n).map(|v| g.row_word(v)).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (adj[v].count_ones(), v));
        Enumerator {
            n,
            full: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            adj,
            order,
            a: params.a() as i64,
            b: params.b() as i64,
        }
    }

    fn components(&self, mut within: u64, mut visit: impl FnMut(u64)) {
        while within != 0 {
            let mut comp = within & within.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in BitIter(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & within & !comp;
                comp |= frontier;
            }
            within &= !comp;
            visit(comp);
        }
    }

    fn deg_sum(&self, p: &Pair) -> i64 {
        BitIter(p.t)
            .map(|x| (self.adj[x] & !p.s).count_ones() as i64)
            .sum()
    }

    fn lower_bound(&self, p: &Pair, unassigned: u64) -> i64 {
        let mut lb =
            self.b * p.s.count_ones() as i64 - self.a * p.t.count_ones() as i64 + self.deg_sum(p);
        let mut comps = 0;
        self.components(p.neither, |_| comps += 1);
        lb -= comps;
        for u in BitIter(unassigned) {
            let k = (self.adj[u] & p.t).count_ones() as i64;
            lb += (-self.a).min(self.b - k);
        }
        lb
    }

    fn exact(&self, p: &Pair) -> (i64, usize, usize) {
        let rest = self.full & !p.s & !p.t;
        let mut q = 0usize;
        self.components(rest, |comp| {
            let cross: u32 = BitIter(comp)
                .map(|v| (self.adj[v] & p.t).count_ones())
                .sum();
            if (self.a as u64 * comp.count_ones() as u64 + cross as u64) % 2 == 1 {
                q += 1;
            }
        });
        let deg_sum = self.deg_sum(p) as usize;
        let eta = self.b * p.s.count_ones() as i64 - self.a * p.t.count_ones() as i64
            + deg_sum as i64
            - q as i64;
        (eta, q, deg_sum)
    }

    /// Unassigned vertices once the first `depth` vertices of the order are placed.
    fn unassigned(&self, depth: usize) -> u64 {
        self.order[depth..]
            .iter()
            .fold(0, |acc, &v| acc | 1u64 << v)
    }

    fn dfs(&self, depth: usize, p: Pair) -> Option<(Pair, i64, usize, usize)> {
        if depth == self.n {
            let (eta, q, deg_sum) = self.exact(&p);
            debug_assert_eq!(eta.rem_euclid(2), 0, "deficiency must be even");
            return (eta <= -2).then_some((p, eta, q, deg_sum));
        }
        if self.lower_bound(&p, self.unassigned(depth)) >= -1 {
            return None;
        }
        let bit = 1u64 << self.order[depth];
        let branches = [
            Pair { t: p.t | bit, ..p },
            Pair { s: p.s | bit, ..p },
            Pair {
                neither: p.neither | bit,
                ..p
            },
        ];
        branches
            .into_iter()
            .find_map(|child| self.dfs(depth + 1, child))
    }

    /// Assignment of the first `depth` vertices encoded by `index` in base 3,
    /// most significant digit first, digits T = 0, S = 1, neither = 2.
    fn prefix(&self, depth: usize, mut index: usize) -> Pair {
        let mut p = Pair {
            s: 0,
            t: 0,
            neither: 0,
        };
        for level in (0..depth).rev() {
            let bit = 1u64 << self.order[level];
            match index % 3 {
                0 => p.t |= bit,
                1 => p.s |= bit,
                _ => p.neither |= bit,
            }
            index /= 3;
        }
        p
    }
}

/// Decides parity `[a,b]`-factor existence by searching for a violating pair.
///
/// Returns the first violating pair in enumeration order, regardless of the
/// execution strategy.
pub fn decide_by_criterion(
    g: &Graph,
    params: &ParityParams,
    limits: Limits,
    exec: Execution,
) -> Result<CriterionVerdict, FactorError> {
    let n = g.order();
    params.check_order(n)?;
    if n > CRITERION_HARD_LIMIT {
        return Err(FactorError::SizeLimitExceeded {
            what: "order",
            value: n,
            limit: CRITERION_HARD_LIMIT,
            hint: "",
        });
    }
    if n > CRITERION_SOFT_LIMIT {
        if !limits.force {
            return Err(FactorError::SizeLimitExceeded {
                what: "order",
                value: n,
                limit: CRITERION_SOFT_LIMIT,
                hint: " (use force to override)",
            });
        }
        if !limits.quiet {
            log::warn!(
                "criterion enumeration forced on n = {n}; this visits up to 3^{n} assignments"
            );
        }
    }
    let e = Enumerator::new(g, params);
    let depth = SPLIT_DEPTH.min(n);
    let tasks = 3usize.pow(depth as u32);
    let found = exec.find_map_first(tasks, |i| e.dfs(depth, e.prefix(depth, i)));
    Ok(match found {
        None => CriterionVerdict::Exists,
        Some((p, eta, q, deg_sum)) => {
            let to_set =
                |mask: u64| VertexSet::from_vertices(n, BitIter(mask)).expect("mask within order");
            CriterionVerdict::NoFactor {
                witness: CriterionWitness {
                    s: to_set(p.s),
                    t: to_set(p.t),
                    eta,
                    q,
                    deg_sum,
                },
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::g_na;
    use crate::factor::eta::evaluate_pair;

    fn run(g: &Graph, a: usize, b: usize) -> CriterionVerdict {
        decide_by_criterion(
            g,
            &ParityParams::new(a, b).unwrap(),
            Limits::default(),
            Execution::Sequential,
        )
        .unwrap()
    }

    #[test]
    fn cycle_has_two_factor() {
        assert!(run(&Graph::cycle(4).unwrap(), 2, 2).has_factor());
        assert!(run(&Graph::complete(6).unwrap(), 1, 1).has_factor());
    }

    #[test]
    fn g_na_witness_is_sound() {
        let c = g_na(12, 2).unwrap();
        let params = ParityParams::new(2, 4).unwrap();
        let v = run(&c.graph, 2, 4);
        let w = v.witness().expect("no factor");
        assert!(w.eta <= -2);
        assert_eq!(w.recomputed_eta(&params), w.eta);
        let again = evaluate_pair(&c.graph, &w.s, &w.t, &params).unwrap();
        assert_eq!(&again, w);
    }

    #[test]
    fn path_has_no_perfect_matching_when_odd_pieces() {
        // star K_{1,3}: no perfect matching
        let v = run(&Graph::star(4).unwrap(), 1, 1);
        assert!(!v.has_factor());
        assert!(run(&Graph::path(4).unwrap(), 1, 1).has_factor());
    }

    #[test]
    fn parallel_matches_sequential() {
        let c = g_na(11, 2).unwrap();
        let p = ParityParams::new(2, 4).unwrap();
        let seq =
            decide_by_criterion(&c.graph, &p, Limits::default(), Execution::Sequential).unwrap();
        let par =
            decide_by_criterion(&c.graph, &p, Limits::default(), Execution::Parallel).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn limits_and_preconditions() {
        let p = ParityParams::new(1, 1).unwrap();
        let big = Graph::cycle(20).unwrap();
        assert!(matches!(
            decide_by_criterion(&big, &p, Limits::default(), Execution::Sequential),
            Err(FactorError::SizeLimitExceeded { .. })
        ));
        let huge = Graph::cycle(70).unwrap();
        assert!(matches!(
            decide_by_criterion(&huge, &p, Limits::forced(), Execution::Sequential),
            Err(FactorError::SizeLimitExceeded { .. })
        ));
        assert!(matches!(
            decide_by_criterion(
                &Graph::cycle(5).unwrap(),
                &p,
                Limits::default(),
                Execution::Sequential
            ),
            Err(FactorError::ParityPreconditionViolated(_))
        ));
    }

    #[test]
    fn tiny_orders() {
        let p = ParityParams::new(2, 2).unwrap();
        assert!(decide_by_criterion(
            &Graph::edgeless(0).unwrap(),
            &p,
            Limits::default(),
            Execution::Sequential
        )
        .unwrap()
        .has_factor());
        assert!(!decide_by_criterion(
            &Graph::edgeless(2).unwrap(),
            &p,
            Limits::default(),
            Execution::Sequential
        )
        .unwrap()
        .has_factor());
    }
}

//! Maximum matching in general graphs (Edmonds' blossom algorithm), used as
//! an independent check of the `(1,1)` case: a parity `[1,1]`-factor is a
//! perfect matching.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    adj: &'g [Vec<u32>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in self.adj[v].iter() {
                let to = to as usize;
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    self.used[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        NONE
    }
}

/// Mate of every vertex in a maximum matching (`None` if unmatched).
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.order();
    let adj = g.adjacency_lists();
    let mut st = Blossom {
        adj: &adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
    };
    for root in 0..n {
        if st.mate[root] != NONE {
            continue;
        }
        let mut v = st.find_path(root);
        while v != NONE {
            let pv = st.parent[v];
            let next = st.mate[pv];
            st.mate[v] = pv;
            st.mate[pv] = v;
            v = next;
        }
    }
    st.mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

pub fn matching_size(g: &Graph) -> usize {
    maximum_matching(g).iter().filter(|m| m.is_some()).count() / 2
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * matching_size(g) == g.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Exponential reference: maximum matching by bitmask recursion.
    fn brute_matching(g: &Graph) -> usize {
        fn go(g: &Graph, free: u32, memo: &mut std::collections::HashMap<u32, usize>) -> usize {
            if free == 0 {
                return 0;
            }
            if let Some(&r) = memo.get(&free) {
                return r;
            }
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let mut best = go(g, rest, memo);
            for u in g.neighbors(v) {
                if rest >> u & 1 == 1 {
                    best = best.max(1 + go(g, rest & !(1 << u), memo));
                }
            }
            memo.insert(free, best);
            best
        }
        go(g, (1u32 << g.order()) - 1, &mut Default::default())
    }

    #[test]
    fn known_graphs() {
        assert!(has_perfect_matching(&Graph::complete(6).unwrap()));
        assert!(!has_perfect_matching(&Graph::complete(5).unwrap()));
        assert!(!has_perfect_matching(&Graph::star(4).unwrap()));
        assert_eq!(matching_size(&Graph::cycle(9).unwrap()), 4);
        // Petersen graph has a perfect matching
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert!(has_perfect_matching(&petersen));
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.random_range(1..=11);
            let p = rng.random_range(0.1..0.7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let mate = maximum_matching(&g);
            for (v, m) in mate.iter().enumerate() {
                if let Some(u) = *m {
                    assert!(g.has_edge(u, v));
                    assert_eq!(mate[u], Some(v));
                }
            }
            assert_eq!(matching_size(&g), brute_matching(&g));
        }
    }
}

//! Immutable simple graphs on dense labels `0..n` backed by per-vertex bitsets.
//!
//! Every builder operation returns a fresh [`Graph`]; nothing mutates a graph
//! after construction, so values can be shared freely across worker threads.

use std::fmt;

use thiserror::Error;

/// Largest order supported by the bitset representation.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets are not disjoint")]
    NonDisjoint,
    #[error("vertex set universe {found} does not match graph order {expected}")]
    UniverseMismatch { expected: usize, found: usize },
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A subset of `0..universe` stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from explicit members; members outside the universe are an error.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(
        universe: usize,
        vertices: I,
    ) -> Result<Self, GraphError> {
        let mut s = Self::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn range(universe: usize, range: std::ops::Range<usize>) -> Self {
        let mut s = Self::empty(universe);
        for v in range {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1u64 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.trim();
        out
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        debug_assert_eq!(self.universe, other.universe);
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn trim(&mut self) {
        let rem = self.universe % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| BitIter(w).map(move |b| i * 64 + b))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates the set bit positions of a single word, lowest first.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// Undirected simple graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
    m: usize,
}

/// Accumulates edges and freezes them into a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge(n));
        }
        let stride = words_for(n);
        Ok(Self {
            n,
            stride,
            adj: vec![0; n * stride],
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.set(u, v, true);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        self.check(u)?;
        self.check(v)?;
        self.set(u, v, false);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Makes `vertices` a clique.
    pub fn add_clique(&mut self, vertices: &[usize]) -> Result<&mut Self, GraphError> {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.add_edge(u, v)?;
            }
        }
        Ok(self)
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (ru, rv) = (u * self.stride + v / 64, v * self.stride + u / 64);
        if on {
            self.adj[ru] |= 1u64 << (v % 64);
            self.adj[rv] |= 1u64 << (u % 64);
        } else {
            self.adj[ru] &= !(1u64 << (v % 64));
            self.adj[rv] &= !(1u64 << (u % 64));
        }
    }

    pub fn build(self) -> Graph {
        let twice: usize = self.adj.iter().map(|w| w.count_ones() as usize).sum();
        Graph {
            n: self.n,
            stride: self.stride,
            adj: self.adj,
            m: twice / 2,
        }
    }
}

impl From<&Graph> for GraphBuilder {
    fn from(g: &Graph) -> Self {
        GraphBuilder {
            n: g.n,
            stride: g.stride,
            adj: g.adj.clone(),
        }
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut b = GraphBuilder::new(n)?;
        let all: Vec<usize> = (0..n).collect();
        b.add_clique(&all)?;
        Ok(b.build())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::EmptyGraph);
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Star `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    /// Neighbourhood bitset words of `v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    /// Neighbourhood of `v` as a single word; only valid when `n <= 64`.
    #[inline]
    pub fn row_word(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.stride]
    }

    pub fn neighbors_set(&self, v: usize) -> VertexSet {
        VertexSet {
            universe: self.n,
            words: self.row(v).to_vec(),
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| BitIter(w).map(move |b| i * 64 + b))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree; 0 for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Number of neighbours of `v` inside `set`.
    #[inline]
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.row(v)
            .iter()
            .zip(set.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic by endpoints.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        if s.universe() != self.n {
            return Err(GraphError::UniverseMismatch {
                expected: self.n,
                found: s.universe(),
            });
        }
        Ok(())
    }

    /// `G1 ∪ G2` with the labels of `other` shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n1 = self.n;
        let mut b = GraphBuilder::new(n1 + other.n)?;
        for (u, v) in self.edges() {
            b.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            b.add_edge(u + n1, v + n1)?;
        }
        Ok(b.build())
    }

    /// `G1 ∨ G2`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n1 = self.n;
        let mut b = GraphBuilder::from(&self.disjoint_union(other)?);
        for u in 0..n1 {
            for v in 0..other.n {
                b.add_edge(u, n1 + v)?;
            }
        }
        Ok(b.build())
    }

    pub fn complement(&self) -> Graph {
        let mut adj = vec![0u64; self.adj.len()];
        for v in 0..self.n {
            let full = VertexSet::full(self.n);
            for (i, w) in full.words().iter().enumerate() {
                adj[v * self.stride + i] = w & !self.adj[v * self.stride + i];
            }
            adj[v * self.stride + v / 64] &= !(1u64 << (v % 64));
        }
        let m = self.n * self.n.saturating_sub(1) / 2 - self.m;
        Graph {
            n: self.n,
            stride: self.stride,
            adj,
            m,
        }
    }

    /// Subgraph induced by `keep`; the returned map sends new labels to old ones.
    pub fn induced(&self, keep: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(keep)?;
        let map = keep.to_vec();
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let mut b = GraphBuilder::new(map.len())?;
        for (new_u, &old_u) in map.iter().enumerate() {
            for old_v in self.neighbors(old_u) {
                let new_v = inv[old_v];
                if new_v != usize::MAX && new_v > new_u {
                    b.add_edge(new_u, new_v)?;
                }
            }
        }
        Ok((b.build(), map))
    }

    /// `G − S` with the label map of the survivors.
    pub fn delete_set(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        self.induced(&s.complement())
    }

    /// Connected components of the subgraph induced by `within`, ordered by smallest member.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut unseen = within.clone();
        let mut parts = Vec::new();
        while let Some(start) = unseen.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut frontier = VertexSet::empty(self.n);
            frontier.insert(start);
            unseen.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    comp.insert(v);
                    for (i, w) in self.row(v).iter().enumerate() {
                        next.words[i] |= w & unseen.words[i];
                    }
                }
                for (i, w) in next.words.iter().enumerate() {
                    unseen.words[i] &= !w;
                }
                frontier = next;
            }
            parts.push(comp);
        }
        parts
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Connected; the null graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// `|[S, T]|`, the number of edges with one end in each set.
    pub fn edges_between(&self, s: &VertexSet, t: &VertexSet) -> Result<usize, GraphError> {
        self.check_set(s)?;
        self.check_set(t)?;
        if !s.is_disjoint(t) {
            return Err(GraphError::NonDisjoint);
        }
        Ok(s.iter().map(|v| self.degree_into(v, t)).sum())
    }

    /// Applies `perm` (old label → new label), which must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal order");
        let mut b = GraphBuilder::new(self.n)?;
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v])?;
        }
        Ok(b.build())
    }

    pub fn with_edges(&self, add: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::from(self);
        for &(u, v) in add {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn without_edges(&self, remove: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::from(self);
        for &(u, v) in remove {
            b.remove_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Adjacency lists, handy for repeated matrix-vector products.
    pub fn adjacency_lists(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|v| self.neighbors(v).map(|u| u as u32).collect())
            .collect()
    }

    /// Full scan of the structural invariants: symmetry, no loops, cached size.
    pub fn check_invariants(&self) -> bool {
        let mut twice = 0;
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            for v in self.neighbors(u) {
                if v >= self.n || !self.has_edge(v, u) {
                    return false;
                }
                twice += 1;
            }
        }
        twice == 2 * self.m
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

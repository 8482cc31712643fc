//! Extremal graph families with their vertex blocks labelled.
//!
//! Blocks occupy consecutive label ranges in the order they are listed, so a
//! test can address "the independent block" without searching for it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("invalid parameters for {family}: {reason}")]
    BadParams {
        family: &'static str,
        reason: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn bad(family: &'static str, reason: impl Into<String>) -> ConstructionError {
    ConstructionError::BadParams {
        family,
        reason: reason.into(),
    }
}

/// A named block of a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: &'static str,
    pub vertices: VertexSet,
}

/// Serializable block listing, the JSON sidecar format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSpec {
    pub name: String,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    pub family: String,
    pub params: Vec<(String, usize)>,
    pub n: usize,
    pub m: usize,
    pub blocks: Vec<BlockSpec>,
    /// Whether the family's theorem hypothesis holds at these parameters;
    /// `None` when no threshold is attached.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis_met: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct LabeledConstruction {
    pub family: &'static str,
    pub params: Vec<(&'static str, usize)>,
    pub graph: Graph,
    pub blocks: Vec<Block>,
    pub hypothesis_met: Option<bool>,
}

impl LabeledConstruction {
    pub fn block(&self, name: &str) -> Option<&VertexSet> {
        self.blocks
            .iter()
            .find(|b| b.name == name)
            .map(|b| &b.vertices)
    }

    pub fn parts(&self) -> Vec<VertexSet> {
        self.blocks.iter().map(|b| b.vertices.clone()).collect()
    }

    /// Blocks are pairwise disjoint and cover every vertex.
    pub fn blocks_partition(&self) -> bool {
        let n = self.graph.order();
        let mut seen = VertexSet::empty(n);
        for b in &self.blocks {
            if !seen.is_disjoint(&b.vertices) {
                return false;
            }
            seen = seen.union(&b.vertices);
        }
        seen.len() == n
    }

    pub fn sidecar(&self) -> Sidecar {
        Sidecar {
            family: self.family.to_string(),
            params: self
                .params
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            n: self.graph.order(),
            m: self.graph.size(),
            blocks: self
                .blocks
                .iter()
                .map(|b| BlockSpec {
                    name: b.name.to_string(),
                    vertices: b.vertices.to_vec(),
                })
                .collect(),
            hypothesis_met: self.hypothesis_met,
        }
    }
}

/// Lays out consecutive blocks and returns their label ranges.
fn layout(n: usize, sizes: &[(&'static str, usize)]) -> (Vec<Block>, Vec<Vec<usize>>) {
    let mut start = 0;
    let mut blocks = Vec::new();
    let mut ranges = Vec::new();
    for &(name, len) in sizes {
        blocks.push(Block {
            name,
            vertices: VertexSet::range(n, start..start + len),
        });
        ranges.push((start..start + len).collect());
        start += len;
    }
    (blocks, ranges)
}

fn join_all(b: &mut GraphBuilder, left: &[usize], right: &[usize]) -> Result<(), GraphError> {
    for &u in left {
        for &v in right {
            b.add_edge(u, v)?;
        }
    }
    Ok(())
}

/// `K_{a-1} ∨ (K_{n-2a-1} ∪ (a+1)K_1)` plus one vertex `w` adjacent to the
/// whole independent block.
///
/// Blocks: `clique_small` (a−1), `clique_big` (n−2a−1), `indep` (a+1), `w` (1).
pub fn g_na(n: usize, a: usize) -> Result<LabeledConstruction, ConstructionError> {
    const FAMILY: &str = "g_na";
    if a < 2 {
        return Err(bad(FAMILY, format!("need a >= 2, got a = {a}")));
    }
    if n < 2 * a + 3 {
        return Err(bad(
            FAMILY,
            format!("need n >= 2a+3 = {}, got n = {n}", 2 * a + 3),
        ));
    }
    let (blocks, r) = layout(
        n,
        &[
            ("clique_small", a - 1),
            ("clique_big", n - 2 * a - 1),
            ("indep", a + 1),
            ("w", 1),
        ],
    );
    let mut b = GraphBuilder::new(n)?;
    b.add_clique(&r[0])?;
    b.add_clique(&r[1])?;
    join_all(&mut b, &r[0], &r[1])?;
    join_all(&mut b, &r[0], &r[2])?;
    join_all(&mut b, &r[3], &r[2])?;
    Ok(LabeledConstruction {
        family: FAMILY,
        params: vec![("n", n), ("a", a)],
        graph: b.build(),
        blocks,
        hypothesis_met: None,
    })
}

/// Closed-form size of [`g_na`].
pub fn g_na_size(n: usize, a: usize) -> usize {
    (n - a - 2) * (n - a - 3) / 2 + a * a + a
}

/// `K_a ∨ (K_{n-a-b-1} ∪ (b+1)K_1)` with `a−1` extra edges from one
/// independent vertex into the big clique.
///
/// Blocks: `clique_small` (a), `clique_big` (n−a−b−1), `designated` (1),
/// `indep` (b). The designated vertex is joined to the first a−1 big-clique
/// vertices.
pub fn h_nab(n: usize, a: usize, b: usize) -> Result<LabeledConstruction, ConstructionError> {
    const FAMILY: &str = "h_nab";
    if a < 1 || a >= b {
        return Err(bad(
            FAMILY,
            format!("need 1 <= a < b, got a = {a}, b = {b}"),
        ));
    }
    if n < a + b + 2 {
        return Err(bad(
            FAMILY,
            format!("need n >= a+b+2 = {}, got n = {n}", a + b + 2),
        ));
    }
    let big = n - a - b - 1;
    if big < a - 1 {
        return Err(bad(
            FAMILY,
            format!(
                "big clique of size {big} cannot absorb {} extra edges",
                a - 1
            ),
        ));
    }
    let (blocks, r) = layout(
        n,
        &[
            ("clique_small", a),
            ("clique_big", big),
            ("designated", 1),
            ("indep", b),
        ],
    );
    let mut g = GraphBuilder::new(n)?;
    g.add_clique(&r[0])?;
    g.add_clique(&r[1])?;
    join_all(&mut g, &r[0], &r[1])?;
    join_all(&mut g, &r[0], &r[2])?;
    join_all(&mut g, &r[0], &r[3])?;
    join_all(&mut g, &r[2], &r[1][..a - 1])?;
    Ok(LabeledConstruction {
        family: FAMILY,
        params: vec![("n", n), ("a", a), ("b", b)],
        graph: g.build(),
        blocks,
        hypothesis_met: Some(n >= 2 * (a + b + 2) * (b + 2)),
    })
}

/// `K_1 ∨ (K_{n-b-2} ∪ (b+1)K_1)`. Blocks: `hub`, `clique_big`, `indep`.
///
/// The associated threshold (n even, n >= 4b+8) is reported in
/// `hypothesis_met` and not enforced.
pub fn odd_1b(n: usize, b: usize) -> Result<LabeledConstruction, ConstructionError> {
    const FAMILY: &str = "odd_1b";
    if n < b + 3 {
        return Err(bad(
            FAMILY,
            format!("need n >= b+3 = {}, got n = {n}", b + 3),
        ));
    }
    let mut c = book_family(n, 1, b)?;
    c.family = FAMILY;
    c.params = vec![("n", n), ("b", b)];
    c.blocks[0].name = "hub";
    c.hypothesis_met = Some(n.is_multiple_of(2) && n >= 4 * b + 8);
    Ok(c)
}

/// `K_s ∨ (K_{n-b-s-1} ∪ (b+1)K_1)`. Blocks: `clique_small` (s),
/// `clique_big` (n−b−s−1), `indep` (b+1).
pub fn book_family(n: usize, s: usize, b: usize) -> Result<LabeledConstruction, ConstructionError> {
    const FAMILY: &str = "book";
    if s < 1 {
        return Err(bad(FAMILY, "need s >= 1"));
    }
    if n < b + s + 2 {
        return Err(bad(
            FAMILY,
            format!("need n >= b+s+2 = {}, got n = {n}", b + s + 2),
        ));
    }
    let (blocks, r) = layout(
        n,
        &[
            ("clique_small", s),
            ("clique_big", n - b - s - 1),
            ("indep", b + 1),
        ],
    );
    let mut g = GraphBuilder::new(n)?;
    g.add_clique(&r[0])?;
    g.add_clique(&r[1])?;
    join_all(&mut g, &r[0], &r[1])?;
    join_all(&mut g, &r[0], &r[2])?;
    Ok(LabeledConstruction {
        family: FAMILY,
        params: vec![("n", n), ("s", s), ("b", b)],
        graph: g.build(),
        blocks,
        hypothesis_met: Some(b >= 4 && n >= (2 * b).max((b + 1) * s + 1)),
    })
}

/// `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_q})`. Blocks: `core` then `clique_i`.
pub fn join_of_cliques(
    s: usize,
    cliques: &[usize],
) -> Result<LabeledConstruction, ConstructionError> {
    const FAMILY: &str = "clique_join";
    if cliques.is_empty() || cliques.contains(&0) {
        return Err(bad(
            FAMILY,
            "need at least one clique, all of positive size",
        ));
    }
    const NAMES: [&str; 8] = [
        "clique_0", "clique_1", "clique_2", "clique_3", "clique_4", "clique_5", "clique_6",
        "clique_7",
    ];
    if cliques.len() > NAMES.len() {
        return Err(bad(FAMILY, format!("at most {} cliques", NAMES.len())));
    }
    let n = s + cliques.iter().sum::<usize>();
    let mut sizes = vec![("core", s)];
    sizes.extend(cliques.iter().enumerate().map(|(i, &c)| (NAMES[i], c)));
    let (mut blocks, r) = layout(n, &sizes);
    let mut g = GraphBuilder::new(n)?;
    g.add_clique(&r[0])?;
    for part in &r[1..] {
        g.add_clique(part)?;
        join_all(&mut g, &r[0], part)?;
    }
    if s == 0 {
        blocks.remove(0);
    }
    Ok(LabeledConstruction {
        family: FAMILY,
        params: vec![("s", s), ("q", cliques.len())],
        graph: g.build(),
        blocks,
        hypothesis_met: None,
    })
}

fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Closed-form size of [`book_family`].
pub fn book_size(n: usize, s: usize, b: usize) -> usize {
    choose2(s) + choose2(n - b - s - 1) + s * (n - s)
}

/// Closed-form size of [`h_nab`].
pub fn h_nab_size(n: usize, a: usize, b: usize) -> usize {
    choose2(a) + choose2(n - a - b - 1) + a * (n - a) + a - 1
}

//! Structural recognition of the extremal graph `G_n^a`.

use serde::Serialize;

use crate::constructions::g_na;
use crate::graph::{Graph, VertexSet};

/// Block assignment found in the input graph's own labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GnaBlocks {
    pub clique_small: VertexSet,
    pub clique_big: VertexSet,
    pub indep: VertexSet,
    pub w: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GnaRecognition {
    pub is_gna: bool,
    pub blocks: Option<GnaBlocks>,
}

impl GnaRecognition {
    fn no() -> Self {
        GnaRecognition {
            is_gna: false,
            blocks: None,
        }
    }
}

/// Decides whether `g` is isomorphic to `G_n^a` with `n = |V(g)|`.
///
/// Candidates for the added vertex `w` have degree `a+1` and an independent
/// neighbourhood of degree-`a` vertices; the small clique is then the
/// common remaining neighbourhood of that block. The candidate is accepted
/// only if mapping the blocks onto the construction reproduces the adjacency
/// exactly.
pub fn recognize_gna(g: &Graph, a: usize) -> GnaRecognition {
    let n = g.order();
    let Ok(reference) = g_na(n, a) else {
        return GnaRecognition::no();
    };
    if g.size() != reference.graph.size() {
        return GnaRecognition::no();
    }
    for w in (0..n).filter(|&v| g.degree(v) == a + 1) {
        let indep = g.neighbors_set(w);
        let independent = indep
            .iter()
            .all(|x| g.degree_into(x, &indep) == 0 && g.degree(x) == a);
        if !independent {
            continue;
        }
        let first = indep.first().expect("degree a+1 >= 3");
        let mut small = g.neighbors_set(first);
        small.remove(w);
        if small.len() != a - 1 {
            continue;
        }
        let mut taken = small.union(&indep);
        taken.insert(w);
        let big = taken.complement();
        // place blocks in construction order and compare edge by edge
        let mut perm = vec![0usize; n];
        let order: Vec<usize> = small
            .iter()
            .chain(big.iter())
            .chain(indep.iter())
            .chain(std::iter::once(w))
            .collect();
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        match g.relabel(&perm) {
            Ok(h) if h == reference.graph => {
                return GnaRecognition {
                    is_gna: true,
                    blocks: Some(GnaBlocks {
                        clique_small: small,
                        clique_big: big,
                        indep,
                        w,
                    }),
                }
            }
            _ => continue,
        }
    }
    GnaRecognition::no()
}

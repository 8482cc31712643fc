//! Small-graph corpora: graph6 files, or every connected graph of a small
//! order up to isomorphism.
//!
//! Generation extends each connected graph on `n − 1` vertices by a new vertex
//! with every nonempty neighbourhood (every connected graph has a vertex whose
//! removal keeps it connected) and keeps one representative per canonical form.

use std::collections::BTreeSet;
use std::io::BufRead;

use crate::graph::Graph;
use crate::graph6;

use super::HarnessError;

/// Largest order [`connected_graphs`] will enumerate.
pub const MAX_GENERATED_ORDER: usize = 9;

/// One corpus entry: an identifier (graph6 or file position) and the graph.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: String,
    pub graph: Graph,
}

pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<CorpusEntry>, HarnessError> {
    Ok(graph6::read_all(reader)?
        .into_iter()
        .map(|(_, graph)| CorpusEntry {
            id: graph6::encode(&graph),
            graph,
        })
        .collect())
}

/// Upper-triangle adjacency code of `g` under `order` (position → vertex).
fn code(g: &Graph, order: &[usize]) -> u64 {
    let mut c = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            c = (c << 1) | g.has_edge(order[i], order[j]) as u64;
        }
    }
    c
}

/// Refines `colors` until stable; colours are ranks of label-invariant
/// signatures, so the result does not depend on vertex names.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = colors.len();
    loop {
        let classes_before = colors.iter().collect::<BTreeSet<_>>().len();
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranks: Vec<&(usize, Vec<usize>)> =
            sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        for v in 0..n {
            colors[v] = ranks.binary_search(&&sigs[v]).expect("signature present");
        }
        if ranks.len() == classes_before {
            return;
        }
    }
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<u64>) {
    let n = colors.len();
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        cells[colors[v]].push(v);
    }
    match cells.iter().find(|c| c.len() > 1) {
        None => {
            let mut order = vec![0; n];
            for v in 0..n {
                order[colors[v]] = v;
            }
            let c = code(g, &order);
            if best.is_none_or(|b| c > b) {
                *best = Some(c);
            }
        }
        Some(cell) => {
            let target = colors[cell[0]];
            for &v in cell {
                // individualise v: it keeps the cell's colour, the rest shift up
                let mut next: Vec<usize> = colors
                    .iter()
                    .map(|&c| if c > target { c + 1 } else { c })
                    .collect();
                for &u in cell {
                    if u != v {
                        next[u] = target + 1;
                    }
                }
                refine(g, &mut next);
                search(g, next, best);
            }
        }
    }
}

/// Canonical code: the largest adjacency code over all labellings reached by
/// individualisation and refinement. Isomorphic graphs get equal codes.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(
        g.order() <= 11,
        "canonical codes are limited to 11 vertices"
    );
    let mut colors = vec![0; g.order()];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    best.unwrap_or(0)
}

/// Every connected graph on `n` vertices, one per isomorphism class, in
/// increasing canonical-code order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, HarnessError> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(HarnessError::BadInput(format!(
            "generated corpora cover orders 1..={MAX_GENERATED_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::complete(1).expect("K_1")];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for h in &level {
            for mask in 1u32..(1 << (k - 1)) {
                let edges: Vec<(usize, usize)> = (0..k - 1)
                    .filter(|&v| mask >> v & 1 == 1)
                    .map(|v| (v, k - 1))
                    .collect();
                let mut b = crate::graph::GraphBuilder::new(k).expect("small order");
                for (u, v) in h.edges().chain(edges) {
                    b.add_edge(u, v).expect("valid edge");
                }
                let g = b.build();
                if seen.insert(canonical_code(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    let mut keyed: Vec<(u64, Graph)> = level.into_iter().map(|g| (canonical_code(&g), g)).collect();
    keyed.sort_by_key(|(c, _)| *c);
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// All connected graphs on `1..=max_n` vertices as corpus entries.
pub fn connected_corpus(max_n: usize) -> Result<Vec<CorpusEntry>, HarnessError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(connected_graphs(n)?.into_iter().map(|graph| CorpusEntry {
            id: graph6::encode(&graph),
            graph,
        }));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::sampler::{gnp, sample_rng};
    use rand::seq::SliceRandom;

    #[test]
    fn canonical_code_is_label_invariant() {
        let mut rng = sample_rng(3, 0);
        for i in 0..200 {
            let n = 2 + i % 8;
            let g = gnp(n, 0.4, &mut rng);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(
                canonical_code(&g),
                canonical_code(&g.relabel(&perm).unwrap())
            );
        }
        // C_6 and 2K_3 have equal degree sequences but differ
        let two_triangles = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::complete(3).unwrap())
            .unwrap();
        assert_ne!(
            canonical_code(&Graph::cycle(6).unwrap()),
            canonical_code(&two_triangles)
        );
    }

    #[test]
    fn counts_match_known_sequence() {
        // connected graphs on n unlabeled vertices: 1, 1, 2, 6, 21, 112
        let counts: Vec<usize> = (1..=6)
            .map(|n| connected_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(0).is_err());
    }
}

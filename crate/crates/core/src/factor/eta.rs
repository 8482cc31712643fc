use crate::graph::{Graph, GraphError, VertexSet};

use super::{CriterionWitness, FactorError, GfParams, ParityParams};

fn check_pair(g: &Graph, s: &VertexSet, t: &VertexSet) -> Result<(), FactorError> {
    for set in [s, t] {
        if set.universe() != g.order() {
            return Err(GraphError::UniverseMismatch {
                expected: g.order(),
                found: set.universe(),
            }
            .into());
        }
    }
    if !s.is_disjoint(t) {
        return Err(FactorError::NonDisjoint);
    }
    Ok(())
}

/// Counts components `Q` of `G − S − T` whose weight plus `|[V(Q), T]|` is odd,
/// where the weight of `Q` is `Σ_{v∈Q} weight(v)`.
fn odd_components(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    weight: impl Fn(usize) -> usize,
) -> usize {
    let rest = s.union(t).complement();
    g.components_within(&rest)
        .iter()
        .filter(|q| {
            let w: usize = q.iter().map(&weight).sum();
            let cross: usize = q.iter().map(|v| g.degree_into(v, t)).sum();
            (w + cross) % 2 == 1
        })
        .count()
}

fn deg_sum(g: &Graph, s: &VertexSet, t: &VertexSet) -> usize {
    let outside_s = s.complement();
    t.iter().map(|x| g.degree_into(x, &outside_s)).sum()
}

/// Number of `a`-odd components of `G − S − T`.
pub fn a_odd_count(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    a: usize,
) -> Result<usize, FactorError> {
    check_pair(g, s, t)?;
    Ok(odd_components(g, s, t, |_| a))
}

/// All terms of the deficiency at `(S, T)`.
pub fn evaluate_pair(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    params: &ParityParams,
) -> Result<CriterionWitness, FactorError> {
    check_pair(g, s, t)?;
    params.check_order(g.order())?;
    let q = odd_components(g, s, t, |_| params.a());
    let deg_sum = deg_sum(g, s, t);
    let eta = params.b() as i64 * s.len() as i64 - params.a() as i64 * t.len() as i64
        + deg_sum as i64
        - q as i64;
    Ok(CriterionWitness {
        s: s.clone(),
        t: t.clone(),
        eta,
        q,
        deg_sum,
    })
}

/// `η(S,T) = b|S| − a|T| + Σ_{x∈T} d_{G−S}(x) − q(S,T)`.
pub fn eta(
    g: &Graph,
    s: &VertexSet,
    t: &VertexSet,
    params: &ParityParams,
) -> Result<i64, FactorError> {
    evaluate_pair(g, s, t, params).map(|w| w.eta)
}

/// General form `f(S) − g(T) + Σ_{x∈T} d_{G−S}(x) − q(S,T)` where a component
/// is odd when `g(V(Q)) + |[V(Q), T]|` is odd.
pub fn eta_gf(g: &Graph, s: &VertexSet, t: &VertexSet, gf: &GfParams) -> Result<i64, FactorError> {
    check_pair(g, s, t)?;
    if gf.g().len() != g.order() {
        return Err(FactorError::InvalidGf(format!(
            "functions cover {} vertices, graph has {}",
            gf.g().len(),
            g.order()
        )));
    }
    let f_s: usize = s.iter().map(|v| gf.f()[v]).sum();
    let g_t: usize = t.iter().map(|v| gf.g()[v]).sum();
    let q = odd_components(g, s, t, |v| gf.g()[v]);
    Ok(f_s as i64 - g_t as i64 + deg_sum(g, s, t) as i64 - q as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::g_na;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    #[test]
    fn g_na_indep_pair() {
        for a in [2usize, 3, 4] {
            let b = a + 2;
            let n = if a % 2 == 1 { 2 * a + 4 } else { 2 * a + 5 };
            let c = g_na(n, a).unwrap();
            let t = c.block("indep").unwrap().clone();
            let s = VertexSet::empty(n);
            assert_eq!(a_odd_count(&c.graph, &s, &t, a).unwrap(), 2);
            let p = ParityParams::new(a, b).unwrap();
            assert_eq!(eta(&c.graph, &s, &t, &p).unwrap(), -2);
        }
    }

    #[test]
    fn even_a_empty_pair_vanishes() {
        let g = Graph::cycle(7).unwrap();
        let e = VertexSet::empty(7);
        assert_eq!(a_odd_count(&g, &e, &e, 2).unwrap(), 0);
        assert_eq!(
            eta(&g, &e, &e, &ParityParams::new(2, 4).unwrap()).unwrap(),
            0
        );
    }

    #[test]
    fn gf_on_single_edge() {
        let k2 = Graph::complete(2).unwrap();
        let e = VertexSet::empty(2);
        let gf = GfParams::new(vec![1, 1], vec![1, 1]).unwrap();
        assert_eq!(eta_gf(&k2, &e, &e, &gf).unwrap(), 0);
    }

    #[test]
    fn errors() {
        let g = Graph::complete(4).unwrap();
        let p = ParityParams::new(1, 1).unwrap();
        assert_eq!(
            eta(&g, &set(4, &[0]), &set(4, &[0, 1]), &p),
            Err(FactorError::NonDisjoint)
        );
        let odd = Graph::complete(5).unwrap();
        assert!(matches!(
            eta(&odd, &VertexSet::empty(5), &VertexSet::empty(5), &p),
            Err(FactorError::ParityPreconditionViolated(_))
        ));
        let gf = GfParams::constant(3, 1, 1).unwrap();
        assert!(matches!(
            eta_gf(&g, &VertexSet::empty(4), &VertexSet::empty(4), &gf),
            Err(FactorError::InvalidGf(_))
        ));
    }
}

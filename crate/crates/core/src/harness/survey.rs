//! Seeded survey of factor-free graphs against the extremal graph `G_n^a`.
//!
//! Below the theorem's order threshold nothing is asserted: each sample is
//! classified against `ρ(G_n^a)`, and factor-free samples that reach it
//! without being `G_n^a` are reported as findings.

use serde::Serialize;

use crate::constructions::g_na;
use crate::exec::Execution;
use crate::factor::{
    decide_by_criterion, decide_by_search, CriterionVerdict, Limits, ParityParams, SearchVerdict,
};
use crate::graph::Graph;
use crate::graph6;
use crate::spectral::{spectral_radius_default, EQUALITY_BAND, STRICT_MARGIN};

use super::recognize::recognize_gna;
use super::sampler::{connected_min_degree, sample_rng, P_GRID};
use super::table::{fmt_e, fmt_f, Status, Table};
use super::HarnessError;

/// Position of `ρ(G)` relative to `ρ(G_n^a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoClass {
    Below,
    Boundary,
    Above,
}

impl RhoClass {
    fn of(rho: f64, reference: f64) -> Self {
        let gap = rho - reference;
        if gap.abs() <= EQUALITY_BAND {
            RhoClass::Boundary
        } else if gap > 0.0 {
            RhoClass::Above
        } else {
            RhoClass::Below
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            RhoClass::Below => "below",
            RhoClass::Boundary => "boundary",
            RhoClass::Above => "above",
        }
    }
}

/// One surveyed graph. Record 0 is `G_n^a` itself; the rest are samples.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyRecord {
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    /// Edge probability of the sample; `None` for the reference graph.
    pub p: Option<f64>,
    pub has_factor: bool,
    /// Decider that produced the stored evidence.
    pub method: &'static str,
    /// Violating pair when factor-free.
    pub witness: Option<WitnessSummary>,
    /// Edge count of the factor when one exists.
    pub factor_edges: Option<usize>,
    pub rho: f64,
    pub rho_extremal: f64,
    pub class: RhoClass,
    pub is_gna: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessSummary {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub eta: i64,
    pub q: usize,
}

impl SurveyRecord {
    /// Factor-free, at or above the reference radius, and not `G_n^a`.
    pub fn is_exception(&self) -> bool {
        !self.has_factor && self.class == RhoClass::Above && !self.is_gna
    }

    /// Factor-free, numerically tied with the reference, and not `G_n^a`.
    pub fn is_boundary(&self) -> bool {
        !self.has_factor && self.class == RhoClass::Boundary && !self.is_gna
    }

    fn status(&self) -> Status {
        if self.is_exception() {
            Status::Finding
        } else if self.is_boundary() {
            Status::Boundary
        } else {
            Status::Info
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveySummary {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub seed: u64,
    pub samples: usize,
    /// Edge probabilities that produced samples.
    pub p_grid: Vec<f64>,
    /// Factor-free samples (the reference graph excluded).
    pub factor_free: usize,
    pub max_rho_factor_free: Option<f64>,
    pub rho_gna: f64,
    /// Clique bound `n − a − 3` that `ρ(G_n^a)` must exceed.
    pub clique_rho: f64,
    pub gna_exceeds_clique: bool,
    /// The reference graph was recorded as factor-free with minimum degree `a`.
    pub gna_included: bool,
    /// Every factor-free sample with `ρ >= ρ(G_n^a)` (within the band) is `G_n^a`.
    pub high_factor_free_are_gna: bool,
    pub boundary: Vec<usize>,
    pub exceptions: Vec<usize>,
    pub status: &'static str,
    /// Order threshold as stated with the theorem, `2a² + 136a + 264`.
    pub threshold_stated: usize,
    /// Order threshold used in the proof steps, `2a² + 136a + 164`.
    pub threshold_in_proof: usize,
    /// Second threshold, `2b² + 5ab + 7b + 34`.
    pub threshold_b: usize,
    pub hypothesis_met: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurveyReport {
    pub records: Vec<SurveyRecord>,
    pub summary: SurveySummary,
}

impl SurveyReport {
    pub fn table(&self) -> Table {
        let mut t = Table::new(
            "survey",
            vec![
                "index",
                "graph6",
                "n",
                "m",
                "delta",
                "p",
                "method",
                "has_factor",
                "eta",
                "witness_s",
                "witness_t",
                "factor_edges",
                "rho",
                "rho_extremal",
                "gap",
                "class",
                "is_gna",
            ],
        );
        let list = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        for r in &self.records {
            let w = r.witness.as_ref();
            t.push(
                vec![
                    r.index.to_string(),
                    r.graph6.clone(),
                    r.n.to_string(),
                    r.m.to_string(),
                    r.delta.to_string(),
                    r.p.map(|p| p.to_string()).unwrap_or_default(),
                    r.method.to_string(),
                    r.has_factor.to_string(),
                    w.map(|w| w.eta.to_string()).unwrap_or_default(),
                    w.map(|w| list(&w.s)).unwrap_or_default(),
                    w.map(|w| list(&w.t)).unwrap_or_default(),
                    r.factor_edges.map(|e| e.to_string()).unwrap_or_default(),
                    fmt_f(r.rho),
                    fmt_f(r.rho_extremal),
                    fmt_e(r.rho - r.rho_extremal),
                    r.class.as_str().to_string(),
                    r.is_gna.to_string(),
                ],
                r.status(),
            );
        }
        t
    }
}

/// Decides by edge search, then asks the criterion for a witness when the
/// search finds no factor. A disagreement between the two is an error.
fn decide(
    g: &Graph,
    params: &ParityParams,
) -> Result<(bool, Option<WitnessSummary>, Option<usize>), HarnessError> {
    match decide_by_search(g, params.bounds(), true, Limits::batch())? {
        SearchVerdict::Exists { certificate } => Ok((true, None, Some(certificate.edges.len()))),
        SearchVerdict::NoFactor => match decide_by_criterion(g, params, Limits::batch(), Execution::Sequential)? {
            CriterionVerdict::NoFactor { witness } => Ok((
                false,
                Some(WitnessSummary {
                    s: witness.s.to_vec(),
                    t: witness.t.to_vec(),
                    eta: witness.eta,
                    q: witness.q,
                }),
                None,
            )),
            CriterionVerdict::Exists => Err(HarnessError::BadInput(format!(
                "deciders disagree on {}: search finds no factor, criterion finds no violating pair",
                graph6::encode(g)
            ))),
        },
    }
}

fn record(
    index: usize,
    g: &Graph,
    p: Option<f64>,
    params: &ParityParams,
    rho_extremal: f64,
) -> Result<SurveyRecord, HarnessError> {
    let (has_factor, witness, factor_edges) = decide(g, params)?;
    let rho = spectral_radius_default(g)?.rho;
    Ok(SurveyRecord {
        index,
        graph6: graph6::encode(g),
        n: g.order(),
        m: g.size(),
        delta: g.min_degree(),
        p,
        has_factor,
        method: if has_factor { "search" } else { "criterion" },
        witness,
        factor_edges,
        rho,
        rho_extremal,
        class: RhoClass::of(rho, rho_extremal),
        is_gna: recognize_gna(g, params.a()).is_gna,
    })
}

/// Edge probabilities at which a probe draw reaches the degree floor.
/// Sparse settings that cannot reach it are dropped up front so that each
/// sample draws from a probability known to work.
fn feasible_p_grid(n: usize, a: usize, seed: u64) -> Vec<f64> {
    P_GRID
        .iter()
        .copied()
        .enumerate()
        .filter(|&(k, p)| {
            connected_min_degree(n, a, p, &mut sample_rng(seed, u64::MAX - k as u64)).is_ok()
        })
        .map(|(_, p)| p)
        .collect()
}

/// Surveys `samples` seeded connected graphs with minimum degree at least
/// `a`, plus `G_n^a` itself as record 0.
pub fn survey_theorem(
    n: usize,
    a: usize,
    b: usize,
    samples: usize,
    seed: u64,
    exec: Execution,
) -> Result<SurveyReport, HarnessError> {
    let params = ParityParams::new(a, b)?;
    params.check_order(n)?;
    if a < 2 || b < a + 2 {
        return Err(HarnessError::BadInput(format!(
            "the survey needs a >= 2 and b >= a + 2, got a = {a}, b = {b}"
        )));
    }
    let reference = g_na(n, a)?;
    let rho_gna = spectral_radius_default(&reference.graph)?.rho;
    let p_grid = feasible_p_grid(n, a, seed);
    if p_grid.is_empty() {
        return Err(HarnessError::SamplerExhausted {
            n,
            min_degree: a,
            p: P_GRID[P_GRID.len() - 1],
        });
    }

    let mut records = vec![record(0, &reference.graph, None, &params, rho_gna)?];
    let sampled = exec.map_indexed(samples, |i| {
        let index = i + 1;
        let p = p_grid[i % p_grid.len()];
        let g = connected_min_degree(n, a, p, &mut sample_rng(seed, index as u64))?;
        record(index, &g, Some(p), &params, rho_gna)
    });
    for r in sampled {
        records.push(r?);
    }

    let samples_only = &records[1..];
    let factor_free: Vec<&SurveyRecord> = samples_only.iter().filter(|r| !r.has_factor).collect();
    let exceptions: Vec<usize> = records
        .iter()
        .filter(|r| r.is_exception())
        .map(|r| r.index)
        .collect();
    let boundary: Vec<usize> = records
        .iter()
        .filter(|r| r.is_boundary())
        .map(|r| r.index)
        .collect();
    let clique_rho = (n - a - 3) as f64;
    let threshold_stated = 2 * a * a + 136 * a + 264;
    let threshold_b = 2 * b * b + 5 * a * b + 7 * b + 34;
    let summary = SurveySummary {
        n,
        a,
        b,
        seed,
        samples,
        p_grid,
        factor_free: factor_free.len(),
        max_rho_factor_free: factor_free.iter().map(|r| r.rho).reduce(f64::max),
        rho_gna,
        clique_rho,
        gna_exceeds_clique: rho_gna - clique_rho > STRICT_MARGIN,
        gna_included: !records[0].has_factor && records[0].delta == a && records[0].is_gna,
        high_factor_free_are_gna: factor_free
            .iter()
            .filter(|r| r.class != RhoClass::Below)
            .all(|r| r.is_gna),
        status: if exceptions.is_empty() {
            "consistent with theorem"
        } else {
            "small-n exception found"
        },
        boundary,
        exceptions,
        threshold_stated,
        threshold_in_proof: 2 * a * a + 136 * a + 164,
        threshold_b,
        hypothesis_met: n >= threshold_stated.max(threshold_b),
    };
    Ok(SurveyReport { records, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_graph_is_recorded_factor_free() {
        let r = survey_theorem(12, 2, 4, 16, 1, Execution::Sequential).unwrap();
        assert_eq!(r.records.len(), 17);
        let first = &r.records[0];
        assert!(!first.has_factor && first.is_gna && first.delta == 2);
        assert_eq!(first.witness.as_ref().unwrap().eta, -2);
        assert!(r.summary.gna_included);
        assert!(r.summary.gna_exceeds_clique);
        assert_eq!(r.summary.threshold_stated, 544);
        assert_eq!(r.summary.threshold_in_proof, 444);
        assert_eq!(r.summary.threshold_b, 134);
        assert!(!r.summary.hypothesis_met);
    }

    #[test]
    fn bad_parameters_are_rejected() {
        assert!(survey_theorem(12, 2, 3, 4, 1, Execution::Sequential).is_err());
        assert!(survey_theorem(11, 3, 5, 4, 1, Execution::Sequential).is_err());
        assert!(survey_theorem(12, 2, 2, 4, 1, Execution::Sequential).is_err());
    }

    #[test]
    fn classification_uses_the_band() {
        assert_eq!(RhoClass::of(1.0, 1.0 + 1e-9), RhoClass::Boundary);
        assert_eq!(RhoClass::of(1.0, 1.1), RhoClass::Below);
        assert_eq!(RhoClass::of(1.1, 1.0), RhoClass::Above);
    }
}

//! Cross-checks the two parity-factor deciders on a corpus.

use crate::exec::Execution;
use crate::factor::matching::has_perfect_matching;
use crate::factor::{
    decide_by_criterion, decide_by_search, verify_certificate, CriterionVerdict, Limits,
    ParityParams, SearchVerdict,
};

use super::corpus::CorpusEntry;
use super::table::{Status, Table};

/// Parameter pairs swept by default.
pub const SWEEP_PARAMS: [(usize, usize); 6] = [(1, 1), (1, 3), (2, 2), (2, 4), (3, 3), (3, 5)];

/// Both verdicts for one graph and one `(a, b)`. Decider errors are kept as
/// messages so one bad entry does not stop the sweep.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub a: usize,
    pub b: usize,
    pub criterion: Result<CriterionVerdict, String>,
    pub search: Result<SearchVerdict, String>,
    /// Perfect-matching existence, computed only for `(1, 1)`.
    pub matching: Option<bool>,
}

impl SweepRow {
    /// `None` when either decider failed. Agreement also requires the
    /// witness to be violating and the certificate to verify.
    pub fn agrees(&self) -> Option<bool> {
        let (Ok(c), Ok(s)) = (&self.criterion, &self.search) else {
            return None;
        };
        let sound = match (c, s) {
            (CriterionVerdict::NoFactor { witness }, _) => witness.is_violating(),
            _ => true,
        };
        let matching = self.matching.is_none_or(|pm| pm == c.has_factor());
        Some(sound && matching && c.has_factor() == s.has_factor())
    }

    fn status(&self) -> Status {
        match self.agrees() {
            None => Status::Error,
            Some(ok) => Status::check(ok),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// Graph-parameter pairs skipped because `n·a` is odd.
    pub skipped: usize,
}

impl SweepReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.agrees() == Some(false))
    }

    pub fn errors(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.agrees().is_none())
    }

    pub fn matching_checks(&self) -> usize {
        self.rows.iter().filter(|r| r.matching.is_some()).count()
    }

    /// One row per graph and parameter pair. Disagreeing rows carry the full
    /// witness and certificate in `detail`.
    pub fn table(&self) -> Table {
        let mut t = Table::new(
            "oracle",
            vec![
                "graph6",
                "n",
                "m",
                "a",
                "b",
                "criterion",
                "search",
                "matching",
                "detail",
            ],
        );
        for r in &self.rows {
            let verdict = |has: Result<bool, &String>| match has {
                Ok(true) => "exists".to_string(),
                Ok(false) => "no_factor".to_string(),
                Err(e) => format!("error: {e}"),
            };
            let status = r.status();
            let detail = if status == Status::Pass {
                String::new()
            } else {
                format!("criterion={:?}; search={:?}", r.criterion, r.search)
            };
            t.push(
                vec![
                    r.id.clone(),
                    r.n.to_string(),
                    r.m.to_string(),
                    r.a.to_string(),
                    r.b.to_string(),
                    verdict(r.criterion.as_ref().map(|c| c.has_factor())),
                    verdict(r.search.as_ref().map(|s| s.has_factor())),
                    r.matching.map(|pm| pm.to_string()).unwrap_or_default(),
                    detail,
                ],
                status,
            );
        }
        t
    }
}

fn check_one(entry: &CorpusEntry, a: usize, b: usize) -> SweepRow {
    let g = &entry.graph;
    let criterion = ParityParams::new(a, b)
        .and_then(|p| decide_by_criterion(g, &p, Limits::batch(), Execution::Sequential))
        .map_err(|e| e.to_string());
    let search = ParityParams::new(a, b)
        .and_then(|p| {
            let bounds = p.bounds();
            let v = decide_by_search(g, bounds, true, Limits::batch())?;
            if let Some(cert) = v.certificate() {
                if !verify_certificate(g, cert, bounds, true) {
                    return Err(crate::factor::FactorError::InvalidParams(
                        "search produced a certificate that does not verify".into(),
                    ));
                }
            }
            Ok(v)
        })
        .map_err(|e| e.to_string());
    SweepRow {
        id: entry.id.clone(),
        n: g.order(),
        m: g.size(),
        a,
        b,
        criterion,
        search,
        matching: ((a, b) == (1, 1)).then(|| has_perfect_matching(g)),
    }
}

/// Runs both deciders on every entry for every pair in `params`, skipping
/// pairs with `n·a` odd. Work is split over corpus entries; rows come back in
/// corpus order, then parameter order.
pub fn sweep_oracle_equivalence(
    corpus: &[CorpusEntry],
    params: &[(usize, usize)],
    exec: Execution,
) -> SweepReport {
    let per_entry = exec.map_slice(corpus, |entry| {
        let n = entry.graph.order();
        let mut rows = Vec::new();
        let mut skipped = 0;
        for &(a, b) in params {
            if n * a % 2 == 1 {
                skipped += 1;
            } else {
                rows.push(check_one(entry, a, b));
            }
        }
        (rows, skipped)
    });
    let mut report = SweepReport {
        rows: Vec::new(),
        skipped: 0,
    };
    for (rows, skipped) in per_entry {
        report.rows.extend(rows);
        report.skipped += skipped;
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::g_na;
    use crate::graph6;
    use crate::harness::corpus::connected_corpus;

    #[test]
    fn small_corpus_agrees() {
        let corpus = connected_corpus(5).unwrap();
        let report = sweep_oracle_equivalence(&corpus, &SWEEP_PARAMS, Execution::Sequential);
        assert_eq!(report.disagreements().count(), 0);
        assert_eq!(report.errors().count(), 0);
        assert!(report.matching_checks() > 0);
        assert!(report.skipped > 0);
        assert!(report.table().ok());
    }

    #[test]
    fn extremal_graph_is_factor_free_for_both() {
        let g = g_na(11, 2).unwrap().graph;
        let corpus = vec![CorpusEntry {
            id: graph6::encode(&g),
            graph: g,
        }];
        let report = sweep_oracle_equivalence(&corpus, &[(2, 4)], Execution::Sequential);
        let row = &report.rows[0];
        assert_eq!(row.agrees(), Some(true));
        assert!(!row.criterion.as_ref().unwrap().has_factor());
        assert!(!row.search.as_ref().unwrap().has_factor());
    }

    #[test]
    fn decider_errors_are_recorded() {
        let g = crate::graph::Graph::path(4).unwrap();
        let corpus = vec![CorpusEntry {
            id: graph6::encode(&g),
            graph: g,
        }];
        // a and b of different parity
        let report = sweep_oracle_equivalence(&corpus, &[(2, 3)], Execution::Sequential);
        assert_eq!(report.errors().count(), 1);
        assert_eq!(report.table().count(Status::Error), 1);
    }
}

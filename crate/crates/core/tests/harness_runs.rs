use std::io::Cursor;

use factorlab::constructions::g_na;
use factorlab::factor::{decide_by_criterion, decide_by_search, Limits, ParityParams};
use factorlab::graph6;
use factorlab::harness::{
    read_corpus, run_suite, survey_theorem, sweep_oracle_equivalence, Status, Suite, SuiteConfig,
    SWEEP_PARAMS,
};
use factorlab::Execution;

#[test]
fn survey_records_reverify_from_graph6() {
    let report = survey_theorem(12, 2, 4, 120, 9, Execution::default()).unwrap();
    let params = ParityParams::new(2, 4).unwrap();
    for r in &report.records {
        let g = graph6::decode(&r.graph6).unwrap();
        assert_eq!(g.min_degree(), r.delta);
        let by_search = decide_by_search(&g, params.bounds(), true, Limits::batch()).unwrap();
        assert_eq!(by_search.has_factor(), r.has_factor, "record {}", r.index);
        if let Some(w) = &r.witness {
            let c =
                decide_by_criterion(&g, &params, Limits::batch(), Execution::Sequential).unwrap();
            let found = c.witness().unwrap();
            assert_eq!(
                (found.s.to_vec(), found.t.to_vec(), found.eta),
                (w.s.clone(), w.t.clone(), w.eta)
            );
        }
    }
}

#[test]
fn survey_is_byte_identical_across_runs_and_strategies() {
    let a = survey_theorem(11, 2, 4, 80, 3, Execution::Sequential).unwrap();
    let b = survey_theorem(11, 2, 4, 80, 3, Execution::Parallel).unwrap();
    assert_eq!(a.table().to_csv_string(), b.table().to_csv_string());
    assert_eq!(a.summary, b.summary);
    let c = survey_theorem(11, 2, 4, 80, 4, Execution::Sequential).unwrap();
    assert_ne!(a.table().to_csv_string(), c.table().to_csv_string());
}

#[test]
fn oracle_reads_a_graph6_corpus() {
    let text = ">>graph6<<C~\nCx\n\nDQc\n";
    let corpus = read_corpus(Cursor::new(text)).unwrap();
    assert_eq!(corpus.len(), 3);
    let report = sweep_oracle_equivalence(&corpus, &SWEEP_PARAMS, Execution::Sequential);
    assert_eq!(report.disagreements().count(), 0);
    assert_eq!(report.errors().count(), 0);
    // K_4 has a perfect matching
    assert_eq!(report.rows[0].matching, Some(true));
    let bad = read_corpus(Cursor::new("C~\nC!\n")).unwrap_err();
    assert!(bad.to_string().contains("line 2"));
}

#[test]
fn oracle_suite_on_supplied_corpus_includes_the_extremal_graph() {
    let g = g_na(11, 2).unwrap().graph;
    let corpus = read_corpus(Cursor::new(format!("{}\n", graph6::encode(&g)))).unwrap();
    let cfg = SuiteConfig {
        corpus: Some(corpus),
        ..SuiteConfig::default()
    };
    let out = run_suite(Suite::Oracle, &cfg).unwrap();
    assert!(out.passed());
    let csv = out.table.to_csv_string();
    assert!(csv.contains("no_factor,no_factor"));
}

#[test]
fn every_suite_runs_small() {
    for suite in Suite::ALL {
        let cfg = SuiteConfig {
            samples: Some(40),
            max_n: 5,
            ..SuiteConfig::default()
        };
        let out = run_suite(suite, &cfg).unwrap();
        assert!(!out.table.rows.is_empty(), "{suite}");
        assert!(out.passed(), "{suite}: {:?}", out.table.summary());
        assert_eq!(out.table.count(Status::Error), 0);
        assert_eq!(out.survey.is_some(), suite == Suite::Survey);
    }
}

#[test]
fn reports_do_not_depend_on_execution_strategy() {
    for suite in [
        Suite::DegreeBound,
        Suite::Rotation,
        Suite::CliqueComparison,
        Suite::Oracle,
    ] {
        let run = |exec| {
            let cfg = SuiteConfig {
                samples: Some(60),
                max_n: 6,
                exec,
                ..SuiteConfig::default()
            };
            run_suite(suite, &cfg).unwrap().table.to_csv_string()
        };
        assert_eq!(
            run(Execution::Sequential),
            run(Execution::Parallel),
            "{suite}"
        );
    }
}

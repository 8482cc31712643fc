//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use factorlab::graph::Graph;
use factorlab::harness::{
    connected_graphs, grids, survey_theorem, sweep_oracle_equivalence, SWEEP_PARAMS,
};
use factorlab::harness::{CorpusEntry, Status, Table};
use factorlab::spectral::spectral_radius_default;
use factorlab::{graph6, Execution};

type Check = Result<String, String>;

fn table_check(t: &Table, min_rows: usize) -> Check {
    let s = t.summary();
    if s.rows < min_rows {
        return Err(format!("{} rows, expected at least {min_rows}", s.rows));
    }
    if !s.ok {
        let first = t
            .rows
            .iter()
            .find(|r| r.1 != Status::Pass)
            .map(|r| r.0.join(","));
        return Err(format!(
            "{} failed, {} errors of {} rows; first: {:?}",
            s.failed, s.errors, s.rows, first
        ));
    }
    Ok(format!("{} rows pass", s.rows))
}

fn oracle_equivalence() -> Check {
    let mut corpus = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=8 {
        let graphs = connected_graphs(n).map_err(|e| e.to_string())?;
        counts.push(graphs.len());
        corpus.extend(graphs.into_iter().map(|graph| CorpusEntry {
            id: graph6::encode(&graph),
            graph,
        }));
    }
    if counts != [1, 1, 2, 6, 21, 112, 853, 11117] {
        return Err(format!(
            "corpus counts {counts:?} are not the connected-graph counts"
        ));
    }
    let report = sweep_oracle_equivalence(&corpus, &SWEEP_PARAMS, Execution::default());
    let (bad, errors) = (report.disagreements().count(), report.errors().count());
    if bad + errors > 0 {
        return Err(format!("{bad} disagreements, {errors} errors"));
    }
    Ok(format!(
        "{} graphs, {} verdict pairs, {} matching checks, 0 disagreements",
        corpus.len(),
        report.rows.len(),
        report.matching_checks()
    ))
}

fn spectral_sanity() -> Check {
    let mut worst: f64 = 0.0;
    for n in 3..=200 {
        let cases = [
            (Graph::complete(n), (n - 1) as f64),
            (Graph::cycle(n), 2.0),
            (Graph::star(n), ((n - 1) as f64).sqrt()),
        ];
        for (g, expected) in cases {
            let g = g.map_err(|e| e.to_string())?;
            let r = spectral_radius_default(&g).map_err(|e| e.to_string())?.rho;
            worst = worst.max((r - expected).abs());
        }
    }
    if worst > 1e-9 {
        return Err(format!("max deviation {worst:.3e}"));
    }
    Ok(format!(
        "K_n, C_n, K_1,n-1 for n <= 200; max deviation {worst:.1e}"
    ))
}

fn degree_bound() -> Check {
    let t = grids::degree_bound_grid(10_000, 1, Execution::default());
    let attained = t.rows.iter().filter(|r| r.0[0] != "sampled").count();
    if attained == 0 {
        return Err("no regular rows".into());
    }
    table_check(&t, 10_000).map(|m| format!("{m} ({attained} regular or bidegree rows)"))
}

fn survey() -> Check {
    let mut notes = Vec::new();
    for n in 11..=14 {
        let seq =
            survey_theorem(n, 2, 4, 10_000, 1, Execution::Sequential).map_err(|e| e.to_string())?;
        let par =
            survey_theorem(n, 2, 4, 10_000, 1, Execution::Parallel).map_err(|e| e.to_string())?;
        if seq.table().to_csv_string() != par.table().to_csv_string() || seq.summary != par.summary
        {
            return Err(format!("n = {n}: reports differ between runs"));
        }
        let s = &seq.summary;
        if !s.gna_included {
            return Err(format!(
                "n = {n}: G_n^a not recorded as a factor-free sample with minimum degree a"
            ));
        }
        if !s.gna_exceeds_clique {
            return Err(format!(
                "n = {n}: rho(G_n^a) = {} does not exceed {}",
                s.rho_gna, s.clique_rho
            ));
        }
        notes.push(format!(
            "n={n}: {} ({} findings)",
            s.status,
            s.exceptions.len()
        ));
    }
    Ok(notes.join("; "))
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn main() -> ExitCode {
    let exec = Execution::default();
    let criteria: Vec<Criterion> = vec![
        (
            "oracle equivalence on connected graphs n <= 8",
            Box::new(oracle_equivalence),
        ),
        (
            "G_n^a has no parity factor",
            Box::new(move || table_check(&grids::extremal_no_factor_grid(exec), 92)),
        ),
        (
            "deficiency parity on 10^5 triples",
            Box::new(move || table_check(&grids::eta_parity_grid(100_000, 1, exec), 100_000)),
        ),
        ("spectral radius closed forms", Box::new(spectral_sanity)),
        (
            "quotient radius equals power iteration",
            Box::new(move || table_check(&grids::quotient_equality_grid(exec), 500)),
        ),
        (
            "book-family cubic and n-b-1 ceiling",
            Box::new(move || table_check(&grids::book_cubic_grid(exec), 5_000)),
        ),
        ("min-degree spectral bound", Box::new(degree_bound)),
        (
            "clique-join comparison",
            Box::new(move || table_check(&grids::clique_comparison_grid(exec), 400)),
        ),
        (
            "edge rotation raises the radius",
            Box::new(move || table_check(&grids::rotation_grid(1_000, 1, exec), 1_000)),
        ),
        ("extremal survey n = 11..14", Box::new(survey)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(msg) => println!("criterion {:>2}: PASS  {name}: {msg} [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {msg} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

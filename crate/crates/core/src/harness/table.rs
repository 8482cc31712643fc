use std::io::Write;

use serde::Serialize;

use super::HarnessError;

/// Row outcome. `Info` rows carry data without asserting anything.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
    Info,
    Boundary,
    Finding,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::Info => "info",
            Status::Boundary => "boundary",
            Status::Finding => "finding",
        }
    }

    pub fn check(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// A suite's per-row results; serialised as CSV with a trailing `status` column.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub suite: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<(Vec<String>, Status)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableSummary {
    pub suite: String,
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub ok: bool,
}

impl Table {
    pub fn new(suite: &str, header: Vec<&'static str>) -> Self {
        Table {
            suite: suite.to_string(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, cells: Vec<String>, status: Status) {
        debug_assert_eq!(cells.len(), self.header.len());
        self.rows.push((cells, status));
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|(_, s)| *s == status).count()
    }

    /// No failed or errored rows.
    pub fn ok(&self) -> bool {
        self.count(Status::Fail) == 0 && self.count(Status::Error) == 0
    }

    pub fn summary(&self) -> TableSummary {
        TableSummary {
            suite: self.suite.clone(),
            rows: self.rows.len(),
            passed: self.count(Status::Pass),
            failed: self.count(Status::Fail),
            errors: self.count(Status::Error),
            ok: self.ok(),
        }
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), HarnessError> {
        let mut w = csv::Writer::from_writer(out);
        let mut header: Vec<&str> = self.header.clone();
        header.push("status");
        w.write_record(&header)?;
        for (cells, status) in &self.rows {
            w.write_record(
                cells
                    .iter()
                    .map(String::as_str)
                    .chain(std::iter::once(status.as_str())),
            )?;
        }
        w.flush().map_err(|e| HarnessError::Io(e.to_string()))?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

/// Fixed-precision float formatting for reports.
pub fn fmt_f(x: f64) -> String {
    format!("{x:.12}")
}

pub fn fmt_e(x: f64) -> String {
    format!("{x:.3e}")
}

//! Structured results for verification runs.
//!
//! A [`Report`] is an ordered collection of [`CheckRecord`]s, one per
//! individual check executed by a suite. Records carry a stable `id`
//! (dotted path, e.g. `relations.square.n2`), a human-readable
//! `statement`, a short `anchor` naming the fact family being checked,
//! a [`Status`], and a `witness` string with the concrete values that
//! were compared.
//!
//! Rendering is deterministic: records are sorted by id before output,
//! JSON keys are emitted in a fixed order, and no timestamps or other
//! run-varying data appear in any format. Two runs over the same inputs
//! produce byte-identical output.

use std::fmt;

/// Outcome of a single check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    /// The check ran to completion and the assertion held.
    Pass,
    /// The check ran to completion and the assertion failed.
    Fail,
    /// The check could not run within the configured resource bounds.
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One executed check with its outcome and supporting data.
#[derive(Debug, Clone)]
pub struct CheckRecord {
    /// Stable dotted identifier, unique within a report.
    pub id: String,
    /// What was asserted, in plain language.
    pub statement: String,
    /// Short tag naming the family of facts this check belongs to.
    pub anchor: String,
    pub status: Status,
    /// Concrete values underlying the verdict (expected vs got, counts,
    /// series prefixes, ...). Empty when the statement says it all.
    pub witness: String,
}

/// An ordered set of check records with an aggregate verdict.
#[derive(Debug, Clone, Default)]
pub struct Report {
    records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    /// Convenience constructor-and-push.
    pub fn add(
        &mut self,
        id: impl Into<String>,
        statement: impl Into<String>,
        anchor: impl Into<String>,
        status: Status,
        witness: impl Into<String>,
    ) {
        self.push(CheckRecord {
            id: id.into(),
            statement: statement.into(),
            anchor: anchor.into(),
            status,
            witness: witness.into(),
        });
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// Append every record of `other`.
    pub fn merge(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    /// Aggregate verdict: fail if anything failed, else inconclusive if
    /// anything was cut short, else pass.
    pub fn overall(&self) -> Status {
        let mut overall = Status::Pass;
        for r in &self.records {
            match r.status {
                Status::Fail => return Status::Fail,
                Status::Inconclusive => overall = Status::Inconclusive,
                Status::Pass => {}
            }
        }
        overall
    }

    /// Process exit code for the aggregate verdict: 0 pass, 1 fail,
    /// 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.overall() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    fn sorted(&self) -> Vec<&CheckRecord> {
        let mut refs: Vec<&CheckRecord> = self.records.iter().collect();
        refs.sort_by(|a, b| a.id.cmp(&b.id));
        refs
    }

    /// Render as a JSON object `{"checks": [...], "overall": "..."}`.
    pub fn to_json(&self) -> serde_json::Value {
        let checks: Vec<serde_json::Value> = self
            .sorted()
            .into_iter()
            .map(|r| {
                serde_json::json!({
                    "id": r.id,
                    "statement": r.statement,
                    "anchor": r.anchor,
                    "status": r.status.as_str(),
                    "witness": r.witness,
                })
            })
            .collect();
        serde_json::json!({
            "checks": checks,
            "overall": self.overall().as_str(),
        })
    }

    /// Render as CSV with a header row. Fields containing commas,
    /// quotes, or newlines are quoted per RFC 4180.
    pub fn to_csv(&self) -> String {
        fn field(s: &str) -> String {
            if s.contains([',', '"', '\n', '\r']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        }
        let mut out = String::from("id,anchor,status,statement,witness\n");
        for r in self.sorted() {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                field(&r.id),
                field(&r.anchor),
                field(r.status.as_str()),
                field(&r.statement),
                field(&r.witness),
            ));
        }
        out.push_str(&format!("overall,,{},,\n", self.overall().as_str()));
        out
    }

    /// Render as a GitHub-flavored markdown table.
    pub fn to_markdown(&self) -> String {
        fn cell(s: &str) -> String {
            s.replace('|', "\\|").replace('\n', " ")
        }
        let mut out = String::from("| id | anchor | status | statement | witness |\n");
        out.push_str("|---|---|---|---|---|\n");
        for r in self.sorted() {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                cell(&r.id),
                cell(&r.anchor),
                cell(r.status.as_str()),
                cell(&r.statement),
                cell(&r.witness),
            ));
        }
        out.push_str(&format!("\n**overall: {}**\n", self.overall().as_str()));
        out
    }

    /// Render in the named format: `json`, `csv`, or `md`.
    pub fn render(&self, format: &str) -> crate::Result<String> {
        match format {
            "json" => Ok(format!("{:#}\n", self.to_json())),
            "csv" => Ok(self.to_csv()),
            "md" | "markdown" => Ok(self.to_markdown()),
            other => Err(crate::Error::InvalidWord(format!(
                "unknown output format `{other}` (expected json, csv, or md)"
            ))),
        }
    }
}

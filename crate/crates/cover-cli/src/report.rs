//! Verification report: one record per check, with machine-readable JSON
//! lines and a human-readable table that agree in counts.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "detail")]
pub enum CheckStatus {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    #[serde(flatten)]
    pub status: CheckStatus,
    pub runtime_ms: u64,
    pub witness: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub records: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
        self.records.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| matches!(r.status, CheckStatus::Pass)).count()
    }

    pub fn failed(&self) -> usize {
        self.records.iter().filter(|r| matches!(r.status, CheckStatus::Fail(_))).count()
    }

    pub fn skipped(&self) -> usize {
        self.records.iter().filter(|r| matches!(r.status, CheckStatus::Skipped(_))).count()
    }

    /// One JSON object per line, sorted by check id.
    pub fn render_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("records serialize"));
            out.push('\n');
        }
        out
    }

    pub fn parse_jsonl(text: &str) -> anyhow::Result<VerificationReport> {
        let mut report = VerificationReport::default();
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            report.records.push(serde_json::from_str(line)?);
        }
        Ok(report)
    }

    /// Fixed-width table, one row per check plus a summary line.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let idw = self.records.iter().map(|r| r.id.len()).max().unwrap_or(8).max(8);
        out.push_str(&format!("{:idw$}  {:7}  {:>8}  anchor\n", "check", "status", "ms"));
        for r in &self.records {
            let status = match &r.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail(_) => "FAIL",
                CheckStatus::Skipped(_) => "skip",
            };
            out.push_str(&format!(
                "{:idw$}  {:7}  {:>8}  {}\n",
                r.id, status, r.runtime_ms, r.anchor
            ));
            if let CheckStatus::Fail(msg) = &r.status {
                out.push_str(&format!("{:idw$}  detail: {}\n", "", msg));
            }
        }
        out.push_str(&format!(
            "total {} checks: {} passed, {} failed, {} skipped\n",
            self.records.len(),
            self.passed(),
            self.failed(),
            self.skipped()
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::default();
        r.push(CheckRecord {
            id: "b-check".into(),
            anchor: "lemma:sample".into(),
            status: CheckStatus::Pass,
            runtime_ms: 3,
            witness: "ok".into(),
        });
        r.push(CheckRecord {
            id: "a-check".into(),
            anchor: "prop:other".into(),
            status: CheckStatus::Skipped("over cap".into()),
            runtime_ms: 0,
            witness: String::new(),
        });
        r
    }

    #[test]
    fn jsonl_roundtrip() {
        let report = sample();
        let text = report.render_jsonl();
        let back = VerificationReport::parse_jsonl(&text).unwrap();
        assert_eq!(back.records, report.records);
    }

    #[test]
    fn renderings_agree_in_counts() {
        let report = sample();
        let jsonl_count = report.render_jsonl().lines().count();
        let table = report.render_table();
        assert_eq!(jsonl_count, report.records.len());
        assert!(table.contains("total 2 checks: 1 passed, 0 failed, 1 skipped"));
    }

    #[test]
    fn records_sorted_by_id() {
        let report = sample();
        assert_eq!(report.records[0].id, "a-check");
    }
}

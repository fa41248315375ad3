//! The JSON report schema shared by `stats` and `audit`.
//!
//! A report is a flat object with the [`StatsReport`] fields, a
//! `violations` array (empty for plain statistics runs), and, for audit
//! runs, an `audits` array of per-pass counters.

use serde::Serialize;

use crate::stats::StatsReport;
use crate::surface::AuditReport;

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub audit: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditSummary {
    pub audit: String,
    pub checked: u64,
    pub skipped_empty_intersection: u64,
    pub skipped_degenerate: u64,
    pub passed: bool,
}

impl From<&AuditReport> for AuditSummary {
    fn from(r: &AuditReport) -> Self {
        AuditSummary {
            audit: r.audit.clone(),
            checked: r.checked,
            skipped_empty_intersection: r.skipped_empty_intersection,
            skipped_degenerate: r.skipped_degenerate,
            passed: r.passed(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HarnessReport {
    #[serde(flatten)]
    pub stats: StatsReport,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audits: Option<Vec<AuditSummary>>,
}

impl HarnessReport {
    /// A statistics-only report with an empty violations array.
    pub fn stats_only(stats: StatsReport) -> Self {
        HarnessReport {
            stats,
            violations: Vec::new(),
            audits: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_grid;
    use crate::stats::{stats_report, StatsOptions};

    #[test]
    fn json_has_flat_frozen_field_names() {
        let stats = stats_report(&gen_grid(2), &StatsOptions::default()).unwrap();
        let json = HarnessReport::stats_only(stats).to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        for field in [
            "n",
            "energy",
            "distinct_bisectors",
            "distinct_distances",
            "max_collinear",
            "max_cocircular",
            "isoceles_triples",
            "incidence_mult",
            "sum_m_squared",
            "rich_lines",
            "violations",
        ] {
            assert!(value.get(field).is_some(), "missing field {field}");
        }
        assert_eq!(value["violations"].as_array().unwrap().len(), 0);
        assert_eq!(value["n"], 4);
        assert_eq!(value["energy"], 40);
    }
}

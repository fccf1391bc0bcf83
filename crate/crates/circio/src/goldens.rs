//! Transcribed reference table rows, and the check against
//! recomputed rows.
//!
//! Cells are kept exactly as printed, typos included. Only the verdict column
//! decides pass or fail; a set or orbit cell naming different sets than the
//! recomputed one (member order aside) is reported as a printed-cell warning.

use std::collections::{BTreeMap, BTreeSet};

use anyhow::{Context, Result};
use circio_core::{ConnectionSet, Family, FamilyRow};
use serde::{Deserialize, Serialize};

use crate::report::orbit_cell;

pub const GOLDENS: &str = include_str!("../data/goldens.csv");

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
pub struct GoldenRow {
    pub table: u32,
    pub row: usize,
    pub family: String,
    #[serde(rename = "R")]
    pub r: String,
    pub theta_t2: String,
    pub theta_t4: String,
    pub adam_orbit: String,
    pub verdict: String,
}

impl GoldenRow {
    pub fn family(&self) -> Option<Family> {
        Family::from_letter(&self.family)
    }
}

pub fn load_goldens() -> Result<Vec<GoldenRow>> {
    csv::Reader::from_reader(GOLDENS.as_bytes())
        .deserialize()
        .collect::<Result<Vec<GoldenRow>, _>>()
        .context("parsing embedded golden rows")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub table: u32,
    pub row: usize,
    pub family: String,
    pub column: &'static str,
    pub printed: String,
    pub computed: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GoldenReport {
    pub checked: usize,
    /// Failures: the T1/T2 cell disagrees with the recomputed verdict.
    pub verdict_mismatches: Vec<Discrepancy>,
    /// Warnings: a set or orbit cell names different sets than the recomputed one.
    pub printed_mismatches: Vec<Discrepancy>,
}

impl GoldenReport {
    pub fn passed(&self) -> bool {
        self.verdict_mismatches.is_empty()
    }
}

/// Compares golden rows with recomputed family rows, matched on family and row number.
pub fn verify_goldens(goldens: &[GoldenRow], computed: &[FamilyRow]) -> GoldenReport {
    let index: BTreeMap<(Family, usize), &FamilyRow> =
        computed.iter().map(|r| ((r.family, r.row), r)).collect();
    let mut report = GoldenReport::default();
    for g in goldens {
        report.checked += 1;
        let found = g.family().and_then(|f| index.get(&(f, g.row)));
        let discrepancy = |column, printed: &str, computed: String| Discrepancy {
            table: g.table,
            row: g.row,
            family: g.family.clone(),
            column,
            printed: printed.to_string(),
            computed,
        };
        let Some(row) = found else {
            report
                .verdict_mismatches
                .push(discrepancy("row", &g.family, "no such row".into()));
            continue;
        };
        let cells = [
            ("R", &g.r, row.source().to_text()),
            ("theta_t2", &g.theta_t2, row.image_t2().to_text()),
            ("theta_t4", &g.theta_t4, row.image_t4().to_text()),
            ("adam_orbit", &g.adam_orbit, orbit_cell(&row.record.orbit)),
        ];
        for (column, printed, computed) in cells {
            if !same_sets(printed, &computed) {
                report.printed_mismatches.push(discrepancy(column, printed, computed));
            }
        }
        let verdict = row.record.verdict.label();
        if g.verdict != verdict {
            report
                .verdict_mismatches
                .push(discrepancy("verdict", &g.verdict, verdict.to_string()));
        }
    }
    report
}

/// Compares `;`-separated set lists as sets of parsed connection sets; an unparseable cell never matches.
fn same_sets(printed: &str, computed: &str) -> bool {
    let parse = |cell: &str| -> Option<BTreeSet<ConnectionSet>> {
        cell.split(';').map(|s| s.parse().ok()).collect()
    };
    match (parse(printed), parse(computed)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cell_comparison() {
        assert!(same_sets("C54(3,1,17,19)", "C54(1,3,17,19)"));
        assert!(same_sets("C54(7,9);C54(1,5)", "C54(1,5);C54(7,9)"));
        assert!(!same_sets("C54(1,23.27)", "C54(1,23,27)"));
        assert!(!same_sets("C54(1,2)", "C54(1,2);C54(3,4)"));
    }

    #[test]
    fn embedded_rows_parse() {
        let rows = load_goldens().unwrap();
        assert_eq!(rows.len(), 1022);
        assert!(rows.iter().all(|r| r.family().is_some()));
        assert_eq!(rows.iter().filter(|r| r.verdict == "T2").count(), 960);
        assert_eq!(rows.iter().filter(|r| r.verdict == "T1").count(), 62);
        let tables: std::collections::BTreeSet<_> = rows.iter().map(|r| r.table).collect();
        assert_eq!(tables.len(), 46);
    }
}

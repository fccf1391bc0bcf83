//! CSV and JSON-lines output.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use circio_core::{AdamOrbit, FamilyRow};
use serde::Serialize;

pub const CSV_HEADER: [&str; 6] = ["row", "R", "theta_t2", "theta_t4", "adam_orbit", "verdict"];

/// Orbit members in canonical order, `;`-separated.
pub fn orbit_cell(orbit: &AdamOrbit) -> String {
    orbit
        .members()
        .iter()
        .map(|m| m.to_text())
        .collect::<Vec<_>>()
        .join(";")
}

pub fn csv_fields(row: &FamilyRow) -> [String; 6] {
    [
        row.row.to_string(),
        row.source().to_text(),
        row.image_t2().to_text(),
        row.image_t4().to_text(),
        orbit_cell(&row.record.orbit),
        row.record.verdict.label().to_string(),
    ]
}

pub fn write_csv<W: Write>(rows: &[FamilyRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for row in rows {
        w.write_record(csv_fields(row))?;
    }
    w.flush()?;
    Ok(())
}

/// Writes family rows as CSV, one line per row in enumeration order.
pub fn export_csv(rows: &[FamilyRow], path: &Path) -> Result<()> {
    if rows.is_empty() {
        bail!("refusing to write an empty table to {}", path.display());
    }
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    write_csv(rows, BufWriter::new(file)).with_context(|| format!("writing {}", path.display()))
}

pub fn write_jsonl<W: Write, T: Serialize>(items: &[T], mut out: W) -> Result<()> {
    for item in items {
        serde_json::to_writer(&mut out, item)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

pub fn export_jsonl<T: Serialize>(items: &[T], path: &Path) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    write_jsonl(items, BufWriter::new(file)).with_context(|| format!("writing {}", path.display()))
}

pub fn export_json<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    w.flush().with_context(|| format!("writing {}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use circio_core::enumerate::family_row;
    use circio_core::{Family, FamilySpec, DEFAULT_BUDGET};

    #[test]
    fn first_row_bytes() {
        let spec = FamilySpec::new(Family::A);
        let row = family_row(&spec, 1, vec![3], DEFAULT_BUDGET).unwrap();
        let mut buf = Vec::new();
        write_csv(&[row], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "row,R,theta_t2,theta_t4,adam_orbit,verdict");
        assert_eq!(
            lines[1],
            r#"1,"C54(1,3,17,19)","C54(3,7,11,25)","C54(3,5,13,23)","C54(1,3,17,19);C54(5,13,15,23);C54(7,11,21,25)",T2"#
        );
    }

    #[test]
    fn empty_table_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        assert!(export_csv(&[], &dir.path().join("x.csv")).is_err());
    }
}

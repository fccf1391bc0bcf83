//! File formats, golden-row checks and parallel drivers on top of `circio-core`.

pub mod goldens;
pub mod parallel;
pub mod report;

pub use goldens::{load_goldens, verify_goldens, Discrepancy, GoldenReport, GoldenRow};
pub use parallel::{parallel_family, parallel_scan, worker_count};
pub use report::{export_csv, export_json, export_jsonl, orbit_cell, write_csv, write_jsonl};

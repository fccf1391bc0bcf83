//! Table reproduction, exhaustive scans, generators and open-problem probes.

mod family;
mod generators;
mod probe;
mod scan;

pub use family::{
    enumerate_family, family_row, Family, FamilyRow, FamilySpec, FAMILY_MODULUS, FAMILY_ORDER,
    FAMILY_SHIFTS,
};
pub use generators::{a17c_indices, c1_tuple, generate_a17c, generate_c1};
pub use probe::{open_problem_pairs, probe_open_problems, ProbeEntry};
pub use scan::{
    full_scan, RawPair, ScanClass, ScanConfig, ScanCounts, ScanPair, ScanPlan, ScanReport,
    ScanTask, DEFAULT_CEILING, SCAN_CONVENTION,
};

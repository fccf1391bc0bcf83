//! Multi-threaded drivers for the scan and the family tables.

use anyhow::{Context, Result};
use circio_core::enumerate::{family_row, ScanPlan};
use circio_core::{Family, FamilyRow, FamilySpec, ScanConfig, ScanReport};
use rayon::prelude::*;

pub const WORKERS_ENV: &str = "CIRCIO_WORKERS";

/// Worker count from `CIRCIO_WORKERS`, else the number of available cores.
pub fn worker_count() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => {
            let n: usize = v
                .trim()
                .parse()
                .with_context(|| format!("{WORKERS_ENV}={v:?} is not a worker count"))?;
            Ok(n.max(1))
        }
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .context("starting worker pool")
}

/// Runs the scan tasks on `workers` threads; the report is identical to the single-threaded one.
pub fn parallel_scan(n: u32, config: ScanConfig, workers: usize) -> Result<ScanReport> {
    let plan = ScanPlan::new(n, config)?;
    let tasks = plan.tasks();
    let raw = pool(workers)?.install(|| {
        tasks
            .par_iter()
            .flat_map_iter(|&task| plan.run(task))
            .collect::<Vec<_>>()
    });
    Ok(plan.assemble(raw))
}

/// All 511 rows of one family, classified in parallel, in row order.
pub fn parallel_family(family: Family, budget: u64, workers: usize) -> Result<Vec<FamilyRow>> {
    let spec = FamilySpec::new(family);
    let subsets = spec.subsets();
    let rows = pool(workers)?.install(|| {
        subsets
            .into_par_iter()
            .enumerate()
            .map(|(i, extra)| family_row(&spec, i + 1, extra, budget))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use circio_core::full_scan;

    #[test]
    fn worker_count_does_not_change_scans() {
        for n in [16, 27] {
            let serial = full_scan(n, ScanConfig::default()).unwrap();
            for workers in [1, 3] {
                assert_eq!(parallel_scan(n, ScanConfig::default(), workers).unwrap(), serial);
            }
        }
    }
}

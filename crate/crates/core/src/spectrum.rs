//! Closed-form adjacency spectrum of circulant graphs.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::connection::ConnectionSet;

/// Absolute tolerance used when comparing sorted spectra.
pub const SPECTRUM_TOLERANCE: f64 = 1e-9;

/// Eigenvalues `λ_k = Σ 2cos(2πks/n)` (the jump `n/2` contributes `cos(πk)`), sorted ascending.
pub fn adjacency_spectrum(cs: &ConnectionSet) -> Vec<f64> {
    let n = cs.order() as u64;
    let mut out: Vec<f64> = (0..n)
        .map(|k| {
            cs.jumps()
                .iter()
                .map(|&s| {
                    let s = s as u64;
                    // reduce k·s first so the cosine argument stays in [0, 2π)
                    let angle = 2.0 * PI * ((k * s) % n) as f64 / n as f64;
                    if 2 * s == n {
                        libm::cos(angle)
                    } else {
                        2.0 * libm::cos(angle)
                    }
                })
                .sum()
        })
        .collect();
    out.sort_by(f64::total_cmp);
    out
}

/// Index of the first eigenvalue that differs by more than `tol`, or `None` if the spectra agree.
pub fn spectra_match(a: &[f64], b: &[f64], tol: f64) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| (x - y).abs() > tol)
}

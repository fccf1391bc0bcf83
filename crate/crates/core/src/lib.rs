//! Isomorphism of circulant graphs `C_n(R)`.
//!
//! Two constructive notions are implemented side by side:
//!
//! * **Type-1 (Adam) isomorphism**: `C_n(S) = C_n(xR)` for a unit `x` of `Z_n`
//!   ([`multipliers`]).
//! * **Type-2 isomorphism w.r.t. `m`**: the vertex map
//!   `x -> x + (x mod m)·t·m (mod n)` carries `C_n(R)` onto a circulant
//!   `C_n(S)` that is not in the Adam orbit of `R` ([`theta`]).
//!
//! An independent individualization-refinement canonical labeler
//! ([`oracle`]) decides isomorphism without either construction, and is used
//! to cross-check witnesses and to probe pairs for which no witness exists.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line driver and the parallel scan live in the `circio` crate.
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod connection;
pub mod enumerate;
mod error;
pub mod graph;
pub mod multipliers;
pub mod oracle;
pub mod spectrum;
pub mod theta;

pub use crate::classify::{
    classify_pair, classify_tuple, Classification, PairRecord, TupleRecord, TupleVerdict, Verdict,
};
pub use crate::connection::{full_difference_set, reflexive_reduce, ConnectionSet, ParseError};
pub use crate::error::Error;
pub use crate::graph::{is_circulant, CirculantGraph, EdgeImage};
pub use crate::multipliers::{
    adam_orbit, is_adam_equivalent, multiply_set, units, AdamOrbit, UnitGroup,
};
pub use crate::oracle::{
    canonical_form, canonical_form_of, isomorphic, refinement_signature, AdjacencyGraph, verify_permutation, CanonicalForm, Certificate, IsoVerdict,
    DEFAULT_BUDGET,
};
pub use crate::spectrum::{adjacency_spectrum, spectra_match, SPECTRUM_TOLERANCE};
pub use crate::enumerate::{
    enumerate_family, full_scan, generate_a17c, generate_c1, probe_open_problems, Family,
    FamilyRow, FamilySpec, ProbeEntry, ScanConfig, ScanReport,
};
pub use crate::theta::{
    valid_moduli, theta_image, theta_params_valid, theta_scan, theta_vertex_map, theta_witness, union_shift,
    ThetaParams, ThetaWitness,
};

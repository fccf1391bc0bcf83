//! Pair and tuple classification: Type-1, Type-2, non-isomorphic or unknown.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::connection::ConnectionSet;
use crate::graph::CirculantGraph;
use crate::multipliers::{adam_orbit, is_adam_equivalent, AdamOrbit};
use crate::oracle::{isomorphic, Certificate, IsoVerdict};
use crate::theta::{image_unchecked, theta_witness, valid_moduli, ThetaParams};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind"))]
pub enum Verdict {
    /// `b = x·a` for the smallest such unit.
    Type1 { x: u32 },
    /// `θ_{n,m,t}` carries `chain[0]` onto `chain[1]`, and no unit does.
    Type2 {
        m: u32,
        t: u32,
        chain: Vec<ConnectionSet>,
    },
    NonIsomorphic { certificate: Certificate },
    Unknown { reason: String },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Type1 { .. } => "Type1",
            Verdict::Type2 { .. } => "Type2",
            Verdict::NonIsomorphic { .. } => "NonIsomorphic",
            Verdict::Unknown { .. } => "Unknown",
        }
    }

    /// Type-1 or Type-2: isomorphism backed by a constructive witness.
    pub fn is_witnessed(&self) -> bool {
        matches!(self, Verdict::Type1 { .. } | Verdict::Type2 { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Type1 { x } => write!(f, "Type1 x={x}"),
            Verdict::Type2 { m, t, .. } => write!(f, "Type2 m={m} t={t}"),
            Verdict::NonIsomorphic { certificate } => write!(f, "NonIsomorphic {certificate}"),
            Verdict::Unknown { reason } => write!(f, "Unknown ({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Classification {
    pub verdict: Verdict,
    /// Adam orbit of the first member.
    pub orbit: AdamOrbit,
}

pub const UNKNOWN_NO_WITNESS: &str = "isomorphic, no Type-1/Type-2 witness found";
pub const UNKNOWN_BUDGET: &str = "budget";

fn theta_search(a: &ConnectionSet, b: &ConnectionSet) -> Option<Verdict> {
    let n = a.order();
    if a.len() < 3 || a.len() != b.len() {
        return None;
    }
    for m in valid_moduli(n) {
        let shared = a.jumps().iter().any(|&r| r % m == 0 && b.contains(r));
        if !shared {
            continue;
        }
        for t in 1..n / m {
            let params = ThetaParams::new(n, m, t).expect("t below n/m");
            if image_unchecked(a, params).as_ref() == Some(b) {
                let witness = theta_witness(a, m, t)
                    .expect("validated parameters")
                    .expect("image already known to be circulant");
                return Some(Verdict::Type2 {
                    m,
                    t,
                    chain: vec![witness.source, witness.image],
                });
            }
        }
    }
    None
}

/// Classifies an ordered pair.
///
/// Identical sets are reported as `Type1 { x: 1 }`.
pub fn classify_pair(
    a: &ConnectionSet,
    b: &ConnectionSet,
    budget: u64,
) -> Result<Classification, Error> {
    let orbit = adam_orbit(a);
    let verdict = if let Some(x) = is_adam_equivalent(a, b)? {
        Verdict::Type1 { x }
    } else if let Some(v) = theta_search(a, b) {
        v
    } else {
        let ga = CirculantGraph::new(a.clone());
        let gb = CirculantGraph::new(b.clone());
        match isomorphic(&ga, &gb, budget)? {
            IsoVerdict::NonIsomorphic { certificate } => Verdict::NonIsomorphic { certificate },
            IsoVerdict::Isomorphic { .. } => Verdict::Unknown {
                reason: UNKNOWN_NO_WITNESS.into(),
            },
            IsoVerdict::Timeout { .. } => Verdict::Unknown {
                reason: UNKNOWN_BUDGET.into(),
            },
        }
    };
    Ok(Classification { verdict, orbit })
}

/// One classified pair `members[i]`, `members[j]` of a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum TupleVerdict {
    Type1,
    Type2,
    NonIsomorphic,
    Unknown,
}

impl TupleVerdict {
    /// Short label used in the table column.
    pub fn label(self) -> &'static str {
        match self {
            TupleVerdict::Type1 => "T1",
            TupleVerdict::Type2 => "T2",
            TupleVerdict::NonIsomorphic => "NI",
            TupleVerdict::Unknown => "UNK",
        }
    }

    pub fn from_label(s: &str) -> Option<Self> {
        Some(match s {
            "T1" => TupleVerdict::Type1,
            "T2" => TupleVerdict::Type2,
            "NI" => TupleVerdict::NonIsomorphic,
            "UNK" => TupleVerdict::Unknown,
            _ => return None,
        })
    }
}

impl fmt::Display for TupleVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TupleRecord {
    pub members: Vec<ConnectionSet>,
    /// `(m, t, image)` for every circulant image of the first member, by `m` then `t`.
    pub theta_images: Vec<(u32, u32, ConnectionSet)>,
    pub pairs: Vec<PairRecord>,
    pub verdict: TupleVerdict,
    /// Adam orbit of the first member.
    pub orbit: AdamOrbit,
}

impl TupleRecord {
    pub fn theta_image(&self, m: u32, t: u32) -> Option<&ConnectionSet> {
        self.theta_images
            .iter()
            .find(|(mm, tt, _)| *mm == m && *tt == t)
            .map(|(_, _, s)| s)
    }
}

fn first_image_scan(cs: &ConnectionSet) -> Vec<(u32, u32, ConnectionSet)> {
    let n = cs.order();
    let mut out = Vec::new();
    for m in valid_moduli(n) {
        if !cs.jumps().iter().any(|j| j % m == 0) {
            continue;
        }
        for t in 1..n / m {
            let params = ThetaParams::new(n, m, t).expect("t below n/m");
            if let Some(img) = image_unchecked(cs, params) {
                out.push((m, t, img));
            }
        }
    }
    out
}

/// Classifies every pair of a tuple and combines the verdicts.
///
/// The tuple is `Type1` when every pair is Adam-equivalent, and `Type2` when
/// the witnessed pairs connect all members and at least one pair is not
/// Adam-equivalent. A single non-isomorphic pair makes the tuple
/// `NonIsomorphic`; anything else is `Unknown`.
pub fn classify_tuple(members: &[ConnectionSet], budget: u64) -> Result<TupleRecord, Error> {
    if members.len() < 2 {
        return Err(Error::InvalidTuple("a tuple needs at least two members"));
    }
    let n = members[0].order();
    for m in members {
        if m.order() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: m.order(),
            });
        }
    }
    for (i, a) in members.iter().enumerate() {
        if members[i + 1..].contains(a) {
            return Err(Error::InvalidTuple("tuple members must be pairwise distinct"));
        }
    }
    let k = members.len();
    let mut pairs = Vec::with_capacity(k * (k - 1) / 2);
    let mut component: Vec<usize> = (0..k).collect();
    for i in 0..k {
        for j in i + 1..k {
            let verdict = classify_pair(&members[i], &members[j], budget)?.verdict;
            if verdict.is_witnessed() {
                let (ci, cj) = (component[i], component[j]);
                for c in component.iter_mut() {
                    if *c == cj {
                        *c = ci;
                    }
                }
            }
            pairs.push(PairRecord { i, j, verdict });
        }
    }
    let connected = component.iter().all(|&c| c == component[0]);
    let verdict = if pairs
        .iter()
        .any(|p| matches!(p.verdict, Verdict::NonIsomorphic { .. }))
    {
        TupleVerdict::NonIsomorphic
    } else if pairs.iter().all(|p| matches!(p.verdict, Verdict::Type1 { .. })) {
        TupleVerdict::Type1
    } else if connected {
        TupleVerdict::Type2
    } else {
        TupleVerdict::Unknown
    };
    Ok(TupleRecord {
        members: members.to_vec(),
        theta_images: first_image_scan(&members[0]),
        pairs,
        verdict,
        orbit: adam_orbit(&members[0]),
    })
}

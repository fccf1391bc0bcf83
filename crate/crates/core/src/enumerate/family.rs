//! The two 511-row families of order-54 triples.

use alloc::vec::Vec;
use core::fmt;

use crate::classify::{classify_tuple, TupleRecord};
use crate::connection::ConnectionSet;
use crate::theta::union_shift;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Family {
    A,
    B,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'a',
            Family::B => 'b',
        }
    }

    pub fn from_letter(c: &str) -> Option<Self> {
        match c {
            "a" | "A" => Some(Family::A),
            "b" | "B" => Some(Family::B),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Base set without multiples of 3, plus the pool of multiples of 3 added to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub base: ConnectionSet,
    pub pool: Vec<u32>,
}

pub const FAMILY_ORDER: u32 = 54;
pub const FAMILY_MODULUS: u32 = 3;
/// The two shifts whose images make up each triple.
pub const FAMILY_SHIFTS: [u32; 2] = [2, 4];

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        let base: &[u32] = match family {
            Family::A => &[1, 17, 19],
            Family::B => &[2, 16, 20],
        };
        FamilySpec {
            family,
            base: ConnectionSet::new(FAMILY_ORDER, base).expect("family base is reduced"),
            pool: (1..=9).map(|k| 3 * k).collect(),
        }
    }

    /// Nonempty subsets of the pool, by size and then lexicographically.
    pub fn subsets(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity((1 << self.pool.len()) - 1);
        for size in 1..=self.pool.len() {
            combinations(&self.pool, size, &mut Vec::new(), 0, &mut out);
        }
        out
    }
}

fn combinations(pool: &[u32], size: usize, cur: &mut Vec<u32>, from: usize, out: &mut Vec<Vec<u32>>) {
    if cur.len() == size {
        out.push(cur.clone());
        return;
    }
    for i in from..pool.len() {
        if pool.len() - i < size - cur.len() {
            break;
        }
        cur.push(pool[i]);
        combinations(pool, size, cur, i + 1, out);
        cur.pop();
    }
}

/// One table row: `R = base ∪ extra` with its two images and verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FamilyRow {
    pub family: Family,
    /// 1-based row number.
    pub row: usize,
    pub extra: Vec<u32>,
    pub record: TupleRecord,
}

impl FamilyRow {
    pub fn source(&self) -> &ConnectionSet {
        &self.record.members[0]
    }

    pub fn image_t2(&self) -> &ConnectionSet {
        &self.record.members[1]
    }

    pub fn image_t4(&self) -> &ConnectionSet {
        &self.record.members[2]
    }
}

/// Builds and classifies the 511 triples `(R, θ_{54,3,2}(R), θ_{54,3,4}(R))`.
pub fn enumerate_family(spec: &FamilySpec, budget: u64) -> Result<Vec<FamilyRow>, Error> {
    spec.subsets()
        .into_iter()
        .enumerate()
        .map(|(i, extra)| family_row(spec, i + 1, extra, budget))
        .collect()
}

/// Builds and classifies row `row` (1-based) of a family.
pub fn family_row(
    spec: &FamilySpec,
    row: usize,
    extra: Vec<u32>,
    budget: u64,
) -> Result<FamilyRow, Error> {
    let extra_set = ConnectionSet::new(FAMILY_ORDER, &extra)?;
    let source = spec.base.union(&extra_set)?;
    let mut members = Vec::with_capacity(3);
    members.push(source);
    for t in FAMILY_SHIFTS {
        let image = union_shift(&spec.base, &extra_set, FAMILY_MODULUS, t)?
            .ok_or(Error::InvalidParams {
                n: FAMILY_ORDER,
                m: FAMILY_MODULUS,
                t,
            })?;
        members.push(image);
    }
    Ok(FamilyRow {
        family: spec.family,
        row,
        extra,
        record: classify_tuple(&members, budget)?,
    })
}

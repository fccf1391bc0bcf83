//! Type-1 (Adam) isomorphism: the unit group of `Z_n` acting on connection sets.

use alloc::vec::Vec;

use crate::connection::ConnectionSet;
use crate::Error;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Residues in `[1, n)` coprime to `n`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    n: u32,
    units: Vec<u32>,
}

impl UnitGroup {
    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn units(&self) -> &[u32] {
        &self.units
    }

    /// Euler's φ(n).
    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.units.binary_search(&x).is_ok()
    }

    /// Representatives below or at `n/2`; `x` and `n - x` act identically on connection sets.
    pub fn half(&self) -> impl Iterator<Item = u32> + '_ {
        let n = self.n;
        self.units.iter().copied().filter(move |&x| 2 * x <= n)
    }
}

pub fn units(n: u32) -> UnitGroup {
    let units = if n < 2 {
        Vec::new()
    } else {
        (1..n).filter(|&x| gcd(n as u64, x as u64) == 1).collect()
    };
    UnitGroup { n, units }
}

fn scale_unchecked(cs: &ConnectionSet, x: u32) -> ConnectionSet {
    let n = cs.order() as u64;
    let raw: Vec<i64> = cs
        .jumps()
        .iter()
        .map(|&j| ((j as u64 * x as u64) % n) as i64)
        .collect();
    // a unit never sends a non-zero residue to 0
    crate::connection::reflexive_reduce(&raw, cs.order()).expect("unit multiple of a jump is nonzero")
}

/// `{x·j mod n : j ∈ R}` reflexively reduced.
pub fn multiply_set(cs: &ConnectionSet, x: u32) -> Result<ConnectionSet, Error> {
    let n = cs.order();
    if gcd(n as u64, x as u64) != 1 {
        return Err(Error::NotAUnit { x, n });
    }
    Ok(scale_unchecked(cs, x % n))
}

/// The Adam orbit `Ad_n(C_n(R)) = { C_n(xR) : x ∈ φ_n }`.
///
/// Members are sorted; the first is the canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct AdamOrbit {
    n: u32,
    members: Vec<ConnectionSet>,
}

impl AdamOrbit {
    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn members(&self) -> &[ConnectionSet] {
        &self.members
    }

    pub fn representative(&self) -> &ConnectionSet {
        &self.members[0]
    }

    pub fn contains(&self, cs: &ConnectionSet) -> bool {
        self.members.binary_search(cs).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn adam_orbit(cs: &ConnectionSet) -> AdamOrbit {
    let group = units(cs.order());
    let mut members: Vec<ConnectionSet> = group.half().map(|x| scale_unchecked(cs, x)).collect();
    members.sort();
    members.dedup();
    AdamOrbit {
        n: cs.order(),
        members,
    }
}

/// Smallest unit `x` with `xa = b`, if any.
pub fn is_adam_equivalent(a: &ConnectionSet, b: &ConnectionSet) -> Result<Option<u32>, Error> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    Ok(units(a.order())
        .units()
        .iter()
        .copied()
        .find(|&x| scale_unchecked(a, x) == *b))
}

/// Lookup tables for multiplying bitmask-encoded jump sets, used by the scans.
#[derive(Clone, Debug)]
pub(crate) struct MaskMultipliers {
    /// For each unit representative `x <= n/2`, `table[j - 1]` is the bit of `reduce(x·j)`.
    tables: Vec<Vec<u64>>,
}

impl MaskMultipliers {
    pub(crate) fn new(n: u32) -> Self {
        let half = n / 2;
        let tables = units(n)
            .half()
            .map(|x| {
                (1..=half)
                    .map(|j| {
                        let r = (j as u64 * x as u64 % n as u64) as u32;
                        1u64 << (r.min(n - r) - 1)
                    })
                    .collect()
            })
            .collect();
        MaskMultipliers { tables }
    }

    fn apply(table: &[u64], mut mask: u64) -> u64 {
        let mut out = 0;
        while mask != 0 {
            let b = mask.trailing_zeros() as usize;
            out |= table[b];
            mask &= mask - 1;
        }
        out
    }

    pub(crate) fn equivalent(&self, a: u64, b: u64) -> bool {
        a.count_ones() == b.count_ones() && self.tables.iter().any(|t| Self::apply(t, a) == b)
    }

    /// Least member of the Adam orbit (as a mask, compared like a sorted jump list).
    pub(crate) fn canonical(&self, mask: u64) -> u64 {
        self.tables
            .iter()
            .map(|t| Self::apply(t, mask))
            .min_by(|x, y| mask_lex_cmp(*x, *y))
            .unwrap_or(mask)
    }
}

/// Orders masks the same way [`ConnectionSet`] orders jump lists.
pub(crate) fn mask_lex_cmp(a: u64, b: u64) -> core::cmp::Ordering {
    use core::cmp::Ordering;
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
        if x != y {
            return x.cmp(&y);
        }
        a &= a - 1;
        b &= b - 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn cs(n: u32, j: &[u32]) -> ConnectionSet {
        ConnectionSet::new(n, j).unwrap()
    }

    #[test]
    fn unit_groups() {
        assert_eq!(
            units(54).units(),
            &[1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37, 41, 43, 47, 49, 53]
        );
        assert_eq!(units(54).half().collect::<Vec<_>>(), vec![1, 5, 7, 11, 13, 17, 19, 23, 25]);
        assert_eq!(units(2).units(), &[1]);
        assert_eq!(units(16).units(), &[1, 3, 5, 7, 9, 11, 13, 15]);
        // closure and φ
        let g = units(54);
        for &a in g.units() {
            for &b in g.units() {
                assert!(g.contains(a * b % 54));
            }
        }
    }

    #[test]
    fn multiplier_identities() {
        let r = cs(54, &[1, 9, 17, 19]);
        assert_eq!(multiply_set(&r, 5).unwrap(), cs(54, &[5, 9, 13, 23]));
        assert_eq!(multiply_set(&r, 7).unwrap(), cs(54, &[7, 9, 11, 25]));
        assert_eq!(multiply_set(&r, 1).unwrap(), r);
        assert_eq!(multiply_set(&r, 3), Err(Error::NotAUnit { x: 3, n: 54 }));
    }

    #[test]
    fn orbits() {
        let orbit = adam_orbit(&cs(54, &[1, 3, 17, 19]));
        assert_eq!(
            orbit.members(),
            &[cs(54, &[1, 3, 17, 19]), cs(54, &[5, 13, 15, 23]), cs(54, &[7, 11, 21, 25])]
        );
        let orbit = adam_orbit(&cs(54, &[2, 3, 16, 20]));
        assert_eq!(
            orbit.members(),
            &[cs(54, &[2, 3, 16, 20]), cs(54, &[4, 14, 21, 22]), cs(54, &[8, 10, 15, 26])]
        );
        assert_eq!(adam_orbit(&cs(54, &[27])).members(), &[cs(54, &[27])]);
    }

    #[test]
    fn adam_witnesses() {
        let a = cs(54, &[1, 9, 17, 19]);
        assert_eq!(is_adam_equivalent(&a, &cs(54, &[5, 9, 13, 23])), Ok(Some(5)));
        assert_eq!(
            is_adam_equivalent(&cs(54, &[1, 3, 17, 19]), &cs(54, &[3, 7, 11, 25])),
            Ok(None)
        );
        assert_eq!(is_adam_equivalent(&a, &a), Ok(Some(1)));
        assert!(matches!(
            is_adam_equivalent(&a, &cs(48, &[1])),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn mask_tables_agree_with_sets() {
        let mm = MaskMultipliers::new(54);
        let a = cs(54, &[1, 3, 17, 19]);
        let orbit = adam_orbit(&a);
        assert_eq!(
            ConnectionSet::from_mask(54, mm.canonical(a.to_mask())),
            orbit.representative().clone()
        );
        for m in orbit.members() {
            assert!(mm.equivalent(a.to_mask(), m.to_mask()));
        }
        assert!(!mm.equivalent(a.to_mask(), cs(54, &[3, 7, 11, 25]).to_mask()));
    }

    #[test]
    fn mask_order_matches_set_order() {
        for (x, y) in [(&[1u32, 5][..], &[1u32, 4][..]), (&[2], &[1, 9]), (&[1, 2], &[1])] {
            let (a, b) = (cs(20, x), cs(20, y));
            assert_eq!(mask_lex_cmp(a.to_mask(), b.to_mask()), a.cmp(&b));
        }
    }
}

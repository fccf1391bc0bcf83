//! The Type-2 transform `θ_{n,m,t}`.
//!
//! `θ_{n,m,t}` maps vertex `x = qm + j` (`0 <= j < m`) to `x + j·t·m (mod n)`.
//! Because `x` and its image agree modulo `m`, an edge with jump `s` is sent to
//! an edge whose difference is congruent to `s` modulo `m`; edges whose jump is
//! a multiple of `m` are sent to edges of the same jump.

use alloc::vec::Vec;

use crate::connection::ConnectionSet;
use crate::graph::{is_circulant, CirculantGraph, EdgeImage};
use crate::Error;

/// Parameters `(n, m, t)` with `m > 1`, `m^3 | n` and `0 <= t < n/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThetaParams {
    n: u32,
    m: u32,
    t: u32,
}

impl ThetaParams {
    pub fn new(n: u32, m: u32, t: u32) -> Result<Self, Error> {
        if m < 2 || !cube_divides(m, n) || t >= n / m {
            return Err(Error::InvalidParams { n, m, t });
        }
        Ok(ThetaParams { n, m, t })
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Image of a single vertex.
    pub fn apply(&self, x: u32) -> u32 {
        map_vertex(self.n, self.m, self.t, x)
    }
}

pub(crate) fn cube_divides(m: u32, n: u32) -> bool {
    let cube = (m as u64).pow(3);
    cube <= n as u64 && (n as u64).is_multiple_of(cube)
}

/// Valid block moduli for order `n`: every `m > 1` with `m^3 | n`, ascending.
pub fn valid_moduli(n: u32) -> Vec<u32> {
    (2..).take_while(|m: &u32| (*m as u64).pow(3) <= n as u64).filter(|&m| cube_divides(m, n)).collect()
}

#[inline]
pub(crate) fn map_vertex(n: u32, m: u32, t: u32, x: u32) -> u32 {
    let j = (x % m) as u64;
    ((x as u64 + j * t as u64 * m as u64) % n as u64) as u32
}

/// True iff `m^3 | n` and some jump of `cs` is a multiple of `m`.
pub fn theta_params_valid(n: u32, m: u32, cs: &ConnectionSet) -> bool {
    m >= 2 && cs.order() == n && cube_divides(m, n) && cs.jumps().iter().any(|j| j % m == 0)
}

/// The permutation `x -> x + (x mod m)·t·m (mod n)` as an image table.
pub fn theta_vertex_map(params: ThetaParams) -> Result<Vec<u32>, Error> {
    let ThetaParams { n, m, t } = params;
    let map: Vec<u32> = (0..n).map(|x| map_vertex(n, m, t, x)).collect();
    let mut seen = alloc::vec![false; n as usize];
    for &y in &map {
        if core::mem::replace(&mut seen[y as usize], true) {
            return Err(Error::NotBijective { n, m, t });
        }
    }
    Ok(map)
}

fn checked_params(cs: &ConnectionSet, m: u32, t: u32) -> Result<ThetaParams, Error> {
    let n = cs.order();
    if !theta_params_valid(n, m, cs) {
        return Err(Error::InvalidParams { n, m, t });
    }
    ThetaParams::new(n, m, t)
}

/// Image of `C_n(cs)` under `θ` without the "some jump is a multiple of m" precondition.
pub(crate) fn image_unchecked(cs: &ConnectionSet, params: ThetaParams) -> Option<ConnectionSet> {
    let map = theta_vertex_map(params).expect("theta map is a bijection whenever m | n");
    is_circulant(&EdgeImage::from_map(&CirculantGraph::new(cs.clone()), &map))
}

/// `θ_{n,m,t}(C_n(cs))` when that image is circulant.
pub fn theta_image(cs: &ConnectionSet, m: u32, t: u32) -> Result<Option<ConnectionSet>, Error> {
    let params = checked_params(cs, m, t)?;
    Ok(image_unchecked(cs, params))
}

/// A verified Type-2 isomorphism `C_n(source) -> C_n(image)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaWitness {
    pub params: ThetaParams,
    pub source: ConnectionSet,
    pub image: ConnectionSet,
    pub vertex_map: Vec<u32>,
}

impl ThetaWitness {
    /// Re-checks edge by edge that `vertex_map` sends the source edges onto the image edges.
    pub fn verify(&self) -> bool {
        let src = CirculantGraph::new(self.source.clone());
        let dst = CirculantGraph::new(self.image.clone());
        if src.edge_count() != dst.edge_count() || self.vertex_map.len() != src.order() as usize {
            return false;
        }
        src.edges().into_iter().all(|(a, b)| {
            dst.adjacent(self.vertex_map[a as usize], self.vertex_map[b as usize])
        })
    }
}

pub fn theta_witness(cs: &ConnectionSet, m: u32, t: u32) -> Result<Option<ThetaWitness>, Error> {
    let params = checked_params(cs, m, t)?;
    let vertex_map = theta_vertex_map(params)?;
    let Some(image) = is_circulant(&EdgeImage::from_map(&CirculantGraph::new(cs.clone()), &vertex_map))
    else {
        return Ok(None);
    };
    let witness = ThetaWitness {
        params,
        source: cs.clone(),
        image,
        vertex_map,
    };
    assert!(witness.verify(), "theta witness failed re-verification for {cs} m={m} t={t}");
    Ok(Some(witness))
}

/// Every `t` in `[1, n/m - 1]` whose image is circulant, ascending.
pub fn theta_scan(cs: &ConnectionSet, m: u32) -> Result<Vec<(u32, ConnectionSet)>, Error> {
    checked_params(cs, m, 0)?;
    let n = cs.order();
    let mut out = Vec::new();
    for t in 1..n / m {
        let params = ThetaParams::new(n, m, t)?;
        if let Some(img) = image_unchecked(cs, params) {
            debug_assert_eq!(img.multiples_of(m), cs.multiples_of(m));
            out.push((t, img));
        }
    }
    Ok(out)
}

/// `θ(cs ∪ extra)` computed as `θ(cs) ∪ extra`, where `extra` holds multiples of `m`.
pub fn union_shift(
    cs: &ConnectionSet,
    extra: &ConnectionSet,
    m: u32,
    t: u32,
) -> Result<Option<ConnectionSet>, Error> {
    if let Some(&bad) = extra.jumps().iter().find(|&&e| e % m != 0) {
        return Err(Error::NotMultipleOfM { value: bad, m });
    }
    let whole = cs.union(extra)?;
    let params = checked_params(&whole, m, t)?;
    let fast = match image_unchecked(cs, params) {
        Some(img) => Some(img.union(extra)?),
        None => None,
    };
    debug_assert_eq!(fast, image_unchecked(&whole, params));
    Ok(fast)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(n: u32, j: &[u32]) -> ConnectionSet {
        ConnectionSet::new(n, j).unwrap()
    }

    #[test]
    fn params_validity() {
        assert!(theta_params_valid(54, 3, &cs(54, &[1, 3, 17, 19])));
        assert!(!theta_params_valid(54, 2, &cs(54, &[1, 3, 17, 19])));
        let r = cs(54, &[1, 17, 19]);
        assert!(!r.jumps().iter().any(|j| j % 3 == 0));
        assert!(!theta_params_valid(54, 3, &r));
        assert!(ThetaParams::new(54, 3, 18).is_err());
        assert!(ThetaParams::new(54, 3, 17).is_ok());
        assert_eq!(valid_moduli(54), [3]);
        assert_eq!(valid_moduli(16), [2]);
        assert_eq!(valid_moduli(216), [2, 3, 6]);
        assert!(valid_moduli(20).is_empty());
    }

    #[test]
    fn vertex_map_values() {
        let map = theta_vertex_map(ThetaParams::new(54, 3, 2).unwrap()).unwrap();
        assert_eq!((map[1], map[17], map[3]), (7, 29, 3));
        let id = theta_vertex_map(ThetaParams::new(54, 3, 0).unwrap()).unwrap();
        assert!(id.iter().enumerate().all(|(x, &y)| x as u32 == y));
        let map = theta_vertex_map(ThetaParams::new(54, 3, 4).unwrap()).unwrap();
        // 19 = 6·3 + 1, so it moves by 1·4·3
        assert_eq!((map[1], map[19]), (13, 31));
        let d = map[19] as i64 - map[0] as i64;
        assert_eq!(crate::reflexive_reduce(&[d], 54).unwrap().jumps(), &[23]);
    }

    #[test]
    fn worked_images() {
        let r = cs(54, &[1, 3, 17, 19]);
        assert_eq!(theta_image(&r, 3, 2).unwrap(), Some(cs(54, &[3, 7, 11, 25])));
        assert_eq!(theta_image(&r, 3, 4).unwrap(), Some(cs(54, &[3, 5, 13, 23])));
        assert_eq!(theta_image(&r, 3, 0).unwrap(), Some(r.clone()));
        let b = cs(54, &[2, 3, 16, 20]);
        assert_eq!(theta_image(&b, 3, 2).unwrap(), Some(cs(54, &[3, 4, 14, 22])));
        assert_eq!(theta_image(&b, 3, 4).unwrap(), Some(cs(54, &[3, 8, 10, 26])));
        assert!(matches!(theta_image(&r, 2, 1), Err(Error::InvalidParams { .. })));
    }

    #[test]
    fn t1_image_of_unit_only_family_is_not_circulant() {
        // without the precondition the t = 1 image of C54(1,17,19) is checked directly
        let params = ThetaParams::new(54, 3, 1).unwrap();
        assert_eq!(image_unchecked(&cs(54, &[1, 17, 19]), params), None);
    }

    #[test]
    fn witnesses() {
        let w = theta_witness(&cs(54, &[1, 3, 17, 19]), 3, 2).unwrap().unwrap();
        assert_eq!(w.image, cs(54, &[3, 7, 11, 25]));
        assert!(w.verify());
        let w0 = theta_witness(&cs(54, &[1, 3, 17, 19]), 3, 0).unwrap().unwrap();
        assert_eq!(w0.image, w0.source);
        let w = theta_witness(&cs(54, &[1, 9, 17, 19]), 3, 2).unwrap().unwrap();
        assert_eq!(w.image, cs(54, &[7, 9, 11, 25]));
        let mut broken = w.clone();
        broken.vertex_map.swap(0, 1);
        assert!(!broken.verify());
    }

    #[test]
    fn scans() {
        let hits = theta_scan(&cs(54, &[1, 3, 17, 19]), 3).unwrap();
        assert!(hits.contains(&(2, cs(54, &[3, 7, 11, 25]))));
        assert!(hits.contains(&(4, cs(54, &[3, 5, 13, 23]))));
        assert!(hits.contains(&(6, cs(54, &[1, 3, 17, 19]))));
        let hits = theta_scan(&cs(54, &[27]), 3).unwrap();
        assert_eq!(hits.len(), 17);
        assert!(hits.iter().all(|(_, s)| *s == cs(54, &[27])));
        let hits = theta_scan(&cs(54, &[2, 3, 16, 20]), 3).unwrap();
        assert!(hits.contains(&(2, cs(54, &[3, 4, 14, 22]))));
    }

    #[test]
    fn union_shift_examples() {
        let r = cs(54, &[1, 3, 17, 19]);
        assert_eq!(
            union_shift(&r, &cs(54, &[9]), 3, 2).unwrap(),
            Some(cs(54, &[3, 7, 9, 11, 25]))
        );
        assert_eq!(
            theta_image(&cs(54, &[1, 3, 9, 17, 19]), 3, 2).unwrap(),
            Some(cs(54, &[3, 7, 9, 11, 25]))
        );
        assert_eq!(union_shift(&r, &cs(54, &[]), 3, 2).unwrap(), Some(cs(54, &[3, 7, 11, 25])));
        let b = cs(54, &[2, 3, 16, 20]);
        let got = union_shift(&b, &cs(54, &[18, 27]), 3, 4).unwrap();
        assert_eq!(got, Some(cs(54, &[3, 8, 10, 18, 26, 27])));
        assert_eq!(got, theta_image(&cs(54, &[2, 3, 16, 18, 20, 27]), 3, 4).unwrap());
        assert_eq!(
            union_shift(&r, &cs(54, &[10]), 3, 2),
            Err(Error::NotMultipleOfM { value: 10, m: 3 })
        );
    }
}

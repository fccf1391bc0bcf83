//! Edge model of `C_n(R)` and the rotation-invariance test.

use alloc::vec::Vec;

use crate::connection::{reflexive_reduce, ConnectionSet};

/// A circulant graph on `Z_n`: `x ~ y` iff the reduced residue of `y - x` is a jump.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantGraph {
    cs: ConnectionSet,
}

impl CirculantGraph {
    pub fn new(cs: ConnectionSet) -> Self {
        CirculantGraph { cs }
    }

    pub fn connection_set(&self) -> &ConnectionSet {
        &self.cs
    }

    pub fn order(&self) -> u32 {
        self.cs.order()
    }

    pub fn degree(&self) -> usize {
        self.cs.degree()
    }

    pub fn edge_count(&self) -> usize {
        self.cs.order() as usize * self.cs.degree() / 2
    }

    pub fn adjacent(&self, x: u32, y: u32) -> bool {
        let n = self.cs.order();
        let d = (y + n - x % n) % n;
        d != 0 && self.cs.contains(d.min(n - d))
    }

    /// Neighbours of `x`, ascending.
    pub fn neighbors(&self, x: u32) -> Vec<u32> {
        let n = self.cs.order();
        let mut out: Vec<u32> = Vec::with_capacity(self.degree());
        for &s in self.cs.jumps() {
            out.push((x + s) % n);
            if 2 * s != n {
                out.push((x + n - s) % n);
            }
        }
        out.sort_unstable();
        out
    }

    /// Every edge once, as `(min, max)`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let n = self.cs.order();
        let mut out = Vec::with_capacity(self.edge_count());
        for x in 0..n {
            for &s in self.cs.jumps() {
                if 2 * s == n && x >= n / 2 {
                    continue;
                }
                let y = (x + s) % n;
                out.push((x.min(y), x.max(y)));
            }
        }
        out.sort_unstable();
        out
    }
}

/// Image of an edge set under a vertex map, pairs stored as `(min, max)` and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeImage {
    n: u32,
    pairs: Vec<(u32, u32)>,
}

impl EdgeImage {
    /// Maps every edge of `g` through `map` (`map[x]` is the image of `x`).
    pub fn from_map(g: &CirculantGraph, map: &[u32]) -> Self {
        assert_eq!(map.len(), g.order() as usize);
        let pairs = g
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let (u, v) = (map[a as usize], map[b as usize]);
                (u.min(v), u.max(v))
            })
            .collect();
        EdgeImage::new(g.order(), pairs)
    }

    pub fn new(n: u32, mut pairs: Vec<(u32, u32)>) -> Self {
        for p in pairs.iter_mut() {
            debug_assert!(p.0 != p.1 && p.0 < n && p.1 < n);
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        pairs.sort_unstable();
        EdgeImage { n, pairs }
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    fn has(&self, a: u32, b: u32) -> bool {
        self.pairs.binary_search(&(a.min(b), a.max(b))).is_ok()
    }
}

/// Returns the connection set of the image when it is rotation-invariant.
///
/// A repeated pair means the map was not injective on edges, which is never
/// circulant.
pub fn is_circulant(img: &EdgeImage) -> Option<ConnectionSet> {
    let n = img.n;
    if img.pairs.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    for &(a, b) in &img.pairs {
        if !img.has((a + 1) % n, (b + 1) % n) {
            return None;
        }
    }
    let raw: Vec<i64> = img
        .pairs
        .iter()
        .take_while(|p| p.0 == 0)
        .map(|p| p.1 as i64)
        .collect();
    let cs = reflexive_reduce(&raw, n).ok()?;
    debug_assert_eq!(
        CirculantGraph::new(cs.clone()).edge_count(),
        img.pairs.len()
    );
    Some(cs)
}

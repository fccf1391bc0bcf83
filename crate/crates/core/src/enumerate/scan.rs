//! Exhaustive Type-2 scans over every connection set of a small order.
//!
//! For a block modulus `m`, a connection set splits as `R = B ∪ M` where `M`
//! holds the multiples of `m`. Jumps in `M` are fixed by every `θ_{n,m,t}` and
//! the image edges they contribute never mix with those of `B`, so
//! `θ(B ∪ M)` is circulant exactly when `θ(B)` is, and then equals
//! `θ(B) ∪ M`. The scan therefore walks the `B` space only (in Gray-code order,
//! one XOR per step) and lifts each circulant hit to all nonempty `M`.
//!
//! Work is cut into independent [`ScanTask`]s; [`ScanPlan::assemble`] sorts
//! the merged output, so the report does not depend on how tasks were run.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::connection::ConnectionSet;
use crate::multipliers::{mask_lex_cmp, MaskMultipliers};
use crate::theta::{map_vertex, valid_moduli};
use crate::Error;

/// Default limit on `2^(n/2)`, the size of the connection-set space.
pub const DEFAULT_CEILING: u128 = 1 << 27;

/// Number of low `B` bits walked inside one task.
const LOW_BITS: usize = 12;

pub const SCAN_CONVENTION: &str = "pairs: unordered {R, S} with R != S, |R| >= 3, \
R containing a multiple of m, S = theta_{n,m,t}(R) for some 1 <= t < n/m, and S not in the \
Adam orbit of R; tuples: connected components of the pair graph; each count is also \
reported modulo Adam equivalence and modulo complementation of the jump set";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    /// Only sets with at most this many jumps are considered.
    pub max_jump_count: Option<usize>,
    pub ceiling: u128,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            max_jump_count: None,
            ceiling: DEFAULT_CEILING,
        }
    }
}

#[derive(Clone, Debug)]
struct ModulusPlan {
    m: u32,
    /// Jump bits not divisible by `m`.
    free: Vec<u64>,
    free_jumps: Vec<u32>,
    /// Every nonempty union of multiples of `m`, as masks.
    extras: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ScanTask {
    pub m: u32,
    pub t: u32,
    /// Value of the `B` bits above the ones walked inside the task.
    pub chunk: u64,
}

/// A Type-2 pair found by a task, as jump masks; `a` precedes `b` in set order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RawPair {
    pub a: u64,
    pub b: u64,
    pub m: u32,
    pub t: u32,
}

#[derive(Clone, Debug)]
pub struct ScanPlan {
    n: u32,
    config: ScanConfig,
    moduli: Vec<ModulusPlan>,
    multipliers: MaskMultipliers,
}

impl ScanPlan {
    pub fn new(n: u32, config: ScanConfig) -> Result<Self, Error> {
        if n < 2 {
            return Err(Error::InvalidOrder(n as u64));
        }
        let half = n / 2;
        let subsets = 1u128 << half;
        // difference masks are single words, so n <= 64 is a hard limit
        if subsets > config.ceiling || n > 64 {
            return Err(Error::Intractable {
                n,
                subsets,
                ceiling: config.ceiling,
            });
        }
        let moduli = valid_moduli(n)
            .into_iter()
            .map(|m| {
                let free_jumps: Vec<u32> = (1..=half).filter(|j| j % m != 0).collect();
                let fixed: Vec<u64> = (1..=half).filter(|j| j % m == 0).map(|j| 1 << (j - 1)).collect();
                let extras = (1u64..1 << fixed.len())
                    .map(|sel| {
                        fixed
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| sel >> k & 1 == 1)
                            .fold(0, |acc, (_, bit)| acc | bit)
                    })
                    .collect();
                ModulusPlan {
                    m,
                    free: free_jumps.iter().map(|j| 1u64 << (j - 1)).collect(),
                    free_jumps,
                    extras,
                }
            })
            .collect();
        Ok(ScanPlan {
            n,
            config,
            moduli,
            multipliers: MaskMultipliers::new(n),
        })
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn moduli(&self) -> Vec<u32> {
        self.moduli.iter().map(|p| p.m).collect()
    }

    pub fn tasks(&self) -> Vec<ScanTask> {
        let mut out = Vec::new();
        for plan in &self.moduli {
            let chunks = 1u64 << plan.free.len().saturating_sub(LOW_BITS);
            for t in 1..self.n / plan.m {
                for chunk in 0..chunks {
                    out.push(ScanTask {
                        m: plan.m,
                        t,
                        chunk,
                    });
                }
            }
        }
        out
    }

    pub fn run(&self, task: ScanTask) -> Vec<RawPair> {
        let plan = self
            .moduli
            .iter()
            .find(|p| p.m == task.m)
            .expect("task built from this plan");
        let n = self.n;
        let map: Vec<u32> = (0..n).map(|x| map_vertex(n, task.m, task.t, x)).collect();
        // per free jump, per source vertex: differences of the image neighbours
        let diffs: Vec<Vec<u64>> = plan
            .free_jumps
            .iter()
            .map(|&s| {
                (0..n)
                    .map(|x| {
                        let fx = map[x as usize];
                        [(x + s) % n, (x + n - s) % n]
                            .iter()
                            .fold(0u64, |acc, &y| acc | 1 << ((map[y as usize] + n - fx) % n))
                    })
                    .collect()
            })
            .collect();
        let f = plan.free.len();
        let low = f.min(LOW_BITS);
        let mut cur = vec![0u64; n as usize];
        let mut b = 0u64;
        for (k, (jump, diff)) in plan.free.iter().zip(&diffs).enumerate().skip(low) {
            if task.chunk >> (k - low) & 1 == 1 {
                b |= jump;
                for (c, d) in cur.iter_mut().zip(diff) {
                    *c ^= d;
                }
            }
        }
        let mut out = Vec::new();
        for i in 0u64..1 << low {
            if i > 0 {
                let k = i.trailing_zeros() as usize;
                b ^= plan.free[k];
                // edges of distinct jumps have distinct images, so XOR adds or removes exactly one jump
                for (c, d) in cur.iter_mut().zip(&diffs[k]) {
                    *c ^= d;
                }
            }
            if b != 0 && cur.iter().all(|&c| c == cur[0]) {
                self.lift(plan, task, b, cur[0], &mut out);
            }
        }
        out
    }

    fn lift(&self, plan: &ModulusPlan, task: ScanTask, b: u64, diff: u64, out: &mut Vec<RawPair>) {
        let n = self.n;
        let mut image = 0u64;
        let mut d = diff;
        while d != 0 {
            let r = d.trailing_zeros();
            image |= 1 << (r.min(n - r) - 1);
            d &= d - 1;
        }
        if image == b {
            return;
        }
        let cap = self.config.max_jump_count.unwrap_or(usize::MAX);
        for &extra in &plan.extras {
            let (r, s) = (b | extra, image | extra);
            let size = r.count_ones() as usize;
            if size < 3 || size > cap || s.count_ones() as usize > cap {
                continue;
            }
            // the inverse shift n/m - t finds the pair from the other side
            if mask_lex_cmp(r, s) != core::cmp::Ordering::Less {
                continue;
            }
            if self.multipliers.equivalent(r, s) {
                continue;
            }
            out.push(RawPair {
                a: r,
                b: s,
                m: task.m,
                t: task.t,
            });
        }
    }

    /// Merges task outputs into a report; the result is independent of task order.
    pub fn assemble(&self, mut raw: Vec<RawPair>) -> ScanReport {
        let n = self.n;
        raw.sort_unstable_by(|x, y| {
            mask_lex_cmp(x.a, y.a)
                .then_with(|| mask_lex_cmp(x.b, y.b))
                .then_with(|| (x.m, x.t).cmp(&(y.m, y.t)))
        });
        raw.dedup_by(|later, earlier| later.a == earlier.a && later.b == earlier.b);

        let full = (1u64 << (n / 2)) - 1;
        let ordered = |x: u64, y: u64| if x <= y { (x, y) } else { (y, x) };
        let canon = |x: u64| self.multipliers.canonical(x);
        let pairs_mod_adam: BTreeSet<(u64, u64)> =
            raw.iter().map(|p| ordered(canon(p.a), canon(p.b))).collect();
        let pairs_mod_complement: BTreeSet<(u64, u64)> = raw
            .iter()
            .map(|p| ordered(p.a, p.b).min(ordered(full ^ p.a, full ^ p.b)))
            .collect();

        // connected components of the pair graph
        let mut index: BTreeMap<u64, usize> = BTreeMap::new();
        for p in &raw {
            let next = index.len();
            index.entry(p.a).or_insert(next);
            let next = index.len();
            index.entry(p.b).or_insert(next);
        }
        let mut parent: Vec<usize> = (0..index.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in &raw {
            let (x, y) = (find(&mut parent, index[&p.a]), find(&mut parent, index[&p.b]));
            if x != y {
                parent[x.max(y)] = x.min(y);
            }
        }
        let mut groups: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        for (&mask, &i) in &index {
            let root = find(&mut parent, i);
            groups.entry(root).or_default().push(mask);
        }
        let mut classes: Vec<Vec<u64>> = groups.into_values().collect();
        for c in &mut classes {
            c.sort_unstable_by(|x, y| mask_lex_cmp(*x, *y));
        }
        classes.sort_unstable_by(|x, y| mask_lex_cmp(x[0], y[0]));

        let mut class_sizes: BTreeMap<usize, usize> = BTreeMap::new();
        let mut adam_keys: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut complement_keys: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut records = Vec::new();
        for c in &classes {
            *class_sizes.entry(c.len()).or_default() += 1;
            let mut reps: Vec<u64> = c.iter().map(|&x| canon(x)).collect();
            reps.sort_unstable_by(|x, y| mask_lex_cmp(*x, *y));
            reps.dedup();
            let mut plain: Vec<u64> = c.clone();
            plain.sort_unstable();
            let mut comp: Vec<u64> = c.iter().map(|&x| full ^ x).collect();
            comp.sort_unstable();
            complement_keys.insert(plain.min(comp));
            if adam_keys.insert(reps.clone()) {
                records.push(ScanClass {
                    members: c.iter().map(|&x| ConnectionSet::from_mask(n, x)).collect(),
                    adam_representatives: reps
                        .iter()
                        .map(|&x| ConnectionSet::from_mask(n, x))
                        .collect(),
                });
            }
        }

        ScanReport {
            n,
            moduli: self.moduli(),
            max_jump_count: self.config.max_jump_count,
            convention: SCAN_CONVENTION,
            counts: ScanCounts {
                raw_pairs: raw.len(),
                pairs_mod_adam: pairs_mod_adam.len(),
                pairs_mod_complement: pairs_mod_complement.len(),
                tuples: classes.len(),
                tuples_mod_adam: adam_keys.len(),
                tuples_mod_complement: complement_keys.len(),
                class_sizes: class_sizes.into_iter().collect(),
            },
            pairs: raw
                .iter()
                .map(|p| ScanPair {
                    source: ConnectionSet::from_mask(n, p.a),
                    image: ConnectionSet::from_mask(n, p.b),
                    m: p.m,
                    t: p.t,
                })
                .collect(),
            classes: records,
        }
    }
}

/// A Type-2 pair with the smallest `(m, t)` carrying `source` onto `image`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ScanPair {
    pub source: ConnectionSet,
    pub image: ConnectionSet,
    pub m: u32,
    pub t: u32,
}

/// A maximal theta-connected class, kept once per set of Adam representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ScanClass {
    pub members: Vec<ConnectionSet>,
    pub adam_representatives: Vec<ConnectionSet>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ScanCounts {
    pub raw_pairs: usize,
    pub pairs_mod_adam: usize,
    pub pairs_mod_complement: usize,
    pub tuples: usize,
    pub tuples_mod_adam: usize,
    pub tuples_mod_complement: usize,
    /// `(class size, number of classes)`, ascending by size.
    pub class_sizes: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ScanReport {
    pub n: u32,
    pub moduli: Vec<u32>,
    pub max_jump_count: Option<usize>,
    pub convention: &'static str,
    pub counts: ScanCounts,
    pub pairs: Vec<ScanPair>,
    pub classes: Vec<ScanClass>,
}

/// Single-threaded scan; see [`ScanPlan`] for the parallel building blocks.
pub fn full_scan(n: u32, config: ScanConfig) -> Result<ScanReport, Error> {
    let plan = ScanPlan::new(n, config)?;
    let raw = plan.tasks().into_iter().flat_map(|task| plan.run(task)).collect();
    Ok(plan.assemble(raw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipliers::is_adam_equivalent;
    use crate::theta::theta_image;

    /// Direct scan over every set with the plain theta engine.
    fn brute_pairs(n: u32) -> BTreeSet<(ConnectionSet, ConnectionSet)> {
        let half = n / 2;
        let mut out = BTreeSet::new();
        for mask in 1u64..1 << half {
            let r = ConnectionSet::from_mask(n, mask);
            if r.len() < 3 {
                continue;
            }
            for m in valid_moduli(n) {
                if !r.jumps().iter().any(|j| j % m == 0) {
                    continue;
                }
                for t in 1..n / m {
                    if let Some(s) = theta_image(&r, m, t).unwrap() {
                        if s != r && is_adam_equivalent(&r, &s).unwrap().is_none() {
                            out.insert(if r < s { (r.clone(), s) } else { (s, r.clone()) });
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn matches_brute_force() {
        for n in [8u32, 16, 24] {
            let report = full_scan(n, ScanConfig::default()).unwrap();
            let fast: BTreeSet<_> = report
                .pairs
                .iter()
                .map(|p| (p.source.clone(), p.image.clone()))
                .collect();
            assert_eq!(fast, brute_pairs(n), "n={n}");
        }
    }

    #[test]
    fn order_eight_has_no_pairs() {
        let report = full_scan(8, ScanConfig::default()).unwrap();
        assert_eq!(report.counts.raw_pairs, 0);
    }

    #[test]
    fn task_order_does_not_matter() {
        let plan = ScanPlan::new(32, ScanConfig::default()).unwrap();
        let mut tasks = plan.tasks();
        let forward: Vec<_> = tasks.iter().flat_map(|&t| plan.run(t)).collect();
        tasks.reverse();
        let backward: Vec<_> = tasks.iter().flat_map(|&t| plan.run(t)).collect();
        assert_eq!(plan.assemble(forward), plan.assemble(backward));
    }

    #[test]
    fn ceiling_is_enforced() {
        let err = ScanPlan::new(
            40,
            ScanConfig {
                max_jump_count: None,
                ceiling: 1 << 10,
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::Intractable { n: 40, .. }));
        assert!(ScanPlan::new(80, ScanConfig { max_jump_count: None, ceiling: u128::MAX }).is_err());
    }

    #[test]
    fn jump_cap() {
        let report = full_scan(
            27,
            ScanConfig {
                max_jump_count: Some(3),
                ..ScanConfig::default()
            },
        )
        .unwrap();
        assert!(report.pairs.iter().all(|p| p.source.len() <= 3));
    }
}

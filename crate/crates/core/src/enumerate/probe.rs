//! Oracle runs on pairs whose isomorphism status is posed as open.

use alloc::vec::Vec;

use crate::connection::ConnectionSet;
use crate::graph::CirculantGraph;
use crate::oracle::{isomorphic, IsoVerdict};
use crate::Error;

/// One oracle verdict on a pair from an open problem.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ProbeEntry {
    /// Problem label, e.g. `op1(a)`.
    pub problem: &'static str,
    pub s: u32,
    pub left: ConnectionSet,
    pub right: ConnectionSet,
    pub verdict: IsoVerdict,
}

/// The pairs probed, without running the oracle.
pub fn open_problem_pairs() -> Vec<(&'static str, u32, ConnectionSet, ConnectionSet)> {
    let set = |n: u32, j: &[u32]| ConnectionSet::new(n, j).expect("probe sets are valid");
    let mut out = Vec::new();
    for s in [3, 9, 15, 21] {
        out.push(("op1(a)", s, set(48, &[1, s, 23]), set(48, &[s, 11, 13])));
    }
    for s in [3, 9, 15, 21] {
        out.push(("op1(b)", s, set(48, &[5, s, 19]), set(48, &[s, 7, 17])));
    }
    for s in [2, 4, 8, 10, 14, 16, 20, 22, 26] {
        let triple = [
            set(54, &[1, s, 17, 19]),
            set(54, &[5, s, 13, 23]),
            set(54, &[s, 7, 11, 25]),
        ];
        for i in 0..3 {
            for j in i + 1..3 {
                out.push(("op5", s, triple[i].clone(), triple[j].clone()));
            }
        }
    }
    out
}

/// Runs the oracle on every open-problem pair; a timeout is recorded, not raised.
pub fn probe_open_problems(budget: u64) -> Result<Vec<ProbeEntry>, Error> {
    open_problem_pairs()
        .into_iter()
        .map(|(problem, s, left, right)| {
            let verdict = isomorphic(
                &CirculantGraph::new(left.clone()),
                &CirculantGraph::new(right.clone()),
                budget,
            )?;
            Ok(ProbeEntry {
                problem,
                s,
                left,
                right,
                verdict,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_list() {
        let pairs = open_problem_pairs();
        assert_eq!(pairs.len(), 8 + 27);
        assert_eq!(pairs[0].2.to_text(), "C48(1,3,23)");
        assert_eq!(pairs[0].3.to_text(), "C48(3,11,13)");
        assert_eq!(pairs[5].2.to_text(), "C48(5,9,19)");
        assert_eq!(pairs[5].3.to_text(), "C48(7,9,17)");
        assert_eq!(pairs[8].2.to_text(), "C54(1,2,17,19)");
    }
}

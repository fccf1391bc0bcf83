//! Connection sets and reflexive modular reduction.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// The jump set of a circulant graph `C_n(R)`.
///
/// Jumps are kept reflexively reduced: every jump `j` satisfies
/// `1 <= j <= n/2` and the sequence is strictly increasing. The only way in
/// is [`reflexive_reduce`] (or a parser built on it), so the invariants hold
/// for every value of this type.
///
/// Ordering is by order first, then lexicographically by jump sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConnectionSet {
    n: u32,
    jumps: Vec<u32>,
}

/// Reduces `raw` modulo `n` and folds every residue `r > n/2` onto `n - r`.
///
/// The result is sorted and deduplicated. A raw value congruent to 0 is a
/// loop and is rejected.
pub fn reflexive_reduce(raw: &[i64], n: u32) -> Result<ConnectionSet, Error> {
    if n < 2 {
        return Err(Error::InvalidOrder(n as u64));
    }
    let modulus = n as i64;
    let mut jumps = Vec::with_capacity(raw.len());
    for &r in raw {
        let res = r.rem_euclid(modulus) as u32;
        if res == 0 {
            return Err(Error::ZeroJump { raw: r, n });
        }
        jumps.push(res.min(n - res));
    }
    jumps.sort_unstable();
    jumps.dedup();
    Ok(ConnectionSet { n, jumps })
}

/// All residues `s` and `n - s` for `s` in the set; `n/2` appears once.
pub fn full_difference_set(cs: &ConnectionSet) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * cs.jumps.len());
    for &s in &cs.jumps {
        out.push(s);
        if 2 * s != cs.n {
            out.push(cs.n - s);
        }
    }
    out.sort_unstable();
    out
}

impl ConnectionSet {
    /// Builds a connection set from already-reduced unsigned jumps.
    pub fn new(n: u32, jumps: &[u32]) -> Result<Self, Error> {
        let raw: Vec<i64> = jumps.iter().map(|&j| j as i64).collect();
        reflexive_reduce(&raw, n)
    }

    /// Builds a connection set from a bitmask where bit `j - 1` stands for jump `j`.
    pub fn from_mask(n: u32, mask: u64) -> Self {
        debug_assert!(n >= 2 && n / 2 <= 64);
        debug_assert!(n / 2 == 64 || mask >> (n / 2) == 0);
        let jumps = (0..64u32)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| b + 1)
            .collect();
        ConnectionSet { n, jumps }
    }

    /// Bitmask form; bit `j - 1` is set for each jump `j`. Requires `n/2 <= 64`.
    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.n / 2 <= 64);
        self.jumps.iter().fold(0u64, |m, &j| m | 1 << (j - 1))
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn jumps(&self) -> &[u32] {
        &self.jumps
    }

    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    pub fn contains(&self, jump: u32) -> bool {
        self.jumps.binary_search(&jump).is_ok()
    }

    /// Degree of every vertex of `C_n(self)`.
    pub fn degree(&self) -> usize {
        2 * self.jumps.len() - usize::from(self.n.is_multiple_of(2) && self.contains(self.n / 2))
    }

    /// Set union of two connection sets of the same order.
    pub fn union(&self, other: &ConnectionSet) -> Result<ConnectionSet, Error> {
        if self.n != other.n {
            return Err(Error::OrderMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut jumps = self.jumps.clone();
        jumps.extend_from_slice(&other.jumps);
        jumps.sort_unstable();
        jumps.dedup();
        Ok(ConnectionSet { n: self.n, jumps })
    }

    /// The jumps of `[1, n/2]` not in this set (the connection set of the complement graph).
    pub fn complement(&self) -> ConnectionSet {
        let jumps = (1..=self.n / 2).filter(|j| !self.contains(*j)).collect();
        ConnectionSet { n: self.n, jumps }
    }

    /// The jumps divisible by `m`.
    pub fn multiples_of(&self, m: u32) -> Vec<u32> {
        self.jumps.iter().copied().filter(|j| j % m == 0).collect()
    }

    /// Text form, e.g. `C54(1,3,17,19)`.
    pub fn to_text(&self) -> String {
        alloc::format!("{self}")
    }
}

impl fmt::Display for ConnectionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}(", self.n)?;
        for (i, j) in self.jumps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str(")")
    }
}

/// Failure to read the `C<n>(<j1>,<j2>,...)` text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax(String),
    Invalid(Error),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax(msg) => write!(f, "malformed connection set: {msg}"),
            ParseError::Invalid(e) => write!(f, "invalid connection set: {e}"),
        }
    }
}

impl core::error::Error for ParseError {}

impl FromStr for ConnectionSet {
    type Err = ParseError;

    /// Parses `C<n>(<j1>,...)`. Whitespace is ignored and jumps may be any
    /// integers; they are reflexively reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = |msg: &str| ParseError::Syntax(alloc::format!("{msg} in {s:?}"));
        let rest = compact
            .strip_prefix('C')
            .or_else(|| compact.strip_prefix('c'))
            .ok_or_else(|| syntax("expected leading 'C'"))?;
        let open = rest.find('(').ok_or_else(|| syntax("expected '('"))?;
        let body = rest[open + 1..]
            .strip_suffix(')')
            .ok_or_else(|| syntax("expected trailing ')'"))?;
        let n: u32 = rest[..open]
            .parse()
            .map_err(|_| syntax("bad order"))?;
        let mut raw = Vec::new();
        if !body.is_empty() {
            for tok in body.split(',') {
                raw.push(tok.parse::<i64>().map_err(|_| syntax("bad jump"))?);
            }
        }
        reflexive_reduce(&raw, n).map_err(ParseError::Invalid)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for ConnectionSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for ConnectionSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

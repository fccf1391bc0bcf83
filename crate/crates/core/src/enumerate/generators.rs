//! Constructive families of Type-2 isomorphic circulants.

use alloc::vec::Vec;

use crate::connection::{reflexive_reduce, ConnectionSet};
use crate::Error;

/// The pair `R = {2, 2s-1, 4k-(2s-1)}`, `S = {2, 2k-(2s-1), 2k+2s-1}` of order `8k`.
///
/// `θ_{8k,2,k}` and `θ_{8k,2,3k}` both carry `R` onto `S`.
pub fn generate_a17c(k: u32, s: u32) -> Result<(ConnectionSet, ConnectionSet), Error> {
    if k < 2 {
        return Err(Error::InvalidIndex("k must be at least 2"));
    }
    if s < 1 || s > k {
        return Err(Error::InvalidIndex("s must satisfy 1 <= 2s-1 <= 2k-1"));
    }
    let odd = 2 * s - 1;
    if odd == k {
        return Err(Error::DegeneratePair { k, s });
    }
    let n = 8 * k;
    let (k, odd) = (k as i64, odd as i64);
    let r = reflexive_reduce(&[2, odd, 4 * k - odd], n)?;
    let s = reflexive_reduce(&[2, 2 * k - odd, 2 * k + odd], n)?;
    Ok((r, s))
}

/// Every valid `s` for a given `k`, with the degenerate one left out.
pub fn a17c_indices(k: u32) -> impl Iterator<Item = u32> {
    (1..=k).filter(move |&s| 2 * s - 1 != k)
}

fn is_odd_prime(p: u32) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `R_i` of order `base·p³`: `{p, d, base·p²±d, 2·base·p²±d, …, base·p³-d, base·p³-p}` with
/// `d = (i-1)·x·p·base + x + y·p`.
///
/// `θ_{base·p³, p, j·base}` carries `R_i` onto `R_{i+j}`, indices taken modulo `p`.
pub fn generate_c1(base: u32, p: u32, x: u32, y: u32, i: u32) -> Result<ConnectionSet, Error> {
    if base < 1 {
        return Err(Error::InvalidIndex("base must be positive"));
    }
    if !is_odd_prime(p) {
        return Err(Error::InvalidIndex("p must be an odd prime"));
    }
    if i < 1 || i > p {
        return Err(Error::InvalidIndex("i must satisfy 1 <= i <= p"));
    }
    if x < 1 || x > p - 1 {
        return Err(Error::InvalidIndex("x must satisfy 1 <= x <= p-1"));
    }
    if y > base * p - 1 {
        return Err(Error::InvalidIndex("y must satisfy 0 <= y <= base*p-1"));
    }
    let offset = x + y * p;
    if offset > base * p * p - 1 {
        return Err(Error::InvalidIndex("x+yp must satisfy 1 <= x+yp <= base*p^2-1"));
    }
    let (base, p, x) = (base as i64, p as i64, x as i64);
    let n = base * p * p * p;
    let block = base * p * p;
    let d = (i as i64 - 1) * x * p * base + offset as i64;
    let mut raw: Vec<i64> = Vec::with_capacity(2 * p as usize + 2);
    raw.push(p);
    raw.push(d);
    for k in 1..p {
        raw.push(k * block - d);
        raw.push(k * block + d);
    }
    raw.push(n - d);
    raw.push(n - p);
    reflexive_reduce(&raw, n as u32)
}

/// The `p` sets `R_1, …, R_p` for one parameter choice.
pub fn c1_tuple(base: u32, p: u32, x: u32, y: u32) -> Result<Vec<ConnectionSet>, Error> {
    (1..=p).map(|i| generate_c1(base, p, x, y, i)).collect()
}

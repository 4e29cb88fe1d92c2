//! Additive utilities on `Z/n` and exact searches for the largest symmetric
//! sets avoiding sum and cube patterns.
//!
//! Triple counts use ordered pairs: `(x, y)` and `(y, x)` count separately.

mod extremal;

use std::collections::BTreeSet;

pub use extremal::{
    is_free, known_construction, max_extremal, max_extremal_with_limits, Ambient, ExtremalProblem,
    ExtremalResult, Method, Subset, Variant, Violation,
};

fn reduce(a: &[u32], n: u32) -> Vec<u32> {
    a.iter().map(|&x| x % n).collect()
}

/// Representation counts `#{(a, b) : a + b = x}` for each `x` in `Z/n`.
fn representation_counts(a: &[u32], b: &[u32], n: u32) -> Vec<u64> {
    let mut counts = vec![0u64; n as usize];
    let (a, b) = (dedup(reduce(a, n)), dedup(reduce(b, n)));
    for &x in &a {
        for &y in &b {
            counts[((x + y) % n) as usize] += 1;
        }
    }
    counts
}

fn dedup(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v.dedup();
    v
}

/// `A + B` in `Z/n`, ascending. Empty if either input is empty.
pub fn sumset(a: &[u32], b: &[u32], n: u32) -> Vec<u32> {
    popular_sums(a, b, n, 1)
}

/// Sums in `Z/n` with at least `k` representations `a + b`, ascending.
/// `k = 0` is treated as 1.
pub fn popular_sums(a: &[u32], b: &[u32], n: u32, k: u64) -> Vec<u32> {
    if n == 0 {
        return Vec::new();
    }
    let k = k.max(1);
    representation_counts(a, b, n)
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c >= k)
        .map(|(x, _)| x as u32)
        .collect()
}

/// Ordered pairs `(x, y)` in `X × X` with `x + y` in `X` (mod `n`).
pub fn count_additive_triples(x: &[u32], n: u32) -> u64 {
    if n == 0 {
        return 0;
    }
    let xs = dedup(reduce(x, n));
    let counts = representation_counts(&xs, &xs, n);
    xs.iter().map(|&s| counts[s as usize]).sum()
}

/// `{x, y, z, x+y, x+z, y+z, x+y+z}` over the integers.
pub fn cube_set(x: i64, y: i64, z: i64) -> BTreeSet<i64> {
    [x, y, z, x + y, x + z, y + z, x + y + z]
        .into_iter()
        .collect()
}

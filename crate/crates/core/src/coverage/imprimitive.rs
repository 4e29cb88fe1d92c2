//! Membership of cycle types in imprimitive wreath products `S_b wr S_{n/b}`.
//!
//! An element lies in a conjugate of `S_b wr S_{n/b}` iff its cycles can be
//! grouped into cells, one per cycle of the induced action on blocks, such
//! that a cell of block-cycle length `d` has total size `d * b` and every
//! cycle in it has length divisible by `d`.

use std::collections::HashSet;

use super::check_block_size;
use crate::arith::{divisors, gcd, is_prime, smallest_prime_factor};
use crate::cycle_type::CycleType;
use crate::error::{domain, Result};

/// Set-partition enumeration is used for the criterion up to this many cycles;
/// beyond it the exact block search is quantified over all block sizes instead.
const LEMMA_MAX_CYCLES: usize = 10;

/// Exact test for a fixed block size `b`, by backtracking over cells.
pub fn covers_imprimitive_exact(b: u32, t: &CycleType) -> Result<bool> {
    let n = t.n();
    check_block_size(n, b)?;
    if t.is_identity() {
        return Ok(true);
    }
    let g = t.parts_gcd();
    if g % b == 0 || g % (n / b) == 0 {
        return Ok(true);
    }
    let big: Vec<u32> = t.parts().iter().copied().filter(|&x| x > 1).collect();
    let ones = t.k() - big.len() as u32;
    let mut search = CellSearch {
        b,
        failed: HashSet::new(),
    };
    Ok(search.solve(&big, ones))
}

struct CellSearch {
    b: u32,
    failed: HashSet<(Vec<u32>, u32)>,
}

impl CellSearch {
    /// `parts` are the cycles longer than 1, largest first.
    fn solve(&mut self, parts: &[u32], ones: u32) -> bool {
        let Some((&x, rest)) = parts.split_first() else {
            return ones % self.b == 0;
        };
        let key = (parts.to_vec(), ones);
        if self.failed.contains(&key) {
            return false;
        }
        // The largest remaining cycle opens a cell; larger block-cycle lengths first.
        for d in divisors(x.into()).into_iter().rev() {
            let d = d as u32;
            if x / d > self.b {
                break;
            }
            let mut used = vec![false; rest.len()];
            if self.fill(rest, 0, self.b - x / d, d, ones, &mut used) {
                return true;
            }
        }
        self.failed.insert(key);
        false
    }

    fn fill(
        &mut self,
        rest: &[u32],
        start: usize,
        need: u32,
        d: u32,
        ones: u32,
        used: &mut [bool],
    ) -> bool {
        if need == 0 || (d == 1 && need <= ones) {
            let remaining: Vec<u32> = rest
                .iter()
                .zip(used.iter())
                .filter(|(_, &u)| !u)
                .map(|(&y, _)| y)
                .collect();
            let ones_left = if d == 1 { ones - need } else { ones };
            if self.solve(&remaining, ones_left) {
                return true;
            }
            if need == 0 {
                return false;
            }
        }
        for i in start..rest.len() {
            let y = rest[i];
            if y % d != 0 || y / d > need {
                continue;
            }
            if i > start && rest[i - 1] == y {
                continue;
            }
            used[i] = true;
            if self.fill(rest, i + 1, need - y / d, d, ones, used) {
                return true;
            }
            used[i] = false;
        }
        false
    }
}

/// Whether some imprimitive wreath product contains type `t`, with a block size
/// witnessing it.
///
/// Follows the structural criterion: a common prime factor of all cycle
/// lengths gives blocks of that size; otherwise a grouping of the cycles into
/// cells (neither all singletons nor one cell) must exist with
/// `b = gcd(cell sums)` and `(cell sum) / b` dividing every cycle in the cell.
pub fn covered_by_some_imprimitive(t: &CycleType) -> Option<u32> {
    let n = t.n();
    if n < 4 || is_prime(n.into()) {
        return None;
    }
    let p1 = smallest_prime_factor(n.into()).expect("composite") as u32;
    if t.is_identity() || t.is_full_cycle() {
        return Some(p1);
    }
    let g = t.parts_gcd();
    if g > 1 {
        return Some(smallest_prime_factor(g.into()).expect("g > 1") as u32);
    }
    let parts = t.parts();
    if parts.len() > LEMMA_MAX_CYCLES {
        return crate::arith::divisors(n.into())
            .into_iter()
            .map(|b| b as u32)
            .filter(|&b| b > 1 && b < n)
            .find(|&b| covers_imprimitive_exact(b, t).unwrap_or(false));
    }
    let k = parts.len();
    let mut labels = vec![0usize; k];
    loop {
        let cells = labels.iter().max().map_or(0, |m| m + 1);
        if cells > 1 && cells < k {
            if let Some(b) = cell_criterion(parts, &labels, cells) {
                return Some(b);
            }
        }
        if !next_restricted_growth(&mut labels) {
            return None;
        }
    }
}

fn cell_criterion(parts: &[u32], labels: &[usize], cells: usize) -> Option<u32> {
    let mut sums = vec![0u64; cells];
    for (&x, &l) in parts.iter().zip(labels) {
        sums[l] += u64::from(x);
    }
    let b = sums.iter().fold(0, |g, &s| gcd(g, s));
    let ok = parts
        .iter()
        .zip(labels)
        .all(|(&x, &l)| u64::from(x) % (sums[l] / b) == 0);
    ok.then_some(b as u32)
}

/// Advances a restricted growth string; false after the last one.
fn next_restricted_growth(a: &mut [usize]) -> bool {
    for i in (1..a.len()).rev() {
        let prefix_max = a[..i].iter().copied().max().unwrap_or(0);
        if a[i] <= prefix_max {
            a[i] += 1;
            for v in a[i + 1..].iter_mut() {
                *v = 0;
            }
            return true;
        }
    }
    false
}

/// The divisibility conditions specialized to 2, 3 or 4 cycles with coprime lengths.
pub fn imprimitive_shortcut_small_k(t: &CycleType) -> Result<bool> {
    let k = t.k();
    if !(2..=4).contains(&k) {
        return Err(domain(format!("needs 2 to 4 cycles, type {t} has {k}")));
    }
    if t.parts_gcd() != 1 {
        return Err(domain(format!(
            "needs coprime cycle lengths, type {t} has gcd {}",
            t.parts_gcd()
        )));
    }
    let n = u64::from(t.n());
    let x: Vec<u64> = t.parts().iter().map(|&v| v.into()).collect();
    let divides_all = |m: u64, vals: &[u64]| vals.iter().all(|&v| v % m == 0);
    Ok(match k {
        2 => false,
        3 => (0..3).any(|l| {
            let (i, j) = others2(l);
            divides_all((x[i] + x[j]) / gcd(x[l], n), &[x[i], x[j]])
        }),
        _ => {
            // (a) three cycles against the fourth
            let a = (0..4).any(|l| {
                let trio: Vec<u64> = (0..4).filter(|&i| i != l).map(|i| x[i]).collect();
                divides_all(trio.iter().sum::<u64>() / gcd(x[l], n), &trio)
            });
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            // (b) a pair against two singletons
            let b = pairs.iter().any(|&(i, j)| {
                let (l, m) = complement(i, j);
                let g = gcd(gcd(x[l], x[m]), n);
                divides_all((x[i] + x[j]) / g, &[x[i], x[j]])
            });
            // (c) two pairs
            let c = pairs.iter().any(|&(i, j)| {
                let (l, m) = complement(i, j);
                let g = gcd(x[i] + x[j], n);
                divides_all((x[i] + x[j]) / g, &[x[i], x[j]])
                    && divides_all((x[l] + x[m]) / g, &[x[l], x[m]])
            });
            a || b || c
        }
    })
}

fn others2(l: usize) -> (usize, usize) {
    match l {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn complement(i: usize, j: usize) -> (usize, usize) {
    let mut rest = (0..4).filter(|&v| v != i && v != j);
    (rest.next().unwrap(), rest.next().unwrap())
}

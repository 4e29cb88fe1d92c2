//! Cycle types (partitions of n) and the subset-sum structure they carry.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::bits::Bits;
use crate::error::{domain, Error, Result};

/// Parity of a permutation, `(-1)^(n - k)` for `k` cycles on `n` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Even,
    #[serde(rename = "-1")]
    Odd,
}

impl Sign {
    pub fn from_counts(n: u32, k: u32) -> Sign {
        if (n - k) % 2 == 0 {
            Sign::Even
        } else {
            Sign::Odd
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Even => 1,
            Sign::Odd => -1,
        }
    }

    pub fn from_i8(s: i8) -> Option<Sign> {
        match s {
            1 => Some(Sign::Even),
            -1 => Some(Sign::Odd),
            _ => None,
        }
    }
}

/// The cycle type of a permutation of `n` points: its cycle lengths, largest first.
///
/// Serialized as the bare list of parts.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct CycleType {
    parts: Vec<u32>,
}

impl CycleType {
    /// Builds a cycle type from parts in any order.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(domain("a cycle type needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(domain("cycle lengths must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    /// The type `(n)` of an n-cycle.
    pub fn full_cycle(n: u32) -> Self {
        CycleType { parts: vec![n] }
    }

    /// The type `(1^n)` of the identity.
    pub fn identity(n: u32) -> Self {
        CycleType {
            parts: vec![1; n as usize],
        }
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of cycles.
    pub fn k(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sign(&self) -> Sign {
        Sign::from_counts(self.n(), self.k())
    }

    pub fn parts_gcd(&self) -> u32 {
        self.parts
            .iter()
            .fold(0, |g, &p| gcd(g.into(), p.into()) as u32)
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    pub fn is_full_cycle(&self) -> bool {
        self.parts.len() == 1
    }

    /// Subset sums of the parts as a bitset over `0..=n`.
    pub fn subset_sum_bits(&self) -> Bits {
        subset_sums(&self.parts, self.n() as usize)
    }
}

pub(crate) fn subset_sums(parts: &[u32], n: usize) -> Bits {
    let mut bits = Bits::new(n + 1);
    bits.set(0);
    for &p in parts {
        bits.or_shifted(p as usize);
    }
    bits
}

impl From<CycleType> for Vec<u32> {
    fn from(t: CycleType) -> Vec<u32> {
        t.parts
    }
}

impl TryFrom<Vec<u32>> for CycleType {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        CycleType::new(parts)
    }
}

/// Descending-lexicographic: `(4) < (3,1) < (2,2) < ...` in iteration order.
impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, optionally restricted to at most `max_parts` parts
/// and to one sign, in descending-lexicographic order.
pub fn enumerate_cycle_types(
    n: u32,
    max_parts: Option<u32>,
    sign_filter: Option<Sign>,
) -> Result<Vec<CycleType>> {
    if n == 0 {
        return Err(domain("n must be positive"));
    }
    let max_parts = match max_parts {
        Some(0) => return Err(domain("max_parts must be positive")),
        Some(m) if m > n => return Err(domain(format!("max_parts {m} exceeds n = {n}"))),
        Some(m) => m,
        None => n,
    };
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(
        remaining: u32,
        max_part: u32,
        slots: u32,
        n: u32,
        sign: Option<Sign>,
        prefix: &mut Vec<u32>,
        out: &mut Vec<CycleType>,
    ) {
        if remaining == 0 {
            if sign.is_none_or(|s| Sign::from_counts(n, prefix.len() as u32) == s) {
                out.push(CycleType {
                    parts: prefix.clone(),
                });
            }
            return;
        }
        if slots == 0 {
            return;
        }
        // The remaining parts can absorb at most slots * part.
        for part in (1..=max_part.min(remaining)).rev() {
            if part * slots < remaining {
                break;
            }
            prefix.push(part);
            rec(remaining - part, part, slots - 1, n, sign, prefix, out);
            prefix.pop();
        }
    }
    rec(n, n, max_parts, n, sign_filter, &mut prefix, &mut out);
    Ok(out)
}

/// Sizes of the subsets of points that are unions of cycles: the subset sums
/// of the parts, from 0 to n inclusive.
pub fn invariant_set_sizes(t: &CycleType) -> Vec<u32> {
    t.subset_sum_bits().iter().map(|s| s as u32).collect()
}

/// Partition counts by parity of the number of parts.
///
/// `table.get(r, m)` is `[even_count, odd_count]` for partitions of `r`
/// into parts of size at most `m`.
#[derive(Debug, Clone)]
pub struct PartitionCounts {
    n: usize,
    table: Vec<[u64; 2]>,
}

impl PartitionCounts {
    pub fn new(n: u32) -> Self {
        let n = n as usize;
        let width = n + 1;
        let mut table = vec![[0u64; 2]; width * width];
        // table[m * width + r]
        table[0] = [1, 0];
        for m in 1..=n {
            for r in 0..=n {
                let mut v = table[(m - 1) * width + r];
                if r >= m {
                    let w = table[m * width + r - m];
                    v[0] += w[1];
                    v[1] += w[0];
                }
                table[m * width + r] = v;
            }
        }
        PartitionCounts { n, table }
    }

    /// `[even, odd]` part-count parities of partitions of `r` with parts `<= m`.
    pub fn get(&self, r: u32, m: u32) -> [u64; 2] {
        let m = (m as usize).min(self.n);
        self.table[m * (self.n + 1) + r as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(p: &[u32]) -> CycleType {
        CycleType::new(p.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        let got = enumerate_cycle_types(4, Some(2), None).unwrap();
        assert_eq!(got, vec![ct(&[4]), ct(&[3, 1]), ct(&[2, 2])]);
        let got = enumerate_cycle_types(5, None, Some(Sign::Even)).unwrap();
        assert_eq!(
            got,
            vec![
                ct(&[5]),
                ct(&[3, 1, 1]),
                ct(&[2, 2, 1]),
                ct(&[1, 1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn enumerate_37_three_parts_even() {
        let got = enumerate_cycle_types(37, Some(3), Some(Sign::Even)).unwrap();
        // Brute-force count of 3-partitions a >= b >= c >= 1 of 37, plus (37).
        let mut brute = 0;
        for a in 1..=37u32 {
            for b in 1..=a {
                for c in 1..=b {
                    if a + b + c == 37 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(brute + 1, 115);
        assert_eq!(got.len(), 115);
    }

    #[test]
    fn enumerate_errors() {
        assert!(enumerate_cycle_types(0, None, None).is_err());
        assert!(enumerate_cycle_types(4, Some(5), None).is_err());
    }

    #[test]
    fn invariant_sets() {
        assert_eq!(
            invariant_set_sizes(&ct(&[4, 2, 1])),
            (0..=7).collect::<Vec<_>>()
        );
        assert_eq!(invariant_set_sizes(&ct(&[3, 5])), vec![0, 3, 5, 8]);
        assert_eq!(invariant_set_sizes(&ct(&[2, 2, 2])), vec![0, 2, 4, 6]);
    }

    #[test]
    fn sign_and_gcd() {
        assert_eq!(ct(&[3, 5]).sign(), Sign::Even);
        assert_eq!(ct(&[8]).sign(), Sign::Odd);
        assert_eq!(ct(&[6, 3]).parts_gcd(), 3);
        assert!(CycleType::new(vec![]).is_err());
        assert!(CycleType::new(vec![2, 0]).is_err());
    }

    #[test]
    fn partition_counts_match_enumeration() {
        for n in 1..=20u32 {
            let pc = PartitionCounts::new(n);
            let all = enumerate_cycle_types(n, None, None).unwrap();
            let even = all.iter().filter(|t| t.k() % 2 == 0).count() as u64;
            assert_eq!(pc.get(n, n), [even, all.len() as u64 - even]);
        }
    }

    #[test]
    fn serde_as_parts_list() {
        let t = ct(&[1, 3, 4]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[4,3,1]");
        let back: CycleType = serde_json::from_str("[1,4,3]").unwrap();
        assert_eq!(back, t);
    }
}

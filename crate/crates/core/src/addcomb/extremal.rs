use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd};
use crate::bounds::SearchLimits;
use crate::error::{domain, Error, Result};

/// Where a set lives: residues mod `n`, or the integers `1..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "kebab-case")]
pub enum Ambient {
    Residues(u32),
    Interval(u32),
}

impl Ambient {
    pub fn n(self) -> u32 {
        match self {
            Ambient::Residues(n) | Ambient::Interval(n) => n,
        }
    }

    pub fn contains(self, x: u32) -> bool {
        match self {
            Ambient::Residues(n) => x < n,
            Ambient::Interval(n) => x >= 1 && x < n,
        }
    }

    /// `-x mod n` for residues, `n - x` on the interval.
    pub fn mirror(self, x: u32) -> u32 {
        match self {
            Ambient::Residues(n) => (n - x) % n,
            Ambient::Interval(n) => n - x,
        }
    }

    fn elements(self) -> std::ops::Range<u32> {
        match self {
            Ambient::Residues(n) => 0..n,
            Ambient::Interval(n) => 1..n,
        }
    }
}

/// A subset of an ambient, stored ascending without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subset {
    pub ambient: Ambient,
    pub elements: Vec<u32>,
}

impl Subset {
    pub fn new(ambient: Ambient, mut elements: Vec<u32>) -> Result<Self> {
        if let Some(x) = elements.iter().find(|&&x| !ambient.contains(x)) {
            return Err(domain(format!("{x} lies outside {ambient}")));
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Subset { ambient, elements })
    }

    /// Like [`Subset::new`], additionally requiring closure under the mirror map.
    pub fn symmetric(ambient: Ambient, elements: Vec<u32>) -> Result<Self> {
        let s = Subset::new(ambient, elements)?;
        if !s.is_symmetric() {
            return Err(domain(format!(
                "{:?} is not symmetric in {ambient}",
                s.elements
            )));
        }
        Ok(s)
    }

    pub fn is_symmetric(&self) -> bool {
        self.elements
            .iter()
            .all(|&x| self.contains(self.ambient.mirror(x)))
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// 0/1 indicator over the ambient, in ambient order.
    pub fn indicator(&self) -> Vec<u8> {
        self.ambient
            .elements()
            .map(|x| u8::from(self.contains(x)))
            .collect()
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Residues(n) => write!(f, "Z/{n}"),
            Ambient::Interval(n) => write!(f, "{{1..{}}}", n.saturating_sub(1)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// No `x, y, x + y` with `gcd(x, y, n) = 1`, in `Z/n`.
    CoprimeSumFree,
    /// No `x, x + h, 2x + h` with `h` in {1, 2, 4} and `gcd(x, h, n) = 1`, in `Z/n`.
    RestrictedTripleFree,
    /// No `cube(x, y, z)` with `gcd(x, y, z, n) = 1`, in `1..n`.
    CoprimeCubeFree,
    /// No `cube(x, x, x + h)` with `h = ±1`, in `1..n`.
    DegenerateCubeFree,
    /// As [`Variant::DegenerateCubeFree`] with `x` even.
    DegenerateCubeEvenFree,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::CoprimeSumFree,
        Variant::RestrictedTripleFree,
        Variant::CoprimeCubeFree,
        Variant::DegenerateCubeFree,
        Variant::DegenerateCubeEvenFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variant::CoprimeSumFree => "coprime-sum-free",
            Variant::RestrictedTripleFree => "restricted-triple-free",
            Variant::CoprimeCubeFree => "coprime-cube-free",
            Variant::DegenerateCubeFree => "degenerate-cube-free",
            Variant::DegenerateCubeEvenFree => "degenerate-cube-even-free",
        }
    }

    pub fn ambient(self, n: u32) -> Ambient {
        match self {
            Variant::CoprimeSumFree | Variant::RestrictedTripleFree => Ambient::Residues(n),
            _ => Ambient::Interval(n),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| domain(format!("unknown variant {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExtremalProblem {
    pub variant: Variant,
    pub n: u32,
    pub symmetric: bool,
}

impl ExtremalProblem {
    pub fn new(variant: Variant, n: u32) -> Self {
        ExtremalProblem {
            variant,
            n,
            symmetric: true,
        }
    }

    pub fn ambient(&self) -> Ambient {
        self.variant.ambient(self.n)
    }
}

/// A forbidden configuration found inside a set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// `(x, y)` for sums, `(x, h)` for restricted triples, `(x, y, z)` for cubes.
    pub generators: Vec<i64>,
    /// The members of the set forming the pattern.
    pub elements: Vec<u32>,
}

struct Pattern {
    generators: Vec<i64>,
    elements: Vec<u32>,
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    gcd(gcd(a, b), c)
}

/// Every forbidden configuration of the variant, in a fixed order.
fn patterns(variant: Variant, n: u32) -> Vec<Pattern> {
    let mut out = Vec::new();
    let n64 = u64::from(n);
    match variant {
        Variant::CoprimeSumFree => {
            for x in 0..n {
                for y in x..n {
                    if gcd3(x.into(), y.into(), n64) == 1 {
                        out.push(Pattern {
                            generators: vec![x.into(), y.into()],
                            elements: vec![x, y, (x + y) % n],
                        });
                    }
                }
            }
        }
        Variant::RestrictedTripleFree => {
            for h in [1u32, 2, 4] {
                for x in 0..n {
                    if gcd3(x.into(), h.into(), n64) == 1 {
                        out.push(Pattern {
                            generators: vec![x.into(), h.into()],
                            elements: vec![x, (x + h) % n, (2 * x + h) % n],
                        });
                    }
                }
            }
        }
        Variant::CoprimeCubeFree => {
            for x in 1..n {
                for y in x..n {
                    for z in y..n {
                        if x + y + z >= n {
                            break;
                        }
                        if gcd(gcd3(x.into(), y.into(), z.into()), n64) == 1 {
                            let (x, y, z) = (i64::from(x), i64::from(y), i64::from(z));
                            out.push(Pattern {
                                generators: vec![x, y, z],
                                elements: super::cube_set(x, y, z)
                                    .into_iter()
                                    .map(|v| v as u32)
                                    .collect(),
                            });
                        }
                    }
                }
            }
        }
        Variant::DegenerateCubeFree | Variant::DegenerateCubeEvenFree => {
            let even = variant == Variant::DegenerateCubeEvenFree;
            for h in [1i64, -1] {
                for x in 1..i64::from(n) {
                    if 3 * x + h >= i64::from(n) {
                        break;
                    }
                    if x + h < 1 || (even && x % 2 == 1) {
                        continue;
                    }
                    out.push(Pattern {
                        generators: vec![x, x, x + h],
                        elements: super::cube_set(x, x, x + h)
                            .into_iter()
                            .map(|v| v as u32)
                            .collect(),
                    });
                }
            }
        }
    }
    out
}

fn check_ambient(x: &Subset, p: &ExtremalProblem) -> Result<()> {
    if x.ambient != p.ambient() {
        return Err(domain(format!(
            "{} needs a subset of {}, got one of {}",
            p.variant,
            p.ambient(),
            x.ambient
        )));
    }
    Ok(())
}

/// `Ok(None)` if `x` avoids the variant's patterns, else the first violation.
pub fn is_free(x: &Subset, p: &ExtremalProblem) -> Result<Option<Violation>> {
    check_ambient(x, p)?;
    Ok(patterns(p.variant, p.n)
        .into_iter()
        .find(|pat| pat.elements.iter().all(|&e| x.contains(e)))
        .map(|pat| Violation {
            generators: pat.generators,
            elements: pat.elements,
        }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub problem: ExtremalProblem,
    pub maximum: usize,
    pub witness: Subset,
    pub method: Method,
    /// False when the search stopped at its deadline; `maximum` is then the
    /// best size found.
    pub certified: bool,
}

/// Orbits with at most this many members are searched by full enumeration.
const EXHAUSTIVE_MAX_ORBITS: usize = 16;
/// Masks are 64 bits wide.
const MAX_ORBITS: usize = 64;

/// The decision units of a search: mirror orbits, or single elements.
struct Orbits {
    members: Vec<Vec<u32>>,
    index: Vec<usize>,
}

impl Orbits {
    fn new(ambient: Ambient, symmetric: bool) -> Self {
        let n = ambient.n() as usize;
        let mut index = vec![usize::MAX; n];
        let mut members: Vec<Vec<u32>> = Vec::new();
        for x in ambient.elements() {
            if index[x as usize] != usize::MAX {
                continue;
            }
            let mut orbit = vec![x];
            let m = ambient.mirror(x);
            if symmetric && m != x {
                orbit.push(m);
            }
            for &y in &orbit {
                index[y as usize] = members.len();
            }
            members.push(orbit);
        }
        Orbits { members, index }
    }

    fn mask(&self, elements: &[u32]) -> u64 {
        elements
            .iter()
            .fold(0, |m, &e| m | 1 << self.index[e as usize])
    }

    fn weight(&self, mask: u64) -> usize {
        (0..self.members.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.members[i].len())
            .sum()
    }

    fn subset(&self, ambient: Ambient, mask: u64) -> Subset {
        let elements = (0..self.members.len())
            .filter(|&i| mask >> i & 1 == 1)
            .flat_map(|i| self.members[i].iter().copied())
            .collect();
        Subset::new(ambient, elements).expect("orbit members lie in the ambient")
    }
}

/// Pattern masks with no other pattern mask strictly inside them.
fn minimal_masks(mut masks: Vec<u64>) -> Vec<u64> {
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut out: Vec<u64> = Vec::new();
    for m in masks {
        if !out.iter().any(|&o| o & !m == 0) {
            out.push(m);
        }
    }
    out
}

pub fn max_extremal(p: &ExtremalProblem) -> Result<ExtremalResult> {
    max_extremal_with_limits(p, SearchLimits::default())
}

/// Largest free subset (symmetric if the problem asks for it).
pub fn max_extremal_with_limits(
    p: &ExtremalProblem,
    limits: SearchLimits,
) -> Result<ExtremalResult> {
    if p.n < 3 {
        return Err(domain(format!(
            "extremal problems need n >= 3, got {}",
            p.n
        )));
    }
    let ambient = p.ambient();
    let orbits = Orbits::new(ambient, p.symmetric);
    let m = orbits.members.len();
    if m > MAX_ORBITS {
        return Err(domain(format!(
            "{} at n = {} has {m} decision units; at most {MAX_ORBITS} supported",
            p.variant, p.n
        )));
    }
    let masks = minimal_masks(
        patterns(p.variant, p.n)
            .iter()
            .map(|pat| orbits.mask(&pat.elements))
            .collect(),
    );
    let weights: Vec<usize> = orbits.members.iter().map(Vec::len).collect();
    let (best, method, certified) = if m <= EXHAUSTIVE_MAX_ORBITS {
        (exhaustive(m, &masks, &orbits), Method::Exhaustive, true)
    } else {
        let mut s = Search::new(&masks, weights, limits);
        s.run();
        (s.best_mask, Method::BranchAndBound, !s.timed_out)
    };
    let witness = orbits.subset(ambient, best);
    Ok(ExtremalResult {
        problem: *p,
        maximum: witness.len(),
        witness,
        method,
        certified,
    })
}

/// Largest free mask by enumeration; ties go to the numerically smallest.
fn exhaustive(m: usize, masks: &[u64], orbits: &Orbits) -> u64 {
    let mut best = (0usize, 0u64);
    for set in 0..1u64 << m {
        if masks.iter().any(|&p| p & !set == 0) {
            continue;
        }
        let w = orbits.weight(set);
        if w > best.0 {
            best = (w, set);
        }
    }
    best.1
}

/// Depth-first include/exclude over units in index order, pruning when the
/// remaining weight cannot beat the incumbent.
struct Search {
    /// Patterns grouped by their highest unit.
    closing: Vec<Vec<u64>>,
    weights: Vec<usize>,
    suffix: Vec<usize>,
    best_size: usize,
    best_mask: u64,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl Search {
    fn new(masks: &[u64], weights: Vec<usize>, limits: SearchLimits) -> Self {
        let m = weights.len();
        let mut closing = vec![Vec::new(); m];
        for &p in masks {
            closing[63 - p.leading_zeros() as usize].push(p);
        }
        let mut suffix = vec![0; m + 1];
        for i in (0..m).rev() {
            suffix[i] = suffix[i + 1] + weights[i];
        }
        Search {
            closing,
            weights,
            suffix,
            best_size: 0,
            best_mask: 0,
            deadline: limits.deadline,
            nodes: 0,
            timed_out: false,
        }
    }

    fn run(&mut self) {
        self.dfs(0, 0, 0);
    }

    fn dfs(&mut self, i: usize, set: u64, size: usize) {
        if self.timed_out {
            return;
        }
        self.nodes += 1;
        if self.nodes % 4096 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
            return;
        }
        if size > self.best_size {
            self.best_size = size;
            self.best_mask = set;
        }
        if i == self.weights.len() || size + self.suffix[i] <= self.best_size {
            return;
        }
        let with = set | 1 << i;
        if !self.closing[i].iter().any(|&p| p & !with == 0) {
            self.dfs(i + 1, with, size + self.weights[i]);
        }
        self.dfs(i + 1, set, size);
    }
}

/// Extremal constructions: `"two-primes"` (multiples of either of the two
/// smallest primes of `n`, in `Z/n`), `"no-mult-3"` (non-multiples of 3 in
/// `1..n`) and `"middle-third"` (the open interval `(n/3, 2n/3)` in `Z/n`).
pub fn known_construction(tag: &str, n: u32) -> Result<Subset> {
    if n < 3 {
        return Err(domain(format!("constructions need n >= 3, got {n}")));
    }
    match tag {
        "two-primes" => {
            let f = factorize(n.into());
            if f.len() < 2 {
                return Err(domain(format!(
                    "two-primes needs two distinct primes dividing {n}"
                )));
            }
            let (p1, p2) = (f[0].0 as u32, f[1].0 as u32);
            Subset::new(
                Ambient::Residues(n),
                (0..n).filter(|x| x % p1 == 0 || x % p2 == 0).collect(),
            )
        }
        "no-mult-3" => Subset::new(
            Ambient::Interval(n),
            (1..n).filter(|x| x % 3 != 0).collect(),
        ),
        "middle-third" => Subset::new(
            Ambient::Residues(n),
            (0..n).filter(|&x| 3 * x > n && 3 * x < 2 * n).collect(),
        ),
        _ => Err(domain(format!("unknown construction {tag:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(n: u32, e: &[u32]) -> Subset {
        Subset::symmetric(Ambient::Residues(n), e.to_vec()).unwrap()
    }

    fn problem(v: Variant, n: u32) -> ExtremalProblem {
        ExtremalProblem::new(v, n)
    }

    #[test]
    fn freeness_examples() {
        let csf = Variant::CoprimeSumFree;
        assert_eq!(
            is_free(&res(6, &[0, 2, 3, 4]), &problem(csf, 6)).unwrap(),
            None
        );
        let x = Subset::new(Ambient::Residues(5), vec![1, 2]).unwrap();
        let v = is_free(&x, &problem(csf, 5)).unwrap().unwrap();
        assert_eq!(v.elements, vec![1, 1, 2]);
        let cube9 = Subset::symmetric(Ambient::Interval(9), vec![1, 2, 4, 5, 7, 8]).unwrap();
        assert_eq!(
            is_free(&cube9, &problem(Variant::CoprimeCubeFree, 9)).unwrap(),
            None
        );
        let full9 = Subset::symmetric(Ambient::Interval(9), (1..9).collect()).unwrap();
        let v = is_free(&full9, &problem(Variant::CoprimeCubeFree, 9))
            .unwrap()
            .unwrap();
        assert!(v.elements.iter().all(|&e| full9.contains(e)));
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let x = res(9, &[1, 8]);
        assert!(is_free(&x, &problem(Variant::CoprimeCubeFree, 9)).is_err());
        assert!(is_free(&x, &problem(Variant::CoprimeSumFree, 10)).is_err());
        assert!(Subset::new(Ambient::Interval(9), vec![0]).is_err());
        assert!(Subset::symmetric(Ambient::Residues(9), vec![1]).is_err());
    }

    #[test]
    fn maxima_examples() {
        let r = max_extremal(&problem(Variant::CoprimeSumFree, 6)).unwrap();
        assert_eq!((r.maximum, r.certified), (4, true));
        assert_eq!(
            max_extremal(&problem(Variant::CoprimeSumFree, 5))
                .unwrap()
                .maximum,
            2
        );
        let r = max_extremal(&problem(Variant::CoprimeCubeFree, 9)).unwrap();
        assert_eq!(r.maximum, 6);
        assert_eq!(is_free(&r.witness, &r.problem).unwrap(), None);
    }

    #[test]
    fn constructions() {
        let t = known_construction("two-primes", 12).unwrap();
        assert_eq!(t.elements, vec![0, 2, 3, 4, 6, 8, 9, 10]);
        let c = known_construction("no-mult-3", 9).unwrap();
        assert_eq!(c.elements, vec![1, 2, 4, 5, 7, 8]);
        let m = known_construction("middle-third", 12).unwrap();
        assert_eq!(m.elements, vec![5, 6, 7]);
        assert!(m.is_symmetric());
        assert!(known_construction("two-primes", 16).is_err());
        assert!(known_construction("nope", 16).is_err());
        assert!(!known_construction("no-mult-3", 10).unwrap().is_symmetric());
    }

    /// Both search paths agree on the optimum size.
    #[test]
    fn branch_and_bound_matches_enumeration() {
        for v in Variant::ALL {
            for n in 3..=24 {
                let p = problem(v, n);
                let ambient = p.ambient();
                let orbits = Orbits::new(ambient, true);
                let masks = minimal_masks(
                    patterns(v, n)
                        .iter()
                        .map(|pat| orbits.mask(&pat.elements))
                        .collect(),
                );
                let ex = orbits.weight(exhaustive(orbits.members.len(), &masks, &orbits));
                let weights = orbits.members.iter().map(Vec::len).collect();
                let mut s = Search::new(&masks, weights, SearchLimits::default());
                s.run();
                assert_eq!(s.best_size, ex, "{v} n={n}");
            }
        }
    }

    #[test]
    fn deadline_yields_uncertified() {
        let limits = SearchLimits {
            deadline: Some(Instant::now()),
        };
        let p = problem(Variant::CoprimeCubeFree, 60);
        let r = max_extremal_with_limits(&p, limits).unwrap();
        assert_eq!(r.method, Method::BranchAndBound);
        assert!(!r.certified);
        assert_eq!(is_free(&r.witness, &p).unwrap(), None);
    }
}

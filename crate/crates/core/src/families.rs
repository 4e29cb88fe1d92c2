//! Explicit covering families and cycle-type level verification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{factorize, is_prime, is_prime_power, omega, phi, smallest_prime_factor};
use crate::bits::Bits;
use crate::coverage::{class_covers, ClassKind, Group, SubgroupClass};
use crate::cycle_type::{enumerate_cycle_types, CycleType, PartitionCounts, Sign};
use crate::error::{domain, Error, Result};

/// Which construction a family comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Provenance {
    /// Odd degree, symmetric group: small intransitive classes plus one transitive class.
    #[serde(rename = "P21-S-odd")]
    SymOdd,
    /// Odd degree, alternating group: `k <= n/3` plus one transitive class.
    #[serde(rename = "P21-A-odd")]
    AltOdd,
    /// Even degree: odd `k < n/2` plus `S_2 wr S_{n/2}`.
    #[serde(rename = "P21-even")]
    Even,
    /// Prime `p = 3m + 1`, alternating group: `m - 1` intransitive classes and `AGL_1(p)`.
    #[serde(rename = "P22")]
    PrimeOneModThree,
    /// `k` coprime to the two smallest prime factors, plus two imprimitive classes.
    #[serde(rename = "P23")]
    TwoPrimes,
    /// `3 | n`: multiples of 3, units, one imprimitive class per prime, and `A_n` for `S_n`.
    #[serde(rename = "P24")]
    MultipleOfThree,
    #[serde(rename = "custom")]
    Custom,
}

impl Provenance {
    pub const BUILT_IN: [Provenance; 6] = [
        Provenance::SymOdd,
        Provenance::AltOdd,
        Provenance::Even,
        Provenance::PrimeOneModThree,
        Provenance::TwoPrimes,
        Provenance::MultipleOfThree,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Provenance::SymOdd => "P21-S-odd",
            Provenance::AltOdd => "P21-A-odd",
            Provenance::Even => "P21-even",
            Provenance::PrimeOneModThree => "P22",
            Provenance::TwoPrimes => "P23",
            Provenance::MultipleOfThree => "P24",
            Provenance::Custom => "custom",
        }
    }

    /// The first violated hypothesis for `(n, group)`, if any.
    pub fn violated_hypothesis(self, n: u32, group: Group) -> Option<String> {
        let odd = n % 2 == 1;
        let sym = group == Group::Symmetric;
        let fail = |s: &str| Some(s.to_string());
        match self {
            _ if n < 5 => fail("n >= 5"),
            Provenance::SymOdd if !odd => fail("n odd"),
            Provenance::SymOdd if !sym => fail("group S"),
            Provenance::AltOdd if !odd => fail("n odd"),
            Provenance::AltOdd if sym => fail("group A"),
            Provenance::Even if odd => fail("n even"),
            Provenance::PrimeOneModThree if !is_prime(n.into()) => fail("n prime"),
            Provenance::PrimeOneModThree if n % 3 != 1 => fail("n = 1 mod 3"),
            Provenance::PrimeOneModThree if sym => fail("group A"),
            Provenance::TwoPrimes if is_prime_power(n.into()) => fail("n not a prime power"),
            Provenance::TwoPrimes if sym == odd => fail("S with n even, or A with n odd"),
            Provenance::MultipleOfThree if n % 3 != 0 => fail("3 divides n"),
            Provenance::MultipleOfThree if sym != odd => fail("S with n odd, or A with n even"),
            Provenance::Custom => fail("a built-in construction"),
            _ => None,
        }
    }

    /// The proven size of the construction: exact, or an upper bound.
    pub fn size_formula(self, n: u32, group: Group) -> Result<SizeFormula> {
        if let Some(h) = self.violated_hypothesis(n, group) {
            return Err(inapplicable(self, n, group, h));
        }
        let n64 = u64::from(n);
        Ok(match self {
            // Exact only at primes; composite n drops the multiples of the smallest prime.
            Provenance::SymOdd => SizeFormula {
                value: n64 / 2,
                exact: is_prime(n64),
            },
            Provenance::AltOdd => SizeFormula::exact(n64 / 3 + 1),
            Provenance::Even => SizeFormula::exact(n64 / 4 + 1),
            Provenance::PrimeOneModThree => SizeFormula::exact((n64 - 1) / 3),
            Provenance::TwoPrimes => {
                let f = factorize(n64);
                let (p1, p2) = (f[0].0, f[1].0);
                SizeFormula::at_most(n64 * (p1 - 1) * (p2 - 1) / (2 * p1 * p2) + 2)
            }
            Provenance::MultipleOfThree => {
                SizeFormula::at_most(n64 / 6 + phi(n64) / 2 + u64::from(omega(n64)) + 1)
            }
            Provenance::Custom => unreachable!("custom has no formula"),
        })
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Provenance {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Provenance::BUILT_IN
            .into_iter()
            .chain([Provenance::Custom])
            .find(|p| p.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| domain(format!("unknown provenance {s:?}")))
    }
}

/// A size claim: `exact` means the family has exactly `value` members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SizeFormula {
    pub value: u64,
    pub exact: bool,
}

impl SizeFormula {
    fn exact(value: u64) -> Self {
        SizeFormula { value, exact: true }
    }
    fn at_most(value: u64) -> Self {
        SizeFormula {
            value,
            exact: false,
        }
    }
    pub fn admits(&self, size: usize) -> bool {
        if self.exact {
            size as u64 == self.value
        } else {
            size as u64 <= self.value
        }
    }
}

fn inapplicable(p: Provenance, n: u32, group: Group, hypothesis: String) -> Error {
    Error::Inapplicable {
        provenance: format!("{p} at n={n}, group {group}"),
        hypothesis,
    }
}

/// A family of subgroup classes of `S_n`, intersected with `A_n` for the
/// alternating group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringFamily {
    pub n: u32,
    pub group: Group,
    pub members: Vec<SubgroupClass>,
    pub provenance: Provenance,
}

impl CoveringFamily {
    /// A user-supplied family; members must match the degree and be proper.
    pub fn custom(n: u32, group: Group, members: Vec<SubgroupClass>) -> Result<Self> {
        for m in &members {
            if m.n != n {
                return Err(domain(format!("member {m} has degree {} not {n}", m.n)));
            }
            if m.kind == ClassKind::Alternating && group == Group::Alternating {
                return Err(domain("A_n is not a proper subgroup of itself"));
            }
        }
        let members = members
            .into_iter()
            .map(|mut m| {
                if m.kind != ClassKind::Alternating {
                    m.group = group;
                }
                m
            })
            .collect();
        Ok(CoveringFamily {
            n,
            group,
            members,
            provenance: Provenance::Custom,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Plain serializable form.
    pub fn to_doc(&self) -> FamilyDoc {
        FamilyDoc {
            n: self.n,
            group: self.group,
            provenance: self.provenance,
            members: self.members.iter().map(MemberDoc::from).collect(),
        }
    }
}

/// Serialized form of a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyDoc {
    pub n: u32,
    pub group: Group,
    pub provenance: Provenance,
    pub members: Vec<MemberDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberDoc {
    pub kind: &'static str,
    pub param: Option<u32>,
}

impl From<&SubgroupClass> for MemberDoc {
    fn from(c: &SubgroupClass) -> Self {
        MemberDoc {
            kind: c.kind_name(),
            param: c.param(),
        }
    }
}

/// The set `K` for `p = 3m + 1`: `k` in `1..p` with `(m + 1) k mod p` in `1..m`.
pub fn one_mod_three_set(p: u32) -> Vec<u32> {
    let m = (p - 1) / 3;
    (1..p)
        .filter(|&k| {
            let r = (u64::from(m + 1) * u64::from(k) % u64::from(p)) as u32;
            (1..m).contains(&r)
        })
        .collect()
}

/// Builds the construction `prov` at degree `n` for `group`.
pub fn build_family(prov: Provenance, n: u32, group: Group) -> Result<CoveringFamily> {
    if let Some(h) = prov.violated_hypothesis(n, group) {
        return Err(inapplicable(prov, n, group, h));
    }
    let n64 = u64::from(n);
    let intr = |k: u32| SubgroupClass::intransitive(n, k, group);
    let imp = |b: u32| SubgroupClass::imprimitive(n, b, group);
    let spf = smallest_prime_factor(n64).expect("n >= 5") as u32;
    let mut members = Vec::new();
    match prov {
        Provenance::SymOdd => {
            if spf < n {
                for k in (1..=(n - 1) / 2).filter(|k| k % spf != 0) {
                    members.push(intr(k)?);
                }
                members.push(imp(spf)?);
            } else {
                for k in 2..=(n - 1) / 2 {
                    members.push(intr(k)?);
                }
                members.push(SubgroupClass::affine(n, group)?);
            }
        }
        Provenance::AltOdd => {
            for k in 1..=n / 3 {
                members.push(intr(k)?);
            }
            members.push(if spf < n {
                imp(spf)?
            } else {
                SubgroupClass::affine(n, group)?
            });
        }
        Provenance::Even => {
            for k in (1..n.div_ceil(2)).filter(|k| k % 2 == 1 && 2 * k < n) {
                members.push(intr(k)?);
            }
            members.push(imp(2)?);
        }
        Provenance::PrimeOneModThree => {
            let mut ks: Vec<u32> = one_mod_three_set(n)
                .into_iter()
                .map(|k| k.min(n - k))
                .collect();
            ks.sort_unstable();
            ks.dedup();
            for k in ks {
                members.push(intr(k)?);
            }
            members.push(SubgroupClass::affine(n, group)?);
        }
        Provenance::TwoPrimes => {
            let f = factorize(n64);
            let (p1, p2) = (f[0].0 as u32, f[1].0 as u32);
            for k in (1..n.div_ceil(2)).filter(|&k| 2 * k < n && k % p1 != 0 && k % p2 != 0) {
                members.push(intr(k)?);
            }
            members.push(imp(p1)?);
            members.push(imp(p2)?);
        }
        Provenance::MultipleOfThree => {
            for k in (1..=n / 2).filter(|k| k % 3 == 0) {
                members.push(intr(k)?);
            }
            for k in (1..=n / 2).filter(|&k| crate::arith::gcd(n64, k.into()) == 1) {
                members.push(intr(k)?);
            }
            for (p, _) in factorize(n64) {
                members.push(imp(p as u32)?);
            }
            if group == Group::Symmetric {
                members.push(SubgroupClass::alternating(n));
            }
        }
        Provenance::Custom => unreachable!("rejected by hypothesis check"),
    }
    Ok(CoveringFamily {
        n,
        group,
        members,
        provenance: prov,
    })
}

/// A type examined individually, with the index of the first member covering it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeWitness {
    pub cycle_type: CycleType,
    pub member: usize,
}

/// Outcome of a coverage check.
///
/// Types whose invariant-set sizes already meet an intransitive member are
/// certified in bulk and counted in `bulk_certified`; the remaining required
/// types are examined one by one and listed in `per_type_witness` or
/// `uncovered_types`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub covered: bool,
    pub family_size: usize,
    /// Number of required types.
    pub required: u64,
    pub bulk_certified: u64,
    pub uncovered_count: u64,
    /// Uncovered types, truncated to [`UNCOVERED_LIST_LIMIT`].
    pub uncovered_types: Vec<CycleType>,
    pub per_type_witness: Vec<TypeWitness>,
}

pub const UNCOVERED_LIST_LIMIT: usize = 1000;

/// Checks every required type (all types for `S_n`, even ones for `A_n`).
pub fn verify_family(f: &CoveringFamily) -> CoverageReport {
    Verifier::new(f).run()
}

/// Reference check by enumerating every required type; practical for small n.
pub fn verify_family_exhaustive(f: &CoveringFamily) -> Result<CoverageReport> {
    let sign = (f.group == Group::Alternating).then_some(Sign::Even);
    let mut report = empty_report(f);
    for t in enumerate_cycle_types(f.n, None, sign)? {
        report.required += 1;
        let mut hit = None;
        for (i, m) in f.members.iter().enumerate() {
            if class_covers(m, &t)? {
                hit = Some(i);
                break;
            }
        }
        record(&mut report, t, hit);
    }
    report.covered = report.uncovered_count == 0;
    Ok(report)
}

fn empty_report(f: &CoveringFamily) -> CoverageReport {
    CoverageReport {
        covered: false,
        family_size: f.len(),
        required: 0,
        bulk_certified: 0,
        uncovered_count: 0,
        uncovered_types: Vec::new(),
        per_type_witness: Vec::new(),
    }
}

fn record(report: &mut CoverageReport, t: CycleType, hit: Option<usize>) {
    match hit {
        Some(member) => report.per_type_witness.push(TypeWitness {
            cycle_type: t,
            member,
        }),
        None => {
            report.uncovered_count += 1;
            if report.uncovered_types.len() < UNCOVERED_LIST_LIMIT {
                report.uncovered_types.push(t);
            }
        }
    }
}

/// Depth-first search over partitions. Parts not divisible by the smallest
/// imprimitive block size come first, so that a prefix consisting only of
/// divisible parts can be certified by that imprimitive member. Any prefix
/// with a subset sum hitting an intransitive member certifies its subtree.
struct Verifier<'a> {
    f: &'a CoveringFamily,
    n: u32,
    /// Subset sizes fixed by some intransitive member.
    fixed: Bits,
    /// Smallest imprimitive block size, or 0.
    split: u32,
    /// Signs examined individually.
    signs: Vec<Sign>,
    /// Completions mixing non-divisible parts `<= m` with any divisible parts.
    mixed: Vec<[u64; 2]>,
    divisible: Option<PartitionCounts>,
    report: CoverageReport,
    prefix: Vec<u32>,
}

impl<'a> Verifier<'a> {
    fn new(f: &'a CoveringFamily) -> Self {
        let n = f.n;
        let mut fixed = Bits::new(n as usize + 1);
        let mut split = 0;
        let mut has_alternating = false;
        for m in &f.members {
            match m.kind {
                ClassKind::Intransitive(k) => {
                    fixed.set(k as usize);
                    fixed.set((n - k) as usize);
                }
                ClassKind::Imprimitive(b) if split == 0 || b < split => split = b,
                ClassKind::Alternating => has_alternating = true,
                _ => {}
            }
        }
        let signs = match f.group {
            Group::Alternating => vec![Sign::Even],
            Group::Symmetric if has_alternating => vec![Sign::Odd],
            Group::Symmetric => vec![Sign::Even, Sign::Odd],
        };
        let mixed = mixed_counts(n, split);
        let divisible = (split > 0).then(|| PartitionCounts::new(n / split));
        let mut report = empty_report(f);
        let all = PartitionCounts::new(n).get(n, n);
        let pick = |s: Sign| all[sign_index(n, 0, s)];
        report.required = match f.group {
            Group::Alternating => pick(Sign::Even),
            Group::Symmetric => all[0] + all[1],
        };
        if f.group == Group::Symmetric && has_alternating {
            report.bulk_certified += pick(Sign::Even);
        }
        Verifier {
            f,
            n,
            fixed,
            split,
            signs,
            mixed,
            divisible,
            report,
            prefix: Vec::new(),
        }
    }

    fn run(mut self) -> CoverageReport {
        let mut sums = Bits::new(self.n as usize + 1);
        sums.set(0);
        self.first_phase(&sums, self.n, self.n);
        self.report.covered = self.report.uncovered_count == 0;
        debug_assert_eq!(
            self.report.bulk_certified
                + self.report.per_type_witness.len() as u64
                + self.report.uncovered_count,
            self.report.required
        );
        self.report
    }

    fn is_divisible(&self, x: u32) -> bool {
        self.split > 0 && x % self.split == 0
    }

    /// Required completions of the current prefix by parts counted in `counts`.
    fn completions(&self, counts: [u64; 2]) -> u64 {
        let j = self.prefix.len() as u32;
        self.signs
            .iter()
            .map(|&s| counts[sign_index(self.n, j, s)])
            .sum()
    }

    fn first_phase(&mut self, sums: &Bits, remaining: u32, max_part: u32) {
        if remaining == 0 {
            self.leaf();
            return;
        }
        for x in (1..=max_part.min(remaining)).rev() {
            if self.is_divisible(x) {
                continue;
            }
            let mut next = sums.clone();
            next.or_shifted(x as usize);
            self.prefix.push(x);
            let rest = remaining - x;
            if next.intersects(&self.fixed) {
                let c = self.mixed[x as usize * (self.n as usize + 1) + rest as usize];
                self.report.bulk_certified += self.completions(c);
            } else {
                self.first_phase(&next, rest, x);
            }
            self.prefix.pop();
        }
        // No further non-divisible parts.
        if self.split > 0 && remaining % self.split == 0 {
            if self.prefix.is_empty() {
                let c = self.divisible_counts(remaining, remaining);
                self.report.bulk_certified += self.completions(c);
            } else {
                self.second_phase(sums, remaining, remaining);
            }
        }
    }

    fn second_phase(&mut self, sums: &Bits, remaining: u32, max_part: u32) {
        if remaining == 0 {
            self.leaf();
            return;
        }
        let b = self.split;
        let top = max_part.min(remaining) / b * b;
        for x in (1..=top / b).rev().map(|i| i * b) {
            let mut next = sums.clone();
            next.or_shifted(x as usize);
            self.prefix.push(x);
            let rest = remaining - x;
            if next.intersects(&self.fixed) {
                let c = self.divisible_counts(rest, x);
                self.report.bulk_certified += self.completions(c);
            } else {
                self.second_phase(&next, rest, x);
            }
            self.prefix.pop();
        }
    }

    fn divisible_counts(&self, r: u32, m: u32) -> [u64; 2] {
        let table = self.divisible.as_ref().expect("split set");
        table.get(r / self.split, m / self.split)
    }

    fn leaf(&mut self) {
        let t = CycleType::new(self.prefix.clone()).expect("valid partition");
        if !self.signs.contains(&t.sign()) {
            return;
        }
        let hit = self
            .f
            .members
            .iter()
            .position(|m| class_covers(m, &t).expect("degrees match"));
        record(&mut self.report, t, hit);
    }
}

/// Index into `[even, odd]` part-count parities selecting completions whose
/// total type has sign `s`, given `j` parts already placed.
fn sign_index(n: u32, j: u32, s: Sign) -> usize {
    // sign is even iff n - (j + c) is even
    let base = ((n + j) % 2) as usize;
    match s {
        Sign::Even => base,
        Sign::Odd => 1 - base,
    }
}

/// `table[m * (n+1) + r]`: partitions of `r` into non-divisible parts `<= m`
/// and any divisible parts, split by parity of the number of parts.
fn mixed_counts(n: u32, split: u32) -> Vec<[u64; 2]> {
    let w = n as usize + 1;
    let mut table = vec![[0u64; 2]; w * w];
    // m = 0: divisible parts only.
    let mut base = vec![[0u64; 2]; w];
    base[0] = [1, 0];
    if split > 0 {
        for part in (split as usize..w).step_by(split as usize) {
            for r in part..w {
                let prev = base[r - part];
                base[r][0] += prev[1];
                base[r][1] += prev[0];
            }
        }
    }
    table[..w].copy_from_slice(&base);
    for m in 1..w {
        let (done, rest) = table.split_at_mut(m * w);
        let row = &mut rest[..w];
        row.copy_from_slice(&done[(m - 1) * w..]);
        if split > 0 && m as u32 % split == 0 {
            continue;
        }
        for r in m..w {
            let prev = row[r - m];
            row[r][0] += prev[1];
            row[r][1] += prev[0];
        }
    }
    table
}

//! Cycle-type level membership: does some conjugate of a subgroup class
//! contain an element of a given cycle type?

mod catalog;
mod imprimitive;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use catalog::{primitive_catalog, Catalog, CatalogEntry, CatalogParams, CATALOG_VALID_ABOVE};
pub use imprimitive::{
    covered_by_some_imprimitive, covers_imprimitive_exact, imprimitive_shortcut_small_k,
};

use crate::arith::is_prime;
use crate::cycle_type::{CycleType, Sign};
use crate::error::{domain, Result};

/// The ambient group: `S_n` or `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Group {
    #[serde(rename = "S")]
    Symmetric,
    #[serde(rename = "A")]
    Alternating,
}

impl Group {
    pub fn symbol(self) -> &'static str {
        match self {
            Group::Symmetric => "S",
            Group::Alternating => "A",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::str::FromStr for Group {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "S" | "s" | "sym" => Ok(Group::Symmetric),
            "A" | "a" | "alt" => Ok(Group::Alternating),
            _ => Err(format!("unknown group {s:?}; expected S or A")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassKind {
    /// `S_k x S_{n-k}`, stored with `k <= n/2`.
    Intransitive(u32),
    /// `S_b wr S_{n/b}`: blocks of size `b`.
    Imprimitive(u32),
    /// `AGL_1(p)` with `p = n`.
    Affine(u32),
    /// Every catalogued primitive group at this degree, merged into one candidate.
    PrimitiveWildcard(Vec<CatalogEntry>),
    Alternating,
}

/// A conjugacy class of candidate covering subgroups of `S_n` (or their
/// intersections with `A_n` when `group` is alternating).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgroupClass {
    pub kind: ClassKind,
    pub n: u32,
    pub group: Group,
}

impl SubgroupClass {
    /// `S_k x S_{n-k}`, with `k` normalized to `min(k, n - k)`.
    pub fn intransitive(n: u32, k: u32, group: Group) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(domain(format!(
                "intransitive class needs 1 <= k <= n-1, got k={k}, n={n}"
            )));
        }
        Ok(SubgroupClass {
            kind: ClassKind::Intransitive(k.min(n - k)),
            n,
            group,
        })
    }

    pub fn imprimitive(n: u32, b: u32, group: Group) -> Result<Self> {
        check_block_size(n, b)?;
        Ok(SubgroupClass {
            kind: ClassKind::Imprimitive(b),
            n,
            group,
        })
    }

    pub fn affine(n: u32, group: Group) -> Result<Self> {
        if !is_prime(n.into()) {
            return Err(domain(format!("AGL_1(p) needs prime degree, got {n}")));
        }
        Ok(SubgroupClass {
            kind: ClassKind::Affine(n),
            n,
            group,
        })
    }

    pub fn wildcard(n: u32, entries: Vec<CatalogEntry>, group: Group) -> Result<Self> {
        if entries.is_empty() {
            return Err(domain(
                "primitive wildcard needs at least one catalog entry",
            ));
        }
        if entries.iter().any(|e| e.exceptional_type.n() != n) {
            return Err(domain("catalog entry degree mismatch"));
        }
        Ok(SubgroupClass {
            kind: ClassKind::PrimitiveWildcard(entries),
            n,
            group,
        })
    }

    pub fn alternating(n: u32) -> Self {
        SubgroupClass {
            kind: ClassKind::Alternating,
            n,
            group: Group::Symmetric,
        }
    }

    pub fn is_transitive(&self) -> bool {
        !matches!(self.kind, ClassKind::Intransitive(_))
    }

    /// Short machine name of the kind.
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            ClassKind::Intransitive(_) => "intransitive",
            ClassKind::Imprimitive(_) => "imprimitive",
            ClassKind::Affine(_) => "affine",
            ClassKind::PrimitiveWildcard(_) => "primitive-wildcard",
            ClassKind::Alternating => "alternating",
        }
    }

    /// The integer parameter of the kind, if any.
    pub fn param(&self) -> Option<u32> {
        match self.kind {
            ClassKind::Intransitive(k) => Some(k),
            ClassKind::Imprimitive(b) => Some(b),
            ClassKind::Affine(p) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for SubgroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match &self.kind {
            ClassKind::Intransitive(k) => write!(f, "S_{k} x S_{}", n - k),
            ClassKind::Imprimitive(b) => write!(f, "S_{b} wr S_{}", n / b),
            ClassKind::Affine(p) => write!(f, "AGL_1({p})"),
            ClassKind::PrimitiveWildcard(e) => write!(f, "primitive[{} types]", e.len()),
            ClassKind::Alternating => write!(f, "A_{n}"),
        }
    }
}

pub(crate) fn check_block_size(n: u32, b: u32) -> Result<()> {
    if b <= 1 || b >= n || n % b != 0 {
        return Err(domain(format!(
            "block size {b} is not a nontrivial proper divisor of {n}"
        )));
    }
    Ok(())
}

/// `S_k x S_{n-k}` contains an element of type `t` iff some union of cycles has size `k`.
pub fn covers_intransitive(k: u32, t: &CycleType) -> Result<bool> {
    let n = t.n();
    if k == 0 || k >= n {
        return Err(domain(format!(
            "k = {k} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    Ok(t.subset_sum_bits().get(k as usize))
}

/// Membership in `AGL_1(p)`: the p-cycle, the identity, and `(1, d^((p-1)/d))`
/// for each divisor `d` of `p - 1`.
pub fn covers_affine(p: u32, t: &CycleType) -> Result<bool> {
    if !is_prime(p.into()) {
        return Err(domain(format!("AGL_1(p) needs p prime, got {p}")));
    }
    if t.n() != p {
        return Err(domain(format!("type {t} has degree {} but p = {p}", t.n())));
    }
    if t.is_full_cycle() || t.is_identity() {
        return Ok(true);
    }
    let parts = t.parts();
    let (&last, rest) = parts.split_last().expect("nonempty");
    if last != 1 {
        return Ok(false);
    }
    let d = rest[0];
    Ok(d > 1 && rest.iter().all(|&x| x == d) && (p - 1) % d == 0)
}

/// Dispatch over the class kind. The identity lies in every class; n-cycles
/// lie in every transitive class.
pub fn class_covers(c: &SubgroupClass, t: &CycleType) -> Result<bool> {
    if c.n != t.n() {
        return Err(domain(format!(
            "class of degree {} cannot cover type {t} of degree {}",
            c.n,
            t.n()
        )));
    }
    if t.is_identity() {
        return Ok(true);
    }
    match &c.kind {
        ClassKind::Intransitive(k) => covers_intransitive(*k, t),
        ClassKind::Imprimitive(b) => covers_imprimitive_exact(*b, t),
        ClassKind::Affine(p) => covers_affine(*p, t),
        ClassKind::Alternating => Ok(t.sign() == Sign::Even),
        ClassKind::PrimitiveWildcard(entries) => {
            Ok(t.is_full_cycle() || entries.iter().any(|e| &e.exceptional_type == t))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(p: &[u32]) -> CycleType {
        CycleType::new(p.to_vec()).unwrap()
    }

    #[test]
    fn intransitive_examples() {
        assert!(covers_intransitive(5, &ct(&[4, 2, 1])).unwrap());
        assert!(!covers_intransitive(2, &ct(&[3, 5])).unwrap());
        assert!(covers_intransitive(3, &ct(&[3, 3, 1])).unwrap());
        assert!(covers_intransitive(0, &ct(&[3, 5])).is_err());
        assert!(covers_intransitive(8, &ct(&[3, 5])).is_err());
    }

    #[test]
    fn affine_examples() {
        assert!(covers_affine(7, &ct(&[7])).unwrap());
        assert!(covers_affine(7, &ct(&[1, 3, 3])).unwrap());
        assert!(covers_affine(7, &ct(&[1, 6])).unwrap());
        assert!(covers_affine(7, &ct(&[1, 2, 2, 2])).unwrap());
        assert!(covers_affine(7, &ct(&[1; 7])).unwrap());
        assert!(!covers_affine(7, &ct(&[2, 5])).unwrap());
        assert!(!covers_affine(7, &ct(&[1, 1, 5])).unwrap());
        assert!(covers_affine(8, &ct(&[8])).is_err());
    }

    #[test]
    fn dispatch_examples() {
        let alt = SubgroupClass::alternating(8);
        assert!(class_covers(&alt, &ct(&[3, 5])).unwrap());
        assert!(!class_covers(&alt, &ct(&[8])).unwrap());

        let cat = primitive_catalog(37);
        let w = SubgroupClass::wildcard(37, cat.entries, Group::Alternating).unwrap();
        assert!(class_covers(&w, &ct(&[1, 18, 18])).unwrap());
        assert!(class_covers(&w, &ct(&[37])).unwrap());
        assert!(!class_covers(&w, &ct(&[1, 17, 19])).unwrap());

        let imp = SubgroupClass::imprimitive(8, 2, Group::Symmetric).unwrap();
        assert!(!class_covers(&imp, &ct(&[1, 7])).unwrap());
        assert!(class_covers(&imp, &ct(&[1; 8])).unwrap());
        assert!(class_covers(&imp, &ct(&[1, 7])).is_ok());
        assert!(class_covers(&imp, &ct(&[1, 6])).is_err());
    }

    #[test]
    fn class_constructors_validate() {
        assert_eq!(
            SubgroupClass::intransitive(10, 7, Group::Symmetric)
                .unwrap()
                .kind,
            ClassKind::Intransitive(3)
        );
        assert!(SubgroupClass::intransitive(10, 10, Group::Symmetric).is_err());
        assert!(SubgroupClass::imprimitive(10, 3, Group::Symmetric).is_err());
        assert!(SubgroupClass::imprimitive(10, 10, Group::Symmetric).is_err());
        assert!(SubgroupClass::affine(9, Group::Alternating).is_err());
        assert!(SubgroupClass::wildcard(9, vec![], Group::Alternating).is_err());
    }
}

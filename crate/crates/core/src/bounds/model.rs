//! The set-cover model whose minimum lower-bounds the normal covering number.

use serde::Serialize;

use crate::arith::{divisors, is_prime};
use crate::coverage::{class_covers, primitive_catalog, Group, SubgroupClass, CATALOG_VALID_ABOVE};
use crate::cycle_type::{enumerate_cycle_types, CycleType, Sign};
use crate::error::{domain, Result};

/// Universe of cycle types, candidate classes, and the coverage relation.
#[derive(Debug, Clone)]
pub struct CoverModel {
    pub n: u32,
    pub group: Group,
    pub universe: Vec<CycleType>,
    pub candidates: Vec<SubgroupClass>,
    /// `coverage[c][t]`: candidate `c` covers universe element `t`.
    pub coverage: Vec<Vec<bool>>,
    /// True when every primitive group is accounted for by the catalog.
    pub sound: bool,
}

/// Short description of a candidate for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateLabel {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param: Option<u32>,
}

impl From<&SubgroupClass> for CandidateLabel {
    fn from(c: &SubgroupClass) -> Self {
        CandidateLabel {
            kind: c.kind_name(),
            param: c.param(),
        }
    }
}

impl CoverModel {
    /// Assembles a model from explicit parts, computing the coverage matrix.
    pub fn from_parts(
        n: u32,
        group: Group,
        universe: Vec<CycleType>,
        candidates: Vec<SubgroupClass>,
        sound: bool,
    ) -> Result<Self> {
        if let Some(t) = universe.iter().find(|t| t.n() != n) {
            return Err(domain(format!(
                "universe type {t} is not a partition of {n}"
            )));
        }
        let coverage = candidates
            .iter()
            .map(|c| universe.iter().map(|t| class_covers(c, t)).collect())
            .collect::<Result<Vec<Vec<bool>>>>()?;
        Ok(CoverModel {
            n,
            group,
            universe,
            candidates,
            coverage,
            sound,
        })
    }

    /// Candidates covering each universe element.
    pub fn element_candidates(&self) -> Vec<Vec<usize>> {
        (0..self.universe.len())
            .map(|t| {
                (0..self.candidates.len())
                    .filter(|&c| self.coverage[c][t])
                    .collect()
            })
            .collect()
    }

    /// The model with one more candidate appended.
    pub fn with_candidate(&self, c: SubgroupClass) -> Result<Self> {
        let mut cands = self.candidates.clone();
        cands.push(c);
        CoverModel::from_parts(self.n, self.group, self.universe.clone(), cands, self.sound)
    }
}

/// Universe: part-gcd 1 types with 2 to 4 cycles, plus the n-cycle, keeping
/// only even permutations for the alternating group.
pub fn model_universe(n: u32, group: Group) -> Result<Vec<CycleType>> {
    let sign = match group {
        Group::Symmetric => None,
        Group::Alternating => Some(Sign::Even),
    };
    let mut universe: Vec<CycleType> = enumerate_cycle_types(n, Some(4.min(n)), sign)?
        .into_iter()
        .filter(|t| (2..=4).contains(&t.k()) && t.parts_gcd() == 1)
        .collect();
    let full = CycleType::full_cycle(n);
    if sign.is_none_or(|s| full.sign() == s) {
        universe.insert(0, full);
    }
    Ok(universe)
}

/// Candidates in canonical order: intransitive by k, imprimitive by block
/// size, affine, the merged primitive wildcard, then the alternating group.
pub fn model_candidates(n: u32, group: Group) -> Result<Vec<SubgroupClass>> {
    let mut out = Vec::new();
    for k in 1..=n / 2 {
        out.push(SubgroupClass::intransitive(n, k, group)?);
    }
    for b in divisors(n.into()) {
        let b = b as u32;
        if b > 1 && b < n {
            out.push(SubgroupClass::imprimitive(n, b, group)?);
        }
    }
    if is_prime(n.into()) {
        out.push(SubgroupClass::affine(n, group)?);
    }
    let catalog = primitive_catalog(n);
    if !catalog.entries.is_empty() {
        out.push(SubgroupClass::wildcard(n, catalog.entries, group)?);
    }
    if group == Group::Symmetric {
        out.push(SubgroupClass::alternating(n));
    }
    Ok(out)
}

/// The standard model for `(n, group)`.
pub fn build_model(n: u32, group: Group) -> Result<CoverModel> {
    if n < 5 {
        return Err(domain(format!("models need n >= 5, got {n}")));
    }
    CoverModel::from_parts(
        n,
        group,
        model_universe(n, group)?,
        model_candidates(n, group)?,
        n > CATALOG_VALID_ABOVE,
    )
}

use serde::Serialize;

use super::model::{build_model, CandidateLabel, CoverModel};
use super::setcover::{solve_min_cover, SearchLimits};
use crate::arith::{is_prime, repunit_forms};
use crate::coverage::{Group, CATALOG_VALID_ABOVE};
use crate::error::{domain, Error, Result};
use crate::families::{build_family, verify_family, CoveringFamily, FamilyDoc, Provenance};

/// Outcome of a minimum-cover search on a model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinCover {
    pub size: usize,
    /// Candidate indices, ascending.
    pub witness: Vec<usize>,
    pub labels: Vec<CandidateLabel>,
    /// False when the search stopped at its deadline.
    pub certified: bool,
    /// Proven lower bound; equals `size` when certified.
    pub lower_bound: usize,
    pub nodes: u64,
}

/// Minimum number of candidates covering the model's universe.
pub fn min_cover(m: &CoverModel) -> Result<MinCover> {
    min_cover_with_limits(m, SearchLimits::default())
}

pub fn min_cover_with_limits(m: &CoverModel, limits: SearchLimits) -> Result<MinCover> {
    let elements = m.element_candidates();
    match solve_min_cover(m.candidates.len(), &elements, limits)? {
        Ok(sol) => Ok(MinCover {
            labels: sol
                .witness
                .iter()
                .map(|&c| (&m.candidates[c]).into())
                .collect(),
            size: sol.size,
            witness: sol.witness,
            certified: sol.certified,
            lower_bound: sol.lower_bound,
            nodes: sol.nodes,
        }),
        Err(u) => Err(Error::Infeasible {
            uncoverable: m.universe[u.0].clone(),
        }),
    }
}

/// An exact value of the covering number together with the result it rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub value: u64,
    /// `"S-2p-or-2^k"`, `"A-prime-non-repunit"` or `"S-prime"`.
    pub citation: &'static str,
}

/// Known exact values of the covering number; `None` outside their hypotheses.
pub fn closed_form_gamma(n: u32, group: Group) -> Option<ClosedForm> {
    let n64 = u64::from(n);
    let big = n > CATALOG_VALID_ABOVE;
    match group {
        Group::Symmetric => {
            let two_p = n % 2 == 0 && is_prime(n64 / 2);
            if big && (n.is_power_of_two() || two_p) {
                Some(ClosedForm {
                    value: n64 / 4 + 1,
                    citation: "S-2p-or-2^k",
                })
            } else if n >= 5 && is_prime(n64) {
                Some(ClosedForm {
                    value: n64 / 2,
                    citation: "S-prime",
                })
            } else {
                None
            }
        }
        Group::Alternating => {
            (big && is_prime(n64) && repunit_forms(n64).is_empty()).then(|| ClosedForm {
                value: (n64 + 1) / 3,
                citation: "A-prime-non-repunit",
            })
        }
    }
}

/// Interval for the covering number: a set-cover lower bound and the
/// smallest verified family.
#[derive(Debug, Clone, Serialize)]
pub struct GammaBracket {
    pub n: u32,
    pub group: Group,
    pub lower: u64,
    /// False below degree 37, where the primitive catalog may be incomplete.
    pub lower_sound: bool,
    /// False when the cover search hit its deadline; `lower` is then the
    /// proven bound reached so far.
    pub certified: bool,
    pub upper: u64,
    pub lower_witness: Vec<CandidateLabel>,
    #[serde(skip)]
    pub upper_witness: CoveringFamily,
    /// Sizes of every applicable family that verified.
    pub witness_sizes: Vec<(Provenance, usize)>,
    pub closed_form: Option<ClosedForm>,
    /// `lower <= closed_form <= upper` where the lower bound is sound.
    pub consistent: bool,
}

impl GammaBracket {
    pub fn upper_doc(&self) -> FamilyDoc {
        self.upper_witness.to_doc()
    }
}

/// Smallest applicable built-in family that verifies, with the sizes of all
/// that do. Ties keep the earlier construction.
pub fn best_family(n: u32, group: Group) -> Result<(CoveringFamily, Vec<(Provenance, usize)>)> {
    let mut best: Option<CoveringFamily> = None;
    let mut sizes = Vec::new();
    for prov in Provenance::BUILT_IN {
        if prov.violated_hypothesis(n, group).is_some() {
            continue;
        }
        let f = build_family(prov, n, group)?;
        if !verify_family(&f).covered {
            continue;
        }
        sizes.push((prov, f.len()));
        if best.as_ref().is_none_or(|b| f.len() < b.len()) {
            best = Some(f);
        }
    }
    best.map(|b| (b, sizes))
        .ok_or_else(|| domain(format!("no built-in family covers {group}_{n}")))
}

pub fn gamma_bracket(n: u32, group: Group) -> Result<GammaBracket> {
    gamma_bracket_with_limits(n, group, SearchLimits::default())
}

pub fn gamma_bracket_with_limits(
    n: u32,
    group: Group,
    limits: SearchLimits,
) -> Result<GammaBracket> {
    let model = build_model(n, group)?;
    let cover = min_cover_with_limits(&model, limits)?;
    let (family, witness_sizes) = best_family(n, group)?;
    let lower = cover.lower_bound as u64;
    let upper = family.len() as u64;
    let closed_form = closed_form_gamma(n, group);
    let consistent = !model.sound
        || (lower <= upper
            && closed_form
                .as_ref()
                .is_none_or(|c| lower <= c.value && c.value <= upper));
    Ok(GammaBracket {
        n,
        group,
        lower,
        lower_sound: model.sound,
        certified: cover.certified,
        upper,
        lower_witness: cover.labels,
        upper_witness: family,
        witness_sizes,
        closed_form,
        consistent,
    })
}

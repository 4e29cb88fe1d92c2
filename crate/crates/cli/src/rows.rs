//! One flat row type per command, shared by the CSV and JSON encodings.

use serde::Serialize;

use nct_core::addcomb::{ExtremalResult, Method};
use nct_core::bounds::{ClassificationReport, GammaBracket};
use nct_core::coverage::{Catalog, CatalogEntry};
use nct_core::families::{CoverageReport, CoveringFamily, SizeFormula};

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Debug, Serialize)]
pub struct GammaRow {
    pub n: u32,
    pub group: &'static str,
    pub lower: u64,
    pub lower_sound: bool,
    pub certified: bool,
    pub upper: u64,
    pub upper_provenance: &'static str,
    pub closed_form: Option<u64>,
    pub closed_form_citation: Option<&'static str>,
    pub consistent: bool,
    /// `tag:size` pairs of every family that verified.
    pub witness_sizes: String,
}

impl From<&GammaBracket> for GammaRow {
    fn from(b: &GammaBracket) -> Self {
        GammaRow {
            n: b.n,
            group: b.group.symbol(),
            lower: b.lower,
            lower_sound: b.lower_sound,
            certified: b.certified,
            upper: b.upper,
            upper_provenance: b.upper_witness.provenance.tag(),
            closed_form: b.closed_form.as_ref().map(|c| c.value),
            closed_form_citation: b.closed_form.as_ref().map(|c| c.citation),
            consistent: b.consistent,
            witness_sizes: join(b.witness_sizes.iter().map(|(p, s)| format!("{p}:{s}")), ";"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyRow {
    pub n: u32,
    pub group: &'static str,
    pub provenance: &'static str,
    pub family_size: usize,
    pub formula: u64,
    pub formula_exact: bool,
    pub formula_holds: bool,
    pub covered: bool,
    pub required: u64,
    pub bulk_certified: u64,
    pub uncovered_count: u64,
    /// Up to ten uncovered types.
    pub uncovered_sample: String,
    pub members: String,
}

impl VerifyRow {
    pub fn new(f: &CoveringFamily, formula: SizeFormula, r: &CoverageReport) -> Self {
        VerifyRow {
            n: f.n,
            group: f.group.symbol(),
            provenance: f.provenance.tag(),
            family_size: f.len(),
            formula: formula.value,
            formula_exact: formula.exact,
            formula_holds: formula.admits(f.len()),
            covered: r.covered,
            required: r.required,
            bulk_certified: r.bulk_certified,
            uncovered_count: r.uncovered_count,
            uncovered_sample: join(r.uncovered_types.iter().take(10), " "),
            members: join(&f.members, "; "),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CatalogRow {
    pub n: u32,
    pub line: u8,
    pub params: String,
    pub exceptional_type: String,
    pub valid: bool,
}

impl CatalogRow {
    pub fn new(c: &Catalog, e: &CatalogEntry) -> Self {
        let p = &e.params;
        let named = [
            ("q", p.q),
            ("d", p.d.map(u64::from)),
            ("d1", p.d1.map(u64::from)),
            ("d2", p.d2.map(u64::from)),
            ("p", p.p),
            ("m", p.m),
            ("k1", p.k1),
            ("k2", p.k2),
        ];
        CatalogRow {
            n: c.n,
            line: e.line,
            params: join(
                named
                    .iter()
                    .filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))),
                ";",
            ),
            exceptional_type: e.exceptional_type.to_string(),
            valid: c.valid,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ExtremalRow {
    pub variant: &'static str,
    pub n: u32,
    pub maximum: usize,
    pub certified: bool,
    pub method: &'static str,
    /// Space-separated witness elements.
    pub witness: String,
    /// 0/1 characteristic vector over the ambient.
    pub indicator: String,
}

impl From<&ExtremalResult> for ExtremalRow {
    fn from(r: &ExtremalResult) -> Self {
        ExtremalRow {
            variant: r.problem.variant.name(),
            n: r.problem.n,
            maximum: r.maximum,
            certified: r.certified,
            method: match r.method {
                Method::Exhaustive => "exhaustive",
                Method::BranchAndBound => "branch-and-bound",
            },
            witness: join(&r.witness.elements, " "),
            indicator: join(r.witness.indicator(), ""),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyRow {
    pub kind: &'static str,
    pub n: u32,
    pub group: Option<&'static str>,
    pub count: u64,
    pub imprimitive_count: u64,
    pub catalog_count: u64,
    pub ceiling: u64,
    pub within_ceiling: bool,
    pub catalog_valid: bool,
    /// `x,h:tags` per item; a trailing `*` marks the `x = 1` boundary.
    pub items: String,
}

impl From<&ClassificationReport> for ClassifyRow {
    fn from(r: &ClassificationReport) -> Self {
        ClassifyRow {
            kind: r.kind,
            n: r.n,
            group: r.group.map(|g| g.symbol()),
            count: r.count,
            imprimitive_count: r.imprimitive_count,
            catalog_count: r.catalog_count,
            ceiling: r.ceiling,
            within_ceiling: r.count <= r.ceiling,
            catalog_valid: r.catalog_valid,
            items: join(
                r.items.iter().map(|i| {
                    let mark = if i.boundary { "*" } else { "" };
                    format!("{},{}:{}{mark}", i.x, i.h, i.tags.join("+"))
                }),
                " ",
            ),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LimitsRow {
    pub n: u32,
    pub group: &'static str,
    pub lower: Option<u64>,
    pub upper: u64,
    pub lower_ratio: Option<f64>,
    pub upper_ratio: f64,
    pub certified: bool,
    pub upper_provenance: &'static str,
}

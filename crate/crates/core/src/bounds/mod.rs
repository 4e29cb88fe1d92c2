//! Lower bounds by exact set cover, brackets for the covering number, and
//! classifiers for the exceptional structures in the lower-bound arguments.

mod bracket;
mod classify;
mod model;
mod setcover;

pub use bracket::{
    best_family, closed_form_gamma, gamma_bracket, gamma_bracket_with_limits, min_cover,
    min_cover_with_limits, ClosedForm, GammaBracket, MinCover,
};
pub use classify::{
    classify_degenerate_cubes, classify_restricted_triples, item_is_covered, ClassificationReport,
    ClassifiedItem,
};
pub use model::{build_model, model_candidates, model_universe, CandidateLabel, CoverModel};
pub use setcover::{solve_min_cover, CoverSolution, SearchLimits, Uncoverable, MAX_CANDIDATES};

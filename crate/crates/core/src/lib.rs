//! Bounds and exact values for the normal covering numbers of `S_n` and `A_n`.
//!
//! Everything operates on cycle types: [`coverage`] decides which subgroup
//! classes contain which types, [`families`] builds and checks explicit
//! coverings (upper bounds), [`bounds`] solves exact set-cover models (lower
//! bounds) and [`addcomb`] searches the related extremal problems in `Z/n`.

pub mod addcomb;
pub mod arith;
pub mod bits;
pub mod bounds;
pub mod coverage;
pub mod cycle_type;
pub mod error;
pub mod families;

pub use arith::{arith_profile, ArithProfile};
pub use coverage::{Group, SubgroupClass};
pub use cycle_type::{enumerate_cycle_types, invariant_set_sizes, CycleType, Sign};
pub use error::{Error, Result};

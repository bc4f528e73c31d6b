//! Filters on the naturals and the filter quotient of sequences: level classes
//! compared modulo a filter, germ objects and maps, and index-set evaluation of
//! truncatedness, connectivity and equivalence.

mod germ;
mod level;
mod los;
mod set;

pub use germ::{validate_family, BaseObject, Cond, Family, GermObject, Predicate, Schema};
pub use level::{eq_mod_filter, le_mod_filter, lt_mod_filter, Line, NonStandardLevel};
pub use los::{
    equivalence_mod_filter, hypercomplete_witness, los, los_connected, los_truncated,
    predicate_tags, BaseMap, GermMap, GermMapKind, TagSequence,
};
pub use set::{filter_contains, FilterSpec, PeriodicSet, SetDesc};

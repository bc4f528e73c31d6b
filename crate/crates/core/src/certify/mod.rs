//! Sound three-valued certificates for connectivity and truncatedness.
//!
//! Every rule below only ever answers when a classical theorem backs it
//! (Hurewicz, relative Hurewicz, Whitehead, asphericity of graphs); anything
//! else is `Unknown` with a reason. Rule ids are stable and appear in evidence.

mod join;
mod map;
mod object;

pub use join::{
    idempotent_join_check, join_theorem_check, minus_one_truncation_probe, pushout_cover_check,
    Probe, ProbeStage, Stable,
};
pub use map::{conn_map, equivalence, tau_equivalence};
pub use object::{conn_object, contractible, truncated_object};

pub use crate::verdict::{Budgets, Evidence, Tag, Verdict};

use crate::invariants::{component, pi0, pi1, Components};
use crate::simplicial::SimplicialSet;
use alloc::vec::Vec;

/// Per-component simple-connectivity verdicts.
pub(crate) fn simply_connected(x: &SimplicialSet, comps: &Components, b: &Budgets) -> Vec<Verdict> {
    (0..comps.count)
        .map(|c| pi1(x, c, b).expect("component exists").triviality)
        .collect()
}

pub(crate) fn components(x: &SimplicialSet) -> (Components, Vec<SimplicialSet>) {
    let comps = pi0(x);
    let parts = (0..comps.count).map(|c| component(x, &comps, c)).collect();
    (comps, parts)
}

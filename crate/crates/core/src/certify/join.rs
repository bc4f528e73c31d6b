use super::object::{conn_object, contractible, truncated_object};
use super::{Budgets, Tag, Verdict};
use crate::error::{Error, Result};
use crate::invariants::{homology, pi0};
use crate::simplicial::{
    coproduct, join, join_power, join_power_skeleton, join_skeleton, strict_pushout, SimplicialMap,
    SimplicialSet,
};
use crate::TruncLevel;
use alloc::format;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct ProbeStage {
    pub k: usize,
    /// The level `k - 2` at which `A^{*k}` is tested.
    pub level: TruncLevel,
    pub verdict: Verdict,
    /// Set when only this skeleton of `A^{*k}` was built because the full join exceeds the dimension cap.
    pub skeleton: Option<usize>,
    pub counts: Vec<usize>,
}

/// Where the join sequence stabilizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stable {
    Empty,
    Point,
}

#[derive(Clone, Debug)]
pub struct Probe {
    pub stages: Vec<ProbeStage>,
    pub truncation: Stable,
}

/// Connectivity at level `n` only depends on the `(n + 2)`-skeleton: homology
/// through degree `n` needs `n + 1` cells and `pi_1` needs 2-cells.
fn needed_skeleton(level: i64) -> usize {
    (level + 2).max(2) as usize
}

/// Connectivity of the join powers `A^{*k}` at level `k - 2`, `k = 1..=k_max`.
pub fn minus_one_truncation_probe(a: &SimplicialSet, k_max: usize, b: &Budgets) -> Result<Probe> {
    if k_max == 0 {
        return Err(Error::InvalidInput("probe needs k_max >= 1".into()));
    }
    let mut stages = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let level = TruncLevel::new(k as i64 - 2)?;
        let (object, skeleton) = match join_power(a, k, b.max_dim) {
            Ok(p) => (p.object, None),
            Err(Error::DimensionCap { .. }) => {
                let top = needed_skeleton(level.value());
                (join_power_skeleton(a, k, top)?.object, Some(top))
            }
            Err(e) => return Err(e),
        };
        let mut verdict = conn_object(&object, level, b);
        if let Some(top) = skeleton {
            verdict = verdict.with(
                "SKELETON",
                format!("computed on the {top}-skeleton, which determines {level}-connectivity"),
            );
        }
        stages.push(ProbeStage {
            k,
            level,
            verdict,
            skeleton,
            counts: object.counts(),
        });
    }
    // A vertex gives a point of A, and then the colimit of the join powers is the point.
    let truncation = if a.is_empty() {
        Stable::Empty
    } else {
        Stable::Point
    };
    Ok(Probe { stages, truncation })
}

/// Checks one instance of the join connectivity bound: `X` m-connected and
/// `Y` n-connected make `X * Y` (m + n + 2)-connected.
pub fn join_theorem_check(
    x: &SimplicialSet,
    m: TruncLevel,
    y: &SimplicialSet,
    n: TruncLevel,
    b: &Budgets,
) -> Result<Verdict> {
    let vx = conn_object(x, m, b);
    let vy = conn_object(y, n, b);
    for (v, name, l) in [(&vx, "X", m), (&vy, "Y", n)] {
        if !v.is_yes() {
            return Err(Error::Precondition(format!(
                "{name} is not certified {l}-connected ({})",
                v.tag
            )));
        }
    }
    let level = TruncLevel::new(m.value() + n.value() + 2)?;
    let (j, skeleton) = match join(x, y, b.max_dim) {
        Ok(j) => (j.object, None),
        Err(Error::DimensionCap { .. }) => {
            let top = needed_skeleton(level.value());
            (join_skeleton(x, y, top).object, Some(top))
        }
        Err(e) => return Err(e),
    };
    let mut v = conn_object(&j, level, b).citing(&vy).citing(&vx);
    if let Some(top) = skeleton {
        v = v.with("SKELETON", format!("join computed on its {top}-skeleton"));
    }
    if v.is_yes() {
        v = v.with(
            "J-THEOREM",
            format!("join of a {m}-connected and a {n}-connected object is {level}-connected"),
        );
    }
    Ok(v)
}

/// `A + B -> A u_C B` is surjective on components.
pub fn pushout_cover_check(f: &SimplicialMap, g: &SimplicialMap, b: &Budgets) -> Result<Verdict> {
    let p = strict_pushout(f, g)?;
    let c = coproduct(f.target(), g.target());
    let images = (0..c.object.counts().len())
        .map(|d| {
            let mut l: Vec<_> = f
                .target()
                .generators(d)
                .map(|x| p.left.image(x).clone())
                .collect();
            l.extend(g.target().generators(d).map(|x| p.right.image(x).clone()));
            l
        })
        .collect();
    let canonical = SimplicialMap::new(c.object.clone(), p.object.clone(), images)?;
    let comps = pi0(&p.object);
    let mut hit = alloc::vec![false; comps.count];
    for v in canonical.vertex_map() {
        hit[comps.vertex_component[v]] = true;
    }
    let missed = hit.iter().filter(|h| !**h).count();
    Ok(if missed == 0 {
        Verdict::yes(
            *b,
            "PC-PI0",
            format!("all {} pushout components are hit", comps.count),
        )
    } else {
        Verdict::no(
            *b,
            "PC-PI0",
            format!("{missed} pushout components are missed"),
        )
    })
}

/// Consistency of `A -> A * A` with (-1)-truncatedness of `A`.
pub fn idempotent_join_check(a: &SimplicialSet, b: &Budgets) -> Result<Verdict> {
    let prop = truncated_object(a, TruncLevel::new(-1)?, b);
    let jj = join(a, a, b.max_dim)?.object;
    match prop.tag {
        Tag::Yes if a.is_empty() => Ok(if jj.is_empty() {
            Verdict::yes(*b, "IJ-EMPTY", "A and A * A are both empty").citing(&prop)
        } else {
            Verdict::no(*b, "IJ-EMPTY", "A is empty but A * A is not").citing(&prop)
        }),
        Tag::Yes => {
            let c = contractible(&jj, b);
            Ok(match c.tag {
                Tag::Yes => {
                    Verdict::yes(*b, "IJ-CONTRACTIBLE", "A and A * A are both contractible")
                        .citing(&c)
                }
                Tag::No => Verdict::no(*b, "IJ-CONTRACTIBLE", "A is contractible but A * A is not")
                    .citing(&c),
                Tag::Unknown => {
                    Verdict::unknown(*b, "contractibility of A * A not certified").citing(&c)
                }
            })
        }
        Tag::No => {
            let (ha, hj) = (homology(a), homology(&jj));
            Ok(if ha != hj {
                Verdict::yes(
                    *b,
                    "IJ-NONPROP",
                    "A is not (-1)-truncated and A -> A * A changes homology",
                )
                .citing(&prop)
            } else {
                Verdict::unknown(
                    *b,
                    "A is not (-1)-truncated yet A and A * A have equal homology",
                )
            })
        }
        Tag::Unknown => {
            Ok(Verdict::unknown(*b, "(-1)-truncatedness of A is not certified").citing(&prop))
        }
    }
}

//! Truncation and connectivity laws, checked on a finite universe of groupoids.
use super::checks::gap_report_capped;
use super::constructions::{all_functors, diagonal, pullback, skeleton, truncate0, Pullback};
use super::group::Group;
use super::groupoid::{Component, FiniteGroupoid, GroupoidFunctor};
use super::levels::{
    conn_level, factorize, sub_restriction, trunc_level, ConnLevel, Factorization,
};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;

/// Every groupoid with at most 3 objects and automorphism groups among the
/// trivial group, Z/2 and Z/3, up to equivalence-preserving relabelling (35 in all).
pub fn universe() -> Vec<FiniteGroupoid> {
    let groups = [Group::trivial(), Group::cyclic(2), Group::cyclic(3)];
    let blocks: Vec<(usize, usize)> = (1..=3).flat_map(|s| (0..3).map(move |g| (s, g))).collect();
    let mut out = Vec::new();
    for n in 0..=3 {
        let mut stack = Vec::new();
        collect(&blocks, n, 0, &mut stack, &mut |choice: &[usize]| {
            let mut comps = Vec::new();
            let mut next = 0;
            for &b in choice {
                let (size, g) = blocks[b];
                comps.push(Component {
                    group: groups[g].clone(),
                    objects: (next..next + size).collect(),
                });
                next += size;
            }
            out.push(FiniteGroupoid::from_components(n, comps).expect("universe layout"));
        });
    }
    out
}

fn collect(
    blocks: &[(usize, usize)],
    left: usize,
    from: usize,
    stack: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if left == 0 {
        emit(stack);
        return;
    }
    for b in from..blocks.len() {
        if blocks[b].0 <= left {
            stack.push(b);
            collect(blocks, left - blocks[b].0, b, stack, emit);
            stack.pop();
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    Diagonal,
    Mono,
    UnitConnected,
    Uniqueness,
    BaseChange,
    FactorizationPullback,
    Composition,
    Rigidity,
    Descent,
    SubInjectivity,
    HalfStep,
    ElementaryEquiv,
    LoopCriterion,
    Modality,
    GapBiconditional,
    EquivalenceInvariance,
}

impl Law {
    pub const ALL: [Law; 16] = [
        Law::Diagonal,
        Law::Mono,
        Law::UnitConnected,
        Law::Uniqueness,
        Law::BaseChange,
        Law::FactorizationPullback,
        Law::Composition,
        Law::Rigidity,
        Law::Descent,
        Law::SubInjectivity,
        Law::HalfStep,
        Law::ElementaryEquiv,
        Law::LoopCriterion,
        Law::Modality,
        Law::GapBiconditional,
        Law::EquivalenceInvariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Diagonal => "diagonal",
            Law::Mono => "mono",
            Law::UnitConnected => "unit-connected",
            Law::Uniqueness => "uniqueness",
            Law::BaseChange => "base-change",
            Law::FactorizationPullback => "factorization-pullback",
            Law::Composition => "composition",
            Law::Rigidity => "rigidity",
            Law::Descent => "descent",
            Law::SubInjectivity => "sub-injectivity",
            Law::HalfStep => "half-step",
            Law::ElementaryEquiv => "elementary-equiv",
            Law::LoopCriterion => "loop-criterion",
            Law::Modality => "modality",
            Law::GapBiconditional => "gap-biconditional",
            Law::EquivalenceInvariance => "equivalence-invariance",
        }
    }
}

/// Draws objects, functors and levels from raw random words.
struct Draw<'a> {
    universe: &'a [FiniteGroupoid],
    seeds: &'a [u64],
    next: usize,
}

impl Draw<'_> {
    fn word(&mut self) -> u64 {
        let w = self.seeds[self.next % self.seeds.len()]
            .rotate_left(7 * (self.next / self.seeds.len()) as u32);
        self.next += 1;
        w
    }

    fn object(&mut self) -> FiniteGroupoid {
        let i = (self.word() % self.universe.len() as u64) as usize;
        self.universe[i].clone()
    }

    fn level(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.word() % (hi - lo + 1) as u64) as i64
    }

    fn functor(
        &mut self,
        a: &FiniteGroupoid,
        x: &FiniteGroupoid,
    ) -> Result<Option<GroupoidFunctor>> {
        let all = all_functors(a, x)?;
        let w = self.word();
        Ok((!all.is_empty()).then(|| all[(w % all.len() as u64) as usize].clone()))
    }

    /// A functor out of a random object into `x`, or `None` if there is none.
    fn into_target(&mut self, x: &FiniteGroupoid) -> Result<Option<GroupoidFunctor>> {
        let a = self.object();
        self.functor(&a, x)
    }

    fn between(&mut self) -> Result<Option<GroupoidFunctor>> {
        let (a, x) = (self.object(), self.object());
        self.functor(&a, &x)
    }
}

/// Injective and surjective on every hom-set.
pub fn fully_faithful(f: &GroupoidFunctor) -> bool {
    let (x, y) = (f.source(), f.target());
    (0..x.num_objects()).all(|a| {
        (0..x.num_objects()).all(|b| {
            let hom = x.hom(a, b);
            let mut images: Vec<usize> = hom.iter().map(|&m| f.mor(m)).collect();
            images.sort_unstable();
            images.dedup();
            images.len() == hom.len() && hom.len() == y.hom(f.obj(a), f.obj(b)).len()
        })
    })
}

/// The square `X -> Y`, `X -> tau0 X` over `tau0 Y`, as the pullback of
/// `Y -> tau0 Y <- tau0 X` together with the comparison functor `X -> pullback`.
pub fn elementary_square(f: &GroupoidFunctor) -> Result<(Pullback, GroupoidFunctor)> {
    let (ux, uy) = (truncate0(f.source()), truncate0(f.target()));
    let t0f = discrete_map(ux.target(), uy.target(), &f.pi0_map());
    let p = pullback(&uy, &t0f)?;
    let x = f.source();
    let t0x = ux.target();
    let miss = || Error::Internal("comparison into the pullback is undefined".into());
    let obj = (0..x.num_objects())
        .map(|o| {
            let c = x.comp_of(o);
            p.find(&(f.obj(o), c, uy.target().identity(uy.obj(f.obj(o)))))
                .ok_or_else(miss)
        })
        .collect::<Result<Vec<_>>>()?;
    let mor = (0..x.num_morphisms())
        .map(|m| {
            p.morphism(obj[x.src(m)], (f.mor(m), t0x.identity(x.comp_of(x.src(m)))))
                .ok_or_else(miss)
        })
        .collect::<Result<Vec<_>>>()?;
    let cmp = GroupoidFunctor::new(x.clone(), p.object.clone(), obj, mor)?;
    Ok((p, cmp))
}

fn unit(x: &FiniteGroupoid) -> GroupoidFunctor {
    GroupoidFunctor::to_point(x)
}

fn validated(fact: &Factorization, f: &GroupoidFunctor, n: i64) -> Result<bool> {
    Ok(conn_level(&fact.left)?.at_least(n)
        && trunc_level(&fact.right)? <= n
        && fact
            .right
            .compose(&fact.left)
            .map(|c| c.is_isomorphic_to(f))
            .unwrap_or(false))
}

/// Maps between discrete groupoids given by a function on objects.
fn discrete_map(x: &FiniteGroupoid, y: &FiniteGroupoid, on: &[usize]) -> GroupoidFunctor {
    let mor = (0..x.num_morphisms())
        .map(|m| y.identity(on[x.src(m)]))
        .collect();
    GroupoidFunctor::new(x.clone(), y.clone(), on.to_vec(), mor).expect("discrete map")
}

/// `pullback(F, G) -> pullback(H, G)` induced by `L` with `F = H . L` strictly.
fn induced_on_pullback(
    l: &GroupoidFunctor,
    top: &super::constructions::Pullback,
    bottom: &super::constructions::Pullback,
) -> Result<GroupoidFunctor> {
    let miss = || Error::Internal("induced pullback map is undefined".into());
    let obj = top
        .keys
        .iter()
        .map(|&(a, b, phi)| bottom.find(&(l.obj(a), b, phi)).ok_or_else(miss))
        .collect::<Result<Vec<_>>>()?;
    let mor = (0..top.object.num_morphisms())
        .map(|m| {
            let (u, v) = top.labels[m];
            bottom
                .morphism(obj[top.object.src(m)], (l.mor(u), v))
                .ok_or_else(miss)
        })
        .collect::<Result<Vec<_>>>()?;
    GroupoidFunctor::new(top.object.clone(), bottom.object.clone(), obj, mor)
}

const UNIQUENESS_PAIR_BUDGET: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawOutcome {
    Held,
    /// The drawn instance does not meet the hypotheses.
    Vacuous,
    Violated,
    /// An enumeration in the instance exceeded the law budget.
    Skipped,
}

/// Enumeration budget for the lifting and gap-map laws.
pub const LAW_SIZE_CAP: u128 = 60_000;

/// Checks one instance of `law`, drawing its inputs from `seeds`.
pub fn check_law(law: Law, universe: &[FiniteGroupoid], seeds: &[u64]) -> Result<LawOutcome> {
    Ok(match instance(law, universe, seeds) {
        Err(Error::SizeCap { .. }) => LawOutcome::Skipped,
        Err(e) => return Err(e),
        Ok(None) => LawOutcome::Vacuous,
        Ok(Some(true)) => LawOutcome::Held,
        Ok(Some(false)) => LawOutcome::Violated,
    })
}

fn instance(law: Law, universe: &[FiniteGroupoid], seeds: &[u64]) -> Result<Option<bool>> {
    let mut d = Draw {
        universe,
        seeds,
        next: 0,
    };
    match law {
        Law::Diagonal => {
            let x = d.object();
            let (t, td) = (trunc_level(&unit(&x))?, trunc_level(&diagonal(&x))?);
            // X is n-truncated iff the diagonal is (n-1)-truncated. Compared per n
            // rather than as td = t - 1, which a contractible X breaks: both levels
            // bottom out at -2.
            Ok(Some((-1..=1).all(|n| (t <= n) == (td < n))))
        }
        Law::Mono => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            Ok(Some((trunc_level(&f)? <= -1) == fully_faithful(&f)))
        }
        Law::UnitConnected => {
            let (x, n) = (d.object(), d.level(-1, 0));
            Ok(Some(
                conn_level(&factorize(&unit(&x), n)?.left)?.at_least(n),
            ))
        }
        Law::Uniqueness => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            let (m, n) = (d.object(), d.level(-2, 1));
            let reference = factorize(&f, n)?.middle;
            let lefts = all_functors(f.source(), &m)?;
            let rights = all_functors(&m, f.target())?;
            if lefts.len() * rights.len() > UNIQUENESS_PAIR_BUDGET {
                return Ok(None);
            }
            let mut lefts_ok = Vec::new();
            for l in lefts {
                if conn_level(&l)?.at_least(n) {
                    lefts_ok.push(l);
                }
            }
            for r in rights {
                if trunc_level(&r)? > n {
                    continue;
                }
                for l in &lefts_ok {
                    if r.compose(l)?.is_isomorphic_to(&f) && !m.is_equivalent(&reference) {
                        return Ok(Some(false));
                    }
                }
            }
            Ok(Some(true))
        }
        Law::BaseChange => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            let Some(g) = d.into_target(f.target())? else {
                return Ok(None);
            };
            Ok(Some(conn_level(&pullback(&f, &g)?.pr2)? >= conn_level(&f)?))
        }
        Law::FactorizationPullback => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            let Some(g) = d.into_target(f.target())? else {
                return Ok(None);
            };
            let n = d.level(-2, 1);
            let fact = factorize(&f, n)?;
            let top = pullback(&f, &g)?;
            let bottom = pullback(&fact.right, &g)?;
            let l2 = induced_on_pullback(&fact.left, &top, &bottom)?;
            let pulled = Factorization {
                left: l2,
                middle: bottom.object.clone(),
                right: bottom.pr2.clone(),
            };
            validated(&pulled, &top.pr2, n).map(Some)
        }
        Law::Composition => {
            let Some(g) = d.between()? else {
                return Ok(None);
            };
            let Some(f) = ({
                let x = d.object();
                d.functor(g.target(), &x)?
            }) else {
                return Ok(None);
            };
            let n = d.level(-2, 1);
            let fg = f.compose(&g)?;
            let (cf, cg, cfg) = (conn_level(&f)?, conn_level(&g)?, conn_level(&fg)?);
            let (h1, h2) = (
                cf.at_least(n) && cg.at_least(n),
                cg.at_least(n) && cfg.at_least(n),
            );
            if !h1 && !h2 {
                return Ok(None);
            }
            Ok(Some((!h1 || cfg.at_least(n)) && (!h2 || cf.at_least(n))))
        }
        Law::Rigidity => {
            let (x, n) = (d.object(), d.level(-1, 1));
            let u = unit(&x);
            if !(trunc_level(&u)? <= n && conn_level(&u)?.at_least(n)) {
                return Ok(None);
            }
            Ok(Some(x.is_equivalent(&FiniteGroupoid::point())))
        }
        Law::Descent => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            let Some(g) = d.into_target(f.target())? else {
                return Ok(None);
            };
            if !conn_level(&g)?.at_least(-1) {
                return Ok(None);
            }
            let p = pullback(&f, &g)?.pr2;
            Ok(Some(
                conn_level(&p)? == conn_level(&f)? && trunc_level(&p)? == trunc_level(&f)?,
            ))
        }
        Law::SubInjectivity => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            Ok(Some(
                conn_level(&f)?.at_least(-1) == sub_restriction(&f)?.injective,
            ))
        }
        Law::HalfStep => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            let p = f.pi0_map();
            let mut q = p.clone();
            q.sort_unstable();
            q.dedup();
            let bijective = q.len() == p.len() && p.len() == f.target().num_components();
            if !bijective {
                return Ok(None);
            }
            Ok(Some(conn_level(&f)?.at_least(-1)))
        }
        Law::ElementaryEquiv => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            if !fully_faithful(&f) {
                return Ok(None);
            }
            Ok(Some(elementary_square(&f)?.1.is_equivalence()))
        }
        Law::LoopCriterion => {
            let a = d.object();
            if a.is_empty() || !conn_level(&diagonal(&a))?.at_least(0) {
                return Ok(None);
            }
            Ok(Some(conn_level(&unit(&a))? == ConnLevel::Infinite))
        }
        Law::Modality => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            let Some(g) = d.between()? else {
                return Ok(None);
            };
            let n = d.level(-2, 1);
            let fact = factorize(&f, n)?;
            let factors = fact.right.compose(&fact.left)? == f;
            let conforming = conn_level(&f)?.at_least(n) && trunc_level(&g)? <= n;
            Ok(Some(
                factors && (!conforming || gap_report_capped(&f, &g, LAW_SIZE_CAP)?.equivalence),
            ))
        }
        Law::GapBiconditional => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            let Some(g) = d.between()? else {
                return Ok(None);
            };
            let n = d.level(-2, 1);
            if trunc_level(&g)? > n {
                return Ok(None);
            }
            if conn_level(&f)?.at_least(n) {
                Ok(Some(gap_report_capped(&f, &g, LAW_SIZE_CAP)?.equivalence))
            } else {
                // The truncated leg of f's own factorization detects the failure.
                let r = factorize(&f, n)?.right;
                Ok(Some(!gap_report_capped(&f, &r, LAW_SIZE_CAP)?.equivalence))
            }
        }
        Law::EquivalenceInvariance => {
            let Some(f) = d.between()? else {
                return Ok(None);
            };
            let thick = f.source().product(&FiniteGroupoid::codiscrete(2));
            let pr = GroupoidFunctor::new(
                thick.clone(),
                f.source().clone(),
                (0..thick.num_objects()).map(|o| o / 2).collect(),
                (0..thick.num_morphisms())
                    .map(|m| project_first(&thick, f.source(), m))
                    .collect(),
            )?;
            let sk = skeleton(f.target());
            let g1 = f.compose(&pr)?;
            let g2 = sk.retraction.compose(&f)?;
            let (c, t) = (conn_level(&f)?, trunc_level(&f)?);
            let same = |g: &GroupoidFunctor| -> Result<bool> {
                Ok(conn_level(g)? == c && trunc_level(g)? == t)
            };
            if !(pr.is_equivalence() && same(&g1)? && same(&g2)?) {
                return Err(Error::Internal(format!(
                    "levels changed under an equivalence ({c}, {t})"
                )));
            }
            Ok(Some(true))
        }
    }
}

/// First projection `X x codiscrete(2) -> X` on morphisms.
fn project_first(thick: &FiniteGroupoid, x: &FiniteGroupoid, m: usize) -> usize {
    let (s, t) = (thick.src(m), thick.tgt(m));
    let mm = thick.decode(m);
    // The codiscrete factor has the trivial group, so product elements are X's elements.
    let comp = x.comp_of(s / 2);
    let (i, j) = (x.position(s / 2).1, x.position(t / 2).1);
    x.encode(super::groupoid::Mor {
        comp,
        src: i,
        tgt: j,
        elem: mm.elem,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_has_35_members() {
        let u = universe();
        assert_eq!(u.len(), 35);
        assert!(u.iter().all(|g| g.num_objects() <= 3));
        assert_eq!(u.iter().filter(|g| g.num_objects() == 3).count(), 22);
    }

    #[test]
    fn each_law_on_a_few_seeds() {
        let u = universe();
        for law in Law::ALL {
            for s in 0..5u64 {
                let seeds = [
                    s,
                    s * 31 + 7,
                    s * 17 + 3,
                    s * 5 + 11,
                    s * 13 + 1,
                    s * 29 + 19,
                ];
                assert_ne!(
                    check_law(law, &u, &seeds).unwrap(),
                    LawOutcome::Violated,
                    "{} failed on {s}",
                    law.name()
                );
            }
        }
    }
}

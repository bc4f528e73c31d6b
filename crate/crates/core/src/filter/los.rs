use super::germ::{BaseObject, GermObject, Predicate};
use super::level::NonStandardLevel;
use super::set::{filter_contains, FilterSpec, PeriodicSet, SetDesc};
use crate::certify::{equivalence, tau_equivalence};
use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, GroupoidFunctor, GroupoidSpec};
use crate::simplicial::catalog::boundary_inclusion;
use crate::simplicial::{CatalogSpec, SimplicialMap};
use crate::verdict::{Budgets, Tag, Verdict};
use crate::TruncLevel;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use num_integer::Integer;

/// Per-index tags: `prefix` on `0..prefix.len()`, then `cycle` repeating.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TagSequence {
    pub prefix: Vec<Tag>,
    pub cycle: Vec<Tag>,
    /// First index whose tag came from a family schema instead of a computation.
    pub extrapolated_from: Option<u64>,
}

impl TagSequence {
    pub fn tag(&self, i: u64) -> Tag {
        let p = self.prefix.len() as u64;
        if i < p {
            self.prefix[i as usize]
        } else {
            self.cycle[((i - p) % self.cycle.len() as u64) as usize]
        }
    }

    pub fn set(&self, t: Tag) -> PeriodicSet {
        PeriodicSet {
            prefix: self.prefix.iter().map(|&x| x == t).collect(),
            cycle: self.cycle.iter().map(|&x| x == t).collect(),
        }
    }

    /// Samples `tag_at` on `0..start + period`, where the tags are known to repeat
    /// with `period` from `start` on.
    fn sample(start: u64, period: u64, mut tag_at: impl FnMut(u64) -> Tag) -> Self {
        let prefix = (0..start).map(&mut tag_at).collect();
        let cycle = (start..start + period).map(&mut tag_at).collect();
        TagSequence {
            prefix,
            cycle,
            extrapolated_from: None,
        }
    }
}

/// Three-valued filter logic on per-index tags: the yes set being large is
/// enough for Yes; for No the true set must be provably small, which holds
/// when the complement of the no set (a superset of the true set) is not in the filter.
pub fn los(tags: &TagSequence, phi: &FilterSpec, b: &Budgets, what: &str) -> Verdict {
    let yes = SetDesc::Periodic(tags.set(Tag::Yes));
    let no = SetDesc::Periodic(tags.set(Tag::No));
    let detail = format!("{what}: yes set {yes}, no set {no}, filter {phi}");
    let v = if filter_contains(phi, &yes) == Tag::Yes {
        Verdict::yes(*b, "LOS-FILTER", detail)
    } else if filter_contains(phi, &no.complement()) == Tag::No {
        Verdict::no(*b, "LOS-FILTER", detail)
    } else {
        Verdict::unknown(*b, format!("neither set decides membership ({detail})"))
    };
    match tags.extrapolated_from {
        Some(h) => v.with(
            "SCHEMA-EXTRAPOLATED",
            format!("tags from index {h} on follow the validated family schema"),
        ),
        None => v,
    }
}

/// Aligns `at_least` up to `level.start() + k * level.period()`.
fn align(level: &NonStandardLevel, at_least: u64) -> u64 {
    let (s, p) = (level.start(), level.period());
    if at_least <= s {
        s
    } else {
        s + (at_least - s).div_ceil(p) * p
    }
}

/// Least index from which every increasing piece of `level` stays at or above `bound`.
fn reaches(level: &NonStandardLevel, bound: i64) -> u64 {
    level
        .pieces()
        .iter()
        .filter(|l| l.slope > 0)
        .map(|l| {
            (0..)
                .find(|&i| l.at(i) >= bound as i128)
                .expect("increasing")
        })
        .max()
        .unwrap_or(0)
}

struct Cache(Vec<(BaseObject, i64, Tag)>);

impl Cache {
    fn tag(&mut self, x: BaseObject, pred: Predicate, n: i64, b: &Budgets) -> Tag {
        let n = n.min(x.stable_level());
        if let Some(e) = self.0.iter().find(|e| e.0 == x && e.1 == n) {
            return e.2;
        }
        let t = x.verdict(pred, n, b).tag;
        self.0.push((x, n, t));
        t
    }
}

/// Per-index verdict tags of `pred` for `x` at the levels `n`.
pub fn predicate_tags(
    x: &GermObject,
    pred: Predicate,
    n: &NonStandardLevel,
    b: &Budgets,
) -> TagSequence {
    let mut cache = Cache(Vec::new());
    match x {
        GermObject::EventuallyConstant { prefix, tail } => {
            let stable = prefix
                .iter()
                .chain([tail])
                .map(BaseObject::stable_level)
                .max()
                .unwrap_or(1);
            let start = align(n, (prefix.len() as u64).max(reaches(n, stable)));
            TagSequence::sample(start, n.period(), |i| {
                cache.tag(x.at(i), pred, n.value(i), b)
            })
        }
        GermObject::Family { family, horizon } => {
            let schema = family.schema(pred);
            let h = *horizon as u64;
            let settle = n
                .pieces()
                .iter()
                .map(|l| schema.settles_after(l.slope, l.offset))
                .max()
                .unwrap_or(0);
            let start = align(n, (h + 1).max(settle));
            let mut seq = TagSequence::sample(start, n.period(), |i| {
                if i <= h {
                    cache.tag(family.member(i), pred, n.value(i), b)
                } else {
                    schema.tag(i, n.value(i))
                }
            });
            seq.extrapolated_from = Some(h + 1);
            seq
        }
    }
}

/// Filter-quotient truncatedness: decided from the set of indices where `X_i` is `n_i`-truncated.
pub fn los_truncated(
    x: &GermObject,
    n: &NonStandardLevel,
    phi: &FilterSpec,
    b: &Budgets,
) -> Verdict {
    los(
        &predicate_tags(x, Predicate::Truncated, n, b),
        phi,
        b,
        &format!("{n}-truncated"),
    )
}

/// The connectivity counterpart of [`los_truncated`]. It is a derived rule:
/// `X` is `n`-connected exactly when `tau_n X` is terminal, and equivalences
/// satisfy the same index-set criterion as truncatedness.
pub fn los_connected(
    x: &GermObject,
    n: &NonStandardLevel,
    phi: &FilterSpec,
    b: &Budgets,
) -> Verdict {
    los(
        &predicate_tags(x, Predicate::Connected, n, b),
        phi,
        b,
        &format!("{n}-connected"),
    )
    .with("DERIVED-CONN", "connectivity via terminal truncation")
}

/// A levelwise map between base objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseMap {
    Identity(BaseObject),
    ToPoint(BaseObject),
    FromEmpty(BaseObject),
    /// `boundary:n -> delta:n`.
    BoundaryInclusion(usize),
}

enum Realized {
    Simplicial(SimplicialMap),
    Groupoid(GroupoidFunctor),
}

impl BaseMap {
    fn realize(&self) -> Realized {
        let simplicial =
            |s: &CatalogSpec, make: fn(&crate::simplicial::SimplicialSet) -> SimplicialMap| {
                Realized::Simplicial(make(&s.build()))
            };
        let groupoid = |g: &GroupoidSpec, make: fn(&FiniteGroupoid) -> GroupoidFunctor| {
            Realized::Groupoid(make(&g.build()))
        };
        match self {
            BaseMap::Identity(BaseObject::Simplicial(s)) => simplicial(s, SimplicialMap::identity),
            BaseMap::ToPoint(BaseObject::Simplicial(s)) => simplicial(s, |x| {
                SimplicialMap::to_point(x, &CatalogSpec::Point.build()).expect("point target")
            }),
            BaseMap::FromEmpty(BaseObject::Simplicial(s)) => {
                simplicial(s, SimplicialMap::from_empty)
            }
            BaseMap::Identity(BaseObject::Groupoid(g)) => groupoid(g, GroupoidFunctor::identity),
            BaseMap::ToPoint(BaseObject::Groupoid(g)) => groupoid(g, GroupoidFunctor::to_point),
            BaseMap::FromEmpty(BaseObject::Groupoid(g)) => groupoid(g, |x| {
                GroupoidFunctor::new(FiniteGroupoid::empty(), x.clone(), Vec::new(), Vec::new())
                    .expect("empty source")
            }),
            BaseMap::BoundaryInclusion(n) => Realized::Simplicial(boundary_inclusion(*n)),
        }
    }

    /// The underlying simplicial map; `None` for maps of groupoids.
    pub fn simplicial_map(&self) -> Option<SimplicialMap> {
        match self.realize() {
            Realized::Simplicial(f) => Some(f),
            Realized::Groupoid(_) => None,
        }
    }

    pub fn equivalence(&self, b: &Budgets) -> Verdict {
        match self.realize() {
            Realized::Simplicial(f) => {
                equivalence(&f, b).unwrap_or_else(|e| Verdict::unknown(*b, format!("{e}")))
            }
            Realized::Groupoid(f) => exact(f.is_equivalence(), b, "equivalence of groupoids"),
        }
    }

    /// Whether `tau_n` of this map is an equivalence.
    pub fn tau_equivalence(&self, n: i64, b: &Budgets) -> Verdict {
        let level = TruncLevel::new(n).expect("levels are at least -2");
        match self.realize() {
            Realized::Simplicial(f) => tau_equivalence(&f, level, b)
                .unwrap_or_else(|e| Verdict::unknown(*b, format!("{e}"))),
            Realized::Groupoid(f) => {
                let holds = match n {
                    -2 => true,
                    -1 => f.source().is_empty() == f.target().is_empty(),
                    0 => {
                        let mut m = f.pi0_map();
                        m.sort_unstable();
                        m.dedup();
                        m.len() == f.source().num_components()
                            && m.len() == f.target().num_components()
                    }
                    _ => f.is_equivalence(),
                };
                exact(holds, b, &format!("tau_{n} of the functor"))
            }
        }
    }

    /// Level above which `tau_n` verdicts no longer change.
    fn stable_level(&self) -> i64 {
        match self {
            BaseMap::Identity(x) | BaseMap::ToPoint(x) | BaseMap::FromEmpty(x) => x.stable_level(),
            BaseMap::BoundaryInclusion(n) => (*n).max(1) as i64 + 2,
        }
    }
}

fn exact(holds: bool, b: &Budgets, what: &str) -> Verdict {
    if holds {
        Verdict::yes(*b, "GPD-EXACT", format!("{what} holds"))
    } else {
        Verdict::no(*b, "GPD-EXACT", format!("{what} fails"))
    }
}

impl fmt::Display for BaseMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseMap::Identity(x) => write!(f, "id:{x}"),
            BaseMap::ToPoint(x) => write!(f, "to-point:{x}"),
            BaseMap::FromEmpty(x) => write!(f, "from-empty:{x}"),
            BaseMap::BoundaryInclusion(n) => write!(f, "boundary-inclusion:{n}"),
        }
    }
}

impl core::str::FromStr for BaseMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidInput(format!("map `{s}` needs the form kind:object")))?;
        match kind {
            "id" => Ok(BaseMap::Identity(rest.parse()?)),
            "to-point" => Ok(BaseMap::ToPoint(rest.parse()?)),
            "from-empty" => Ok(BaseMap::FromEmpty(rest.parse()?)),
            "boundary-inclusion" => rest
                .trim()
                .parse()
                .map(BaseMap::BoundaryInclusion)
                .map_err(|_| Error::InvalidInput(format!("`{rest}` is not a dimension"))),
            _ => Err(Error::InvalidInput(format!(
                "unknown map kind `{kind}` (id, to-point, from-empty, boundary-inclusion)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GermMapKind {
    /// `prefix` from the start index on, then `cycle` repeating.
    Periodic {
        prefix: Vec<BaseMap>,
        cycle: Vec<BaseMap>,
    },
    /// `msphere:i -> point`, with its schema validated up to `horizon`.
    SpheresToPoint { horizon: usize },
}

/// A sequence of maps defined from index `start` on; earlier indices carry no map
/// and are tagged `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GermMap {
    pub start: u64,
    pub kind: GermMapKind,
}

impl GermMap {
    pub fn periodic(start: u64, prefix: Vec<BaseMap>, cycle: Vec<BaseMap>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidInput(
                "a periodic germ map needs a nonempty cycle".into(),
            ));
        }
        Ok(GermMap {
            start,
            kind: GermMapKind::Periodic { prefix, cycle },
        })
    }

    pub fn levelwise(f: BaseMap) -> Self {
        GermMap {
            start: 0,
            kind: GermMapKind::Periodic {
                prefix: Vec::new(),
                cycle: alloc::vec![f],
            },
        }
    }

    /// Checks the closed forms `equivalence = No` and
    /// `tau_n equivalence = (n <= i - 1)` for `i <= horizon`.
    pub fn spheres_to_point(start: u64, b: &Budgets) -> Result<Self> {
        for i in 0..=b.horizon {
            let f = sphere_map(i as u64);
            let t = f.equivalence(b).tag;
            if t != Tag::No {
                return Err(Error::SchemaMismatch(format!(
                    "msphere:{i} -> point: equivalence computes {t}"
                )));
            }
            for n in -2..=i as i64 + 1 {
                let want = if n < i as i64 { Tag::Yes } else { Tag::No };
                let t = f.tau_equivalence(n, b).tag;
                if t != want {
                    return Err(Error::SchemaMismatch(format!(
                        "msphere:{i} -> point: tau_{n} equivalence computes {t}, schema says {want}"
                    )));
                }
            }
        }
        Ok(GermMap {
            start,
            kind: GermMapKind::SpheresToPoint { horizon: b.horizon },
        })
    }

    pub fn at(&self, i: u64) -> Option<BaseMap> {
        let j = i.checked_sub(self.start)?;
        Some(match &self.kind {
            GermMapKind::Periodic { prefix, cycle } => match prefix.get(j as usize) {
                Some(f) => *f,
                None => cycle[((j - prefix.len() as u64) % cycle.len() as u64) as usize],
            },
            GermMapKind::SpheresToPoint { .. } => sphere_map(i),
        })
    }

    /// From this index on, maps repeat with [`GermMap::period`].
    fn settled(&self) -> u64 {
        match &self.kind {
            GermMapKind::Periodic { prefix, .. } => self.start + prefix.len() as u64,
            GermMapKind::SpheresToPoint { horizon } => self.start.max(*horizon as u64 + 1),
        }
    }

    fn period(&self) -> u64 {
        match &self.kind {
            GermMapKind::Periodic { cycle, .. } => cycle.len() as u64,
            GermMapKind::SpheresToPoint { .. } => 1,
        }
    }

    fn horizon(&self) -> Option<u64> {
        match self.kind {
            GermMapKind::SpheresToPoint { horizon } => Some(horizon as u64),
            GermMapKind::Periodic { .. } => None,
        }
    }

    pub fn equivalence_tags(&self, b: &Budgets) -> TagSequence {
        let mut cache: Vec<(BaseMap, Tag)> = Vec::new();
        let h = self.horizon();
        let mut seq = TagSequence::sample(self.settled(), self.period(), |i| {
            let Some(f) = self.at(i) else {
                return Tag::Unknown;
            };
            if h.is_some_and(|h| i > h) {
                return Tag::No;
            }
            if let Some(e) = cache.iter().find(|e| e.0 == f) {
                return e.1;
            }
            let t = f.equivalence(b).tag;
            cache.push((f, t));
            t
        });
        seq.extrapolated_from = h.map(|h| h + 1);
        seq
    }

    /// Tags of `tau_{n_i}(f_i)` being an equivalence.
    pub fn tau_tags(&self, n: &NonStandardLevel, b: &Budgets) -> TagSequence {
        let mut cache: Vec<(BaseMap, i64, Tag)> = Vec::new();
        let h = self.horizon();
        let mut tag_at = |i: u64| {
            let Some(f) = self.at(i) else {
                return Tag::Unknown;
            };
            let ni = n.value(i);
            if h.is_some_and(|h| i > h) {
                return if ni < i as i64 { Tag::Yes } else { Tag::No };
            }
            let ni = ni.min(f.stable_level());
            if let Some(e) = cache.iter().find(|e| e.0 == f && e.1 == ni) {
                return e.2;
            }
            let t = f.tau_equivalence(ni, b).tag;
            cache.push((f, ni, t));
            t
        };
        let p = n.period().lcm(&self.period());
        let stable = match self.kind {
            GermMapKind::Periodic {
                ref prefix,
                ref cycle,
            } => prefix
                .iter()
                .chain(cycle)
                .map(BaseMap::stable_level)
                .max()
                .unwrap_or(1),
            GermMapKind::SpheresToPoint { .. } => i64::MIN,
        };
        let mut start = self.settled().max(n.start());
        start = match self.kind {
            GermMapKind::Periodic { .. } => start.max(reaches(n, stable)),
            // `n_i < i` changes sign at most once per piece.
            GermMapKind::SpheresToPoint { .. } => {
                let mut s = start;
                for l in n.pieces() {
                    if l.slope != 1 {
                        s = s.max(
                            (l.offset.unsigned_abs()) / (l.slope - 1).unsigned_abs().max(1) + 2,
                        );
                    }
                }
                s
            }
        };
        let mut seq = TagSequence::sample(start, p, &mut tag_at);
        seq.extrapolated_from = h.map(|h| h + 1);
        seq
    }
}

fn sphere_map(i: u64) -> BaseMap {
    BaseMap::ToPoint(BaseObject::Simplicial(CatalogSpec::MinimalSphere(
        i as usize,
    )))
}

/// Filter-quotient equivalence: decided from the set of indices where `f_i` is an equivalence.
pub fn equivalence_mod_filter(f: &GermMap, phi: &FilterSpec, b: &Budgets) -> Verdict {
    los(&f.equivalence_tags(b), phi, b, "equivalence")
}

/// For a germ map that is not an equivalence modulo `phi`, a level class `n`
/// with `tau_n(f)` still not an equivalence: `n_i = -2` where `f_i` is an
/// equivalence and a level where `tau` detects the failure elsewhere.
pub fn hypercomplete_witness(
    f: &GermMap,
    phi: &FilterSpec,
    b: &Budgets,
) -> Result<(NonStandardLevel, Verdict)> {
    let eq = equivalence_mod_filter(f, phi, b);
    match eq.tag {
        Tag::Yes => return Err(Error::AlreadyEquivalence),
        Tag::Unknown => {
            return Err(Error::Precondition(format!(
                "equivalence modulo the filter is undecided: {}",
                eq.reason.clone().unwrap_or_default()
            )))
        }
        Tag::No => {}
    }
    let level = match f.kind {
        GermMapKind::SpheresToPoint { .. } => NonStandardLevel::affine(1, 0, Some(f.start))?,
        GermMapKind::Periodic {
            ref prefix,
            ref cycle,
        } => {
            let eq_tags = f.equivalence_tags(b);
            let a = |i: u64, g: &BaseMap| -> Result<i64> {
                if eq_tags.tag(i) != Tag::No {
                    return Ok(-2);
                }
                (-2..=g.stable_level())
                    .find(|&n| g.tau_equivalence(n, b).is_no())
                    .ok_or_else(|| {
                        Error::MissingDistinguishingLevel(format!(
                            "no level detects that {g} is not an equivalence"
                        ))
                    })
            };
            let mut values: Vec<i64> = alloc::vec![-2; f.start as usize];
            for (k, g) in prefix.iter().enumerate() {
                values.push(a(f.start + k as u64, g)?);
            }
            let base = f.start + prefix.len() as u64;
            let tail = cycle
                .iter()
                .enumerate()
                .map(|(k, g)| a(base + k as u64, g))
                .collect::<Result<Vec<i64>>>()?;
            NonStandardLevel::periodic(values, tail)?
        }
    };
    let v = los(
        &f.tau_tags(&level, b),
        phi,
        b,
        &format!("tau_({level}) equivalence"),
    )
    .citing(&eq);
    Ok((level, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filter::Family;
    use alloc::vec;

    fn obj(s: &str) -> BaseObject {
        s.parse().unwrap()
    }

    fn lv(s: &str) -> NonStandardLevel {
        s.parse().unwrap()
    }

    #[test]
    fn truncated_examples() {
        let b = Budgets::default();
        let f = FilterSpec::Frechet;
        let x = GermObject::eventually_constant(vec![obj("sphere:2"); 10], obj("point"));
        assert_eq!(los_truncated(&x, &lv("const:-2"), &f, &b).tag, Tag::Yes);
        let circle = GermObject::constant(obj("sphere:1"));
        assert_eq!(los_truncated(&circle, &lv("const:0"), &f, &b).tag, Tag::No);
        let wedges = GermObject::family(Family::Wedges, &b).unwrap();
        let v = los_truncated(&wedges, &lv("const:1"), &f, &b);
        assert_eq!(v.tag, Tag::Yes);
        assert!(v.evidence.iter().any(|e| e.rule == "SCHEMA-EXTRAPOLATED"));
    }

    #[test]
    fn connected_examples() {
        let b = Budgets::default();
        let f = FilterSpec::Frechet;
        let spheres = GermObject::family(Family::Spheres, &b).unwrap();
        assert_eq!(
            los_connected(&spheres, &lv("affine:1,-1"), &f, &b).tag,
            Tag::Yes
        );
        assert_eq!(
            los_connected(&spheres, &lv("affine:1,0"), &f, &b).tag,
            Tag::No
        );
        let pt = GermObject::constant(obj("point"));
        for n in ["const:4", "affine:3,1", "periodic:0/1,5"] {
            assert_eq!(
                los_connected(&pt, &lv(n), &FilterSpec::principal(vec![2, 9]).unwrap(), &b).tag,
                Tag::Yes
            );
        }
    }

    #[test]
    fn principal_filter_reads_one_index() {
        let b = Budgets::default();
        let x =
            GermObject::eventually_constant(vec![obj("sphere:1"), obj("point")], obj("sphere:1"));
        let at = |i| FilterSpec::principal(vec![i]).unwrap();
        assert_eq!(los_truncated(&x, &lv("const:0"), &at(1), &b).tag, Tag::Yes);
        assert_eq!(los_truncated(&x, &lv("const:0"), &at(0), &b).tag, Tag::No);
    }

    #[test]
    fn equivalence_examples() {
        let b = Budgets::default();
        let f = FilterSpec::Frechet;
        let id = GermMap::levelwise(BaseMap::Identity(obj("sphere:2")));
        assert_eq!(equivalence_mod_filter(&id, &f, &b).tag, Tag::Yes);
        let s = GermMap::spheres_to_point(0, &b).unwrap();
        assert_eq!(equivalence_mod_filter(&s, &f, &b).tag, Tag::No);
        let evens = GermMap::periodic(
            0,
            vec![],
            vec![
                BaseMap::Identity(obj("point")),
                BaseMap::ToPoint(obj("sphere:1")),
            ],
        )
        .unwrap();
        assert_eq!(equivalence_mod_filter(&evens, &f, &b).tag, Tag::No);
        assert_eq!(
            equivalence_mod_filter(&evens, &FilterSpec::principal(vec![0, 4]).unwrap(), &b).tag,
            Tag::Yes
        );
    }

    #[test]
    fn witness_examples() {
        let b = Budgets::default();
        let f = FilterSpec::Frechet;
        let s = GermMap::spheres_to_point(0, &b).unwrap();
        let (level, v) = hypercomplete_witness(&s, &f, &b).unwrap();
        assert!(eq_mod(&level, &lv("affine:1,0")));
        assert_eq!(v.tag, Tag::No);
        let id = GermMap::levelwise(BaseMap::Identity(obj("sphere:2")));
        assert_eq!(
            hypercomplete_witness(&id, &f, &b).unwrap_err(),
            Error::AlreadyEquivalence
        );
        let circle = BaseMap::ToPoint(obj("sphere:1"));
        let mut prefix = vec![circle; 3];
        prefix.push(BaseMap::Identity(obj("point")));
        let g = GermMap::periodic(0, prefix, vec![circle]).unwrap();
        let at3 = FilterSpec::principal(vec![3]).unwrap();
        assert_eq!(
            hypercomplete_witness(&g, &at3, &b).unwrap_err(),
            Error::AlreadyEquivalence
        );
        let (level, v) = hypercomplete_witness(&g, &f, &b).unwrap();
        assert_eq!(level, lv("periodic:1,1,1,-2/1"));
        assert_eq!(v.tag, Tag::No);
    }

    fn eq_mod(a: &NonStandardLevel, b: &NonStandardLevel) -> bool {
        crate::filter::eq_mod_filter(a, b, &FilterSpec::Frechet).unwrap()
    }
}

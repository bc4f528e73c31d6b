use crate::certify::{conn_object, truncated_object};
use crate::error::{Error, Result};
use crate::groupoid::{conn_level, trunc_level, GroupoidFunctor, GroupoidSpec};
use crate::level::TruncLevel;
use crate::simplicial::CatalogSpec;
use crate::verdict::{Budgets, Tag, Verdict};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A levelwise object: a catalog simplicial set or a named groupoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseObject {
    Simplicial(CatalogSpec),
    Groupoid(GroupoidSpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    Truncated,
    Connected,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Truncated => "truncated",
            Predicate::Connected => "connected",
        }
    }
}

impl BaseObject {
    pub fn verdict(&self, pred: Predicate, n: i64, b: &Budgets) -> Verdict {
        let level = TruncLevel::new(n).expect("levels are at least -2");
        match self {
            BaseObject::Simplicial(spec) => {
                let x = spec.build();
                match pred {
                    Predicate::Truncated => truncated_object(&x, level, b),
                    Predicate::Connected => conn_object(&x, level, b),
                }
            }
            BaseObject::Groupoid(spec) => {
                let u = GroupoidFunctor::to_point(&spec.build());
                let (holds, what) = match pred {
                    Predicate::Truncated => {
                        let t = trunc_level(&u).expect("small groupoid");
                        (t <= n, format!("truncation level {t}"))
                    }
                    Predicate::Connected => {
                        let c = conn_level(&u).expect("small groupoid");
                        (c.at_least(n), format!("connectivity {c}"))
                    }
                };
                if holds {
                    Verdict::yes(*b, "GPD-EXACT", what)
                } else {
                    Verdict::no(*b, "GPD-EXACT", what)
                }
            }
        }
    }

    /// Verdicts for this object do not change once the level reaches this value.
    pub fn stable_level(&self) -> i64 {
        match self {
            BaseObject::Simplicial(spec) => spec.build().dim().max(1) as i64 + 2,
            BaseObject::Groupoid(_) => 1,
        }
    }
}

impl fmt::Display for BaseObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseObject::Simplicial(s) => write!(f, "{s}"),
            BaseObject::Groupoid(g) => write!(f, "gpd:{g}"),
        }
    }
}

/// Catalog strings; groupoids carry a `gpd:` prefix, as in `gpd:bz:2`.
impl FromStr for BaseObject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().strip_prefix("gpd:") {
            Some(g) => Ok(BaseObject::Groupoid(g.parse()?)),
            None => Ok(BaseObject::Simplicial(s.parse()?)),
        }
    }
}

/// An atomic condition on the index `i` and level `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cond {
    IndexEq(u64),
    IndexAtLeast(u64),
    /// `ci * i + cn * n + k >= 0`.
    Linear {
        ci: i64,
        cn: i64,
        k: i64,
    },
}

impl Cond {
    fn holds(self, i: u64, n: i64) -> bool {
        match self {
            Cond::IndexEq(c) => i == c,
            Cond::IndexAtLeast(c) => i >= c,
            Cond::Linear { ci, cn, k } => {
                ci as i128 * i as i128 + cn as i128 * n as i128 + k as i128 >= 0
            }
        }
    }
}

/// Verdict tags as a function of index and level: the first rule whose conditions
/// all hold decides, and no matching rule means `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub rules: Vec<(Vec<Cond>, Tag)>,
}

impl Schema {
    pub fn tag(&self, i: u64, n: i64) -> Tag {
        self.rules
            .iter()
            .find(|(cs, _)| cs.iter().all(|c| c.holds(i, n)))
            .map_or(Tag::Unknown, |r| r.1)
    }

    /// An index past which `tag(i, slope * i + offset)` depends only on the sign
    /// pattern that has already settled.
    pub fn settles_after(&self, slope: i64, offset: i64) -> u64 {
        let mut bound = 0u64;
        for (cs, _) in &self.rules {
            for c in cs {
                match *c {
                    Cond::IndexEq(k) | Cond::IndexAtLeast(k) => bound = bound.max(k + 1),
                    Cond::Linear { ci, cn, k } => {
                        let alpha = ci as i128 + cn as i128 * slope as i128;
                        let beta = cn as i128 * offset as i128 + k as i128;
                        if alpha != 0 {
                            bound = bound.max((beta.abs() / alpha.abs()) as u64 + 2);
                        }
                    }
                }
            }
        }
        bound
    }
}

fn when(cs: &[Cond], tag: Tag) -> (Vec<Cond>, Tag) {
    (cs.to_vec(), tag)
}

/// `n >= c`.
fn n_at_least(c: i64) -> Cond {
    Cond::Linear {
        ci: 0,
        cn: 1,
        k: -c,
    }
}

/// `n <= i + d`.
fn n_at_most_index_plus(d: i64) -> Cond {
    Cond::Linear {
        ci: 1,
        cn: -1,
        k: d,
    }
}

/// Indexed families with a closed-form verdict schema per predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `msphere:i`.
    Spheres,
    /// `wedge:i`.
    Wedges,
    /// `discrete:i`.
    Discrete,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Spheres => "spheres",
            Family::Wedges => "wedges",
            Family::Discrete => "discrete",
        }
    }

    pub fn member(self, i: u64) -> BaseObject {
        let i = i as usize;
        BaseObject::Simplicial(match self {
            Family::Spheres => CatalogSpec::MinimalSphere(i),
            Family::Wedges => CatalogSpec::WedgeCircles(i),
            Family::Discrete => CatalogSpec::Discrete(i),
        })
    }

    pub fn schema(self, pred: Predicate) -> Schema {
        use Cond::*;
        use Tag::*;
        let rules = match (self, pred) {
            (Family::Spheres, Predicate::Truncated) => vec![
                when(&[IndexEq(0), n_at_least(0)], Yes),
                when(&[IndexEq(0)], No),
                when(&[IndexEq(1), n_at_least(1)], Yes),
                when(&[IndexEq(1)], No),
                // pi_i of the i-sphere is Z, seen by Hurewicz.
                when(&[n_at_most_index_plus(-1)], No),
            ],
            (Family::Spheres, Predicate::Connected) => {
                vec![when(&[n_at_most_index_plus(-1)], Yes), when(&[], No)]
            }
            (Family::Wedges, Predicate::Truncated) => {
                vec![
                    when(&[IndexEq(0)], Yes),
                    when(&[n_at_least(1)], Yes),
                    when(&[], No),
                ]
            }
            (Family::Wedges, Predicate::Connected) => {
                vec![
                    when(&[IndexEq(0)], Yes),
                    when(
                        &[Linear {
                            ci: 0,
                            cn: -1,
                            k: 0,
                        }],
                        Yes,
                    ),
                    when(&[], No),
                ]
            }
            (Family::Discrete, Predicate::Truncated) => vec![
                when(&[IndexEq(0), n_at_least(-1)], Yes),
                when(&[IndexEq(1)], Yes),
                when(&[n_at_least(0)], Yes),
                when(&[], No),
            ],
            (Family::Discrete, Predicate::Connected) => vec![
                when(&[IndexEq(1)], Yes),
                when(
                    &[Linear {
                        ci: 0,
                        cn: -1,
                        k: -2,
                    }],
                    Yes,
                ),
                when(
                    &[
                        IndexAtLeast(2),
                        Linear {
                            ci: 0,
                            cn: -1,
                            k: -1,
                        },
                    ],
                    Yes,
                ),
                when(&[], No),
            ],
        };
        Schema { rules }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "spheres" => Ok(Family::Spheres),
            "wedges" => Ok(Family::Wedges),
            "discrete" => Ok(Family::Discrete),
            _ => Err(Error::InvalidInput(format!(
                "unknown family `{s}` (spheres, wedges, discrete)"
            ))),
        }
    }
}

/// A sequence of objects, up to agreement on a filter set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GermObject {
    EventuallyConstant {
        prefix: Vec<BaseObject>,
        tail: BaseObject,
    },
    /// A family whose schemas were checked against direct verdicts for
    /// `i <= horizon` and levels `-2..=horizon + 1`.
    Family { family: Family, horizon: usize },
}

impl GermObject {
    pub fn eventually_constant(prefix: Vec<BaseObject>, tail: BaseObject) -> Self {
        GermObject::EventuallyConstant { prefix, tail }
    }

    pub fn constant(x: BaseObject) -> Self {
        Self::eventually_constant(Vec::new(), x)
    }

    /// Validates both predicate schemas up to the budget's horizon.
    pub fn family(family: Family, b: &Budgets) -> Result<Self> {
        validate_family(family, b)?;
        Ok(GermObject::Family {
            family,
            horizon: b.horizon,
        })
    }

    pub fn at(&self, i: u64) -> BaseObject {
        match self {
            GermObject::EventuallyConstant { prefix, tail } => {
                *prefix.get(i as usize).unwrap_or(tail)
            }
            GermObject::Family { family, .. } => family.member(i),
        }
    }
}

pub fn validate_family(family: Family, b: &Budgets) -> Result<()> {
    let h = b.horizon as i64;
    for pred in [Predicate::Truncated, Predicate::Connected] {
        let schema = family.schema(pred);
        for i in 0..=b.horizon as u64 {
            let x = family.member(i);
            for n in -2..=h + 1 {
                let direct = x.verdict(pred, n, b).tag;
                let declared = schema.tag(i, n);
                if direct != declared {
                    return Err(Error::SchemaMismatch(format!(
                        "{} family, {}-{}: schema says {declared} but index {i} computes {direct}",
                        family.name(),
                        n,
                        pred.name()
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_schemas_validate() {
        let b = Budgets::default();
        for f in [Family::Spheres, Family::Wedges, Family::Discrete] {
            validate_family(f, &b).unwrap();
        }
    }

    #[test]
    fn wrong_schema_is_rejected() {
        let s = Family::Spheres.schema(Predicate::Connected);
        assert_eq!(s.tag(3, 2), Tag::Yes);
        assert_eq!(s.tag(3, 3), Tag::No);
        let flipped = Schema {
            rules: vec![(vec![], Tag::Yes)],
        };
        let x = Family::Spheres.member(2);
        assert_ne!(
            flipped.tag(2, 5),
            x.verdict(Predicate::Connected, 5, &Budgets::default()).tag
        );
    }

    #[test]
    fn verdicts_are_constant_above_the_stable_level() {
        let b = Budgets::default();
        for s in [
            "point",
            "sphere:2",
            "msphere:3",
            "boundary:3",
            "wedge:2",
            "cycle:4",
            "discrete:3",
            "gpd:bz:2",
            "gpd:codiscrete:3",
        ] {
            let x: BaseObject = s.parse().unwrap();
            let top = x.stable_level();
            for pred in [Predicate::Truncated, Predicate::Connected] {
                let at = x.verdict(pred, top, &b).tag;
                for n in top + 1..top + 5 {
                    assert_eq!(x.verdict(pred, n, &b).tag, at, "{s} {} at {n}", pred.name());
                }
            }
        }
    }

    #[test]
    fn parse_base_objects() {
        assert_eq!(
            "gpd:bz:2".parse::<BaseObject>().unwrap(),
            BaseObject::Groupoid(GroupoidSpec::Bz(2))
        );
        assert_eq!(
            "sphere:1".parse::<BaseObject>().unwrap(),
            BaseObject::Simplicial(CatalogSpec::Sphere(1))
        );
    }
}

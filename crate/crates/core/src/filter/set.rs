use crate::error::{Error, Result};
use crate::verdict::Tag;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use num_integer::Integer;

/// A filter on the naturals: cofinite sets, or supersets of a finite nonempty set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FilterSpec {
    Frechet,
    /// Sorted, deduplicated and nonempty.
    Principal(Vec<u64>),
}

impl FilterSpec {
    pub fn principal(mut set: Vec<u64>) -> Result<Self> {
        set.sort_unstable();
        set.dedup();
        if set.is_empty() {
            return Err(Error::InvalidInput(
                "a principal filter needs a nonempty generating set".into(),
            ));
        }
        Ok(FilterSpec::Principal(set))
    }
}

impl fmt::Display for FilterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterSpec::Frechet => f.write_str("frechet"),
            FilterSpec::Principal(s) => write!(f, "principal:{}", join(s)),
        }
    }
}

impl FromStr for FilterSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().split_once(':') {
            None if s.trim() == "frechet" => Ok(FilterSpec::Frechet),
            Some(("principal", list)) => FilterSpec::principal(parse_list(list)?),
            _ => Err(Error::InvalidInput(format!(
                "unknown filter `{s}` (expected frechet or principal:i,j,..)"
            ))),
        }
    }
}

pub(crate) fn join<T: fmt::Display>(xs: &[T]) -> String {
    let mut out = String::new();
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&format!("{x}"));
    }
    out
}

pub(crate) fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::InvalidInput(format!("`{t}` is not a valid entry")))
        })
        .collect()
}

/// An eventually periodic subset of the naturals: `prefix` covers `0..prefix.len()`,
/// then `cycle` repeats forever.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PeriodicSet {
    pub prefix: Vec<bool>,
    pub cycle: Vec<bool>,
}

impl PeriodicSet {
    pub fn new(prefix: Vec<bool>, cycle: Vec<bool>) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidInput(
                "a periodic set needs a nonempty cycle".into(),
            ));
        }
        Ok(PeriodicSet { prefix, cycle })
    }

    pub fn all() -> Self {
        PeriodicSet {
            prefix: Vec::new(),
            cycle: vec![true],
        }
    }

    pub fn none() -> Self {
        PeriodicSet {
            prefix: Vec::new(),
            cycle: vec![false],
        }
    }

    pub fn contains(&self, i: u64) -> bool {
        let p = self.prefix.len() as u64;
        if i < p {
            self.prefix[i as usize]
        } else {
            self.cycle[((i - p) % self.cycle.len() as u64) as usize]
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cycle.iter().all(|&b| !b)
    }

    pub fn is_cofinite(&self) -> bool {
        self.cycle.iter().all(|&b| b)
    }

    fn zip(&self, other: &PeriodicSet, op: impl Fn(bool, bool) -> bool) -> PeriodicSet {
        let p = self.prefix.len().max(other.prefix.len());
        let l = self.cycle.len().lcm(&other.cycle.len());
        let at = |i: usize| op(self.contains(i as u64), other.contains(i as u64));
        PeriodicSet {
            prefix: (0..p).map(at).collect(),
            cycle: (p..p + l).map(at).collect(),
        }
    }

    pub fn complement(&self) -> PeriodicSet {
        PeriodicSet {
            prefix: self.prefix.iter().map(|b| !b).collect(),
            cycle: self.cycle.iter().map(|b| !b).collect(),
        }
    }

    pub fn intersect(&self, other: &PeriodicSet) -> PeriodicSet {
        self.zip(other, |a, b| a && b)
    }

    pub fn union(&self, other: &PeriodicSet) -> PeriodicSet {
        self.zip(other, |a, b| a || b)
    }

    pub fn is_subset(&self, other: &PeriodicSet) -> bool {
        let d = self.zip(other, |a, b| !a || b);
        d.prefix.iter().chain(&d.cycle).all(|&b| b)
    }

    /// Members below `bound`.
    pub fn members_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&i| self.contains(i)).collect()
    }
}

/// A description of a set of indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SetDesc {
    Finite(Vec<u64>),
    /// Everything except the listed indices.
    Cofinite(Vec<u64>),
    /// `{ i : i >= N }`.
    EventuallyTrue(u64),
    /// `{ i : i < N }`.
    EventuallyFalse(u64),
    Periodic(PeriodicSet),
    /// No decidable description is available.
    Unknown,
}

impl SetDesc {
    pub fn to_periodic(&self) -> Option<PeriodicSet> {
        let listed = |xs: &[u64], member: bool| {
            let p = xs.iter().max().map_or(0, |m| m + 1) as usize;
            let mut prefix = vec![!member; p];
            xs.iter().for_each(|&x| prefix[x as usize] = member);
            PeriodicSet {
                prefix,
                cycle: vec![!member],
            }
        };
        Some(match self {
            SetDesc::Finite(xs) => listed(xs, true),
            SetDesc::Cofinite(xs) => listed(xs, false),
            SetDesc::EventuallyTrue(n) => PeriodicSet {
                prefix: vec![false; *n as usize],
                cycle: vec![true],
            },
            SetDesc::EventuallyFalse(n) => PeriodicSet {
                prefix: vec![true; *n as usize],
                cycle: vec![false],
            },
            SetDesc::Periodic(p) => p.clone(),
            SetDesc::Unknown => return None,
        })
    }

    pub fn contains(&self, i: u64) -> Option<bool> {
        self.to_periodic().map(|p| p.contains(i))
    }

    pub fn complement(&self) -> SetDesc {
        match self {
            SetDesc::Finite(xs) => SetDesc::Cofinite(xs.clone()),
            SetDesc::Cofinite(xs) => SetDesc::Finite(xs.clone()),
            SetDesc::EventuallyTrue(n) => SetDesc::EventuallyFalse(*n),
            SetDesc::EventuallyFalse(n) => SetDesc::EventuallyTrue(*n),
            SetDesc::Periodic(p) => SetDesc::Periodic(p.complement()),
            SetDesc::Unknown => SetDesc::Unknown,
        }
    }

    pub fn intersect(&self, other: &SetDesc) -> SetDesc {
        match (self.to_periodic(), other.to_periodic()) {
            (Some(a), Some(b)) => SetDesc::Periodic(a.intersect(&b)),
            _ => SetDesc::Unknown,
        }
    }
}

impl fmt::Display for SetDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits = |b: &[bool]| {
            b.iter()
                .map(|&x| if x { '1' } else { '0' })
                .collect::<String>()
        };
        match self {
            SetDesc::Finite(xs) => write!(f, "{{{}}}", join(xs)),
            SetDesc::Cofinite(xs) => write!(f, "N \\ {{{}}}", join(xs)),
            SetDesc::EventuallyTrue(n) => write!(f, "{{i >= {n}}}"),
            SetDesc::EventuallyFalse(n) => write!(f, "{{i < {n}}}"),
            SetDesc::Periodic(p) => write!(f, "{}({})*", bits(&p.prefix), bits(&p.cycle)),
            SetDesc::Unknown => f.write_str("unknown"),
        }
    }
}

/// Membership of a described set in a filter, decided from the description.
pub fn filter_contains(phi: &FilterSpec, s: &SetDesc) -> Tag {
    let Some(p) = s.to_periodic() else {
        return Tag::Unknown;
    };
    let yes = match phi {
        FilterSpec::Frechet => p.is_cofinite(),
        FilterSpec::Principal(s0) => s0.iter().all(|&i| p.contains(i)),
    };
    if yes {
        Tag::Yes
    } else {
        Tag::No
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn membership_examples() {
        let f = FilterSpec::Frechet;
        assert_eq!(
            filter_contains(&f, &SetDesc::Cofinite(vec![3, 7])),
            Tag::Yes
        );
        assert_eq!(
            filter_contains(&f, &SetDesc::Finite((0..100).collect())),
            Tag::No
        );
        assert_eq!(filter_contains(&f, &SetDesc::Unknown), Tag::Unknown);
        let p = FilterSpec::principal(vec![5]).unwrap();
        assert_eq!(filter_contains(&p, &SetDesc::Cofinite(vec![5])), Tag::No);
        assert_eq!(filter_contains(&p, &SetDesc::EventuallyTrue(5)), Tag::Yes);
        let evens = SetDesc::Periodic(PeriodicSet::new(Vec::new(), vec![true, false]).unwrap());
        assert_eq!(filter_contains(&f, &evens), Tag::No);
    }

    #[test]
    fn set_algebra() {
        let a = SetDesc::EventuallyTrue(3).to_periodic().unwrap();
        let b = PeriodicSet::new(vec![true], vec![false, true]).unwrap();
        let c = a.intersect(&b);
        assert_eq!(c.members_below(10), vec![4, 6, 8]);
        assert!(c.is_subset(&a) && c.is_subset(&b));
        assert_eq!(a.union(&b).members_below(6), vec![0, 2, 3, 4, 5]);
        assert_eq!(
            SetDesc::Finite(vec![1, 4]).complement().contains(4),
            Some(false)
        );
    }

    #[test]
    fn filter_strings() {
        assert_eq!(
            "principal:3,1,3".parse::<FilterSpec>().unwrap(),
            FilterSpec::Principal(vec![1, 3])
        );
        assert_eq!(
            "frechet".parse::<FilterSpec>().unwrap().to_string(),
            "frechet"
        );
        assert!("principal:".parse::<FilterSpec>().is_err());
        assert!("ultra".parse::<FilterSpec>().is_err());
    }
}

use super::group::Group;
use super::groupoid::FiniteGroupoid;
use crate::error::{Error, Result};
use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::str::FromStr;

/// Named groupoids: `empty`, `point`, `bz:n`, `discrete:k`, `codiscrete:k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupoidSpec {
    Empty,
    Point,
    /// One object with automorphism group cyclic of order `n >= 1`.
    Bz(usize),
    Discrete(usize),
    Codiscrete(usize),
}

impl GroupoidSpec {
    pub fn build(self) -> FiniteGroupoid {
        match self {
            GroupoidSpec::Empty => FiniteGroupoid::empty(),
            GroupoidSpec::Point => FiniteGroupoid::point(),
            GroupoidSpec::Bz(n) => FiniteGroupoid::bg(Group::cyclic(n)),
            GroupoidSpec::Discrete(k) => FiniteGroupoid::discrete(k),
            GroupoidSpec::Codiscrete(k) => FiniteGroupoid::codiscrete(k),
        }
    }
}

impl fmt::Display for GroupoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupoidSpec::Empty => f.write_str("empty"),
            GroupoidSpec::Point => f.write_str("point"),
            GroupoidSpec::Bz(n) => write!(f, "bz:{n}"),
            GroupoidSpec::Discrete(k) => write!(f, "discrete:{k}"),
            GroupoidSpec::Codiscrete(k) => write!(f, "codiscrete:{k}"),
        }
    }
}

impl FromStr for GroupoidSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n.to_string(), Some(a.to_string())),
            None => (s.clone(), None),
        };
        let count = || -> Result<usize> {
            let a = arg
                .as_deref()
                .ok_or_else(|| Error::InvalidInput(format!("{name} needs a count")))?;
            a.parse::<usize>()
                .map_err(|_| Error::InvalidInput(format!("bad count {a:?} for {name}")))
        };
        match name.as_str() {
            "empty" => Ok(GroupoidSpec::Empty),
            "point" => Ok(GroupoidSpec::Point),
            "bz" => match count()? {
                0 => Err(Error::InvalidInput(
                    "bz needs a group order of at least 1".into(),
                )),
                n => Ok(GroupoidSpec::Bz(n)),
            },
            "discrete" => Ok(GroupoidSpec::Discrete(count()?)),
            "codiscrete" => Ok(GroupoidSpec::Codiscrete(count()?)),
            _ => Err(Error::InvalidInput(format!("unknown groupoid {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_round_trip() {
        for s in ["empty", "point", "bz:2", "discrete:3", "codiscrete:2"] {
            assert_eq!(s.parse::<GroupoidSpec>().unwrap().to_string(), s);
        }
        assert!("bz:0".parse::<GroupoidSpec>().is_err());
        assert!("discrete:-1".parse::<GroupoidSpec>().is_err());
        assert_eq!(
            "bz:3"
                .parse::<GroupoidSpec>()
                .unwrap()
                .build()
                .num_morphisms(),
            3
        );
    }
}

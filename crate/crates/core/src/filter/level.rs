use super::set::{filter_contains, join, parse_list, FilterSpec, PeriodicSet, SetDesc};
use crate::error::{Error, Result};
use crate::verdict::Tag;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use num_integer::Integer;

/// `slope * i + offset` at absolute index `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    pub slope: i64,
    pub offset: i64,
}

impl Line {
    pub fn constant(v: i64) -> Self {
        Line {
            slope: 0,
            offset: v,
        }
    }

    pub fn at(self, i: u64) -> i128 {
        self.slope as i128 * i as i128 + self.offset as i128
    }
}

/// A sequence of truncation levels up to eventual agreement: explicit values on
/// `0..prefix.len()`, then the lines in `pieces` taken in rotation.
/// Every value is at least -2.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NonStandardLevel {
    prefix: Vec<i64>,
    pieces: Vec<Line>,
}

impl NonStandardLevel {
    pub fn from_parts(prefix: Vec<i64>, pieces: Vec<Line>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::InvalidInput(
                "a level sequence needs at least one tail piece".into(),
            ));
        }
        if let Some(v) = prefix.iter().find(|&&v| v < -2) {
            return Err(Error::InvalidInput(format!("level {v} is below -2")));
        }
        let p = prefix.len() as u64;
        for (r, l) in pieces.iter().enumerate() {
            if l.slope < 0 || l.at(p + r as u64) < -2 {
                return Err(Error::InvalidInput(format!(
                    "tail piece {}*i+{} drops below -2 from index {}",
                    l.slope,
                    l.offset,
                    p + r as u64
                )));
            }
        }
        Ok(Self::canonical(prefix, pieces))
    }

    /// Shortest period, then the shortest prefix: two presentations of one
    /// sequence become equal.
    fn canonical(mut prefix: Vec<i64>, mut pieces: Vec<Line>) -> Self {
        let n = pieces.len();
        if let Some(p) = (1..n).find(|&p| n % p == 0 && (p..n).all(|k| pieces[k] == pieces[k - p]))
        {
            pieces.truncate(p);
        }
        while let Some(&last) = prefix.last() {
            let before = pieces[pieces.len() - 1];
            if before.at(prefix.len() as u64 - 1) != last as i128 {
                break;
            }
            prefix.pop();
            pieces.rotate_right(1);
        }
        NonStandardLevel { prefix, pieces }
    }

    pub fn constant(n: i64) -> Result<Self> {
        Self::from_parts(Vec::new(), vec![Line::constant(n)])
    }

    pub fn eventually_constant(prefix: Vec<i64>, tail: i64) -> Result<Self> {
        Self::from_parts(prefix, vec![Line::constant(tail)])
    }

    pub fn periodic(prefix: Vec<i64>, cycle: Vec<i64>) -> Result<Self> {
        Self::from_parts(prefix, cycle.into_iter().map(Line::constant).collect())
    }

    /// `slope * i + offset` from `threshold` on; below it the values are clamped to -2.
    /// Without a threshold, the least index where the line is at least -2.
    pub fn affine(slope: i64, offset: i64, threshold: Option<u64>) -> Result<Self> {
        let line = Line { slope, offset };
        let threshold = match threshold {
            Some(t) => t,
            None if slope > 0 => (0..).find(|&i| line.at(i) >= -2).expect("increasing"),
            None => 0,
        };
        let prefix = (0..threshold).map(|i| line.at(i).max(-2) as i64).collect();
        Self::from_parts(prefix, vec![line])
    }

    /// The least level, constant -2.
    pub fn zero() -> Self {
        Self::constant(-2).expect("valid")
    }

    pub fn successor(&self) -> Self {
        NonStandardLevel {
            prefix: self.prefix.iter().map(|v| v + 1).collect(),
            pieces: self
                .pieces
                .iter()
                .map(|l| Line {
                    slope: l.slope,
                    offset: l.offset + 1,
                })
                .collect(),
        }
    }

    pub fn prefix(&self) -> &[i64] {
        &self.prefix
    }

    pub fn pieces(&self) -> &[Line] {
        &self.pieces
    }

    /// Index where the periodic tail starts.
    pub fn start(&self) -> u64 {
        self.prefix.len() as u64
    }

    pub fn period(&self) -> u64 {
        self.pieces.len() as u64
    }

    /// The line in force at index `i >= start()`.
    pub fn piece_at(&self, i: u64) -> Line {
        self.pieces[((i - self.start()) % self.period()) as usize]
    }

    pub fn value(&self, i: u64) -> i64 {
        if i < self.start() {
            self.prefix[i as usize]
        } else {
            self.piece_at(i).at(i).min(i64::MAX as i128) as i64
        }
    }

    /// The tail value when the sequence is eventually constant.
    pub fn standard_value(&self) -> Option<i64> {
        let first = self.pieces[0];
        (self
            .pieces
            .iter()
            .all(|l| l.slope == 0 && l.offset == first.offset))
        .then_some(first.offset)
    }

    pub fn is_standard(&self) -> bool {
        self.standard_value().is_some()
    }

    /// `{ i : pred(self_i, other_i) }` for a predicate of the sign of the difference.
    pub fn compare_set(
        &self,
        other: &NonStandardLevel,
        pred: impl Fn(i128, i128) -> bool,
    ) -> PeriodicSet {
        let start = self.start().max(other.start());
        let period = self.period().lcm(&other.period());
        // Past `bound` every difference of lines has constant sign within its residue class.
        let mut bound = start;
        for r in 0..period {
            let i = start + r;
            let (a, b) = (self.piece_at(i), other.piece_at(i));
            let alpha = (a.slope - b.slope) as i128;
            let beta = (a.offset - b.offset) as i128;
            if alpha != 0 {
                bound = bound.max((beta.abs() / alpha.abs()) as u64 + 2);
            }
        }
        let t = start + (bound - start).div_ceil(period) * period;
        let at = |i: u64| pred(self.value(i) as i128, other.value(i) as i128);
        PeriodicSet {
            prefix: (0..t).map(at).collect(),
            cycle: (t..t + period).map(at).collect(),
        }
    }

    pub fn agreement_set(&self, other: &NonStandardLevel) -> PeriodicSet {
        self.compare_set(other, |a, b| a == b)
    }
}

fn decide(phi: &FilterSpec, s: PeriodicSet) -> Result<bool> {
    match filter_contains(phi, &SetDesc::Periodic(s)) {
        Tag::Yes => Ok(true),
        Tag::No => Ok(false),
        Tag::Unknown => Err(Error::InvalidInput(
            "incomparable level descriptions".into(),
        )),
    }
}

/// Equality modulo the filter: the agreement set belongs to it.
pub fn eq_mod_filter(a: &NonStandardLevel, b: &NonStandardLevel, phi: &FilterSpec) -> Result<bool> {
    decide(phi, a.agreement_set(b))
}

pub fn le_mod_filter(a: &NonStandardLevel, b: &NonStandardLevel, phi: &FilterSpec) -> Result<bool> {
    decide(phi, a.compare_set(b, |x, y| x <= y))
}

pub fn lt_mod_filter(a: &NonStandardLevel, b: &NonStandardLevel, phi: &FilterSpec) -> Result<bool> {
    decide(phi, a.compare_set(b, |x, y| x < y))
}

impl fmt::Display for NonStandardLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.prefix;
        if let Some(v) = self.standard_value() {
            return if p.is_empty() {
                write!(f, "const:{v}")
            } else {
                write!(f, "prefix-const:{}/{v}", join(p))
            };
        }
        if self.pieces.iter().all(|l| l.slope == 0) {
            let cycle: Vec<i64> = self.pieces.iter().map(|l| l.offset).collect();
            return write!(f, "periodic:{}/{}", join(p), join(&cycle));
        }
        if let [l] = self.pieces[..] {
            if *self
                == Self::affine(l.slope, l.offset, Some(self.start())).map_err(|_| fmt::Error)?
            {
                return write!(f, "affine:{},{},{}", l.slope, l.offset, self.start());
            }
        }
        let lines: Vec<String> = self
            .pieces
            .iter()
            .map(|l| format!("{}:{}", l.slope, l.offset))
            .collect();
        write!(f, "seq:{}/{}", join(p), lines.join(";"))
    }
}

/// `const:N`, `prefix-const:a,b,../N`, `affine:s,o[,threshold]`,
/// `periodic:a,b,../c,d,..` and the general `seq:a,b,../s:o;s:o;..`.
impl FromStr for NonStandardLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("malformed level `{s}`"));
        let (kind, body) = s.trim().split_once(':').ok_or_else(bad)?;
        fn split(body: &str) -> Option<(&str, &str)> {
            body.split_once('/')
        }
        match kind {
            "const" => Self::constant(body.trim().parse().map_err(|_| bad())?),
            "prefix-const" => {
                let (p, t) = split(body).ok_or_else(bad)?;
                Self::eventually_constant(parse_list(p)?, t.trim().parse().map_err(|_| bad())?)
            }
            "affine" => match parse_list::<i64>(body)?[..] {
                [a, b] => Self::affine(a, b, None),
                [a, b, t] if t >= 0 => Self::affine(a, b, Some(t as u64)),
                _ => Err(bad()),
            },
            "periodic" => {
                let (p, c) = split(body).ok_or_else(bad)?;
                Self::periodic(parse_list(p)?, parse_list(c)?)
            }
            "seq" => {
                let (p, ls) = split(body).ok_or_else(bad)?;
                let pieces = ls
                    .split(';')
                    .map(|l| match parse_list::<i64>(&l.replace(':', ","))?[..] {
                        [slope, offset] => Ok(Line { slope, offset }),
                        _ => Err(bad()),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Self::from_parts(parse_list(p)?, pieces)
            }
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn lv(s: &str) -> NonStandardLevel {
        s.parse().unwrap()
    }

    #[test]
    fn equality_examples() {
        let f = FilterSpec::Frechet;
        assert!(
            eq_mod_filter(&lv("prefix-const:1,2,3/4"), &lv("prefix-const:0,9,7/4"), &f).unwrap()
        );
        assert!(!eq_mod_filter(&lv("affine:1,0"), &lv("affine:1,1"), &f).unwrap());
        assert!(!lv("affine:1,0").is_standard());
        assert!(lv("const:5").is_standard());
        let p = FilterSpec::principal(vec![2]).unwrap();
        assert!(eq_mod_filter(&lv("affine:1,0"), &lv("const:2"), &p).unwrap());
    }

    #[test]
    fn affine_clamps_below_threshold() {
        let a = lv("affine:1,-5");
        assert_eq!(
            (0..6).map(|i| a.value(i)).collect::<Vec<_>>(),
            vec![-2, -2, -2, -2, -1, 0]
        );
        assert!("affine:1,-5,0".parse::<NonStandardLevel>().is_err());
        assert!("affine:-1,3".parse::<NonStandardLevel>().is_err());
        assert!("const:-3".parse::<NonStandardLevel>().is_err());
    }

    #[test]
    fn strings_round_trip() {
        for s in [
            "const:0",
            "prefix-const:1,2,3/4",
            "affine:1,-5,3",
            "periodic:0/1,2",
            "seq:/0:-2;1:0",
        ] {
            assert_eq!(lv(s).to_string(), s);
        }
        assert_eq!(lv("affine:2,3").to_string(), "affine:2,3,0");
    }

    #[test]
    fn presentations_are_canonical() {
        assert_eq!(lv("periodic:4,4/4,4"), lv("const:4"));
        assert_eq!(lv("periodic:1,2,1/2,1,2,1"), lv("periodic:/1,2"));
        assert_eq!(lv("affine:1,0,5"), lv("affine:1,0,0"));
        assert_eq!(lv("seq:0,1,2/1:0;1:0"), lv("affine:1,0"));
        assert_eq!(lv("prefix-const:3,1/1"), lv("prefix-const:3/1"));
        assert_ne!(lv("periodic:/1,2"), lv("periodic:/2,1"));
    }

    #[test]
    fn non_standard_exceeds_every_standard_level() {
        let f = FilterSpec::Frechet;
        for n in -2..40 {
            let c = NonStandardLevel::constant(n).unwrap();
            assert!(lt_mod_filter(&c, &lv("affine:1,0"), &f).unwrap());
            assert!(!le_mod_filter(&lv("affine:1,0"), &c, &f).unwrap());
        }
    }
}

use crate::error::{Error, Result};
use alloc::format;
use core::fmt;

/// An integer truncation level, `-2` being the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruncLevel(i64);

impl TruncLevel {
    pub const MIN: TruncLevel = TruncLevel(-2);

    pub fn new(value: i64) -> Result<Self> {
        if value < -2 {
            return Err(Error::InvalidInput(format!(
                "truncation level {value} is below -2"
            )));
        }
        Ok(TruncLevel(value))
    }

    pub fn value(self) -> i64 {
        self.0
    }

    pub fn succ(self) -> Self {
        TruncLevel(self.0 + 1)
    }

    /// The predecessor, saturating at `-2`.
    pub fn pred(self) -> Self {
        TruncLevel((self.0 - 1).max(-2))
    }
}

impl fmt::Display for TruncLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_below_minus_two() {
        assert!(TruncLevel::new(-3).is_err());
        assert_eq!(TruncLevel::new(-2).unwrap(), TruncLevel::MIN);
        assert_eq!(TruncLevel::MIN.pred(), TruncLevel::MIN);
        assert_eq!(TruncLevel::MIN.succ().value(), -1);
    }
}

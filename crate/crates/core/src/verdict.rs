use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Resource limits that shape a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Budgets {
    /// Rewrite steps allowed to Tietze simplification.
    pub tietze_steps: usize,
    /// Cap on the dimension of constructed simplicial sets.
    pub max_dim: usize,
    /// Validation horizon of family schemas.
    pub horizon: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            tietze_steps: 10_000,
            max_dim: crate::simplicial::DEFAULT_MAX_DIM,
            horizon: 12,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Yes,
    No,
    Unknown,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Yes => "Certified-Yes",
            Tag::No => "Certified-No",
            Tag::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One fact cited by a verdict: the rule that fired and what it looked at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub rule: &'static str,
    pub detail: String,
}

/// A three-valued certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub tag: Tag,
    pub evidence: Vec<Evidence>,
    /// Why no certificate was found; set exactly when the tag is `Unknown`.
    pub reason: Option<String>,
    pub budgets: Budgets,
}

impl Verdict {
    pub fn yes(budgets: Budgets, rule: &'static str, detail: impl Into<String>) -> Self {
        Verdict {
            tag: Tag::Yes,
            evidence: alloc::vec![Evidence {
                rule,
                detail: detail.into()
            }],
            reason: None,
            budgets,
        }
    }

    pub fn no(budgets: Budgets, rule: &'static str, detail: impl Into<String>) -> Self {
        Verdict {
            tag: Tag::No,
            evidence: alloc::vec![Evidence {
                rule,
                detail: detail.into()
            }],
            reason: None,
            budgets,
        }
    }

    pub fn unknown(budgets: Budgets, reason: impl Into<String>) -> Self {
        Verdict {
            tag: Tag::Unknown,
            evidence: Vec::new(),
            reason: Some(reason.into()),
            budgets,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.tag == Tag::Yes
    }

    pub fn is_no(&self) -> bool {
        self.tag == Tag::No
    }

    /// Appends supporting evidence, keeping the tag.
    pub fn with(mut self, rule: &'static str, detail: impl Into<String>) -> Self {
        self.evidence.push(Evidence {
            rule,
            detail: detail.into(),
        });
        self
    }

    /// Prepends the evidence of `other`, used when a verdict is derived from another one.
    pub fn citing(mut self, other: &Verdict) -> Self {
        let mut ev = other.evidence.clone();
        ev.append(&mut self.evidence);
        self.evidence = ev;
        self
    }
}

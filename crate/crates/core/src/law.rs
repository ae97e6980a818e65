//! Outcomes of law checks.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::polycore::{CompareStats, Counterexample, Mor};

/// The outcome of checking one law, or a bundle of laws.
///
/// `pass` is true exactly when no counterexample was found. For a bundle, the
/// counterexample and `failed` come from the first failing part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failed: Option<String>,
    pub stats: CompareStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<LawReport>,
}

impl LawReport {
    /// Compares two composites pointwise.
    pub fn check(law: &str, lhs: &Mor, rhs: &Mor) -> Result<LawReport> {
        let (counterexample, stats) = lhs.compare(rhs)?;
        Ok(LawReport {
            law: law.to_string(),
            pass: counterexample.is_none(),
            failed: counterexample.as_ref().map(|_| law.to_string()),
            counterexample,
            stats,
            note: None,
            parts: Vec::new(),
        })
    }

    /// A composite against the identity on its domain.
    pub fn check_identity(law: &str, m: &Mor) -> Result<LawReport> {
        LawReport::check(law, m, &Mor::id(m.dom()))
    }

    /// A law decided by some other means than a map comparison.
    pub fn verdict(law: &str, pass: bool, note: Option<String>) -> LawReport {
        LawReport {
            law: law.to_string(),
            pass,
            counterexample: None,
            failed: (!pass).then(|| law.to_string()),
            stats: CompareStats::default(),
            note,
            parts: Vec::new(),
        }
    }

    pub fn all(law: &str, parts: Vec<LawReport>) -> LawReport {
        let mut stats = CompareStats::default();
        for p in &parts {
            stats += p.stats;
        }
        let first_bad = parts.iter().find(|p| !p.pass);
        LawReport {
            law: law.to_string(),
            pass: first_bad.is_none(),
            counterexample: first_bad.and_then(|p| p.counterexample.clone()),
            failed: first_bad.map(|p| p.failed.clone().unwrap_or_else(|| p.law.clone())),
            stats,
            note: None,
            parts,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// One line: `PASS law` or `FAIL law at ...`.
    pub fn summary(&self) -> String {
        if self.pass {
            return format!("PASS {}", self.law);
        }
        let mut s = format!("FAIL {}", self.law);
        if let Some(f) = &self.failed {
            if f != &self.law {
                s.push_str(&format!(" [{f}]"));
            }
        }
        if let Some(c) = &self.counterexample {
            s.push_str(&format!(" at position {}", c.position_path));
            if let Some(d) = &c.direction_path {
                s.push_str(&format!(", direction {d}"));
            }
            s.push_str(&format!(": {} vs {}", c.lhs, c.rhs));
        }
        s
    }
}

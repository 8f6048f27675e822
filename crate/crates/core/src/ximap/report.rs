//! Verification reports: one row per checked identity.

use std::fmt;

use serde_json::{json, Value};

use crate::exactpoly::LaurentPoly;
use crate::rootdata::{ParabolicSubset, RootSystem};
use crate::schubert::SchubertCombination;

/// One side of a checked identity.
#[derive(Clone, Debug, PartialEq)]
pub enum Side {
    Schubert(SchubertCombination),
    Character(LaurentPoly),
    Text(String),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Schubert(c) => f.write_str(&c.render()),
            Side::Character(p) => write!(f, "{p}"),
            Side::Text(s) => f.write_str(s),
        }
    }
}

impl Side {
    fn to_json(&self) -> Value {
        match self {
            Side::Schubert(c) => c.to_json(),
            other => Value::String(other.to_string()),
        }
    }

    /// `self - other` when both sides are of the same algebraic kind.
    fn diff(&self, other: &Side) -> Option<String> {
        match (self, other) {
            (Side::Schubert(a), Side::Schubert(b)) => a.try_sub(b).ok().map(|d| d.render()),
            (Side::Character(a), Side::Character(b)) if a.nvars() == b.nvars() => {
                Some((a - b).to_string())
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Claim {
    pub claim: String,
    pub group: String,
    pub parabolic: String,
    pub passed: bool,
    pub lhs: Side,
    pub rhs: Side,
    pub diff: Option<String>,
    pub note: Option<String>,
}

impl Claim {
    /// Compares the two sides exactly.
    pub fn compare(
        claim: impl Into<String>,
        rs: &RootSystem,
        parabolic: &ParabolicSubset,
        lhs: Side,
        rhs: Side,
    ) -> Self {
        let passed = lhs == rhs;
        let diff = if passed {
            None
        } else {
            Some(lhs.diff(&rhs).unwrap_or_else(|| "sides differ".to_string()))
        };
        Claim {
            claim: claim.into(),
            group: rs.to_string(),
            parabolic: parabolic.to_string(),
            passed,
            lhs,
            rhs,
            diff,
            note: None,
        }
    }

    /// A claim whose evaluation raised an error.
    pub fn failed(
        claim: impl Into<String>,
        rs: &RootSystem,
        parabolic: &ParabolicSubset,
        error: impl fmt::Display,
    ) -> Self {
        Claim {
            claim: claim.into(),
            group: rs.to_string(),
            parabolic: parabolic.to_string(),
            passed: false,
            lhs: Side::Text("error".into()),
            rhs: Side::Text(String::new()),
            diff: Some(error.to_string()),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "claim": self.claim,
            "group": self.group,
            "parabolic": self.parabolic,
            "status": if self.passed { "pass" } else { "fail" },
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "diff": self.diff,
        });
        if let Some(n) = &self.note {
            v["note"] = Value::String(n.clone());
        }
        v
    }
}

/// An ordered list of claims; passes iff every claim does.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.claims.extend(other.claims);
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn len(&self) -> usize {
        self.claims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.claims.is_empty()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }

    pub fn notes(&self) -> impl Iterator<Item = (&str, &str)> {
        self.claims
            .iter()
            .filter_map(|c| c.note.as_deref().map(|n| (c.claim.as_str(), n)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.claims.iter().map(Claim::to_json).collect())
    }

    /// Aligned text table, one row per claim, followed by notes and diffs.
    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 6]> = self
            .claims
            .iter()
            .map(|c| {
                [
                    if c.passed { "pass" } else { "FAIL" }.to_string(),
                    c.claim.clone(),
                    c.group.clone(),
                    c.parabolic.clone(),
                    c.lhs.to_string(),
                    c.rhs.to_string(),
                ]
            })
            .collect();
        let header = ["status", "claim", "group", "parabolic", "lhs", "rhs"].map(String::from);
        let mut widths = header.clone().map(|h| h.chars().count());
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |r: &[String; 6]| {
            let cells: Vec<String> = r
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            cells.join("  ").trim_end().to_string()
        };
        let mut out = line(&header);
        out.push('\n');
        for r in &rows {
            out.push_str(&line(r));
            out.push('\n');
        }
        for c in &self.claims {
            if let Some(d) = &c.diff {
                out.push_str(&format!("diff [{}]: {d}\n", c.claim));
            }
            if let Some(n) = &c.note {
                out.push_str(&format!("note [{}]: {n}\n", c.claim));
            }
        }
        out
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_table())
    }
}

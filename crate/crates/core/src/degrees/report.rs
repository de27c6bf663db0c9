use std::fmt;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "verified")]
    Verified,
    #[serde(rename = "hypothesis-not-met")]
    HypothesisNotMet,
    /// A best-effort clause could not be settled; never a counterexample.
    #[serde(rename = "inconclusive")]
    Inconclusive,
    /// Hypotheses hold and a binding conclusion fails.
    #[serde(rename = "VIOLATION")]
    Violation,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::HypothesisNotMet => "hypothesis-not-met",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Violation => "VIOLATION",
        })
    }
}

/// One hypothesis or conclusion. `holds = None` means the clause was not
/// settled; `binding = false` marks clauses whose failure is reported as
/// inconclusive rather than as a violation.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub clause: String,
    pub holds: Option<bool>,
    pub binding: bool,
    pub data: Value,
}

impl Check {
    pub fn new(clause: impl Into<String>, holds: bool, data: Value) -> Check {
        Check { clause: clause.into(), holds: Some(holds), binding: true, data }
    }

    pub fn unsettled(clause: impl Into<String>, data: Value) -> Check {
        Check { clause: clause.into(), holds: None, binding: false, data }
    }

    pub fn binding(mut self, binding: bool) -> Check {
        self.binding = binding;
        self
    }

    fn mark(&self) -> &'static str {
        match self.holds {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "open",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub fixture: String,
    pub subject: String,
    pub status: Verdict,
    pub hypotheses: Vec<Check>,
    pub conclusions: Vec<Check>,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn new(theorem: impl Into<String>, subject: impl Into<String>) -> TheoremReport {
        TheoremReport {
            theorem: theorem.into(),
            fixture: String::new(),
            subject: subject.into(),
            status: Verdict::Verified,
            hypotheses: Vec::new(),
            conclusions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn for_fixture(mut self, name: impl Into<String>) -> TheoremReport {
        self.fixture = name.into();
        self
    }

    pub fn hypothesis(&mut self, check: Check) -> bool {
        let ok = check.holds == Some(true);
        self.hypotheses.push(check);
        ok
    }

    pub fn conclude(&mut self, check: Check) {
        self.conclusions.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|c| c.holds == Some(true))
    }

    /// Sets and returns the verdict from the recorded checks.
    pub fn finish(mut self) -> TheoremReport {
        self.status = if !self.hypotheses_hold() {
            Verdict::HypothesisNotMet
        } else if self.conclusions.iter().any(|c| c.binding && c.holds == Some(false)) {
            Verdict::Violation
        } else if self.conclusions.iter().any(|c| c.holds != Some(true)) {
            Verdict::Inconclusive
        } else {
            Verdict::Verified
        };
        self
    }

    pub fn conclusion(&self, clause: &str) -> Option<&Check> {
        self.conclusions.iter().find(|c| c.clause == clause)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theorem {}", self.theorem)?;
        if !self.fixture.is_empty() {
            write!(f, " on {}", self.fixture)?;
        }
        writeln!(f, " [{}]: {}", self.subject, self.status)?;
        for (kind, list) in [("hypothesis", &self.hypotheses), ("conclusion", &self.conclusions)] {
            for c in list {
                write!(f, "  {kind} {} {}", c.mark(), c.clause)?;
                if !c.data.is_null() {
                    write!(f, " {}", c.data)?;
                }
                writeln!(f)?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

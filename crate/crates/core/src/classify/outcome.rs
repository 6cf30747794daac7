use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Result of evaluating a single clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    /// Not evaluated, usually because a budget was exceeded.
    Skipped,
    /// A bounded search ended without a witness.
    NotFound,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    /// `Some(b)` for decided verdicts.
    pub fn decided(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Skipped => "skipped",
            Verdict::NotFound => "not found",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Per-clause record of one theorem check.
///
/// `hypotheses` must all be true for the theorem to apply. `conditions` are
/// statements the theorem declares equivalent; they are compared for
/// agreement by the checker. `clauses` are the conclusions. The outcome
/// holds when it applies, no condition is false and no conclusion is false.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheckOutcome {
    pub theorem: String,
    pub applicable: bool,
    pub holds: bool,
    pub hypotheses: Vec<Clause>,
    pub conditions: Vec<Clause>,
    pub clauses: Vec<Clause>,
    pub values: BTreeMap<String, String>,
}

impl TheoremCheckOutcome {
    pub fn new(theorem: &str) -> Self {
        TheoremCheckOutcome {
            theorem: theorem.to_string(),
            applicable: true,
            holds: true,
            hypotheses: Vec::new(),
            conditions: Vec::new(),
            clauses: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    fn push(list: &mut Vec<Clause>, name: &str, verdict: Verdict, note: Option<String>) {
        list.push(Clause {
            name: name.to_string(),
            verdict,
            note,
        });
    }

    pub fn hypothesis(&mut self, name: &str, b: bool) -> bool {
        Self::push(&mut self.hypotheses, name, Verdict::from_bool(b), None);
        self.refresh();
        b
    }

    pub fn condition(&mut self, name: &str, v: Verdict) {
        Self::push(&mut self.conditions, name, v, None);
        self.refresh();
    }

    pub fn check(&mut self, name: &str, b: bool) -> bool {
        Self::push(&mut self.clauses, name, Verdict::from_bool(b), None);
        self.refresh();
        b
    }

    pub fn verdict(&mut self, name: &str, v: Verdict, note: Option<String>) {
        Self::push(&mut self.clauses, name, v, note);
        self.refresh();
    }

    pub fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.verdict(name, Verdict::Skipped, Some(reason.into()));
    }

    pub fn set(&mut self, key: &str, value: impl fmt::Display) {
        self.values.insert(key.to_string(), value.to_string());
    }

    fn refresh(&mut self) {
        self.applicable = self
            .hypotheses
            .iter()
            .all(|c| c.verdict != Verdict::False);
        self.holds = self.applicable
            && self
                .conditions
                .iter()
                .chain(&self.clauses)
                .all(|c| c.verdict != Verdict::False);
    }

    /// A conclusion failed although the hypotheses held.
    pub fn falsified(&self) -> bool {
        self.applicable && self.clauses.iter().any(|c| c.verdict == Verdict::False)
    }

    /// Names of skipped clauses and conditions.
    pub fn skipped(&self) -> Vec<String> {
        self.hypotheses
            .iter()
            .chain(&self.conditions)
            .chain(&self.clauses)
            .filter(|c| c.verdict == Verdict::Skipped)
            .map(|c| format!("{}: {}", self.theorem, c.name))
            .collect()
    }

    pub fn failed_clauses(&self) -> Vec<String> {
        self.clauses
            .iter()
            .filter(|c| c.verdict == Verdict::False)
            .map(|c| format!("{}: {}", self.theorem, c.name))
            .collect()
    }

    pub fn condition_verdicts(&self) -> Vec<Verdict> {
        self.conditions.iter().map(|c| c.verdict).collect()
    }
}

impl fmt::Display for TheoremCheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: applicable={} holds={}",
            self.theorem, self.applicable, self.holds
        )?;
        for (label, list) in [
            ("hypothesis", &self.hypotheses),
            ("condition", &self.conditions),
            ("clause", &self.clauses),
        ] {
            for c in list {
                write!(f, "  {label} {}: {}", c.name, c.verdict)?;
                if let Some(n) = &c.note {
                    write!(f, " ({n})")?;
                }
                writeln!(f)?;
            }
        }
        for (k, v) in &self.values {
            writeln!(f, "  {k} = {v}")?;
        }
        Ok(())
    }
}

/// Fails with a disagreement if the decided verdicts are not all equal.
pub(crate) fn require_agreement(check: &str, verdicts: &[(&str, Verdict)]) -> crate::Result<()> {
    let decided: Vec<(&str, bool)> = verdicts
        .iter()
        .filter_map(|(n, v)| v.decided().map(|b| (*n, b)))
        .collect();
    if decided.windows(2).any(|w| w[0].1 != w[1].1) {
        let detail = decided
            .iter()
            .map(|(n, b)| format!("{n}={b}"))
            .collect::<Vec<_>>()
            .join(", ");
        return Err(crate::Error::disagreement(check, detail));
    }
    Ok(())
}

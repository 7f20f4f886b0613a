//! Structured pass/fail reports.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn ok(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            detail: detail.into(),
            witness: None,
        }
    }

    /// A failing check always names a witness.
    pub fn failed(
        name: impl Into<String>,
        detail: impl Into<String>,
        witness: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            pass: false,
            detail: detail.into(),
            witness: Some(witness.into()),
        }
    }
}

/// Outcome of a verification run. `pass` is true iff every check passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub subject: String,
    pub pass: bool,
    pub degree: usize,
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn new(subject: impl Into<String>, degree: usize) -> Self {
        Verdict {
            subject: subject.into(),
            pass: true,
            degree,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn ok(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(Check::ok(name, detail));
    }

    pub fn fail(
        &mut self,
        name: impl Into<String>,
        detail: impl Into<String>,
        witness: impl Into<String>,
    ) {
        self.push(Check::failed(name, detail, witness));
    }

    /// Records `result` under `name`: `Ok(detail)` passes, `Err((detail, witness))` fails.
    pub fn record(&mut self, name: &str, result: Result<String, (String, String)>) {
        match result {
            Ok(detail) => self.ok(name, detail),
            Err((detail, witness)) => self.fail(name, detail, witness),
        }
    }

    /// Appends another verdict's checks with a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: Verdict) {
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.push(c);
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

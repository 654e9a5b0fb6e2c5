use std::fmt;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Short note on a pass, the failing witness on a failure.
    pub detail: Option<String>,
}

/// An ordered list of checks, rendered one per line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, detail: None });
    }

    pub fn pass_with(&mut self, name: impl Into<String>, note: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, detail: Some(note.into()) });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: false, detail: Some(witness.into()) });
    }

    /// Records a pass, or a failure carrying the first witness found.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match (&c.detail, c.passed) {
                (None, true) => writeln!(f, "{}: PASS", c.name)?,
                (Some(note), true) => writeln!(f, "{}: PASS ({note})", c.name)?,
                (Some(w), false) => writeln!(f, "{}: FAIL witness={w}", c.name)?,
                (None, false) => writeln!(f, "{}: FAIL", c.name)?,
            }
        }
        Ok(())
    }
}

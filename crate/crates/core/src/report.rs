//! Pass/fail records for verification runs, serializable as JSON.

use serde::Serialize;

/// A single verified statement: what was checked, at which parameters,
/// whether it held, and a witness locating the first counterexample when it
/// did not.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub statement: String,
    pub parameters: serde_json::Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn passing(statement: impl Into<String>, parameters: serde_json::Value) -> Self {
        Check {
            statement: statement.into(),
            parameters,
            pass: true,
            witness: None,
        }
    }

    pub fn failing(
        statement: impl Into<String>,
        parameters: serde_json::Value,
        witness: impl Into<String>,
    ) -> Self {
        Check {
            statement: statement.into(),
            parameters,
            pass: false,
            witness: Some(witness.into()),
        }
    }
}

impl std::fmt::Display for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.statement, self.parameters)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        Ok(())
    }
}

/// An ordered collection of checks from one verification run; serializes as
/// a JSON array of the individual records.
#[derive(Clone, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Record an outcome, attaching the witness only on failure.
    pub fn record(
        &mut self,
        statement: impl Into<String>,
        parameters: serde_json::Value,
        pass: bool,
        witness: impl FnOnce() -> String,
    ) {
        self.push(if pass {
            Check::passing(statement, parameters)
        } else {
            Check::failing(statement, parameters, witness())
        });
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// True when every check passed.
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for check in &self.checks {
            writeln!(f, "{check}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_accumulates_and_serializes() {
        let mut report = Report::new();
        report.record("unit determinant", json!({"k": 3}), true, || unreachable!());
        report.record("rows independent", json!({"n": 4}), false, || {
            "rank 4 of 5".to_string()
        });
        assert!(!report.pass());
        assert_eq!(report.len(), 2);
        assert_eq!(report.failures().count(), 1);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(
            json,
            r#"[{"statement":"unit determinant","parameters":{"k":3},"pass":true},{"statement":"rows independent","parameters":{"n":4},"pass":false,"witness":"rank 4 of 5"}]"#
        );
    }
}

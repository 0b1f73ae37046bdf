use std::fmt;

/// Outcome of an exhaustive or randomized property check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub checks: usize,
    pub failures: Vec<OracleFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleFailure {
    pub property: String,
    pub witness: String,
}

impl OracleReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one check; the witness is only rendered on failure.
    pub fn check(&mut self, property: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(OracleFailure {
                property: property.to_string(),
                witness: witness(),
            });
        }
    }

    pub fn merge(&mut self, other: OracleReport) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    pub fn failed(&self, property: &str) -> bool {
        self.failures.iter().any(|f| f.property == property)
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "checks={} failures={}", self.checks, self.failures.len())?;
        for fail in &self.failures {
            writeln!(f, "failure property={} witness={}", fail.property, fail.witness)?;
        }
        Ok(())
    }
}

use serde::Serialize;

/// One failed law together with the tuple that witnesses the failure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub law: String,
    pub witness: Vec<String>,
}

/// Result of exhaustive axiom checking; empty iff the value is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push<'a>(&mut self, law: &str, witness: impl IntoIterator<Item = &'a str>) {
        self.violations.push(Violation { law: law.to_string(), witness: witness.into_iter().map(str::to_string).collect() });
    }

    /// Appends the violations of `other`, prefixing each law with `scope`.
    pub fn absorb(&mut self, scope: &str, other: ValidationReport) {
        for v in other.violations {
            self.violations.push(Violation { law: format!("{scope}: {}", v.law), witness: v.witness });
        }
    }

    pub fn mentions(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law.contains(law))
    }
}

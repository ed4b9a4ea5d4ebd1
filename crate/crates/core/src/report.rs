//! Check results and suite reports.

use serde::Serialize;
use serde_json::{json, Map, Value};

/// One named check with an optional witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), pass: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: Value) -> Self {
        Check { name: name.into(), pass: false, witness: Some(witness) }
    }

    /// A passing check that still records a witness, e.g. an expected
    /// counterexample.
    pub fn pass_with(name: impl Into<String>, witness: Value) -> Self {
        Check { name: name.into(), pass: true, witness: Some(witness) }
    }

    pub fn from_result(name: impl Into<String>, r: Result<(), Value>) -> Self {
        match r {
            Ok(()) => Self::pass(name),
            Err(w) => Self::fail(name, w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Suite {
    pub name: String,
    pub checks: Vec<Check>,
    /// Extra computed data (dimensions, constants, representatives).
    pub details: Map<String, Value>,
}

impl Suite {
    pub fn new(name: impl Into<String>) -> Self {
        Suite { name: name.into(), ..Default::default() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, it: impl IntoIterator<Item = Check>) {
        self.checks.extend(it);
    }

    pub fn detail(&mut self, key: impl Into<String>, v: Value) {
        self.details.insert(key.into(), v);
    }

    pub fn cases(&self) -> usize {
        self.checks.len()
    }

    pub fn passes(&self) -> usize {
        self.checks.iter().filter(|c| c.pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures()
            .map(|c| json!({"check": c.name, "witness": c.witness.clone().unwrap_or(Value::Null)}))
            .collect();
        let mut v = json!({
            "name": self.name,
            "cases": self.cases(),
            "passes": self.passes(),
            "failures": failures,
        });
        let noted: Vec<Value> = self
            .checks
            .iter()
            .filter(|c| c.pass && c.witness.is_some())
            .map(|c| json!({"check": c.name, "witness": c.witness}))
            .collect();
        if !noted.is_empty() {
            v["witnesses"] = Value::Array(noted);
        }
        if !self.details.is_empty() {
            v["details"] = Value::Object(self.details.clone());
        }
        v
    }
}

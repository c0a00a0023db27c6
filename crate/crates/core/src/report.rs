//! Verification reports: named checks with expected and observed values,
//! serialized as stable JSON.

use serde::Serialize;
use serde_json::Value;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

impl Check {
    pub fn eq<T: Serialize + PartialEq>(name: impl Into<String>, expected: T, got: T) -> Self {
        let pass = expected == got;
        Self {
            name: name.into(),
            expected: to_value(&expected),
            got: to_value(&got),
            pass,
        }
    }

    pub fn holds(name: impl Into<String>, got: bool) -> Self {
        Self::eq(name, true, got)
    }

    /// A check whose pass condition is not plain equality.
    pub fn custom<E: Serialize, G: Serialize>(
        name: impl Into<String>,
        expected: E,
        got: G,
        pass: bool,
    ) -> Self {
        Self {
            name: name.into(),
            expected: to_value(&expected),
            got: to_value(&got),
            pass,
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub tool_version: &'static str,
    pub command: String,
    pub config: Value,
    pub params: Value,
    pub seed: u64,
    pub prime: u32,
    pub checks: Vec<Check>,
    pub output: Value,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn new<C: Serialize, P: Serialize>(
        command: &str,
        config: &C,
        params: &P,
        seed: u64,
        prime: u32,
    ) -> Self {
        Self {
            tool_version: TOOL_VERSION,
            command: command.to_string(),
            config: to_value(config),
            params: to_value(params),
            seed,
            prime,
            checks: Vec::new(),
            output: Value::Null,
            text: String::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn set_output<T: Serialize>(&mut self, output: &T) {
        self.output = to_value(output);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Free-form text followed by one line per check.
    pub fn render_text(&self) -> String {
        let mut s = self.text.clone();
        if !s.is_empty() && !s.ends_with('\n') {
            s.push('\n');
        }
        for c in &self.checks {
            s += &format!(
                "[{}] {}: expected {}, got {}\n",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.expected,
                c.got
            );
        }
        let failed = self.failures().count();
        s += &format!("{} checks, {} failed\n", self.checks.len(), failed);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_is_conjunction() {
        let mut r = Report::new("t", &(), &(), 1, 7);
        assert!(r.passed());
        r.push(Check::eq("a", 1, 1));
        r.push(Check::holds("b", false));
        assert!(!r.passed());
        assert_eq!(
            r.failures().map(|c| c.name.as_str()).collect::<Vec<_>>(),
            ["b"]
        );
        assert!(r
            .render_text()
            .contains("[FAIL] b: expected true, got false"));
    }

    #[test]
    fn json_is_stable() {
        let mut r = Report::new("t", &serde_json::json!({"z": 1, "a": 2}), &(3, 4), 1, 7);
        r.push(Check::eq("n", 2, 2));
        assert_eq!(r.to_json(), r.clone().to_json());
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["checks"][0]["pass"], Value::Bool(true));
        assert!(v.get("text").is_none());
    }
}

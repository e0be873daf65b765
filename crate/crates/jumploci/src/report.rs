//! Deterministic JSON reports shared by the CLI and the golden
//! scenarios.

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "jumploci-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub query: String,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
}

impl Verdict {
    pub fn new(query: impl Into<String>, result: impl Into<Value>) -> Self {
        Verdict {
            query: query.into(),
            result: result.into(),
            expected: None,
            certificate: None,
        }
    }

    pub fn expecting(mut self, expected: impl Into<Value>) -> Self {
        self.expected = Some(expected.into());
        self
    }

    pub fn with_certificate(mut self, cert: impl Into<Value>) -> Self {
        self.certificate = Some(cert.into());
        self
    }

    pub fn passes(&self) -> bool {
        match &self.expected {
            Some(e) => *e == self.result,
            None => true,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub inputs_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdicts: Vec<Verdict>,
    pub all_passed: bool,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: &str, seed: Option<u64>) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            inputs_digest: digest(inputs),
            seed,
            verdicts: Vec::new(),
            all_passed: true,
        }
    }

    pub fn push(&mut self, v: Verdict) {
        self.all_passed &= v.passes();
        self.verdicts.push(v);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// FNV-1a over the canonical input text; enough to tie a report to its
/// inputs.
pub fn digest(text: &str) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in text.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinism_and_pass_tracking() {
        let mut r = Report::new("test", "input", Some(7));
        r.push(Verdict::new("a", true).expecting(true));
        assert!(r.all_passed);
        r.push(Verdict::new("b", false).expecting(true));
        assert!(!r.all_passed);

        let again = {
            let mut r = Report::new("test", "input", Some(7));
            r.push(Verdict::new("a", true).expecting(true));
            r.push(Verdict::new("b", false).expecting(true));
            r.to_json()
        };
        assert_eq!(r.to_json(), again);
        assert_eq!(digest("x"), digest("x"));
        assert_ne!(digest("x"), digest("y"));
    }
}

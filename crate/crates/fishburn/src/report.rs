//! Structured verification reports, with a human text rendering and a
//! machine rendering (one JSON object per report, fields in fixed order,
//! big integers as decimal strings).

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Inconclusive,
}

/// One observed violation: the inputs that produced it and what was seen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub inputs: BTreeMap<String, i64>,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, i64>,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    pub checked_count: u64,
    /// Whether the claim is proven in print (a failure is an error) or open
    /// (a refutation is a reportable finding).
    pub conjecture: bool,
    /// Free-form annotations: quotients, surviving residues, scan depths.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(claim_id: &str) -> Self {
        VerificationReport {
            claim_id: claim_id.to_string(),
            parameters: BTreeMap::new(),
            status: Status::Verified,
            counterexamples: Vec::new(),
            checked_count: 0,
            conjecture: false,
            notes: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.parameters.insert(key.to_string(), value);
        self
    }

    pub fn conjecture(mut self) -> Self {
        self.conjecture = true;
        self
    }

    pub fn push_counterexample(&mut self, inputs: &[(&str, i64)], observed: String) {
        self.counterexamples.push(Counterexample {
            inputs: inputs
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            observed,
        });
        self.status = Status::Refuted;
    }

    pub fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    /// The invariant tying status to counterexamples: refuted iff nonempty.
    pub fn finalize(mut self) -> Self {
        if !self.counterexamples.is_empty() {
            self.status = Status::Refuted;
        } else if self.status == Status::Refuted {
            self.status = Status::Verified;
        }
        self
    }

    pub fn to_machine(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        let status = match self.status {
            Status::Verified => "VERIFIED",
            Status::Refuted => {
                if self.conjecture {
                    "REFUTED (finding: open conjecture fails)"
                } else {
                    "REFUTED"
                }
            }
            Status::Inconclusive => "INCONCLUSIVE",
        };
        out.push_str(&format!(
            "[{status}] {} ({params}) checked={}\n",
            self.claim_id, self.checked_count
        ));
        for n in &self.notes {
            out.push_str(&format!("    note: {n}\n"));
        }
        for c in &self.counterexamples {
            let inputs = c
                .inputs
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", ");
            out.push_str(&format!("    counterexample: {inputs} -> {}\n", c.observed));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refuted_iff_counterexamples() {
        let clean = VerificationReport::new("demo").finalize();
        assert_eq!(clean.status, Status::Verified);
        let mut bad = VerificationReport::new("demo");
        bad.push_counterexample(&[("n", 3)], "1".to_string());
        let bad = bad.finalize();
        assert_eq!(bad.status, Status::Refuted);
    }

    #[test]
    fn machine_format_is_stable() {
        let r = VerificationReport::new("demo")
            .with_param("p", 5)
            .with_param("n_max", 10)
            .finalize();
        let s = r.to_machine();
        assert!(s.starts_with("{\"claim_id\":\"demo\""));
        assert!(s.contains("\"parameters\":{\"n_max\":10,\"p\":5}"));
    }
}

//! Structured pass/fail records shared by every verification routine.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// A counterexample: the inputs and both sides of the failed equation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub inputs: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(lhs: impl fmt::Display, rhs: impl fmt::Display) -> Witness {
        Witness { inputs: BTreeMap::new(), lhs: lhs.to_string(), rhs: rhs.to_string() }
    }

    pub fn input(mut self, name: &str, value: impl fmt::Display) -> Witness {
        self.inputs.insert(name.to_string(), value.to_string());
        self
    }
}

/// Outcome of one named check. A failing report always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    /// Number of individual equalities that were evaluated.
    pub cases: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn sort_key(&self) -> (String, String) {
        (self.check.clone(), serde_json::to_string(&self.params).unwrap_or_default())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {}", self.check)?;
        if !self.params.is_empty() {
            let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", params.join(", "))?;
        }
        write!(f, " ({} cases)", self.cases)?;
        if let Some(w) = &self.witness {
            let inputs: Vec<String> = w.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "\n    witness: {}\n    lhs: {}\n    rhs: {}", inputs.join(", "), w.lhs, w.rhs)?;
        }
        Ok(())
    }
}

/// Accumulates cases for one check and keeps the first counterexample.
#[derive(Debug)]
pub struct Checker {
    check: String,
    params: BTreeMap<String, String>,
    cases: u64,
    witness: Option<Witness>,
}

impl Checker {
    pub fn new(check: &str) -> Checker {
        Checker { check: check.to_string(), params: BTreeMap::new(), cases: 0, witness: None }
    }

    pub fn param(mut self, name: &str, value: impl fmt::Display) -> Checker {
        self.params.insert(name.to_string(), value.to_string());
        self
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }

    /// Records one case. The witness closure only runs on the first failure.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> Witness) -> bool {
        self.cases += 1;
        if !ok && self.witness.is_none() {
            self.witness = Some(witness());
        }
        ok
    }

    /// Records a failure that is not tied to a single equation (e.g. a
    /// generation error).
    pub fn fail(&mut self, witness: Witness) {
        if self.witness.is_none() {
            self.witness = Some(witness);
        }
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            check: self.check,
            params: self.params,
            status: if self.witness.is_some() { Status::Fail } else { Status::Pass },
            cases: self.cases,
            witness: self.witness,
        }
    }
}

/// Canonical ordering for merged reports: check name, then parameters.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by_key(VerificationReport::sort_key);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_witness_wins() {
        let mut c = Checker::new("demo").param("n", 3);
        c.expect(true, || unreachable!());
        c.expect(false, || Witness::new(1, 2).input("x", "a"));
        c.expect(false, || Witness::new(3, 4));
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.cases, 3);
        assert_eq!(r.witness.unwrap().lhs, "1");
    }

    #[test]
    fn json_omits_missing_witness() {
        let r = Checker::new("ok").finish();
        let j = serde_json::to_string(&r).unwrap();
        assert_eq!(j, r#"{"check":"ok","params":{},"status":"pass","cases":0}"#);
    }
}

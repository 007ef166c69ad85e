//! Structured outcomes of verification checks.

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// The report without timing, for comparisons across runs.
    pub fn untimed(&self) -> VerificationReport {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialise")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(f, "{:<4} {:<28} {:<28} lhs={} rhs={}", status, self.check, params.join(","), self.lhs, self.rhs)
    }
}

/// Builder: `Check::new("xi").param("n", 3).run(|| ...)`.
pub struct Check {
    name: String,
    params: Map<String, Value>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check { name: name.to_string(), params: Map::new() }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    /// Runs `f`, which returns `(passed, lhs, rhs)`.
    pub fn run(self, f: impl FnOnce() -> Result<(bool, String, String)>) -> Result<VerificationReport> {
        let start = Instant::now();
        let (ok, lhs, rhs) = f()?;
        Ok(VerificationReport {
            check: self.name,
            params: self.params,
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
            elapsed_ms: start.elapsed().as_millis() as u64,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r = Check::new("xi").param("n", 8).run(|| Ok((true, "a".into(), "a".into()))).unwrap();
        let s = r.untimed().to_json();
        assert_eq!(s, r#"{"check":"xi","params":{"n":8},"status":"pass","lhs":"a","rhs":"a","elapsed_ms":0}"#);
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r.untimed());
    }
}

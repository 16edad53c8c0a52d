use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub check: String,
    pub status: Status,
    pub payload: Value,
    pub elapsed_ms: f64,
}

/// What a check body returns: whether the identity held, with its payload.
/// `Err` means the check could not be carried out.
pub type Outcome = Result<(bool, Value), String>;

impl Report {
    pub fn timed(check: &str, f: impl FnOnce() -> Outcome) -> Report {
        let start = Instant::now();
        let out = f();
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        let (status, payload) = match out {
            Ok((true, p)) => (Status::Pass, p),
            Ok((false, p)) => (Status::Fail, p),
            Err(msg) => (Status::Error, Value::String(msg)),
        };
        Report {
            check: check.to_string(),
            status,
            payload,
            elapsed_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_passed(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

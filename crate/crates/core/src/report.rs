//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Warn,
    ConjectureConsistent,
    ConjectureInconsistent,
}

/// One verification item.  `status` is PASS iff rel_err <= tol, except that
/// |rhs| < 1 switches the criterion to abs_err <= tol; conjecture-class
/// checks never map to PASS/FAIL.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub paper_ref: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub status: CheckStatus,
    pub runtime_ms: u64,
}

impl CheckReport {
    pub fn from_sides(
        check_id: &str,
        reference: &str,
        lhs: f64,
        rhs: f64,
        tol: f64,
        conjecture: bool,
        warn: bool,
        runtime_ms: u64,
    ) -> CheckReport {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if rhs != 0.0 {
            abs_err / rhs.abs()
        } else {
            abs_err
        };
        let ok = if rhs.abs() < 1.0 {
            abs_err <= tol
        } else {
            rel_err <= tol
        };
        let status = match (conjecture, ok, warn) {
            (true, true, _) => CheckStatus::ConjectureConsistent,
            (true, false, _) => CheckStatus::ConjectureInconsistent,
            (false, true, false) => CheckStatus::Pass,
            (false, true, true) => CheckStatus::Warn,
            (false, false, _) => CheckStatus::Fail,
        };
        CheckReport {
            check_id: check_id.to_owned(),
            paper_ref: reference.to_owned(),
            lhs,
            rhs,
            abs_err,
            rel_err,
            tol,
            status,
            runtime_ms,
        }
    }

    /// A failed-to-evaluate check (propagated error).
    pub fn errored(check_id: &str, reference: &str, msg: &str, runtime_ms: u64) -> CheckReport {
        CheckReport {
            check_id: check_id.to_owned(),
            paper_ref: format!("{reference} [error: {msg}]"),
            lhs: f64::NAN,
            rhs: f64::NAN,
            abs_err: f64::NAN,
            rel_err: f64::NAN,
            tol: 0.0,
            status: CheckStatus::Fail,
            runtime_ms,
        }
    }

    pub fn gating_failure(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        // |rhs| >= 1: relative criterion
        let r = CheckReport::from_sides("x", "r", 100.0, 100.0 + 1e-9, 1e-10, false, false, 0);
        assert_eq!(r.status, CheckStatus::Fail);
        let r = CheckReport::from_sides("x", "r", 100.0, 100.0 + 1e-9, 1e-10 * 1e2, false, false, 0);
        assert_eq!(r.status, CheckStatus::Pass);
        // |rhs| < 1: absolute criterion
        let r = CheckReport::from_sides("x", "r", 1e-9, 0.0, 1e-8, false, false, 0);
        assert_eq!(r.status, CheckStatus::Pass);
        // conjecture never maps to PASS/FAIL
        let r = CheckReport::from_sides("x", "r", 2.0, 2.0, 1e-10, true, false, 0);
        assert_eq!(r.status, CheckStatus::ConjectureConsistent);
        assert!(!r.gating_failure());
    }
}

//! Pass/skip/fail outcome shared by the sweeps and lemma checks.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckOutcome {
    Pass,
    Skipped { reason: String },
    Fail { detail: String },
}

impl CheckOutcome {
    pub fn skipped(reason: impl Into<String>) -> Self {
        CheckOutcome::Skipped {
            reason: reason.into(),
        }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        CheckOutcome::Fail {
            detail: detail.into(),
        }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, CheckOutcome::Fail { .. })
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self, CheckOutcome::Skipped { .. })
    }

    pub fn failure(&self) -> Option<&str> {
        match self {
            CheckOutcome::Fail { detail } => Some(detail),
            _ => None,
        }
    }
}

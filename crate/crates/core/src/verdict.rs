use serde::Serialize;

/// Outcome of checking a theorem on one instance.
///
/// `HypothesisNotMet` is not a failure: the statement simply says nothing
/// about the instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated { detail: String },
    HypothesisNotMet { reason: String },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn is_violation(&self) -> bool {
        matches!(self, Verdict::Violated { .. })
    }

    pub(crate) fn from_check(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Violated { detail: detail() }
        }
    }
}

use serde::Serialize;

/// Outcome of auditing one inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    /// The inequality is violated although its hypotheses hold.
    Fail,
    /// Hypotheses do not hold; nothing is asserted.
    NotApplicable,
}

impl Verdict {
    /// `holds` is the numeric outcome; `asserted` says whether the
    /// hypotheses of the statement are met.
    pub fn from_check(holds: bool, asserted: bool) -> Self {
        match (holds, asserted) {
            (true, _) => Verdict::Pass,
            (false, true) => Verdict::Fail,
            (false, false) => Verdict::NotApplicable,
        }
    }

    /// Combines verdicts: any failure fails, otherwise any pass passes.
    pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::NotApplicable;
        for v in verdicts {
            match v {
                Verdict::Fail => return Verdict::Fail,
                Verdict::Pass => out = Verdict::Pass,
                Verdict::NotApplicable => {}
            }
        }
        out
    }

    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }
}

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub id: String,
    pub citation: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub note: String,
}

impl VerdictRecord {
    /// A record that passes exactly when `expected == computed`.
    pub fn compare(
        id: impl Into<String>,
        citation: impl Into<String>,
        expected: String,
        computed: String,
    ) -> Self {
        let status = if expected == computed {
            Status::Pass
        } else {
            Status::Fail
        };
        VerdictRecord {
            id: id.into(),
            citation: citation.into(),
            expected,
            computed,
            status,
            note: String::new(),
        }
    }

    pub fn skipped(
        id: impl Into<String>,
        citation: impl Into<String>,
        expected: String,
        reason: impl Into<String>,
    ) -> Self {
        VerdictRecord {
            id: id.into(),
            citation: citation.into(),
            expected,
            computed: String::new(),
            status: Status::Skipped,
            note: reason.into(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        if self.note.is_empty() {
            self.note = note;
        } else if !note.is_empty() {
            self.note = format!("{}; {note}", self.note);
        }
        self
    }
}

/// Comma-separated rendering of a sequence.
pub fn seq<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

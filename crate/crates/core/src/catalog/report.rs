use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
        }
    }
}

/// Outcome of a verification suite: the claim checked, an overall status,
/// and one witness object per checked instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub claim: String,
    pub status: Status,
    pub witnesses: Vec<Value>,
    /// One-line human summary; not part of the JSON form.
    #[serde(skip)]
    pub summary: String,
}

impl Report {
    pub fn new(claim: impl Into<String>) -> Self {
        Report {
            claim: claim.into(),
            status: Status::Ok,
            witnesses: Vec::new(),
            summary: String::new(),
        }
    }

    /// Append a witness; a failing witness fails the whole report.
    pub fn record(&mut self, ok: bool, mut witness: Value) {
        if let Value::Object(map) = &mut witness {
            map.insert("ok".into(), Value::Bool(ok));
        }
        if !ok {
            self.status = Status::Fail;
        }
        self.witnesses.push(witness);
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    pub fn set_summary(&mut self, text: impl AsRef<str>) {
        self.summary = format!("{}: {}", text.as_ref(), self.status.as_str());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable form: claim header, then the summary line.
    pub fn to_text(&self) -> String {
        format!("claim: {}\n{}\n", self.claim, self.summary)
    }
}

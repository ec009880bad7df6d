use serde::{Deserialize, Serialize};
use serde_json::Value;

/// How a command came out. The exit code follows from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// Success, or a yes answer.
    Affirmative,
    /// A well-formed no: inadmissible, not isomorphic.
    Negative,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Affirmative => 0,
            Verdict::Negative => 1,
            Verdict::Error => 2,
        }
    }
}

/// The machine-readable outcome of one command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub args: Vec<String>,
    pub verdict: Verdict,
    /// One line for people; the binary prints it on standard error.
    pub summary: String,
    #[serde(default)]
    pub result: Value,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

impl Report {
    pub fn new(command: &str, args: &[String], verdict: Verdict, summary: impl Into<String>, result: Value) -> Self {
        Report { command: command.into(), args: args.to_vec(), verdict, summary: summary.into(), result, errors: vec![] }
    }

    pub fn error(command: &str, args: &[String], err: &dyn std::fmt::Display) -> Self {
        let msg = err.to_string();
        Report {
            command: command.into(),
            args: args.to_vec(),
            verdict: Verdict::Error,
            summary: format!("error: {msg}"),
            result: Value::Null,
            errors: vec![msg],
        }
    }

    pub fn exit_code(&self) -> u8 {
        self.verdict.exit_code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

//! Verdict records shared by every suite.

use std::fmt::Display;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub input: String,
    pub theorem: String,
    pub predicted: String,
    pub observed: String,
    pub pass: bool,
    /// "formula only", "note" and similar qualifiers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    pub fn new(input: impl Display, theorem: &str, predicted: impl Display, observed: impl Display, pass: bool) -> Self {
        Verdict {
            input: input.to_string(),
            theorem: theorem.into(),
            predicted: predicted.to_string(),
            observed: observed.to_string(),
            pass,
            note: None,
        }
    }

    pub fn compare<T: PartialEq + Display>(input: impl Display, theorem: &str, predicted: T, observed: T) -> Self {
        let pass = predicted == observed;
        Verdict::new(input, theorem, predicted, observed, pass)
    }

    /// A failed computation is a failed check, reported with its error.
    pub fn error(input: impl Display, theorem: &str, predicted: impl Display, err: impl Display) -> Self {
        Verdict::new(input, theorem, predicted, format!("error: {err}"), false)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Battery {
    pub name: String,
    pub verdicts: Vec<Verdict>,
}

impl Battery {
    pub fn new(name: &str) -> Self {
        Battery { name: name.into(), verdicts: Vec::new() }
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn extend(&mut self, other: Battery) {
        self.verdicts.extend(other.verdicts);
    }

    pub fn pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    /// Distinct inputs checked.
    pub fn input_count(&self) -> usize {
        let mut v: Vec<&str> = self.verdicts.iter().map(|v| v.input.as_str()).collect();
        v.sort_unstable();
        v.dedup();
        v.len()
    }
}

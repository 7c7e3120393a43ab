//! Reports in text and JSON form.

use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{Map, Value};

/// Exit status of a finished command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Fails,
    /// Two independent checks disagreed; treated as an error.
    Incident,
}

impl Outcome {
    pub fn of(holds: bool) -> Self {
        if holds {
            Self::Holds
        } else {
            Self::Fails
        }
    }

    pub fn code(self) -> u8 {
        match self {
            Self::Holds => 0,
            Self::Fails => 1,
            Self::Incident => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub outcome: Outcome,
    pub verdict: String,
    /// Each witness is an object with a `kind` field first.
    pub witnesses: Vec<Value>,
    pub slices: Map<String, Value>,
    pub caps: Map<String, Value>,
    pub details: Map<String, Value>,
    /// A long list printed one item per line, under the given JSON key.
    pub listing: Option<(String, Vec<Value>)>,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: String, holds: bool, verdict: impl Into<String>) -> Self {
        Self {
            command,
            outcome: Outcome::of(holds),
            verdict: verdict.into(),
            witnesses: Vec::new(),
            slices: Map::new(),
            caps: Map::new(),
            details: Map::new(),
            listing: None,
            elapsed: None,
        }
    }

    pub fn witness(&mut self, kind: &str, fields: impl IntoIterator<Item = (&'static str, Value)>) {
        let mut m = Map::new();
        m.insert("kind".into(), Value::from(kind));
        for (k, v) in fields {
            m.insert(k.into(), v);
        }
        self.witnesses.push(Value::Object(m));
    }

    pub fn slice(&mut self, param: &str, key: &str, value: Value) {
        let entry = self
            .slices
            .entry(param.to_string())
            .or_insert_with(|| Value::Object(Map::new()));
        entry
            .as_object_mut()
            .expect("slice entries are objects")
            .insert(key.to_string(), value);
    }

    pub fn cap(&mut self, name: &str, value: usize) {
        self.caps.insert(name.into(), Value::from(value));
    }

    pub fn detail(&mut self, name: &str, value: Value) {
        self.details.insert(name.into(), value);
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), Value::from(self.command.clone()));
        m.insert("verdict".into(), Value::from(self.verdict.clone()));
        m.insert("holds".into(), Value::from(self.outcome == Outcome::Holds));
        m.insert("witnesses".into(), Value::Array(self.witnesses.clone()));
        m.insert("slices".into(), Value::Object(self.slices.clone()));
        m.insert("caps".into(), Value::Object(self.caps.clone()));
        if !self.details.is_empty() {
            m.insert("details".into(), Value::Object(self.details.clone()));
        }
        if let Some((key, items)) = &self.listing {
            m.insert(key.clone(), Value::Array(items.clone()));
        }
        if let Some(d) = self.elapsed {
            m.insert("elapsed_ms".into(), Value::from(d.as_secs_f64() * 1e3));
        }
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "verdict: {}", self.verdict);
        for (param, v) in &self.slices {
            let _ = writeln!(out, "slice {param}: {}", fields(v));
        }
        for (k, v) in &self.details {
            let _ = writeln!(out, "{k}: {}", render(v));
        }
        if let Some((_, items)) = &self.listing {
            for (i, item) in items.iter().enumerate() {
                let _ = writeln!(out, "{i}: {}", render(item));
            }
        }
        for w in &self.witnesses {
            let kind = w.get("kind").and_then(Value::as_str).unwrap_or("witness");
            let rest: Map<String, Value> = w
                .as_object()
                .map(|m| {
                    m.iter()
                        .filter(|(k, _)| *k != "kind")
                        .map(|(k, v)| (k.clone(), v.clone()))
                        .collect()
                })
                .unwrap_or_default();
            let _ = writeln!(out, "witness {kind}: {}", fields(&Value::Object(rest)));
        }
        if !self.caps.is_empty() {
            let _ = writeln!(out, "caps: {}", fields(&Value::Object(self.caps.clone())));
        }
        if let Some(d) = self.elapsed {
            let _ = writeln!(out, "elapsed: {:.3} ms", d.as_secs_f64() * 1e3);
        }
        out
    }
}

fn fields(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k} = {}", render(v)))
            .collect::<Vec<_>>()
            .join("; "),
        other => render(other),
    }
}

/// Compact rendering: objects as `(k: v, ...)`, arrays as `{v, ...}`.
pub fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "{{{}}}",
            items.iter().map(render).collect::<Vec<_>>().join(", ")
        ),
        Value::Object(m) => format!(
            "({})",
            m.iter()
                .map(|(k, v)| format!("{k}: {}", render(v)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        Value::Bool(b) => if *b { "yes" } else { "no" }.to_string(),
        other => other.to_string(),
    }
}

//! Reports printed as aligned text or as flat `key=value` lines.
//!
//! In the key-value form lists are comma separated, absent values are
//! `none` and booleans are `true`/`false`. Keys are stable.

use std::fmt::Display;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Bool(bool),
    Text(String),
    List(Vec<String>),
    Absent,
}

impl Value {
    pub fn text(v: impl Display) -> Self {
        Value::Text(v.to_string())
    }

    pub fn list<T: Display>(items: impl IntoIterator<Item = T>) -> Self {
        Value::List(items.into_iter().map(|x| x.to_string()).collect())
    }

    pub fn opt<T: Display>(v: Option<T>) -> Self {
        v.map_or(Value::Absent, Value::text)
    }

    fn kv(&self) -> String {
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.replace('\n', "\\n"),
            Value::List(items) => items.join(","),
            Value::Absent => "none".into(),
        }
    }

    fn human(&self) -> String {
        match self {
            Value::Bool(true) => "yes".into(),
            Value::Bool(false) => "no".into(),
            Value::Text(s) => s.clone(),
            Value::List(items) => format!("[{}]", items.join(", ")),
            Value::Absent => "none".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    command: String,
    fields: Vec<(String, String, Value)>,
    notes: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ..Default::default()
        }
    }

    /// Adds a field with its stable key and a label for the text form.
    pub fn field(&mut self, key: &str, label: &str, value: Value) -> &mut Self {
        self.fields.push((key.into(), label.into(), value));
        self
    }

    /// A line shown in the text form only.
    pub fn note(&mut self, line: impl Into<String>) -> &mut Self {
        self.notes.push(line.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _, _)| k == key).map(|(_, _, v)| v)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Kv => {
                let mut out = format!("command={}\n", self.command);
                for (k, _, v) in &self.fields {
                    out.push_str(&format!("{k}={}\n", v.kv()));
                }
                out
            }
            Format::Text => {
                let width = self.fields.iter().map(|(_, l, _)| l.len()).max().unwrap_or(0);
                let mut out = format!("{}\n", self.command);
                for (_, label, v) in &self.fields {
                    let body = v.human();
                    let mut lines = body.lines();
                    out.push_str(&format!("  {label:<width$}  {}\n", lines.next().unwrap_or("")));
                    for more in lines {
                        out.push_str(&format!("  {:<width$}  {more}\n", ""));
                    }
                }
                for n in &self.notes {
                    out.push_str(&format!("{n}\n"));
                }
                out
            }
        }
    }
}

/// Parses the key-value form back into `(key, value)` pairs.
pub fn parse_kv(text: &str) -> Result<Vec<(String, String)>, String> {
    text.lines()
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split_once('=')
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .ok_or_else(|| format!("missing '=' in {l:?}"))
        })
        .collect()
}

//! Command results as ordered key/value pairs, rendered either as JSON or
//! as an aligned table from the same values.

use std::time::Duration;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Mismatch,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Pairs(pub Vec<(String, String)>);

impl Pairs {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.0.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl Serialize for Pairs {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Pairs,
    pub results: Pairs,
    pub elapsed_ms: u64,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report { command: command.to_string(), input: Pairs::default(), results: Pairs::default(), elapsed_ms: 0, status: Status::Ok }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Report {
        self.input.push(key, value);
        self
    }

    pub fn result(&mut self, key: &str, value: impl ToString) -> &mut Report {
        self.results.push(key, value);
        self
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.elapsed_ms = elapsed.as_millis() as u64;
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Every value of the JSON form, one row each: `command`, `input.*`,
    /// the results, `elapsed_ms` and `status`.
    pub fn rows(&self) -> Vec<(String, String)> {
        let mut rows = vec![("command".to_string(), self.command.clone())];
        rows.extend(self.input.0.iter().map(|(k, v)| (format!("input.{}", k), v.clone())));
        rows.extend(self.results.0.iter().cloned());
        rows.push(("elapsed_ms".into(), self.elapsed_ms.to_string()));
        rows.push(("status".into(), self.status.as_str().into()));
        rows
    }

    pub fn to_table(&self) -> String {
        let rows = self.rows();
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let mut lines = v.lines();
            let first = lines.next().unwrap_or("");
            out.push_str(&format!("{:<width$}  {}\n", k, first, width = width));
            for more in lines {
                out.push_str(&format!("{:<width$}  {}\n", "", more, width = width));
            }
        }
        out
    }
}

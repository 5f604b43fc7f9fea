use serde::Serialize;
use serde_json::{Map, Value};

use crate::args::Format;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub request: Map<String, Value>,
    pub payload: Map<String, Value>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, request: Map<String, Value>) -> Self {
        Report { schema_version: SCHEMA_VERSION, command, request, payload: Map::new(), warnings: Vec::new() }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string(self).expect("report serializes"),
            Format::Text => self.text_lines().join("\n"),
        }
    }

    /// Single-line rendering used by streaming sweeps.
    pub fn render_line(&self, format: Format) -> String {
        match format {
            Format::Json => self.render(format),
            Format::Text => self.text_lines().join(" "),
        }
    }

    fn text_lines(&self) -> Vec<String> {
        let mut out = Vec::new();
        flatten("", &Value::Object(self.payload.clone()), &mut out);
        out.extend(self.warnings.iter().map(|w| format!("warning={w}")));
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}={s}")),
        other => out.push(format!("{prefix}={other}")),
    }
}

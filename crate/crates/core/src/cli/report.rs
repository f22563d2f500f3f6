//! Reports are JSON objects; the text form is a rendering of the same object.

use serde_json::{Map, Value};

use crate::cli::schema::SCHEMA_VERSION;

pub const TERM_ORDER: &str = "degree, then exponents compared from x_n down to x_1";

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub field_order: u32,
    /// Degree through which series and generator claims were checked.
    pub verified_to: Option<usize>,
    pub body: Map<String, Value>,
}

impl Report {
    pub fn new(command: impl Into<String>, field_order: u32) -> Self {
        Report {
            command: command.into(),
            field_order,
            verified_to: None,
            body: Map::new(),
        }
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.body.insert(key.to_string(), v.into());
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.body.get(key)
    }

    pub fn to_json(&self) -> Value {
        let mut meta = Map::new();
        meta.insert("schema_version".into(), SCHEMA_VERSION.into());
        meta.insert("term_order".into(), TERM_ORDER.into());
        meta.insert("field_order".into(), self.field_order.into());
        if let Some(d) = self.verified_to {
            meta.insert("verified_to".into(), d.into());
        }
        meta.insert("indices".into(), "1-based".into());
        let mut out = Map::new();
        out.insert("command".into(), self.command.clone().into());
        out.insert("metadata".into(), Value::Object(meta));
        out.insert("report".into(), Value::Object(self.body.clone()));
        Value::Object(out)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("== {} ==\n", self.command);
        render_map(&self.body, 0, &mut s);
        s
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(items.iter().filter_map(scalar_text).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

fn render_map(m: &Map<String, Value>, indent: usize, s: &mut String) {
    let pad = "  ".repeat(indent);
    for (k, v) in m {
        let key = k.replace('_', " ");
        if let Some(t) = scalar_text(v) {
            s.push_str(&format!("{pad}{key}: {t}\n"));
            continue;
        }
        s.push_str(&format!("{pad}{key}:\n"));
        match v {
            Value::Object(inner) => render_map(inner, indent + 1, s),
            Value::Array(items) => {
                for (i, item) in items.iter().enumerate() {
                    match item {
                        Value::Object(inner) => {
                            s.push_str(&format!("{pad}  [{}]\n", i + 1));
                            render_map(inner, indent + 2, s);
                        }
                        other => {
                            let t = scalar_text(other).unwrap_or_else(|| other.to_string());
                            s.push_str(&format!("{pad}  - {t}\n"));
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_rendering() {
        let mut r = Report::new("hilbert", 4);
        r.set("series", json!([1, 0, 2]));
        r.set("recognized", json!("1/(1-t^2)^2"));
        r.set("parts", json!([{"indices": [1, 2], "kind": "circle"}]));
        assert_eq!(
            r.to_text(),
            "== hilbert ==\nseries: 1, 0, 2\nrecognized: 1/(1-t^2)^2\nparts:\n  [1]\n    indices: 1, 2\n    kind: circle\n"
        );
        assert_eq!(r.to_json()["metadata"]["field_order"], 4);
    }
}

use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::Format;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Canonical output: `command`, `inputs`, `result`, `version`. Keys are
/// emitted in sorted order at every level.
#[derive(Debug, Clone)]
pub struct Envelope {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
}

impl Envelope {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        Envelope {
            command: command.to_string(),
            inputs,
            result,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "version": VERSION,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json())
                    .expect("envelope values always serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = format!("# {} (lrfaces {VERSION})\n", self.command);
                if let Value::Object(inputs) = &self.inputs {
                    out.push_str(&format!("inputs: {}\n", inline(inputs)));
                }
                text_lines(&self.result, 0, &mut out);
                out
            }
        }
    }
}

/// Coefficients as JSON numbers, or decimal strings past `u64`.
pub fn coeff(c: &BigUint) -> Value {
    match u64::try_from(c) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(c.to_string()),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "none".into(),
        Value::String(s) if s.is_empty() => "()".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(map: &Map<String, Value>) -> String {
    map.iter()
        .map(|(k, v)| {
            if is_scalar(v) {
                format!("{k}={}", scalar(v))
            } else {
                format!("{k}={v}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn text_lines(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let Value::Object(map) = v else {
        out.push_str(&format!("{pad}{}\n", scalar(v)));
        return;
    };
    for (key, val) in map {
        match val {
            Value::Array(items) if items.iter().all(is_scalar) => {
                let joined: Vec<String> = items.iter().map(scalar).collect();
                out.push_str(&format!("{pad}{key}: [{}]\n", joined.join(" ")));
            }
            Value::Array(items) => {
                out.push_str(&format!("{pad}{key}:\n"));
                for item in items {
                    match item {
                        Value::Object(m) => out.push_str(&format!("{pad}  - {}\n", inline(m))),
                        Value::Array(row) => {
                            let cells: Vec<String> =
                                row.iter().map(|c| format!("{:>5}", scalar(c))).collect();
                            out.push_str(&format!("{pad}  {}\n", cells.join("")));
                        }
                        other => out.push_str(&format!("{pad}  - {}\n", scalar(other))),
                    }
                }
            }
            Value::Object(_) => {
                out.push_str(&format!("{pad}{key}:\n"));
                text_lines(val, depth + 1, out);
            }
            other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_keys_are_canonical() {
        let e = Envelope::new(
            "lr",
            json!({"nu": "1", "lambda": "1"}),
            json!({"coefficient": 1}),
        );
        let s = e.render(Format::Json);
        let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("command") < pos("inputs"));
        assert!(pos("inputs") < pos("result"));
        assert!(pos("result") < pos("version"));
        assert!(pos("lambda") < pos("nu"));
        assert_eq!(s, e.render(Format::Json));
    }

    #[test]
    fn big_coefficients_become_strings() {
        let big = BigUint::from(u64::MAX) + 1u32;
        assert_eq!(coeff(&big), Value::from("18446744073709551616"));
        assert_eq!(coeff(&BigUint::from(7u32)), Value::from(7));
    }

    #[test]
    fn text_rendering() {
        let e = Envelope::new(
            "horn",
            json!({"n": 2}),
            json!({"member": false, "violated": {"r": 1, "lhs": 1}, "rows": [[1, -1]]}),
        );
        let s = e.render(Format::Text);
        assert!(s.starts_with("# horn"));
        assert!(s.contains("inputs: n=2\n"));
        assert!(s.contains("member: false\n"));
        assert!(s.contains("violated:\n  lhs: 1\n  r: 1\n"));
    }
}

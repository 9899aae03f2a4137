//! Versioned output envelope. Rendering is deterministic: struct fields
//! serialize in declaration order, map keys sort, and element lists
//! keep the ordering the core library defines.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// Integers above this are serialized as decimal strings so that
/// consumers reading JSON numbers as doubles never lose precision.
const JS_SAFE: u128 = 1 << 53;

pub fn jnum(v: u128) -> Value {
    if v > JS_SAFE {
        Value::String(v.to_string())
    } else {
        Value::from(v as u64)
    }
}

pub fn jvec(vs: &[u64]) -> Value {
    Value::Array(vs.iter().map(|&v| jnum(v as u128)).collect())
}

#[derive(Serialize)]
pub struct Provenance {
    pub claim: String,
    pub source: &'static str,
}

#[derive(Serialize)]
pub struct Envelope {
    pub schema: u32,
    pub command: &'static str,
    pub params: BTreeMap<String, String>,
    pub result: Value,
    pub provenance: Vec<Provenance>,
}

impl Envelope {
    pub fn new(command: &'static str) -> Self {
        Envelope {
            schema: 1,
            command,
            params: BTreeMap::new(),
            result: Value::Null,
            provenance: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    /// Records where a result field comes from: a closed form, an
    /// exhaustive oracle, a committed reference example, or an external
    /// computation.
    pub fn claim(&mut self, claim: &str, source: &'static str) {
        self.provenance.push(Provenance {
            claim: claim.to_string(),
            source,
        });
    }

    pub fn render(&self, text: bool) -> String {
        if text {
            self.render_text()
        } else {
            let mut s = serde_json::to_string_pretty(self).expect("serializable");
            s.push('\n');
            s
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("schema: {}\ncommand: {}\n", self.schema, self.command));
        out.push_str("params:\n");
        for (k, v) in &self.params {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        out.push_str("result:\n");
        write_value(&mut out, &self.result, 1);
        out.push_str("provenance:\n");
        for p in &self.provenance {
            out.push_str(&format!("  {} <- {}\n", p.claim, p.source));
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                if let Some(s) = scalar(item) {
                    out.push_str(&format!("{pad}{k}: {s}\n"));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    write_value(out, item, depth + 1);
                }
            }
        }
        Value::Array(items) => {
            if let Some(flat) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                out.push_str(&format!("{pad}[{}]\n", flat.join(", ")));
            } else {
                for item in items {
                    out.push_str(&format!("{pad}-\n"));
                    write_value(out, item, depth + 1);
                }
            }
        }
        other => {
            let s = scalar(other).expect("covered above");
            out.push_str(&format!("{pad}{s}\n"));
        }
    }
}

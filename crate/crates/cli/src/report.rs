//! Report assembly. Every report is a JSON object
//! `{"command", "convention", "results", "status"}`; the table format is
//! rendered from that object and nothing else.

use serde_json::{json, Map, Value};

use poisson_pic::calculus::CONVENTION;

/// Pretty JSON with sorted keys and a trailing newline. Arrays that hold no
/// objects stay on one line so tensors and matrices read naturally.
pub fn render_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(has_object),
        _ => false,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        other => serde_json::to_string(other).expect("values serialize"),
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        // serde_json's default map iterates in key order
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if has_object(v) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        other => out.push_str(&inline(other)),
    }
}

pub fn convention() -> Value {
    let c = CONVENTION;
    json!({
        "schouten": c.schouten,
        "contraction": c.contraction,
        "sharp": c.sharp,
        "lichnerowicz": c.lichnerowicz,
        "chain_map_sign": c.chain_map_sign,
        "cone_map": c.cone_map,
        "flat": c.flat,
        "gauge": c.gauge,
        "euler": c.euler,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::Error => "error",
        }
    }
}

pub fn report(command: Value, results: Value, status: Status) -> Value {
    json!({
        "command": command,
        "convention": convention(),
        "results": results,
        "status": status.as_str(),
    })
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("values serialize")
}

fn grid(header: &[String], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain([header[c].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}", w = *w))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(header);
    out.push('\n');
    out.push_str(&line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()));
    out.push('\n');
    for r in rows {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

fn table_of_objects(items: &[Value]) -> String {
    let objects: Vec<&Map<String, Value>> = items.iter().filter_map(Value::as_object).collect();
    let mut columns: Vec<String> = Vec::new();
    for o in &objects {
        for (k, v) in *o {
            if scalar(v).is_some() && !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    columns.sort();
    let rows: Vec<Vec<String>> = objects
        .iter()
        .map(|o| {
            columns
                .iter()
                .map(|c| o.get(c).and_then(scalar).unwrap_or_else(|| "-".into()))
                .collect()
        })
        .collect();
    let mut out = grid(&columns, &rows);
    for (i, o) in objects.iter().enumerate() {
        for (k, v) in *o {
            if scalar(v).is_none() {
                out.push_str(&format!("[{}] {k}: {}\n", i + 1, compact(v)));
            }
        }
    }
    out
}

/// Human-readable rendering of a report value.
pub fn render_table(report: &Value) -> String {
    let mut out = String::new();
    if let Some(name) = report.pointer("/command/name").and_then(Value::as_str) {
        out.push_str(&format!("command: {name}\n"));
    }
    if let Some(opts) = report.pointer("/command/options").and_then(Value::as_object) {
        for (k, v) in opts {
            out.push_str(&format!("  {k}: {}\n", scalar(v).unwrap_or_else(|| compact(v))));
        }
    }
    if let Some(eps) = report.pointer("/convention/chain_map_sign") {
        out.push_str(&format!("convention: sharp o d = ({eps}) d_pi o sharp\n"));
    }
    if let Some(status) = report.get("status").and_then(Value::as_str) {
        out.push_str(&format!("status: {status}\n"));
    }
    out.push('\n');
    match report.get("results") {
        Some(Value::Array(items)) if items.iter().all(Value::is_object) && !items.is_empty() => {
            out.push_str(&table_of_objects(items));
        }
        Some(Value::Object(map)) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, v) in map {
                let text = scalar(v).unwrap_or_else(|| compact(v));
                out.push_str(&format!("{k:<width$}  {text}\n"));
            }
        }
        Some(v) => {
            out.push_str(&compact(v));
            out.push('\n');
        }
        None => {}
    }
    out
}

use serde_json::Value;

use crate::Table;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Pretty JSON with sorted keys and a trailing newline.
pub(crate) fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// `path = value` lines for every scalar leaf.
pub(crate) fn text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, String::new(), &mut |path, leaf| {
        out.push_str(&format!("{path} = {leaf}\n"));
    });
    out
}

/// The command's table if it has one, otherwise `key,value` leaf rows.
pub(crate) fn csv(table: Option<&Table>, v: &Value) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    match table {
        Some(t) => {
            w.write_record(&t.header).expect("in-memory write");
            for row in &t.rows {
                w.write_record(row).expect("in-memory write");
            }
        }
        None => {
            w.write_record(["key", "value"]).expect("in-memory write");
            walk(v, String::new(), &mut |path, leaf| {
                w.write_record([path, leaf.as_str()])
                    .expect("in-memory write");
            });
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn walk(v: &Value, path: String, emit: &mut dyn FnMut(&str, String)) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match v {
        Value::Object(map) => {
            for (key, child) in map {
                walk(child, join(key), emit);
            }
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                walk(child, join(&i.to_string()), emit);
            }
        }
        Value::String(s) => emit(&path, s.clone()),
        other => emit(&path, other.to_string()),
    }
}

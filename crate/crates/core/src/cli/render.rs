//! Serialization of report envelopes.

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Tsv => "tsv",
            Format::Text => "text",
        }
    }
}

/// Leaves of `v` as `(dotted.path, scalar)`, in key order.
fn flatten(v: &Value, path: &str, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if path.is_empty() {
            k.to_string()
        } else {
            format!("{path}.{k}")
        }
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                flatten(x, &join(k), out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push((path.to_string(), items.join(",")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(x, &join(&i.to_string()), out);
            }
        }
        other => out.push((path.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}

pub fn render(envelope: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(envelope).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Tsv | Format::Text => {
            let mut rows = Vec::new();
            flatten(envelope, "", &mut rows);
            let width = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
            rows.iter()
                .map(|(k, v)| match format {
                    Format::Tsv => format!("{k}\t{v}\n"),
                    _ => format!("{k:width$}  {v}\n"),
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn tsv_paths() {
        let v = json!({"b": {"x": [1, 2]}, "a": [{"k": "v"}], "c": null});
        assert_eq!(render(&v, Format::Tsv), "a.0.k\tv\nb.x\t1,2\nc\tnull\n");
    }
}

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// What a command produced: a JSON payload, a human rendering, and whether
/// every check it ran passed.
pub struct Output {
    pub command: &'static str,
    pub json: Map<String, Value>,
    pub text: String,
    pub ok: bool,
}

impl Output {
    pub fn new(command: &'static str) -> Self {
        Output { command, json: Map::new(), text: String::new(), ok: true }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.json.insert(key.to_string(), value.into());
        self
    }

    pub fn line(&mut self, s: impl AsRef<str>) -> &mut Self {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
        self
    }

    pub fn table(&mut self, header: &[&str], rows: &[Vec<String>]) -> &mut Self {
        let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
        for r in rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let fmt_row = |cells: Vec<&str>| -> String {
            let padded: Vec<String> =
                cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            padded.join("  ").trim_end().to_string()
        };
        let head = fmt_row(header.to_vec());
        self.line(head);
        for r in rows {
            let row = fmt_row(r.iter().map(String::as_str).collect());
            self.line(row);
        }
        self
    }

    pub fn render_json(&self) -> String {
        let mut top = Map::new();
        top.insert("schema_version".into(), SCHEMA_VERSION.into());
        top.insert("command".into(), self.command.into());
        top.insert("ok".into(), self.ok.into());
        for (k, v) in &self.json {
            top.insert(k.clone(), v.clone());
        }
        serde_json::to_string_pretty(&Value::Object(top)).expect("JSON values serialize")
    }
}

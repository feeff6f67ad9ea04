use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

/// Seventeen significant digits: every `f64` round-trips, and the text
/// depends only on the value.
pub fn num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

pub enum Cell<'a> {
    Int(usize),
    Float(f64),
    Text(&'a str),
}

impl Cell<'_> {
    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => num(*x),
            Cell::Text(s) => s.to_string(),
        }
    }
}

pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<Cell<'static>>>) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(Cell::render).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub enum Json {
    Float(f64),
    Int(usize),
    Bool(bool),
    Str(String),
}

/// Flat JSON object with keys in the given order.
pub fn json_object(fields: &[(&str, Json)]) -> String {
    let mut out = String::from("{");
    for (i, (key, value)) in fields.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let rendered = match value {
            Json::Float(x) if x.is_finite() => num(*x),
            Json::Float(_) => "null".to_string(),
            Json::Int(n) => n.to_string(),
            Json::Bool(b) => b.to_string(),
            Json::Str(s) => format!("\"{}\"", escape(s)),
        };
        let _ = write!(out, "\"{}\":{rendered}", escape(key));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

/// Where a command's table goes: an explicit path, `<dir>/<name>` under the
/// default output directory, or standard output.
pub fn destination(out: Option<&Path>, out_dir: Option<&Path>, name: &str) -> Option<PathBuf> {
    match (out, out_dir) {
        (Some(p), _) if p.as_os_str() == "-" => None,
        (Some(p), _) => Some(p.to_path_buf()),
        (None, Some(dir)) => Some(dir.join(name)),
        (None, None) => None,
    }
}

pub fn emit(target: Option<&Path>, text: &str) -> io::Result<()> {
    match target {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            fs::write(path, text)
        }
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

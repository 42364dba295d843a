//! Diagram files: the line-based `.sd` format and JSON.
//!
//! ```text
//! # the blow-up example
//! genus 1
//! curve 1 0
//! curve 1 -1
//! curve 0 1
//! closed true
//! ```
//!
//! A twisted diagram adds `2g` lines `switch m1 ... m2g`, one per row of
//! the switch matrix. In JSON the same data reads
//! `{"genus": 1, "curves": [[1, 0], ...], "closed": true, "switch": [[...], ...]}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use sdcalc_core::{Diagram, HClass, IntMatrix, SpMatrix};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Sd,
    Json,
}

impl Format {
    /// `.json` files are JSON, `.sd` files are line-based; anything else is
    /// sniffed from its first non-blank character.
    pub fn detect(path: &str, text: &str) -> Format {
        if path.ends_with(".json") {
            Format::Json
        } else if path.ends_with(".sd") {
            Format::Sd
        } else if text.trim_start().starts_with('{') {
            Format::Json
        } else {
            Format::Sd
        }
    }
}

/// A located syntax or shape error. Line and column are 1-based; `0` means
/// the error has no better location than the whole file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Raw file contents, before orientation and validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramFile {
    pub genus: usize,
    pub curves: Vec<Vec<BigInt>>,
    pub closed: bool,
    pub switch: Option<Vec<Vec<BigInt>>>,
}

impl DiagramFile {
    pub fn classes(&self) -> Vec<HClass> {
        self.curves
            .iter()
            .map(|v| HClass::new(v.clone()).expect("shape checked when parsed"))
            .collect()
    }

    pub fn switch_matrix(&self) -> Option<Result<SpMatrix, sdcalc_core::Error>> {
        self.switch.as_ref().map(|rows| {
            SpMatrix::new(IntMatrix::from_rows(rows.clone()).expect("shape checked when parsed"))
        })
    }

    /// Orients the curves and checks the circuit axioms.
    pub fn to_diagram(&self) -> Result<Diagram, sdcalc_core::Error> {
        let switch = self.switch_matrix().transpose()?;
        Diagram::normalize(self.classes(), self.closed, switch)
    }

    pub fn from_diagram(d: &Diagram) -> DiagramFile {
        DiagramFile {
            genus: d.genus(),
            curves: d.circuit().curves().iter().map(|x| x.coeffs().to_vec()).collect(),
            closed: d.is_closed(),
            switch: d.switch_matrix().map(|m| m.matrix().to_rows()),
        }
    }

    fn check_shape(&self, locate: impl Fn(Part) -> (usize, usize)) -> Result<(), ParseError> {
        let n = 2 * self.genus;
        for (i, v) in self.curves.iter().enumerate() {
            if v.len() != n {
                let (l, c) = locate(Part::Curve(i));
                return Err(err(
                    l,
                    c,
                    format!("curve {}: {} coefficients, genus {} needs {n}", i + 1, v.len(), self.genus),
                ));
            }
        }
        if let Some(rows) = &self.switch {
            if rows.len() != n {
                let (l, c) = locate(Part::Switch(rows.len()));
                return Err(err(l, c, format!("switch has {} rows, genus {} needs {n}", rows.len(), self.genus)));
            }
            for (i, r) in rows.iter().enumerate() {
                if r.len() != n {
                    let (l, c) = locate(Part::Switch(i));
                    return Err(err(l, c, format!("switch row {}: {} entries, expected {n}", i + 1, r.len())));
                }
            }
        }
        Ok(())
    }
}

enum Part {
    Curve(usize),
    Switch(usize),
}

pub fn parse(text: &str, format: Format) -> Result<DiagramFile, ParseError> {
    match format {
        Format::Sd => parse_sd(text),
        Format::Json => parse_json(text),
    }
}

pub fn emit(f: &DiagramFile, format: Format) -> String {
    match format {
        Format::Sd => emit_sd(f),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&to_json(f)).expect("values serialize");
            s.push('\n');
            s
        }
    }
}

fn parse_sd(text: &str) -> Result<DiagramFile, ParseError> {
    let mut genus: Option<(usize, usize)> = None;
    let mut closed: Option<bool> = None;
    let mut curves = Vec::new();
    let mut curve_lines = Vec::new();
    let mut switch = Vec::new();
    let mut switch_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = tokens(content);
        let Some((col, key)) = tokens.next() else {
            continue;
        };
        let rest: Vec<(usize, &str)> = tokens.collect();
        match key {
            "genus" => {
                if genus.is_some() {
                    return Err(err(line, col, "genus given twice"));
                }
                let [(c, v)] = rest[..] else {
                    return Err(err(line, col, "expected `genus N`"));
                };
                let g: usize = v
                    .parse()
                    .ok()
                    .filter(|&g| g > 0)
                    .ok_or_else(|| err(line, c, format!("genus must be a positive integer, got `{v}`")))?;
                genus = Some((g, line));
            }
            "curve" => {
                curves.push(integers(line, &rest)?);
                curve_lines.push((line, col));
            }
            "switch" => {
                switch.push(integers(line, &rest)?);
                switch_lines.push((line, col));
            }
            "closed" => {
                if closed.is_some() {
                    return Err(err(line, col, "closed given twice"));
                }
                let [(c, v)] = rest[..] else {
                    return Err(err(line, col, "expected `closed true` or `closed false`"));
                };
                closed = Some(match v {
                    "true" => true,
                    "false" => false,
                    _ => return Err(err(line, c, format!("expected true or false, got `{v}`"))),
                });
            }
            other => return Err(err(line, col, format!("unknown keyword `{other}`"))),
        }
    }
    let Some((genus, _)) = genus else {
        return Err(err(1, 1, "missing `genus` line"));
    };
    let f = DiagramFile {
        genus,
        curves,
        closed: closed.unwrap_or(false),
        switch: (!switch.is_empty()).then_some(switch),
    };
    f.check_shape(|p| match p {
        Part::Curve(i) => curve_lines[i],
        Part::Switch(i) => switch_lines.get(i).or(switch_lines.last()).copied().unwrap_or((1, 1)),
    })?;
    Ok(f)
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out.into_iter().map(move |(b, t)| (s[..b].chars().count() + 1, t))
}

fn integers(line: usize, toks: &[(usize, &str)]) -> Result<Vec<BigInt>, ParseError> {
    toks.iter()
        .map(|&(c, t)| BigInt::from_str(t).map_err(|_| err(line, c, format!("expected an integer, got `{t}`"))))
        .collect()
}

fn emit_sd(f: &DiagramFile) -> String {
    let row = |v: &[BigInt]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    let mut s = format!("genus {}\n", f.genus);
    for c in &f.curves {
        s.push_str(&format!("curve {}\n", row(c)));
    }
    s.push_str(&format!("closed {}\n", f.closed));
    for r in f.switch.iter().flatten() {
        s.push_str(&format!("switch {}\n", row(r)));
    }
    s
}

fn parse_json(text: &str) -> Result<DiagramFile, ParseError> {
    let v: Value = serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
    let Value::Object(obj) = v else {
        return Err(err(0, 0, "expected a JSON object"));
    };
    for k in obj.keys() {
        if !["genus", "curves", "closed", "switch"].contains(&k.as_str()) {
            return Err(err(0, 0, format!("unknown key `{k}`")));
        }
    }
    let genus = match obj.get("genus") {
        Some(Value::Number(n)) => n.as_u64().filter(|&g| g > 0).map(|g| g as usize),
        None => return Err(err(0, 0, "missing key `genus`")),
        _ => None,
    }
    .ok_or_else(|| err(0, 0, "`genus` must be a positive integer"))?;
    let curves = match obj.get("curves") {
        Some(v) => integer_rows(v, "curves")?,
        None => return Err(err(0, 0, "missing key `curves`")),
    };
    let closed = match obj.get("closed") {
        Some(Value::Bool(b)) => *b,
        None => false,
        Some(_) => return Err(err(0, 0, "`closed` must be true or false")),
    };
    let switch = match obj.get("switch") {
        Some(Value::Null) | None => None,
        Some(v) => Some(integer_rows(v, "switch")?),
    };
    let f = DiagramFile {
        genus,
        curves,
        closed,
        switch,
    };
    f.check_shape(|_| (0, 0))?;
    Ok(f)
}

fn integer_rows(v: &Value, key: &str) -> Result<Vec<Vec<BigInt>>, ParseError> {
    let Value::Array(rows) = v else {
        return Err(err(0, 0, format!("`{key}` must be an array of integer arrays")));
    };
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            let Value::Array(xs) = r else {
                return Err(err(0, 0, format!("`{key}[{i}]` must be an array of integers")));
            };
            xs.iter()
                .enumerate()
                .map(|(j, x)| {
                    json_integer(x).ok_or_else(|| err(0, 0, format!("`{key}[{i}][{j}]` is not an integer: {x}")))
                })
                .collect()
        })
        .collect()
}

fn json_integer(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string()).ok(),
        _ => None,
    }
}

pub fn int(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

pub fn int_row(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn to_json(f: &DiagramFile) -> Value {
    let mut m = Map::new();
    m.insert("genus".into(), Value::from(f.genus));
    m.insert("curves".into(), Value::Array(f.curves.iter().map(|c| int_row(c)).collect()));
    m.insert("closed".into(), Value::Bool(f.closed));
    if let Some(s) = &f.switch {
        m.insert("switch".into(), Value::Array(s.iter().map(|r| int_row(r)).collect()));
    }
    Value::Object(m)
}

//! Flat records and tables rendered as JSON or CSV.

use serde_json::{Map, Number, Value as Json};

use crate::{CliError, Format};

/// A single output cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    Bool(bool),
    Str(String),
    List(Vec<String>),
    /// Not applicable. `null` in JSON, `n/a` in CSV.
    Missing,
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Num(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_owned())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Str(v)
    }
}

impl From<Option<f64>> for Value {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Value::Missing, Value::Num)
    }
}

/// Ordered `(field, value)` pairs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(&'static str, Value)>);

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &'static str, value: impl Into<Value>) -> &mut Self {
        self.0.push((key, value.into()));
        self
    }

    pub fn with(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.push(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.0.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Record(Record),
    /// Rows share the field list of the first row.
    Table(Vec<Record>),
}

impl Report {
    pub fn render(&self, format: Format, precision: usize) -> Result<String, CliError> {
        match format {
            Format::Json => Ok(self.to_json(precision)),
            Format::Csv => self.to_csv(precision),
        }
    }

    fn to_json(&self, precision: usize) -> String {
        let value = match self {
            Report::Record(r) => record_json(r, precision),
            Report::Table(rows) => {
                Json::Array(rows.iter().map(|r| record_json(r, precision)).collect())
            }
        };
        let mut s = serde_json::to_string_pretty(&value).expect("JSON values always serialize");
        s.push('\n');
        s
    }

    fn to_csv(&self, precision: usize) -> Result<String, CliError> {
        let rows: &[Record] = match self {
            Report::Record(r) => std::slice::from_ref(r),
            Report::Table(rows) => rows,
        };
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        if let Some(first) = rows.first() {
            w.write_record(first.0.iter().map(|(k, _)| *k))?;
        }
        for row in rows {
            w.write_record(row.0.iter().map(|(_, v)| csv_cell(v, precision)))?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("CSV cells are UTF-8"))
    }
}

/// Rounds to `precision` significant digits. Negative zero becomes zero.
pub fn round_sig(v: f64, precision: usize) -> f64 {
    if !v.is_finite() || v == 0.0 {
        return if v == 0.0 { 0.0 } else { v };
    }
    let r: f64 = format!("{:.*e}", precision.saturating_sub(1), v)
        .parse()
        .expect("formatted float reparses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Shortest text that reparses to `round_sig(v, precision)`.
pub fn format_num(v: f64, precision: usize) -> String {
    let r = round_sig(v, precision);
    if r.is_nan() {
        return "NaN".into();
    }
    if r.is_infinite() {
        return if r > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let a = r.abs();
    if r != 0.0 && !(1e-5..1e16).contains(&a) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

fn json_num(v: f64, precision: usize) -> Json {
    Number::from_f64(round_sig(v, precision)).map_or(Json::Null, Json::Number)
}

fn record_json(r: &Record, precision: usize) -> Json {
    let mut map = Map::new();
    for (k, v) in &r.0 {
        let jv = match v {
            Value::Num(x) => json_num(*x, precision),
            Value::Int(i) => Json::from(*i),
            Value::Bool(b) => Json::Bool(*b),
            Value::Str(s) => Json::String(s.clone()),
            Value::List(items) => Json::Array(items.iter().cloned().map(Json::String).collect()),
            Value::Missing => Json::Null,
        };
        map.insert((*k).to_owned(), jv);
    }
    Json::Object(map)
}

fn csv_cell(v: &Value, precision: usize) -> String {
    match v {
        Value::Num(x) => format_num(*x, precision),
        Value::Int(i) => i.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Str(s) => s.clone(),
        Value::List(items) => items.join(";"),
        Value::Missing => "n/a".into(),
    }
}

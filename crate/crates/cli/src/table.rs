//! Row tables and their CSV / JSON renderings.

use serde_json::{Map, Number, Value};

use crate::error::CliResult;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

/// An ordered list of named cells.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Row(pub Vec<(String, Cell)>);

impl Row {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, cell: impl Into<Cell>) {
        self.0.push((name.into(), cell.into()));
    }

    pub fn with(mut self, name: impl Into<String>, cell: impl Into<Cell>) -> Self {
        self.push(name, cell);
        self
    }

    pub fn with_all(mut self, other: Row) -> Self {
        self.0.extend(other.0);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Cell> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Rounds to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

/// Text form with 12 significant digits and a dot decimal separator.
pub fn format_number(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 {
        "0".into()
    } else if r.is_finite() && (r.abs() < 1e-5 || r.abs() >= 1e15) {
        format!("{r:e}")
    } else {
        format!("{r}")
    }
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Num(x) => format_number(*x),
        Cell::Int(n) => n.to_string(),
        Cell::Bool(b) => b.to_string(),
        Cell::Text(s) => s.clone(),
        Cell::Empty => String::new(),
    }
}

fn cell_json(c: &Cell) -> Value {
    match c {
        Cell::Num(x) => Number::from_f64(round_sig(*x)).map_or(Value::Null, Value::Number),
        Cell::Int(n) => Value::from(*n),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Empty => Value::Null,
    }
}

/// CSV with a header row taken from the first row and LF line endings.
pub fn to_csv(rows: &[Row]) -> CliResult<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .flexible(true)
        .from_writer(Vec::new());
    let io = |e: csv::Error| crate::error::CliError::Usage(format!("csv: {e}"));
    if let Some(first) = rows.first() {
        w.write_record(first.0.iter().map(|(n, _)| n.as_str())).map_err(io)?;
    }
    for row in rows {
        w.write_record(row.0.iter().map(|(_, c)| cell_text(c))).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| crate::error::CliError::Usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// A JSON array of row objects, keys in column order.
pub fn to_json(rows: &[Row]) -> String {
    let array: Vec<Value> = rows
        .iter()
        .map(|row| {
            let map: Map<String, Value> = row
                .0
                .iter()
                .map(|(n, c)| (n.clone(), cell_json(c)))
                .collect();
            Value::Object(map)
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&Value::Array(array)).expect("JSON values serialize");
    text.push('\n');
    text
}

pub fn render(rows: &[Row], format: Format) -> CliResult<String> {
    match format {
        Format::Csv => to_csv(rows),
        Format::Json => Ok(to_json(rows)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_number(std::f64::consts::FRAC_1_SQRT_2), "0.707106781187");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(0.25), "0.25");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(1234567.891234567), "1234567.89123");
        assert_eq!(format_number(2.5e-9), "2.5e-9");
    }

    #[test]
    fn csv_layout() {
        let rows = vec![
            Row::new().with("a", 1.0).with("b", true),
            Row::new().with("a", Cell::Empty).with("b", "x,y"),
        ];
        assert_eq!(to_csv(&rows).unwrap(), "a,b\n1,true\n,\"x,y\"\n");
    }

    #[test]
    fn json_layout_keeps_column_order() {
        let rows = vec![Row::new().with("z", 0.5).with("a", Cell::Empty)];
        let text = to_json(&rows);
        assert!(text.find("\"z\"").unwrap() < text.find("\"a\"").unwrap());
        assert!(text.contains("null"));
    }
}

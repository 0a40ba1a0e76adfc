//! Column tables with CSV and JSON forms.
//!
//! Cells are stored as text, so reading an emitted table and writing it again
//! reproduces the same bytes. Floats are written with 17 significant digits.

use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// `x` with 17 significant digits.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn opt_float(x: Option<f64>) -> String {
    x.map(float).unwrap_or_default()
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    /// Appends a row; panics if its width differs from the header.
    pub fn push<D: Display>(&mut self, row: impl IntoIterator<Item = D>) {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    pub fn cell(&self, row: usize, name: &str) -> Option<&str> {
        Some(self.rows.get(row)?.get(self.column(name)?)?.as_str())
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let parse = |e: csv::Error| Error::Parse(e.to_string());
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let columns = r.headers().map_err(parse)?.iter().map(String::from).collect();
        let rows = r
            .records()
            .map(|rec| rec.map(|rec| rec.iter().map(String::from).collect()))
            .collect::<std::result::Result<_, _>>()
            .map_err(parse)?;
        Ok(Table { columns, rows })
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Io(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let t: Table = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if t.rows.iter().any(|r| r.len() != t.columns.len()) {
            return Err(Error::Parse("row width differs from the header".into()));
        }
        Ok(t)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn parse(text: &str, format: Format) -> Result<Self> {
        match format {
            Format::Csv => Self::from_csv(text),
            Format::Json => Self::from_json(text),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample() -> Table {
        let mut t = Table::new(["case", "value", "note"]);
        t.push(["continuous", &float(0.29289321881345254), "a, b"]);
        t.push(["discrete", &float(-1.5e-300), "say \"hi\""]);
        t
    }

    #[test]
    fn floats_have_17_digits() {
        assert_eq!(float(0.25), "2.5000000000000000e-1");
        assert_eq!(float(0.1).parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn round_trips() {
        let t = sample();
        for f in [Format::Csv, Format::Json] {
            let text = t.render(f).unwrap();
            let back = Table::parse(&text, f).unwrap();
            assert_eq!(back, t);
            assert_eq!(back.render(f).unwrap(), text);
        }
        assert_eq!(t.cell(1, "case"), Some("discrete"));
    }

    #[test]
    fn csv_has_one_header_row() {
        let text = sample().to_csv().unwrap();
        assert!(text.starts_with("case,value,note\n"));
        assert_eq!(text.lines().count(), 3);
    }

    #[test]
    fn rejects_ragged_json() {
        assert!(Table::from_json(r#"{"columns": ["a"], "rows": [["1", "2"]]}"#).is_err());
    }

    proptest! {
        #[test]
        fn arbitrary_tables_round_trip(cells in proptest::collection::vec(("[ -~]{1,8}", any::<f64>()), 1..6)) {
            let mut t = Table::new(["text", "number"]);
            for (s, x) in &cells {
                t.push([s.clone(), float(*x)]);
            }
            for f in [Format::Csv, Format::Json] {
                let text = t.render(f).unwrap();
                prop_assert_eq!(Table::parse(&text, f).unwrap().render(f).unwrap(), text);
            }
        }
    }
}

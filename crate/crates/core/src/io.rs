//! Serialization for the CLI: CSV/JSON tables, grid specs, DOS tables.
//!
//! CSV output is comma-separated UTF-8 with LF line endings, a header
//! line first, and numbers rendered with 17 significant digits so
//! doubles round-trip exactly. JSON output is a flat object per row
//! under a top-level `rows` array next to a `config` echo block;
//! non-finite values (the infinite `beta_eff` sentinel) serialize as
//! the string `"inf"` in CSV and `null` in JSON.

use std::io::Write;

use serde_json::{json, Value};

use crate::{Error, Result};

/// Renders a double with 17 significant digits.
pub fn format_f64(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{x:.16e}")
}

/// Column-named numeric table.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{}", self.columns.join(","))?;
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|&x| format_f64(x)).collect();
            writeln!(w, "{}", line.join(","))?;
        }
        Ok(())
    }

    pub fn write_json<W: Write>(&self, mut w: W, config: &Value) -> Result<()> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, &x)| {
                        let v = serde_json::Number::from_f64(x)
                            .map(Value::Number)
                            .unwrap_or(Value::Null);
                        (c.clone(), v)
                    })
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "config": config, "rows": rows });
        serde_json::to_writer_pretty(&mut w, &doc)
            .map_err(|e| Error::Parse(format!("JSON serialization failed: {e}")))?;
        writeln!(w)?;
        Ok(())
    }
}

/// Grid spec `min:max:points`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

pub fn parse_grid_spec(spec: &str) -> Result<GridSpec> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "grid spec must be min:max:points, got '{spec}'"
        )));
    }
    let min: f64 = parts[0]
        .parse()
        .map_err(|_| Error::Parse(format!("bad grid min '{}'", parts[0])))?;
    let max: f64 = parts[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad grid max '{}'", parts[1])))?;
    let points: usize = parts[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad grid point count '{}'", parts[2])))?;
    if points < 2 {
        return Err(Error::Parse("grid needs at least 2 points".into()));
    }
    if min.is_nan() || max.is_nan() || min >= max {
        return Err(Error::Parse(format!(
            "grid requires min < max, got {min}..{max}"
        )));
    }
    Ok(GridSpec { min, max, points })
}

/// Parses a two-column CSV of `(xi, g)` samples; a non-numeric first
/// line is treated as a header and skipped.
pub fn parse_dos_table(content: &str) -> Result<Vec<(f64, f64)>> {
    let mut table = Vec::new();
    for (lineno, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(Error::Parse(format!(
                "DOS table line {}: expected 2 columns, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        match (fields[0].parse::<f64>(), fields[1].parse::<f64>()) {
            (Ok(x), Ok(g)) => table.push((x, g)),
            _ if lineno == 0 => continue, // header
            _ => {
                return Err(Error::Parse(format!(
                    "DOS table line {}: non-numeric fields",
                    lineno + 1
                )))
            }
        }
    }
    if table.is_empty() {
        return Err(Error::Parse("DOS table has no data rows".into()));
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_formatting() {
        for &x in &[0.5, std::f64::consts::PI, 1e-300, -7.25e17] {
            let s = format_f64(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
        assert_eq!(format_f64(f64::INFINITY), "inf");
        assert_eq!(format_f64(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn csv_layout() {
        let mut t = Table::new(&["xi", "v2"]);
        t.push(vec![0.0, 0.5]);
        let mut buf = Vec::new();
        t.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "xi,v2");
        assert!(lines.next().unwrap().starts_with("0.0000000000000000e0,5.000"));
        assert!(text.ends_with('\n') && !text.contains('\r'));
    }

    #[test]
    fn json_layout() {
        let mut t = Table::new(&["xi", "beta_eff"]);
        t.push(vec![0.0, f64::INFINITY]);
        let mut buf = Vec::new();
        t.write_json(&mut buf, &serde_json::json!({"delta": 1.0})).unwrap();
        let doc: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(doc["config"]["delta"], 1.0);
        assert_eq!(doc["rows"][0]["xi"], 0.0);
        assert!(doc["rows"][0]["beta_eff"].is_null());
    }

    #[test]
    fn grid_spec_parsing() {
        assert_eq!(
            parse_grid_spec("-5:5:101").unwrap(),
            GridSpec {
                min: -5.0,
                max: 5.0,
                points: 101
            }
        );
        assert!(parse_grid_spec("1:0:10").is_err());
        assert!(parse_grid_spec("0:1:1").is_err());
        assert!(parse_grid_spec("0:1").is_err());
        assert!(parse_grid_spec("a:1:10").is_err());
    }

    #[test]
    fn dos_table_parsing() {
        let with_header = "xi,g\n-1.0,2.0\n1.0,3.0\n";
        assert_eq!(
            parse_dos_table(with_header).unwrap(),
            vec![(-1.0, 2.0), (1.0, 3.0)]
        );
        let bare = "-1.0,2.0\n1.0,3.0\n";
        assert_eq!(parse_dos_table(bare).unwrap().len(), 2);
        assert!(parse_dos_table("xi,g\n").is_err());
        assert!(parse_dos_table("1,2,3\n").is_err());
    }
}

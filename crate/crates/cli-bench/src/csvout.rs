//! Deterministic CSV emission.
//!
//! Layout: `#`-prefixed header comments (fixed parameters, grid, method —
//! never timestamps or machine state), one column-name line, then data rows.
//! Numbers are formatted `{:.8e}` with negative zero canonicalized to zero,
//! so repeated runs are byte-identical. NaN is rejected at format time;
//! infinities (an information-free Cramer-Rao bound) print as `inf`.

use std::fmt::Write as _;

use crate::error::CliError;

/// Format one numeric cell.
pub fn num(x: f64) -> Result<String, CliError> {
    if x.is_nan() {
        return Err(CliError::Verification(
            "refusing to emit NaN into a CSV cell".into(),
        ));
    }
    if x.is_infinite() {
        return Ok(if x > 0.0 { "inf".into() } else { "-inf".into() });
    }
    let x = if x == 0.0 { 0.0 } else { x };
    Ok(format!("{x:.8e}"))
}

#[derive(Debug, Default, Clone)]
pub struct CsvDoc {
    comments: Vec<String>,
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl CsvDoc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn comment(&mut self, line: &str) {
        debug_assert!(!line.contains('\n'));
        self.comments.push(line.to_string());
    }

    pub fn columns(&mut self, cols: &[&str]) {
        self.columns = cols.iter().map(|c| c.to_string()).collect();
    }

    pub fn push_row(&mut self, cells: Vec<String>) -> Result<(), CliError> {
        if cells.len() != self.columns.len() {
            return Err(CliError::Verification(format!(
                "row width {} does not match {} columns",
                cells.len(),
                self.columns.len()
            )));
        }
        self.rows.push(cells);
        Ok(())
    }

    /// Convenience: push a row of plain numbers.
    pub fn push_nums(&mut self, cells: &[f64]) -> Result<(), CliError> {
        let formatted = cells.iter().map(|&x| num(x)).collect::<Result<_, _>>()?;
        self.push_row(formatted)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let _ = writeln!(out, "{}", row.join(","));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_canonical_numbers() {
        assert_eq!(num(0.0).unwrap(), "0.00000000e0");
        assert_eq!(num(-0.0).unwrap(), "0.00000000e0");
        assert_eq!(num(1.5).unwrap(), "1.50000000e0");
        assert_eq!(num(-2.25e-3).unwrap(), "-2.25000000e-3");
        assert_eq!(num(f64::INFINITY).unwrap(), "inf");
        assert!(num(f64::NAN).is_err());
    }

    #[test]
    fn renders_comments_columns_rows() {
        let mut doc = CsvDoc::new();
        doc.comment("fixed: g = 1");
        doc.columns(&["x", "y"]);
        doc.push_nums(&[1.0, 2.0]).unwrap();
        let text = doc.render();
        assert_eq!(text, "# fixed: g = 1\nx,y\n1.00000000e0,2.00000000e0\n");
    }

    #[test]
    fn rejects_ragged_rows() {
        let mut doc = CsvDoc::new();
        doc.columns(&["x", "y"]);
        assert!(doc.push_nums(&[1.0]).is_err());
    }
}

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

/// Nine significant digits, fixed layout.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.8e}")
}

/// |a − b| / |a|, with 0 when both vanish.
pub fn rel_err(reference: f64, value: f64) -> f64 {
    if reference == value {
        return 0.0;
    }
    (reference - value).abs() / reference.abs()
}

pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Largest finite-or-NaN value of a column; NaN wins.
    pub fn column_max(&self, col: usize) -> f64 {
        self.rows.iter().map(|r| r[col]).fold(0.0, |m, x| {
            if x.is_nan() || m.is_nan() {
                f64::NAN
            } else {
                m.max(x)
            }
        })
    }

    pub fn write_to<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "{}", self.header.join(","))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|&x| fmt_float(x)).collect();
            writeln!(w, "{}", cells.join(","))?;
        }
        w.flush()
    }

    /// Writes to `path`, or stdout when absent.
    pub fn emit(&self, path: Option<&Path>) -> io::Result<()> {
        match path {
            Some(p) => self.write_to(BufWriter::new(File::create(p)?)),
            None => self.write_to(io::stdout().lock()),
        }
    }
}

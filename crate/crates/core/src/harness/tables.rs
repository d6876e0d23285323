//! Reproduction of the printed relative-error tables.

use rayon::prelude::*;

use crate::bounds::{eval_bound, struve_sum_lower, BoundId, BoundOptions};
use crate::error::{domain, Result};
use crate::integral::f_integral;

/// Absolute tolerance for a reproduced cell (values are printed to 4 decimals).
pub const TABLE_TOLERANCE: f64 = 1.5e-4;
/// Number of Struve terms in the truncated lower bound of table 1.
pub const TABLE_TRUNCATION: usize = 5;

const FIXTURE: &str = include_str!("../../data/reference_tables.txt");

/// One printed cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrintedCell {
    pub table: u8,
    pub nu: f64,
    pub beta: f64,
    pub x: f64,
    pub value: f64,
}

/// Parses the embedded fixture.
pub fn printed_cells() -> Vec<PrintedCell> {
    let mut xs: Vec<f64> = Vec::new();
    let mut cells = Vec::new();
    for line in FIXTURE.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let number = |s: &str| s.parse::<f64>().expect("numeric field in table fixture");
        if fields[0] == "x" {
            xs = fields[1..].iter().map(|s| number(s)).collect();
            continue;
        }
        let table = fields[0].parse::<u8>().expect("table number in fixture");
        let (nu, beta) = (number(fields[1]), number(fields[2]));
        assert_eq!(fields.len() - 3, xs.len(), "fixture row width");
        for (x, v) in xs.iter().zip(&fields[3..]) {
            cells.push(PrintedCell {
                table,
                nu,
                beta,
                x: *x,
                value: number(v),
            });
        }
    }
    cells
}

/// `1 - L5/F` for table 1, `U/F - 1` for table 2.
pub fn table_metric(which: u8, nu: f64, beta: f64, x: f64) -> Result<f64> {
    let f = f_integral(nu, beta, x)?;
    match which {
        1 => Ok(1.0 - struve_sum_lower(nu, beta, x, Some(TABLE_TRUNCATION))?.ratio(&f)),
        2 => {
            let u = eval_bound(BoundId::UpperSameOrder, nu, beta, x, BoundOptions::default())?.primary();
            Ok(u.ratio(&f) - 1.0)
        }
        other => Err(domain("table_metric", format!("no table {other}"))),
    }
}

/// A reproduced cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub nu: f64,
    pub beta: f64,
    pub x: f64,
    pub metric: f64,
    pub printed: f64,
}

impl TableRow {
    pub fn deviation(&self) -> f64 {
        (self.metric - self.printed).abs()
    }

    pub fn within_tolerance(&self) -> bool {
        self.deviation() <= TABLE_TOLERANCE
    }
}

/// A reproduced table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub which: u8,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    pub fn max_deviation(&self) -> f64 {
        self.rows.iter().map(TableRow::deviation).fold(0.0, f64::max)
    }

    pub fn deviating(&self) -> impl Iterator<Item = &TableRow> {
        self.rows.iter().filter(|r| !r.within_tolerance())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("table,nu,beta,x,metric,printed,deviation,status\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{:.16e},{},{:.16e},{}\n",
                self.which,
                r.nu,
                r.beta,
                r.x,
                r.metric,
                r.printed,
                r.deviation(),
                if r.within_tolerance() { "ok" } else { "deviation" }
            ));
        }
        out
    }

    /// Rows `(nu, beta)`, columns `x`; deviating cells carry the printed
    /// value in brackets.
    pub fn to_markdown(&self) -> String {
        let mut xs: Vec<f64> = Vec::new();
        let mut keys: Vec<(f64, f64)> = Vec::new();
        for r in &self.rows {
            if !xs.contains(&r.x) {
                xs.push(r.x);
            }
            if !keys.contains(&(r.nu, r.beta)) {
                keys.push((r.nu, r.beta));
            }
        }
        let title = match self.which {
            1 => "1 - L/F (L: first five terms of the Struve-sum lower bound)",
            _ => "U/F - 1 (U = e^(-beta x) x^nu L_nu(x) / (1-beta))",
        };
        let mut out = format!("Table {}: {title}\n\n| (nu, beta) |", self.which);
        for x in &xs {
            out.push_str(&format!(" x = {x} |"));
        }
        out.push_str("\n|---|");
        out.push_str(&"---:|".repeat(xs.len()));
        out.push('\n');
        for (nu, beta) in keys {
            out.push_str(&format!("| ({nu}, {beta}) |"));
            for x in &xs {
                let r = self
                    .rows
                    .iter()
                    .find(|r| r.nu == nu && r.beta == beta && r.x == *x)
                    .expect("complete table");
                if r.within_tolerance() {
                    out.push_str(&format!(" {:.4} |", r.metric));
                } else {
                    out.push_str(&format!(" {:.4} [{:.4}] |", r.metric, r.printed));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Recomputes every cell of table 1 or 2.
pub fn reproduce_table(which: u8) -> Result<TableReport> {
    if which != 1 && which != 2 {
        return Err(domain("reproduce_table", format!("no table {which}")));
    }
    let cells: Vec<PrintedCell> = printed_cells().into_iter().filter(|c| c.table == which).collect();
    let rows = cells
        .par_iter()
        .map(|c| {
            Ok(TableRow {
                nu: c.nu,
                beta: c.beta,
                x: c.x,
                metric: table_metric(which, c.nu, c.beta, c.x)?,
                printed: c.value,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TableReport { which, rows })
}

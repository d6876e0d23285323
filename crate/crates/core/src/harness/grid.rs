//! Sweep grids and their `key=value` file format.

use crate::bounds::BoundId;
use crate::error::{domain, Result};

/// Points and bounds of a sweep. An empty `bound_filter` means every bound.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub nu_values: Vec<f64>,
    pub beta_values: Vec<f64>,
    pub x_values: Vec<f64>,
    pub bound_filter: Vec<BoundId>,
}

/// `n` log-spaced points from `a` to `b` inclusive.
pub fn log_spaced(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    let (la, lb) = (a.ln(), b.ln());
    (0..n)
        .map(|i| match i {
            0 => a,
            i if i == n - 1 => b,
            i => (la + (lb - la) * i as f64 / (n - 1) as f64).exp(),
        })
        .collect()
}

impl Default for GridSpec {
    /// Orders straddling every hypothesis boundary (-1/2, 0, 1/2, 3/2), five
    /// decay rates and 25 log-spaced points on `[0.05, 100]`.
    fn default() -> Self {
        GridSpec {
            nu_values: vec![-0.49, -0.25, -0.1, 0.0, 0.25, 0.5, 1.0, 1.5, 2.5, 5.0, 10.0],
            beta_values: vec![0.1, 0.25, 0.5, 0.75, 0.9],
            x_values: log_spaced(0.05, 100.0, 25),
            bound_filter: Vec::new(),
        }
    }
}

fn parse_list(key: &str, value: &str) -> Result<Vec<f64>> {
    let value = value.trim();
    if let Some(args) = value.strip_prefix("logspace(").and_then(|r| r.strip_suffix(')')) {
        let parts: Vec<&str> = args.split(',').map(str::trim).collect();
        if parts.len() == 3 {
            if let (Ok(a), Ok(b), Ok(n)) = (parts[0].parse(), parts[1].parse(), parts[2].parse()) {
                if a > 0.0 && b > 0.0 && n > 0 {
                    return Ok(log_spaced(a, b, n));
                }
            }
        }
        return Err(domain("GridSpec", format!("{key}: expected logspace(a, b, n), got {value:?}")));
    }
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| domain("GridSpec", format!("{key}: not a number: {s:?}")))
        })
        .collect()
}

impl GridSpec {
    /// Parses a grid file: one `key=value` per line with keys `nu`, `beta`,
    /// `x` (comma-separated numbers or `logspace(a, b, n)`) and `bounds`
    /// (comma-separated identifiers). `#` starts a comment; missing keys keep
    /// their default.
    pub fn parse(text: &str) -> Result<GridSpec> {
        let mut grid = GridSpec::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                domain("GridSpec", format!("line {}: expected key=value, got {line:?}", lineno + 1))
            })?;
            match key.trim() {
                "nu" => grid.nu_values = parse_list("nu", value)?,
                "beta" => grid.beta_values = parse_list("beta", value)?,
                "x" => grid.x_values = parse_list("x", value)?,
                "bounds" => {
                    grid.bound_filter = value
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(str::parse)
                        .collect::<Result<_>>()?
                }
                other => {
                    return Err(domain("GridSpec", format!("line {}: unknown key {other:?}", lineno + 1)))
                }
            }
        }
        grid.normalize()
    }

    /// Sorts and deduplicates the value lists and checks their domains.
    pub fn normalize(mut self) -> Result<GridSpec> {
        for (name, values) in [
            ("nu", &mut self.nu_values),
            ("beta", &mut self.beta_values),
            ("x", &mut self.x_values),
        ] {
            if values.is_empty() {
                return Err(domain("GridSpec", format!("{name} list is empty")));
            }
            if values.iter().any(|v| !v.is_finite()) {
                return Err(domain("GridSpec", format!("{name} values must be finite")));
            }
            values.sort_by(f64::total_cmp);
            values.dedup();
        }
        if self.nu_values.iter().any(|&v| v <= -1.5) {
            return Err(domain("GridSpec", "nu values must exceed -3/2"));
        }
        if self.beta_values.iter().any(|&v| !(0.0..=1.0).contains(&v)) {
            return Err(domain("GridSpec", "beta values must lie in [0, 1]"));
        }
        if self.x_values.iter().any(|&v| v <= 0.0) {
            return Err(domain("GridSpec", "x values must be positive"));
        }
        self.bound_filter.sort();
        self.bound_filter.dedup();
        Ok(self)
    }

    /// The bounds to sweep.
    pub fn bounds(&self) -> Vec<BoundId> {
        if self.bound_filter.is_empty() {
            BoundId::ALL.to_vec()
        } else {
            self.bound_filter.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_shape() {
        let g = GridSpec::default();
        assert_eq!(g.nu_values.len(), 11);
        assert_eq!(g.beta_values.len(), 5);
        assert_eq!(g.x_values.len(), 25);
        assert_eq!(g.x_values[0], 0.05);
        assert_eq!(g.x_values[24], 100.0);
        assert_eq!(g.bounds().len(), 28);
    }

    #[test]
    fn parses_grid_file() {
        let g = GridSpec::parse("# restricted\nbounds = LB-2.1\nnu=0\nbeta=0.5\nx=10, 5\n").unwrap();
        assert_eq!(g.bound_filter, vec![BoundId::LowerGammaSmallOrder]);
        assert_eq!(g.nu_values, vec![0.0]);
        assert_eq!(g.x_values, vec![5.0, 10.0]);
        let g = GridSpec::parse("x=logspace(1, 100, 3)").unwrap();
        assert!((g.x_values[1] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(GridSpec::parse("nu=").is_err());
        assert!(GridSpec::parse("nu=abc").is_err());
        assert!(GridSpec::parse("colour=red").is_err());
        assert!(GridSpec::parse("just words").is_err());
        assert!(GridSpec::parse("beta=1.5").is_err());
        assert!(GridSpec::parse("bounds=XX-1").is_err());
    }
}

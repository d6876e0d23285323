//! Sweeps of the bound catalog over a grid.

use rayon::prelude::*;

use super::grid::GridSpec;
use crate::bounds::{check, BoundId, BoundOptions, Margin, Status};
use crate::error::{Error, Result};

/// Value used for `beta` by bounds that do not depend on it.
const UNUSED_BETA: f64 = 0.0;

/// One checked `(bound, point)`. `beta` is `None` for bounds without `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckRow {
    pub id: BoundId,
    pub nu: f64,
    pub beta: Option<f64>,
    pub x: f64,
    pub margin: Margin,
}

/// Counts over a sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub checked: usize,
    pub strict: usize,
    pub inconclusive: usize,
    pub violated: usize,
}

impl Summary {
    pub fn inconclusive_fraction(&self) -> f64 {
        if self.checked == 0 {
            0.0
        } else {
            self.inconclusive as f64 / self.checked as f64
        }
    }
}

/// Rows sorted by `(id, nu, beta, x)` and their summary.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn violations(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| r.margin.status == Status::Violated)
    }
}

/// Options used for a bound at a point: the conventional `x_star` where one
/// is needed.
pub fn sweep_options(id: BoundId, beta: f64) -> BoundOptions {
    if id.spec().needs_x_star {
        BoundOptions::with_default_x_star(beta)
    } else {
        BoundOptions::default()
    }
}

/// The in-validity points of a grid, in sorted order.
pub fn grid_points(grid: &GridSpec) -> Vec<(BoundId, f64, Option<f64>, f64)> {
    let mut points = Vec::new();
    for id in grid.bounds() {
        let spec = id.spec();
        let betas: Vec<Option<f64>> = if spec.uses_beta {
            grid.beta_values.iter().copied().map(Some).collect()
        } else {
            vec![None]
        };
        for &nu in &grid.nu_values {
            for &beta in &betas {
                let b = beta.unwrap_or(UNUSED_BETA);
                for &x in &grid.x_values {
                    let opts = sweep_options(id, b);
                    if spec.check_validity(nu, b, x, opts.x_star).is_ok() {
                        points.push((id, nu, beta, x));
                    }
                }
            }
        }
    }
    points
}

/// Runs [`check`] at every in-validity point of the grid. Points are
/// evaluated in parallel; the report is sorted so it does not depend on
/// scheduling. An evaluation failure is returned with its point.
pub fn verify_all(grid: &GridSpec) -> Result<VerifyReport> {
    let points = grid_points(grid);
    let mut rows = points
        .par_iter()
        .map(|&(id, nu, beta, x)| {
            let b = beta.unwrap_or(UNUSED_BETA);
            let margin = check(id, nu, b, x, sweep_options(id, b)).map_err(|e| Error::AtPoint {
                context: format!("check {id}"),
                nu,
                beta: b,
                x,
                source: Box::new(e),
            })?;
            Ok(CheckRow { id, nu, beta, x, margin })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by(|a, b| {
        a.id.cmp(&b.id)
            .then(a.nu.total_cmp(&b.nu))
            .then(a.beta.unwrap_or(f64::NEG_INFINITY).total_cmp(&b.beta.unwrap_or(f64::NEG_INFINITY)))
            .then(a.x.total_cmp(&b.x))
    });
    let mut summary = Summary {
        checked: rows.len(),
        ..Summary::default()
    };
    for r in &rows {
        match r.margin.status {
            Status::Strict => summary.strict += 1,
            Status::Inconclusive => summary.inconclusive += 1,
            Status::Violated => summary.violated += 1,
        }
    }
    Ok(VerifyReport { rows, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restricted_grid_gives_two_strict_checks() {
        let grid = GridSpec::parse("bounds=LB-2.1\nnu=0\nbeta=0.5\nx=5,10").unwrap();
        let report = verify_all(&grid).unwrap();
        assert_eq!(
            report.summary,
            Summary {
                checked: 2,
                strict: 2,
                inconclusive: 0,
                violated: 0
            }
        );
        assert_eq!(report.rows[0].x, 5.0);
        assert_eq!(report.rows[0].beta, Some(0.5));
    }

    #[test]
    fn out_of_validity_grid_checks_nothing() {
        // LB-2.1 needs -1/2 < nu <= 0
        let grid = GridSpec::parse("bounds=LB-2.1\nnu=1\nbeta=0.5\nx=1").unwrap();
        assert_eq!(verify_all(&grid).unwrap().summary.checked, 0);
    }

    #[test]
    fn beta_free_bounds_are_checked_once_per_point() {
        let grid = GridSpec::parse("bounds=RB-3.1\nnu=1\nbeta=0.25,0.5,0.75\nx=1,2").unwrap();
        let report = verify_all(&grid).unwrap();
        assert_eq!(report.summary.checked, 2);
        assert!(report.rows.iter().all(|r| r.beta.is_none()));
    }

    #[test]
    fn x_star_bound_skips_points_below_threshold() {
        // default x_star = 2/(1 - 0.5) = 4
        let grid = GridSpec::parse("bounds=UB-3.8\nnu=0\nbeta=0.5\nx=1,3,4,8").unwrap();
        let report = verify_all(&grid).unwrap();
        let xs: Vec<f64> = report.rows.iter().map(|r| r.x).collect();
        assert_eq!(xs, vec![4.0, 8.0]);
    }
}

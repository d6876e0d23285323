//! Table reproduction, grid sweeps, tightness profiles and limiting-form
//! checks.

pub mod grid;
pub mod profile;
pub mod report;
pub mod tables;
pub mod verify;

pub use grid::{log_spaced, GridSpec};
pub use profile::{asymptotic_check, asymptotics_csv, sign_crossover, tightness_profile, AsymptoticRow, TightnessPoint};
pub use report::{checks_csv, tightness_csv, CHECK_HEADER};
pub use tables::{printed_cells, reproduce_table, table_metric, PrintedCell, TableReport, TableRow, TABLE_TOLERANCE, TABLE_TRUNCATION};
pub use verify::{grid_points, verify_all, CheckRow, Summary, VerifyReport};

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use struve_bounds::bounds::{eval_bound, BoundId, BoundOptions, BoundValue};
use struve_bounds::harness::{
    asymptotic_check, asymptotics_csv, checks_csv, reproduce_table, sign_crossover, tightness_csv,
    tightness_profile, verify_all, GridSpec, TABLE_TOLERANCE,
};
use struve_bounds::integral::{
    f_integral, g_integral, integral_beta0, integral_beta1, integral_quad, integral_series, IntegralSpec, QUAD_TOL,
};
use struve_bounds::specfun::{bessel_i_wide, bessel_k_wide, struve_l_wide};
use struve_bounds::{Error, ScaledReal};

/// Numerics and inequality checks for integrals of modified Struve functions.
#[derive(Parser)]
#[command(name = "struve-bounds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the relative-error tables and compare with the printed cells.
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: Option<u8>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Check every catalog bound over a grid.
    Verify {
        /// Grid file with `nu=`, `beta=`, `x=`, `bounds=` lines.
        #[arg(long)]
        grid: Option<std::path::PathBuf>,
        /// Restrict to these bound identifiers.
        #[arg(long, value_delimiter = ',')]
        bounds: Vec<BoundId>,
    },
    /// Evaluate one function or bound.
    ///
    /// NAME is F, G, F-quad, F-series, F-beta1, F-beta0, L, I, K or a bound
    /// identifier such as UB-GAU2.
    Eval {
        #[arg(long = "fn", value_name = "NAME")]
        name: String,
        #[arg(long, allow_negative_numbers = true)]
        nu: f64,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        x: f64,
    },
    /// Ratio of a bound to its reference along a list of x values.
    Tightness {
        #[arg(long)]
        bound: BoundId,
        #[arg(long, allow_negative_numbers = true)]
        nu: f64,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        #[arg(long, value_delimiter = ',', required = true)]
        xs: Vec<f64>,
        /// Number of terms for the Struve-sum lower bound.
        #[arg(long)]
        truncation: Option<usize>,
        /// Threshold for UB-3.8 (default 2/(1-beta)).
        #[arg(long)]
        x_star: Option<f64>,
    },
    /// Check the limiting forms at large and small x.
    Asymptotics,
}

enum Failure {
    Usage(String),
    Numeric(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Numeric(e)
    }
}

type Outcome = Result<bool, Failure>;

fn scaled_line(name: &str, nu: f64, beta: Option<f64>, x: f64, v: ScaledReal) -> String {
    format!(
        "{name},{nu},{},{x},{:.16e},{:.16e}",
        beta.map(|b| b.to_string()).unwrap_or_default(),
        v.mantissa(),
        v.exponent()
    )
}

fn run_tables(which: Option<u8>, format: Format) -> Outcome {
    let tables: Vec<u8> = which.map(|w| vec![w]).unwrap_or_else(|| vec![1, 2]);
    let mut ok = true;
    for (i, &t) in tables.iter().enumerate() {
        let report = reproduce_table(t)?;
        match format {
            Format::Csv => {
                let csv = report.to_csv();
                // one header for the whole stream
                print!("{}", if i == 0 { &csv[..] } else { csv.split_once('\n').map_or("", |(_, rest)| rest) });
            }
            Format::Md => {
                if i > 0 {
                    println!();
                }
                print!("{}", report.to_markdown());
            }
        }
        let bad: Vec<_> = report.deviating().collect();
        eprintln!(
            "table {t}: {} cells, max deviation {:.3e}, {} beyond {TABLE_TOLERANCE:e}",
            report.rows.len(),
            report.max_deviation(),
            bad.len()
        );
        for r in &bad {
            eprintln!(
                "  nu={} beta={} x={}: computed {:.6} printed {}",
                r.nu, r.beta, r.x, r.metric, r.printed
            );
        }
        ok &= bad.is_empty();
    }
    Ok(ok)
}

fn run_verify(grid: Option<std::path::PathBuf>, bounds: Vec<BoundId>) -> Outcome {
    let mut spec = match grid {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            GridSpec::parse(&text).map_err(|e| Failure::Usage(e.to_string()))?
        }
        None => GridSpec::default(),
    };
    if !bounds.is_empty() {
        spec.bound_filter = bounds;
        spec = spec.normalize().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let report = verify_all(&spec)?;
    print!("{}", checks_csv(&report.rows));
    let s = report.summary;
    eprintln!(
        "checked {}, strict {}, inconclusive {} ({:.2}%), violated {}",
        s.checked,
        s.strict,
        s.inconclusive,
        100.0 * s.inconclusive_fraction(),
        s.violated
    );
    for r in report.violations() {
        eprintln!(
            "  violated: {} nu={} beta={:?} x={} margin={:e}",
            r.id, r.nu, r.beta, r.x, r.margin.signed_margin
        );
    }
    Ok(s.violated == 0)
}

fn run_eval(name: &str, nu: f64, beta: Option<f64>, x: f64) -> Outcome {
    let need_beta = || beta.ok_or_else(|| Failure::Usage(format!("--beta is required for {name}")));
    let value = match name {
        "F" => f_integral(nu, need_beta()?, x)?,
        "G" => g_integral(nu, need_beta()?, x)?,
        "F-quad" => integral_quad(IntegralSpec::f(nu, need_beta()?, x), QUAD_TOL)?.value,
        "F-series" => integral_series(nu, need_beta()?, x)?,
        "F-beta1" => integral_beta1(nu, x)?,
        "F-beta0" => integral_beta0(nu, x)?,
        "L" => struve_l_wide(nu, x)?,
        "I" => bessel_i_wide(nu, x)?,
        "K" => bessel_k_wide(nu, x)?,
        other => {
            let id: BoundId = other
                .parse()
                .map_err(|_| Failure::Usage(format!("unknown function or bound {other:?}")))?;
            let b = if id.spec().uses_beta { need_beta()? } else { beta.unwrap_or(0.0) };
            let opts = if id.spec().needs_x_star {
                BoundOptions::with_default_x_star(b)
            } else {
                BoundOptions::default()
            };
            let value = eval_bound(id, nu, b, x, opts)?;
            match value {
                BoundValue::Single(v) => eprintln!("{id} = {:e}", v.to_f64()),
                BoundValue::Pair { lower, upper } => {
                    eprintln!("{id}: lower {:e}, upper {:e} (line shows lower)", lower.to_f64(), upper.to_f64())
                }
                BoundValue::Chain { inner, outer } => {
                    eprintln!("{id}: inner {:e}, outer {:e} (line shows inner)", inner.to_f64(), outer.to_f64())
                }
            }
            value.primary()
        }
    };
    println!("{}", scaled_line(name, nu, beta, x, value));
    eprintln!("name,nu,beta,x,mantissa,exponent: value = mantissa * e^exponent = {:e}", value.to_f64());
    Ok(true)
}

fn run_tightness(
    id: BoundId,
    nu: f64,
    beta: f64,
    xs: Vec<f64>,
    truncation: Option<usize>,
    x_star: Option<f64>,
) -> Outcome {
    let spec = id.spec();
    let x_star = x_star.or_else(|| spec.needs_x_star.then(|| BoundOptions::with_default_x_star(beta).x_star.unwrap()));
    let points = tightness_profile(id, nu, beta, &xs, BoundOptions { x_star, truncation })?;
    print!("{}", tightness_csv(id, nu, spec.uses_beta.then_some(beta), &points));
    if let (Some(first), Some(last)) = (points.first(), points.last()) {
        eprintln!("{id}: bound/reference {:.6e} at x={} .. {:.6e} at x={}", first.ratio, first.x, last.ratio, last.x);
    }
    if let Some(x) = sign_crossover(&points) {
        eprintln!("{id}: bound turns positive by x = {x}");
    }
    Ok(true)
}

fn run_asymptotics() -> Outcome {
    let rows = asymptotic_check()?;
    print!("{}", asymptotics_csv(&rows));
    let failed: Vec<_> = rows.iter().filter(|r| !r.pass()).collect();
    eprintln!("{} limiting-form checks, {} outside tolerance", rows.len(), failed.len());
    for r in &failed {
        eprintln!("  {} nu={} x={}: deviation {:e} > {:e}", r.law, r.nu, r.x, r.deviation(), r.tolerance);
    }
    Ok(failed.is_empty())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Tables { which, format } => run_tables(which, format),
        Command::Verify { grid, bounds } => run_verify(grid, bounds),
        Command::Eval { name, nu, beta, x } => run_eval(&name, nu, beta, x),
        Command::Tightness {
            bound,
            nu,
            beta,
            xs,
            truncation,
            x_star,
        } => run_tightness(bound, nu, beta, xs, truncation, x_star),
        Command::Asymptotics => run_asymptotics(),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Numeric(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

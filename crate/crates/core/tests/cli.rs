use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_struve-bounds"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn grid_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("struve-bounds-{}-{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn table_one_csv_has_84_rows_and_succeeds() {
    let o = run(&["tables", "--which", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 85);
    assert_eq!(lines[0], "table,nu,beta,x,metric,printed,deviation,status");
    assert!(lines[1].starts_with("1,1,0.25,0.5,"));
}

#[test]
fn table_deviation_forces_nonzero_exit() {
    let o = run(&["tables", "--which", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).matches(",deviation\n").count(), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("nu=10 beta=0.5 x=0.5"));
}

#[test]
fn markdown_mirrors_table_layout() {
    let out = stdout(&run(&["tables", "--which", "1", "--format", "md"]));
    assert!(out.contains("| (nu, beta) | x = 0.5 | x = 5 | x = 10 | x = 15 | x = 25 | x = 50 | x = 100 |"));
    assert_eq!(out.lines().filter(|l| l.starts_with("| (")).count(), 13);
}

#[test]
fn eval_prints_one_scaled_line() {
    let o = run(&["eval", "--fn", "F", "--nu", "1", "--beta", "0.25", "--x", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    let f: Vec<&str> = out.trim().split(',').collect();
    assert_eq!(&f[..4], &["F", "1", "0.25", "5"]);
    let value = f[4].parse::<f64>().unwrap() * f[5].parse::<f64>().unwrap().exp();
    // mpmath quadrature at 30 digits: 34.31504039619644529
    assert!((value / 34.315_040_396_196_445 - 1.0).abs() < 1e-11, "{value}");

    let o = run(&["eval", "--fn", "L", "--nu", "-0.5", "--x", "1"]);
    let f: Vec<f64> = stdout(&o).trim().split(',').skip(4).map(|s| s.parse().unwrap()).collect();
    let want = (2.0 / std::f64::consts::PI).sqrt() * 1f64.sinh();
    assert!((f[0] * f[1].exp() / want - 1.0).abs() < 1e-13);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["eval", "--fn", "F", "--nu", "1", "--x", "5"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--fn", "nope", "--nu", "1", "--x", "5"]).status.code(), Some(2));
    assert_eq!(run(&["tables", "--which", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--bounds", "XX-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--grid", "/nonexistent/grid.txt"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn numerical_failure_exits_one_with_point() {
    // LB-2.1 requires nu <= 0
    let o = run(&["tightness", "--bound", "LB-2.1", "--nu", "1", "--beta", "0.5", "--xs", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("x=2"));
}

#[test]
fn verify_on_grid_file() {
    let path = grid_file("grid.txt", "# two points\nbounds=LB-2.1\nnu=0\nbeta=0.5\nx=5,10\n");
    let o = run(&["verify", "--grid", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "bound_id,nu,beta,x,bound_value_log,reference_value_log,rel_margin,status");
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().skip(1).all(|l| l.starts_with("LB-2.1,") && l.ends_with(",strict")));
    assert!(String::from_utf8_lossy(&o.stderr).contains("checked 2, strict 2"));
    std::fs::remove_file(path).ok();
}

#[test]
fn bounds_flag_overrides_grid_filter() {
    let o = run(&["verify", "--bounds", "RB-3.1,IMON"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().skip(1).all(|l| l.starts_with("IMON,") || l.starts_with("RB-3.1,")));
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["tables", "--format", "md"][..],
        &["verify", "--bounds", "UB-3.8,PRB-KL1,NB-3.10"][..],
        &["tightness", "--bound", "LB-2.3", "--nu", "1", "--beta", "0.75", "--xs", "1,10,100,1000", "--truncation", "5"][..],
        &["asymptotics"][..],
    ] {
        let (a, b) = (run(args), run(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn asymptotics_pass() {
    let o = run(&["asymptotics"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn tightness_reports_ratio_column() {
    let o = run(&["tightness", "--bound", "UB-GAU2", "--nu", "1", "--beta", "0.25", "--xs", "0.01"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row = out.lines().nth(1).unwrap();
    let ratio: f64 = row.rsplit(',').next().unwrap().parse().unwrap();
    // U/F ~ 2(nu+1)/((1-beta)x)
    assert!((ratio / 533.333 - 1.0).abs() < 0.05, "{ratio}");
}

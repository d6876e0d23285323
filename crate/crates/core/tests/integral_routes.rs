use struve_bounds::integral::{
    f_integral, g_integral, integral_beta0, integral_beta1, integral_quad, integral_series,
    IntegralSpec, QUAD_TOL,
};
use struve_bounds::ScaledReal;

const GOLDEN: &str = include_str!("../data/integral_golden.csv");

fn rel(a: ScaledReal, b: ScaledReal) -> f64 {
    (a.ratio(&b) - 1.0).abs()
}

fn quad(nu: f64, beta: f64, x: f64) -> ScaledReal {
    integral_quad(IntegralSpec::f(nu, beta, x), QUAD_TOL).unwrap().value
}

#[test]
fn dispatchers_match_high_precision_oracle() {
    let mut rows = 0;
    for line in GOLDEN.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let nu: f64 = fields[1].parse().unwrap();
        let beta: f64 = fields[2].parse().unwrap();
        let x: f64 = fields[3].parse().unwrap();
        let expected = ScaledReal::new(fields[4].parse().unwrap(), fields[5].parse().unwrap());
        let got = match fields[0] {
            "F" => f_integral(nu, beta, x).unwrap(),
            "G" => g_integral(nu, beta, x).unwrap(),
            other => panic!("unknown kind {other}"),
        };
        let err = rel(got, expected);
        assert!(err < 1e-9, "{line}: got {got}, rel err {err:e}");
        rows += 1;
    }
    assert!(rows >= 150);
}

#[test]
fn series_agrees_with_quadrature_on_grid() {
    let mut worst: f64 = 0.0;
    for &nu in &[-0.49, -0.25, 0.0, 0.5, 1.0, 2.5, 5.0, 10.0] {
        for &beta in &[0.1, 0.25, 0.5, 0.75, 0.9] {
            for &x in &[0.5, 1.0, 2.0, 5.0, 10.0, 25.0] {
                let e = rel(integral_series(nu, beta, x).unwrap(), quad(nu, beta, x));
                assert!(e <= 1e-8, "nu={nu} beta={beta} x={x}: {e:e}");
                worst = worst.max(e);
            }
        }
    }
    assert!(worst > 0.0);
}

#[test]
fn beta1_closed_form_agrees_with_quadrature() {
    for &nu in &[-0.25, 0.5, 1.0, 2.5, 5.0] {
        for &x in &[0.5, 1.0, 5.0, 10.0, 50.0] {
            let e = rel(integral_beta1(nu, x).unwrap(), quad(nu, 1.0, x));
            assert!(e <= 1e-10, "nu={nu} x={x}: {e:e}");
        }
    }
}

#[test]
fn beta0_hypergeometric_agrees_with_quadrature() {
    for &nu in &[-0.9, -0.5, 0.0, 1.0, 3.5] {
        for &x in &[0.1, 2.0, 10.0, 30.0] {
            let e = rel(integral_beta0(nu, x).unwrap(), quad(nu, 0.0, x));
            assert!(e <= 1e-10, "nu={nu} x={x}: {e:e}");
        }
    }
}

#[test]
fn g_is_below_f_for_orders_from_minus_half() {
    for &nu in &[-0.5, 0.0, 1.0, 4.0] {
        for &beta in &[0.0, 0.3, 1.0] {
            for &x in &[0.2, 3.0, 40.0] {
                assert!(g_integral(nu, beta, x).unwrap() < f_integral(nu, beta, x).unwrap());
            }
        }
    }
}

use cfubini::analytic::*;
use cfubini::fubini::{c_numbers_upto, c_polys};
use cfubini::FubiniRoute;
use num_complex::Complex64;

#[test]
fn egf_matches_truncated_series() {
    let numbers = c_numbers_upto(20);
    let t: f64 = 0.1;
    let mut fact = 1.0;
    let mut sum = 0.0;
    for (m, c) in numbers.iter().enumerate() {
        if m > 0 {
            fact *= m as f64;
        }
        sum += c.to_f64() * t.powi(m as i32) / fact;
    }
    let g = egf_value(Complex64::new(t, 0.0), 1.0).unwrap();
    assert!((g.re - sum).abs() < 1e-12);
    assert!(g.im.abs() < 1e-15);
}

#[test]
fn integral_examples() {
    assert!((integral_representation(1, 0.5, 512).unwrap() - 0.5).abs() < 1e-8);
    assert!((integral_representation(2, 0.5, 512).unwrap() - 0.5).abs() < 1e-8);
    assert!((integral_representation(4, 0.3, 512).unwrap() - 0.3744).abs() < 1e-8);
}

#[test]
fn integral_matches_exact_polynomials() {
    let polys = c_polys(FubiniRoute::OddStepRecurrence, 8);
    for n in 1..=8 {
        for x in [0.1, 0.3, 0.5] {
            let quad = integral_representation(n, x, 512).unwrap();
            let exact = polys[n].eval_f64(x);
            assert!((quad - exact).abs() < 1e-7, "n = {n}, x = {x}: {quad} vs {exact}");
        }
    }
}

#[test]
fn integral_converges_in_panels() {
    for n in 1..=8 {
        for x in [-0.5, -0.2, 0.1, 0.3, 0.5] {
            let coarse = integral_representation(n, x, 256).unwrap();
            let fine = integral_representation(n, x, 512).unwrap();
            assert!((coarse - fine).abs() < 1e-10, "n = {n}, x = {x}");
        }
    }
}

#[test]
fn two_asymptotic_forms_agree() {
    let poles = find_dominant_poles(2).unwrap();
    for n in 0..=40 {
        let closed = asymptotic_estimate(n);
        let residues = pole_sum_estimate(n, &poles);
        assert!(((closed - residues) / closed).abs() < 1e-10, "n = {n}");
    }
}

#[test]
fn ratios_approach_one() {
    let reports = asymptotic_report(&[10, 16, 24]).unwrap();
    assert!((reports[0].ratio - 1.0).abs() < 0.01);
    assert!((reports[1].ratio - 1.0).abs() < 1e-4);
    assert!((reports[2].ratio - 1.0).abs() < 1e-6);
    assert!((reports[1].ratio - 1.0).abs() >= (reports[2].ratio - 1.0).abs() || (reports[2].ratio - 1.0).abs() < 1e-14);
    let zero = asymptotic_report(&[0]).unwrap();
    assert!(zero[0].estimate.is_finite() && zero[0].estimate > 0.0);
}

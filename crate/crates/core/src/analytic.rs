//! Floating-point checks on the generating function
//! `G(x; t) = 1 / (1 - 2x sinh(t/2))`: contour-integral representation of
//! `c_n(x)`, the poles of `G(1; t)`, and the pole-driven asymptotics of `c_n`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde_json::json;

use crate::error::{Error, Result};
use crate::fubini::c_numbers_upto;
use crate::quadrature::CompositeGaussLegendre;
use crate::rational::Rational;

/// Gauss–Legendre points per panel of the contour integral.
pub const POINTS_PER_PANEL: usize = 8;
pub const MIN_PANELS: usize = 64;
/// Largest `n` for which [`asymptotic_report`] computes exact values.
pub const MAX_REPORT_N: usize = 400;

const NEAR_POLE: f64 = 1e-12;
const NODE_NEAR_POLE: f64 = 1e-9;
const NEWTON_TOL: f64 = 1e-14;
const NEWTON_MAX_ITER: usize = 200;
/// Newton seeds for the real pole and the second pole in the upper half plane.
const POLE_SEEDS: [Complex64; 2] = [Complex64::new(1.0, 0.0), Complex64::new(-1.0, 6.0)];

pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

fn denominator(t: Complex64, x: f64) -> Complex64 {
    Complex64::new(1.0, 0.0) - 2.0 * x * (t / 2.0).sinh()
}

pub fn egf_value(t: Complex64, x: f64) -> Result<Complex64> {
    let d = denominator(t, x);
    if d.norm() < NEAR_POLE {
        return Err(Error::NearPole {
            t: t.to_string(),
            modulus: d.norm(),
        });
    }
    Ok(d.inv())
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product()
}

fn ln_factorial(n: usize) -> f64 {
    (1..=n).map(|k| (k as f64).ln()).sum()
}

/// `(2 n!/π) Im ∫_0^π sin(nθ) / (1 - 2x sinh(e^{iθ}/2)) dθ`, composite
/// Gauss–Legendre with `panels` subintervals.
pub fn integral_representation(n: usize, x: f64, panels: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidArgument("the contour integral needs n >= 1".into()));
    }
    if panels < MIN_PANELS {
        return Err(Error::InvalidArgument(format!(
            "at least {MIN_PANELS} panels required, got {panels}"
        )));
    }
    let rule = CompositeGaussLegendre::new(POINTS_PER_PANEL);
    let integral = rule.integrate(0.0, PI, panels, |theta| {
        let t = Complex64::from_polar(1.0, theta);
        let d = denominator(t, x);
        if d.norm() < NODE_NEAR_POLE {
            return Err(Error::NearPole {
                t: t.to_string(),
                modulus: d.norm(),
            });
        }
        Ok((n as f64 * theta).sin() / d)
    })?;
    Ok(2.0 * factorial_f64(n) / PI * integral.im)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleData {
    pub location: Complex64,
    pub residue: Complex64,
    pub modulus: f64,
}

impl PoleData {
    /// `|1 - 2 sinh(t/2)|` at the stored location.
    pub fn residual(&self) -> f64 {
        denominator(self.location, 1.0).norm()
    }
}

fn newton_pole(seed: Complex64) -> Result<Complex64> {
    let mut t = seed;
    let mut d = denominator(t, 1.0);
    for _ in 0..NEWTON_MAX_ITER {
        if d.norm() < NEWTON_TOL {
            return Ok(t);
        }
        let step = d / (-(t / 2.0).cosh());
        let mut lambda = 1.0;
        loop {
            let candidate = t - step * lambda;
            let dc = denominator(candidate, 1.0);
            if dc.norm() < d.norm() || lambda < 1e-6 {
                t = candidate;
                d = dc;
                break;
            }
            lambda *= 0.5;
        }
    }
    if d.norm() < NEWTON_TOL {
        Ok(t)
    } else {
        Err(Error::NoConvergence { seed: seed.to_string() })
    }
}

/// Poles of `1 / (1 - 2 sinh(t/2))` nearest the origin, by modulus.
///
/// The first is `2 ln φ`; the second, `2(iπ - ln φ)`, has a conjugate twin of
/// the same modulus that is not returned.
pub fn find_dominant_poles(count: usize) -> Result<Vec<PoleData>> {
    if !(1..=POLE_SEEDS.len()).contains(&count) {
        return Err(Error::InvalidArgument(format!("pole count must be 1 or 2, got {count}")));
    }
    let mut poles = POLE_SEEDS[..count]
        .iter()
        .map(|&seed| {
            let t = newton_pole(seed)?;
            // D'(t) = -cosh(t/2)
            let residue = -(t / 2.0).cosh().inv();
            Ok(PoleData {
                location: t,
                residue,
                modulus: t.norm(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    poles.sort_by(|a, b| a.modulus.total_cmp(&b.modulus));
    Ok(poles)
}

/// `n! Σ_i Re(-res_i · t_i^{-n-1})`
pub fn pole_sum_estimate(n: usize, poles: &[PoleData]) -> f64 {
    let s: f64 = poles
        .iter()
        .map(|p| (-p.residue * p.location.powi(-(n as i32) - 1)).re)
        .sum();
    factorial_f64(n) * s
}

/// `(n! / (2^n √5)) Re(ln(φ)^{-n-1} - (iπ + ln(φ - 1))^{-n-1})`
///
/// Infinite once `n!` leaves the `f64` range; see [`asymptotic_log_estimate`].
pub fn asymptotic_estimate(n: usize) -> f64 {
    let phi = golden_ratio();
    let a = Complex64::new(phi.ln(), 0.0);
    let b = Complex64::new((phi - 1.0).ln(), PI);
    let e = -(n as i32) - 1;
    let bracket = (a.powi(e) - b.powi(e)).re;
    factorial_f64(n) / (2f64.powi(n as i32) * 5f64.sqrt()) * bracket
}

/// Natural log of [`asymptotic_estimate`], finite for every `n`.
pub fn asymptotic_log_estimate(n: usize) -> f64 {
    let phi = golden_ratio();
    let ln_phi = phi.ln();
    let b = Complex64::new((phi - 1.0).ln(), PI);
    // second term relative to the first: (ln φ / b)^{n+1}, |·| ≈ 0.151
    let w = (Complex64::new(ln_phi, 0.0) / b).powi(n as i32 + 1);
    let correction = 1.0 - w.re;
    ln_factorial(n) - n as f64 * 2f64.ln() - 0.5 * 5f64.ln() - (n as f64 + 1.0) * ln_phi.ln()
        + correction.ln()
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub n: usize,
    pub exact: Rational,
    pub estimate: f64,
    /// `exact / estimate`, computed in log space when either side overflows.
    pub ratio: f64,
    pub poles_used: Vec<PoleData>,
}

impl AsymptoticReport {
    pub fn exact_decimal(&self) -> String {
        self.exact
            .to_decimal_string()
            .unwrap_or_else(|| self.exact.to_string())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "exact": self.exact_decimal(),
            "estimate": format!("{:e}", self.estimate),
            "ratio": format!("{}", self.ratio),
        })
    }
}

pub fn asymptotic_report(n_values: &[usize]) -> Result<Vec<AsymptoticReport>> {
    let Some(&max_n) = n_values.iter().max() else {
        return Ok(Vec::new());
    };
    if max_n > MAX_REPORT_N {
        return Err(Error::InvalidArgument(format!(
            "exact values are computed up to n = {MAX_REPORT_N}, got {max_n}"
        )));
    }
    let exact = c_numbers_upto(max_n);
    let poles = find_dominant_poles(2)?;
    Ok(n_values
        .iter()
        .map(|&n| {
            let estimate = asymptotic_estimate(n);
            let exact_f = exact[n].to_f64();
            let ratio = if estimate.is_finite() && exact_f.is_finite() {
                exact_f / estimate
            } else {
                (exact[n].ln_abs() - asymptotic_log_estimate(n)).exp()
            };
            AsymptoticReport {
                n,
                exact: exact[n].clone(),
                estimate,
                ratio,
                poles_used: poles.clone(),
            }
        })
        .collect())
}

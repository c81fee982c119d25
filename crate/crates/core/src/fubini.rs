//! Central Fubini-like polynomials `c_n(x) = Σ_k k! T(n,k) x^k` and numbers
//! `c_n = c_n(1)`, computed by several independent routes.
//!
//! Every route recomputes its own prerequisites. Nothing is cached across
//! routes, so agreement between two of them is real evidence.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::combinat::{binomial_q, binomial_row, factorial_q};
use crate::error::{Error, Result};
use crate::hessenberg::{hessenberg_leading_minors, toeplitz_entry};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::series::Series;
use crate::triangle::{build_central_T, build_stirling2, TriangleKind, TriangleTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FubiniRoute {
    /// `Σ_k k! T(n,k) x^k` from a central factorial table.
    Definition,
    /// `c_n = x Σ_{j<n} C(n,j) δ[0^{n-j}] c_j`
    BinomialRecurrence,
    /// `c_{n+1} = x Σ_k 4^{-k} C(n+1,2k+1) c_{n-2k}`
    OddStepRecurrence,
    /// `Σ_k k! x^k Σ_j C(n,j) (-k/2)^j S(n-j,k)`
    StirlingConnection,
    /// Two-step recurrence in `c_{n-2}` and its first two derivatives.
    SecondOrder,
    /// `n!` times a Toeplitz lower-Hessenberg determinant.
    Determinant,
    /// Coefficient extraction from `1 / (1 - 2x sinh(t/2))`.
    EgfSeries,
    /// `(-1)^n c_n(-x)`, using the definition route underneath.
    ParityReflection,
}

impl FubiniRoute {
    pub const ALL: [FubiniRoute; 8] = [
        FubiniRoute::Definition,
        FubiniRoute::BinomialRecurrence,
        FubiniRoute::OddStepRecurrence,
        FubiniRoute::StirlingConnection,
        FubiniRoute::SecondOrder,
        FubiniRoute::Determinant,
        FubiniRoute::EgfSeries,
        FubiniRoute::ParityReflection,
    ];

    /// The routes that compute `c_n(x)` from scratch.
    pub const EXACT: [FubiniRoute; 7] = [
        FubiniRoute::Definition,
        FubiniRoute::BinomialRecurrence,
        FubiniRoute::OddStepRecurrence,
        FubiniRoute::StirlingConnection,
        FubiniRoute::SecondOrder,
        FubiniRoute::Determinant,
        FubiniRoute::EgfSeries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FubiniRoute::Definition => "definition",
            FubiniRoute::BinomialRecurrence => "binomial_recurrence",
            FubiniRoute::OddStepRecurrence => "odd_step_recurrence",
            FubiniRoute::StirlingConnection => "stirling_connection",
            FubiniRoute::SecondOrder => "second_order",
            FubiniRoute::Determinant => "determinant",
            FubiniRoute::EgfSeries => "egf_series",
            FubiniRoute::ParityReflection => "parity_reflection",
        }
    }
}

impl fmt::Display for FubiniRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FubiniRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let route = match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "definition" | "def" => FubiniRoute::Definition,
            "binomial_recurrence" | "binomial" => FubiniRoute::BinomialRecurrence,
            "odd_step_recurrence" | "odd_step" => FubiniRoute::OddStepRecurrence,
            "stirling_connection" | "stirling" => FubiniRoute::StirlingConnection,
            "second_order" => FubiniRoute::SecondOrder,
            "determinant" | "det" => FubiniRoute::Determinant,
            "egf_series" | "egf" => FubiniRoute::EgfSeries,
            "parity_reflection" | "parity" => FubiniRoute::ParityReflection,
            other => return Err(Error::Parse(format!("unknown route {other:?}"))),
        };
        Ok(route)
    }
}

/// `δ[0^m] = (1/2)^m - (-1/2)^m`: zero for even `m`, `2^{1-m}` for odd `m`.
pub fn delta_zero_power(m: usize) -> Rational {
    let half = Rational::inv_pow2(1);
    half.pow(m as u32) - (-&half).pow(m as u32)
}

pub fn c_poly_definition(n: usize, table: &TriangleTable) -> Result<Poly> {
    table.require(TriangleKind::CentralT, n)?;
    Ok(Poly::from_coeffs(
        (0..=n).map(|k| factorial_q(k) * table.get(n, k)).collect(),
    ))
}

pub fn c_polys_definition(max_n: usize, table: &TriangleTable) -> Result<Vec<Poly>> {
    (0..=max_n).map(|n| c_poly_definition(n, table)).collect()
}

/// `c_0, ..., c_max_n` evaluated at `x = 1` with the odd-step recurrence on
/// scalars.
pub fn c_numbers_upto(max_n: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = vec![Rational::one()];
    for m in 0..max_n {
        let row = binomial_row(m + 1);
        let next: Rational = (0..=m / 2)
            .map(|k| Rational::inv_pow2(2 * k as u32) * Rational::from(row[2 * k + 1].clone()) * &out[m - 2 * k])
            .sum();
        out.push(next);
    }
    out
}

pub fn c_number(n: usize) -> Rational {
    c_numbers_upto(n).pop().expect("nonempty")
}

pub fn c_polys_binomial_recurrence(max_n: usize) -> Vec<Poly> {
    let deltas: Vec<Rational> = (0..=max_n).map(delta_zero_power).collect();
    let mut out = vec![Poly::one()];
    for n in 1..=max_n {
        let row = binomial_row(n);
        let sum = (0..n).fold(Poly::zero(), |acc, j| {
            let w = Rational::from(row[j].clone()) * &deltas[n - j];
            if w.is_zero() {
                acc
            } else {
                &acc + &out[j].scale(&w)
            }
        });
        out.push(sum.mul_x_pow(1));
    }
    out
}

pub fn c_poly_binomial_recurrence(n: usize) -> Poly {
    c_polys_binomial_recurrence(n).pop().expect("nonempty")
}

pub fn c_polys_odd_step_recurrence(max_n: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one()];
    for m in 0..max_n {
        let row = binomial_row(m + 1);
        let sum = (0..=m / 2).fold(Poly::zero(), |acc, k| {
            let w = Rational::inv_pow2(2 * k as u32) * Rational::from(row[2 * k + 1].clone());
            &acc + &out[m - 2 * k].scale(&w)
        });
        out.push(sum.mul_x_pow(1));
    }
    out
}

pub fn c_poly_odd_step_recurrence(n: usize) -> Poly {
    c_polys_odd_step_recurrence(n).pop().expect("nonempty")
}

/// The sum over `k` stops at `n`: `S(n-j,k)` vanishes for `k > n-j`.
pub fn c_poly_stirling(n: usize, stirling: &TriangleTable) -> Result<Poly> {
    stirling.require(TriangleKind::Stirling2, n)?;
    let row = binomial_row(n);
    let coeffs = (0..=n)
        .map(|k| {
            let minus_half_k = -Rational::new(k as i64, 2).expect("nonzero");
            let inner: Rational = (0..=n - k)
                .map(|j| {
                    Rational::from(row[j].clone())
                        * minus_half_k.pow(j as u32)
                        * stirling.get(n - j, k)
                })
                .sum();
            factorial_q(k) * inner
        })
        .collect();
    Ok(Poly::from_coeffs(coeffs))
}

pub fn c_polys_stirling(max_n: usize, stirling: &TriangleTable) -> Result<Vec<Poly>> {
    (0..=max_n).map(|n| c_poly_stirling(n, stirling)).collect()
}

/// `c_n = 2x^2 c_{n-2} + (x/4 + 4x^3) c'_{n-2} + (x^2/4 + x^4) c''_{n-2}`,
/// seeded by `c_0 = 1`, `c_1 = x`.
pub fn c_polys_second_order(max_n: usize) -> Vec<Poly> {
    let q = |p: i64, d: i64| Rational::new(p, d).expect("nonzero");
    let a = Poly::monomial(q(2, 1), 2);
    let b = Poly::from_coeffs(vec![q(0, 1), q(1, 4), q(0, 1), q(4, 1)]);
    let c = Poly::from_coeffs(vec![q(0, 1), q(0, 1), q(1, 4), q(0, 1), q(1, 1)]);
    let mut out = vec![Poly::one(), Poly::x()];
    for n in 2..=max_n {
        let prev = &out[n - 2];
        let d1 = prev.derivative();
        let d2 = d1.derivative();
        let next = &(&(&a * prev) + &(&b * &d1)) + &(&c * &d2);
        out.push(next);
    }
    out.truncate(max_n + 1);
    out
}

pub fn c_poly_second_order(n: usize) -> Poly {
    c_polys_second_order(n).pop().expect("nonempty")
}

/// `R(j) = x (-1)^{j-1} δ[0^j] / j!`, the Toeplitz symbol of the determinant
/// route. Vanishes for even `j`.
pub fn determinant_weight(j: usize) -> Poly {
    assert!(j >= 1, "weights start at j = 1");
    let sign = if j % 2 == 1 { Rational::one() } else { -Rational::one() };
    Poly::monomial(sign * delta_zero_power(j) / factorial_q(j), 1)
}

/// `c_0..c_max_n` from the leading minors of the Hessenberg matrix built on
/// `weights` (`weights[j-1] = R(j)`), scaled by `n!`.
pub fn c_polys_determinant_with(max_n: usize, weights: &[Poly]) -> Result<Vec<Poly>> {
    if weights.len() < max_n {
        return Err(Error::InvalidArgument(format!(
            "{} weights supplied for a determinant of order {max_n}",
            weights.len()
        )));
    }
    let minors = hessenberg_leading_minors(max_n, |i, j| toeplitz_entry(weights, i, j))?;
    Ok(minors
        .into_iter()
        .enumerate()
        .map(|(n, d)| d.scale(&factorial_q(n)))
        .collect())
}

pub fn c_polys_determinant(max_n: usize) -> Vec<Poly> {
    let weights: Vec<Poly> = (1..=max_n).map(determinant_weight).collect();
    c_polys_determinant_with(max_n, &weights).expect("Toeplitz weights are well-formed")
}

/// `n = 0` gives the empty determinant, 1.
pub fn c_poly_determinant(n: usize) -> Poly {
    c_polys_determinant(n).pop().expect("nonempty")
}

/// Coefficients `c_m(x) / m!` of `1 / (1 - 2x sinh(t/2))` up to `t^max_n`.
pub fn egf_series(max_n: usize) -> Series {
    let order = max_n + 1;
    let mut denom = vec![Poly::one()];
    for m in 1..order {
        if m % 2 == 1 {
            // 2 (1/2)^m / m!
            let c = Rational::inv_pow2(m as u32 - 1) / factorial_q(m);
            denom.push(Poly::monomial(-c, 1));
        } else {
            denom.push(Poly::zero());
        }
    }
    Series::from_coeffs(order, denom)
        .reciprocal()
        .expect("constant term is 1")
}

pub fn c_polys_from_egf(max_n: usize) -> Vec<Poly> {
    egf_series(max_n)
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, p)| p.scale(&factorial_q(m)))
        .collect()
}

pub fn c_poly_from_egf(n: usize) -> Poly {
    c_polys_from_egf(n).pop().expect("nonempty")
}

/// `(-1)^n c_n(-x)` with `c_n` from the definition route.
pub fn parity_reflect(n: usize) -> Poly {
    let table = build_central_T(n);
    let p = c_poly_definition(n, &table).expect("table covers n");
    parity_reflect_poly(n, &p)
}

pub fn parity_reflect_poly(n: usize, p: &Poly) -> Poly {
    let r = p.reflect();
    if n % 2 == 1 {
        -r
    } else {
        r
    }
}

/// `c_n(x)` by a single route.
pub fn c_poly(route: FubiniRoute, n: usize) -> Poly {
    c_polys(route, n).pop().expect("nonempty")
}

/// `c_0(x), ..., c_max_n(x)` by a single route.
pub fn c_polys(route: FubiniRoute, max_n: usize) -> Vec<Poly> {
    match route {
        FubiniRoute::Definition => {
            c_polys_definition(max_n, &build_central_T(max_n)).expect("table covers range")
        }
        FubiniRoute::BinomialRecurrence => c_polys_binomial_recurrence(max_n),
        FubiniRoute::OddStepRecurrence => c_polys_odd_step_recurrence(max_n),
        FubiniRoute::StirlingConnection => {
            c_polys_stirling(max_n, &build_stirling2(max_n)).expect("table covers range")
        }
        FubiniRoute::SecondOrder => c_polys_second_order(max_n),
        FubiniRoute::Determinant => c_polys_determinant(max_n),
        FubiniRoute::EgfSeries => c_polys_from_egf(max_n),
        FubiniRoute::ParityReflection => {
            let table = build_central_T(max_n);
            (0..=max_n)
                .map(|n| parity_reflect_poly(n, &c_poly_definition(n, &table).expect("covered")))
                .collect()
        }
    }
}

/// `x [(y + 1/2)^n - (y - 1/2)^n]` with `y^k` replaced by `polys[k]`.
pub fn umbral_check_with(n: usize, polys: &[Poly]) -> Poly {
    let row = binomial_row(n);
    let sum = (0..=n).fold(Poly::zero(), |acc, k| {
        let w = Rational::from(row[k].clone()) * delta_zero_power(n - k);
        if w.is_zero() {
            acc
        } else {
            &acc + &polys[k].scale(&w)
        }
    });
    sum.mul_x_pow(1)
}

pub fn umbral_check(n: usize) -> Poly {
    umbral_check_with(n, &c_polys(FubiniRoute::Definition, n))
}

/// `Σ_{j_0+...+j_k = n} multinomial(n; j_0..j_k) c_{j_0} ... c_{j_k}`,
/// enumerating every composition of `n` into `k + 1` parts.
fn multinomial_power_sum(n: usize, parts: usize, polys: &[Poly]) -> Poly {
    fn go(remaining: usize, parts_left: usize, coeff: Rational, acc: Poly, polys: &[Poly], out: &mut Poly) {
        if parts_left == 1 {
            let term = (&acc * &polys[remaining]).scale(&coeff);
            *out = &*out + &term;
            return;
        }
        for j in 0..=remaining {
            let c = &coeff * &binomial_q(remaining, j);
            go(remaining - j, parts_left - 1, c, &acc * &polys[j], polys, out);
        }
    }
    let mut out = Poly::zero();
    go(n, parts, Rational::one(), Poly::one(), polys, &mut out);
    out
}

/// `(c_n^{(r)}(x), (r!/x^r) Σ_k C(r,k) (-1)^{r-k} Σ multinomial · Π c_{j_i}(x))`.
/// The division by `x^r` is exact; a remainder is reported as
/// [`Error::NotDivisible`].
pub fn rth_derivative_identity_with(n: usize, r: usize, polys: &[Poly]) -> Result<(Poly, Poly)> {
    let lhs = polys[n].nth_derivative(r);
    let row = binomial_row(r);
    let sum = (0..=r).fold(Poly::zero(), |acc, k| {
        let term = multinomial_power_sum(n, k + 1, polys).scale(&Rational::from(row[k].clone()));
        if (r - k) % 2 == 1 {
            &acc - &term
        } else {
            &acc + &term
        }
    });
    let rhs = sum.div_x_pow(r)?.scale(&factorial_q(r));
    Ok((lhs, rhs))
}

pub fn rth_derivative_identity(n: usize, r: usize) -> Result<(Poly, Poly)> {
    rth_derivative_identity_with(n, r, &c_polys(FubiniRoute::Definition, n))
}

/// `(x c_n'(x), Σ_{k<n} C(n,k) c_k(x) c_{n-k}(x))`
pub fn derivative_convolution_with(n: usize, polys: &[Poly]) -> (Poly, Poly) {
    let lhs = polys[n].derivative().mul_x_pow(1);
    let row = binomial_row(n);
    let rhs = (0..n).fold(Poly::zero(), |acc, k| {
        &acc + &(&polys[k] * &polys[n - k]).scale(&Rational::from(row[k].clone()))
    });
    (lhs, rhs)
}

pub fn derivative_convolution(n: usize) -> (Poly, Poly) {
    derivative_convolution_with(n, &c_polys(FubiniRoute::Definition, n))
}

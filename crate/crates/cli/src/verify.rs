//! Cross-verification suite: every identity the library implements, checked
//! exactly where the math is exact and to a pinned tolerance where it is not.

use std::fmt;

use cfubini::analytic::{
    asymptotic_estimate, asymptotic_report, find_dominant_poles, golden_ratio,
    integral_representation, pole_sum_estimate,
};
use cfubini::combinat::{binomial, factorial, factorial_q};
use cfubini::format::poly_to_plain;
use cfubini::fubini::{
    c_numbers_upto, c_polys, c_polys_definition, c_polys_determinant_with, delta_zero_power,
    derivative_convolution_with, determinant_weight, parity_reflect_poly,
    rth_derivative_identity_with, umbral_check_with,
};
use cfubini::hessenberg::{cofactor_determinant, toeplitz_entry};
use cfubini::operators::{
    central_difference, central_factorial_poly, expand_in_basis, forward_difference, shift,
    BasisKind,
};
use cfubini::series::Series;
use cfubini::triangle::{build_central_T, build_stirling2, central_t_explicit};
use cfubini::{FubiniRoute, Poly, Rational, TriangleTable};
use num_traits::{One, Zero};
use serde_json::json;

use crate::output::{csv_line, OutputFormat};

pub const DEFAULT_MAX_N: usize = 20;

pub const INTEGRAL_TOL: f64 = 1e-7;
pub const INTEGRAL_PANELS: usize = 512;
pub const INTEGRAL_CONVERGENCE_TOL: f64 = 1e-10;
pub const INTEGRAL_POINTS: [f64; 3] = [0.1, 0.3, 0.5];
pub const POLE_TOL: f64 = 1e-10;
pub const POLE_RESIDUAL_TOL: f64 = 1e-12;
pub const ASYMPTOTIC_FORMS_TOL: f64 = 1e-10;
/// `(n, bound on |c_n / estimate - 1|)`
pub const RATIO_BOUNDS: [(usize, f64); 2] = [(16, 1e-4), (24, 1e-6)];
pub const RATIO_SEQUENCE: [usize; 5] = [8, 12, 16, 20, 24];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Measured,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Measured => "measured",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub name: &'static str,
    pub range: String,
    pub status: Status,
    /// Present exactly when `status` is `Fail`.
    pub counterexample: Option<String>,
    pub detail: Option<String>,
}

impl VerifyReport {
    fn pass(name: &'static str, range: impl Into<String>) -> Self {
        VerifyReport {
            name,
            range: range.into(),
            status: Status::Pass,
            counterexample: None,
            detail: None,
        }
    }

    fn fail(name: &'static str, range: impl Into<String>, counterexample: String) -> Self {
        VerifyReport {
            name,
            range: range.into(),
            status: Status::Fail,
            counterexample: Some(counterexample),
            detail: None,
        }
    }

    fn measured(name: &'static str, range: impl Into<String>, detail: String) -> Self {
        VerifyReport {
            name,
            range: range.into(),
            status: Status::Measured,
            counterexample: None,
            detail: Some(detail),
        }
    }

    fn from_result(name: &'static str, range: impl Into<String>, r: Result<(), String>) -> Self {
        match r {
            Ok(()) => VerifyReport::pass(name, range),
            Err(c) => VerifyReport::fail(name, range, c),
        }
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// Deliberate corruptions, used to show that the suite notices them.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Faults {
    /// Replace `T(n, k)` in the table the definition route reads.
    pub central_t: Option<(usize, usize, Rational)>,
    /// Replace the determinant symbol `R(j)` by `value · x`.
    pub determinant_weight: Option<(usize, Rational)>,
}

struct Context {
    max_n: usize,
    central_t: TriangleTable,
    weights: Vec<Poly>,
}

impl Context {
    fn new(max_n: usize, faults: &Faults) -> Result<Self, String> {
        let mut central_t = build_central_T(max_n);
        if let Some((n, k, v)) = &faults.central_t {
            central_t = central_t
                .with_entry(*n, *k, v.clone())
                .map_err(|e| format!("cannot inject T({n},{k}): {e}"))?;
        }
        let mut weights: Vec<Poly> = (1..=max_n).map(determinant_weight).collect();
        if let Some((j, v)) = &faults.determinant_weight {
            if *j == 0 || *j > max_n {
                return Err(format!("cannot inject R({j}): weights run over 1..={max_n}"));
            }
            weights[j - 1] = Poly::monomial(v.clone(), 1);
        }
        Ok(Context {
            max_n,
            central_t,
            weights,
        })
    }

    /// `c_0..c_max_n` by `route`, reading the possibly corrupted inputs.
    fn route_polys(&self, route: FubiniRoute) -> Vec<Poly> {
        match route {
            FubiniRoute::Definition => {
                c_polys_definition(self.max_n, &self.central_t).expect("table covers range")
            }
            FubiniRoute::Determinant => {
                c_polys_determinant_with(self.max_n, &self.weights).expect("weights cover range")
            }
            FubiniRoute::ParityReflection => self
                .route_polys(FubiniRoute::Definition)
                .iter()
                .enumerate()
                .map(|(n, p)| parity_reflect_poly(n, p))
                .collect(),
            other => c_polys(other, self.max_n),
        }
    }

    /// The polynomials the identity checks treat as known.
    fn trusted_polys(&self, upto: usize) -> Vec<Poly> {
        let mut v = self.route_polys(FubiniRoute::Definition);
        v.truncate(upto + 1);
        v
    }
}

type Check = fn(&Context) -> VerifyReport;

const CHECKS: &[Check] = &[
    check_central_t_routes,
    check_stirling_routes,
    check_central_t_shape,
    check_triangle_egfs,
    check_operator_identities,
    check_route_equivalence,
    check_polynomial_shape,
    check_number_recurrence,
    check_umbral,
    check_rth_derivative,
    check_derivative_convolution,
    check_determinant_oracle,
    check_integral_identity,
    check_integral_convergence,
    measure_integral_at_one,
    check_poles,
    check_asymptotic_forms,
    check_asymptotic_ratios,
];

/// Runs every check; sub-suites run concurrently but results come back in a
/// fixed order.
pub fn run_suite(max_n: usize, faults: &Faults) -> Result<Vec<VerifyReport>, String> {
    if max_n == 0 {
        return Err("max-n must be at least 1".into());
    }
    let ctx = Context::new(max_n, faults)?;
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS.iter().map(|check| s.spawn(|| check(&ctx))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect()
    });
    Ok(reports)
}

/// Number of checks `run_suite` reports.
pub fn check_count() -> usize {
    CHECKS.len()
}

pub fn any_failed(reports: &[VerifyReport]) -> bool {
    reports.iter().any(|r| r.status == Status::Fail)
}

pub fn render(reports: &[VerifyReport], fmt: OutputFormat) -> String {
    match fmt {
        OutputFormat::Plain => {
            let mut out = String::new();
            for r in reports {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Measured => "MEASURED",
                };
                out.push_str(&format!("{tag:<9}{:<28}{}", r.name, r.range));
                if let Some(c) = &r.counterexample {
                    out.push_str(&format!("\n         counterexample: {c}"));
                }
                if let Some(d) = &r.detail {
                    out.push_str(&format!("\n         {d}"));
                }
                out.push('\n');
            }
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            out.push_str(&format!("{} checks, {failed} failed\n", reports.len()));
            out
        }
        OutputFormat::Json => {
            let items: Vec<_> = reports
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "range": r.range,
                        "status": r.status.to_string(),
                        "counterexample": r.counterexample,
                        "detail": r.detail,
                    })
                })
                .collect();
            format!("{}\n", serde_json::Value::Array(items))
        }
        OutputFormat::Csv => {
            let mut out = String::from("name,range,status,counterexample,detail\n");
            for r in reports {
                let status = r.status.to_string();
                out.push_str(&csv_line([
                    r.name,
                    &r.range,
                    &status,
                    r.counterexample.as_deref().unwrap_or(""),
                    r.detail.as_deref().unwrap_or(""),
                ]));
                out.push('\n');
            }
            out
        }
    }
}

fn xn(n: usize) -> Poly {
    Poly::monomial(Rational::one(), n)
}

fn check_central_t_routes(ctx: &Context) -> VerifyReport {
    let range = format!("0<=k<=n<={}", ctx.max_n);
    let r = (|| {
        for n in 0..=ctx.max_n {
            let expansion = expand_in_basis(&xn(n), BasisKind::CentralFactorial);
            for k in 0..=n {
                let rec = ctx.central_t.get(n, k);
                let explicit = central_t_explicit(n, k);
                if rec != explicit {
                    return Err(format!("T({n},{k}): recurrence={rec} vs explicit_sum={explicit}"));
                }
                if rec != expansion[k] {
                    return Err(format!(
                        "T({n},{k}): recurrence={rec} vs basis_expansion={}",
                        expansion[k]
                    ));
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("central_t_three_routes", range, r)
}

fn check_stirling_routes(ctx: &Context) -> VerifyReport {
    let table = build_stirling2(ctx.max_n);
    let r = (|| {
        for n in 0..=ctx.max_n {
            let expansion = expand_in_basis(&xn(n), BasisKind::FallingFactorial);
            for k in 0..=n {
                if table.get(n, k) != expansion[k] {
                    return Err(format!(
                        "S({n},{k}): recurrence={} vs basis_expansion={}",
                        table.get(n, k),
                        expansion[k]
                    ));
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("stirling2_two_routes", format!("0<=k<=n<={}", ctx.max_n), r)
}

fn check_central_t_shape(ctx: &Context) -> VerifyReport {
    let r = (|| {
        for n in 0..=ctx.max_n {
            for k in 0..=n {
                let t = ctx.central_t.get(n, k);
                if (n - k) % 2 == 1 && !t.is_zero() {
                    return Err(format!("T({n},{k}) = {t}, expected 0 for odd n-k"));
                }
                if !t.is_dyadic() {
                    return Err(format!("T({n},{k}) = {t} has a non-dyadic denominator"));
                }
                if n % 2 == 0 && k % 2 == 0 && !t.is_integer() {
                    return Err(format!("T({n},{k}) = {t} is not an integer"));
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("central_t_parity_dyadic", format!("n<={}", ctx.max_n), r)
}

fn check_triangle_egfs(ctx: &Context) -> VerifyReport {
    let order = (ctx.max_n + 1).min(16);
    let stirling = build_stirling2(ctx.max_n);
    let half = Rational::new(1, 2).expect("nonzero");
    let exp_minus_one = Series::exp_linear(order, &Rational::one())
        .sub(&Series::one(order))
        .expect("same order");
    let two_sinh = Series::exp_linear(order, &half)
        .sub(&Series::exp_linear(order, &-&half))
        .expect("same order");
    let column = |k: usize, get: &dyn Fn(usize, usize) -> Rational| {
        Series::from_scalars(order, (0..order).map(|n| &get(n, k) / &factorial_q(n)))
    };
    let r = (|| {
        for k in 0..order {
            let inv_k = Rational::one() / factorial_q(k);
            if column(k, &|n, k| stirling.get(n, k)) != exp_minus_one.pow(k).scale(&inv_k) {
                return Err(format!("S(., {k}) column vs (e^t-1)^{k}/{k}!"));
            }
            if column(k, &|n, k| ctx.central_t.get(n, k)) != two_sinh.pow(k).scale(&inv_k) {
                return Err(format!("T(., {k}) column vs (2 sinh(t/2))^{k}/{k}!"));
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("triangle_column_egfs", format!("order {order}"), r)
}

fn check_operator_identities(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(20);
    let half = Rational::new(1, 2).expect("nonzero");
    let r = (|| {
        for n in 1..=upto {
            let lhs = central_difference(&central_factorial_poly(n));
            if lhs != central_factorial_poly(n - 1).scale(&Rational::from(n)) {
                return Err(format!("delta x^[{n}] != {n} x^[{}]", n - 1));
            }
            let p = xn(n);
            let binom = Poly::from_coeffs((0..n).map(|k| Rational::from(binomial(n, k))).collect());
            if forward_difference(&p) != binom {
                return Err(format!("Delta x^{n} != sum_k C({n},k) x^k"));
            }
            if central_difference(&p) != forward_difference(&shift(&p, &-&half)) {
                return Err(format!("delta x^{n} != Delta E^(-1/2) x^{n}"));
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("operator_identities", format!("1<=n<={upto}"), r)
}

fn check_route_equivalence(ctx: &Context) -> VerifyReport {
    let computed: Vec<(FubiniRoute, Vec<Poly>)> = FubiniRoute::ALL
        .iter()
        .map(|&r| (r, ctx.route_polys(r)))
        .collect();
    let r = (|| {
        for n in 0..=ctx.max_n {
            let (base_route, base) = &computed[0];
            for (route, polys) in &computed[1..] {
                if polys[n] != base[n] {
                    return Err(format!(
                        "n={n}: {base_route}=[{}] vs {route}=[{}]",
                        poly_to_plain(&base[n]),
                        poly_to_plain(&polys[n])
                    ));
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("route_equivalence", format!("n<={} ({} routes)", ctx.max_n, computed.len()), r)
}

fn check_polynomial_shape(ctx: &Context) -> VerifyReport {
    let polys = ctx.route_polys(FubiniRoute::OddStepRecurrence);
    let r = (|| {
        for (n, p) in polys.iter().enumerate() {
            if !p.has_parity(n) {
                return Err(format!("c_{n}(x) has a term of the wrong parity"));
            }
            if p.degree() != Some(n) || p.leading_coeff() != Rational::from(factorial(n)) {
                return Err(format!("c_{n}(x) does not have degree {n} with leading coefficient {n}!"));
            }
            if n >= 1 {
                let scaled = p.scale(&Rational::from(num_bigint::BigInt::one() << (n - 1)));
                if !scaled.coeffs().iter().all(Rational::is_integer) {
                    return Err(format!("2^{} c_{n}(x) has non-integer coefficients", n - 1));
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("parity_degree_dyadic", format!("n<={}", ctx.max_n), r)
}

fn check_number_recurrence(ctx: &Context) -> VerifyReport {
    let from_polys: Vec<Rational> = ctx
        .trusted_polys(ctx.max_n)
        .iter()
        .map(|p| p.eval(&Rational::one()))
        .collect();
    let scalar = c_numbers_upto(ctx.max_n);
    let r = (|| {
        for n in 0..=ctx.max_n {
            if from_polys[n] != scalar[n] {
                return Err(format!(
                    "c_{n}: definition(1)={} vs odd_step_numbers={}",
                    from_polys[n], scalar[n]
                ));
            }
            if n >= 1 {
                let rhs: Rational = (0..n)
                    .map(|j| Rational::from(binomial(n, j)) * delta_zero_power(n - j) * &scalar[j])
                    .sum();
                if rhs != scalar[n] {
                    return Err(format!("c_{n}={} vs binomial_sum={rhs}", scalar[n]));
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("number_recurrence", format!("n<={}", ctx.max_n), r)
}

fn check_umbral(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(25);
    let polys = ctx.trusted_polys(upto);
    let r = (1..=upto).try_for_each(|n| {
        let u = umbral_check_with(n, &polys);
        if u != polys[n] {
            return Err(format!("n={n}: umbral=[{}] vs definition=[{}]", poly_to_plain(&u), poly_to_plain(&polys[n])));
        }
        Ok(())
    });
    VerifyReport::from_result("umbral", format!("1<=n<={upto}"), r)
}

fn check_rth_derivative(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(12);
    let polys = ctx.trusted_polys(upto);
    let r = (|| {
        for r in 1..=4usize.min(upto) {
            for n in r..=upto {
                match rth_derivative_identity_with(n, r, &polys) {
                    Ok((lhs, rhs)) if lhs == rhs => {}
                    Ok((lhs, rhs)) => {
                        return Err(format!(
                            "(n,r)=({n},{r}): derivative=[{}] vs multinomial_sum=[{}]",
                            poly_to_plain(&lhs),
                            poly_to_plain(&rhs)
                        ))
                    }
                    Err(e) => return Err(format!("(n,r)=({n},{r}): {e}")),
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("rth_derivative", format!("1<=r<=4, r<=n<={upto}"), r)
}

fn check_derivative_convolution(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(25);
    let polys = ctx.trusted_polys(upto);
    let r = (1..=upto).try_for_each(|n| {
        let (lhs, rhs) = derivative_convolution_with(n, &polys);
        if lhs != rhs {
            return Err(format!("n={n}: x c_n'=[{}] vs convolution=[{}]", poly_to_plain(&lhs), poly_to_plain(&rhs)));
        }
        Ok(())
    });
    VerifyReport::from_result("derivative_convolution", format!("1<=n<={upto}"), r)
}

fn check_determinant_oracle(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(6);
    let via_recurrence = ctx.route_polys(FubiniRoute::Determinant);
    let r = (1..=upto).try_for_each(|n| {
        let dense: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| toeplitz_entry(&ctx.weights, i, j)).collect())
            .collect();
        let cofactor = cofactor_determinant(&dense).scale(&factorial_q(n));
        if cofactor != via_recurrence[n] {
            return Err(format!(
                "order {n}: hessenberg_recurrence=[{}] vs cofactor=[{}]",
                poly_to_plain(&via_recurrence[n]),
                poly_to_plain(&cofactor)
            ));
        }
        Ok(())
    });
    VerifyReport::from_result("determinant_cofactor_oracle", format!("order<={upto}"), r)
}

fn check_integral_identity(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(8);
    let polys = ctx.route_polys(FubiniRoute::OddStepRecurrence);
    let mut worst = 0.0f64;
    let r = (|| {
        for n in 1..=upto {
            for x in INTEGRAL_POINTS {
                let quad = integral_representation(n, x, INTEGRAL_PANELS).map_err(|e| e.to_string())?;
                let exact = polys[n].eval_f64(x);
                let err = (quad - exact).abs();
                worst = worst.max(err);
                if err >= INTEGRAL_TOL {
                    return Err(format!("n={n}, x={x}: quadrature={quad} vs exact={exact}"));
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("integral_representation", format!("1<=n<={upto}, x in {{0.1,0.3,0.5}}"), r)
        .with_detail(format!("max |error| = {worst:.3e} (tolerance {INTEGRAL_TOL:e})"))
}

fn check_integral_convergence(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(8);
    let r = (|| {
        for n in 1..=upto {
            for x in [-0.5, 0.1, 0.3, 0.5] {
                let coarse = integral_representation(n, x, 256).map_err(|e| e.to_string())?;
                let fine = integral_representation(n, x, 512).map_err(|e| e.to_string())?;
                if (coarse - fine).abs() >= INTEGRAL_CONVERGENCE_TOL {
                    return Err(format!("n={n}, x={x}: 256 panels={coarse} vs 512 panels={fine}"));
                }
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("integral_panel_convergence", format!("1<=n<={upto}"), r)
}

fn measure_integral_at_one(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(6);
    let polys = ctx.route_polys(FubiniRoute::OddStepRecurrence);
    let parts: Vec<String> = (1..=upto)
        .map(|n| match integral_representation(n, 1.0, INTEGRAL_PANELS) {
            Ok(q) => {
                let exact = polys[n].eval_f64(1.0);
                format!("n={n}: quadrature={q:.6} exact={exact} diff={:.3e}", q - exact)
            }
            Err(e) => format!("n={n}: {e}"),
        })
        .collect();
    VerifyReport::measured("integral_at_x_equals_1", format!("1<=n<={upto}"), parts.join("; "))
}

fn check_poles(_ctx: &Context) -> VerifyReport {
    let r = (|| {
        let poles = find_dominant_poles(2).map_err(|e| e.to_string())?;
        let t0 = 2.0 * golden_ratio().ln();
        if (poles[0].location.re - t0).abs() >= POLE_TOL || poles[0].location.im.abs() >= POLE_TOL {
            return Err(format!("first pole {} vs 2 ln(phi) = {t0}", poles[0].location));
        }
        for p in &poles {
            if p.residual() >= POLE_RESIDUAL_TOL {
                return Err(format!("|1 - 2 sinh(t/2)| = {:e} at t = {}", p.residual(), p.location));
            }
            if p.residue.norm() == 0.0 {
                return Err(format!("zero residue at {}", p.location));
            }
        }
        if (poles[0].location - poles[1].location).norm() < 1e-6 {
            return Err("poles are not distinct".into());
        }
        Ok(format!(
            "t0={:.10}, res0={:.10}, t1={:.6}, |t1|={:.6}",
            poles[0].location.re, poles[0].residue.re, poles[1].location, poles[1].modulus
        ))
    })();
    match r {
        Ok(d) => VerifyReport::pass("dominant_poles", "2 poles").with_detail(d),
        Err(c) => VerifyReport::fail("dominant_poles", "2 poles", c),
    }
}

fn check_asymptotic_forms(ctx: &Context) -> VerifyReport {
    let upto = ctx.max_n.min(150);
    let r = (|| {
        let poles = find_dominant_poles(2).map_err(|e| e.to_string())?;
        for n in 0..=upto {
            let closed = asymptotic_estimate(n);
            let residues = pole_sum_estimate(n, &poles);
            let rel = ((closed - residues) / closed).abs();
            if rel >= ASYMPTOTIC_FORMS_TOL {
                return Err(format!("n={n}: closed_form={closed:e} vs residue_sum={residues:e}"));
            }
        }
        Ok(())
    })();
    VerifyReport::from_result("asymptotic_two_forms", format!("n<={upto}"), r)
}

fn check_asymptotic_ratios(_ctx: &Context) -> VerifyReport {
    let range = "n in {8,12,16,20,24}";
    let reports = match asymptotic_report(&RATIO_SEQUENCE) {
        Ok(r) => r,
        Err(e) => return VerifyReport::fail("asymptotic_ratio", range, e.to_string()),
    };
    let dev: Vec<f64> = reports.iter().map(|r| (r.ratio - 1.0).abs()).collect();
    let inversions = dev.windows(2).filter(|w| w[1] > w[0]).count();
    let detail = format!(
        "|ratio-1| = [{}], inversions = {inversions}",
        dev.iter().map(|d| format!("{d:.2e}")).collect::<Vec<_>>().join(", ")
    );
    for (n, bound) in RATIO_BOUNDS {
        let i = RATIO_SEQUENCE.iter().position(|&m| m == n).expect("bounded n is in the sequence");
        if dev[i] >= bound {
            return VerifyReport::fail("asymptotic_ratio", range, format!("n={n}: |ratio-1|={:e} >= {bound:e}", dev[i]))
                .with_detail(detail);
        }
    }
    if inversions > 1 {
        return VerifyReport::fail("asymptotic_ratio", range, format!("{inversions} monotonicity inversions"))
            .with_detail(detail);
    }
    VerifyReport::pass("asymptotic_ratio", range).with_detail(detail)
}

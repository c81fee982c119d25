//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use cfubini::analytic::{
    asymptotic_estimate, find_dominant_poles, golden_ratio, integral_representation,
    pole_sum_estimate,
};
use cfubini::combinat::{binomial_q, factorial_q};
use cfubini::fubini::{
    c_number, c_poly, c_polys, derivative_convolution, rth_derivative_identity, umbral_check,
};
use cfubini::operators::{expand_in_basis, BasisKind};
use cfubini::triangle::{build_central_T, build_stirling2, central_t_explicit};
use cfubini::{FubiniRoute, Poly, Rational, Series};

fn cfubini(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfubini"))
        .args(args)
        .output()
        .expect("spawn cfubini")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

type Outcome = Result<String, String>;

fn within(limit: Duration, start: Instant, detail: String) -> Outcome {
    let elapsed = start.elapsed();
    if elapsed < limit {
        Ok(format!("{detail} in {:.2?}", elapsed))
    } else {
        Err(format!("{detail} but took {:.2?} (limit {:?})", elapsed, limit))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

const TABLE: [&str; 10] = [
    "1",
    "x",
    "2 x²",
    "x+24 x³",
    "2 x²+24 x⁴",
    "x+240 x³+1920 x⁵",
    "2 x²+120 x⁴+720 x⁶",
    "x+2184 x³+67200 x⁵+322560 x⁷",
    "2 x²+504 x⁴+10080 x⁶+40320 x⁸",
    "x+19680 x³+1854720 x⁵+27095040 x⁷+92897280 x⁹",
];

/// Superscript digits to the caret form the CLI prints.
fn to_caret(s: &str) -> String {
    let mut out = String::new();
    let mut in_exp = false;
    for ch in s.chars() {
        let digit = "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|c| c == ch);
        match digit {
            Some(d) => {
                if !in_exp {
                    out.push('^');
                    in_exp = true;
                }
                out.push(char::from(b'0' + d as u8));
            }
            None => {
                in_exp = false;
                out.push(ch);
            }
        }
    }
    out
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    for (n, expected) in TABLE.iter().enumerate() {
        let n_arg = n.to_string();
        let mut args = vec!["poly", "--n", &n_arg];
        if n % 2 == 1 {
            args.push("--scaled");
        }
        let o = cfubini(&args);
        let got = stdout(&o);
        let want = to_caret(expected);
        ensure(o.status.success() && got.trim_end() == want, || {
            format!("n={n}: got {:?}, expected {:?}", got.trim_end(), want)
        })?;
    }
    within(Duration::from_secs(1), start, "rows n=0..9 match".into())
}

const EVEN: [&str; 9] = [
    "1",
    "2",
    "26",
    "842",
    "50906",
    "4946282",
    "704888186",
    "138502957322",
    "35887046307866",
];

const ODD_SCALED: [&str; 8] = [
    "1",
    "25",
    "2161",
    "391945",
    "121866721",
    "57890223865",
    "38999338931281",
    "35367467110007785",
];

fn sequence_reproduction() -> Outcome {
    let start = Instant::now();
    let o = cfubini(&["numbers", "--upto", "16", "--scaled", "--format", "csv"]);
    let out = stdout(&o);
    let values: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap_or(""))
        .collect();
    ensure(o.status.success() && values.len() == 17, || {
        format!("expected 17 values, got {}", values.len())
    })?;
    for (i, want) in EVEN.iter().enumerate() {
        ensure(values[2 * i] == *want, || {
            format!("c_{} = {}, expected {want}", 2 * i, values[2 * i])
        })?;
    }
    for (i, want) in ODD_SCALED.iter().enumerate() {
        ensure(values[2 * i + 1] == *want, || {
            format!("4^{i} c_{} = {}, expected {want}", 2 * i + 1, values[2 * i + 1])
        })?;
    }
    within(Duration::from_secs(1), start, "17 values match".into())
}

fn route_equivalence() -> Outcome {
    let start = Instant::now();
    const MAX_N: usize = 40;
    let reference = c_polys(FubiniRoute::Definition, MAX_N);
    for route in FubiniRoute::EXACT {
        let polys = c_polys(route, MAX_N);
        for n in 0..=MAX_N {
            ensure(polys[n] == reference[n], || format!("{route} differs at n={n}"))?;
        }
    }
    for n in 0..=MAX_N {
        ensure(c_poly(FubiniRoute::ParityReflection, n) == reference[n], || {
            format!("parity reflection differs at n={n}")
        })?;
    }
    for n in 1..=25 {
        ensure(umbral_check(n) == reference[n], || format!("umbral fails at n={n}"))?;
        let (l, r) = derivative_convolution(n);
        ensure(l == r, || format!("derivative convolution fails at n={n}"))?;
    }
    for r in 1..=4 {
        for n in r..=12 {
            let (l, rhs) = rth_derivative_identity(n, r).map_err(|e| e.to_string())?;
            ensure(l == rhs, || format!("r-th derivative identity fails at n={n}, r={r}"))?;
        }
    }
    // the CLI suite covers the same ground and must agree
    let o = cfubini(&["verify", "--max-n", "40"]);
    ensure(o.status.success(), || format!("verify --max-n 40 failed:\n{}", stdout(&o)))?;
    within(
        Duration::from_secs(60),
        start,
        format!("{} exact routes agree for n<=40; identities hold", FubiniRoute::EXACT.len()),
    )
}

fn power(n: usize) -> Poly {
    Poly::monomial(Rational::from_integer(1), n)
}

/// Column k of a triangle as an EGF, truncated to `order` terms.
fn column_egf(order: usize, k: usize, get: impl Fn(usize, usize) -> Rational) -> Series {
    Series::from_scalars(order, (0..order).map(|n| get(n, k) / factorial_q(n)))
}

fn triangle_equivalence() -> Outcome {
    let start = Instant::now();
    const MAX_N: usize = 30;
    const ORDER: usize = 16; // terms t^0 .. t^15
    let t = build_central_T(MAX_N);
    let s = build_stirling2(MAX_N);
    for n in 0..=MAX_N {
        let central = expand_in_basis(&power(n), BasisKind::CentralFactorial);
        let falling = expand_in_basis(&power(n), BasisKind::FallingFactorial);
        for k in 0..=n {
            let explicit_t = central_t_explicit(n, k);
            ensure(t.get(n, k) == explicit_t && central[k] == explicit_t, || {
                format!("T({n},{k}) disagrees across routes")
            })?;
            // S(n,k) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^n
            let explicit_s: Rational = (0..=k)
                .map(|j| {
                    let term = binomial_q(k, j) * Rational::from_integer(j as i64).pow(n as u32);
                    if (k - j) % 2 == 0 { term } else { -term }
                })
                .sum::<Rational>()
                / factorial_q(k);
            ensure(s.get(n, k) == explicit_s && falling[k] == explicit_s, || {
                format!("S({n},{k}) disagrees across routes")
            })?;
        }
    }
    // sum_n T(n,k) t^n/n! = (2 sinh(t/2))^k / k!,  sum_n S(n,k) t^n/n! = (e^t - 1)^k / k!
    let half = Rational::new(1, 2).unwrap();
    let two_sinh = Series::exp_linear(ORDER, &half)
        .sub(&Series::exp_linear(ORDER, &-half.clone()))
        .map_err(|e| e.to_string())?;
    let exp_minus_one = Series::exp_linear(ORDER, &Rational::from_integer(1))
        .sub(&Series::one(ORDER))
        .map_err(|e| e.to_string())?;
    for k in 0..ORDER {
        let want_t = two_sinh.pow(k).scale(&(Rational::from_integer(1) / factorial_q(k)));
        ensure(column_egf(ORDER, k, |n, k| t.get(n, k)) == want_t, || {
            format!("T column {k} EGF mismatch")
        })?;
        let want_s = exp_minus_one.pow(k).scale(&(Rational::from_integer(1) / factorial_q(k)));
        ensure(column_egf(ORDER, k, |n, k| s.get(n, k)) == want_s, || {
            format!("S column {k} EGF mismatch")
        })?;
    }
    within(
        Duration::from_secs(10),
        start,
        "T and S agree three ways for n<=30; column EGFs to t^15".into(),
    )
}

fn integral_representation_check() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0_f64;
    for n in 1..=8 {
        let exact = c_poly(FubiniRoute::Definition, n);
        for x in [0.1, 0.3, 0.5] {
            let q = integral_representation(n, x, 512).map_err(|e| e.to_string())?;
            let err = (q - exact.eval_f64(x)).abs();
            worst = worst.max(err);
            ensure(err < 1e-7, || format!("n={n}, x={x}: |error| = {err:e}"))?;
        }
    }
    let at_one: Vec<String> = (1..=8)
        .map(|n| {
            let exact = c_number(n).to_f64();
            match integral_representation(n, 1.0, 512) {
                Ok(q) => format!("n={n}: {:+.3e}", q - exact),
                Err(e) => format!("n={n}: {e}"),
            }
        })
        .collect();
    within(
        Duration::from_secs(5),
        start,
        format!(
            "max |error| {worst:.2e}; at x=1 (measured only) {}",
            at_one.join(", ")
        ),
    )
}

fn asymptotics() -> Outcome {
    let start = Instant::now();
    let poles = find_dominant_poles(2).map_err(|e| e.to_string())?;
    let t0 = poles[0].location;
    let target = 2.0 * golden_ratio().ln();
    ensure((t0.re - target).abs() < 1e-10 && t0.im.abs() < 1e-10, || {
        format!("t0 = {t0}, expected {target}")
    })?;
    for n in 0..=40 {
        let closed = asymptotic_estimate(n);
        let residues = pole_sum_estimate(n, &poles);
        let rel = (closed / residues - 1.0).abs();
        ensure(rel < 1e-10, || format!("n={n}: closed form vs residue sum differ by {rel:e}"))?;
    }
    let mut ratios = Vec::new();
    for (n, tol) in [(16usize, 1e-4), (24, 1e-6)] {
        let dev = (c_number(n).to_f64() / asymptotic_estimate(n) - 1.0).abs();
        ensure(dev < tol, || format!("|c_{n}/estimate - 1| = {dev:e} >= {tol:e}"))?;
        ratios.push(format!("n={n}: {dev:.2e}"));
    }
    within(
        Duration::from_secs(5),
        start,
        format!("t0 = {:.12}; {}", t0.re, ratios.join(", ")),
    )
}

/// Run `verify` with one corrupted input and demand exit 1 plus a route-pair counterexample.
fn expect_detected(flag: &str, value: &str) -> Result<(), String> {
    let o = cfubini(&["verify", "--max-n", "12", "--format", "json", flag, value]);
    ensure(o.status.code() == Some(1), || {
        format!("{flag} {value}: exit {:?}", o.status.code())
    })?;
    let reports: serde_json::Value =
        serde_json::from_str(&stdout(&o)).map_err(|e| format!("{flag} {value}: {e}"))?;
    let named_pair = reports.as_array().into_iter().flatten().any(|r| {
        r["status"] == "fail"
            && r["counterexample"]
                .as_str()
                .is_some_and(|c| c.contains(" vs ") && c.contains('='))
    });
    ensure(named_pair, || format!("{flag} {value}: no route-pair counterexample"))
}

fn fault_injection() -> Outcome {
    let t = build_central_T(8);
    let mut cases = 0;
    for n in 0..=8 {
        for k in 0..=n {
            let bumped = t.get(n, k) + Rational::from_integer(1);
            expect_detected("--inject-t", &format!("{n},{k},{bumped}"))?;
            cases += 1;
        }
    }
    for j in 1..=8 {
        let current = cfubini::fubini::determinant_weight(j).coeff(1);
        let bumped = current + Rational::new(1, 3).unwrap();
        expect_detected("--inject-r", &format!("{j},{bumped}"))?;
        cases += 1;
    }
    Ok(format!("{cases} single-entry corruptions all rejected with a counterexample"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("table reproduction", table_reproduction),
        ("sequence reproduction", sequence_reproduction),
        ("route equivalence", route_equivalence),
        ("triangle equivalence", triangle_equivalence),
        ("integral representation", integral_representation_check),
        ("asymptotics", asymptotics),
        ("fault injection", fault_injection),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}. {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

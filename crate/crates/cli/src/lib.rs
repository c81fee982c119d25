//! Command-line front end: tables, polynomials, number sequences, the
//! cross-verification suite, route timings and asymptotic reports.

pub mod bench;
pub mod output;
pub mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cfubini::analytic::asymptotic_report;
use cfubini::format::{poly_to_json, poly_to_plain, scale_odd_row, table_to_csv, table_to_json};
use cfubini::fubini::{c_numbers_upto, c_poly};
use cfubini::triangle::{build_central_T, build_stirling2};
use cfubini::{FubiniRoute, Rational};
use num_bigint::BigInt;
use num_traits::One;

use output::{List, Pair, Triple};
pub use output::OutputFormat;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cfubini", version, about = "Central Fubini-like polynomials and numbers, computed exactly and cross-checked")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Stirling numbers of the second kind
    #[value(name = "S")]
    S,
    /// Central factorial numbers of the second kind
    #[value(name = "T")]
    T,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the S(n,k) or T(n,k) triangle
    Table {
        kind: TableKind,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Print c_n(x) computed by one route
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "definition")]
        route: FubiniRoute,
        /// Multiply odd rows by 2^(n-1)
        #[arg(long)]
        scaled: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Print c_0 .. c_upto
    Numbers {
        #[arg(long)]
        upto: usize,
        /// Print odd entries as 2^(n-1) c_n
        #[arg(long)]
        scaled: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Run every identity check; exit 1 on any failure
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Replace T(n,k): `n,k,value`
        #[arg(long, value_name = "N,K,VALUE")]
        inject_t: Option<Triple<usize, usize, Rational>>,
        /// Replace the determinant symbol R(j) by value*x: `j,value`
        #[arg(long, value_name = "J,VALUE")]
        inject_r: Option<Pair<usize, Rational>>,
    },
    /// Time routes (median of several runs, microseconds)
    Bench {
        /// Comma-separated routes [default: all exact routes]
        #[arg(long)]
        routes: Option<List<FubiniRoute>>,
        /// Comma-separated sizes [default: 50,100,200]
        #[arg(long = "n")]
        n_values: Option<List<usize>>,
        #[arg(long, default_value_t = bench::DEFAULT_RUNS)]
        runs: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Compare c_n with its two-pole asymptotic estimate
    Asymptotic {
        /// Comma-separated sizes
        #[arg(long = "n", default_value = "")]
        n_values: List<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
}

/// Output text and exit status of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn usage(msg: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: msg,
            code: EXIT_USAGE,
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Table { kind, max_n, format } => Outcome::ok(cmd_table(kind, max_n, format)),
        Command::Poly { n, route, scaled, format } => Outcome::ok(cmd_poly(n, route, scaled, format)),
        Command::Numbers { upto, scaled, format } => Outcome::ok(cmd_numbers(upto, scaled, format)),
        Command::Verify {
            max_n,
            format,
            inject_t,
            inject_r,
        } => {
            let faults = verify::Faults {
                central_t: inject_t.map(|Triple(n, k, v)| (n, k, v)),
                determinant_weight: inject_r.map(|Pair(j, v)| (j, v)),
            };
            match verify::run_suite(max_n, &faults) {
                Ok(reports) => Outcome {
                    stdout: verify::render(&reports, format),
                    stderr: String::new(),
                    code: if verify::any_failed(&reports) {
                        EXIT_VERIFY_FAILED
                    } else {
                        EXIT_OK
                    },
                },
                Err(e) => Outcome::usage(format!("error: {e}\n")),
            }
        }
        Command::Bench {
            routes,
            n_values,
            runs,
            format,
        } => {
            let routes = routes.map_or_else(|| FubiniRoute::EXACT.to_vec(), |l| l.0);
            let n_values = n_values.map_or_else(|| bench::DEFAULT_N.to_vec(), |l| l.0);
            Outcome::ok(bench::render(&bench::time_routes(&routes, &n_values, runs), format))
        }
        Command::Asymptotic { n_values, format } => match cmd_asymptotic(&n_values.0, format) {
            Ok(s) => Outcome::ok(s),
            Err(e) => Outcome::usage(format!("error: {e}\n")),
        },
    }
}

pub fn cmd_table(kind: TableKind, max_n: usize, format: OutputFormat) -> String {
    let table = match kind {
        TableKind::S => build_stirling2(max_n),
        TableKind::T => build_central_T(max_n),
    };
    match format {
        OutputFormat::Csv => table_to_csv(&table),
        OutputFormat::Json => format!("{}\n", table_to_json(&table)),
        OutputFormat::Plain => table
            .rows()
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ") + "\n")
            .collect(),
    }
}

pub fn cmd_poly(n: usize, route: FubiniRoute, scaled: bool, format: OutputFormat) -> String {
    let mut p = c_poly(route, n);
    if scaled {
        p = scale_odd_row(n, &p);
    }
    match format {
        OutputFormat::Plain => format!("{}\n", poly_to_plain(&p)),
        OutputFormat::Json => format!("{}\n", poly_to_json(n, &p)),
        OutputFormat::Csv => {
            let mut out = String::from("k,coeff\n");
            for (k, c) in p.coeffs().iter().enumerate() {
                out.push_str(&format!("{k},{c}\n"));
            }
            out
        }
    }
}

fn scale_pow2(n: usize, scaled: bool) -> usize {
    if scaled && n % 2 == 1 {
        n - 1
    } else {
        0
    }
}

pub fn cmd_numbers(upto: usize, scaled: bool, format: OutputFormat) -> String {
    let values: Vec<(usize, Rational, usize)> = c_numbers_upto(upto)
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            let s = scale_pow2(n, scaled);
            (n, c * Rational::from(BigInt::one() << s), s)
        })
        .collect();
    match format {
        OutputFormat::Plain => values
            .iter()
            .map(|(_, v, s)| if *s > 0 { format!("{v} (x 2^{s})\n") } else { format!("{v}\n") })
            .collect(),
        OutputFormat::Csv => {
            let mut out = String::from("n,value,scale_pow2\n");
            for (n, v, s) in &values {
                out.push_str(&format!("{n},{v},{s}\n"));
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<_> = values
                .iter()
                .map(|(n, v, s)| json!({"n": n, "value": v.to_string(), "scale_pow2": s}))
                .collect();
            format!("{}\n", serde_json::Value::Array(rows))
        }
    }
}

pub fn cmd_asymptotic(n_values: &[usize], format: OutputFormat) -> cfubini::Result<String> {
    let reports = asymptotic_report(n_values)?;
    Ok(match format {
        OutputFormat::Plain => reports
            .iter()
            .map(|r| format!("n={} exact={} estimate={:e} ratio={}\n", r.n, r.exact_decimal(), r.estimate, r.ratio))
            .collect(),
        OutputFormat::Csv => {
            if reports.is_empty() {
                return Ok(String::new());
            }
            let mut out = String::from("n,exact,estimate,ratio\n");
            for r in &reports {
                out.push_str(&format!("{},{},{:e},{}\n", r.n, r.exact_decimal(), r.estimate, r.ratio));
            }
            out
        }
        OutputFormat::Json => {
            if reports.is_empty() {
                return Ok(String::new());
            }
            let rows: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
            format!("{}\n", serde_json::Value::Array(rows))
        }
    })
}

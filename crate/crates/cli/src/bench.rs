//! Wall-clock comparison of the polynomial routes.

use std::time::{Duration, Instant};

use cfubini::fubini::c_poly;
use cfubini::FubiniRoute;
use serde_json::json;

use crate::output::{csv_line, OutputFormat};

pub const DEFAULT_N: [usize; 3] = [50, 100, 200];
pub const DEFAULT_RUNS: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct Timing {
    pub route: FubiniRoute,
    pub n: usize,
    pub median: Duration,
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

pub fn time_routes(routes: &[FubiniRoute], n_values: &[usize], runs: usize) -> Vec<Timing> {
    let runs = runs.max(1);
    let mut out = Vec::new();
    for &route in routes {
        for &n in n_values {
            let samples = (0..runs)
                .map(|_| {
                    let start = Instant::now();
                    std::hint::black_box(c_poly(route, std::hint::black_box(n)));
                    start.elapsed()
                })
                .collect();
            out.push(Timing {
                route,
                n,
                median: median(samples),
            });
        }
    }
    out
}

/// Odd-step against binomial recurrence at the largest `n` both were timed at.
pub fn odd_step_comparison(timings: &[Timing]) -> Option<String> {
    let at = |route| {
        timings
            .iter()
            .filter(|t| t.route == route)
            .max_by_key(|t| t.n)
    };
    let odd = at(FubiniRoute::OddStepRecurrence)?;
    let bin = at(FubiniRoute::BinomialRecurrence)?;
    if odd.n != bin.n {
        return None;
    }
    let verdict = if odd.median <= bin.median {
        "odd-step recurrence is faster, as expected from skipping the vanishing even-offset terms"
    } else {
        "odd-step recurrence is NOT faster here"
    };
    Some(format!(
        "comparison at n={}: odd_step_recurrence {} us vs binomial_recurrence {} us; {verdict}",
        odd.n,
        odd.median.as_micros(),
        bin.median.as_micros()
    ))
}

pub fn render(timings: &[Timing], fmt: OutputFormat) -> String {
    let comparison = odd_step_comparison(timings);
    match fmt {
        OutputFormat::Plain => {
            let mut out = String::new();
            for t in timings {
                out.push_str(&format!("{:<22}n={:<6}median={} us\n", t.route.name(), t.n, t.median.as_micros()));
            }
            if let Some(c) = comparison {
                out.push_str(&c);
                out.push('\n');
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("route,n,median_us\n");
            for t in timings {
                out.push_str(&format!("{},{},{}\n", t.route.name(), t.n, t.median.as_micros()));
            }
            if let Some(c) = comparison {
                out.push_str(&format!("# {}\n", csv_line([c])));
            }
            out
        }
        OutputFormat::Json => {
            let rows: Vec<_> = timings
                .iter()
                .map(|t| json!({"route": t.route.name(), "n": t.n, "median_us": t.median.as_micros() as u64}))
                .collect();
            format!("{}\n", json!({"timings": rows, "comparison": comparison}))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even_counts() {
        let ms = |v: &[u64]| v.iter().map(|&x| Duration::from_millis(x)).collect::<Vec<_>>();
        assert_eq!(median(ms(&[5, 1, 3])), Duration::from_millis(3));
        assert_eq!(median(ms(&[4, 1, 3, 2])), Duration::from_micros(2500));
    }

    #[test]
    fn timing_rows_and_comparison() {
        let routes = [FubiniRoute::OddStepRecurrence, FubiniRoute::BinomialRecurrence];
        let t = time_routes(&routes, &[10, 20], 3);
        assert_eq!(t.len(), 4);
        let line = odd_step_comparison(&t).unwrap();
        assert!(line.starts_with("comparison at n=20"));
        assert!(time_routes(&routes, &[], 3).is_empty());
        assert_eq!(odd_step_comparison(&time_routes(&routes[..1], &[5], 1)), None);
    }
}

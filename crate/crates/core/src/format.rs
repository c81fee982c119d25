//! Text and JSON forms of polynomials and triangle tables.
//!
//! Rationals always travel as `"p/q"` strings (`q` omitted when 1).

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::triangle::{TriangleKind, TriangleTable};

/// Ascending monomials with caret powers, e.g. `2 x^2+24 x^4` or
/// `1/16 x+15 x^3+120 x^5`.
pub fn poly_to_plain(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let var = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        let term = if k == 0 {
            c.to_string()
        } else if c.is_one() {
            var
        } else if (-c).is_one() {
            format!("-{var}")
        } else {
            format!("{c} {var}")
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

pub fn poly_to_json(n: usize, p: &Poly) -> Value {
    json!({
        "n": n,
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

pub fn poly_from_json(v: &Value) -> Result<(usize, Poly)> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Parse("missing integer field \"n\"".into()))?;
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing array field \"coeffs\"".into()))?
        .iter()
        .map(parse_rational_value)
        .collect::<Result<Vec<_>>>()?;
    Ok((n as usize, Poly::from_coeffs(coeffs)))
}

fn parse_rational_value(v: &Value) -> Result<Rational> {
    v.as_str()
        .ok_or_else(|| Error::Parse(format!("expected a \"p/q\" string, got {v}")))?
        .parse()
}

/// Header `n,k,value`, then one line per entry `0 <= k <= n`.
pub fn table_to_csv(table: &TriangleTable) -> String {
    let mut out = String::from("n,k,value\n");
    for (n, row) in table.rows().iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            out.push_str(&format!("{n},{k},{v}\n"));
        }
    }
    out
}

/// Row `n` is the array `[T(n,0), ..., T(n,n)]`.
pub fn table_to_json(table: &TriangleTable) -> Value {
    Value::Array(
        table
            .rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    )
}

pub fn table_from_json(kind: TriangleKind, v: &Value) -> Result<TriangleTable> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Parse("table must be an array of rows".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("table row must be an array".into()))?
                .iter()
                .map(parse_rational_value)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    TriangleTable::from_rows(kind, rows)
}

/// Multiply by `2^{n-1}` for odd `n`; even rows are returned unchanged.
pub fn scale_odd_row(n: usize, p: &Poly) -> Poly {
    if n % 2 == 1 {
        p.scale(&Rational::from(num_bigint::BigInt::one() << (n - 1)))
    } else {
        p.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fubini::{c_poly, FubiniRoute};
    use crate::poly::poly_from_pairs;
    use crate::triangle::{build_central_T, build_stirling2};
    use proptest::prelude::*;

    #[test]
    fn plain_examples() {
        assert_eq!(poly_to_plain(&c_poly(FubiniRoute::Definition, 4)), "2 x^2+24 x^4");
        assert_eq!(poly_to_plain(&c_poly(FubiniRoute::EgfSeries, 5)), "1/16 x+15 x^3+120 x^5");
        assert_eq!(poly_to_plain(&Poly::one()), "1");
        assert_eq!(poly_to_plain(&Poly::zero()), "0");
        assert_eq!(poly_to_plain(&poly_from_pairs(&[(-1, 2), (-1, 1), (3, 1)])), "-1/2-x+3 x^2");
        assert_eq!(poly_to_plain(&scale_odd_row(3, &c_poly(FubiniRoute::Definition, 3))), "x+24 x^3");
    }

    #[test]
    fn csv_example() {
        let csv = table_to_csv(&build_central_T(4));
        assert!(csv.lines().any(|l| l == "4,2,1"));
        assert_eq!(table_to_csv(&build_stirling2(0)), "n,k,value\n0,0,1\n");
    }

    #[test]
    fn json_table_round_trip() {
        for t in [build_central_T(9), build_stirling2(9)] {
            let back = table_from_json(t.kind(), &table_to_json(&t)).unwrap();
            assert_eq!(back, t);
        }
        assert_eq!(table_to_json(&build_central_T(6))[6][4], "5");
        assert!(table_from_json(TriangleKind::CentralT, &json!([["1"], ["0"]])).is_err());
        assert!(table_from_json(TriangleKind::CentralT, &json!({"a": 1})).is_err());
    }

    #[test]
    fn poly_json_errors() {
        assert!(poly_from_json(&json!({"coeffs": []})).is_err());
        assert!(poly_from_json(&json!({"n": 1, "coeffs": [1]})).is_err());
        assert!(poly_from_json(&json!({"n": 1, "coeffs": ["1/0"]})).is_err());
    }

    proptest! {
        #[test]
        fn poly_json_round_trip(v in prop::collection::vec((-1000i64..1000, 1i64..64), 0..12), n in 0usize..50) {
            let p = Poly::from_coeffs(v.into_iter().map(|(a, b)| Rational::new(a, b).unwrap()).collect());
            let text = poly_to_json(n, &p).to_string();
            let parsed: Value = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(poly_from_json(&parsed).unwrap(), (n, p));
        }
    }
}

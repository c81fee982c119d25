//! Published values of c_n(x) and c_n.

use cfubini::format::{poly_to_plain, scale_odd_row};
use cfubini::fubini::{c_numbers_upto, c_poly};
use cfubini::{FubiniRoute, Rational};
use num_bigint::BigInt;

const TABLE: [&str; 10] = [
    "1",
    "x",
    "2 x^2",
    "x+24 x^3",
    "2 x^2+24 x^4",
    "x+240 x^3+1920 x^5",
    "2 x^2+120 x^4+720 x^6",
    "x+2184 x^3+67200 x^5+322560 x^7",
    "2 x^2+504 x^4+10080 x^6+40320 x^8",
    "x+19680 x^3+1854720 x^5+27095040 x^7+92897280 x^9",
];

const EVEN: [u64; 9] = [
    1,
    2,
    26,
    842,
    50906,
    4946282,
    704888186,
    138502957322,
    35887046307866,
];

const ODD_SCALED: [u64; 8] = [
    1,
    25,
    2161,
    391945,
    121866721,
    57890223865,
    38999338931281,
    35367467110007785,
];

#[test]
fn table_rows_by_every_route() {
    for route in FubiniRoute::ALL {
        for (n, expected) in TABLE.iter().enumerate() {
            let p = scale_odd_row(n, &c_poly(route, n));
            assert_eq!(poly_to_plain(&p), *expected, "{route}, n = {n}");
        }
    }
}

#[test]
fn number_sequences() {
    let c = c_numbers_upto(16);
    for (i, v) in EVEN.iter().enumerate() {
        assert_eq!(c[2 * i], Rational::from(*v), "c_{}", 2 * i);
    }
    for (i, v) in ODD_SCALED.iter().enumerate() {
        let scaled = &c[2 * i + 1] * &Rational::from(BigInt::from(4).pow(i as u32));
        assert_eq!(scaled, Rational::from(*v), "4^{i} c_{}", 2 * i + 1);
    }
}

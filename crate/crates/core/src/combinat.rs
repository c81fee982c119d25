//! Factorials and binomial coefficients as exact values.

use num_bigint::BigInt;
use num_traits::One;

use crate::rational::Rational;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

pub fn factorial_q(n: usize) -> Rational {
    Rational::from(factorial(n))
}

pub fn binomial_q(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(10), BigInt::from(3628800));
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial_row(4), [1, 4, 6, 4, 1].map(BigInt::from).to_vec());
        for n in 0..30 {
            let row = binomial_row(n);
            for (k, b) in row.iter().enumerate() {
                assert_eq!(b, &binomial(n, k));
            }
        }
    }
}

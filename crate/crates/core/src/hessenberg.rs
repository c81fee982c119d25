//! Determinants of unit lower-Hessenberg matrices.
//!
//! A matrix `H` of order `n` with `H[i][i+1] = 1` and `H[i][j] = 0` for
//! `j > i + 1` has leading principal minors satisfying
//!
//! ```text
//! D_0 = 1,   D_k = Σ_{j=1..k} (-1)^{k-j} H[k-1][j-1] D_{j-1}
//! ```
//!
//! which for a Toeplitz matrix `H[i][j] = R(i - j + 1)` is the familiar
//! `α_k = Σ_j (-1)^{j-1} R(j) α_{k-j}`.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact commutative ring values that can populate a matrix.
pub trait RingElement:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> RingElement for T where
    T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

fn check_shape<T: RingElement>(order: usize, entry: &impl Fn(usize, usize) -> T) -> Result<()> {
    for row in 0..order {
        for col in row + 1..order {
            let v = entry(row, col);
            let ok = if col == row + 1 { v.is_one() } else { v.is_zero() };
            if !ok {
                return Err(Error::NotHessenberg { row, col });
            }
        }
    }
    Ok(())
}

/// All leading principal minors `D_0 ..= D_order` (0-based `entry(row, col)`).
pub fn hessenberg_leading_minors<T: RingElement>(
    order: usize,
    entry: impl Fn(usize, usize) -> T,
) -> Result<Vec<T>> {
    check_shape(order, &entry)?;
    let mut minors = Vec::with_capacity(order + 1);
    minors.push(T::one());
    for k in 1..=order {
        let mut acc = T::zero();
        for j in 1..=k {
            let h = entry(k - 1, j - 1);
            if h.is_zero() {
                continue;
            }
            let term = h * minors[j - 1].clone();
            acc = if (k - j) % 2 == 0 { acc + term } else { acc - term };
        }
        minors.push(acc);
    }
    Ok(minors)
}

/// Determinant in `O(order^2)` entry operations. Order 0 gives 1.
pub fn hessenberg_determinant<T: RingElement>(
    order: usize,
    entry: impl Fn(usize, usize) -> T,
) -> Result<T> {
    Ok(hessenberg_leading_minors(order, entry)?
        .pop()
        .expect("at least D_0"))
}

/// Lower-Hessenberg Toeplitz entry: `R(i - j + 1)` on and below the diagonal,
/// 1 on the superdiagonal, 0 above it. `weights[m - 1] = R(m)`.
pub fn toeplitz_entry<T: RingElement>(weights: &[T], row: usize, col: usize) -> T {
    if col <= row {
        weights[row - col].clone()
    } else if col == row + 1 {
        T::one()
    } else {
        T::zero()
    }
}

/// Laplace expansion along the first row. Factorial cost; meant as an oracle
/// for small orders.
pub fn cofactor_determinant<T: RingElement>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    if n == 0 {
        return T::one();
    }
    let mut acc = T::zero();
    for col in 0..n {
        let a = &matrix[0][col];
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = a.clone() * cofactor_determinant(&minor);
        acc = if col % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn small_examples() {
        let x = Poly::x();
        let w1 = vec![x.clone()];
        assert_eq!(hessenberg_determinant(1, |i, j| toeplitz_entry(&w1, i, j)).unwrap(), x);
        let w2 = vec![x.clone(), Poly::zero()];
        assert_eq!(
            hessenberg_determinant(2, |i, j| toeplitz_entry(&w2, i, j)).unwrap(),
            &x * &x
        );
        let mut id = vec![q(0); 7];
        id[0] = q(1);
        assert_eq!(hessenberg_determinant(7, |i, j| toeplitz_entry(&id, i, j)).unwrap(), q(1));
        assert_eq!(hessenberg_determinant::<Rational>(0, |_, _| unreachable!()).unwrap(), q(1));
    }

    #[test]
    fn rejects_non_hessenberg_shape() {
        let err = hessenberg_determinant(3, |i, j| if j == i + 2 { q(5) } else { toeplitz_entry(&[q(1), q(2), q(3)], i, j) });
        assert_eq!(err, Err(Error::NotHessenberg { row: 0, col: 2 }));
        let err = hessenberg_determinant(2, |i, j| if j == i + 1 { q(2) } else { q(1) });
        assert_eq!(err, Err(Error::NotHessenberg { row: 0, col: 1 }));
    }

    #[test]
    fn cofactor_oracle_basics() {
        let m = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        assert_eq!(cofactor_determinant(&m), q(-2));
        let m3 = vec![
            vec![q(2), q(0), q(1)],
            vec![q(1), q(3), q(2)],
            vec![q(1), q(1), q(1)],
        ];
        // 2(3-2) - 0 + 1(1-3)
        assert_eq!(cofactor_determinant(&m3), q(0));
    }

    proptest! {
        #[test]
        fn recurrence_matches_cofactor(
            below in prop::collection::vec(-9i64..9, 21),
            order in 1usize..=6,
        ) {
            // general (non-Toeplitz) unit lower-Hessenberg matrix
            let entry = |i: usize, j: usize| {
                if j <= i { q(below[i * (i + 1) / 2 + j]) } else if j == i + 1 { q(1) } else { q(0) }
            };
            let dense: Vec<Vec<Rational>> = (0..order).map(|i| (0..order).map(|j| entry(i, j)).collect()).collect();
            prop_assert_eq!(hessenberg_determinant(order, entry).unwrap(), cofactor_determinant(&dense));
        }
    }
}

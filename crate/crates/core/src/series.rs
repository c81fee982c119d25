//! Truncated formal power series in `t` with polynomial (in `x`) coefficients.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;

/// `Σ_{m < order} coeffs[m] · t^m`, exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    /// Pads with zeros or truncates so that exactly `order` coefficients remain.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order, Poly::zero());
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Series::from_coeffs(order, vec![Poly::one()])
    }

    /// Series with scalar coefficients.
    pub fn from_scalars(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Series::from_coeffs(order, coeffs.into_iter().take(order).map(Poly::constant).collect())
    }

    /// `e^{a t}` truncated to `order`.
    pub fn exp_linear(order: usize, a: &Rational) -> Self {
        let mut term = Rational::one();
        let mut out = Vec::with_capacity(order);
        for m in 0..order {
            out.push(term.clone());
            term = &(&term * a) / &Rational::from(m + 1);
        }
        Series::from_scalars(order, out)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> &Poly {
        &self.coeffs[m]
    }

    fn check_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Poly::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Series { coeffs: out })
    }

    pub fn pow(&self, e: usize) -> Series {
        (0..e).fold(Series::one(self.order()), |acc, _| {
            acc.mul(self).expect("same order")
        })
    }

    /// Multiplicative inverse for a series whose constant term is exactly 1:
    /// `b_0 = 1`, `b_m = -Σ_{i=1..m} a_i b_{m-i}`.
    pub fn reciprocal(&self) -> Result<Series> {
        let n = self.order();
        if n == 0 {
            return Ok(Series::zero(0));
        }
        if self.coeffs[0] != Poly::one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut b: Vec<Poly> = Vec::with_capacity(n);
        b.push(Poly::one());
        for m in 1..n {
            let mut acc = Poly::zero();
            for i in 1..=m {
                let a = &self.coeffs[i];
                if a.is_zero() || b[m - i].is_zero() {
                    continue;
                }
                acc = &acc + &(a * &b[m - i]);
            }
            b.push(-acc);
        }
        Ok(Series { coeffs: b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn scalars(order: usize, cs: &[i64]) -> Series {
        Series::from_scalars(order, cs.iter().map(|&c| Rational::from(c)))
    }

    #[test]
    fn mul_examples() {
        let a = scalars(3, &[1, 1]);
        let b = scalars(3, &[1, -1]);
        assert_eq!(a.mul(&b).unwrap(), scalars(3, &[1, 0, -1]));
        assert_eq!(a.mul(&Series::one(3)).unwrap(), a);
        // e^t * e^t = e^{2t}; t^2 coefficient is 2^2/2! = 2
        let e = Series::exp_linear(5, &Rational::one());
        let sq = e.mul(&e).unwrap();
        assert_eq!(sq.coeff(2), &Poly::constant(Rational::from(2i64)));
        assert_eq!(sq, Series::exp_linear(5, &Rational::from(2i64)));
    }

    #[test]
    fn mul_order_mismatch() {
        assert_eq!(
            Series::one(3).mul(&Series::one(4)),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(scalars(4, &[1, -1]).reciprocal().unwrap(), scalars(4, &[1, 1, 1, 1]));
        assert_eq!(Series::one(5).reciprocal().unwrap(), Series::one(5));
        assert_eq!(scalars(3, &[2, 1]).reciprocal(), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn reciprocal_of_central_egf_denominator() {
        // 1 - 2x sinh(t/2) to order 4: odd m contribute x (1/2)^m / m! * 2
        let two = Rational::from(2i64);
        let mut cs = vec![Poly::one()];
        for m in 1..4usize {
            if m % 2 == 1 {
                let c = &(&two * &Rational::inv_pow2(m as u32))
                    / &Rational::from((1..=m).product::<usize>());
                cs.push(-Poly::monomial(c, 1));
            } else {
                cs.push(Poly::zero());
            }
        }
        let r = Series::from_coeffs(4, cs).reciprocal().unwrap();
        let expected = Poly::from_coeffs(vec![
            Rational::zero(),
            Rational::new(1, 24).unwrap(),
            Rational::zero(),
            Rational::one(),
        ]);
        assert_eq!(r.coeff(3), &expected);
    }

    fn arb_unit_series() -> impl Strategy<Value = Series> {
        prop::collection::vec(prop::collection::vec((-6i64..6, 1i64..5), 0..4), 1..7).prop_map(|rows| {
            let order = rows.len();
            let mut coeffs: Vec<Poly> = rows
                .into_iter()
                .map(|r| Poly::from_coeffs(r.into_iter().map(|(p, q)| Rational::new(p, q).unwrap()).collect()))
                .collect();
            coeffs[0] = Poly::one();
            Series::from_coeffs(order, coeffs)
        })
    }

    proptest! {
        #[test]
        fn reciprocal_is_inverse(a in arb_unit_series()) {
            let b = a.reciprocal().unwrap();
            prop_assert_eq!(a.mul(&b).unwrap(), Series::one(a.order()));
        }
    }
}

//! Finite-difference operators acting on exact polynomials, and changes of
//! basis between monomials, falling factorials and central factorials.

use num_traits::{One, Zero};

use crate::combinat::binomial_row;
use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Monomial,
    FallingFactorial,
    CentralFactorial,
}

/// `E^a p(x) = p(x + a)`, expanded with the binomial theorem.
pub fn shift(p: &Poly, a: &Rational) -> Poly {
    if a.is_zero() {
        return p.clone();
    }
    let n = p.coeffs().len();
    let powers: Vec<Rational> = std::iter::successors(Some(Rational::one()), |q| Some(q * a))
        .take(n)
        .collect();
    let mut out = vec![Rational::zero(); n];
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        // c (x + a)^i = Σ_k C(i,k) a^{i-k} c x^k
        for (k, b) in binomial_row(i).into_iter().enumerate() {
            out[k] += &(c * &powers[i - k] * Rational::from(b));
        }
    }
    Poly::from_coeffs(out)
}

/// `Δp(x) = p(x+1) - p(x)`
pub fn forward_difference(p: &Poly) -> Poly {
    &shift(p, &Rational::one()) - p
}

/// `δp(x) = p(x+1/2) - p(x-1/2)`
pub fn central_difference(p: &Poly) -> Poly {
    let half = Rational::inv_pow2(1);
    &shift(p, &half) - &shift(p, &-&half)
}

/// `x(x-1)...(x-n+1)`
pub fn falling_factorial_poly(n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, j| {
        let factor = Poly::from_coeffs(vec![-Rational::from(j), Rational::one()]);
        &acc * &factor
    })
}

/// `x(x+n/2-1)(x+n/2-2)...(x-n/2+1)`; `x^[0] = 1`.
pub fn central_factorial_poly(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let half_n = Rational::new(n as i64, 2).expect("nonzero");
    (1..n).fold(Poly::x(), |acc, j| {
        let root_shift = &half_n - &Rational::from(j);
        &acc * &Poly::from_coeffs(vec![root_shift, Rational::one()])
    })
}

pub fn basis_poly(basis: BasisKind, k: usize) -> Poly {
    match basis {
        BasisKind::Monomial => Poly::monomial(Rational::one(), k),
        BasisKind::FallingFactorial => falling_factorial_poly(k),
        BasisKind::CentralFactorial => central_factorial_poly(k),
    }
}

/// Coefficients `c_k` with `p = Σ c_k b_k`, found by peeling off the top
/// degree one monic basis element at a time.
pub fn expand_in_basis(p: &Poly, basis: BasisKind) -> Vec<Rational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    let mut out = vec![Rational::zero(); deg + 1];
    let mut rest = p.clone();
    for k in (0..=deg).rev() {
        let c = rest.coeff(k);
        if c.is_zero() {
            continue;
        }
        rest = &rest - &basis_poly(basis, k).scale(&c);
        out[k] = c;
    }
    debug_assert!(rest.is_zero());
    out
}

/// Inverse of [`expand_in_basis`].
pub fn assemble_from_basis(coeffs: &[Rational], basis: BasisKind) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Poly::zero(), |acc, (k, c)| &acc + &basis_poly(basis, k).scale(c))
}

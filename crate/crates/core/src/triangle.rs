//! Stirling numbers of the second kind `S(n,k)` and central factorial numbers
//! of the second kind `T(n,k)`.

use num_traits::{One, Zero};

use crate::combinat::{binomial_row, factorial_q};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Stirling2,
    CentralT,
}

/// Lower-triangular table `entries(n, k)` for `0 <= k <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleTable {
    kind: TriangleKind,
    rows: Vec<Vec<Rational>>,
}

impl TriangleTable {
    pub fn from_rows(kind: TriangleKind, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidArgument("a table needs at least row 0".into()));
        }
        if let Some(n) = rows.iter().enumerate().position(|(n, r)| r.len() != n + 1) {
            return Err(Error::InvalidArgument(format!(
                "row {n} has {} entries, expected {}",
                rows[n].len(),
                n + 1
            )));
        }
        Ok(TriangleTable { kind, rows })
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Zero for `k > n`. Panics when `n > max_n`.
    pub fn get(&self, n: usize, k: usize) -> Rational {
        assert!(n <= self.max_n(), "row {n} beyond table of size {}", self.max_n());
        self.rows[n].get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Copy with a single entry replaced.
    pub fn with_entry(&self, n: usize, k: usize, value: Rational) -> Result<Self> {
        if n > self.max_n() || k > n {
            return Err(Error::InvalidArgument(format!(
                "({n}, {k}) is outside a table with max_n = {}",
                self.max_n()
            )));
        }
        let mut out = self.clone();
        out.rows[n][k] = value;
        Ok(out)
    }

    pub(crate) fn require(&self, kind: TriangleKind, n: usize) -> Result<()> {
        if self.kind != kind {
            return Err(Error::WrongTableKind {
                expected: kind,
                found: self.kind,
            });
        }
        if self.max_n() < n {
            return Err(Error::InsufficientTable {
                max_n: self.max_n(),
                needed: n,
            });
        }
        Ok(())
    }
}

/// `S(n,k) = k S(n-1,k) + S(n-1,k-1)`, `S(0,0) = 1`.
pub fn build_stirling2(max_n: usize) -> TriangleTable {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for n in 1..=max_n {
        let prev = &rows[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(Rational::zero);
        let row = (0..=n)
            .map(|k| {
                let carry = if k == 0 { Rational::zero() } else { at(k - 1) };
                Rational::from(k) * at(k) + carry
            })
            .collect();
        rows.push(row);
    }
    TriangleTable {
        kind: TriangleKind::Stirling2,
        rows,
    }
}

/// `T(n,k) = (k/2)^2 T(n-2,k) + T(n-2,k-2)`, seeded by rows `n = 0`
/// (`T(0,0) = 1`) and `n = 1` (`T(1,1) = 1`, `T(1,0) = 0`).
#[allow(non_snake_case)]
pub fn build_central_T(max_n: usize) -> TriangleTable {
    let mut rows: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    if max_n >= 1 {
        rows.push(vec![Rational::zero(), Rational::one()]);
    }
    for n in 2..=max_n {
        let prev = &rows[n - 2];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_else(Rational::zero);
        let row = (0..=n)
            .map(|k| {
                if (n - k) % 2 == 1 {
                    return Rational::zero();
                }
                let half_k = Rational::new(k as i64, 2).expect("nonzero");
                let carry = if k >= 2 { at(k - 2) } else { Rational::zero() };
                half_k.pow(2) * at(k) + carry
            })
            .collect();
        rows.push(row);
    }
    TriangleTable {
        kind: TriangleKind::CentralT,
        rows,
    }
}

/// `T(n,k) = (1/k!) Σ_j (-1)^j C(k,j) (k/2 - j)^n`
pub fn central_t_explicit(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let half_k = Rational::new(k as i64, 2).expect("nonzero");
    let sum: Rational = binomial_row(k)
        .into_iter()
        .enumerate()
        .map(|(j, b)| {
            let term = Rational::from(b) * (&half_k - &Rational::from(j)).pow(n as u32);
            if j % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum();
    &sum / &factorial_q(k)
}

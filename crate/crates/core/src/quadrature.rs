//! Composite Gauss–Legendre quadrature for complex-valued integrands.

use num_complex::Complex64;

/// Nodes and weights of the `points`-point Gauss–Legendre rule on `[-1, 1]`,
/// by Newton iteration on `P_points`.
pub fn gauss_legendre(points: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(points >= 1);
    let mut nodes = vec![0.0; points];
    let mut weights = vec![0.0; points];
    let n = points as f64;
    for i in 0..points.div_ceil(2) {
        // Tricomi initial guess for the i-th largest root
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(points, z);
            dp = d;
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(points, z);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - z * z) * dp * dp);
        nodes[i] = -z;
        nodes[points - 1 - i] = z;
        weights[i] = w;
        weights[points - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, z);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

/// Fixed-order composite rule: `panels` equal subintervals of `[a, b]`.
#[derive(Debug, Clone)]
pub struct CompositeGaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl CompositeGaussLegendre {
    pub fn new(points_per_panel: usize) -> Self {
        let (nodes, weights) = gauss_legendre(points_per_panel);
        CompositeGaussLegendre { nodes, weights }
    }

    /// Integrates `f` and stops at the first node where `f` returns an error.
    pub fn integrate<E>(
        &self,
        a: f64,
        b: f64,
        panels: usize,
        mut f: impl FnMut(f64) -> Result<Complex64, E>,
    ) -> Result<Complex64, E> {
        let h = (b - a) / panels as f64;
        let mut total = Complex64::new(0.0, 0.0);
        for p in 0..panels {
            let mid = a + (p as f64 + 0.5) * h;
            let mut panel = Complex64::new(0.0, 0.0);
            for (z, w) in self.nodes.iter().zip(&self.weights) {
                panel += f(mid + 0.5 * h * z)? * *w;
            }
            total += panel * (0.5 * h);
        }
        Ok(total)
    }
}

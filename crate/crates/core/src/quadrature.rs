//! Gauss-Legendre quadrature.
//!
//! Nodes are the roots of the Legendre polynomial `P_n`, found by Newton
//! iteration from the Tricomi initial guess; weights follow from `P_n'`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const DEFAULT_NODES: usize = 256;
pub const MIN_NODES: usize = 16;

/// A Gauss-Legendre rule on the reference interval `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadrature {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl Quadrature {
    pub fn new(count: usize) -> Result<Self> {
        if count < MIN_NODES {
            return Err(Error::InvalidParameter {
                name: "quadrature nodes",
                value: count as f64,
                reason: "at least 16 nodes are required",
            });
        }
        let mut nodes = vec![0.0; count];
        let mut weights = vec![0.0; count];
        let n = count as f64;
        // roots are symmetric; solve for the upper half only
        for i in 0..count.div_ceil(2) {
            let theta = PI * (i as f64 + 0.75) / (n + 0.5);
            let mut x = (1.0 - (n - 1.0) / (8.0 * n * n * n)) * theta.cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(count, x);
                let step = p / dp;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(count, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = x;
            nodes[count - 1 - i] = -x;
            weights[i] = w;
            weights[count - 1 - i] = w;
        }
        if count % 2 == 1 {
            nodes[count / 2] = 0.0;
        }
        Ok(Self { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped onto `[lo, hi]`, ascending in x.
    pub fn mapped(&self, lo: f64, hi: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        self.nodes
            .iter()
            .rev()
            .zip(self.weights.iter().rev())
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, lo: f64, hi: f64, mut f: F) -> f64 {
        self.mapped(lo, hi).map(|(x, w)| w * f(x)).sum()
    }

    /// Integral of a complex-valued integrand.
    pub fn integrate_complex<F>(&self, lo: f64, hi: f64, mut f: F) -> num_complex::Complex64
    where
        F: FnMut(f64) -> num_complex::Complex64,
    {
        self.mapped(lo, hi).map(|(x, w)| f(x) * w).sum()
    }
}

impl Default for Quadrature {
    fn default() -> Self {
        Self::new(DEFAULT_NODES).expect("default node count is valid")
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let n = n as f64;
    let dp = n * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rejects_too_few_nodes() {
        assert!(Quadrature::new(8).is_err());
        assert!(Quadrature::new(16).is_ok());
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [16, 17, 64, 255, 256, 600] {
            let q = Quadrature::new(n).unwrap();
            assert_relative_eq!(q.integrate(-3.0, 5.0, |_| 1.0), 8.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn exact_for_polynomials_up_to_degree_2n_minus_1() {
        let q = Quadrature::new(16).unwrap();
        // x^30 on [0, 1]
        assert_relative_eq!(q.integrate(0.0, 1.0, |x| x.powi(30)), 1.0 / 31.0, epsilon = 1e-14);
        assert_relative_eq!(q.integrate(-1.0, 1.0, |x| x.powi(31)), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn oscillatory_integrand() {
        let q = Quadrature::default();
        let k: f64 = 150.0;
        let exact = 2.0 * k.sin() / k;
        assert_relative_eq!(q.integrate(-1.0, 1.0, |x| (k * x).cos()), exact, epsilon = 1e-13);
    }

    #[test]
    fn mapped_nodes_ascending() {
        let q = Quadrature::new(33).unwrap();
        let xs: Vec<f64> = q.mapped(-2.0, 2.0).map(|(x, _)| x).collect();
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
        assert!(xs[0] > -2.0 && xs[32] < 2.0);
    }
}

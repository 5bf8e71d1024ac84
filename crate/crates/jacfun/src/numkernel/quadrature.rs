//! Gauss-Legendre quadrature rules.

use super::C64;
use crate::error::{Error, Result};

/// Nodes strictly increasing in (-1,1); weights positive, summing to 2.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Rule of size n: nodes are the roots of the Legendre polynomial P_n,
    /// found by Newton iteration from Chebyshev initial guesses; weights are
    /// 2 / ((1-x^2) P_n'(x)^2).
    pub fn gauss_legendre(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("quadrature size must be >= 1".into()));
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_and_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    let (p2, d2) = legendre_and_derivative(n, x);
                    x -= p2 / d2;
                    dp = legendre_and_derivative(n, x).1;
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[n - 1 - i] = x;
            weights[n - 1 - i] = w;
            nodes[i] = -x;
            weights[i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            let (_, d) = legendre_and_derivative(n, 0.0);
            weights[n / 2] = 2.0 / (d * d);
        }
        Ok(QuadratureRule { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrate f over [a, b].
    pub fn integrate<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }

    /// Integrate a complex-valued f over [a, b].
    pub fn integrate_complex<F: FnMut(f64) -> C64>(&self, a: f64, b: f64, mut f: F) -> C64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut acc = C64::new(0.0, 0.0);
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            acc += f(mid + half * x) * w;
        }
        acc * half
    }
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn smallest_rules() {
        let r1 = QuadratureRule::gauss_legendre(1).unwrap();
        assert_eq!(r1.nodes(), &[0.0]);
        assert_eq!(r1.weights(), &[2.0]);
        let r2 = QuadratureRule::gauss_legendre(2).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert_relative_eq!(r2.nodes()[0], -s, max_relative = 1e-14);
        assert_relative_eq!(r2.nodes()[1], s, max_relative = 1e-14);
        assert_relative_eq!(r2.weights()[0], 1.0, max_relative = 1e-14);
    }

    #[test]
    fn weights_sum_to_two_and_nodes_increase() {
        for n in [3, 8, 17, 64, 96] {
            let r = QuadratureRule::gauss_legendre(n).unwrap();
            let sum: f64 = r.weights().iter().sum();
            assert_relative_eq!(sum, 2.0, max_relative = 1e-14);
            assert!(r.nodes().windows(2).all(|p| p[0] < p[1]));
            assert!(r.weights().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn integrates_monomials_exactly() {
        // rule of size n integrates x^k exactly for k <= 2n-1
        for n in [1usize, 2, 5, 20, 64] {
            let r = QuadratureRule::gauss_legendre(n).unwrap();
            for k in (0..=(2 * n - 1)).step_by(if n > 8 { 7 } else { 1 }) {
                let got = r.integrate(-1.0, 1.0, |x| x.powi(k as i32));
                let expect = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
                assert!(
                    (got - expect).abs() < 1e-13,
                    "n={n} k={k}: got {got}, expect {expect}"
                );
            }
        }
        // the spec's named example: n=20 integrates x^10 to 2/11
        let r = QuadratureRule::gauss_legendre(20).unwrap();
        assert_relative_eq!(
            r.integrate(-1.0, 1.0, |x| x.powi(10)),
            2.0 / 11.0,
            max_relative = 1e-14
        );
    }
}

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Gauss–Legendre nodes on [-1, 1] (ascending) and weights.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, p_prev) = legendre_pair(n, x);
            dp = nf * (x * p - p_prev) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                let (p, p_prev) = legendre_pair(n, x);
                dp = nf * (x * p - p_prev) / (x * x - 1.0);
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

/// Product grid: Gauss–Legendre in `cos θ` times a uniform azimuthal grid.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureGrid {
    /// Colatitudes, strictly increasing in (0, π).
    pub theta_nodes: Vec<f64>,
    pub cos_theta: Vec<f64>,
    /// Gauss–Legendre weights in `cos θ`; they sum to 2.
    pub theta_weights: Vec<f64>,
    pub phi_count: usize,
}

impl QuadratureGrid {
    pub fn n_theta(&self) -> usize {
        self.theta_nodes.len()
    }

    pub fn phi(&self, k: usize) -> f64 {
        2.0 * PI * k as f64 / self.phi_count as f64
    }

    pub fn phi_weight(&self) -> f64 {
        2.0 * PI / self.phi_count as f64
    }

    pub fn len(&self) -> usize {
        self.n_theta() * self.phi_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest total degree of spherical polynomials integrated exactly.
    pub fn exact_degree(&self) -> usize {
        (2 * self.n_theta() - 1).min(self.phi_count - 1)
    }

    pub fn ensure_degree(&self, degree: usize) -> Result<()> {
        if self.exact_degree() < degree {
            return Err(Error::GridTooCoarse {
                n_theta: self.n_theta(),
                n_phi: self.phi_count,
                degree,
            });
        }
        Ok(())
    }

    /// Unit vector of grid point `(i, k)`.
    pub fn direction(&self, i: usize, k: usize) -> [f64; 3] {
        let ct = self.cos_theta[i];
        let st = self.theta_nodes[i].sin();
        let (sp, cp) = self.phi(k).sin_cos();
        [st * cp, st * sp, ct]
    }

    /// `∫ f dΩ` for values stored row-major `(theta, phi)`.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        assert_eq!(values.len(), self.len());
        let row_sums = values
            .chunks(self.phi_count)
            .map(|row| row.iter().sum::<f64>());
        row_sums
            .zip(&self.theta_weights)
            .map(|(s, w)| s * w)
            .sum::<f64>()
            * self.phi_weight()
    }
}

/// Builds a grid with `n_theta` Gauss–Legendre rows and `n_phi` azimuthal points.
pub fn make_grid(n_theta: usize, n_phi: usize) -> Result<QuadratureGrid> {
    if n_theta < 2 || n_phi < 2 {
        return Err(Error::InvalidParameter(format!(
            "grid {n_theta}x{n_phi}: both dimensions must be at least 2"
        )));
    }
    let (x, w) = gauss_legendre(n_theta);
    // Ascending θ means descending cos θ.
    let cos_theta: Vec<f64> = x.iter().rev().copied().collect();
    let theta_weights: Vec<f64> = w.iter().rev().copied().collect();
    let theta_nodes = cos_theta.iter().map(|c| c.acos()).collect();
    Ok(QuadratureGrid {
        theta_nodes,
        cos_theta,
        theta_weights,
        phi_count: n_phi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        for n in [2, 3, 17, 64, 256] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-13, "n={n}");
            assert!(x.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn integrates_polynomials_exactly() {
        let (x, w) = gauss_legendre(5);
        for deg in 0..=9 {
            let q: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg)).sum();
            let exact = if deg % 2 == 1 {
                0.0
            } else {
                2.0 / (deg as f64 + 1.0)
            };
            assert!((q - exact).abs() < 1e-14, "deg {deg}");
        }
    }

    #[test]
    fn sphere_area() {
        let g = make_grid(64, 128).unwrap();
        let ones = vec![1.0; g.len()];
        assert!((g.integrate(&ones) / (4.0 * PI) - 1.0).abs() < 1e-12);
        assert!(g.theta_nodes.windows(2).all(|p| p[0] < p[1]));
        assert!(g.theta_nodes[0] > 0.0 && *g.theta_nodes.last().unwrap() < PI);
    }

    #[test]
    fn rejects_degenerate_sizes() {
        assert!(make_grid(1, 8).is_err());
        assert!(make_grid(8, 1).is_err());
        let g = make_grid(4, 8).unwrap();
        assert_eq!(g.exact_degree(), 7);
        assert!(g.ensure_degree(8).is_err());
    }
}

use num_complex::Complex64;
use std::f64::consts::PI;

/// Fully normalized associated Legendre values `P̄_{l,m}(x)` for `0 <= m <= l <= l_max`
/// at a single argument, with the Condon–Shortley phase and `∫ P̄² dx = 1`.
#[derive(Debug, Clone)]
pub struct LegendreTable {
    l_max: usize,
    values: Vec<f64>,
}

impl LegendreTable {
    fn index(l: usize, m: usize) -> usize {
        l * (l + 1) / 2 + m
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    /// `P̄_{l,m}` for `m >= 0`.
    pub fn get(&self, l: usize, m: usize) -> f64 {
        debug_assert!(m <= l && l <= self.l_max);
        self.values[Self::index(l, m)]
    }

    /// `P̄_{l,m}` for signed `m`, using `P̄_{l,-m} = (-1)^m P̄_{l,m}`.
    pub fn get_signed(&self, l: usize, m: i64) -> f64 {
        let v = self.get(l, m.unsigned_abs() as usize);
        if m < 0 && m % 2 != 0 {
            -v
        } else {
            v
        }
    }
}

/// Ascending recurrence in `l` for each `m`, seeded from the sectoral values
/// `P̄_{m,m} = -sqrt((2m+1)/(2m)) sinθ P̄_{m-1,m-1}`. No intermediate exceeds the final
/// magnitudes, so nothing overflows.
pub fn legendre_table(l_max: usize, x: f64) -> LegendreTable {
    let s = (1.0 - x * x).max(0.0).sqrt();
    let mut values = vec![0.0; (l_max + 1) * (l_max + 2) / 2];
    let mut sectoral = std::f64::consts::FRAC_1_SQRT_2;
    for m in 0..=l_max {
        if m > 0 {
            let mf = m as f64;
            sectoral *= -((2.0 * mf + 1.0) / (2.0 * mf)).sqrt() * s;
        }
        values[LegendreTable::index(m, m)] = sectoral;
        if m == l_max {
            break;
        }
        let mf = m as f64;
        let mut prev2 = sectoral;
        let mut prev1 = (2.0 * mf + 3.0).sqrt() * x * sectoral;
        values[LegendreTable::index(m + 1, m)] = prev1;
        let mut a_prev = (2.0 * mf + 3.0).sqrt();
        for l in (m + 2)..=l_max {
            let lf = l as f64;
            let a = ((4.0 * lf * lf - 1.0) / (lf * lf - mf * mf)).sqrt();
            let cur = a * (x * prev1 - prev2 / a_prev);
            values[LegendreTable::index(l, m)] = cur;
            prev2 = prev1;
            prev1 = cur;
            a_prev = a;
        }
    }
    LegendreTable { l_max, values }
}

/// `P̄_{J,M}(x)`; requires `|M| <= J`.
pub fn normalized_legendre(j: u32, m: i32, x: f64) -> f64 {
    assert!(m.unsigned_abs() <= j, "|M| > J");
    legendre_table(j as usize, x).get_signed(j as usize, m as i64)
}

/// `Y_{J,M}(θ, φ) = P̄_{J,M}(cos θ) e^{iMφ} / sqrt(2π)`.
pub fn sph_harm(j: u32, m: i32, theta: f64, phi: f64) -> Complex64 {
    let p = normalized_legendre(j, m, theta.cos());
    Complex64::from_polar(p / (2.0 * PI).sqrt(), m as f64 * phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_closed_forms() {
        let x: f64 = 0.37;
        let s = (1.0 - x * x).sqrt();
        assert!((normalized_legendre(0, 0, x) - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((normalized_legendre(1, 0, x) - (1.5f64).sqrt() * x).abs() < 1e-15);
        assert!((normalized_legendre(1, 1, x) + (0.75f64).sqrt() * s).abs() < 1e-15);
        assert!((normalized_legendre(1, -1, x) - (0.75f64).sqrt() * s).abs() < 1e-15);
        let p20 = (2.5f64).sqrt() * 0.5 * (3.0 * x * x - 1.0);
        assert!((normalized_legendre(2, 0, x) - p20).abs() < 1e-15);
    }

    #[test]
    fn y00_is_constant() {
        let y = sph_harm(0, 0, 1.1, -0.4);
        assert!((y.re - 1.0 / (4.0 * PI).sqrt()).abs() < 1e-15);
        assert!(y.im.abs() < 1e-15);
    }

    #[test]
    fn sectoral_at_equator_is_finite_for_large_j() {
        let v = normalized_legendre(101, 101, 0.0);
        assert!(v.is_finite() && v != 0.0);
        // P̄_{J,J}(0) = (-1)^J sqrt((2J+1)!! / (2 (2J)!!)), ~ ((J pi)^{1/4}) scale
        let mut expected = std::f64::consts::FRAC_1_SQRT_2;
        for k in 1..=101 {
            let kf = k as f64;
            expected *= -((2.0 * kf + 1.0) / (2.0 * kf)).sqrt();
        }
        assert!((v - expected).abs() < 1e-13 * expected.abs());
    }

    #[test]
    fn periodic_in_phi() {
        for (j, m) in [(3, 2), (59, -17), (10, 0)] {
            let a = sph_harm(j, m, 0.8, 0.3);
            let b = sph_harm(j, m, 0.8, 0.3 + 2.0 * PI);
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn negative_m_is_conjugate_with_phase() {
        let a = sph_harm(7, 3, 1.0, 0.5);
        let b = sph_harm(7, -3, 1.0, 0.5);
        assert!((b + a.conj()).norm() < 1e-14);
    }
}

//! Wigner small-d matrices for large J.
//!
//! A column `v_m = d^J_{m,m'}(beta)` is the eigenvector of `J_z cos(beta) + J_x sin(beta)`
//! with eigenvalue `m'`, which gives the three-term recurrence
//!
//! ```text
//! b_m v_{m+1} = 2 (m' - m cos beta) / sin beta * v_m - a_m v_{m-1}
//! a_m = sqrt((J+m)(J-m+1)),  b_m = sqrt((J-m)(J+m+1))
//! ```
//!
//! It is run upward from `m = -J` and downward from `m = +J`, each side stopping at the
//! classical centre `m ~ m' cos beta` so both recurrences only travel in their stable
//! (growing) direction. The halves are matched there, renormalized to unit length, and
//! the overall sign is fixed from the closed form of whichever edge element is larger.

use super::factorial::ln_factorial;
use super::quantum::{HalfInt, HalfIntegerJ};

const RESCALE_AT: f64 = 1e150;

/// Single element `d^J_{m_row, m_col}(beta)`.
pub fn wigner_d(j: HalfIntegerJ, m_row: HalfInt, m_col: HalfInt, beta: f64) -> f64 {
    let tj = j.twice() as i32;
    if m_row.twice().abs() > tj || m_col.twice().abs() > tj {
        return 0.0;
    }
    if (tj + m_row.twice()) % 2 != 0 || (tj + m_col.twice()) % 2 != 0 {
        return 0.0;
    }
    let col = wigner_d_column(j, m_col, beta);
    col[((m_row.twice() + tj) / 2) as usize]
}

/// Column `d^J_{m, m_col}(beta)` for `m = -J..=J`.
pub fn wigner_d_column(j: HalfIntegerJ, m_col: HalfInt, beta: f64) -> Vec<f64> {
    let tj = j.twice() as i64;
    let tmc = m_col.twice() as i64;
    assert!(
        tmc.abs() <= tj && (tj + tmc) % 2 == 0,
        "invalid column {m_col} for J={j}"
    );
    let dim = (tj + 1) as usize;
    let jv = tj as f64 / 2.0;
    let mc = tmc as f64 / 2.0;
    let col_index = ((tmc + tj) / 2) as usize;

    let (s, c) = beta.sin_cos();
    if dim == 1 {
        return vec![1.0];
    }
    // Exactly diagonal or anti-diagonal endpoints.
    if s.abs() <= 4.0 * f64::EPSILON {
        let mut v = vec![0.0; dim];
        if c > 0.0 {
            v[col_index] = 1.0;
        } else {
            // d^J_{m',m}(pi) = (-1)^{J+m'} delta_{m',-m}
            let row = dim - 1 - col_index;
            let m_row_twice = 2 * row as i64 - tj;
            v[row] = if ((tj + m_row_twice) / 2) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
        }
        return v;
    }

    let m_of = |i: usize| i as f64 - jv;
    let a = |i: usize| {
        let m = m_of(i);
        ((jv + m) * (jv - m + 1.0)).sqrt()
    };
    let b = |i: usize| {
        let m = m_of(i);
        ((jv - m) * (jv + m + 1.0)).sqrt()
    };
    let diag = |i: usize| 2.0 * (mc - m_of(i) * c) / s;

    let centre = (mc * c + jv).round().clamp(0.0, (dim - 1) as f64) as usize;

    // Upward from m = -J to centre + 1.
    let up_end = (centre + 1).min(dim - 1);
    let mut up = vec![0.0; up_end + 1];
    up[0] = 1.0;
    for i in 0..up_end {
        let prev = if i == 0 { 0.0 } else { a(i) * up[i - 1] };
        up[i + 1] = (diag(i) * up[i] - prev) / b(i);
        if up[i + 1].abs() > RESCALE_AT {
            up.iter_mut().take(i + 2).for_each(|x| *x /= RESCALE_AT);
        }
    }

    // Downward from m = +J to centre - 1:  a_m v_{m-1} = diag_m v_m - b_m v_{m+1}.
    let down_end = centre.saturating_sub(1);
    let mut down = vec![0.0; dim];
    down[dim - 1] = 1.0;
    let mut i = dim - 1;
    while i > down_end {
        let next = if i == dim - 1 {
            0.0
        } else {
            b(i) * down[i + 1]
        };
        down[i - 1] = (diag(i) * down[i] - next) / a(i);
        if down[i - 1].abs() > RESCALE_AT {
            down.iter_mut().skip(i - 1).for_each(|x| *x /= RESCALE_AT);
        }
        i -= 1;
    }

    // Match on the overlap window [down_end, up_end] by least squares.
    let lo = down_end;
    let hi = up_end;
    let (mut num, mut den) = (0.0, 0.0);
    for k in lo..=hi {
        num += up[k] * down[k];
        den += down[k] * down[k];
    }
    let scale = if den > 0.0 { num / den } else { 0.0 };

    let mut v = vec![0.0; dim];
    for k in 0..dim {
        v[k] = if k <= centre { up[k] } else { scale * down[k] };
    }
    if scale == 0.0 || !scale.is_finite() {
        // The upward half vanished on the window: the downward half spans the support.
        v.copy_from_slice(&down);
    }

    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);

    // Sign from the larger closed-form edge element.
    //   d_{ J,m'} = (-1)^{J-m'} sqrt(C(2J, J+m')) cos^{J+m'}(b/2) sin^{J-m'}(b/2)
    //   d_{-J,m'} =             sqrt(C(2J, J-m')) cos^{J-m'}(b/2) sin^{J+m'}(b/2)
    let (sh, ch) = (beta / 2.0).sin_cos();
    let jp = ((tj + tmc) / 2) as f64; // J + m'
    let jm = ((tj - tmc) / 2) as f64; // J - m'
    let log_top = jp * ch.abs().ln() + jm * sh.abs().ln();
    let log_bottom = jm * ch.abs().ln() + jp * sh.abs().ln();
    let (index, expected_sign) = if log_top >= log_bottom {
        let sign = if ((tj - tmc) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        (
            dim - 1,
            sign * (ch.signum().powi(jp as i32)) * (sh.signum().powi(jm as i32)),
        )
    } else {
        (0, ch.signum().powi(jm as i32) * sh.signum().powi(jp as i32))
    };
    if v[index] * expected_sign < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

/// Full `(2J+1) x (2J+1)` matrix, row-major with rows and columns ordered `-J..=J`.
pub fn wigner_d_matrix(j: HalfIntegerJ, beta: f64) -> Vec<Vec<f64>> {
    let dim = j.multiplicity();
    let cols: Vec<Vec<f64>> = j
        .projections()
        .map(|mc| wigner_d_column(j, mc, beta))
        .collect();
    (0..dim)
        .map(|r| (0..dim).map(|c| cols[c][r]).collect())
        .collect()
}

/// `d^J_{M,J}(beta)` for `M = -J..=J` from the closed binomial form, evaluated in log
/// space. For `beta = pi/2` this is the state stretched along +x in the z-quantized
/// frame.
pub fn stretched_rotation_column(j: u32, beta: f64) -> Vec<f64> {
    let (sh, ch) = (beta / 2.0).sin_cos();
    let two_j = 2 * j;
    let ln_c = ch.abs().ln();
    let ln_s = sh.abs().ln();
    (0..=two_j)
        .map(|k| {
            // k = J + M
            let up = k as f64;
            let down = (two_j - k) as f64;
            let ln_binom = ln_factorial(two_j) - ln_factorial(k) - ln_factorial(two_j - k);
            let mut ln_mag = 0.5 * ln_binom;
            if k > 0 {
                ln_mag += up * ln_c;
            }
            if two_j > k {
                ln_mag += down * ln_s;
            }
            let mut sign = 1.0;
            if ch < 0.0 && k % 2 == 1 {
                sign = -sign;
            }
            if sh < 0.0 && (two_j - k) % 2 == 1 {
                sign = -sign;
            }
            sign * ln_mag.exp()
        })
        .collect()
}

//! Clebsch–Gordan, 3j and 6j coefficients from Racah's single-sum formulas.
//!
//! Every term of the alternating sum is formed as `exp(ln|term| - ln|max term|)` so
//! nothing overflows for J up to several hundred.

use super::factorial::ln_factorial;
use super::quantum::{HalfInt, HalfIntegerJ};

/// Triangle rule on doubled integers, including the integer-perimeter condition.
fn triangle(a: i64, b: i64, c: i64) -> bool {
    c >= (a - b).abs() && c <= a + b && (a + b + c) % 2 == 0
}

/// `ln Δ(abc)` for doubled arguments that already satisfy the triangle rule.
fn ln_delta(a: i64, b: i64, c: i64) -> f64 {
    lf((a + b - c) / 2) + lf((a - b + c) / 2) + lf((-a + b + c) / 2) - lf((a + b + c) / 2 + 1)
}

fn lf(n: i64) -> f64 {
    debug_assert!(n >= 0, "negative factorial argument {n}");
    ln_factorial(n as u32)
}

fn parity(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Sum of `sign_k * exp(log_k)` without overflow, returned as `(sign, ln|sum|)`.
fn signed_log_sum(terms: &[(f64, f64)]) -> Option<(f64, f64)> {
    let max = terms.iter().map(|t| t.1).fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return None;
    }
    let sum: f64 = terms.iter().map(|(s, l)| s * (l - max).exp()).sum();
    if sum == 0.0 {
        return None;
    }
    Some((sum.signum(), sum.abs().ln() + max))
}

pub(crate) fn wigner_3j_twice(tj1: i64, tj2: i64, tj3: i64, tm1: i64, tm2: i64, tm3: i64) -> f64 {
    if tj1 < 0 || tj2 < 0 || tj3 < 0 {
        return 0.0;
    }
    if tm1.abs() > tj1 || tm2.abs() > tj2 || tm3.abs() > tj3 {
        return 0.0;
    }
    if (tj1 + tm1) % 2 != 0 || (tj2 + tm2) % 2 != 0 || (tj3 + tm3) % 2 != 0 {
        return 0.0;
    }
    if tm1 + tm2 + tm3 != 0 || !triangle(tj1, tj2, tj3) {
        return 0.0;
    }

    let k_min = 0.max((tj2 - tj3 - tm1) / 2).max((tj1 - tj3 + tm2) / 2);
    let k_max = ((tj1 + tj2 - tj3) / 2)
        .min((tj1 - tm1) / 2)
        .min((tj2 + tm2) / 2);
    if k_min > k_max {
        return 0.0;
    }

    let terms: Vec<(f64, f64)> = (k_min..=k_max)
        .map(|k| {
            let denom = lf(k)
                + lf((tj3 - tj2 + tm1) / 2 + k)
                + lf((tj3 - tj1 - tm2) / 2 + k)
                + lf((tj1 + tj2 - tj3) / 2 - k)
                + lf((tj1 - tm1) / 2 - k)
                + lf((tj2 + tm2) / 2 - k);
            (parity(k), -denom)
        })
        .collect();
    let Some((sign, ln_sum)) = signed_log_sum(&terms) else {
        return 0.0;
    };

    let ln_pref = 0.5
        * (ln_delta(tj1, tj2, tj3)
            + lf((tj1 + tm1) / 2)
            + lf((tj1 - tm1) / 2)
            + lf((tj2 + tm2) / 2)
            + lf((tj2 - tm2) / 2)
            + lf((tj3 + tm3) / 2)
            + lf((tj3 - tm3) / 2));
    let phase = parity((tj1 - tj2 - tm3) / 2);
    phase * sign * (ln_pref + ln_sum).exp()
}

pub(crate) fn wigner_6j_twice(t: [i64; 6]) -> f64 {
    let [a, b, c, d, e, f] = t;
    if t.iter().any(|&x| x < 0) {
        return 0.0;
    }
    if !triangle(a, b, c) || !triangle(a, e, f) || !triangle(d, b, f) || !triangle(d, e, c) {
        return 0.0;
    }
    let sums = [
        (a + b + c) / 2,
        (a + e + f) / 2,
        (d + b + f) / 2,
        (d + e + c) / 2,
    ];
    let pairs = [
        (a + b + d + e) / 2,
        (b + c + e + f) / 2,
        (c + a + f + d) / 2,
    ];
    let t_min = *sums.iter().max().unwrap();
    let t_max = *pairs.iter().min().unwrap();
    if t_min > t_max {
        return 0.0;
    }
    let terms: Vec<(f64, f64)> = (t_min..=t_max)
        .map(|k| {
            let num = lf(k + 1);
            let den: f64 = sums.iter().map(|&s| lf(k - s)).sum::<f64>()
                + pairs.iter().map(|&p| lf(p - k)).sum::<f64>();
            (parity(k), num - den)
        })
        .collect();
    let Some((sign, ln_sum)) = signed_log_sum(&terms) else {
        return 0.0;
    };
    let ln_pref =
        0.5 * (ln_delta(a, b, c) + ln_delta(a, e, f) + ln_delta(d, b, f) + ln_delta(d, e, c));
    sign * (ln_pref + ln_sum).exp()
}

/// Wigner 3j symbol `(j1 j2 j3; m1 m2 m3)`. Returns 0 for any selection-rule violation.
pub fn wigner_3j(
    j1: HalfIntegerJ,
    j2: HalfIntegerJ,
    j3: HalfIntegerJ,
    m1: HalfInt,
    m2: HalfInt,
    m3: HalfInt,
) -> f64 {
    wigner_3j_twice(
        j1.twice() as i64,
        j2.twice() as i64,
        j3.twice() as i64,
        m1.twice() as i64,
        m2.twice() as i64,
        m3.twice() as i64,
    )
}

/// `<j1 m1; j2 m2 | J M>` in the Condon–Shortley convention.
pub fn clebsch_gordan(
    j1: HalfIntegerJ,
    m1: HalfInt,
    j2: HalfIntegerJ,
    m2: HalfInt,
    j: HalfIntegerJ,
    m: HalfInt,
) -> f64 {
    clebsch_gordan_twice(
        j1.twice() as i64,
        m1.twice() as i64,
        j2.twice() as i64,
        m2.twice() as i64,
        j.twice() as i64,
        m.twice() as i64,
    )
}

pub(crate) fn clebsch_gordan_twice(
    tj1: i64,
    tm1: i64,
    tj2: i64,
    tm2: i64,
    tj: i64,
    tm: i64,
) -> f64 {
    if tm1 + tm2 != tm {
        return 0.0;
    }
    let w = wigner_3j_twice(tj1, tj2, tj, tm1, tm2, -tm);
    if w == 0.0 {
        return 0.0;
    }
    parity((tj1 - tj2 + tm) / 2) * ((tj + 1) as f64).sqrt() * w
}

/// Wigner 6j symbol `{j1 j2 j3; j4 j5 j6}`. Returns 0 unless all four triads close.
pub fn wigner_6j(
    j1: HalfIntegerJ,
    j2: HalfIntegerJ,
    j3: HalfIntegerJ,
    j4: HalfIntegerJ,
    j5: HalfIntegerJ,
    j6: HalfIntegerJ,
) -> f64 {
    wigner_6j_twice([j1, j2, j3, j4, j5, j6].map(|j| j.twice() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(v: u32) -> HalfIntegerJ {
        HalfIntegerJ::integer(v)
    }
    fn m(v: i32) -> HalfInt {
        HalfInt::integer(v)
    }

    #[test]
    fn two_spin_one_to_singlet() {
        let cg = clebsch_gordan(j(1), m(1), j(1), m(-1), j(0), m(0));
        assert!((cg - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        let w = wigner_3j(j(1), j(1), j(0), m(1), m(-1), m(0));
        assert!((w - 1.0 / 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn identity_and_stretched_couplings() {
        for jj in [0, 1, 7, 59, 120] {
            let cg = clebsch_gordan(j(jj), m(jj as i32), j(0), m(0), j(jj), m(jj as i32));
            assert!((cg - 1.0).abs() < 1e-13, "j={jj}: {cg}");
        }
        let cg = clebsch_gordan(j(59), m(59), j(1), m(1), j(60), m(60));
        assert!((cg - 1.0).abs() < 1e-13);
    }

    #[test]
    fn selection_rules_give_zero() {
        assert_eq!(wigner_3j(j(1), j(1), j(1), m(1), m(1), m(0)), 0.0);
        assert_eq!(wigner_3j(j(1), j(1), j(3), m(0), m(0), m(0)), 0.0);
        assert_eq!(clebsch_gordan(j(1), m(1), j(1), m(0), j(2), m(0)), 0.0);
        assert_eq!(clebsch_gordan(j(1), m(2), j(1), m(0), j(2), m(2)), 0.0);
        assert_eq!(wigner_6j(j(1), j(1), j(3), j(1), j(1), j(0)), 0.0);
    }

    #[test]
    fn half_integer_spin_doublet() {
        let half = HalfIntegerJ::from_twice(1);
        let up = HalfInt::from_twice(1);
        let down = HalfInt::from_twice(-1);
        let s = clebsch_gordan(half, up, half, down, j(0), m(0));
        assert!((s - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        let t = clebsch_gordan(half, down, half, up, j(0), m(0));
        assert!((t + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn six_j_closed_form_with_zero() {
        // {a b c; b a 0} = (-1)^{a+b+c} / sqrt((2a+1)(2b+1))
        assert!((wigner_6j(j(1), j(1), j(0), j(1), j(1), j(0)) - 1.0 / 3.0).abs() < 1e-15);
        for (a, b, c) in [(2, 3, 4), (5, 5, 1), (10, 7, 12)] {
            let v = wigner_6j(j(a), j(b), j(c), j(b), j(a), j(0));
            let expected = parity((a + b + c) as i64) / (((2 * a + 1) * (2 * b + 1)) as f64).sqrt();
            assert!(
                (v - expected).abs() < 1e-14,
                "{a} {b} {c}: {v} vs {expected}"
            );
        }
    }
}

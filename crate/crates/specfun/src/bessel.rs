//! Bessel functions of the first kind for the orders needed in two and three
//! dimensions: integer orders via ascending series / normalized downward
//! recurrence, half-integer orders via their closed trigonometric forms.

use crate::{Result, SpecFunError};
use std::f64::consts::PI;

/// Below this argument the ascending power series is used for integer orders;
/// above it the series loses digits to cancellation and the normalized
/// downward recurrence takes over.
const SERIES_CUTOFF: f64 = 10.0;

/// J_order(x) for order in {0, 1, 1/2, 3/2} and x >= 0.
///
/// Absolute error is below 1e-12 on [0, 100] for all supported orders.
pub fn bessel_j(order: f64, x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(SpecFunError::Domain(format!(
            "bessel_j requires x >= 0, got {x}"
        )));
    }
    if order == 0.0 {
        Ok(bessel_jn(0, x))
    } else if order == 1.0 {
        Ok(bessel_jn(1, x))
    } else if order == 0.5 {
        Ok(j_half(x))
    } else if order == 1.5 {
        Ok(j_three_halves(x))
    } else {
        Err(SpecFunError::UnsupportedOrder(order))
    }
}

/// J_n(x) for nonnegative integer order n and x >= 0.
///
/// Panics if x is negative or non-finite; use [`bessel_j`] for the checked
/// public surface.
pub fn bessel_jn(n: u32, x: f64) -> f64 {
    assert!(x >= 0.0 && x.is_finite(), "bessel_jn requires finite x >= 0");
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    if x < SERIES_CUTOFF {
        jn_series(n, x)
    } else {
        jn_miller(n, x)
    }
}

/// Ascending power series J_n(x) = sum_k (-1)^k (x/2)^(n+2k) / (k! (n+k)!).
fn jn_series(n: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let q = half * half;
    // leading term (x/2)^n / n!
    let mut term = 1.0;
    for k in 1..=n {
        term *= half / k as f64;
    }
    let mut sum = term;
    for k in 1..200 {
        let kf = k as f64;
        term *= -q / (kf * (kf + n as f64));
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() + 1e-300 {
            break;
        }
    }
    sum
}

/// Downward three-term recurrence seeded far above the turning point and
/// normalized with J_0 + 2 J_2 + 2 J_4 + ... = 1.
fn jn_miller(n: u32, x: f64) -> f64 {
    let n = n as usize;
    let start = {
        let t = x + 12.0 * x.cbrt() + 32.0;
        let mut m = t.ceil() as usize;
        m = m.max(n + 20);
        m + m % 2
    };
    let mut j_up = 0.0_f64; // J_{m+1}
    let mut j_cur = 1.0_f64; // J_m (arbitrary scale)
    let mut norm = 0.0_f64;
    let mut wanted = f64::NAN;
    let mut m = start;
    loop {
        if m == n {
            wanted = j_cur;
        }
        if m == 0 {
            norm += j_cur;
            break;
        }
        if m % 2 == 0 {
            norm += 2.0 * j_cur;
        }
        let j_down = (2.0 * m as f64 / x) * j_cur - j_up;
        j_up = j_cur;
        j_cur = j_down;
        m -= 1;
        if j_cur.abs() > 1e250 {
            j_cur *= 1e-250;
            j_up *= 1e-250;
            norm *= 1e-250;
            wanted *= 1e-250;
        }
    }
    wanted / norm
}

/// J_{1/2}(x) = sqrt(2/(pi x)) sin x, extended by 0 at the origin.
fn j_half(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    (2.0 / (PI * x)).sqrt() * x.sin()
}

/// J_{3/2}(x) = sqrt(2/(pi x)) (sin x / x - cos x), extended by 0 at the origin.
fn j_three_halves(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    (2.0 / (PI * x)).sqrt() * sinc_minus_cos(x)
}

/// sin(x)/x - cos(x) without cancellation near the origin.
fn sinc_minus_cos(x: f64) -> f64 {
    if x >= 1.0 {
        return x.sin() / x - x.cos();
    }
    // sum_{k>=1} (-1)^(k+1) * 2k * x^(2k) / (2k+1)!
    let x2 = x * x;
    let mut term = x2 / 3.0;
    let mut sum = term;
    for k in 1..30 {
        let kf = k as f64;
        term *= -x2 * (kf + 1.0) / (kf * (2.0 * kf + 2.0) * (2.0 * kf + 3.0));
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

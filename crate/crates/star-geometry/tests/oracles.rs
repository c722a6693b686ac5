//! Independent oracles for the symmetric-difference and asymmetry pipeline:
//! a closed form for centered ellipse-vs-disc overlap and a deterministic
//! quasi-Monte-Carlo integrator.

use star_geometry::{fraenkel_asymmetry, symdiff_volume, Point, StarDomain};
use std::f64::consts::PI;

/// |E~ Delta B_1| for the area-normalized ellipse with semi-axes
/// (1+eps, 1-eps)/sqrt(1-eps^2), both centered at the origin.
///
/// With a\~ b\~ = 1 the radial crossing satisfies
/// sin^2(t*) = (1 - b~^2)/(a~^2 - b~^2) and the positive part of
/// int (1/D - 1) dtheta has antiderivative atan((a~/b~) tan t) - t, so the
/// symmetric difference is 4 [atan((a~/b~) tan t*) - t*].
fn centered_ellipse_symdiff_exact(eps: f64) -> f64 {
    let s = (1.0 - eps * eps).powf(-0.5);
    let a = s * (1.0 + eps);
    let b = s * (1.0 - eps);
    let sin2 = (1.0 - b * b) / (a * a - b * b);
    let t = sin2.sqrt().asin();
    4.0 * ((a / b * t.tan()).atan() - t)
}

/// Deterministic low-discrepancy estimate of |Omega Delta B| (R2 sequence).
fn qmc_symdiff(d: &StarDomain, center: Point, radius: f64, samples: usize) -> f64 {
    let (dx0, dx1, dy0, dy1) = d.bounding_box();
    let x0 = dx0.min(center.x - radius);
    let x1 = dx1.max(center.x + radius);
    let y0 = dy0.min(center.y - radius);
    let y1 = dy1.max(center.y + radius);
    let (w, h) = (x1 - x0, y1 - y0);
    // Plastic-number additive recurrence.
    let g = 1.324_717_957_244_746_f64;
    let (a1, a2) = (1.0 / g, 1.0 / (g * g));
    let mut count = 0usize;
    for i in 0..samples {
        let u = (0.5 + a1 * i as f64).fract();
        let v = (0.5 + a2 * i as f64).fract();
        let p = Point::new(x0 + u * w, y0 + v * h);
        let in_ball = (p.x - center.x).powi(2) + (p.y - center.y).powi(2) < radius * radius;
        if in_ball != d.contains(p) {
            count += 1;
        }
    }
    w * h * count as f64 / samples as f64
}

#[test]
fn symdiff_matches_ellipse_closed_form() {
    for &eps in &[0.1, 0.2] {
        let d = StarDomain::ellipse(eps, true).unwrap();
        let exact = centered_ellipse_symdiff_exact(eps);
        let v = symdiff_volume(&d, Point::new(0.0, 0.0), 1.0, 128).unwrap();
        assert!(
            (v - exact).abs() < 1.5e-3,
            "eps={eps}: grid {v} vs exact {exact}"
        );
    }
}

#[test]
fn qmc_oracle_agrees_with_closed_form_and_grid() {
    let eps = 0.2;
    let d = StarDomain::ellipse(eps, true).unwrap();
    let exact = centered_ellipse_symdiff_exact(eps);
    let qmc = qmc_symdiff(&d, Point::new(0.0, 0.0), 1.0, 1_000_000);
    assert!((qmc - exact).abs() < 2e-3, "qmc {qmc} vs exact {exact}");
    let grid = symdiff_volume(&d, Point::new(0.0, 0.0), 1.0, 128).unwrap();
    assert!((qmc - grid).abs() < 3e-3);
}

#[test]
fn ellipse_asymmetry_values_against_closed_form() {
    // The optimal center of a centered ellipse is the origin, so the
    // asymmetry equals the closed-form symmetric difference over pi.
    for &eps in &[0.05, 0.1, 0.2] {
        let d = StarDomain::ellipse(eps, true).unwrap();
        let a = fraenkel_asymmetry(&d).unwrap();
        let exact = centered_ellipse_symdiff_exact(eps) / PI;
        assert!(
            (a.value - exact).abs() < 2e-3,
            "eps={eps}: A {} vs exact {exact}",
            a.value
        );
    }
}

#[test]
fn ellipse_asymmetry_scales_linearly_in_eps() {
    // First-order expansion of the radial gap gives A ~ (4/pi) eps; the
    // ratio A/eps is constant within 10 percent across the family.
    let mut ratios = Vec::new();
    for &eps in &[0.05, 0.1, 0.2] {
        let d = StarDomain::ellipse(eps, true).unwrap();
        let a = fraenkel_asymmetry(&d).unwrap();
        ratios.push(a.value / eps);
    }
    let max = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    assert!(
        max / min < 1.1,
        "A/eps should be stable across the family: {ratios:?}"
    );
    assert!((ratios[0] - 4.0 / PI).abs() < 0.05);
}

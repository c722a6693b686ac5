//! Perimeter deficit against the equal-volume disc, paired with the Fraenkel
//! asymmetry.

use crate::{fraenkel_asymmetry, AsymmetryResult, Result, StarDomain};
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct IsoperimetricReport {
    pub area: f64,
    pub perimeter: f64,
    /// Perimeter of the equal-volume disc.
    pub ball_perimeter: f64,
    /// P(Omega) - P(B); nonnegative up to quadrature error.
    pub perimeter_deficit: f64,
    pub asymmetry: AsymmetryResult,
    /// perimeter deficit / asymmetry^2; NaN when the asymmetry is below
    /// resolution (discs).
    pub deficit_over_asymmetry_sq: f64,
}

pub fn isoperimetric_checks(d: &StarDomain) -> Result<IsoperimetricReport> {
    let area = d.area()?;
    let perimeter = d.perimeter()?;
    let r_eq = (area / PI).sqrt();
    let ball_perimeter = 2.0 * PI * r_eq;
    let perimeter_deficit = perimeter - ball_perimeter;
    let asymmetry = fraenkel_asymmetry(d)?;
    let ratio = if asymmetry.value > 1e-6 {
        perimeter_deficit / (asymmetry.value * asymmetry.value)
    } else {
        f64::NAN
    };
    Ok(IsoperimetricReport {
        area,
        perimeter,
        ball_perimeter,
        perimeter_deficit,
        asymmetry,
        deficit_over_asymmetry_sq: ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_has_zero_deficit() {
        let r = isoperimetric_checks(&StarDomain::disc(1.3).unwrap()).unwrap();
        assert!(r.perimeter_deficit.abs() < 1e-8);
        assert!(r.deficit_over_asymmetry_sq.is_nan());
    }

    #[test]
    fn ellipse_has_positive_deficit() {
        let r = isoperimetric_checks(&StarDomain::ellipse(0.1, true).unwrap()).unwrap();
        assert!(r.perimeter_deficit > 1e-4);
        assert!(r.perimeter_deficit > -1e-6);
    }

    #[test]
    fn perturbed_family_ratio_bounded_below() {
        let mut ratios = Vec::new();
        for &a in &[0.02, 0.04, 0.08] {
            let d = StarDomain::perturbed_disc(a, 3).unwrap();
            let r = isoperimetric_checks(&d).unwrap();
            assert!(r.perimeter_deficit >= -1e-6);
            ratios.push(r.deficit_over_asymmetry_sq);
        }
        let min = ratios.iter().copied().fold(f64::INFINITY, f64::min);
        assert!(min > 0.0, "ratios {ratios:?}");
    }
}

//! Star-shaped domains given by a radial boundary function about a center.

use crate::{GeometryError, Result};
use specfun::integrate;
use std::f64::consts::PI;

const TAU: f64 = 2.0 * PI;

/// Tolerance for area, perimeter and centroid quadratures.
const MEASURE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// Trigonometric interpolant through equally spaced boundary samples.
#[derive(Debug, Clone)]
struct TrigSeries {
    /// Cosine coefficients a_0 .. a_K.
    a: Vec<f64>,
    /// Sine coefficients b_0 (unused) .. b_K.
    b: Vec<f64>,
    /// Number of original samples; even counts halve the top cosine mode.
    n: usize,
}

impl TrigSeries {
    fn fit(samples: &[f64]) -> Self {
        let n = samples.len();
        let kmax = n / 2;
        let mut a = vec![0.0; kmax + 1];
        let mut b = vec![0.0; kmax + 1];
        for k in 0..=kmax {
            let (mut ca, mut cb) = (0.0, 0.0);
            for (j, &f) in samples.iter().enumerate() {
                let t = TAU * (k * j) as f64 / n as f64;
                ca += f * t.cos();
                cb += f * t.sin();
            }
            a[k] = 2.0 * ca / n as f64;
            b[k] = 2.0 * cb / n as f64;
        }
        Self { a, b, n }
    }

    fn top_mode_weight(&self, k: usize) -> f64 {
        if self.n % 2 == 0 && k == self.n / 2 {
            0.5
        } else {
            1.0
        }
    }

    fn eval(&self, theta: f64) -> f64 {
        let mut s = 0.5 * self.a[0];
        for k in 1..self.a.len() {
            let w = self.top_mode_weight(k);
            let t = k as f64 * theta;
            s += w * (self.a[k] * t.cos() + self.b[k] * t.sin());
        }
        s
    }

    fn eval_prime(&self, theta: f64) -> f64 {
        let mut s = 0.0;
        for k in 1..self.a.len() {
            let w = self.top_mode_weight(k);
            let kf = k as f64;
            let t = kf * theta;
            s += w * kf * (-self.a[k] * t.sin() + self.b[k] * t.cos());
        }
        s
    }
}

#[derive(Debug, Clone)]
enum Shape {
    Disc { radius: f64 },
    /// Semi-axes (1+eps, 1-eps), optionally rescaled to the area of the unit
    /// disc by (1-eps^2)^(-1/2).
    Ellipse { eps: f64, scale: f64 },
    /// r(theta) = 1 + a cos(m theta).
    PerturbedDisc { a: f64, m: u32 },
    RegularPolygon { n: u32, circumradius: f64 },
    Table(TrigSeries),
}

/// An open, bounded, star-shaped planar domain: a center plus a positive,
/// 2-pi-periodic Lipschitz radial function, optionally magnified.
#[derive(Debug, Clone)]
pub struct StarDomain {
    center: Point,
    shape: Shape,
    magnification: f64,
    /// Conservative bounds on the magnified radial function.
    r_min: f64,
    r_max: f64,
    /// Human-readable constructor descriptor, used in reports.
    label: String,
}

impl StarDomain {
    fn build(center: Point, shape: Shape, label: String) -> Result<Self> {
        let (r_min, r_max) = radial_bounds(&shape)?;
        if !(r_min > 0.0) {
            return Err(GeometryError::InvalidShape(format!(
                "radial function must stay positive; minimum is {r_min}"
            )));
        }
        Ok(Self {
            center,
            shape,
            magnification: 1.0,
            r_min,
            r_max,
            label,
        })
    }

    pub fn disc(radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(GeometryError::InvalidShape(format!(
                "disc radius must be positive, got {radius}"
            )));
        }
        Self::build(
            Point::new(0.0, 0.0),
            Shape::Disc { radius },
            format!("disc({radius})"),
        )
    }

    /// Ellipse with semi-axes (1+eps, 1-eps); the normalized variant is
    /// rescaled to have the area of the unit disc.
    pub fn ellipse(eps: f64, normalized: bool) -> Result<Self> {
        if !(0.0..1.0).contains(&eps) {
            return Err(GeometryError::InvalidShape(format!(
                "ellipse eps must lie in [0, 1), got {eps}"
            )));
        }
        let scale = if normalized {
            (1.0 - eps * eps).powf(-0.5)
        } else {
            1.0
        };
        let label = if normalized {
            format!("ellipse({eps}, normalized)")
        } else {
            format!("ellipse({eps})")
        };
        Self::build(Point::new(0.0, 0.0), Shape::Ellipse { eps, scale }, label)
    }

    pub fn perturbed_disc(a: f64, m: u32) -> Result<Self> {
        if !(a.abs() < 1.0) || m == 0 {
            return Err(GeometryError::InvalidShape(format!(
                "perturbed disc needs |a| < 1 and m >= 1, got a={a}, m={m}"
            )));
        }
        Self::build(
            Point::new(0.0, 0.0),
            Shape::PerturbedDisc { a, m },
            format!("perturbed_disc({a}, {m})"),
        )
    }

    pub fn regular_polygon(n: u32, circumradius: f64) -> Result<Self> {
        if n < 3 || !(circumradius > 0.0 && circumradius.is_finite()) {
            return Err(GeometryError::InvalidShape(format!(
                "regular polygon needs n >= 3 and R > 0, got n={n}, R={circumradius}"
            )));
        }
        Self::build(
            Point::new(0.0, 0.0),
            Shape::RegularPolygon { n, circumradius },
            format!("regular_polygon({n}, {circumradius})"),
        )
    }

    /// Boundary samples at theta_j = 2 pi j / n, interpolated trigonometrically.
    pub fn from_samples(center: Point, samples: &[f64]) -> Result<Self> {
        if samples.len() < 4 {
            return Err(GeometryError::InvalidShape(format!(
                "need at least 4 boundary samples, got {}",
                samples.len()
            )));
        }
        if samples.iter().any(|s| !(s.is_finite() && *s > 0.0)) {
            return Err(GeometryError::InvalidShape(
                "boundary samples must be positive and finite".into(),
            ));
        }
        let label = format!("table({} samples)", samples.len());
        Self::build(center, Shape::Table(TrigSeries::fit(samples)), label)
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Same shape translated by (vx, vy).
    pub fn translated(&self, vx: f64, vy: f64) -> Self {
        let mut d = self.clone();
        d.center = Point::new(self.center.x + vx, self.center.y + vy);
        d
    }

    /// Same shape magnified by s > 0 about its center.
    pub fn scaled(&self, s: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(GeometryError::InvalidParameter(format!(
                "scale factor must be positive, got {s}"
            )));
        }
        let mut d = self.clone();
        d.magnification *= s;
        d.r_min *= s;
        d.r_max *= s;
        Ok(d)
    }

    /// Boundary distance from the center in direction theta.
    pub fn radial(&self, theta: f64) -> f64 {
        self.magnification * shape_radial(&self.shape, theta)
    }

    /// d radial / d theta (one-sided at polygon vertices).
    pub fn radial_prime(&self, theta: f64) -> f64 {
        self.magnification * shape_radial_prime(&self.shape, theta)
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    /// Axis-aligned bounding box (xmin, xmax, ymin, ymax).
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        (
            self.center.x - self.r_max,
            self.center.x + self.r_max,
            self.center.y - self.r_max,
            self.center.y + self.r_max,
        )
    }

    /// Strict interior test.
    pub fn contains(&self, p: Point) -> bool {
        let dx = p.x - self.center.x;
        let dy = p.y - self.center.y;
        let rr = dx * dx + dy * dy;
        if rr < self.r_min * self.r_min {
            return true;
        }
        if rr >= self.r_max * self.r_max {
            return false;
        }
        match &self.shape {
            Shape::Disc { radius } => rr < (self.magnification * radius).powi(2),
            Shape::Ellipse { eps, scale } => {
                let p_axis = self.magnification * scale * (1.0 + eps);
                let q_axis = self.magnification * scale * (1.0 - eps);
                (dx / p_axis).powi(2) + (dy / q_axis).powi(2) < 1.0
            }
            _ => {
                let theta = dy.atan2(dx);
                rr < self.radial(theta).powi(2)
            }
        }
    }

    /// Angular intervals on which the radial function is smooth.
    fn smooth_pieces(&self) -> Vec<(f64, f64)> {
        match &self.shape {
            Shape::RegularPolygon { n, .. } => {
                let n = *n as usize;
                (0..n)
                    .map(|k| (TAU * k as f64 / n as f64, TAU * (k + 1) as f64 / n as f64))
                    .collect()
            }
            _ => vec![(0.0, PI), (PI, TAU)],
        }
    }

    /// |Omega| = 1/2 int r(theta)^2 dtheta.
    pub fn area(&self) -> Result<f64> {
        let pieces = self.smooth_pieces();
        let tol = MEASURE_TOL / pieces.len() as f64;
        let mut total = 0.0;
        for (lo, hi) in pieces {
            total += integrate(|t| 0.5 * self.radial(t).powi(2), lo, hi, tol)?;
        }
        Ok(total)
    }

    /// Boundary length int sqrt(r^2 + r'^2) dtheta.
    pub fn perimeter(&self) -> Result<f64> {
        let pieces = self.smooth_pieces();
        let tol = MEASURE_TOL / pieces.len() as f64;
        let mut total = 0.0;
        for (lo, hi) in pieces {
            total += integrate(
                |t| (self.radial(t).powi(2) + self.radial_prime(t).powi(2)).sqrt(),
                lo,
                hi,
                tol,
            )?;
        }
        Ok(total)
    }

    /// Radius of the ball with the same area.
    pub fn equal_volume_ball_radius(&self) -> Result<f64> {
        Ok((self.area()? / PI).sqrt())
    }

    /// Mass centroid.
    pub fn centroid(&self) -> Result<Point> {
        let area = self.area()?;
        let pieces = self.smooth_pieces();
        let tol = MEASURE_TOL / pieces.len() as f64;
        let (mut mx, mut my) = (0.0, 0.0);
        for (lo, hi) in pieces {
            mx += integrate(|t| self.radial(t).powi(3) / 3.0 * t.cos(), lo, hi, tol)?;
            my += integrate(|t| self.radial(t).powi(3) / 3.0 * t.sin(), lo, hi, tol)?;
        }
        Ok(Point::new(
            self.center.x + mx / area,
            self.center.y + my / area,
        ))
    }
}

fn shape_radial(shape: &Shape, theta: f64) -> f64 {
    match shape {
        Shape::Disc { radius } => *radius,
        Shape::Ellipse { eps, scale } => {
            let p = 1.0 + eps;
            let q = 1.0 - eps;
            let (s, c) = theta.sin_cos();
            scale / ((c / p).powi(2) + (s / q).powi(2)).sqrt()
        }
        Shape::PerturbedDisc { a, m } => 1.0 + a * (*m as f64 * theta).cos(),
        Shape::RegularPolygon { n, circumradius } => {
            let sector = TAU / *n as f64;
            let t = theta.rem_euclid(sector) - 0.5 * sector;
            circumradius * (0.5 * sector).cos() / t.cos()
        }
        Shape::Table(series) => series.eval(theta),
    }
}

fn shape_radial_prime(shape: &Shape, theta: f64) -> f64 {
    match shape {
        Shape::Disc { .. } => 0.0,
        Shape::Ellipse { eps, scale } => {
            let p = 1.0 + eps;
            let q = 1.0 - eps;
            let (s, c) = theta.sin_cos();
            let d = (c / p).powi(2) + (s / q).powi(2);
            let dprime = 2.0 * s * c * (1.0 / (q * q) - 1.0 / (p * p));
            -0.5 * scale * dprime * d.powf(-1.5)
        }
        Shape::PerturbedDisc { a, m } => {
            let mf = *m as f64;
            -a * mf * (mf * theta).sin()
        }
        Shape::RegularPolygon { n, circumradius } => {
            let sector = TAU / *n as f64;
            let t = theta.rem_euclid(sector) - 0.5 * sector;
            circumradius * (0.5 * sector).cos() * t.sin() / t.cos().powi(2)
        }
        Shape::Table(series) => series.eval_prime(theta),
    }
}

/// Conservative (min, max) of the radial function; exact for closed forms,
/// dense sampling with a safety margin for interpolated tables.
fn radial_bounds(shape: &Shape) -> Result<(f64, f64)> {
    Ok(match shape {
        Shape::Disc { radius } => (*radius, *radius),
        Shape::Ellipse { eps, scale } => (scale * (1.0 - eps), scale * (1.0 + eps)),
        Shape::PerturbedDisc { a, .. } => (1.0 - a.abs(), 1.0 + a.abs()),
        Shape::RegularPolygon { n, circumradius } => (
            circumradius * (PI / *n as f64).cos(),
            *circumradius,
        ),
        Shape::Table(series) => {
            let probes = 4096;
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for j in 0..probes {
                let v = series.eval(TAU * j as f64 / probes as f64);
                if !v.is_finite() {
                    return Err(GeometryError::InvalidShape(
                        "interpolated boundary is not finite".into(),
                    ));
                }
                lo = lo.min(v);
                hi = hi.max(v);
            }
            let pad = 1e-3 * (hi - lo).max(1e-12 * hi.abs());
            (lo - pad, hi + pad)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_disc_measures() {
        let d = StarDomain::disc(1.0).unwrap();
        assert!((d.area().unwrap() - PI).abs() < 1e-10);
        assert!((d.perimeter().unwrap() - TAU).abs() < 1e-10);
        assert!((d.equal_volume_ball_radius().unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn ellipse_area_closed_form() {
        let e = StarDomain::ellipse(0.1, false).unwrap();
        assert!((e.area().unwrap() - PI * 0.99).abs() < 1e-8);
        let en = StarDomain::ellipse(0.1, true).unwrap();
        assert!((en.area().unwrap() - PI).abs() < 1e-8);
        assert!((en.equal_volume_ball_radius().unwrap() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn perturbed_disc_area_closed_form() {
        let p = StarDomain::perturbed_disc(0.05, 3).unwrap();
        assert!((p.area().unwrap() - PI * (1.0 + 0.05 * 0.05 / 2.0)).abs() < 1e-8);
    }

    #[test]
    fn polygon_measures_match_elementary_formulas() {
        for &n in &[3u32, 4, 5, 6, 8] {
            let nf = n as f64;
            let g = StarDomain::regular_polygon(n, 1.0).unwrap();
            let area = 0.5 * nf * (TAU / nf).sin();
            let perim = 2.0 * nf * (PI / nf).sin();
            assert!((g.area().unwrap() - area).abs() < 1e-8, "n={n}");
            assert!((g.perimeter().unwrap() - perim).abs() < 1e-8, "n={n}");
        }
    }

    #[test]
    fn scaling_is_homogeneous() {
        let d = StarDomain::perturbed_disc(0.07, 2).unwrap();
        let s = d.scaled(2.0).unwrap();
        assert!((s.area().unwrap() - 4.0 * d.area().unwrap()).abs() < 1e-7);
        assert!((s.perimeter().unwrap() - 2.0 * d.perimeter().unwrap()).abs() < 1e-7);
        assert!(
            (s.equal_volume_ball_radius().unwrap() - 2.0 * d.equal_volume_ball_radius().unwrap())
                .abs()
                < 1e-7
        );
    }

    #[test]
    fn table_interpolation_reproduces_samples_and_rotation_invariance() {
        let n = 64;
        let samples: Vec<f64> = (0..n)
            .map(|j| {
                let t = TAU * j as f64 / n as f64;
                1.0 + 0.05 * (3.0 * t).cos() + 0.02 * (2.0 * t).sin()
            })
            .collect();
        let d = StarDomain::from_samples(Point::new(0.0, 0.0), &samples).unwrap();
        for (j, &s) in samples.iter().enumerate() {
            let t = TAU * j as f64 / n as f64;
            assert!((d.radial(t) - s).abs() < 1e-12);
        }
        let mut rotated = samples.clone();
        rotated.rotate_left(1);
        let dr = StarDomain::from_samples(Point::new(0.0, 0.0), &rotated).unwrap();
        assert!((d.area().unwrap() - dr.area().unwrap()).abs() < 1e-8);
        assert!((d.perimeter().unwrap() - dr.perimeter().unwrap()).abs() < 1e-8);
    }

    #[test]
    fn table_derivative_matches_finite_difference() {
        let n = 32;
        let samples: Vec<f64> = (0..n)
            .map(|j| 1.0 + 0.1 * (2.0 * TAU * j as f64 / n as f64).cos())
            .collect();
        let d = StarDomain::from_samples(Point::new(0.0, 0.0), &samples).unwrap();
        let h = 1e-6;
        for &t in &[0.3, 1.1, 4.0] {
            let fd = (d.radial(t + h) - d.radial(t - h)) / (2.0 * h);
            assert!((fd - d.radial_prime(t)).abs() < 1e-6);
        }
    }

    #[test]
    fn containment_respects_the_boundary() {
        let d = StarDomain::perturbed_disc(0.1, 3).unwrap();
        for &t in &[0.0, 0.7, 2.0, 5.5] {
            let r = d.radial(t);
            let inside = Point::new(0.999 * r * t.cos(), 0.999 * r * t.sin());
            let outside = Point::new(1.001 * r * t.cos(), 1.001 * r * t.sin());
            assert!(d.contains(inside));
            assert!(!d.contains(outside));
        }
    }

    #[test]
    fn centroid_of_translated_disc() {
        let d = StarDomain::disc(0.7).unwrap().translated(1.5, -2.0);
        let c = d.centroid().unwrap();
        assert!((c.x - 1.5).abs() < 1e-9);
        assert!((c.y + 2.0).abs() < 1e-9);
    }

    #[test]
    fn degenerate_shapes_are_rejected() {
        assert!(StarDomain::disc(0.0).is_err());
        assert!(StarDomain::ellipse(1.0, true).is_err());
        assert!(StarDomain::perturbed_disc(1.2, 3).is_err());
        assert!(StarDomain::regular_polygon(2, 1.0).is_err());
        assert!(StarDomain::from_samples(Point::new(0.0, 0.0), &[1.0, -1.0, 1.0, 1.0]).is_err());
    }
}

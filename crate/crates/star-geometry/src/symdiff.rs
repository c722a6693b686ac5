//! Volume of the symmetric difference between a star domain and a disc, by
//! midpoint quadrature with interior tests for both shapes.

use crate::{GeometryError, Point, Result, StarDomain};
use std::f64::consts::PI;

/// Successive resolutions must agree to this fraction of the ball volume.
const AGREEMENT_FRACTION: f64 = 1e-4;
/// Number of resolution doublings tried before giving up.
const MAX_DOUBLINGS: u32 = 6;

/// Midpoint estimate of |Omega Delta B| on an nx-by-ny tensor grid over the
/// given box.
pub(crate) fn grid_symdiff(
    d: &StarDomain,
    ball_center: Point,
    ball_radius: f64,
    bbox: (f64, f64, f64, f64),
    n: u32,
) -> f64 {
    let (x0, x1, y0, y1) = bbox;
    let nx = n as usize;
    let ny = n as usize;
    let hx = (x1 - x0) / nx as f64;
    let hy = (y1 - y0) / ny as f64;
    let cell = hx * hy;
    let rr_ball = ball_radius * ball_radius;
    let mut count = 0u64;
    for iy in 0..ny {
        let y = y0 + (iy as f64 + 0.5) * hy;
        let dy = y - ball_center.y;
        for ix in 0..nx {
            let x = x0 + (ix as f64 + 0.5) * hx;
            let dx = x - ball_center.x;
            let in_ball = dx * dx + dy * dy < rr_ball;
            let in_domain = d.contains(Point::new(x, y));
            if in_ball != in_domain {
                count += 1;
            }
        }
    }
    count as f64 * cell
}

pub(crate) fn joint_bbox(
    d: &StarDomain,
    ball_center: Point,
    ball_radius: f64,
) -> (f64, f64, f64, f64) {
    let (dx0, dx1, dy0, dy1) = d.bounding_box();
    (
        dx0.min(ball_center.x - ball_radius),
        dx1.max(ball_center.x + ball_radius),
        dy0.min(ball_center.y - ball_radius),
        dy1.max(ball_center.y + ball_radius),
    )
}

/// |Omega Delta B(x0, rho)| refined by doubling the grid resolution until two
/// successive estimates agree within 1e-4 |B|.
pub fn symdiff_volume(
    d: &StarDomain,
    ball_center: Point,
    ball_radius: f64,
    resolution: u32,
) -> Result<f64> {
    if resolution < 64 {
        return Err(GeometryError::InvalidParameter(format!(
            "symdiff resolution must be at least 64, got {resolution}"
        )));
    }
    if !(ball_radius > 0.0 && ball_radius.is_finite()) {
        return Err(GeometryError::InvalidParameter(format!(
            "ball radius must be positive, got {ball_radius}"
        )));
    }
    let bbox = joint_bbox(d, ball_center, ball_radius);
    let target = AGREEMENT_FRACTION * PI * ball_radius * ball_radius;
    let mut n = resolution;
    let mut prev = grid_symdiff(d, ball_center, ball_radius, bbox, n);
    for _ in 0..MAX_DOUBLINGS {
        n *= 2;
        let cur = grid_symdiff(d, ball_center, ball_radius, bbox, n);
        if (cur - prev).abs() <= target {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(GeometryError::SymdiffNonConvergence { best: prev })
}

//! Fraenkel asymmetry: the minimal normalized symmetric difference between a
//! domain and an equal-volume disc over all disc centers, minimized by a
//! multistart Nelder-Mead simplex search on a fixed evaluation grid.

use crate::symdiff::{grid_symdiff, symdiff_volume};
use crate::{GeometryError, Point, Result, StarDomain};
use std::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct AsymmetryOptions {
    /// Starting grid resolution for the symmetric-difference quadrature.
    pub start_resolution: u32,
    /// Rotation applied to the four-point multistart ring.
    pub ring_jitter: f64,
    /// Simplex iteration cap per start.
    pub max_iterations: usize,
}

impl Default for AsymmetryOptions {
    fn default() -> Self {
        Self {
            start_resolution: 64,
            ring_jitter: 0.0,
            max_iterations: 250,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AsymmetryResult {
    /// A(Omega) = |Omega Delta (x0 + B)| / |B| at the optimal center.
    pub value: f64,
    pub optimal_center: Point,
    /// Equal-volume disc radius.
    pub ball_radius: f64,
    /// Objective evaluations across all starts.
    pub evaluations: u64,
    /// False when a simplex hit its iteration cap before shrinking to the
    /// position tolerance; the best value found is still returned.
    pub converged: bool,
}

pub fn fraenkel_asymmetry(d: &StarDomain) -> Result<AsymmetryResult> {
    fraenkel_asymmetry_with(d, &AsymmetryOptions::default())
}

pub fn fraenkel_asymmetry_with(
    d: &StarDomain,
    opts: &AsymmetryOptions,
) -> Result<AsymmetryResult> {
    if opts.start_resolution < 64 {
        return Err(GeometryError::InvalidParameter(format!(
            "asymmetry grid resolution must be at least 64, got {}",
            opts.start_resolution
        )));
    }
    let r_eq = d.equal_volume_ball_radius()?;
    let ball_vol = PI * r_eq * r_eq;
    let centroid = d.centroid()?;

    // One evaluation box shared by every candidate center keeps the objective
    // smooth under small center moves. Centers are confined to a wander
    // region around the centroid; the box covers every admissible ball.
    let wander = 0.75 * r_eq;
    let (dx0, dx1, dy0, dy1) = d.bounding_box();
    let bbox = (
        dx0.min(centroid.x - wander - r_eq),
        dx1.max(centroid.x + wander + r_eq),
        dy0.min(centroid.y - wander - r_eq),
        dy1.max(centroid.y + wander + r_eq),
    );

    // Search resolution: fine enough to rank candidate centers smoothly.
    // The reported value is recomputed afterwards through the strict
    // symmetric-difference path, so the search grid only needs stability.
    let target = 2e-3 * ball_vol;
    let mut n_eval = opts.start_resolution;
    let mut prev = grid_symdiff(d, centroid, r_eq, bbox, n_eval);
    while n_eval < 1024 {
        let n_next = n_eval * 2;
        let cur = grid_symdiff(d, centroid, r_eq, bbox, n_next);
        n_eval = n_next;
        if (cur - prev).abs() <= target {
            break;
        }
        prev = cur;
    }

    let mut evaluations = 0u64;
    let mut objective = |p: Point| -> f64 {
        evaluations += 1;
        let stray_x = (p.x - centroid.x).abs() - wander;
        let stray_y = (p.y - centroid.y).abs() - wander;
        let stray = stray_x.max(stray_y);
        if stray > 0.0 {
            // Steer the simplex back toward the admissible region.
            return 2.0 * ball_vol + stray * ball_vol;
        }
        grid_symdiff(d, p, r_eq, bbox, n_eval)
    };

    // Multistart: the centroid plus a four-point ring of radius r_eq / 4.
    let mut starts = vec![centroid];
    for k in 0..4 {
        let angle = opts.ring_jitter + 0.5 * PI * k as f64;
        starts.push(Point::new(
            centroid.x + 0.25 * r_eq * angle.cos(),
            centroid.y + 0.25 * r_eq * angle.sin(),
        ));
    }

    let tol_pos = 1e-4 * r_eq;
    let mut candidates = Vec::with_capacity(starts.len());
    let mut all_converged = true;
    for start in starts {
        let (p, f, ok) = nelder_mead(&mut objective, start, 0.1 * r_eq, tol_pos, opts.max_iterations);
        all_converged &= ok;
        candidates.push((f, p));
    }

    // Deterministic tie-breaking: smallest value, then lexicographically
    // smallest center among near-ties.
    let best_f = candidates.iter().map(|c| c.0).fold(f64::INFINITY, f64::min);
    let mut best: Option<Point> = None;
    for &(f, p) in &candidates {
        if f <= best_f + 1e-9 * ball_vol {
            best = Some(match best {
                None => p,
                Some(q) => {
                    if (p.x, p.y) < (q.x, q.y) {
                        p
                    } else {
                        q
                    }
                }
            });
        }
    }
    let center = best.expect("at least one start");

    // Reported value follows the public symmetric-difference path exactly.
    let volume = symdiff_volume(d, center, r_eq, opts.start_resolution)?;
    Ok(AsymmetryResult {
        value: volume / ball_vol,
        optimal_center: center,
        ball_radius: r_eq,
        evaluations,
        converged: all_converged,
    })
}

/// Standard Nelder-Mead on the plane; returns (best point, best value,
/// converged). Terminates when the simplex diameter drops below `tol_pos`.
fn nelder_mead(
    f: &mut impl FnMut(Point) -> f64,
    start: Point,
    scale: f64,
    tol_pos: f64,
    max_iterations: usize,
) -> (Point, f64, bool) {
    let mut simplex = [
        start,
        Point::new(start.x + scale, start.y),
        Point::new(start.x, start.y + scale),
    ];
    let mut values = [f(simplex[0]), f(simplex[1]), f(simplex[2])];
    let mut converged = false;

    for _ in 0..max_iterations {
        // Order best -> worst.
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
        let (b, s, w) = (idx[0], idx[1], idx[2]);

        let diameter = simplex
            .iter()
            .flat_map(|p| simplex.iter().map(move |q| (p.x - q.x).hypot(p.y - q.y)))
            .fold(0.0f64, f64::max);
        if diameter <= tol_pos {
            converged = true;
            break;
        }

        let cx = 0.5 * (simplex[b].x + simplex[s].x);
        let cy = 0.5 * (simplex[b].y + simplex[s].y);
        let reflect = Point::new(2.0 * cx - simplex[w].x, 2.0 * cy - simplex[w].y);
        let f_r = f(reflect);

        if f_r < values[b] {
            let expand = Point::new(3.0 * cx - 2.0 * simplex[w].x, 3.0 * cy - 2.0 * simplex[w].y);
            let f_e = f(expand);
            if f_e < f_r {
                simplex[w] = expand;
                values[w] = f_e;
            } else {
                simplex[w] = reflect;
                values[w] = f_r;
            }
        } else if f_r < values[s] {
            simplex[w] = reflect;
            values[w] = f_r;
        } else if f_r < values[w] {
            // Outside contraction.
            let oc = Point::new(cx + 0.5 * (reflect.x - cx), cy + 0.5 * (reflect.y - cy));
            let f_oc = f(oc);
            if f_oc <= f_r {
                simplex[w] = oc;
                values[w] = f_oc;
            } else {
                shrink(&mut simplex, &mut values, b, f);
            }
        } else {
            // Inside contraction.
            let ic = Point::new(cx - 0.5 * (cx - simplex[w].x), cy - 0.5 * (cy - simplex[w].y));
            let f_ic = f(ic);
            if f_ic < values[w] {
                simplex[w] = ic;
                values[w] = f_ic;
            } else {
                shrink(&mut simplex, &mut values, b, f);
            }
        }
    }

    let mut best = 0;
    for i in 1..3 {
        if values[i] < values[best] {
            best = i;
        }
    }
    (simplex[best], values[best], converged)
}

fn shrink(
    simplex: &mut [Point; 3],
    values: &mut [f64; 3],
    best: usize,
    f: &mut impl FnMut(Point) -> f64,
) {
    for i in 0..3 {
        if i != best {
            simplex[i] = Point::new(
                0.5 * (simplex[i].x + simplex[best].x),
                0.5 * (simplex[i].y + simplex[best].y),
            );
            values[i] = f(simplex[i]);
        }
    }
}

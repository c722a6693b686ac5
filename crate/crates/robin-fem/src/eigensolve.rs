//! Smallest generalized eigenpair (K + beta Bd) u = lambda M u by inverse
//! power iteration with Jacobi-preconditioned conjugate-gradient solves.

use crate::assemble::{assemble, Assembly};
use crate::mesh::TriangleMesh;
use crate::sparse::SparseSymMatrix;
use crate::{FemError, Result};

/// First eigenpair: eigenvalue, L2-normalized nonnegative nodal eigenfunction
/// and its minimum nodal value.
#[derive(Debug, Clone)]
pub struct EigenSolution {
    pub lambda: f64,
    pub u: Vec<f64>,
    pub u_min: f64,
    pub iterations: usize,
    pub mesh_h: f64,
}

const POWER_ITERATION_CAP: usize = 10_000;
const CG_REL_TOL: f64 = 1e-12;

/// Jacobi-preconditioned CG. Stops at the relative-residual target, at
/// stagnation (the attainable accuracy for ill-conditioned systems), or at
/// the iteration cap.
fn pcg(
    a: &SparseSymMatrix,
    diag_inv: &[f64],
    b: &[f64],
    x: &mut [f64],
) -> Result<()> {
    let n = a.dim();
    let norm_b = b.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm_b == 0.0 {
        x.fill(0.0);
        return Ok(());
    }
    let mut r = vec![0.0; n];
    a.matvec(x, &mut r);
    for i in 0..n {
        r[i] = b[i] - r[i];
    }
    let mut z: Vec<f64> = (0..n).map(|i| diag_inv[i] * r[i]).collect();
    let mut p = z.clone();
    let mut rz: f64 = r.iter().zip(&z).map(|(a, b)| a * b).sum();
    let mut ap = vec![0.0; n];
    let mut best_res = f64::INFINITY;
    let mut stalled = 0usize;
    let cap = 40 * n + 200;
    for _ in 0..cap {
        let res = r.iter().map(|v| v * v).sum::<f64>().sqrt();
        if res <= CG_REL_TOL * norm_b {
            return Ok(());
        }
        if res < best_res * 0.9999 {
            best_res = res;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled > 60 {
                // Rounding floor reached; the iterate is the attainable best.
                return Ok(());
            }
        }
        a.matvec(&p, &mut ap);
        let pap: f64 = p.iter().zip(&ap).map(|(a, b)| a * b).sum();
        if pap <= 0.0 || !pap.is_finite() {
            return Err(FemError::Solver(format!(
                "CG broke down (p^T A p = {pap}); operator not positive definite"
            )));
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        for i in 0..n {
            z[i] = diag_inv[i] * r[i];
        }
        let rz_new: f64 = r.iter().zip(&z).map(|(a, b)| a * b).sum();
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Err(FemError::Solver(format!(
        "CG failed to reach {CG_REL_TOL:e} relative residual in {cap} iterations"
    )))
}

fn m_normalize(m: &SparseSymMatrix, v: &mut [f64]) {
    let norm = m.bilinear(v, v).sqrt();
    for x in v.iter_mut() {
        *x /= norm;
    }
}

pub(crate) fn smallest_eigenpair_assembled(
    assembly: &Assembly,
    beta: f64,
    tol: f64,
    mesh_h: f64,
) -> Result<EigenSolution> {
    let a = assembly.stiffness.add_scaled(&assembly.boundary_mass, beta);
    let m = &assembly.mass;
    let n = a.dim();
    let diag_inv: Vec<f64> = a
        .diagonal()
        .iter()
        .map(|&d| if d > 0.0 { 1.0 / d } else { 1.0 })
        .collect();

    let mut u = vec![1.0; n];
    m_normalize(m, &mut u);
    let mut lambda = assembly.rayleigh(beta, &u);
    let mut rhs = vec![0.0; n];
    let mut next = u.clone();
    let mut iterations = 0;
    let mut converged = false;
    while iterations < POWER_ITERATION_CAP {
        iterations += 1;
        m.matvec(&u, &mut rhs);
        // Warm start: the previous iterate scaled by 1/lambda approximates
        // the next one well once the iteration settles.
        for i in 0..n {
            next[i] = u[i] / lambda.max(f64::MIN_POSITIVE);
        }
        pcg(&a, &diag_inv, &rhs, &mut next)?;
        m_normalize(m, &mut next);
        let lambda_next = assembly.rayleigh(beta, &next);
        let delta = (lambda_next - lambda).abs();
        std::mem::swap(&mut u, &mut next);
        lambda = lambda_next;
        if delta <= tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(FemError::IterationCap {
            cap: POWER_ITERATION_CAP,
            best_lambda: lambda,
        });
    }

    // The first eigenfunction has one sign; orient it nonnegative.
    m.matvec(&u, &mut rhs);
    let weight: f64 = rhs.iter().sum();
    if weight < 0.0 {
        for x in u.iter_mut() {
            *x = -*x;
        }
    }
    let max_abs = u.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()));
    let u_min = u.iter().copied().fold(f64::INFINITY, f64::min);
    if u_min < -1e-10 * max_abs.max(1.0) {
        return Err(FemError::Solver(format!(
            "first eigenfunction is not single-signed (min {u_min})"
        )));
    }
    Ok(EigenSolution {
        lambda,
        u,
        u_min,
        iterations,
        mesh_h,
    })
}

/// Smallest eigenvalue of (K + beta Bd) u = lambda M u.
///
/// Inverse power iteration runs until the Rayleigh quotient changes by at
/// most `tol` per step; the iteration cap surfaces as a numeric error
/// carrying the best eigenvalue reached.
pub fn smallest_robin_eigenpair(
    mesh: &TriangleMesh,
    beta: f64,
    tol: f64,
) -> Result<EigenSolution> {
    if !(beta > 0.0) {
        return Err(FemError::InvalidParameter(format!(
            "beta must be positive, got {beta}"
        )));
    }
    if !(tol > 0.0) {
        return Err(FemError::InvalidParameter(format!(
            "tol must be positive, got {tol}"
        )));
    }
    let assembly = assemble(mesh);
    smallest_eigenpair_assembled(&assembly, beta, tol, mesh.h)
}

/// (v^T K v + beta v^T Bd v) / (v^T M v) for nodal values v.
pub fn rayleigh_quotient(mesh: &TriangleMesh, beta: f64, v: &[f64]) -> Result<f64> {
    if v.len() != mesh.nodes.len() {
        return Err(FemError::InvalidParameter(format!(
            "expected {} nodal values, got {}",
            mesh.nodes.len(),
            v.len()
        )));
    }
    if v.iter().all(|&x| x == 0.0) {
        return Err(FemError::ZeroVector);
    }
    Ok(assemble(mesh).rayleigh(beta, v))
}

//! Structured triangulation of a star-shaped domain: concentric rings mapped
//! through the radial boundary function.

use crate::{FemError, Result};
use star_geometry::StarDomain;
use std::f64::consts::PI;
use std::fmt::Write as _;

/// Simplicial mesh: node coordinates, counterclockwise triangles and the
/// boundary cycle.
#[derive(Debug, Clone)]
pub struct TriangleMesh {
    pub nodes: Vec<[f64; 2]>,
    pub triangles: Vec<[usize; 3]>,
    /// Consecutive node pairs forming one closed boundary loop.
    pub boundary_edges: Vec<[usize; 2]>,
    /// Longest edge in the mesh.
    pub h: f64,
}

impl TriangleMesh {
    pub fn signed_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangles[t];
        let p = self.nodes[a];
        let q = self.nodes[b];
        let r = self.nodes[c];
        0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]))
    }

    pub fn total_area(&self) -> f64 {
        (0..self.triangles.len()).map(|t| self.signed_area(t)).sum()
    }

    pub fn boundary_length(&self) -> f64 {
        self.boundary_edges
            .iter()
            .map(|&[i, j]| {
                let p = self.nodes[i];
                let q = self.nodes[j];
                (q[0] - p[0]).hypot(q[1] - p[1])
            })
            .sum()
    }

    /// Checks every structural invariant: positive triangle areas, a single
    /// closed boundary cycle, and each boundary edge lying in exactly one
    /// triangle.
    pub fn validate(&self) -> Result<()> {
        for t in 0..self.triangles.len() {
            let a = self.signed_area(t);
            if a <= 1e-14 {
                return Err(FemError::DegenerateTriangle { index: t, area: a });
            }
        }
        if self.boundary_edges.is_empty() {
            return Err(FemError::InvalidMesh("no boundary edges".into()));
        }
        for w in self.boundary_edges.windows(2) {
            if w[0][1] != w[1][0] {
                return Err(FemError::InvalidMesh("boundary edges are not chained".into()));
            }
        }
        let first = self.boundary_edges[0][0];
        let last = self.boundary_edges[self.boundary_edges.len() - 1][1];
        if first != last {
            return Err(FemError::InvalidMesh("boundary cycle is not closed".into()));
        }
        for &[i, j] in &self.boundary_edges {
            let mut owners = 0;
            for tri in &self.triangles {
                let has_i = tri.contains(&i);
                let has_j = tri.contains(&j);
                if has_i && has_j {
                    owners += 1;
                }
            }
            if owners != 1 {
                return Err(FemError::InvalidMesh(format!(
                    "boundary edge [{i}, {j}] belongs to {owners} triangles"
                )));
            }
        }
        Ok(())
    }

    /// Plain-text dump: node count, node lines "x y", triangle count,
    /// triangle lines "i j k", then boundary edge lines "i j".
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.nodes.len());
        for n in &self.nodes {
            let _ = writeln!(out, "{} {}", n[0], n[1]);
        }
        let _ = writeln!(out, "{}", self.triangles.len());
        for t in &self.triangles {
            let _ = writeln!(out, "{} {} {}", t[0], t[1], t[2]);
        }
        for e in &self.boundary_edges {
            let _ = writeln!(out, "{} {}", e[0], e[1]);
        }
        out
    }
}

/// Meshes the domain with `n_rings` concentric rings of `n_sectors` nodes,
/// ring radii (i / n_rings) * radial(theta_j) through the star map.
pub fn mesh_star_domain(d: &StarDomain, n_rings: u32, n_sectors: u32) -> Result<TriangleMesh> {
    if n_rings < 2 || n_sectors < 8 {
        return Err(FemError::InvalidParameter(format!(
            "need n_rings >= 2 and n_sectors >= 8, got ({n_rings}, {n_sectors})"
        )));
    }
    let nr = n_rings as usize;
    let ns = n_sectors as usize;
    let center = d.center();

    let mut nodes = Vec::with_capacity(1 + nr * ns);
    nodes.push([center.x, center.y]);
    for i in 1..=nr {
        let f = i as f64 / nr as f64;
        for j in 0..ns {
            let theta = 2.0 * PI * j as f64 / ns as f64;
            let rho = f * d.radial(theta);
            nodes.push([
                center.x + rho * theta.cos(),
                center.y + rho * theta.sin(),
            ]);
        }
    }
    let node_at = |ring: usize, sector: usize| 1 + (ring - 1) * ns + (sector % ns);

    let mut triangles = Vec::with_capacity(ns * (2 * nr - 1));
    for j in 0..ns {
        triangles.push([0, node_at(1, j), node_at(1, j + 1)]);
    }
    for i in 1..nr {
        for j in 0..ns {
            let a = node_at(i, j);
            let b = node_at(i, j + 1);
            let c = node_at(i + 1, j + 1);
            let e = node_at(i + 1, j);
            triangles.push([a, e, c]);
            triangles.push([a, c, b]);
        }
    }

    let boundary_edges: Vec<[usize; 2]> = (0..ns)
        .map(|j| [node_at(nr, j), node_at(nr, j + 1)])
        .collect();

    let mut h = 0.0f64;
    for t in &triangles {
        for k in 0..3 {
            let p = nodes[t[k]];
            let q = nodes[t[(k + 1) % 3]];
            h = h.max((q[0] - p[0]).hypot(q[1] - p[1]));
        }
    }

    let mesh = TriangleMesh {
        nodes,
        triangles,
        boundary_edges,
        h,
    };
    for t in 0..mesh.triangles.len() {
        let a = mesh.signed_area(t);
        if a <= 1e-14 {
            return Err(FemError::DegenerateTriangle { index: t, area: a });
        }
    }
    Ok(mesh)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_disc_mesh_counts() {
        let d = StarDomain::disc(1.0).unwrap();
        let m = mesh_star_domain(&d, 2, 8).unwrap();
        assert_eq!(m.nodes.len(), 17);
        assert_eq!(m.boundary_edges.len(), 8);
        assert_eq!(m.triangles.len(), 8 + 16);
        m.validate().unwrap();
        for t in 0..m.triangles.len() {
            assert!(m.signed_area(t) > 0.0);
        }
    }

    #[test]
    fn mesh_area_converges_quadratically_to_disc_area() {
        let d = StarDomain::disc(1.0).unwrap();
        let area = d.area().unwrap();
        let mut errs = Vec::new();
        for &(r, s) in &[(8u32, 24u32), (16, 48), (32, 96)] {
            let m = mesh_star_domain(&d, r, s).unwrap();
            errs.push((area - m.total_area()).abs() / area);
        }
        assert!(errs[0] / errs[1] > 3.0 && errs[0] / errs[1] < 5.0);
        assert!(errs[1] / errs[2] > 3.0 && errs[1] / errs[2] < 5.0);
    }

    #[test]
    fn boundary_length_converges_to_perimeter() {
        let d = StarDomain::disc(1.0).unwrap();
        let per = d.perimeter().unwrap();
        let mut errs = Vec::new();
        for &(r, s) in &[(8u32, 24u32), (16, 48), (32, 96)] {
            let m = mesh_star_domain(&d, r, s).unwrap();
            errs.push((per - m.boundary_length()).abs() / per);
        }
        assert!(errs[0] / errs[1] > 3.0 && errs[0] / errs[1] < 5.0);
        assert!(errs[1] / errs[2] > 3.0 && errs[1] / errs[2] < 5.0);
    }

    #[test]
    fn star_shapes_mesh_cleanly() {
        for d in [
            StarDomain::ellipse(0.2, true).unwrap(),
            StarDomain::perturbed_disc(0.08, 4).unwrap(),
            StarDomain::regular_polygon(5, 1.0).unwrap(),
        ] {
            let m = mesh_star_domain(&d, 8, 24).unwrap();
            m.validate().unwrap();
        }
    }

    #[test]
    fn rejects_too_coarse_parameters() {
        let d = StarDomain::disc(1.0).unwrap();
        assert!(mesh_star_domain(&d, 1, 24).is_err());
        assert!(mesh_star_domain(&d, 4, 4).is_err());
    }

    #[test]
    fn dump_round_trips_counts() {
        let d = StarDomain::disc(1.0).unwrap();
        let m = mesh_star_domain(&d, 2, 8).unwrap();
        let text = m.dump();
        let mut lines = text.lines();
        let n: usize = lines.next().unwrap().parse().unwrap();
        assert_eq!(n, 17);
        let node_lines: Vec<&str> = (&mut lines).take(n).collect();
        assert_eq!(node_lines.len(), 17);
        assert!(node_lines[0].split_whitespace().count() == 2);
        let t: usize = lines.next().unwrap().parse().unwrap();
        assert_eq!(t, 24);
        let tri_lines: Vec<&str> = (&mut lines).take(t).collect();
        assert!(tri_lines.iter().all(|l| l.split_whitespace().count() == 3));
        let rest: Vec<&str> = lines.collect();
        assert_eq!(rest.len(), 8);
        assert!(rest.iter().all(|l| l.split_whitespace().count() == 2));
    }
}

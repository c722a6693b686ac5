//! P1 assembly of the three bilinear forms: gradient-gradient, boundary mass
//! and consistent volume mass.

use crate::mesh::TriangleMesh;
use crate::sparse::SparseSymMatrix;

pub struct Assembly {
    /// int grad u . grad v.
    pub stiffness: SparseSymMatrix,
    /// int_boundary u v (1D P1 mass on each boundary edge).
    pub boundary_mass: SparseSymMatrix,
    /// Consistent mass int u v.
    pub mass: SparseSymMatrix,
}

impl Assembly {
    /// (v^T K v + beta v^T Bd v) / (v^T M v).
    pub fn rayleigh(&self, beta: f64, v: &[f64]) -> f64 {
        let num = self.stiffness.bilinear(v, v) + beta * self.boundary_mass.bilinear(v, v);
        num / self.mass.bilinear(v, v)
    }
}

pub fn assemble(mesh: &TriangleMesh) -> Assembly {
    let n = mesh.nodes.len();
    let mut k_trip = Vec::with_capacity(9 * mesh.triangles.len());
    let mut m_trip = Vec::with_capacity(9 * mesh.triangles.len());
    for (t, tri) in mesh.triangles.iter().enumerate() {
        let p = [mesh.nodes[tri[0]], mesh.nodes[tri[1]], mesh.nodes[tri[2]]];
        let area = mesh.signed_area(t);
        // Barycentric gradients: grad l_i = (b_i, c_i) / (2 area).
        let b = [
            p[1][1] - p[2][1],
            p[2][1] - p[0][1],
            p[0][1] - p[1][1],
        ];
        let c = [
            p[2][0] - p[1][0],
            p[0][0] - p[2][0],
            p[1][0] - p[0][0],
        ];
        let quarter = 1.0 / (4.0 * area);
        for i in 0..3 {
            for j in 0..3 {
                k_trip.push((tri[i], tri[j], quarter * (b[i] * b[j] + c[i] * c[j])));
                let mass = if i == j { area / 6.0 } else { area / 12.0 };
                m_trip.push((tri[i], tri[j], mass));
            }
        }
    }
    let mut bd_trip = Vec::with_capacity(4 * mesh.boundary_edges.len());
    for &[i, j] in &mesh.boundary_edges {
        let p = mesh.nodes[i];
        let q = mesh.nodes[j];
        let len = (q[0] - p[0]).hypot(q[1] - p[1]);
        bd_trip.push((i, i, len / 3.0));
        bd_trip.push((j, j, len / 3.0));
        bd_trip.push((i, j, len / 6.0));
        bd_trip.push((j, i, len / 6.0));
    }
    Assembly {
        stiffness: SparseSymMatrix::from_triplets(n, &k_trip),
        boundary_mass: SparseSymMatrix::from_triplets(n, &bd_trip),
        mass: SparseSymMatrix::from_triplets(n, &m_trip),
    }
}

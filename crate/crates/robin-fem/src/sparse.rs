//! Compressed sparse rows with exactly symmetric construction.

/// Symmetric sparse matrix stored with its full pattern for fast products.
/// Symmetry is exact because element loops push both ordered entries with the
/// same floating-point value.
#[derive(Debug, Clone)]
pub struct SparseSymMatrix {
    dim: usize,
    row_ptr: Vec<usize>,
    col_idx: Vec<u32>,
    values: Vec<f64>,
}

impl SparseSymMatrix {
    /// Builds from (row, col, value) triplets, summing duplicates.
    pub fn from_triplets(dim: usize, triplets: &[(usize, usize, f64)]) -> Self {
        let mut counts = vec![0usize; dim + 1];
        for &(r, _, _) in triplets {
            counts[r + 1] += 1;
        }
        for i in 0..dim {
            counts[i + 1] += counts[i];
        }
        let mut order: Vec<u32> = (0..triplets.len() as u32).collect();
        order.sort_unstable_by_key(|&t| {
            let (r, c, _) = triplets[t as usize];
            (r, c)
        });

        let mut row_ptr = vec![0usize; dim + 1];
        let mut col_idx = Vec::with_capacity(triplets.len());
        let mut values = Vec::with_capacity(triplets.len());
        let mut last: Option<(usize, usize)> = None;
        for &t in &order {
            let (r, c, v) = triplets[t as usize];
            if last == Some((r, c)) {
                *values.last_mut().unwrap() += v;
            } else {
                col_idx.push(c as u32);
                values.push(v);
                row_ptr[r + 1] += 1;
                last = Some((r, c));
            }
        }
        for i in 0..dim {
            row_ptr[i + 1] += row_ptr[i];
        }
        Self {
            dim,
            row_ptr,
            col_idx,
            values,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        debug_assert_eq!(x.len(), self.dim);
        debug_assert_eq!(y.len(), self.dim);
        for r in 0..self.dim {
            let mut acc = 0.0;
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                acc += self.values[k] * x[self.col_idx[k] as usize];
            }
            y[r] = acc;
        }
    }

    /// x^T A y.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut acc = 0.0;
        for r in 0..self.dim {
            let mut row = 0.0;
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                row += self.values[k] * y[self.col_idx[k] as usize];
            }
            acc += x[r] * row;
        }
        acc
    }

    pub fn diagonal(&self) -> Vec<f64> {
        let mut d = vec![0.0; self.dim];
        for r in 0..self.dim {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                if self.col_idx[k] as usize == r {
                    d[r] += self.values[k];
                }
            }
        }
        d
    }

    /// self + s * other, by triplet merge.
    pub fn add_scaled(&self, other: &Self, s: f64) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut triplets =
            Vec::with_capacity(self.values.len() + other.values.len());
        for r in 0..self.dim {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                triplets.push((r, self.col_idx[k] as usize, self.values[k]));
            }
            for k in other.row_ptr[r]..other.row_ptr[r + 1] {
                triplets.push((r, other.col_idx[k] as usize, s * other.values[k]));
            }
        }
        Self::from_triplets(self.dim, &triplets)
    }

    /// Maximum |A_ij - A_ji| over the stored pattern; zero for matrices built
    /// from symmetric element contributions.
    pub fn asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for k in self.row_ptr[r]..self.row_ptr[r + 1] {
                let c = self.col_idx[k] as usize;
                let mut transposed = 0.0;
                for k2 in self.row_ptr[c]..self.row_ptr[c + 1] {
                    if self.col_idx[k2] as usize == r {
                        transposed = self.values[k2];
                        break;
                    }
                }
                worst = worst.max((self.values[k] - transposed).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triplets_sum_and_order() {
        let m = SparseSymMatrix::from_triplets(
            3,
            &[(0, 0, 1.0), (0, 0, 2.0), (1, 2, 4.0), (2, 1, 4.0), (2, 2, 5.0)],
        );
        assert_eq!(m.nnz(), 4);
        let mut y = vec![0.0; 3];
        m.matvec(&[1.0, 1.0, 1.0], &mut y);
        assert_eq!(y, vec![3.0, 4.0, 9.0]);
        assert_eq!(m.asymmetry(), 0.0);
        assert_eq!(m.diagonal(), vec![3.0, 0.0, 5.0]);
    }

    #[test]
    fn add_scaled_merges_patterns() {
        let a = SparseSymMatrix::from_triplets(2, &[(0, 0, 1.0), (1, 1, 1.0)]);
        let b = SparseSymMatrix::from_triplets(2, &[(0, 1, 2.0), (1, 0, 2.0)]);
        let c = a.add_scaled(&b, 0.5);
        let mut y = vec![0.0; 2];
        c.matvec(&[1.0, 2.0], &mut y);
        assert_eq!(y, vec![3.0, 3.0]);
    }

    #[test]
    fn bilinear_matches_matvec() {
        let m = SparseSymMatrix::from_triplets(2, &[(0, 0, 2.0), (0, 1, 1.0), (1, 0, 1.0), (1, 1, 3.0)]);
        let x = [1.0, -2.0];
        let mut y = vec![0.0; 2];
        m.matvec(&x, &mut y);
        let direct = x[0] * y[0] + x[1] * y[1];
        assert_eq!(m.bilinear(&x, &x), direct);
    }
}

//! Small dense complex matrices for the verification oracles.

use std::ops::{Index, IndexMut};

use num_complex::Complex64;

/// Square complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let dim = rows.len();
        let mut m = Matrix::zeros(dim);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix must be square");
            for (c, &v) in row.iter().enumerate() {
                m[(r, c)] = v;
            }
        }
        m
    }

    /// Builds a matrix whose `c`-th column is `columns[c]`.
    pub fn from_columns(columns: &[Vec<Complex64>]) -> Self {
        let dim = columns.len();
        let mut m = Matrix::zeros(dim);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), dim, "matrix must be square");
            for (r, &v) in col.iter().enumerate() {
                m[(r, c)] = v;
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, c: usize) -> Vec<Complex64> {
        (0..self.dim).map(|r| self[(r, c)]).collect()
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (a, b) = (self.dim, rhs.dim);
        let mut out = Matrix::zeros(a * b);
        for i in 0..a {
            for j in 0..a {
                let s = self[(i, j)];
                for k in 0..b {
                    for l in 0..b {
                        out[(i * b + k, j * b + l)] = s * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// `min_φ ‖self − e^{iφ}·other‖_max`, with `φ` taken from the ratio at the
    /// largest-magnitude entry of `other`.
    pub fn phase_aligned_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        let (idx, pivot) = other
            .data
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
            .map(|(i, v)| (i, *v))
            .unwrap_or((0, Complex64::new(0.0, 0.0)));
        if pivot.norm() == 0.0 {
            return self.data.iter().map(|v| v.norm()).fold(0.0, f64::max);
        }
        let ratio = self.data[idx] / pivot;
        let phase = if ratio.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            ratio / ratio.norm()
        };
        self.max_abs_diff(&other.scale(phase))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Complex64;

    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.dim + c]
    }
}

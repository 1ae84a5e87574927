//! Small dense symmetric matrices and a cyclic Jacobi eigensolver.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0.0; n * n],
        }
    }

    /// Builds a matrix from rows, rejecting non-square or non-symmetric input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix", "rows must form a square matrix"));
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("matrix", "entries must be finite"));
        }
        let m = Self { n, data };
        let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);
        for i in 0..n {
            for j in (i + 1)..n {
                let dev = (m.get(i, j) - m.get(j, i)).abs();
                if dev > 1e-14 * scale {
                    return Err(Error::NotSymmetric {
                        row: i,
                        col: j,
                        deviation: dev,
                    });
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j {
                    s += self.get(i, j).powi(2);
                }
            }
        }
        s.sqrt()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }
}

/// Eigenpairs sorted by ascending eigenvalue; `vectors[k]` belongs to
/// `values[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi diagonalization.
pub fn jacobi_eigen(matrix: &SymmetricMatrix) -> Result<Eigen> {
    let n = matrix.dim();
    let mut a = matrix.clone();
    let mut v = SymmetricMatrix::zeros(n).data;
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = matrix.frobenius_norm();
    let threshold = 1e-15 * norm;
    let mut sweeps = 0;
    while a.off_diagonal_norm() > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::EigenNotConverged {
                sweeps,
                off_norm: a.off_diagonal_norm(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, p, q, c, s);
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut pairs: Vec<(f64, Vec<f64>)> = (0..n)
        .map(|k| (a.get(k, k), (0..n).map(|i| v[i * n + k]).collect()))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    let (values, vectors) = pairs.into_iter().unzip();
    Ok(Eigen { values, vectors })
}

/// Applies `Jᵀ A J` for the plane rotation in `(p, q)`.
fn rotate(a: &mut SymmetricMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.dim();
    let app = a.get(p, p);
    let aqq = a.get(q, q);
    let apq = a.get(p, q);
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, c * akp - s * akq);
        a.set(k, q, s * akp + c * akq);
    }
    a.set(p, p, c * c * app - 2.0 * s * c * apq + s * s * aqq);
    a.set(q, q, s * s * app + 2.0 * s * c * apq + c * c * aqq);
    a.set(p, q, 0.0);
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

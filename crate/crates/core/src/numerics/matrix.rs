//! Dense matrices and spectral estimates, sized for desk-scale oracles.

use rand::Rng;

use crate::error::{Error, Result};

use super::{SeededRng, Vec64};

/// Dense row-major `f64` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat64 {
    data: Vec<f64>,
    rows: usize,
    cols: usize,
}

impl Mat64 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        Mat64 {
            data: vec![0.0; rows * cols],
            rows,
            cols,
        }
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::invalid("matrix must have at least one row"));
        }
        let c = rows[0].len();
        if c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::invalid("matrix rows must be nonempty and equal length"));
        }
        let data: Vec<f64> = rows.into_iter().flatten().collect();
        if let Some(i) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::invalid(format!("nonfinite matrix entry at {i}")));
        }
        Ok(Mat64 { data, rows: r, cols: c })
    }

    pub fn diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Mat64::zeros(n, n);
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, v);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, v| m.max(v.abs()))
    }

    /// Largest absolute asymmetry `max |A - A^T|`; zero for square
    /// symmetric matrices.
    pub fn max_asymmetry(&self) -> f64 {
        assert_eq!(self.rows, self.cols);
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        worst
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && self.max_asymmetry() <= 1e-9 * self.max_abs().max(1e-300)
    }

    pub fn matvec(&self, v: &Vec64) -> Vec64 {
        assert_eq!(self.cols, v.dim());
        let out = (0..self.rows)
            .map(|i| super::pairwise_dot(self.row(i), v.as_slice()))
            .collect();
        Vec64::from_raw(out)
    }

    /// Adds `value` to every diagonal entry.
    pub fn add_diagonal(&mut self, value: f64) {
        assert_eq!(self.rows, self.cols);
        for i in 0..self.rows {
            let v = self.get(i, i) + value;
            self.set(i, i, v);
        }
    }

    /// Solves `A x = b` by LU decomposition with partial pivoting.
    ///
    /// Singular (or numerically singular) systems report the offending
    /// pivot column.
    pub fn lu_solve(&self, b: &Vec64) -> Result<Vec64> {
        if self.rows != self.cols {
            return Err(Error::invalid("lu_solve requires a square matrix"));
        }
        if b.dim() != self.rows {
            return Err(Error::invalid("lu_solve dimension mismatch"));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut x = b.as_slice().to_vec();
        let scale = self.max_abs().max(f64::MIN_POSITIVE);

        for col in 0..n {
            let mut pivot_row = col;
            let mut pivot_val = a[col * n + col].abs();
            for r in (col + 1)..n {
                let v = a[r * n + col].abs();
                if v > pivot_val {
                    pivot_val = v;
                    pivot_row = r;
                }
            }
            if pivot_val <= 1e-13 * scale {
                return Err(Error::numerical(format!(
                    "singular system: pivot {pivot_val:.3e} in column {col}"
                )));
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                x.swap(col, pivot_row);
            }
            let pivot = a[col * n + col];
            for r in (col + 1)..n {
                let f = a[r * n + col] / pivot;
                if f == 0.0 {
                    continue;
                }
                a[r * n + col] = 0.0;
                for j in (col + 1)..n {
                    a[r * n + j] -= f * a[col * n + j];
                }
                x[r] -= f * x[col];
            }
        }
        for col in (0..n).rev() {
            let mut acc = x[col];
            for j in (col + 1)..n {
                acc -= a[col * n + j] * x[j];
            }
            x[col] = acc / a[col * n + col];
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::numerical("lu_solve produced nonfinite solution"));
        }
        Ok(Vec64::from_raw(x))
    }
}

/// Power-iteration estimate of the spectral norm of a symmetric linear
/// operator given only matrix-vector products.
///
/// The returned value is `||A v||` for the final unit iterate, hence always
/// a lower estimate of `||A||_2` that converges from below as `iters`
/// grows. Deterministic for a given stream.
pub fn power_iteration_opnorm<F>(
    mut matvec: F,
    dim: usize,
    iters: usize,
    rng: &mut SeededRng,
) -> Result<f64>
where
    F: FnMut(&Vec64) -> Vec64,
{
    if dim == 0 {
        return Err(Error::invalid("operator dimension must be >= 1"));
    }
    if iters == 0 {
        return Err(Error::invalid("power iteration needs at least one step"));
    }
    let mut v = Vec64::from_raw((0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect());
    let norm = v.norm2();
    if norm == 0.0 {
        // Astronomically unlikely; restartable by construction.
        v = Vec64::from_raw((0..dim).map(|i| (i + 1) as f64).collect());
    }
    let mut estimate = 0.0;
    for step in 0..iters {
        let vn = v.norm2();
        let unit = v.scale(1.0 / vn);
        let next = matvec(&unit);
        if !next.is_finite() {
            return Err(Error::numerical(format!(
                "operator returned nonfinite values at power-iteration step {step}"
            )));
        }
        estimate = next.norm2();
        if estimate == 0.0 {
            return Ok(0.0);
        }
        v = next;
    }
    Ok(estimate)
}

/// Estimates the smallest eigenvalue of a symmetric operator by power
/// iteration on the shifted operator `c I - A`, where `c` is an opnorm
/// estimate of `A`. Advisory only: both stages are lower estimates.
pub fn smallest_eigenvalue_estimate<F>(
    mut matvec: F,
    dim: usize,
    iters: usize,
    rng: &mut SeededRng,
) -> Result<f64>
where
    F: FnMut(&Vec64) -> Vec64,
{
    let mut probe = rng.derive("opnorm");
    let c = power_iteration_opnorm(&mut matvec, dim, iters, &mut probe)?;
    let mut shifted_rng = rng.derive("shifted");
    let shifted = |v: &Vec64| {
        let av = matvec(v);
        let mut out = v.scale(c);
        out.axpy(-1.0, &av);
        out
    };
    let top = power_iteration_opnorm(shifted, dim, iters, &mut shifted_rng)?;
    Ok(c - top)
}

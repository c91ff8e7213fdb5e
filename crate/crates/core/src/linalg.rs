//! Dense exact matrices over [`Scalar`] and Gauss-Jordan elimination.
//!
//! [`Elimination`] records the row operations it performs, so the same
//! reduction can be replayed on right-hand sides (solving many systems with
//! one coefficient matrix) or on the identity (recovering the transform `E`
//! with `E * A = rref(A)`).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Rows must share one length. `cols` is needed for the zero-row case.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("row of length {} in a {cols}-column matrix", bad.len())));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(r, t);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(t, c);
                    if !b.is_zero() {
                        let cell = &mut out.data[r * rhs.cols + c];
                        *cell += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        Elimination::new(self).rank()
    }

    pub fn determinant(&self) -> Result<Scalar> {
        self.require_square()?;
        let e = Elimination::new(self);
        if e.rank() < self.rows {
            return Ok(Scalar::zero());
        }
        // rref = E * A with rref = I, so det(A) = 1 / det(E).
        let mut det_e = Scalar::one();
        for op in &e.ops {
            match op {
                RowOp::Swap(..) => det_e = -det_e,
                RowOp::Scale(_, s) => det_e = &det_e * s,
                RowOp::AddMul { .. } => {}
            }
        }
        det_e.inv()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        self.require_square()?;
        let e = Elimination::new(self);
        if e.rank() < self.rows {
            return Err(Error::DivisionByZero);
        }
        Ok(e.transform())
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(Scalar::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowOp {
    Swap(usize, usize),
    Scale(usize, Scalar),
    /// `row[target] += factor * row[source]`
    AddMul { target: usize, source: usize, factor: Scalar },
}

impl RowOp {
    fn apply(&self, v: &mut [Scalar]) {
        match self {
            RowOp::Swap(a, b) => v.swap(*a, *b),
            RowOp::Scale(r, s) => v[*r] = &v[*r] * s,
            RowOp::AddMul { target, source, factor } => {
                if !v[*source].is_zero() {
                    let delta = factor * &v[*source];
                    v[*target] += &delta;
                }
            }
        }
    }
}

/// Reduced row-echelon form with the row operations that produced it.
#[derive(Debug, Clone)]
pub struct Elimination {
    rref: Matrix,
    pivots: Vec<usize>,
    ops: Vec<RowOp>,
    source_rows: usize,
}

impl Elimination {
    pub fn new(m: &Matrix) -> Self {
        let mut a = m.clone();
        let mut ops = Vec::new();
        let mut pivots = Vec::new();
        let cols = a.cols;
        let mut next = 0;
        for c in 0..cols {
            if next == a.rows {
                break;
            }
            let Some(p) = (next..a.rows).find(|&r| !a.get(r, c).is_zero()) else { continue };
            if p != next {
                for j in 0..cols {
                    a.data.swap(p * cols + j, next * cols + j);
                }
                ops.push(RowOp::Swap(p, next));
            }
            let lead = a.get(next, c).clone();
            if !lead.is_one() {
                let inv = lead.inv().expect("pivot is nonzero");
                for j in c..cols {
                    let v = &a.data[next * cols + j];
                    if !v.is_zero() {
                        a.data[next * cols + j] = v * &inv;
                    }
                }
                ops.push(RowOp::Scale(next, inv));
            }
            let support: Vec<usize> = (c..cols).filter(|&j| !a.get(next, j).is_zero()).collect();
            for r in 0..a.rows {
                if r == next || a.get(r, c).is_zero() {
                    continue;
                }
                let factor = -a.get(r, c);
                for &j in &support {
                    let delta = &factor * a.get(next, j);
                    a.data[r * cols + j] += &delta;
                }
                ops.push(RowOp::AddMul { target: r, source: next, factor });
            }
            pivots.push(c);
            next += 1;
        }
        Self { rref: a, pivots, ops, source_rows: m.rows }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn rref(&self) -> &Matrix {
        &self.rref
    }

    /// Pivot column of each nonzero rref row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ops(&self) -> &[RowOp] {
        &self.ops
    }

    /// Replay the row operations on a column vector.
    pub fn apply(&self, v: &mut [Scalar]) {
        for op in &self.ops {
            op.apply(v);
        }
    }

    /// The invertible `E` with `E * A = rref(A)`.
    pub fn transform(&self) -> Matrix {
        let n = self.source_rows;
        let mut cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                let mut e = vec![Scalar::zero(); n];
                e[j] = Scalar::one();
                self.apply(&mut e);
                e
            })
            .collect();
        let mut out = Matrix::zeros(n, n);
        for (j, col) in cols.iter_mut().enumerate() {
            for (i, v) in col.drain(..).enumerate() {
                out.set(i, j, v);
            }
        }
        out
    }

    /// A solution of `A x = b` (free variables zero), or `None` if the system
    /// is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut rhs = b.to_vec();
        self.apply(&mut rhs);
        if rhs[self.rank()..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.rref.cols];
        for (row, &col) in self.pivots.iter().enumerate() {
            x[col] = rhs[row].clone();
        }
        Some(x)
    }
}

//! Dense matrices over a semiring and the stationary Bellman equation
//! `X = H ⊙ X ⊕ F`.

mod bellman;
mod graph;

pub use bellman::{
    kleene_star, kleene_star_with_stats, solve_bellman_gauss_seidel, solve_bellman_jacobi, BellmanSolver, Fixpoint,
    GaussSeidel, Jacobi, Star,
};
pub use graph::{shortest_paths, Edge, Graph};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semiring::{ExtReal, SemiringSpec};

/// Products with at least this many scalar multiply-adds are split across
/// rows in parallel. Each output entry is still reduced sequentially, so the
/// result does not depend on the number of threads.
const PAR_WORK: usize = 1 << 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatOp {
    Add,
    Mul,
}

/// Dense row-major matrix with entries in a semiring's domain.
#[derive(Clone, PartialEq)]
pub struct SemiringMatrix<T: Scalar> {
    rows: usize,
    cols: usize,
    entries: Vec<ExtReal<T>>,
    spec: SemiringSpec<T>,
}

impl<T: Scalar> SemiringMatrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<ExtReal<T>>, spec: SemiringSpec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(format!(
                "matrix must be nonempty, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for &x in &entries {
            spec.check(x)?;
        }
        Ok(Self {
            rows,
            cols,
            entries,
            spec,
        })
    }

    /// Builds a matrix from raw row vectors.
    pub fn from_rows(rows: &[Vec<T>], spec: SemiringSpec<T>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| ExtReal::new(x))
            .collect::<Result<Vec<_>>>()?;
        Self::new(rows.len(), cols, entries, spec)
    }

    pub(crate) fn filled(rows: usize, cols: usize, value: ExtReal<T>, spec: SemiringSpec<T>) -> Self {
        Self {
            rows,
            cols,
            entries: vec![value; rows * cols],
            spec,
        }
    }

    /// The all-`0̄` matrix.
    pub fn zeros(rows: usize, cols: usize, spec: SemiringSpec<T>) -> Self {
        let zero = spec.zero();
        Self::filled(rows, cols, zero, spec)
    }

    /// `1̄` on the diagonal, `0̄` elsewhere.
    pub fn identity(n: usize, spec: SemiringSpec<T>) -> Self {
        let mut m = Self::zeros(n, n, spec);
        let one = m.spec.one();
        for i in 0..n {
            m.entries[i * n + i] = one;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn spec(&self) -> &SemiringSpec<T> {
        &self.spec
    }

    pub fn entries(&self) -> &[ExtReal<T>] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> ExtReal<T> {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: ExtReal<T>) -> Result<()> {
        self.spec.check(value)?;
        self.entries[i * self.cols + j] = value;
        Ok(())
    }

    #[inline]
    pub(crate) fn set_unchecked(&mut self, i: usize, j: usize, value: ExtReal<T>) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[ExtReal<T>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Applies `f` to every entry; the result must stay in the domain.
    pub fn map(&self, f: impl Fn(ExtReal<T>) -> ExtReal<T>) -> Result<Self> {
        Self::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|&x| f(x)).collect(),
            self.spec.clone(),
        )
    }

    fn same_spec(&self, other: &Self) -> Result<()> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                left: self.spec.id(),
                right: other.spec.id(),
            })
        }
    }

    /// Entrywise `⊕`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.spec.plus(a, b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
            spec: self.spec.clone(),
        })
    }

    /// `(A ⊙ B)_ik = ⊕_j A_ij ⊙ B_jk`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols, self.spec.clone());
        let fill_row = |(i, row): (usize, &mut [ExtReal<T>])| {
            let a = self.row(i);
            for (k, slot) in row.iter_mut().enumerate() {
                let mut acc = self.spec.zero();
                for (j, &aij) in a.iter().enumerate() {
                    acc = self.spec.plus(acc, self.spec.times(aij, other.get(j, k)));
                }
                *slot = acc;
            }
        };
        let cols = other.cols;
        if self.rows * self.cols * other.cols >= PAR_WORK {
            out.entries.par_chunks_mut(cols).enumerate().for_each(fill_row);
        } else {
            out.entries.chunks_mut(cols).enumerate().for_each(fill_row);
        }
        Ok(out)
    }

    /// Entrywise standard order `self ⪯ other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_spec(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch("order comparison of different shapes".into()));
        }
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            if !self.spec.leq(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl<T: Scalar> std::fmt::Debug for SemiringMatrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "SemiringMatrix<{}> {}x{}", self.spec, self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn matrix_ops<T: Scalar>(a: &SemiringMatrix<T>, b: &SemiringMatrix<T>, which: MatOp) -> Result<SemiringMatrix<T>> {
    match which {
        MatOp::Add => a.add(b),
        MatOp::Mul => a.mul(b),
    }
}

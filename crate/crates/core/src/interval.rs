//! Weak interval extension `I(S)` of an idempotent semiring.
//!
//! An interval `[lower, upper]` is the order interval
//! `{x : lower ⪯ x ⪯ upper}` in the semiring's standard order, so for
//! min-plus `lower` is the numerically *larger* bound. Use
//! [`IntervalValue::from_numeric`] and [`IntervalValue::to_numeric`] to
//! convert from and to the numeric `[min, max]` convention.
//!
//! Operations act endpoint-wise. Because `⊕` and `⊙` are monotone, the
//! Bellman equation over intervals is solved exactly by solving the two
//! endpoint systems: every point selection yields a solution inside the
//! returned interval, and both endpoints are attained.

use crate::error::{Endpoint, Error, Result};
use crate::linalg::{BellmanSolver, Jacobi, MatOp, SemiringMatrix};
use crate::scalar::Scalar;
use crate::semiring::{ExtReal, SemiringSpec};

#[derive(Debug, Clone, PartialEq)]
pub struct IntervalValue<T: Scalar> {
    lower: ExtReal<T>,
    upper: ExtReal<T>,
    spec: SemiringSpec<T>,
}

impl<T: Scalar> IntervalValue<T> {
    /// Interval from endpoints given in the standard order.
    pub fn new(lower: ExtReal<T>, upper: ExtReal<T>, spec: SemiringSpec<T>) -> Result<Self> {
        if !spec.leq(lower, upper)? {
            return Err(Error::InvalidInput(format!(
                "[{lower}, {upper}] is not an interval of {spec}"
            )));
        }
        Ok(Self { lower, upper, spec })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: ExtReal<T>, spec: SemiringSpec<T>) -> Result<Self> {
        Self::new(x, x, spec)
    }

    /// Interval from two bounds in either order; the bound that is smaller
    /// in the standard order becomes `lower`.
    pub fn from_numeric(a: ExtReal<T>, b: ExtReal<T>, spec: SemiringSpec<T>) -> Result<Self> {
        if spec.leq(a, b)? {
            Self::new(a, b, spec)
        } else {
            Self::new(b, a, spec)
        }
    }

    /// Endpoints as numeric `(min, max)`.
    pub fn to_numeric(&self) -> (ExtReal<T>, ExtReal<T>) {
        (self.lower.min(self.upper), self.lower.max(self.upper))
    }

    pub fn lower(&self) -> ExtReal<T> {
        self.lower
    }

    pub fn upper(&self) -> ExtReal<T> {
        self.upper
    }

    pub fn spec(&self) -> &SemiringSpec<T> {
        &self.spec
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

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        Ok(Self {
            lower: self.spec.plus(self.lower, other.lower),
            upper: self.spec.plus(self.upper, other.upper),
            spec: self.spec.clone(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_spec(other)?;
        Ok(Self {
            lower: self.spec.times(self.lower, other.lower),
            upper: self.spec.times(self.upper, other.upper),
            spec: self.spec.clone(),
        })
    }

    /// `lower ⪯ x ⪯ upper`.
    pub fn contains(&self, x: ExtReal<T>) -> bool {
        self.spec.leq(self.lower, x).unwrap_or(false) && self.spec.leq(x, self.upper).unwrap_or(false)
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.spec == other.spec && other.contains(self.lower) && other.contains(self.upper)
    }
}

pub fn interval_ops<T: Scalar>(x: &IntervalValue<T>, y: &IntervalValue<T>, which: MatOp) -> Result<IntervalValue<T>> {
    match which {
        MatOp::Add => x.add(y),
        MatOp::Mul => x.mul(y),
    }
}

/// Matrix over `I(S)`, stored as its two endpoint matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalMatrix<T: Scalar> {
    lower: SemiringMatrix<T>,
    upper: SemiringMatrix<T>,
}

impl<T: Scalar> IntervalMatrix<T> {
    pub fn from_endpoints(lower: SemiringMatrix<T>, upper: SemiringMatrix<T>) -> Result<Self> {
        if lower.rows() != upper.rows() || lower.cols() != upper.cols() {
            return Err(Error::ShapeMismatch("endpoint matrices differ in shape".into()));
        }
        if !lower.leq(&upper)? {
            return Err(Error::InvalidInput(
                "lower endpoint matrix is not below the upper one".into(),
            ));
        }
        Ok(Self { lower, upper })
    }

    /// The degenerate interval matrix `[m, m]`.
    pub fn point(m: SemiringMatrix<T>) -> Result<Self> {
        Self::from_endpoints(m.clone(), m)
    }

    pub fn from_entries(rows: usize, cols: usize, entries: &[IntervalValue<T>], spec: SemiringSpec<T>) -> Result<Self> {
        if entries.iter().any(|e| e.spec != spec) {
            return Err(Error::SpecMismatch {
                left: spec.id(),
                right: "mixed".into(),
            });
        }
        let lower = SemiringMatrix::new(rows, cols, entries.iter().map(|e| e.lower).collect(), spec.clone())?;
        let upper = SemiringMatrix::new(rows, cols, entries.iter().map(|e| e.upper).collect(), spec)?;
        Self::from_endpoints(lower, upper)
    }

    pub fn rows(&self) -> usize {
        self.lower.rows()
    }

    pub fn cols(&self) -> usize {
        self.lower.cols()
    }

    pub fn spec(&self) -> &SemiringSpec<T> {
        self.lower.spec()
    }

    pub fn lower(&self) -> &SemiringMatrix<T> {
        &self.lower
    }

    pub fn upper(&self) -> &SemiringMatrix<T> {
        &self.upper
    }

    pub fn get(&self, i: usize, j: usize) -> IntervalValue<T> {
        IntervalValue {
            lower: self.lower.get(i, j),
            upper: self.upper.get(i, j),
            spec: self.spec().clone(),
        }
    }

    /// Entrywise containment of a point matrix.
    pub fn contains(&self, m: &SemiringMatrix<T>) -> bool {
        self.lower.leq(m).unwrap_or(false) && m.leq(&self.upper).unwrap_or(false)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            lower: self.lower.add(&other.lower)?,
            upper: self.upper.add(&other.upper)?,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            lower: self.lower.mul(&other.lower)?,
            upper: self.upper.mul(&other.upper)?,
        })
    }
}

/// Exact interval solution of `X = H ⊙ X ⊕ F` over `I(S)`.
///
/// Performs exactly two point solves with [`Jacobi`]. If an endpoint
/// system diverges the error names which one.
pub fn interval_bellman<T: Scalar>(
    h: &IntervalMatrix<T>,
    f: &IntervalMatrix<T>,
    max_iter: Option<usize>,
) -> Result<IntervalMatrix<T>> {
    interval_bellman_with(&Jacobi, h, f, max_iter)
}

/// [`interval_bellman`] with a caller-chosen point solver.
pub fn interval_bellman_with<T: Scalar, S: BellmanSolver<T> + ?Sized>(
    solver: &S,
    h: &IntervalMatrix<T>,
    f: &IntervalMatrix<T>,
    max_iter: Option<usize>,
) -> Result<IntervalMatrix<T>> {
    let tag = |endpoint| {
        move |e| match e {
            Error::NonConvergent { iterations, .. } => Error::NonConvergent {
                iterations,
                endpoint: Some(endpoint),
            },
            other => other,
        }
    };
    let lower = solver
        .solve(&h.lower, &f.lower, max_iter)
        .map_err(tag(Endpoint::Lower))?;
    let upper = solver
        .solve(&h.upper, &f.upper, max_iter)
        .map_err(tag(Endpoint::Upper))?;
    // Monotonicity of the least solution guarantees lower ⪯ upper.
    Ok(IntervalMatrix { lower, upper })
}

/// Directed graph whose edge weights are numeric intervals `[wmin, wmax]`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalGraph<T> {
    n: usize,
    edges: Vec<(usize, usize, T, T)>,
}

impl<T: Scalar> IntervalGraph<T> {
    pub fn new(n: usize, edges: Vec<(usize, usize, T, T)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("graph needs at least one node".into()));
        }
        for &(s, d, lo, hi) in &edges {
            if s >= n || d >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {s} -> {d} out of range for {n} nodes"
                )));
            }
            if !lo.is_finite() || !hi.is_finite() || lo > hi {
                return Err(Error::InvalidInput(format!("edge {s} -> {d} has bad weight interval")));
            }
        }
        Ok(Self { n, edges })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize, T, T)] {
        &self.edges
    }

    /// Interval adjacency matrix; absent edges are `[0̄, 0̄]` and parallel
    /// edges are combined with `⊕`.
    pub fn adjacency(&self, spec: SemiringSpec<T>) -> Result<IntervalMatrix<T>> {
        let zero = IntervalValue::point(spec.zero(), spec.clone())?;
        let mut entries = vec![zero; self.n * self.n];
        for &(s, d, lo, hi) in &self.edges {
            let w = IntervalValue::from_numeric(ExtReal::of(lo), ExtReal::of(hi), spec.clone())?;
            entries[s * self.n + d] = entries[s * self.n + d].add(&w)?;
        }
        IntervalMatrix::from_entries(self.n, self.n, &entries, spec)
    }
}

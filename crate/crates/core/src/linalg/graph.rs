use super::{kleene_star, SemiringMatrix};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semiring::{ExtReal, SemiringSpec};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<T> {
    pub src: usize,
    pub dst: usize,
    pub weight: T,
}

/// Directed weighted graph on nodes `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph<T> {
    n: usize,
    edges: Vec<Edge<T>>,
}

impl<T: Scalar> Graph<T> {
    pub fn new(n: usize, edges: Vec<Edge<T>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("graph needs at least one node".into()));
        }
        for e in &edges {
            if e.src >= n || e.dst >= n {
                return Err(Error::InvalidInput(format!(
                    "edge {} -> {} out of range for {n} nodes",
                    e.src, e.dst
                )));
            }
            if !e.weight.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "edge {} -> {} has non-finite weight",
                    e.src, e.dst
                )));
            }
        }
        Ok(Self { n, edges })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    /// Adjacency matrix over `spec`: absent edges are `0̄` and parallel edges
    /// are combined with `⊕`.
    pub fn adjacency(&self, spec: SemiringSpec<T>) -> Result<SemiringMatrix<T>> {
        let mut m = SemiringMatrix::zeros(self.n, self.n, spec);
        for e in &self.edges {
            let w = m.spec().check(ExtReal::of(e.weight))?;
            let cur = m.get(e.src, e.dst);
            let combined = m.spec().plus(cur, w);
            m.set_unchecked(e.src, e.dst, combined);
        }
        Ok(m)
    }
}

/// All-pairs least path weights as the min-plus closure of the adjacency
/// matrix. Entry `(i, j)` is `+inf` when `j` is unreachable from `i`.
pub fn shortest_paths<T: Scalar>(g: &Graph<T>) -> Result<SemiringMatrix<T>> {
    let a = g.adjacency(SemiringSpec::MinPlus)?;
    kleene_star(&a, None).map_err(|e| match e {
        Error::NonConvergent { iterations, .. } => Error::NegativeCycle { iterations },
        other => other,
    })
}

use super::SemiringMatrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A fixpoint together with the number of iterations (or sweeps) taken,
/// including the final one that observed no change.
#[derive(Debug, Clone, PartialEq)]
pub struct Fixpoint<T: Scalar> {
    pub x: SemiringMatrix<T>,
    pub iterations: usize,
}

fn require_idempotent<T: Scalar>(m: &SemiringMatrix<T>) -> Result<()> {
    if m.spec().is_idempotent() {
        Ok(())
    } else {
        Err(Error::NotIdempotent(m.spec().id()))
    }
}

fn check_system<T: Scalar>(h: &SemiringMatrix<T>, f: &SemiringMatrix<T>) -> Result<()> {
    require_idempotent(h)?;
    if h.spec() != f.spec() {
        return Err(Error::SpecMismatch {
            left: h.spec().id(),
            right: f.spec().id(),
        });
    }
    if !h.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "H must be square, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    if f.rows() != h.rows() {
        return Err(Error::ShapeMismatch(format!(
            "F has {} rows, H is {}x{}",
            f.rows(),
            h.rows(),
            h.cols()
        )));
    }
    Ok(())
}

/// `A* = I ⊕ A ⊕ A² ⊕ …`, iterating `S ← I ⊕ A ⊙ S` from `S = I` until the
/// iterate repeats exactly. `max_iter` defaults to `n + 1`.
pub fn kleene_star<T: Scalar>(a: &SemiringMatrix<T>, max_iter: Option<usize>) -> Result<SemiringMatrix<T>> {
    kleene_star_with_stats(a, max_iter).map(|fp| fp.x)
}

pub fn kleene_star_with_stats<T: Scalar>(a: &SemiringMatrix<T>, max_iter: Option<usize>) -> Result<Fixpoint<T>> {
    require_idempotent(a)?;
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "star of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let identity = SemiringMatrix::identity(n, a.spec().clone());
    let max_iter = max_iter.unwrap_or(n + 1);
    let mut s = identity.clone();
    for it in 1..=max_iter {
        let next = identity.add(&a.mul(&s)?)?;
        if next == s {
            return Ok(Fixpoint { x: s, iterations: it });
        }
        s = next;
    }
    Err(Error::NonConvergent {
        iterations: max_iter,
        endpoint: None,
    })
}

/// Solves `X = H ⊙ X ⊕ F` by simultaneous substitution
/// `X ← H ⊙ X ⊕ F` from `X = F` (Bellman's algorithm).
///
/// Returns the least solution in the standard order. `max_iter` defaults
/// to `n + 1`.
pub fn solve_bellman_jacobi<T: Scalar>(
    h: &SemiringMatrix<T>,
    f: &SemiringMatrix<T>,
    max_iter: Option<usize>,
) -> Result<SemiringMatrix<T>> {
    Jacobi.solve_with_stats(h, f, max_iter).map(|fp| fp.x)
}

/// Solves `X = H ⊙ X ⊕ F` by in-place sweeps over the rows of `X` in
/// ascending order, each row using the rows already updated in the same
/// sweep (Ford's algorithm). Converges to the same least solution as
/// [`solve_bellman_jacobi`]; only the sweep count depends on the row order.
pub fn solve_bellman_gauss_seidel<T: Scalar>(
    h: &SemiringMatrix<T>,
    f: &SemiringMatrix<T>,
    max_iter: Option<usize>,
) -> Result<SemiringMatrix<T>> {
    GaussSeidel.solve_with_stats(h, f, max_iter).map(|fp| fp.x)
}

/// A point solver for `X = H ⊙ X ⊕ F`.
pub trait BellmanSolver<T: Scalar> {
    fn solve_with_stats(
        &self,
        h: &SemiringMatrix<T>,
        f: &SemiringMatrix<T>,
        max_iter: Option<usize>,
    ) -> Result<Fixpoint<T>>;

    fn solve(
        &self,
        h: &SemiringMatrix<T>,
        f: &SemiringMatrix<T>,
        max_iter: Option<usize>,
    ) -> Result<SemiringMatrix<T>> {
        self.solve_with_stats(h, f, max_iter).map(|fp| fp.x)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Jacobi;

#[derive(Debug, Clone, Copy, Default)]
pub struct GaussSeidel;

/// Solves through the closure: `X = H* ⊙ F`. The iteration count is that
/// of the star.
#[derive(Debug, Clone, Copy, Default)]
pub struct Star;

impl<T: Scalar> BellmanSolver<T> for Jacobi {
    fn solve_with_stats(
        &self,
        h: &SemiringMatrix<T>,
        f: &SemiringMatrix<T>,
        max_iter: Option<usize>,
    ) -> Result<Fixpoint<T>> {
        check_system(h, f)?;
        let max_iter = max_iter.unwrap_or(h.rows() + 1);
        let mut x = f.clone();
        for it in 1..=max_iter {
            let next = h.mul(&x)?.add(f)?;
            if next == x {
                return Ok(Fixpoint { x, iterations: it });
            }
            x = next;
        }
        Err(Error::NonConvergent {
            iterations: max_iter,
            endpoint: None,
        })
    }
}

impl<T: Scalar> BellmanSolver<T> for GaussSeidel {
    fn solve_with_stats(
        &self,
        h: &SemiringMatrix<T>,
        f: &SemiringMatrix<T>,
        max_iter: Option<usize>,
    ) -> Result<Fixpoint<T>> {
        check_system(h, f)?;
        let (n, k) = (h.rows(), f.cols());
        let spec = h.spec().clone();
        let max_iter = max_iter.unwrap_or(n + 1);
        let mut x = f.clone();
        for sweep in 1..=max_iter {
            let mut changed = false;
            for i in 0..n {
                for c in 0..k {
                    let mut acc = f.get(i, c);
                    for j in 0..n {
                        acc = spec.plus(acc, spec.times(h.get(i, j), x.get(j, c)));
                    }
                    if acc != x.get(i, c) {
                        changed = true;
                        x.set_unchecked(i, c, acc);
                    }
                }
            }
            if !changed {
                return Ok(Fixpoint { x, iterations: sweep });
            }
        }
        Err(Error::NonConvergent {
            iterations: max_iter,
            endpoint: None,
        })
    }
}

impl<T: Scalar> BellmanSolver<T> for Star {
    fn solve_with_stats(
        &self,
        h: &SemiringMatrix<T>,
        f: &SemiringMatrix<T>,
        max_iter: Option<usize>,
    ) -> Result<Fixpoint<T>> {
        check_system(h, f)?;
        let star = kleene_star_with_stats(h, max_iter)?;
        Ok(Fixpoint {
            x: star.x.mul(f)?,
            iterations: star.iterations,
        })
    }
}

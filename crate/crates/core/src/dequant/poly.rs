//! Generalized polynomials `f(x) = Σ a_i ∏ x_j^{d_ij}` with real
//! coefficients and exact rational exponents, their dequantization
//! `f̂_h(x) = h log|f(exp(x/h))|`, and the limit `f̂ = lim_{h→0} f̂_h`.

use std::collections::BTreeMap;

use super::polytope::{dot, Polytope};
use crate::error::{Error, Result};
use crate::scalar::{Exact, Scalar};
use crate::semiring::{DeformationParam, ExtReal};

#[derive(Debug, Clone, PartialEq)]
pub struct Term<T, R> {
    pub coeff: T,
    pub exponent: Vec<R>,
}

/// Finite sum of generalized monomials with pairwise distinct exponents.
#[derive(Debug, Clone, PartialEq)]
pub struct GenPolynomial<T, R> {
    dim: usize,
    terms: Vec<Term<T, R>>,
    positive: bool,
}

impl<T: Scalar, R: Exact> GenPolynomial<T, R> {
    /// Collects like terms (summing coefficients) and drops zero ones.
    /// Terms are kept sorted by exponent.
    pub fn new(dim: usize, terms: Vec<Term<T, R>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("polynomial dimension must be positive".into()));
        }
        let mut merged: BTreeMap<Vec<R>, T> = BTreeMap::new();
        for t in terms {
            if t.exponent.len() != dim {
                return Err(Error::DimensionMismatch(dim, t.exponent.len()));
            }
            if !t.coeff.is_finite() {
                return Err(Error::InvalidInput(format!("non-finite coefficient {}", t.coeff)));
            }
            let slot = merged.entry(t.exponent).or_insert_with(T::zero);
            *slot = *slot + t.coeff;
        }
        let terms: Vec<Term<T, R>> = merged
            .into_iter()
            .filter(|(_, c)| *c != T::zero())
            .map(|(exponent, coeff)| Term { coeff, exponent })
            .collect();
        if terms.is_empty() {
            return Err(Error::DegenerateInput("polynomial has no nonzero terms".into()));
        }
        let positive = terms.iter().all(|t| t.coeff > T::zero());
        Ok(Self { dim, terms, positive })
    }

    pub fn monomial(coeff: T, exponent: Vec<R>) -> Result<Self> {
        Self::new(exponent.len(), vec![Term { coeff, exponent }])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[Term<T, R>] {
        &self.terms
    }

    /// Every coefficient is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Vec<R>> {
        self.terms.iter().map(|t| &t.exponent)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Self::new(self.dim, self.terms.iter().chain(&other.terms).cloned().collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let terms = self
            .terms
            .iter()
            .flat_map(|a| {
                other.terms.iter().map(move |b| Term {
                    coeff: a.coeff * b.coeff,
                    exponent: a
                        .exponent
                        .iter()
                        .zip(&b.exponent)
                        .map(|(x, y)| x.clone() + y.clone())
                        .collect(),
                })
            })
            .collect();
        Self::new(self.dim, terms)
    }

    /// The limit of the dequantization as a finite maximum of linear forms.
    pub fn dequantized_form(&self) -> SublinearForm<R> {
        SublinearForm::new(self.dim, self.exponents().cloned().collect()).expect("a polynomial has at least one term")
    }

    fn check_point(&self, x: &[T]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, x.len()));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("evaluation point must be finite".into()));
        }
        Ok(())
    }

    fn linear_parts(&self, x: &[T]) -> Vec<T> {
        self.terms
            .iter()
            .map(|t| {
                t.exponent
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (d, &xi)| acc + T::lit(d.to_f64_lossy()) * xi)
            })
            .collect()
    }
}

/// `f̂_h(x) = h log|Σ a_i exp((d_i, x)/h)|`, with the largest `(d_i, x)`
/// factored out of the sum so nothing overflows for small `h`.
///
/// Fails with [`Error::CancellationAtPoint`] when the sum vanishes: the
/// transform is only defined almost everywhere for mixed-sign
/// coefficients.
pub fn eval_dequantized<T: Scalar, R: Exact>(
    f: &GenPolynomial<T, R>,
    x: &[T],
    h: DeformationParam<T>,
) -> Result<ExtReal<T>> {
    f.check_point(x)?;
    let h = h.get();
    let parts = f.linear_parts(x);
    let top = parts.iter().copied().fold(T::neg_infinity(), T::max);
    let sum = f
        .terms
        .iter()
        .zip(&parts)
        .fold(T::zero(), |acc, (t, &s)| acc + t.coeff * ((s - top) / h).exp());
    if sum == T::zero() {
        return Err(Error::CancellationAtPoint);
    }
    ExtReal::new(top + h * sum.abs().ln())
}

/// `f̂(x) = max_i (d_i, x)`.
///
/// For mixed-sign coefficients the limit is only guaranteed when a single
/// term attains the maximum; ties report [`Error::AmbiguousLimit`].
pub fn dequantize_limit<T: Scalar, R: Exact>(f: &GenPolynomial<T, R>, x: &[T]) -> Result<ExtReal<T>> {
    f.check_point(x)?;
    let parts = f.linear_parts(x);
    let top = parts.iter().copied().fold(T::neg_infinity(), T::max);
    if !f.positive && parts.iter().filter(|&&s| s == top).count() > 1 {
        return Err(Error::AmbiguousLimit);
    }
    ExtReal::new(top)
}

/// Newton set `N(f)`: the convex hull of the exponent vectors. Dimensions
/// above 2 yield an unreduced polytope.
pub fn newton_set<T: Scalar, R: Exact>(f: &GenPolynomial<T, R>) -> Result<Polytope<R>> {
    Polytope::hull(f.dim, f.exponents().cloned().collect())
}

/// [`newton_set`] that insists on a reduced canonical form.
pub fn newton_set_exact<T: Scalar, R: Exact>(f: &GenPolynomial<T, R>) -> Result<Polytope<R>> {
    Polytope::hull_exact(f.dim, f.exponents().cloned().collect())
}

/// A sublinear function `p(x) = max_i (v_i, x)` with exact slopes, kept
/// sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SublinearForm<R> {
    dim: usize,
    slopes: Vec<Vec<R>>,
}

impl<R: Exact> SublinearForm<R> {
    pub fn new(dim: usize, mut slopes: Vec<Vec<R>>) -> Result<Self> {
        if slopes.is_empty() {
            return Err(Error::InvalidInput("a sublinear form needs at least one slope".into()));
        }
        if let Some(s) = slopes.iter().find(|s| s.len() != dim) {
            return Err(Error::DimensionMismatch(dim, s.len()));
        }
        slopes.sort();
        slopes.dedup();
        Ok(Self { dim, slopes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn slopes(&self) -> &[Vec<R>] {
        &self.slopes
    }

    pub fn eval(&self, x: &[R]) -> R {
        self.slopes.iter().map(|v| dot(v, x)).max().expect("nonempty")
    }

    /// `(p + q)(x)`: the maximum over all pairwise slope sums.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let slopes = self
            .slopes
            .iter()
            .flat_map(|a| {
                other
                    .slopes
                    .iter()
                    .map(move |b| a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect())
            })
            .collect();
        Self::new(self.dim, slopes)
    }

    /// `max{p(x), q(x)}`.
    pub fn max(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Self::new(self.dim, self.slopes.iter().chain(&other.slopes).cloned().collect())
    }

    /// `∂p = {v : (v, x) <= p(x) for all x}`, the convex hull of the slopes.
    pub fn subdifferential(&self) -> Result<Polytope<R>> {
        Polytope::hull(self.dim, self.slopes.clone())
    }
}

//! Idempotent integration, convolution, the idempotent Fourier (Legendre)
//! transform and the free-particle Hopf–Lax evolution on uniform 1-D grids.
//!
//! Suprema and infima over the real line are replaced by extrema over the
//! grid. Comparisons against closed-form answers therefore carry a
//! discretisation error; for a quadratic `φ` sampled with step `δ` the
//! grid extremum is within `2δ|ξ| + δ²` of the continuous one.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semiring::{ExtReal, SemiringSpec};

/// Output grids with at least this many `(output, input)` pairs are
/// evaluated in parallel, one output point per task.
const PAR_WORK: usize = 1 << 15;

/// Which idempotent semiring the sampled values live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    MaxPlus,
    MinPlus,
}

impl Convention {
    pub fn spec<T: Scalar>(self) -> SemiringSpec<T> {
        match self {
            Convention::MaxPlus => SemiringSpec::MaxPlus,
            Convention::MinPlus => SemiringSpec::MinPlus,
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::MaxPlus => "maxplus",
            Convention::MinPlus => "minplus",
        })
    }
}

impl FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maxplus" => Ok(Convention::MaxPlus),
            "minplus" => Ok(Convention::MinPlus),
            _ => Err(Error::InvalidInput(format!("unknown convention {s:?}"))),
        }
    }
}

/// The uniform grid `start + i·step`, `0 <= i < len`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid<T> {
    start: T,
    step: T,
    len: usize,
}

impl<T: Scalar> Grid<T> {
    pub fn new(start: T, step: T, len: usize) -> Result<Self> {
        if !start.is_finite() {
            return Err(Error::InvalidInput(format!("grid start {start} is not finite")));
        }
        if !(step.is_finite() && step > T::zero()) {
            return Err(Error::InvalidInput(format!("grid step {step} must be positive")));
        }
        if len == 0 {
            return Err(Error::InvalidInput("grid must have at least one point".into()));
        }
        Ok(Self { start, step, len })
    }

    pub fn start(&self) -> T {
        self.start
    }

    pub fn step(&self) -> T {
        self.step
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn end(&self) -> T {
        self.point(self.len - 1)
    }

    #[inline]
    pub fn point(&self, i: usize) -> T {
        self.start + T::lit(i as f64) * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.len).map(|i| self.point(i))
    }
}

/// A function on a uniform grid with values in max-plus or min-plus.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction<T: Scalar> {
    grid: Grid<T>,
    values: Vec<ExtReal<T>>,
    convention: Convention,
}

impl<T: Scalar> SampledFunction<T> {
    pub fn new(start: T, step: T, values: Vec<ExtReal<T>>, convention: Convention) -> Result<Self> {
        let grid = Grid::new(start, step, values.len())?;
        let spec = convention.spec::<T>();
        for &v in &values {
            spec.check(v)?;
        }
        Ok(Self {
            grid,
            values,
            convention,
        })
    }

    pub fn from_values(start: T, step: T, values: &[T], convention: Convention) -> Result<Self> {
        let values = values.iter().map(|&v| ExtReal::new(v)).collect::<Result<Vec<_>>>()?;
        Self::new(start, step, values, convention)
    }

    /// Samples `f` on `grid`.
    pub fn sample(grid: Grid<T>, convention: Convention, f: impl Fn(T) -> T) -> Result<Self> {
        let values: Vec<T> = grid.points().map(f).collect();
        Self::from_values(grid.start, grid.step, &values, convention)
    }

    pub fn grid(&self) -> &Grid<T> {
        &self.grid
    }

    pub fn start(&self) -> T {
        self.grid.start
    }

    pub fn step(&self) -> T {
        self.grid.step
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[ExtReal<T>] {
        &self.values
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn spec(&self) -> SemiringSpec<T> {
        self.convention.spec()
    }

    /// `λ ⊙ φ`.
    pub fn scale(&self, lambda: ExtReal<T>) -> Result<Self> {
        let spec = self.spec();
        spec.check(lambda)?;
        Ok(Self {
            values: self.values.iter().map(|&v| spec.times(lambda, v)).collect(),
            ..self.clone()
        })
    }

    /// Pointwise `φ ⊕ ψ` on a shared grid.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        same_grid(self, other)?;
        let spec = self.spec();
        Ok(Self {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| spec.plus(a, b))
                .collect(),
            ..self.clone()
        })
    }
}

fn same_grid<T: Scalar>(a: &SampledFunction<T>, b: &SampledFunction<T>) -> Result<()> {
    if a.convention != b.convention {
        return Err(Error::GridMismatch(format!(
            "conventions differ: {} vs {}",
            a.convention, b.convention
        )));
    }
    if a.grid != b.grid {
        return Err(Error::GridMismatch(format!(
            "grids differ: start {} step {} len {} vs start {} step {} len {}",
            a.grid.start, a.grid.step, a.grid.len, b.grid.start, b.grid.step, b.grid.len
        )));
    }
    Ok(())
}

fn require<T: Scalar>(f: &SampledFunction<T>, convention: Convention) -> Result<()> {
    if f.convention == convention {
        Ok(())
    } else {
        Err(Error::SpecMismatch {
            left: f.convention.to_string(),
            right: convention.to_string(),
        })
    }
}

fn tabulate<T: Scalar>(len: usize, work: usize, f: impl Fn(usize) -> ExtReal<T> + Sync + Send) -> Vec<ExtReal<T>> {
    if work >= PAR_WORK {
        (0..len).into_par_iter().map(f).collect()
    } else {
        (0..len).map(f).collect()
    }
}

/// `∫⊕ φ = ⊕_x φ(x)`: the maximum (max-plus) or minimum (min-plus) value.
pub fn idempotent_integral<T: Scalar>(phi: &SampledFunction<T>) -> ExtReal<T> {
    let spec = phi.spec();
    phi.values.iter().fold(spec.zero(), |acc, &v| spec.plus(acc, v))
}

/// `⊕_x φ(x) ⊙ ψ(x)`: the integral of `φ` against the density `ψ`.
pub fn integral_wrt_measure<T: Scalar>(phi: &SampledFunction<T>, psi: &SampledFunction<T>) -> Result<ExtReal<T>> {
    same_grid(phi, psi)?;
    let spec = phi.spec();
    Ok(phi
        .values
        .iter()
        .zip(&psi.values)
        .fold(spec.zero(), |acc, (&a, &b)| spec.plus(acc, spec.times(a, b))))
}

/// `(φ ⊛ ψ)(g) = ⊕_x φ(x) ⊙ ψ(g - x)` on the grid from `startφ + startψ`
/// to `endφ + endψ`. Both inputs must share step and convention.
pub fn convolution<T: Scalar>(phi: &SampledFunction<T>, psi: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    if phi.convention != psi.convention {
        return Err(Error::GridMismatch(format!(
            "conventions differ: {} vs {}",
            phi.convention, psi.convention
        )));
    }
    if phi.step() != psi.step() {
        return Err(Error::GridMismatch(format!(
            "steps differ: {} vs {}",
            phi.step(),
            psi.step()
        )));
    }
    let spec = phi.spec();
    let (n, m) = (phi.len(), psi.len());
    let values = tabulate(n + m - 1, n * m, |g| {
        let lo = g.saturating_sub(m - 1);
        let hi = g.min(n - 1);
        (lo..=hi).fold(spec.zero(), |acc, i| {
            spec.plus(acc, spec.times(phi.values[i], psi.values[g - i]))
        })
    });
    SampledFunction::new(phi.start() + psi.start(), phi.step(), values, phi.convention)
}

/// `φ̃(ξ) = sup_x (ξ·x + φ(x))` for every `ξ` on `xi`.
///
/// With this sign convention `φ̃` is the classical Legendre–Fenchel
/// conjugate of `-φ`, and `-(-φ̃)~` is the concave majorant of `φ`.
pub fn legendre<T: Scalar>(phi: &SampledFunction<T>, xi: &Grid<T>) -> Result<SampledFunction<T>> {
    require(phi, Convention::MaxPlus)?;
    let spec = phi.spec();
    let values = tabulate(xi.len(), xi.len() * phi.len(), |k| {
        let s = xi.point(k);
        phi.values.iter().enumerate().fold(spec.zero(), |acc, (i, &v)| {
            spec.plus(acc, spec.times(ExtReal::of(s * phi.grid.point(i)), v))
        })
    });
    SampledFunction::new(xi.start, xi.step, values, Convention::MaxPlus)
}

/// Time and mass for [`hopf_lax_evolve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolveParams<T> {
    t: T,
    mass: T,
}

impl<T: Scalar> EvolveParams<T> {
    pub fn new(t: T, mass: T) -> Result<Self> {
        for (name, v) in [("t", t), ("mass", mass)] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::InvalidInput(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self { t, mass })
    }

    pub fn t(&self) -> T {
        self.t
    }

    pub fn mass(&self) -> T {
        self.mass
    }
}

/// `S(x, t) = min_y [S0(y) + m (x - y)² / (2t)]` on the grid of `S0`: the
/// Lax–Oleinik solution of `S_t + S_x² / (2m) = 0`.
pub fn hopf_lax_evolve<T: Scalar>(s0: &SampledFunction<T>, params: EvolveParams<T>) -> Result<SampledFunction<T>> {
    require(s0, Convention::MinPlus)?;
    let spec = s0.spec();
    let n = s0.len();
    let coef = params.mass * s0.step() * s0.step() / (T::lit(2.0) * params.t);
    let values = tabulate(n, n * n, |i| {
        s0.values.iter().enumerate().fold(spec.zero(), |acc, (j, &v)| {
            let d = T::lit(i as f64 - j as f64);
            spec.plus(acc, spec.times(v, ExtReal::of(coef * d * d)))
        })
    });
    SampledFunction::new(s0.start(), s0.step(), values, Convention::MinPlus)
}

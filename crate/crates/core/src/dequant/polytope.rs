//! Convex polytopes with exact vertices and the Minkowski semiring
//! operations: `P ⊕ Q = conv(P ∪ Q)`, `P ⊙ Q = P + Q`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::linalg::MatOp;
use crate::scalar::Exact;

/// Number of fixed directions used to compare unreduced polytopes.
pub const SUPPORT_DIRECTIONS: usize = 64;

/// A nonempty convex polytope given by its vertices.
///
/// In dimensions 1 and 2 the vertex list is canonical: a sorted `[lo, hi]`
/// pair (or a single point) in 1-D, and the counterclockwise hull starting
/// at the lexicographically smallest vertex without collinear vertices in
/// 2-D. Higher-dimensional polytopes keep a sorted, deduplicated generating
/// set and are compared through their support function.
#[derive(Debug, Clone)]
pub struct Polytope<R> {
    dim: usize,
    vertices: Vec<Vec<R>>,
    reduced: bool,
}

impl<R: Exact> Polytope<R> {
    /// Convex hull of `points`, reduced where the dimension allows it.
    pub fn hull(dim: usize, points: Vec<Vec<R>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("polytope dimension must be positive".into()));
        }
        if points.is_empty() {
            return Err(Error::InvalidInput("polytope needs at least one point".into()));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch(dim, p.len()));
        }
        Ok(match dim {
            1 => {
                let lo = points.iter().map(|p| &p[0]).min().cloned().expect("nonempty");
                let hi = points.iter().map(|p| &p[0]).max().cloned().expect("nonempty");
                let vertices = if lo == hi {
                    vec![vec![lo]]
                } else {
                    vec![vec![lo], vec![hi]]
                };
                Self {
                    dim,
                    vertices,
                    reduced: true,
                }
            }
            2 => Self {
                dim,
                vertices: monotone_chain(points),
                reduced: true,
            },
            _ => {
                let mut vertices = points;
                vertices.sort();
                vertices.dedup();
                Self {
                    dim,
                    vertices,
                    reduced: false,
                }
            }
        })
    }

    /// Like [`Polytope::hull`] but refuses dimensions it cannot reduce.
    pub fn hull_exact(dim: usize, points: Vec<Vec<R>>) -> Result<Self> {
        if dim > 2 {
            return Err(Error::UnsupportedDimension(dim));
        }
        Self::hull(dim, points)
    }

    pub fn point(p: Vec<R>) -> Result<Self> {
        Self::hull(p.len(), vec![p])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<R>] {
        &self.vertices
    }

    /// Whether the vertex list is the canonical reduced form.
    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// `max_{v ∈ P} (v, dir)`.
    pub fn support(&self, dir: &[R]) -> R {
        self.vertices
            .iter()
            .map(|v| dot(v, dir))
            .max()
            .expect("polytopes are nonempty")
    }

    /// Exact membership test (dimensions 1 and 2).
    pub fn contains(&self, p: &[R]) -> Result<bool> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, p.len()));
        }
        match self.dim {
            1 => {
                let lo = &self.vertices[0][0];
                let hi = &self.vertices[self.vertices.len() - 1][0];
                Ok(lo <= &p[0] && &p[0] <= hi)
            }
            2 => Ok(polygon_contains(&self.vertices, p)),
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        }
    }

    /// `conv(P ∪ Q)`.
    pub fn hull_union(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let pts = self.vertices.iter().chain(&other.vertices).cloned().collect();
        Self::hull(self.dim, pts)
    }

    /// Minkowski sum `{p + q}`. Planar polygons are merged edge by edge in
    /// angular order.
    pub fn minkowski_sum(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        match self.dim {
            1 => {
                let lo = self.vertices[0][0].clone() + other.vertices[0][0].clone();
                let hi = self.vertices[self.vertices.len() - 1][0].clone()
                    + other.vertices[other.vertices.len() - 1][0].clone();
                Self::hull(1, vec![vec![lo], vec![hi]])
            }
            2 => Self::hull(2, minkowski_edge_merge(&self.vertices, &other.vertices)),
            _ => {
                let pts = self
                    .vertices
                    .iter()
                    .flat_map(|p| other.vertices.iter().map(move |q| add(p, q)))
                    .collect();
                Self::hull(self.dim, pts)
            }
        }
    }

    /// Agreement of support functions on [`SUPPORT_DIRECTIONS`] fixed
    /// pseudo-random integer directions. This is how unreduced polytopes
    /// (`dim > 2`) are compared.
    pub fn support_agrees(&self, other: &Self) -> bool {
        self.dim == other.dim
            && support_directions(self.dim)
                .iter()
                .all(|d| self.support(d) == other.support(d))
    }
}

impl<R: Exact> Eq for Polytope<R> {}

impl<R: Exact> PartialEq for Polytope<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.dim != other.dim {
            return false;
        }
        if self.reduced && other.reduced {
            self.vertices == other.vertices
        } else {
            self.support_agrees(other)
        }
    }
}

pub fn polytope_semiring_ops<R: Exact>(p: &Polytope<R>, q: &Polytope<R>, which: MatOp) -> Result<Polytope<R>> {
    match which {
        MatOp::Add => p.hull_union(q),
        MatOp::Mul => p.minkowski_sum(q),
    }
}

pub(crate) fn dot<R: Exact>(a: &[R], b: &[R]) -> R {
    a.iter()
        .zip(b)
        .fold(R::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn add<R: Exact>(a: &[R], b: &[R]) -> Vec<R> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn sub<R: Exact>(a: &[R], b: &[R]) -> Vec<R> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

/// `(a - o) × (b - o)`.
fn cross<R: Exact>(o: &[R], a: &[R], b: &[R]) -> R {
    let (ax, ay) = (a[0].clone() - o[0].clone(), a[1].clone() - o[1].clone());
    let (bx, by) = (b[0].clone() - o[0].clone(), b[1].clone() - o[1].clone());
    ax * by - ay * bx
}

fn cross_vec<R: Exact>(u: &[R], v: &[R]) -> R {
    u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone()
}

/// Andrew's monotone chain. Returns the counterclockwise hull starting at
/// the lexicographically smallest point, with collinear points removed.
fn monotone_chain<R: Exact>(mut pts: Vec<Vec<R>>) -> Vec<Vec<R>> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<Vec<R>> = Vec::with_capacity(2 * pts.len());
    for p in pts.iter() {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= R::zero() {
            hull.pop();
        }
        hull.push(p.clone());
    }
    let lower_len = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= R::zero() {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull.pop();
    hull
}

/// Rotates a counterclockwise polygon to start at its bottom-most
/// (then left-most) vertex.
fn from_bottom<R: Exact>(poly: &[Vec<R>]) -> Vec<Vec<R>> {
    let start = (0..poly.len())
        .min_by(|&a, &b| match poly[a][1].cmp(&poly[b][1]) {
            Ordering::Equal => poly[a][0].cmp(&poly[b][0]),
            o => o,
        })
        .expect("nonempty polygon");
    poly[start..].iter().chain(&poly[..start]).cloned().collect()
}

/// Minkowski sum of two convex counterclockwise polygons by merging their
/// edge sequences in angular order. Degenerate polygons (points and
/// segments) are handled as cycles with zero-length or doubled edges.
fn minkowski_edge_merge<R: Exact>(p: &[Vec<R>], q: &[Vec<R>]) -> Vec<Vec<R>> {
    let p = from_bottom(p);
    let q = from_bottom(q);
    let (n, m) = (p.len(), q.len());
    let edge = |poly: &[Vec<R>], i: usize| {
        let k = poly.len();
        sub(&poly[(i + 1) % k], &poly[i % k])
    };
    let mut out = Vec::with_capacity(n + m);
    let (mut i, mut j) = (0, 0);
    while i < n || j < m {
        out.push(add(&p[i % n], &q[j % m]));
        let c = cross_vec(&edge(&p, i), &edge(&q, j));
        let advance_p = i < n && (c >= R::zero() || j >= m);
        let advance_q = j < m && (c <= R::zero() || i >= n);
        if advance_p {
            i += 1;
        }
        if advance_q {
            j += 1;
        }
    }
    out
}

fn polygon_contains<R: Exact>(poly: &[Vec<R>], p: &[R]) -> bool {
    match poly.len() {
        1 => poly[0].as_slice() == p,
        2 => {
            cross(&poly[0], &poly[1], p) == R::zero()
                && poly[0].as_slice().min(poly[1].as_slice()) <= p
                && p <= poly[0].as_slice().max(poly[1].as_slice())
        }
        k => (0..k).all(|i| cross(&poly[i], &poly[(i + 1) % k], p) >= R::zero()),
    }
}

/// Deterministic integer directions for support-function comparison.
fn support_directions<R: Exact>(dim: usize) -> Vec<Vec<R>> {
    let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
    let mut next = || {
        // splitmix64
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    (0..SUPPORT_DIRECTIONS)
        .map(|_| (0..dim).map(|_| R::int((next() % 2001) as i64 - 1000)).collect())
        .collect()
}

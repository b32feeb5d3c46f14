//! Corner locus of a bivariate max-plus polynomial
//! `p(x) = max_i ((d_i, x) + c_i)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::Exact;

/// A piece `{base + t·direction : t0 <= t <= t1}` of a tropical curve.
///
/// `t0 = None` means `-∞` and `t1 = None` means `+∞`. Pieces are stored in
/// a canonical form: the direction has max-norm 1; rays start at their
/// vertex with `t0 = 0`; segments start at their lexicographically smaller
/// endpoint; full lines use the point closest to the origin and a
/// direction whose first nonzero component is positive.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurvePiece<R> {
    pub base: [R; 2],
    pub direction: [R; 2],
    pub t0: Option<R>,
    pub t1: Option<R>,
}

impl<R: Exact> CurvePiece<R> {
    pub fn point_at(&self, t: &R) -> [R; 2] {
        [
            self.base[0].clone() + t.clone() * self.direction[0].clone(),
            self.base[1].clone() + t.clone() * self.direction[1].clone(),
        ]
    }

    pub fn is_ray(&self) -> bool {
        self.t0.is_some() != self.t1.is_some()
    }

    /// Euclidean distance from `p` to the piece, in floating point.
    pub fn distance_to(&self, p: [f64; 2]) -> f64 {
        let b = [self.base[0].to_f64_lossy(), self.base[1].to_f64_lossy()];
        let u = [self.direction[0].to_f64_lossy(), self.direction[1].to_f64_lossy()];
        let t = ((p[0] - b[0]) * u[0] + (p[1] - b[1]) * u[1]) / (u[0] * u[0] + u[1] * u[1]);
        let lo = self.t0.as_ref().map_or(f64::NEG_INFINITY, R::to_f64_lossy);
        let hi = self.t1.as_ref().map_or(f64::INFINITY, R::to_f64_lossy);
        let t = t.clamp(lo, hi);
        (p[0] - b[0] - t * u[0]).hypot(p[1] - b[1] - t * u[1])
    }
}

/// Max-plus tropical curve: the set where the maximum is attained by at
/// least two terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalCurve<R> {
    terms: Vec<(R, [R; 2])>,
    pieces: Vec<CurvePiece<R>>,
    merged_duplicates: usize,
}

impl<R: Exact> TropicalCurve<R> {
    pub fn pieces(&self) -> &[CurvePiece<R>] {
        &self.pieces
    }

    /// The terms after merging equal exponents, sorted by exponent.
    pub fn terms(&self) -> &[(R, [R; 2])] {
        &self.terms
    }

    /// Number of input terms dropped because another term had the same
    /// exponent (the larger constant was kept).
    pub fn merged_duplicates(&self) -> usize {
        self.merged_duplicates
    }

    /// Term values `(d_i, x) + c_i` at `x`, in term order.
    pub fn term_values(&self, x: &[R; 2]) -> Vec<R> {
        self.terms
            .iter()
            .map(|(c, d)| d[0].clone() * x[0].clone() + d[1].clone() * x[1].clone() + c.clone())
            .collect()
    }

    pub fn distance_to(&self, p: [f64; 2]) -> f64 {
        self.pieces
            .iter()
            .map(|piece| piece.distance_to(p))
            .fold(f64::INFINITY, f64::min)
    }
}

fn max_norm<R: Exact>(v: &[R; 2]) -> R {
    v[0].abs().max(v[1].abs())
}

fn scale<R: Exact>(v: &[R; 2], s: &R) -> [R; 2] {
    [v[0].clone() / s.clone(), v[1].clone() / s.clone()]
}

fn along<R: Exact>(b: &[R; 2], u: &[R; 2], t: &R) -> [R; 2] {
    [
        b[0].clone() + t.clone() * u[0].clone(),
        b[1].clone() + t.clone() * u[1].clone(),
    ]
}

fn canonical<R: Exact>(b: [R; 2], u: [R; 2], lo: Option<R>, hi: Option<R>) -> CurvePiece<R> {
    match (lo, hi) {
        (Some(lo), None) => CurvePiece {
            base: along(&b, &u, &lo),
            direction: scale(&u, &max_norm(&u)),
            t0: Some(R::zero()),
            t1: None,
        },
        (None, Some(hi)) => {
            let back = [-u[0].clone(), -u[1].clone()];
            CurvePiece {
                base: along(&b, &u, &hi),
                direction: scale(&back, &max_norm(&back)),
                t0: Some(R::zero()),
                t1: None,
            }
        }
        (Some(lo), Some(hi)) => {
            let (p, q) = (along(&b, &u, &lo), along(&b, &u, &hi));
            let (base, end) = if p <= q { (p, q) } else { (q, p) };
            let diff = [end[0].clone() - base[0].clone(), end[1].clone() - base[1].clone()];
            let len = max_norm(&diff);
            CurvePiece {
                direction: scale(&diff, &len),
                base,
                t0: Some(R::zero()),
                t1: Some(len),
            }
        }
        (None, None) => {
            let first = if u[0] != R::zero() { &u[0] } else { &u[1] };
            let n = if first.is_negative() {
                -max_norm(&u)
            } else {
                max_norm(&u)
            };
            CurvePiece {
                base: b,
                direction: scale(&u, &n),
                t0: None,
                t1: None,
            }
        }
    }
}

/// Computes the corner locus of `max_i ((d_i, x) + c_i)` for `terms` given
/// as `(c_i, d_i)`.
///
/// For each pair of terms the tie line `(d_i - d_j, x) = c_j - c_i` is
/// clipped to the interval where both terms dominate every other term.
/// Pieces that reduce to a single point are omitted. Terms sharing an
/// exponent are merged by keeping the larger constant; see
/// [`TropicalCurve::merged_duplicates`].
pub fn tropical_curve_2d<R: Exact>(terms: Vec<(R, [R; 2])>) -> Result<TropicalCurve<R>> {
    let input_len = terms.len();
    let mut by_exp: BTreeMap<[R; 2], R> = BTreeMap::new();
    for (c, d) in terms {
        by_exp
            .entry(d)
            .and_modify(|best| {
                if c > *best {
                    *best = c.clone();
                }
            })
            .or_insert(c);
    }
    let terms: Vec<(R, [R; 2])> = by_exp.into_iter().map(|(d, c)| (c, d)).collect();
    if terms.len() < 2 {
        return Err(Error::DegenerateInput(format!(
            "a tropical curve needs at least 2 distinct exponents, got {}",
            terms.len()
        )));
    }
    let mut pieces = Vec::new();
    for i in 0..terms.len() {
        for j in i + 1..terms.len() {
            if let Some(piece) = tie_piece(&terms, i, j) {
                pieces.push(piece);
            }
        }
    }
    pieces.sort();
    pieces.dedup();
    Ok(TropicalCurve {
        merged_duplicates: input_len - terms.len(),
        terms,
        pieces,
    })
}

fn tie_piece<R: Exact>(terms: &[(R, [R; 2])], i: usize, j: usize) -> Option<CurvePiece<R>> {
    let (ci, di) = &terms[i];
    let (cj, dj) = &terms[j];
    let delta = [di[0].clone() - dj[0].clone(), di[1].clone() - dj[1].clone()];
    let norm2 = delta[0].clone() * delta[0].clone() + delta[1].clone() * delta[1].clone();
    let k = (cj.clone() - ci.clone()) / norm2;
    let b = [delta[0].clone() * k.clone(), delta[1].clone() * k];
    let u = [-delta[1].clone(), delta[0].clone()];
    let mut lo: Option<R> = None;
    let mut hi: Option<R> = None;
    for (m, (cm, dm)) in terms.iter().enumerate() {
        if m == i || m == j {
            continue;
        }
        // Term i dominates term m along b + t·u iff alpha + beta·t >= 0.
        let g = [di[0].clone() - dm[0].clone(), di[1].clone() - dm[1].clone()];
        let alpha = g[0].clone() * b[0].clone() + g[1].clone() * b[1].clone() + ci.clone() - cm.clone();
        let beta = g[0].clone() * u[0].clone() + g[1].clone() * u[1].clone();
        if beta.is_zero() {
            if alpha.is_negative() {
                return None;
            }
            continue;
        }
        let bound = -alpha / beta.clone();
        if beta.is_positive() {
            lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
        } else {
            hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
        }
    }
    if let (Some(l), Some(h)) = (&lo, &hi) {
        if l >= h {
            return None;
        }
    }
    Some(canonical(b, u, lo, hi))
}

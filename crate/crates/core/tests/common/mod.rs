//! Independent oracles and random instance generators shared by the
//! integration tests.

#![allow(dead_code)]

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, RngExt};
use tropikit::linalg::{Edge, Graph, SemiringMatrix};
use tropikit::{ExtReal, SemiringSpec};

pub const INF: f64 = f64::INFINITY;

/// Random digraph on `2..=max_n` nodes with integer weights in `lo..=hi`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, max_n: usize, lo: i64, hi: i64) -> Graph<f64> {
    let n = rng.random_range(2..=max_n);
    let density = rng.random_range(0.1..0.6);
    let mut edges = Vec::new();
    for s in 0..n {
        for d in 0..n {
            if s != d && rng.random_bool(density) {
                edges.push(Edge {
                    src: s,
                    dst: d,
                    weight: rng.random_range(lo..=hi) as f64,
                });
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// A graph with nonnegative weights plus one planted cycle of negative
/// total weight.
pub fn graph_with_negative_cycle<R: Rng + ?Sized>(rng: &mut R, max_n: usize) -> Graph<f64> {
    let base = random_graph(rng, max_n, 0, 10);
    let n = base.node_count();
    let len = rng.random_range(1..=n);
    let mut nodes: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        nodes.swap(i, rng.random_range(0..=i));
    }
    let cycle = &nodes[..len];
    let mut edges = base.edges().to_vec();
    let mut total = 0.0;
    for k in 0..len {
        let w = if k + 1 == len {
            -total - rng.random_range(1..=5) as f64
        } else {
            rng.random_range(0..=10) as f64
        };
        total += w;
        edges.push(Edge {
            src: cycle[k],
            dst: cycle[(k + 1) % len],
            weight: w,
        });
    }
    Graph::new(n, edges).unwrap()
}

/// Single-source distances by edge relaxation; `None` on a reachable
/// negative cycle.
pub fn bellman_ford(g: &Graph<f64>, src: usize) -> Option<Vec<f64>> {
    let n = g.node_count();
    let mut d = vec![INF; n];
    d[src] = 0.0;
    for _ in 0..n {
        let mut changed = false;
        for e in g.edges() {
            if d[e.src] + e.weight < d[e.dst] {
                d[e.dst] = d[e.src] + e.weight;
                changed = true;
            }
        }
        if !changed {
            return Some(d);
        }
    }
    None
}

/// Single-source distances for nonnegative integer weights.
pub fn dijkstra(g: &Graph<f64>, src: usize) -> Vec<f64> {
    let n = g.node_count();
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.src].push((e.dst, e.weight as i64));
    }
    let mut dist: Vec<Option<i64>> = vec![None; n];
    let mut heap = BinaryHeap::from([Reverse((0i64, src))]);
    while let Some(Reverse((d, u))) = heap.pop() {
        if dist[u].is_some() {
            continue;
        }
        dist[u] = Some(d);
        for &(v, w) in &adj[u] {
            if dist[v].is_none() {
                heap.push(Reverse((d + w, v)));
            }
        }
    }
    dist.into_iter().map(|d| d.map_or(INF, |d| d as f64)).collect()
}

/// `⊕_{k=0}^{terms-1} Hᵏ ⊙ F` by repeated multiplication.
pub fn neumann_series(h: &SemiringMatrix<f64>, f: &SemiringMatrix<f64>, terms: usize) -> SemiringMatrix<f64> {
    let mut power = f.clone();
    let mut acc = f.clone();
    for _ in 1..terms {
        power = h.mul(&power).unwrap();
        acc = acc.add(&power).unwrap();
    }
    acc
}

/// Random matrix whose entries are zero of `spec` with probability `p_zero`
/// and otherwise drawn by `draw`.
pub fn random_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    spec: &SemiringSpec<f64>,
    p_zero: f64,
    draw: impl Fn(&mut R) -> f64,
) -> SemiringMatrix<f64> {
    let entries = (0..rows * cols)
        .map(|_| {
            if rng.random_bool(p_zero) {
                spec.zero()
            } else {
                ExtReal::of(draw(rng))
            }
        })
        .collect();
    SemiringMatrix::new(rows, cols, entries, spec.clone()).unwrap()
}

/// Entry draw for which every idempotent built-in instance has a finite
/// least solution: nonnegative for min-plus, nonpositive for max-plus.
pub fn stable_draw<R: Rng + ?Sized>(spec: &SemiringSpec<f64>, rng: &mut R) -> f64 {
    match spec {
        SemiringSpec::Bool => rng.random_range(0..=1) as f64,
        SemiringSpec::MinPlus => rng.random_range(0..=10) as f64,
        SemiringSpec::MaxPlus => -(rng.random_range(0..=10) as f64),
        _ => rng.random_range(-10..=10) as f64,
    }
}

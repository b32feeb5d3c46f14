mod common;

use common::*;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tropikit::interval::{interval_bellman, interval_bellman_with, IntervalGraph, IntervalMatrix};
use tropikit::linalg::{solve_bellman_jacobi, GaussSeidel, SemiringMatrix, Star};
use tropikit::{Endpoint, Error, ExtReal, SemiringSpec};

/// Random interval matrix with endpoints drawn by `stable_draw`.
fn random_interval(rng: &mut ChaCha8Rng, rows: usize, cols: usize, spec: &SemiringSpec<f64>) -> IntervalMatrix<f64> {
    let a = random_matrix(rng, rows, cols, spec, 0.3, |r| stable_draw(spec, r));
    let b = random_matrix(rng, rows, cols, spec, 0.3, |r| stable_draw(spec, r));
    // Entrywise ⊕ is above both, so (a, a ⊕ b) is a valid interval.
    IntervalMatrix::from_endpoints(a.clone(), a.add(&b).unwrap()).unwrap()
}

/// A point matrix inside `m`, choosing each entry from the bounds or a
/// value strictly between them when one exists.
fn select(rng: &mut ChaCha8Rng, m: &IntervalMatrix<f64>) -> SemiringMatrix<f64> {
    let spec = m.spec().clone();
    let mut out = m.lower().clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let iv = m.get(i, j);
            let (lo, hi) = iv.to_numeric();
            let v = match rng.random_range(0..3) {
                0 => iv.lower(),
                1 => iv.upper(),
                _ if lo.is_finite() && hi.is_finite() && spec != SemiringSpec::Bool => {
                    ExtReal::of(rng.random_range(lo.get()..=hi.get()).round().clamp(lo.get(), hi.get()))
                }
                _ => iv.lower(),
            };
            assert!(iv.contains(v));
            out.set(i, j, v).unwrap();
        }
    }
    out
}

#[test]
fn point_selections_land_inside_and_endpoints_are_attained() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let specs = [
        SemiringSpec::MinPlus,
        SemiringSpec::MaxPlus,
        SemiringSpec::MaxMin,
        SemiringSpec::Bool,
    ];
    for spec in &specs {
        for _ in 0..100 {
            let n = rng.random_range(1..=5);
            let k = rng.random_range(1..=2);
            let h = random_interval(&mut rng, n, n, spec);
            let f = random_interval(&mut rng, n, k, spec);
            let x = interval_bellman(&h, &f, None).unwrap();
            for _ in 0..20 {
                let (hs, fs) = (select(&mut rng, &h), select(&mut rng, &f));
                let xs = solve_bellman_jacobi(&hs, &fs, None).unwrap();
                assert!(x.contains(&xs), "{spec}");
            }
            assert_eq!(x.lower(), &solve_bellman_jacobi(h.lower(), f.lower(), None).unwrap());
            assert_eq!(x.upper(), &solve_bellman_jacobi(h.upper(), f.upper(), None).unwrap());
            assert_eq!(x, interval_bellman_with(&GaussSeidel, &h, &f, None).unwrap());
            assert_eq!(x, interval_bellman_with(&Star, &h, &f, None).unwrap());
        }
    }
}

#[test]
fn interval_graph_bounds_shortest_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 8, 0, 10);
        let n = g.node_count();
        let edges: Vec<_> = g
            .edges()
            .iter()
            .map(|e| (e.src, e.dst, e.weight, e.weight + rng.random_range(0..=5) as f64))
            .collect();
        let ig = IntervalGraph::new(n, edges.clone()).unwrap();
        let a = ig.adjacency(SemiringSpec::MinPlus).unwrap();
        let id = IntervalMatrix::point(SemiringMatrix::identity(n, SemiringSpec::MinPlus)).unwrap();
        let d = interval_bellman(&a, &id, None).unwrap();
        // Shortest paths with all-min and all-max weights bound every
        // selection and are both attained.
        let pick = |hi: bool| {
            let es = edges
                .iter()
                .map(|&(s, t, lo, up)| tropikit::linalg::Edge {
                    src: s,
                    dst: t,
                    weight: if hi { up } else { lo },
                })
                .collect();
            tropikit::linalg::Graph::new(n, es).unwrap()
        };
        let (gmin, gmax) = (pick(false), pick(true));
        for s in 0..n {
            let (dmin, dmax) = (dijkstra(&gmin, s), dijkstra(&gmax, s));
            for t in 0..n {
                let (lo, hi) = d.get(s, t).to_numeric();
                assert_eq!((lo.get(), hi.get()), (dmin[t], dmax[t]));
            }
        }
    }
}

#[test]
fn divergent_endpoint_is_named() {
    // Upper endpoint has a negative self-loop in min-plus: [-1, 2] numeric
    // means lower = 2, upper = -1 in the standard order.
    let spec = SemiringSpec::MinPlus;
    let lower = SemiringMatrix::new(1, 1, vec![ExtReal::of(2.0)], spec.clone()).unwrap();
    let upper = SemiringMatrix::new(1, 1, vec![ExtReal::of(-1.0)], spec.clone()).unwrap();
    let h = IntervalMatrix::from_endpoints(lower, upper).unwrap();
    let f = IntervalMatrix::point(SemiringMatrix::identity(1, spec)).unwrap();
    match interval_bellman(&h, &f, Some(50)) {
        Err(Error::NonConvergent {
            endpoint: Some(Endpoint::Upper),
            ..
        }) => {}
        other => panic!("expected upper-endpoint divergence, got {other:?}"),
    }
}

use proptest::prelude::*;
use tropikit::transform::{
    convolution, hopf_lax_evolve, idempotent_integral, integral_wrt_measure, legendre, Convention, EvolveParams, Grid,
    SampledFunction,
};
use tropikit::ExtReal;

const STEP: f64 = 0.125;

/// Quarter-integers, so every sum and grid product stays exact in `f64`.
fn dyadic_values(len: std::ops::Range<usize>, absorbing: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(
        prop_oneof![6 => (-40i32..40).prop_map(|v| f64::from(v) / 4.0), 1 => Just(absorbing)],
        len,
    )
}

fn maxplus(len: std::ops::Range<usize>) -> impl Strategy<Value = SampledFunction<f64>> {
    ((-16i32..16), dyadic_values(len, f64::NEG_INFINITY))
        .prop_map(|(s, v)| SampledFunction::from_values(f64::from(s) * STEP, STEP, &v, Convention::MaxPlus).unwrap())
}

fn minplus_on(start: f64, len: usize) -> impl Strategy<Value = SampledFunction<f64>> {
    dyadic_values(len..len + 1, f64::INFINITY)
        .prop_map(move |v| SampledFunction::from_values(start, 0.25, &v, Convention::MinPlus).unwrap())
}

fn scalar() -> impl Strategy<Value = ExtReal<f64>> {
    (-20i32..20).prop_map(|v| ExtReal::of(f64::from(v) / 2.0))
}

fn xi_grid() -> Grid<f64> {
    Grid::new(-4.0, 0.25, 33).unwrap()
}

fn same_grid_pair(conv: Convention) -> impl Strategy<Value = (SampledFunction<f64>, SampledFunction<f64>)> {
    let absorbing = conv.spec::<f64>().zero().get();
    (1usize..20, -16i32..16).prop_flat_map(move |(n, s)| {
        let mk = move |v: Vec<f64>| SampledFunction::from_values(f64::from(s) * STEP, STEP, &v, conv).unwrap();
        (
            dyadic_values(n..n + 1, absorbing).prop_map(mk),
            dyadic_values(n..n + 1, absorbing).prop_map(mk),
        )
    })
}

/// Upper concave envelope of the finite points `(x_i, y_i)` by brute force.
fn concave_majorant(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    (0..xs.len())
        .map(|i| {
            let mut best = ys[i];
            for j in 0..=i {
                for k in i..xs.len() {
                    if j < k {
                        let w = (xs[i] - xs[j]) / (xs[k] - xs[j]);
                        best = best.max((1.0 - w) * ys[j] + w * ys[k]);
                    }
                }
            }
            best
        })
        .collect()
}

proptest! {
    #[test]
    fn convolution_theorem_holds_exactly(phi in maxplus(1..16), psi in maxplus(1..16)) {
        let lhs = legendre(&convolution(&phi, &psi).unwrap(), &xi_grid()).unwrap();
        let (lp, lq) = (legendre(&phi, &xi_grid()).unwrap(), legendre(&psi, &xi_grid()).unwrap());
        let spec = phi.spec();
        for k in 0..lhs.len() {
            prop_assert_eq!(lhs.values()[k], spec.times(lp.values()[k], lq.values()[k]));
        }
    }

    #[test]
    fn convolution_commutes(phi in maxplus(1..16), psi in maxplus(1..16)) {
        prop_assert_eq!(convolution(&phi, &psi).unwrap(), convolution(&psi, &phi).unwrap());
    }

    #[test]
    fn convolution_is_associative(a in maxplus(1..8), b in maxplus(1..8), c in maxplus(1..8)) {
        let left = convolution(&convolution(&a, &b).unwrap(), &c).unwrap();
        let right = convolution(&a, &convolution(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn operators_are_idempotent_linear(
        (phi, psi) in same_grid_pair(Convention::MaxPlus),
        kernel in maxplus(1..8),
        lam in scalar(),
        mu in scalar(),
    ) {
        let combo = phi.scale(lam).unwrap().oplus(&psi.scale(mu).unwrap()).unwrap();
        let spec = phi.spec();
        let lin = |a: ExtReal<f64>, b: ExtReal<f64>| spec.plus(spec.times(lam, a), spec.times(mu, b));

        prop_assert_eq!(idempotent_integral(&combo), lin(idempotent_integral(&phi), idempotent_integral(&psi)));

        let (lc, lp, lq) = (
            legendre(&combo, &xi_grid()).unwrap(),
            legendre(&phi, &xi_grid()).unwrap(),
            legendre(&psi, &xi_grid()).unwrap(),
        );
        for k in 0..lc.len() {
            prop_assert_eq!(lc.values()[k], lin(lp.values()[k], lq.values()[k]));
        }

        let (cc, cp, cq) = (
            convolution(&combo, &kernel).unwrap(),
            convolution(&phi, &kernel).unwrap(),
            convolution(&psi, &kernel).unwrap(),
        );
        for k in 0..cc.len() {
            prop_assert_eq!(cc.values()[k], lin(cp.values()[k], cq.values()[k]));
        }
    }

    #[test]
    fn hopf_lax_is_idempotent_linear(
        (s, r) in (1usize..24).prop_flat_map(|n| (minplus_on(-1.0, n), minplus_on(-1.0, n))),
        lam in scalar(),
        mu in scalar(),
    ) {
        // δ = 1/4, m = 1, t = 1/2: the kernel coefficient is 1/16, exact.
        let p = EvolveParams::new(0.5, 1.0).unwrap();
        let spec = s.spec();
        let combo = s.scale(lam).unwrap().oplus(&r.scale(mu).unwrap()).unwrap();
        let (hc, hs, hr) = (
            hopf_lax_evolve(&combo, p).unwrap(),
            hopf_lax_evolve(&s, p).unwrap(),
            hopf_lax_evolve(&r, p).unwrap(),
        );
        for k in 0..hc.len() {
            let want = spec.plus(spec.times(lam, hs.values()[k]), spec.times(mu, hr.values()[k]));
            prop_assert_eq!(hc.values()[k], want);
        }
    }

    #[test]
    fn hopf_lax_is_a_semigroup(
        s in (2usize..40).prop_flat_map(|n| minplus_on(-2.0, n)),
        t1 in 0.1f64..2.0,
        t2 in 0.1f64..2.0,
        m in 0.5f64..2.0,
    ) {
        // Composition minimises over grid midpoints only, so it lies above the
        // direct evolution by at most the quadratic split error
        // (a + b) / 4 with per-step kernel coefficients a, b = m δ² / (2 t).
        let ev = |f: &SampledFunction<f64>, t: f64| hopf_lax_evolve(f, EvolveParams::new(t, m).unwrap()).unwrap();
        let twice = ev(&ev(&s, t1), t2);
        let once = ev(&s, t1 + t2);
        let slack = m * 0.25 * 0.25 * (1.0 / t1 + 1.0 / t2) / 8.0;
        for (a, b) in twice.values().iter().zip(once.values()) {
            let (a, b) = (a.get(), b.get());
            if b.is_infinite() {
                prop_assert_eq!(a, b);
            } else {
                let eps = 1e-12 * b.abs().max(1.0);
                prop_assert!(a >= b - eps && a <= b + slack + eps, "{a} vs {b} (+{slack})");
            }
        }
    }

    #[test]
    fn legendre_is_convex(phi in maxplus(1..16)) {
        let l = legendre(&phi, &xi_grid()).unwrap();
        let v: Vec<f64> = l.values().iter().map(|e| e.get()).collect();
        if v.iter().all(|x| x.is_finite()) {
            for w in v.windows(3) {
                prop_assert!(w[0] + w[2] - 2.0 * w[1] >= -1e-12 * w[1].abs().max(1.0));
            }
        }
    }

    #[test]
    fn double_transform_is_the_concave_majorant(
        ys in prop::collection::vec((-8i32..=8).prop_map(|v| f64::from(v) / 2.0), 1..12),
        start in -8i32..8,
    ) {
        let step = 0.5;
        let phi = SampledFunction::from_values(f64::from(start) * step, step, &ys, Convention::MaxPlus).unwrap();
        // Hull slopes are bounded by 8 / 0.5 = 16; the ξ-grid covers them.
        let xi = Grid::new(-17.0, 0.125, 273).unwrap();
        let l = legendre(&phi, &xi).unwrap();
        let neg: Vec<f64> = l.values().iter().map(|e| -e.get()).collect();
        let back = legendre(
            &SampledFunction::from_values(xi.start(), xi.step(), &neg, Convention::MaxPlus).unwrap(),
            phi.grid(),
        )
        .unwrap();
        let xs: Vec<f64> = phi.grid().points().collect();
        let want = concave_majorant(&xs, &ys);
        // inf over a ξ-grid of a W-Lipschitz convex function overshoots by
        // at most W·δξ/2 where W bounds |y - x|.
        let width = xs[xs.len() - 1] - xs[0];
        let tol = width * xi.step() / 2.0 + 1e-12;
        for (got, want) in back.values().iter().map(|e| -e.get()).zip(want) {
            prop_assert!(got >= want - 1e-12 && got <= want + tol, "{got} vs {want}");
        }
    }

    #[test]
    fn integral_against_a_density_matches_a_loop((phi, psi) in same_grid_pair(Convention::MinPlus)) {
        let mut best = f64::INFINITY;
        for (a, b) in phi.values().iter().zip(psi.values()) {
            best = best.min(a.get() + b.get());
        }
        prop_assert_eq!(integral_wrt_measure(&phi, &psi).unwrap().get(), best);
    }
}

#[test]
fn mismatched_grids_are_rejected() {
    let a = SampledFunction::from_values(0.0, 0.5, &[1.0, 2.0], Convention::MaxPlus).unwrap();
    let b = SampledFunction::from_values(0.0, 0.25, &[1.0, 2.0], Convention::MaxPlus).unwrap();
    let c = SampledFunction::from_values(0.0, 0.5, &[1.0, 2.0], Convention::MinPlus).unwrap();
    assert!(convolution(&a, &b).is_err());
    assert!(convolution(&a, &c).is_err());
    assert!(integral_wrt_measure(&a, &b).is_err());
    assert!(integral_wrt_measure(&a, &c).is_err());
    assert!(legendre(&c, &xi_grid()).is_err());
    assert!(hopf_lax_evolve(&a, EvolveParams::new(1.0, 1.0).unwrap()).is_err());
}

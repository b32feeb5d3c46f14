use num_rational::Ratio;
use proptest::prelude::*;
use tropikit::dequant::{
    dequantize_limit, eval_dequantized, newton_set, polytope_semiring_ops, tropical_curve_2d, Polytope, SublinearForm,
    Term,
};
use tropikit::linalg::MatOp;
use tropikit::{DeformationParam, Polynomial, Rational};

fn q(n: i64, d: i64) -> Rational {
    Ratio::new(n, d)
}

fn exponent(dim: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(
        (-6i64..=6, prop_oneof![Just(1i64), Just(2)]).prop_map(|(n, d)| q(n, d)),
        dim,
    )
}

fn positive_poly(dim: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((0.1f64..10.0, exponent(dim)), 1..6).prop_map(move |ts| {
        let terms = ts
            .into_iter()
            .map(|(coeff, exponent)| Term { coeff, exponent })
            .collect();
        Polynomial::new(dim, terms).unwrap()
    })
}

fn pair_of_polys() -> impl Strategy<Value = (Polynomial, Polynomial)> {
    (1usize..=2).prop_flat_map(|d| (positive_poly(d), positive_poly(d)))
}

fn point(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3f64..3.0, dim)
}

fn h(x: f64) -> DeformationParam<f64> {
    DeformationParam::new(x).unwrap()
}

fn polytope(dim: usize) -> impl Strategy<Value = Polytope<Rational>> {
    prop::collection::vec(exponent(dim), 1..6).prop_map(move |pts| Polytope::hull(dim, pts).unwrap())
}

proptest! {
    #[test]
    fn newton_set_is_a_homomorphism((f, g) in pair_of_polys()) {
        let (nf, ng) = (newton_set(&f).unwrap(), newton_set(&g).unwrap());
        prop_assert_eq!(newton_set(&f.mul(&g).unwrap()).unwrap(), polytope_semiring_ops(&nf, &ng, MatOp::Mul).unwrap());
        prop_assert_eq!(newton_set(&f.add(&g).unwrap()).unwrap(), polytope_semiring_ops(&nf, &ng, MatOp::Add).unwrap());
    }

    #[test]
    fn dequantized_product_is_a_sum(
        (f, g, x) in (1usize..=2).prop_flat_map(|d| (positive_poly(d), positive_poly(d), point(d))),
        hv in prop_oneof![Just(1.0), Just(0.1), Just(0.01)],
    ) {
        let fg = eval_dequantized(&f.mul(&g).unwrap(), &x, h(hv)).unwrap().get();
        let sum = eval_dequantized(&f, &x, h(hv)).unwrap().get() + eval_dequantized(&g, &x, h(hv)).unwrap().get();
        prop_assert!((fg - sum).abs() <= 1e-9 * sum.abs().max(1.0), "{fg} vs {sum}");
    }

    #[test]
    fn limit_forms_follow_max_and_sum(
        (f, g, x) in (1usize..=2).prop_flat_map(|d| (positive_poly(d), positive_poly(d), point(d))),
    ) {
        let (pf, pg) = (f.dequantized_form(), g.dequantized_form());
        prop_assert_eq!(f.add(&g).unwrap().dequantized_form(), pf.max(&pg).unwrap());
        let xs: Vec<Rational> = x.iter().map(|v| q((v * 8.0).round() as i64, 8)).collect();
        let prod = f.mul(&g).unwrap().dequantized_form();
        prop_assert_eq!(prod.eval(&xs), pf.eval(&xs) + pg.eval(&xs));
        prop_assert_eq!(pf.sum(&pg).unwrap().eval(&xs), prod.eval(&xs));
    }

    #[test]
    fn deformation_error_is_bounded(
        (f, x) in (1usize..=2).prop_flat_map(|d| (positive_poly(d), point(d))),
        hv in 1e-3f64..2.0,
    ) {
        let limit = dequantize_limit(&f, &x).unwrap().get();
        let val = eval_dequantized(&f, &x, h(hv)).unwrap().get();
        let t = f.terms().len() as f64;
        let amax = f.terms().iter().map(|t| t.coeff.ln().abs()).fold(0.0, f64::max);
        let bound = hv * (t.ln() + amax);
        prop_assert!((val - limit).abs() <= bound + 1e-12 * limit.abs().max(1.0), "{val} {limit} {bound}");
    }

    #[test]
    fn limit_form_is_sublinear(
        (f, x, y) in (1usize..=3).prop_flat_map(|d| (positive_poly(d), exponent(d), exponent(d))),
        lam in 0i64..5,
    ) {
        let p = f.dequantized_form();
        let xy: Vec<Rational> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        prop_assert!(p.eval(&xy) <= p.eval(&x) + p.eval(&y));
        let lx: Vec<Rational> = x.iter().map(|a| a * lam).collect();
        prop_assert_eq!(p.eval(&lx), p.eval(&x) * lam);
    }

    #[test]
    fn subdifferential_is_the_newton_set(f in (1usize..=2).prop_flat_map(positive_poly)) {
        prop_assert_eq!(f.dequantized_form().subdifferential().unwrap(), newton_set(&f).unwrap());
    }

    #[test]
    fn polytope_semiring_distributes(a in polytope(2), b in polytope(2), c in polytope(2)) {
        let add = |p: &Polytope<Rational>, q: &Polytope<Rational>| polytope_semiring_ops(p, q, MatOp::Add).unwrap();
        let mul = |p: &Polytope<Rational>, q: &Polytope<Rational>| polytope_semiring_ops(p, q, MatOp::Mul).unwrap();
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert_eq!(add(&a, &a), a.clone());
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
    }

    #[test]
    fn curve_pieces_are_tie_loci(
        terms in prop::collection::vec(((-8i64..=8), (0i64..=3), (0i64..=3)), 2..7)
    ) {
        let terms: Vec<_> = terms.into_iter().map(|(c, a, b)| (q(c, 2), [q(a, 1), q(b, 1)])).collect();
        let Ok(curve) = tropical_curve_2d(terms) else {
            return Ok(());
        };
        for piece in curve.pieces() {
            let len = piece.t1.unwrap_or(q(5, 1)) - piece.t0.unwrap_or(q(-5, 1));
            let start = piece.t0.unwrap_or(q(-5, 1));
            for k in 0..=20 {
                let t = start + len * q(k, 20);
                let mut vals = curve.term_values(&piece.point_at(&t));
                vals.sort();
                let n = vals.len();
                prop_assert_eq!(&vals[n - 1], &vals[n - 2], "piece {:?} at t = {}", piece, t);
            }
        }
    }
}

#[test]
fn sublinear_form_rejects_mismatched_slopes() {
    assert!(SublinearForm::new(2, vec![vec![q(1, 1)]]).is_err());
}

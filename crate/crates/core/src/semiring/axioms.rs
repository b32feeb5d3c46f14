//! Randomised verification of the semiring axioms for a [`SemiringSpec`].

use std::fmt;

use rand::{Rng, RngExt};

use super::{ExtReal, SemiringSpec};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    AddAssociative,
    AddCommutative,
    MulAssociative,
    LeftDistributive,
    RightDistributive,
    ZeroNeutral,
    ZeroAbsorbing,
    OneNeutral,
    Idempotent,
    /// `x ⊕_h x - x = h ln 2` for finite `x` (deformed instances only).
    DeformationGap,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Law::AddAssociative => "add-associative",
            Law::AddCommutative => "add-commutative",
            Law::MulAssociative => "mul-associative",
            Law::LeftDistributive => "left-distributive",
            Law::RightDistributive => "right-distributive",
            Law::ZeroNeutral => "zero-neutral",
            Law::ZeroAbsorbing => "zero-absorbing",
            Law::OneNeutral => "one-neutral",
            Law::Idempotent => "idempotent",
            Law::DeformationGap => "deformation-gap",
        };
        f.write_str(s)
    }
}

/// How results of the two sides of a law are compared.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Comparison {
    Exact,
    /// `|a - b| <= tol * max(1, |a|, |b|)`; equal infinities compare equal.
    Relative(f64),
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Exact => f.write_str("exact"),
            Comparison::Relative(tol) => write!(f, "relative {tol:e}"),
        }
    }
}

impl Comparison {
    /// Exact for idempotent instances, `1e-12` relative otherwise.
    pub fn default_for<T: Scalar>(spec: &SemiringSpec<T>) -> Self {
        if spec.is_idempotent() {
            Comparison::Exact
        } else {
            Comparison::Relative(1e-12)
        }
    }

    pub fn same<T: Scalar>(self, a: ExtReal<T>, b: ExtReal<T>) -> bool {
        match self {
            Comparison::Exact => a == b,
            Comparison::Relative(tol) => {
                if a == b {
                    return true;
                }
                let (a, b) = (a.get(), b.get());
                if !a.is_finite() || !b.is_finite() {
                    return false;
                }
                let scale = T::one().max(a.abs()).max(b.abs());
                (a - b).abs() <= T::lit(tol) * scale
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawCheck {
    pub law: Law,
    pub trials: usize,
    pub violations: usize,
    /// Whether the law is supposed to hold for this instance.
    pub expected: bool,
}

impl LawCheck {
    pub fn ok(&self) -> bool {
        if self.expected {
            self.violations == 0
        } else {
            self.violations > 0
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub semiring: String,
    pub comparison: Comparison,
    pub checks: Vec<LawCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(LawCheck::ok)
    }

    pub fn check(&self, law: Law) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }
}

/// Draws a random element of a built-in instance.
///
/// Finite values are multiples of 1/8 of moderate size, so sums of a few of
/// them are exact in binary floating point and the idempotent instances can
/// be checked with exact equality. Zero and the infinities appear with small
/// fixed probability. Returns `None` for custom instances.
pub fn sample_element<T: Scalar, R: Rng + ?Sized>(spec: &SemiringSpec<T>, rng: &mut R) -> Option<ExtReal<T>> {
    let dyadic = |rng: &mut R, lo: i32, hi: i32| ExtReal::of(T::lit(rng.random_range(lo..=hi) as f64 / 8.0));
    let x = match spec {
        SemiringSpec::Bool => ExtReal::of(if rng.random_bool(0.5) { T::one() } else { T::zero() }),
        SemiringSpec::MaxPlus | SemiringSpec::Deformed(_) => {
            if rng.random_bool(0.1) {
                ExtReal::neg_inf()
            } else {
                dyadic(rng, -800, 800)
            }
        }
        SemiringSpec::MinPlus => {
            if rng.random_bool(0.1) {
                ExtReal::pos_inf()
            } else {
                dyadic(rng, -800, 800)
            }
        }
        SemiringSpec::MaxMin => match rng.random_range(0..20) {
            0 => ExtReal::neg_inf(),
            1 => ExtReal::pos_inf(),
            _ => dyadic(rng, -800, 800),
        },
        SemiringSpec::NonNeg => {
            if rng.random_bool(0.1) {
                ExtReal::of(T::zero())
            } else {
                dyadic(rng, 0, 800)
            }
        }
        SemiringSpec::Custom(_) => return None,
    };
    Some(x)
}

/// Checks every semiring law on `trials` random triples drawn by `sample`.
pub fn check_axioms<T, F>(spec: &SemiringSpec<T>, trials: usize, comparison: Comparison, mut sample: F) -> AxiomReport
where
    T: Scalar,
    F: FnMut() -> ExtReal<T>,
{
    let laws = [
        Law::AddAssociative,
        Law::AddCommutative,
        Law::MulAssociative,
        Law::LeftDistributive,
        Law::RightDistributive,
        Law::ZeroNeutral,
        Law::ZeroAbsorbing,
        Law::OneNeutral,
        Law::Idempotent,
    ];
    let mut checks: Vec<LawCheck> = laws
        .iter()
        .map(|&law| LawCheck {
            law,
            trials,
            violations: 0,
            expected: law != Law::Idempotent || spec.is_idempotent(),
        })
        .collect();
    let deformed_h = match spec {
        SemiringSpec::Deformed(h) => Some(h.get()),
        _ => None,
    };
    let mut gap = LawCheck {
        law: Law::DeformationGap,
        trials: 0,
        violations: 0,
        expected: true,
    };

    let (zero, one) = (spec.zero(), spec.one());
    let p = |a, b| spec.plus(a, b);
    let t = |a, b| spec.times(a, b);
    for _ in 0..trials {
        let (x, y, z) = (sample(), sample(), sample());
        let outcomes = [
            comparison.same(p(p(x, y), z), p(x, p(y, z))),
            comparison.same(p(x, y), p(y, x)),
            comparison.same(t(t(x, y), z), t(x, t(y, z))),
            comparison.same(t(x, p(y, z)), p(t(x, y), t(x, z))),
            comparison.same(t(p(x, y), z), p(t(x, z), t(y, z))),
            p(zero, x) == x && p(x, zero) == x,
            t(zero, x) == zero && t(x, zero) == zero,
            t(one, x) == x && t(x, one) == x,
            comparison.same(p(x, x), x),
        ];
        for (check, holds) in checks.iter_mut().zip(outcomes) {
            if !holds {
                check.violations += 1;
            }
        }
        if let Some(h) = deformed_h {
            if x.is_finite() {
                gap.trials += 1;
                let excess = p(x, x).get() - x.get();
                if (excess - h * T::LN_2()).abs() > T::lit(1e-12) {
                    gap.violations += 1;
                }
            }
        }
    }
    if deformed_h.is_some() {
        checks.push(gap);
    }
    AxiomReport {
        semiring: spec.id(),
        comparison,
        checks,
    }
}

/// [`check_axioms`] with the default sampler and comparison for a built-in
/// instance. Returns `None` for custom instances.
pub fn check_builtin<T: Scalar, R: Rng + ?Sized>(
    spec: &SemiringSpec<T>,
    trials: usize,
    rng: &mut R,
) -> Option<AxiomReport> {
    if matches!(spec, SemiringSpec::Custom(_)) {
        return None;
    }
    let cmp = Comparison::default_for(spec);
    Some(check_axioms(spec, trials, cmp, || {
        sample_element(spec, rng).expect("built-in instance")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn idempotent_instances_pass_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in [
            SemiringSpec::<f64>::Bool,
            SemiringSpec::MaxPlus,
            SemiringSpec::MinPlus,
            SemiringSpec::MaxMin,
        ] {
            let r = check_builtin(&spec, 2000, &mut rng).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.comparison, Comparison::Exact);
        }
    }

    #[test]
    fn quantum_instances_fail_only_idempotency() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for spec in [SemiringSpec::<f64>::NonNeg, SemiringSpec::deformed(0.5).unwrap()] {
            let r = check_builtin(&spec, 2000, &mut rng).unwrap();
            assert!(r.passed(), "{r:?}");
            assert!(r.check(Law::Idempotent).unwrap().violations > 0);
        }
    }

    struct ShiftedZero;

    impl crate::semiring::CustomSemiring<f64> for ShiftedZero {
        fn name(&self) -> String {
            "shifted".into()
        }
        fn zero(&self) -> f64 {
            -1.0
        }
        fn one(&self) -> f64 {
            0.0
        }
        fn add(&self, a: f64, b: f64) -> f64 {
            a.max(b)
        }
        fn mul(&self, a: f64, b: f64) -> f64 {
            a + b
        }
        fn contains(&self, _: f64) -> bool {
            true
        }
        fn is_idempotent(&self) -> bool {
            true
        }
    }

    #[test]
    fn broken_instance_is_caught() {
        let spec = SemiringSpec::Custom(std::sync::Arc::new(ShiftedZero));
        let mut k = 0;
        let r = check_axioms(&spec, 20, Comparison::Exact, || {
            k += 1;
            ExtReal::of(-3.0 + (k % 5) as f64)
        });
        assert!(!r.passed());
        assert!(r.check(Law::ZeroNeutral).unwrap().violations > 0);
        assert_eq!(r.check(Law::AddCommutative).unwrap().violations, 0);
    }

    #[test]
    fn relative_comparison() {
        let c = Comparison::Relative(1e-12);
        assert!(c.same(ExtReal::of(1.0), ExtReal::of(1.0 + 1e-13)));
        assert!(!c.same(ExtReal::of(1.0), ExtReal::of(1.0 + 1e-11)));
        assert!(c.same(ExtReal::<f64>::neg_inf(), ExtReal::neg_inf()));
        assert!(!c.same(ExtReal::<f64>::neg_inf(), ExtReal::of(0.0)));
    }
}

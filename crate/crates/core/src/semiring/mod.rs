//! Semiring instances over the extended reals.
//!
//! A [`SemiringSpec`] names one of the built-in structures (Boolean,
//! max-plus, min-plus, max-min, the nonnegative reals, or the deformed
//! log-sum-exp semiring) or wraps a user-supplied [`CustomSemiring`].
//! All operations apply the absorption rules for the zero element before
//! touching floating-point arithmetic, so no operation on in-domain values
//! ever yields NaN.

pub mod axioms;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An extended real number: a non-NaN IEEE value, possibly infinite.
///
/// Equality is IEEE equality on non-NaN values, which is bitwise equality
/// once `-0.0` is identified with `+0.0`. The constructor normalises `-0.0`.
#[derive(Clone, Copy, Default)]
pub struct ExtReal<T>(T);

impl<T: Scalar> ExtReal<T> {
    pub fn new(value: T) -> Result<Self> {
        if value.is_nan() {
            return Err(Error::InvalidInput("NaN is not an extended real".into()));
        }
        Ok(Self::normalised(value))
    }

    /// Panicking constructor for literals and test data.
    pub fn of(value: T) -> Self {
        Self::new(value).expect("ExtReal::of called with NaN")
    }

    #[inline]
    fn normalised(value: T) -> Self {
        if value == T::zero() {
            ExtReal(T::zero())
        } else {
            ExtReal(value)
        }
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }

    pub fn pos_inf() -> Self {
        ExtReal(T::infinity())
    }

    pub fn neg_inf() -> Self {
        ExtReal(T::neg_infinity())
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }
}

impl<T: Scalar> PartialEq for ExtReal<T> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<T: Scalar> Eq for ExtReal<T> {}

impl<T: Scalar> PartialOrd for ExtReal<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Ord for ExtReal<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.partial_cmp(&other.0).expect("ExtReal is never NaN")
    }
}

impl<T: Scalar> fmt::Debug for ExtReal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl<T: Scalar> fmt::Display for ExtReal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == T::infinity() {
            f.write_str("inf")
        } else if self.0 == T::neg_infinity() {
            f.write_str("-inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Positive finite deformation scale `h` of the log-sum-exp addition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeformationParam<T>(T);

impl<T: Scalar> DeformationParam<T> {
    pub fn new(h: T) -> Result<Self> {
        if h.is_finite() && h > T::zero() {
            Ok(DeformationParam(h))
        } else {
            Err(Error::InvalidInput(format!(
                "deformation parameter must be positive and finite, got {h}"
            )))
        }
    }

    #[inline]
    pub fn get(self) -> T {
        self.0
    }
}

/// A user-defined semiring over the extended reals.
///
/// `add` and `mul` are only ever called with arguments for which
/// `contains` holds.
pub trait CustomSemiring<T>: Send + Sync {
    fn name(&self) -> String;
    fn zero(&self) -> T;
    fn one(&self) -> T;
    fn add(&self, a: T, b: T) -> T;
    fn mul(&self, a: T, b: T) -> T;
    fn contains(&self, x: T) -> bool;
    fn is_idempotent(&self) -> bool;
}

#[derive(Clone)]
pub enum SemiringSpec<T> {
    /// `{0, 1}` with `or` and `and`.
    Bool,
    /// `R ∪ {-inf}` with `max` and `+`.
    MaxPlus,
    /// `R ∪ {+inf}` with `min` and `+`.
    MinPlus,
    /// `R ∪ {-inf, +inf}` with `max` and `min`.
    MaxMin,
    /// Nonnegative finite reals with ordinary `+` and `×`.
    NonNeg,
    /// `R ∪ {-inf}` with the log-sum-exp addition at scale `h` and `+`.
    Deformed(DeformationParam<T>),
    Custom(Arc<dyn CustomSemiring<T>>),
}

impl<T: Scalar> SemiringSpec<T> {
    /// The deformed semiring for a raw `h`.
    pub fn deformed(h: T) -> Result<Self> {
        Ok(SemiringSpec::Deformed(DeformationParam::new(h)?))
    }

    /// Identifier used on the command line and in file headers.
    pub fn id(&self) -> String {
        match self {
            SemiringSpec::Bool => "bool".into(),
            SemiringSpec::MaxPlus => "maxplus".into(),
            SemiringSpec::MinPlus => "minplus".into(),
            SemiringSpec::MaxMin => "maxmin".into(),
            SemiringSpec::NonNeg => "nonneg".into(),
            SemiringSpec::Deformed(h) => format!("deformed:{}", h.get()),
            SemiringSpec::Custom(c) => c.name(),
        }
    }

    pub fn zero(&self) -> ExtReal<T> {
        ExtReal::normalised(match self {
            SemiringSpec::Bool | SemiringSpec::NonNeg => T::zero(),
            SemiringSpec::MaxPlus | SemiringSpec::MaxMin | SemiringSpec::Deformed(_) => T::neg_infinity(),
            SemiringSpec::MinPlus => T::infinity(),
            SemiringSpec::Custom(c) => c.zero(),
        })
    }

    pub fn one(&self) -> ExtReal<T> {
        ExtReal::normalised(match self {
            SemiringSpec::Bool | SemiringSpec::NonNeg => T::one(),
            SemiringSpec::MaxPlus | SemiringSpec::MinPlus | SemiringSpec::Deformed(_) => T::zero(),
            SemiringSpec::MaxMin => T::infinity(),
            SemiringSpec::Custom(c) => c.one(),
        })
    }

    pub fn is_idempotent(&self) -> bool {
        match self {
            SemiringSpec::Bool | SemiringSpec::MaxPlus | SemiringSpec::MinPlus | SemiringSpec::MaxMin => true,
            SemiringSpec::NonNeg | SemiringSpec::Deformed(_) => false,
            SemiringSpec::Custom(c) => c.is_idempotent(),
        }
    }

    pub fn contains(&self, x: ExtReal<T>) -> bool {
        let v = x.get();
        match self {
            SemiringSpec::Bool => v == T::zero() || v == T::one(),
            SemiringSpec::MaxPlus | SemiringSpec::Deformed(_) => v != T::infinity(),
            SemiringSpec::MinPlus => v != T::neg_infinity(),
            SemiringSpec::MaxMin => true,
            SemiringSpec::NonNeg => v.is_finite() && v >= T::zero(),
            SemiringSpec::Custom(c) => c.contains(v),
        }
    }

    pub fn check(&self, x: ExtReal<T>) -> Result<ExtReal<T>> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::Domain {
                value: x.to_string(),
                semiring: self.id(),
            })
        }
    }

    /// `a ⊕ b` without domain checks. Arguments must lie in the domain.
    #[inline]
    pub fn plus(&self, a: ExtReal<T>, b: ExtReal<T>) -> ExtReal<T> {
        match self {
            SemiringSpec::Bool | SemiringSpec::MaxPlus | SemiringSpec::MaxMin => a.max(b),
            SemiringSpec::MinPlus => a.min(b),
            SemiringSpec::NonNeg => ExtReal::normalised(a.0 + b.0),
            SemiringSpec::Deformed(h) => log_sum_exp2(a, b, *h),
            SemiringSpec::Custom(c) => ExtReal::normalised(c.add(a.0, b.0)),
        }
    }

    /// `a ⊙ b` without domain checks. The zero is absorbing before any
    /// arithmetic happens.
    #[inline]
    pub fn times(&self, a: ExtReal<T>, b: ExtReal<T>) -> ExtReal<T> {
        match self {
            SemiringSpec::Bool | SemiringSpec::MaxMin => a.min(b),
            SemiringSpec::MaxPlus | SemiringSpec::Deformed(_) => {
                if a.0 == T::neg_infinity() || b.0 == T::neg_infinity() {
                    ExtReal::neg_inf()
                } else {
                    ExtReal::normalised(a.0 + b.0)
                }
            }
            SemiringSpec::MinPlus => {
                if a.0 == T::infinity() || b.0 == T::infinity() {
                    ExtReal::pos_inf()
                } else {
                    ExtReal::normalised(a.0 + b.0)
                }
            }
            SemiringSpec::NonNeg => {
                if a.0 == T::zero() || b.0 == T::zero() {
                    ExtReal(T::zero())
                } else {
                    ExtReal::normalised(a.0 * b.0)
                }
            }
            SemiringSpec::Custom(c) => {
                let zero = self.zero();
                if a == zero || b == zero {
                    zero
                } else {
                    ExtReal::normalised(c.mul(a.0, b.0))
                }
            }
        }
    }

    /// Checked `a ⊕ b`.
    pub fn add(&self, a: ExtReal<T>, b: ExtReal<T>) -> Result<ExtReal<T>> {
        let r = self.plus(self.check(a)?, self.check(b)?);
        self.check(r)
    }

    /// Checked `a ⊙ b`. Finite operands whose sum overflows report a
    /// domain error rather than leaving the domain silently.
    pub fn mul(&self, a: ExtReal<T>, b: ExtReal<T>) -> Result<ExtReal<T>> {
        let r = self.times(self.check(a)?, self.check(b)?);
        self.check(r)
    }

    /// Standard order: `a ⪯ b` iff `a ⊕ b = b`.
    pub fn leq(&self, a: ExtReal<T>, b: ExtReal<T>) -> Result<bool> {
        if !self.is_idempotent() {
            return Err(Error::NotIdempotent(self.id()));
        }
        Ok(self.add(a, b)? == b)
    }
}

impl<T: Scalar> PartialEq for SemiringSpec<T> {
    fn eq(&self, other: &Self) -> bool {
        self.id() == other.id()
    }
}

impl<T: Scalar> fmt::Debug for SemiringSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemiringSpec({})", self.id())
    }
}

impl<T: Scalar> fmt::Display for SemiringSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Parses the closed set of built-in identifiers:
/// `bool`, `maxplus`, `minplus`, `maxmin`, `nonneg`, `deformed:<h>`.
impl<T: Scalar> FromStr for SemiringSpec<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bool" => Ok(SemiringSpec::Bool),
            "maxplus" => Ok(SemiringSpec::MaxPlus),
            "minplus" => Ok(SemiringSpec::MinPlus),
            "maxmin" => Ok(SemiringSpec::MaxMin),
            "nonneg" => Ok(SemiringSpec::NonNeg),
            _ => {
                let Some(h) = s.strip_prefix("deformed:") else {
                    return Err(Error::InvalidInput(format!("unknown semiring `{s}`")));
                };
                let h: f64 = h
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad deformation parameter `{h}`")))?;
                SemiringSpec::deformed(T::lit(h))
            }
        }
    }
}

/// Named semirings, pre-populated with the built-in instances.
pub struct SemiringRegistry<T> {
    custom: BTreeMap<String, SemiringSpec<T>>,
}

impl<T: Scalar> Default for SemiringRegistry<T> {
    fn default() -> Self {
        Self {
            custom: BTreeMap::new(),
        }
    }
}

impl<T: Scalar> SemiringRegistry<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a custom instance under its own name. Built-in names
    /// cannot be shadowed.
    pub fn register(&mut self, semiring: Arc<dyn CustomSemiring<T>>) -> Result<SemiringSpec<T>> {
        let name = semiring.name();
        if name.parse::<SemiringSpec<T>>().is_ok() {
            return Err(Error::InvalidInput(format!("`{name}` is a built-in semiring")));
        }
        let zero = semiring.zero();
        let one = semiring.one();
        if zero.is_nan() || one.is_nan() || zero == one {
            return Err(Error::InvalidInput(format!(
                "`{name}` needs distinct non-NaN zero and one"
            )));
        }
        let spec = SemiringSpec::Custom(semiring);
        self.custom.insert(name, spec.clone());
        Ok(spec)
    }

    pub fn get(&self, id: &str) -> Result<SemiringSpec<T>> {
        match self.custom.get(id) {
            Some(spec) => Ok(spec.clone()),
            None => id.parse(),
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.custom.keys().map(String::as_str)
    }
}

/// `h ln(exp(u/h) + exp(v/h))` evaluated as
/// `max(u, v) + h ln(1 + exp(-|u - v| / h))`.
#[inline]
fn log_sum_exp2<T: Scalar>(u: ExtReal<T>, v: ExtReal<T>, h: DeformationParam<T>) -> ExtReal<T> {
    let (hi, lo) = if u >= v { (u, v) } else { (v, u) };
    if lo.0 == T::neg_infinity() {
        return hi;
    }
    let h = h.get();
    ExtReal::normalised(hi.0 + h * (-(hi.0 - lo.0) / h).exp().ln_1p())
}

pub fn add<T: Scalar>(a: ExtReal<T>, b: ExtReal<T>, spec: &SemiringSpec<T>) -> Result<ExtReal<T>> {
    spec.add(a, b)
}

pub fn mul<T: Scalar>(a: ExtReal<T>, b: ExtReal<T>, spec: &SemiringSpec<T>) -> Result<ExtReal<T>> {
    spec.mul(a, b)
}

pub fn leq<T: Scalar>(a: ExtReal<T>, b: ExtReal<T>, spec: &SemiringSpec<T>) -> Result<bool> {
    spec.leq(a, b)
}

/// The Maslov-deformed addition `u ⊕_h v`.
///
/// Lies between `max(u, v)` and `max(u, v) + h ln 2`, with the upper bound
/// attained exactly when `u = v`.
pub fn deformed_add<T: Scalar>(u: ExtReal<T>, v: ExtReal<T>, h: DeformationParam<T>) -> Result<ExtReal<T>> {
    SemiringSpec::Deformed(h).add(u, v)
}

//! Sampled amoeba `Log_h(V)` of the complex line `V = {x + y + 1 = 0}`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semiring::DeformationParam;

/// Half-width of the sampled range of `log|t|`.
pub const LOG_RADIUS: f64 = 8.0;

const PAR_SAMPLES: usize = 1 << 12;

/// Image of the point `(t, -1 - t)` of `V` under `z ↦ h log|z|`, with
/// `t = re + i·im`. `t` must avoid `0` and `-1`.
pub fn amoeba_line_point<T: Scalar>(re: T, im: T, h: DeformationParam<T>) -> [T; 2] {
    let h = h.get();
    [h * re.hypot(im).ln(), h * (T::one() + re).hypot(im).ln()]
}

/// Samples `Log_h(V)` on a log-polar grid of `t`.
///
/// The grid has `R` radii (the smallest even number with `R² >= samples`)
/// with `log|t| = -L + 2L(j + 1/2)/R` for `L =` [`LOG_RADIUS`], and
/// `A = ⌈samples / R⌉` angles `2πk/A`, so it returns `R·A >= samples`
/// points ordered by `(j, k)`. An even radial count keeps `|t| = 1` off the
/// grid, so the punctures `t = 0` and `t = -1` are never hit.
pub fn amoeba_line_sample<T: Scalar>(h: DeformationParam<T>, samples: usize) -> Result<Vec<[T; 2]>> {
    if samples == 0 {
        return Err(Error::InvalidInput("samples must be positive".into()));
    }
    let mut radial = (samples as f64).sqrt().ceil() as usize;
    radial += radial % 2;
    let angular = samples.div_ceil(radial);
    let l = T::lit(LOG_RADIUS);
    let two = T::lit(2.0);
    let point = |idx: usize| {
        let (j, k) = (idx / angular, idx % angular);
        let rho = -l + two * l * (T::lit(j as f64) + T::lit(0.5)) / T::lit(radial as f64);
        let theta = two * T::PI() * T::lit(k as f64) / T::lit(angular as f64);
        let r = rho.exp();
        amoeba_line_point(r * theta.cos(), r * theta.sin(), h)
    };
    let total = radial * angular;
    Ok(if total >= PAR_SAMPLES {
        (0..total).into_par_iter().map(point).collect()
    } else {
        (0..total).map(point).collect()
    })
}

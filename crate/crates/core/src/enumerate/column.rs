//! Whole-column counting for a fixed diameter.
//!
//! With `A = d` and `(B, C, b, c)` fixed, `P(a) = 2d²a² − L` is increasing in
//! `a`, so the `a` values passing the fold test form one interval.  Each
//! interval is added to a difference array indexed by perimeter.

use rayon::prelude::*;

use crate::error::{Result, TetraError};
use crate::geometry::{satisfies_fold_condition, EdgeLabeling, FAST_PATH_MAX_DIAMETER};
use crate::symmetry::is_canonical;

use super::walk::b_range;

struct FoldLine {
    two_a2: i128,
    l: i128,
    h: i128,
}

impl FoldLine {
    #[inline]
    fn p(&self, a: i64) -> i128 {
        let a = a as i128;
        self.two_a2 * a * a - self.l
    }

    /// `P(a) > −√H`
    #[inline]
    fn above_lower(&self, a: i64) -> bool {
        let p = self.p(a);
        p >= 0 || p * p < self.h
    }

    /// `P(a) < √H`
    #[inline]
    fn below_upper(&self, a: i64) -> bool {
        let p = self.p(a);
        p <= 0 || p * p < self.h
    }

    fn estimate(&self, target: f64) -> i64 {
        let a2 = (self.l as f64 + target) / self.two_a2 as f64;
        if a2 <= 1.0 {
            1
        } else {
            a2.sqrt() as i64
        }
    }

    /// Interval of `a` in `[1, d]` passing the fold test, if non-empty.
    fn interval(&self, d: i64) -> Option<(i64, i64)> {
        let root = (self.h as f64).sqrt();
        let mut lo = self.estimate(-root).clamp(1, d + 1);
        while lo > 1 && self.above_lower(lo - 1) {
            lo -= 1;
        }
        while lo <= d && !self.above_lower(lo) {
            lo += 1;
        }
        let mut hi = self.estimate(root).clamp(0, d);
        while hi < d && self.below_upper(hi + 1) {
            hi += 1;
        }
        while hi >= 1 && !self.below_upper(hi) {
            hi -= 1;
        }
        (lo <= hi).then_some((lo, hi))
    }
}

/// Counts `ᵈt_n` for every `n` in `[3d+3, 6d]`; index `i` holds `n = 3d+3+i`.
pub(crate) fn column_counts_slice(d: u32, big_b: u32) -> Vec<u64> {
    let d_i = d as i64;
    let base = 3 * d_i + 3;
    let len = (3 * d_i - 2).max(0) as usize;
    let mut diff = vec![0i64; len + 1];
    let mut direct = vec![0u64; len];
    let a2 = (d_i as i128) * (d_i as i128);
    let big_b = big_b as i64;
    let b2 = (big_b as i128).pow(2);

    for big_c in (d_i + 1 - big_b).max(1)..=big_b {
        let c2_face = (big_c as i128).pow(2);
        let k1 = a2 + b2 - c2_face;
        let h1 = 4 * a2 * b2 - k1 * k1;
        for b in 1..=big_b {
            let b2_small = (b as i128).pow(2);
            for c in (d_i + 1 - b).max(1)..=big_b {
                let c2 = (c as i128).pow(2);
                let k2 = a2 + c2 - b2_small;
                let h2 = 4 * a2 * c2 - k2 * k2;
                let line = FoldLine {
                    two_a2: 2 * a2,
                    l: 2 * a2 * (b2 + c2) - k1 * k2,
                    h: h1 * h2,
                };
                let Some((lo, hi)) = line.interval(d_i) else {
                    continue;
                };
                let offset = d_i + big_b + big_c + b + c - base;
                let generic = big_b < d_i && big_b > b.max(big_c).max(c);
                if generic {
                    let top = hi.min(d_i - 1);
                    if lo <= top {
                        diff[(offset + lo) as usize] += 1;
                        diff[(offset + top + 1) as usize] -= 1;
                    }
                    if hi == d_i {
                        check_one(d_i, big_b, big_c, b, c, d_i, offset, &mut direct);
                    }
                } else {
                    for a in lo..=hi {
                        check_one(d_i, big_b, big_c, b, c, a, offset, &mut direct);
                    }
                }
            }
        }
    }

    let mut out = direct;
    let mut running = 0i64;
    for (i, slot) in out.iter_mut().enumerate() {
        running += diff[i];
        *slot += running as u64;
    }
    out
}

#[allow(clippy::too_many_arguments)]
#[inline]
fn check_one(d: i64, big_b: i64, big_c: i64, b: i64, c: i64, a: i64, offset: i64, direct: &mut [u64]) {
    let g = EdgeLabeling::from_array_unchecked([d, a, big_b, b, big_c, c].map(|v| v as u32));
    debug_assert!(satisfies_fold_condition(&g));
    if is_canonical(&g) {
        direct[(offset + a) as usize] += 1;
    }
}

/// The full column for diameter `d`, computed by intervals in parallel
/// over `B`.  Only valid on the 128-bit domain.
pub(crate) fn column_by_intervals(d: u32) -> Result<Vec<u64>> {
    if d == 0 || d > FAST_PATH_MAX_DIAMETER {
        return Err(TetraError::InvalidArgument(format!(
            "interval column needs 1 <= d <= {FAST_PATH_MAX_DIAMETER}, got {d}"
        )));
    }
    let len = (3 * d - 2) as usize;
    b_range(d)
        .into_par_iter()
        .map(|big_b| Ok(column_counts_slice(d, big_b)))
        .try_reduce(
            || vec![0u64; len],
            |mut acc, slice| {
                for (t, s) in acc.iter_mut().zip(slice) {
                    *t = t.checked_add(s).ok_or(TetraError::Overflow {
                        context: "diameter column",
                    })?;
                }
                Ok(acc)
            },
        )
}

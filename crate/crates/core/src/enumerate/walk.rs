//! Storage-free counting: visit every candidate with `A = d` inside the
//! pruned loop nest and keep the ones that equal their canonical form.

use crate::closed_forms::face_perimeter_bounds;
use crate::geometry::{satisfies_fold_condition, EdgeLabeling};
use crate::symmetry::is_canonical;

/// Range of the outermost `B` loop for diameter `d`.  A canonical tuple has
/// `B ≥ C` and `B + C > d`, so `B ≥ ⌈(d+1)/2⌉`.
pub(crate) fn b_range(d: u32) -> std::ops::RangeInclusive<u32> {
    (d + 2) / 2..=d
}

/// Visits, in a fixed order, every canonical valid labeling with perimeter
/// `n`, diameter `d` and second entry `B = big_b`.
pub(crate) fn walk_slice(n: u32, d: u32, big_b: u32, visit: &mut impl FnMut(EdgeLabeling)) {
    if d == 0 || n < 3 * d + 3 || n > 6 * d {
        return;
    }
    let m_max = face_perimeter_bounds(n as u64).m_max;
    let (n, d, big_b) = (n as i64, d as i64, big_b as i64);
    let c_lo = (d + 1 - big_b).max(1);
    let c_hi = big_b.min(m_max - d - big_b);
    for big_c in c_lo..=c_hi {
        let s1 = big_b + big_c;
        let s2_lo = (d + 1).max(n - 2 * d - s1);
        let s2_hi = (2 * d).min(m_max - d).min(n - d - 1 - s1);
        if s2_lo > s2_hi {
            continue;
        }
        for b in 1..=big_b {
            let lo = (s2_lo - b).max(d + 1 - b).max(1);
            let hi = big_b.min(s2_hi - b);
            for c in lo..=hi {
                let a = n - d - s1 - b - c;
                let g = EdgeLabeling::from_array_unchecked(
                    [d, a, big_b, b, big_c, c].map(|v| v as u32),
                );
                if satisfies_fold_condition(&g) && is_canonical(&g) {
                    visit(g);
                }
            }
        }
    }
}

pub(crate) fn count_slice(n: u32, d: u32, big_b: u32) -> u64 {
    let mut count = 0u64;
    walk_slice(n, d, big_b, &mut |_| count += 1);
    count
}

//! Representative-storing generation: build every folded pair of faces on
//! `A = d` and collect canonical forms in a set.

use std::collections::BTreeSet;

use crate::closed_forms::{diameter_bounds, face_perimeter_bounds};
use crate::error::{Result, TetraError};
use crate::geometry::{satisfies_fold_condition, EdgeLabeling};
use crate::symmetry::canonical_form;

/// Default ceiling on stored representatives (about 100 MB of labelings).
pub const DEFAULT_CAPACITY: usize = 4_000_000;

fn collect_diameter(
    n: u32,
    d: u32,
    capacity: usize,
    out: &mut BTreeSet<EdgeLabeling>,
) -> Result<()> {
    if d == 0 || n < 3 * d + 3 || n > 6 * d {
        return Ok(());
    }
    let m_max = face_perimeter_bounds(n as u64).m_max;
    let (n, d) = (n as i64, d as i64);
    // Face (d, B, C) has B + C = s1 with both at most d.
    for s1 in (d + 1)..=(2 * d).min(m_max - d) {
        let s2_lo = (d + 1).max(n - 2 * d - s1);
        let s2_hi = (2 * d).min(m_max - d).min(n - d - 1 - s1);
        for big_b in (s1 - d).max(1)..=d.min(s1 - 1) {
            let big_c = s1 - big_b;
            for s2 in s2_lo..=s2_hi {
                let a = n - d - s1 - s2;
                for b in (s2 - d).max(1)..=d.min(s2 - 1) {
                    let c = s2 - b;
                    let g = EdgeLabeling::from_array_unchecked(
                        [d, a, big_b, b, big_c, c].map(|v| v as u32),
                    );
                    if satisfies_fold_condition(&g) {
                        out.insert(canonical_form(&g));
                        if out.len() > capacity {
                            return Err(TetraError::CapacityExceeded { limit: capacity });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Canonical representatives of all tetrahedra with perimeter `n` (and
/// diameter `d` when given), stopping with an error once more than
/// `capacity` have been stored.
pub fn enumerate_representatives_with_capacity(
    n: u32,
    d: Option<u32>,
    capacity: usize,
) -> Result<BTreeSet<EdgeLabeling>> {
    let mut out = BTreeSet::new();
    match d {
        Some(d) => collect_diameter(n, d, capacity, &mut out)?,
        None => {
            for d in diameter_bounds(n as u64).iter() {
                collect_diameter(n, d, capacity, &mut out)?;
            }
        }
    }
    Ok(out)
}

pub fn enumerate_representatives(n: u32, d: Option<u32>) -> Result<BTreeSet<EdgeLabeling>> {
    enumerate_representatives_with_capacity(n, d, DEFAULT_CAPACITY)
}

//! Fixed-point counts by direct constrained loops.

use rayon::prelude::*;

use crate::closed_forms::{diameter_bounds, face_perimeter_bounds};
use crate::error::{Result, Tally};
use crate::geometry::{is_triangle, is_valid_tetrahedron, satisfies_fold_condition, EdgeLabeling};
use crate::symmetry::FixVector;

fn valid(e: [i64; 6]) -> bool {
    e.iter().all(|&v| v >= 1)
        && is_valid_tetrahedron(&EdgeLabeling::from_array_unchecked(e.map(|v| v as u32)))
}

/// Valid labelings of perimeter `n` with first entry `big_a`, counted
/// without any symmetry reduction.
fn labelings_with_a(n: i64, big_a: i64, e_max: i64, m_max: i64) -> u64 {
    let mut count = 0u64;
    for big_b in 1..=e_max {
        for big_c in 1..=e_max.min(m_max - big_a - big_b) {
            if !is_triangle(big_a as u32, big_b as u32, big_c as u32) {
                continue;
            }
            let rest = n - big_a - big_b - big_c;
            for b in 1..=e_max {
                // a = rest − b − c must lie in [1, e_max].
                let lo = (rest - b - e_max)
                    .max(1)
                    .max(big_a - b + 1)
                    .max(b - big_a + 1);
                let hi = e_max
                    .min(rest - b - 1)
                    .min(big_a + b - 1)
                    .min(m_max - big_a - b);
                for c in lo..=hi {
                    let a = rest - b - c;
                    let g = EdgeLabeling::from_array_unchecked(
                        [big_a, a, big_b, b, big_c, c].map(|v| v as u32),
                    );
                    if satisfies_fold_condition(&g) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Fixed-point counts at perimeter `n` for each class representative.
pub fn fix_counts(n: u32) -> Result<FixVector> {
    let mut fv = symmetric_fix_counts(n)?;
    let bounds = diameter_bounds(n as u64);
    if bounds.is_empty() {
        return Ok(fv);
    }
    let e_max = bounds.d_max;
    let m_max = face_perimeter_bounds(n as u64).m_max;
    let partials: Vec<u64> = (1..=e_max)
        .into_par_iter()
        .map(|big_a| labelings_with_a(n as i64, big_a, e_max, m_max))
        .collect();
    fv.fix_id = Tally::sum(partials, "identity fixed points")?;
    Ok(fv)
}

/// The four non-identity classes only; `fix_id` is left at zero.
pub fn symmetric_fix_counts(n: u32) -> Result<FixVector> {
    let bounds = diameter_bounds(n as u64);
    let mut fv = FixVector {
        n: n as u64,
        ..FixVector::default()
    };
    if bounds.is_empty() {
        return Ok(fv);
    }
    let n = n as i64;
    let e_max = bounds.d_max;

    // A=B=C=x, a=b=c=y
    if n % 3 == 0 {
        fv.fix_3cyc = (1..n / 3)
            .filter(|&x| {
                let y = n / 3 - x;
                valid([x, y, x, y, x, y])
            })
            .count() as u64;
    }

    // B=b, C=c
    let mut dbl = Tally::ZERO;
    let mut transp = Tally::ZERO;
    for big_a in 1..=e_max {
        for p in 1..=e_max {
            for q in 1..=e_max {
                let a = n - big_a - 2 * p - 2 * q;
                if a >= 1 && valid([big_a, a, p, p, q, q]) {
                    dbl = dbl.add(1, "double transposition fixed points")?;
                }
                // B=C=p, b=c=q
                if a >= 1 && valid([big_a, a, p, q, p, q]) {
                    transp = transp.add(1, "transposition fixed points")?;
                }
            }
        }
    }
    fv.fix_dbl = dbl.get();
    fv.fix_transp = transp.get();

    // A=a, B=C=b=c
    fv.fix_4cyc = (1..=e_max)
        .filter(|&big_a| {
            let rest = n - 2 * big_a;
            rest > 0 && rest % 4 == 0 && valid([big_a, big_a, rest / 4, rest / 4, rest / 4, rest / 4])
        })
        .count() as u64;
    Ok(fv)
}

//! Counting engines for `ᵈt_n`, `t_n` and `ᵈt`.
//!
//! The walk engine counts canonical tuples inside a pruned loop nest and
//! stores nothing.  The naive engine stores canonical representatives and is
//! the quicker choice for the sparse cells just above `n = 3d+3`.  Whole
//! diameter columns are counted by the interval method in [`column`].

mod column;
mod fix;
mod naive;
mod walk;

use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::closed_forms::diameter_bounds;
use crate::error::{Result, Tally, TetraError};
use crate::geometry::{EdgeLabeling, FAST_PATH_MAX_DIAMETER};

pub use fix::{fix_counts, symmetric_fix_counts};
pub use naive::{enumerate_representatives, enumerate_representatives_with_capacity, DEFAULT_CAPACITY};

/// One cell `ᵈt_n` of the joint table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountRecord {
    pub n: u32,
    pub d: u32,
    pub count: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Walk,
    Naive,
}

impl Engine {
    /// Naive for cells with `n ≤ 3d+10`, walk otherwise.
    pub fn auto(n: u32, d: u32) -> Engine {
        if (n as u64) <= 3 * d as u64 + 10 {
            Engine::Naive
        } else {
            Engine::Walk
        }
    }
}

fn in_bounds(n: u32, d: u32) -> bool {
    d >= 1 && diameter_bounds(n as u64).contains(d as u64)
}

/// `ᵈt_n` by the canonical walk on the calling thread.
pub fn count_joint(n: u32, d: u32) -> u64 {
    if !in_bounds(n, d) {
        return 0;
    }
    walk::b_range(d).map(|big_b| walk::count_slice(n, d, big_b)).sum()
}

/// `ᵈt_n` with the chosen engine; the walk runs in the current rayon pool.
pub fn count_joint_with(n: u32, d: u32, engine: Engine) -> Result<u64> {
    if !in_bounds(n, d) {
        return Ok(0);
    }
    match engine {
        Engine::Walk => {
            let parts: Vec<u64> = walk::b_range(d)
                .into_par_iter()
                .map(|big_b| walk::count_slice(n, d, big_b))
                .collect();
            Tally::sum(parts, "joint cell")
        }
        Engine::Naive => Ok(enumerate_representatives(n, Some(d))?.len() as u64),
    }
}

/// `ᵈt_n` split over `workers` threads by the outer `B` loop.
pub fn count_joint_parallel(n: u32, d: u32, workers: usize) -> Result<u64> {
    if workers == 0 {
        return Err(TetraError::InvalidArgument("workers must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| TetraError::InvalidArgument(format!("thread pool: {e}")))?;
    pool.install(|| count_joint_with(n, d, Engine::Walk))
}

/// Visits every canonical tetrahedron of perimeter `n` and diameter `d`.
pub fn for_each_canonical(n: u32, d: u32, mut visit: impl FnMut(EdgeLabeling)) {
    if !in_bounds(n, d) {
        return;
    }
    for big_b in walk::b_range(d) {
        walk::walk_slice(n, d, big_b, &mut visit);
    }
}

/// Every nonzero-range cell of row `n`, one record per admissible `d`.
pub fn perimeter_row(n: u32) -> Result<Vec<CountRecord>> {
    let ds: Vec<u32> = diameter_bounds(n as u64).iter().collect();
    let tasks: Vec<(u32, u32)> = ds
        .iter()
        .flat_map(|&d| walk::b_range(d).map(move |b| (d, b)))
        .collect();
    let parts: Vec<(u32, u64)> = tasks
        .into_par_iter()
        .map(|(d, b)| (d, walk::count_slice(n, d, b)))
        .collect();
    let mut by_d: BTreeMap<u32, Tally> = ds.iter().map(|&d| (d, Tally::ZERO)).collect();
    for (d, c) in parts {
        let slot = by_d.get_mut(&d).expect("diameter in range");
        *slot = slot.add(c, "perimeter row")?;
    }
    Ok(by_d
        .into_iter()
        .map(|(d, t)| CountRecord { n, d, count: t.get() })
        .collect())
}

/// `t_n`, the number of tetrahedra of perimeter `n`.
pub fn count_perimeter(n: u32) -> Result<u64> {
    Tally::sum(perimeter_row(n)?.into_iter().map(|r| r.count), "perimeter total")
}

/// Row `ᵈt_n` for `n` in `[3d+3, 6d]`.
pub fn diameter_column(d: u32) -> Result<Vec<CountRecord>> {
    if d == 0 {
        return Ok(Vec::new());
    }
    let base = 3 * d + 3;
    let counts = if d <= FAST_PATH_MAX_DIAMETER {
        column::column_by_intervals(d)?
    } else {
        (base..=6 * d)
            .map(|n| count_joint_with(n, d, Engine::Walk))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| CountRecord {
            n: base + i as u32,
            d,
            count,
        })
        .collect())
}

/// `ᵈt`, the number of tetrahedra of diameter `d`.
pub fn count_diameter(d: u32) -> Result<u64> {
    Tally::sum(diameter_column(d)?.into_iter().map(|r| r.count), "diameter total")
}

/// Canonical tetrahedra at `n = 3d+5` grouped by the entry `a` of the
/// canonical form.  The canonical form always has `A = d`, so this is the
/// edge opposite a diameter edge.
pub fn sporadic_breakdown(d: u32) -> BTreeMap<u32, u64> {
    let mut out = BTreeMap::new();
    let Some(n) = d.checked_mul(3).and_then(|v| v.checked_add(5)) else {
        return out;
    };
    for_each_canonical(n, d, |g| *out.entry(g.a()).or_insert(0) += 1);
    out
}

/// Dense grid of `ᵈt_n` over rectangular ranges of `n` and `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointTable {
    n_range: RangeInclusive<u32>,
    d_range: RangeInclusive<u32>,
    cells: Vec<u64>,
}

impl JointTable {
    pub fn new(n_range: RangeInclusive<u32>, d_range: RangeInclusive<u32>) -> Self {
        let len = n_range.clone().count() * d_range.clone().count();
        JointTable {
            n_range,
            d_range,
            cells: vec![0; len],
        }
    }

    pub fn n_range(&self) -> RangeInclusive<u32> {
        self.n_range.clone()
    }

    pub fn d_range(&self) -> RangeInclusive<u32> {
        self.d_range.clone()
    }

    fn index(&self, n: u32, d: u32) -> Option<usize> {
        if !self.n_range.contains(&n) || !self.d_range.contains(&d) {
            return None;
        }
        let width = self.d_range.clone().count();
        Some((n - self.n_range.start()) as usize * width + (d - self.d_range.start()) as usize)
    }

    pub fn get(&self, n: u32, d: u32) -> Option<u64> {
        self.index(n, d).map(|i| self.cells[i])
    }

    pub fn set(&mut self, n: u32, d: u32, count: u64) -> Result<()> {
        let i = self.index(n, d).ok_or_else(|| {
            TetraError::InvalidArgument(format!("cell (n={n}, d={d}) outside the table"))
        })?;
        self.cells[i] = count;
        Ok(())
    }

    pub fn row_sum(&self, n: u32) -> Result<u64> {
        Tally::sum(self.d_range().filter_map(|d| self.get(n, d)), "table row")
    }

    pub fn column_sum(&self, d: u32) -> Result<u64> {
        Tally::sum(self.n_range().filter_map(|n| self.get(n, d)), "table column")
    }

    /// Nonzero cells of row `n` as `(d, count)`.
    pub fn row(&self, n: u32) -> Vec<(u32, u64)> {
        self.d_range()
            .filter_map(|d| self.get(n, d).filter(|&c| c > 0).map(|c| (d, c)))
            .collect()
    }

    pub fn records(&self) -> impl Iterator<Item = CountRecord> + '_ {
        self.n_range().flat_map(move |n| {
            self.d_range().map(move |d| CountRecord {
                n,
                d,
                count: self.get(n, d).unwrap_or(0),
            })
        })
    }
}

/// Joint table over `n_range`, with the diameter axis spanning every
/// admissible `d` for those perimeters.
pub fn joint_table(n_range: RangeInclusive<u32>) -> Result<JointTable> {
    let d_hi = diameter_bounds(*n_range.end() as u64).d_max.max(1) as u32;
    let mut table = JointTable::new(n_range.clone(), 1..=d_hi);
    for n in n_range {
        for rec in perimeter_row(n)? {
            table.set(n, rec.d, rec.count)?;
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests;

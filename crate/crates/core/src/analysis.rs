//! Statistics derived from exact counts: `C = index⁵/count`,
//! `D = index⁴/μ`, `ρ = count/μ`, successive differences and ratios of `C`,
//! and the residual `s_n = t_n − n⁵/229024`.
//!
//! Everything here is `f64`.  Rounding to a fixed number of places happens
//! only in [`fixed`], which rounds half to even on the binary value.

use std::collections::BTreeMap;

use crate::closed_forms::{diameter_bounds, stable_a};
use crate::enumerate::{count_joint_with, diameter_column, perimeter_row, Engine};
use crate::error::{Result, TetraError};

pub const DEFAULT_S_DENOMINATOR: f64 = 229024.0;

/// Starting points for hinted peak searches.
pub const PERIMETER_PEAK_HINT: f64 = 0.238;
pub const DIAMETER_PEAK_HINT: f64 = 4.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Perimeter,
    Diameter,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Perimeter => "n",
            Axis::Diameter => "d",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeakMode {
    Exhaustive,
    Hinted,
}

/// One exact input row: the total for `index` and, when known, the largest
/// single cell `mu` and where it sits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatInput {
    pub index: u64,
    pub count: u64,
    pub mu: Option<u64>,
    pub argmax: Option<u64>,
    pub mode: Option<PeakMode>,
}

impl StatInput {
    pub fn total(index: u64, count: u64) -> Self {
        StatInput { index, count, mu: None, argmax: None, mode: None }
    }

    pub fn with_peak(index: u64, count: u64, peak: &PeakLocation) -> Self {
        StatInput {
            index,
            count,
            mu: Some(peak.peak_value),
            argmax: Some(peak.argmax),
            mode: Some(if peak.exhaustive { PeakMode::Exhaustive } else { PeakMode::Hinted }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StatRow {
    pub axis: Axis,
    pub index: u64,
    pub count: u64,
    pub mu: Option<u64>,
    pub argmax: Option<u64>,
    pub mode: Option<PeakMode>,
    pub C: Option<f64>,
    pub D: Option<f64>,
    pub rho: Option<f64>,
    pub rho_over_index: Option<f64>,
    /// `C` minus `C` of the previous input row.
    pub diff: Option<f64>,
    /// `diff` over the previous row's `diff`.
    pub ratio: Option<f64>,
    /// Only on the perimeter axis.
    pub s: Option<f64>,
    /// Set when the count is zero and the quotients are undefined.
    pub undefined: bool,
}

/// Decimal places used when printing a [`StatRow`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Places {
    pub C: usize,
    pub D: usize,
    pub rho: usize,
    pub rho_over_index: usize,
    pub diff: usize,
    pub ratio: usize,
    pub s: usize,
}

pub const PERIMETER_PLACES: Places =
    Places { C: 3, D: 5, rho: 6, rho_over_index: 9, diff: 3, ratio: 3, s: 3 };
pub const DIAMETER_PLACES: Places =
    Places { C: 8, D: 8, rho: 6, rho_over_index: 9, diff: 8, ratio: 3, s: 3 };

impl Axis {
    pub fn places(self) -> Places {
        match self {
            Axis::Perimeter => PERIMETER_PLACES,
            Axis::Diameter => DIAMETER_PLACES,
        }
    }
}

/// `x` with `places` decimals, half to even.
pub fn fixed(x: f64, places: usize) -> String {
    format!("{x:.places$}")
}

fn pow(x: u64, e: i32) -> f64 {
    (x as f64).powi(e)
}

fn build(axis: Axis, rows: &[StatInput], s_denominator: Option<f64>) -> Result<Vec<StatRow>> {
    let mut out: Vec<StatRow> = Vec::with_capacity(rows.len());
    for input in rows {
        if let Some(mu) = input.mu {
            if mu > input.count {
                return Err(TetraError::Integrity(format!(
                    "{}={}: peak {mu} exceeds total {}",
                    axis.name(),
                    input.index,
                    input.count
                )));
            }
        }
        let undefined = input.count == 0;
        let C = (!undefined).then(|| pow(input.index, 5) / input.count as f64);
        let mu = input.mu.filter(|&m| m > 0);
        let D = mu.map(|m| pow(input.index, 4) / m as f64);
        let rho = mu.filter(|_| !undefined).map(|m| input.count as f64 / m as f64);
        let rho_over_index = rho.filter(|_| input.index > 0).map(|r| r / input.index as f64);
        let prev = out.last();
        let diff = match (prev.and_then(|p| p.C), C) {
            (Some(a), Some(b)) => Some(b - a),
            _ => None,
        };
        let ratio = match (prev.and_then(|p| p.diff), diff) {
            (Some(a), Some(b)) if a != 0.0 => Some(b / a),
            _ => None,
        };
        let s = s_denominator.map(|den| input.count as f64 - pow(input.index, 5) / den);
        out.push(StatRow {
            axis,
            index: input.index,
            count: input.count,
            mu: input.mu,
            argmax: input.argmax,
            mode: input.mode,
            C,
            D,
            rho,
            rho_over_index,
            diff,
            ratio,
            s,
            undefined,
        });
    }
    Ok(out)
}

/// Rows are taken in the given order; `diff` and `ratio` refer to the
/// previous row, so pass an evenly spaced sequence for `d_n` and `r_n`.
pub fn stats_perimeter(rows: &[StatInput], s_denominator: f64) -> Result<Vec<StatRow>> {
    if !(s_denominator.is_finite() && s_denominator > 0.0) {
        return Err(TetraError::InvalidArgument(format!("s denominator {s_denominator}")));
    }
    build(Axis::Perimeter, rows, Some(s_denominator))
}

pub fn stats_diameter(rows: &[StatInput]) -> Result<Vec<StatRow>> {
    build(Axis::Diameter, rows, None)
}

pub const STAT_HEADER: [&str; 14] = [
    "axis", "index", "count", "mu", "argmax", "peak_mode", "C", "D", "rho", "rho_over_index",
    "diff", "ratio", "s", "undefined",
];

impl StatRow {
    /// Printed fields in [`STAT_HEADER`] order; missing values are blank.
    pub fn fields(&self, places: &Places) -> Vec<String> {
        let num = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        let real = |v: Option<f64>, p: usize| v.map(|x| fixed(x, p)).unwrap_or_default();
        vec![
            self.axis.name().to_string(),
            self.index.to_string(),
            self.count.to_string(),
            num(self.mu),
            num(self.argmax),
            match self.mode {
                Some(PeakMode::Exhaustive) => "exhaustive".into(),
                Some(PeakMode::Hinted) => "hinted".into(),
                None => String::new(),
            },
            real(self.C, places.C),
            real(self.D, places.D),
            real(self.rho, places.rho),
            real(self.rho_over_index, places.rho_over_index),
            real(self.diff, places.diff),
            real(self.ratio, places.ratio),
            real(self.s, places.s),
            u8::from(self.undefined).to_string(),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeakLocation {
    pub index: u64,
    pub argmax: u64,
    pub peak_value: u64,
    pub exhaustive: bool,
    /// Another position has the same value; `argmax` is the smallest.
    pub tie: bool,
}

/// Maximum over `(position, value)` cells, smallest position on ties.
pub fn peak_from_cells(index: u64, cells: impl IntoIterator<Item = (u64, u64)>) -> PeakLocation {
    let mut best = PeakLocation { index, argmax: 0, peak_value: 0, exhaustive: true, tie: false };
    for (at, v) in cells {
        if v > best.peak_value || best.argmax == 0 {
            best.argmax = at;
            best.peak_value = v;
            best.tie = false;
        } else if v == best.peak_value {
            best.tie = true;
        }
    }
    best
}

/// Hill climb over `lo..=hi` from `start`.  A run of equal values is walked
/// to its ends before deciding, so the result is a plateau whose outer
/// neighbours are strictly smaller (or out of range).
fn climb(lo: u64, hi: u64, start: u64, mut f: impl FnMut(u64) -> Result<u64>) -> Result<(u64, u64, bool)> {
    let mut memo = BTreeMap::new();
    let mut value = |x: u64| -> Result<u64> {
        if let Some(&v) = memo.get(&x) {
            return Ok(v);
        }
        let v = f(x)?;
        memo.insert(x, v);
        Ok(v)
    };
    let mut p = start.clamp(lo, hi);
    loop {
        let v = value(p)?;
        let mut l = p;
        while l > lo && value(l - 1)? == v {
            l -= 1;
        }
        let mut r = p;
        while r < hi && value(r + 1)? == v {
            r += 1;
        }
        if l > lo && value(l - 1)? > v {
            p = l - 1;
        } else if r < hi && value(r + 1)? > v {
            p = r + 1;
        } else {
            return Ok((l, v, r > l));
        }
    }
}

/// Largest cell `ᵈt_n` of row `n`.
pub fn find_peak(n: u32, mode: PeakMode) -> Result<PeakLocation> {
    if n < 6 {
        return Err(TetraError::InvalidArgument(format!("perimeter {n} is below 6")));
    }
    let bounds = diameter_bounds(n as u64);
    if bounds.is_empty() {
        let exhaustive = mode == PeakMode::Exhaustive;
        return Ok(PeakLocation { index: n as u64, argmax: 0, peak_value: 0, exhaustive, tie: false });
    }
    match mode {
        PeakMode::Exhaustive => {
            let row = perimeter_row(n)?;
            Ok(peak_from_cells(n as u64, row.iter().map(|r| (r.d as u64, r.count))))
        }
        PeakMode::Hinted => {
            let start = (PERIMETER_PEAK_HINT * n as f64).round() as u64;
            let (argmax, peak_value, tie) =
                climb(bounds.d_min as u64, bounds.d_max as u64, start, |d| {
                    count_joint_with(n, d as u32, Engine::auto(n, d as u32))
                })?;
            Ok(PeakLocation { index: n as u64, argmax, peak_value, exhaustive: false, tie })
        }
    }
}

/// Largest cell `ᵈt_n` of column `d`, over `3d+3 ≤ n ≤ 6d`.
pub fn find_peak_diameter(d: u32, mode: PeakMode) -> Result<PeakLocation> {
    if d == 0 {
        return Err(TetraError::InvalidArgument("diameter must be positive".into()));
    }
    match mode {
        PeakMode::Exhaustive => {
            let column = diameter_column(d)?;
            Ok(peak_from_cells(d as u64, column.iter().map(|r| (r.n as u64, r.count))))
        }
        PeakMode::Hinted => {
            let (lo, hi) = (3 * d as u64 + 3, 6 * d as u64);
            let start = (DIAMETER_PEAK_HINT * d as f64).round() as u64;
            let (argmax, peak_value, tie) = climb(lo, hi, start, |n| {
                count_joint_with(n as u32, d, Engine::auto(n as u32, d))
            })?;
            Ok(PeakLocation { index: d as u64, argmax, peak_value, exhaustive: false, tie })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StableCheck {
    pub k: u64,
    pub enumerated: u64,
    pub predicted: u64,
    pub matches: bool,
}

/// Compares `ᵈt_{6d−k}` with `a_k` for `k ≤ k_max < d`.
pub fn stable_column_check(d: u32, k_max: u32) -> Result<Vec<StableCheck>> {
    if k_max >= d {
        return Err(TetraError::InvalidArgument(format!("k_max {k_max} must be below d {d}")));
    }
    (0..=k_max)
        .map(|k| {
            let n = 6 * d - k;
            let enumerated = count_joint_with(n, d, Engine::Walk)?;
            let predicted = stable_a(k as u64)?;
            Ok(StableCheck { k: k as u64, enumerated, predicted, matches: enumerated == predicted })
        })
        .collect()
}

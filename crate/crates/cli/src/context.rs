//! Counting with the result cache in front.  Every fresh result is recorded
//! and flushed before the next one is computed, so an interrupted run
//! resumes from what it already has.

use tetra_core::analysis::{find_peak, find_peak_diameter, peak_from_cells, PeakLocation, PeakMode};
use tetra_core::closed_forms::diameter_bounds;
use tetra_core::enumerate::{count_joint_with, diameter_column, fix_counts, perimeter_row, Engine};
use tetra_core::symmetry::{ConjugacyClass, FixVector};

use crate::cache::ResultCache;
use crate::error::CliResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EngineArg {
    Auto,
    Walk,
    Naive,
}

impl EngineArg {
    pub fn resolve(self, n: u32, d: u32) -> Engine {
        match self {
            EngineArg::Auto => Engine::auto(n, d),
            EngineArg::Walk => Engine::Walk,
            EngineArg::Naive => Engine::Naive,
        }
    }
}

pub struct Context {
    cache: Option<ResultCache>,
}

fn column_range(d: u32) -> std::ops::RangeInclusive<u32> {
    if d == 0 {
        1..=0
    } else {
        3 * d + 3..=6 * d
    }
}

impl Context {
    pub fn new(cache: Option<ResultCache>) -> Self {
        Context { cache }
    }

    fn cached(&self, kind: &str, n: Option<u32>, d: Option<u32>) -> Option<u64> {
        let c = self.cache.as_ref()?;
        c.get(kind, n.map(u64::from), d.map(u64::from)).map(|e| e.value)
    }

    fn record(&mut self, kind: &str, n: Option<u32>, d: Option<u32>, value: u64) -> CliResult<()> {
        if let Some(c) = self.cache.as_mut() {
            c.record(kind, n.map(u64::from), d.map(u64::from), value)?;
        }
        Ok(())
    }

    fn flush(&mut self) -> CliResult<()> {
        match self.cache.as_mut() {
            Some(c) => c.flush(),
            None => Ok(()),
        }
    }

    /// All cells `(d, ᵈt_n)` of row `n` inside the diameter bounds.
    pub fn row(&mut self, n: u32) -> CliResult<Vec<(u32, u64)>> {
        let ds: Vec<u32> = diameter_bounds(n as u64).iter().collect();
        let hit: Option<Vec<_>> = ds.iter().map(|&d| self.cached("t_nd", Some(n), Some(d)).map(|v| (d, v))).collect();
        if let Some(cells) = hit {
            return Ok(cells);
        }
        let cells: Vec<(u32, u64)> = perimeter_row(n)?.into_iter().map(|r| (r.d, r.count)).collect();
        for &(d, v) in &cells {
            self.record("t_nd", Some(n), Some(d), v)?;
        }
        self.record("t_n", Some(n), None, cells.iter().map(|c| c.1).sum())?;
        let peak = peak_from_cells(n as u64, cells.iter().map(|&(d, v)| (d as u64, v)));
        if peak.peak_value > 0 {
            self.record("mu_n", Some(n), Some(peak.argmax as u32), peak.peak_value)?;
        }
        self.flush()?;
        Ok(cells)
    }

    /// All cells `(n, ᵈt_n)` of column `d`.
    pub fn column(&mut self, d: u32) -> CliResult<Vec<(u32, u64)>> {
        let ns: Vec<u32> = column_range(d).collect();
        let hit: Option<Vec<_>> = ns.iter().map(|&n| self.cached("t_nd", Some(n), Some(d)).map(|v| (n, v))).collect();
        if let Some(cells) = hit {
            return Ok(cells);
        }
        let cells: Vec<(u32, u64)> = diameter_column(d)?.into_iter().map(|r| (r.n, r.count)).collect();
        for &(n, v) in &cells {
            self.record("t_nd", Some(n), Some(d), v)?;
        }
        self.record("t_d", None, Some(d), cells.iter().map(|c| c.1).sum())?;
        let peak = peak_from_cells(d as u64, cells.iter().map(|&(n, v)| (n as u64, v)));
        if peak.peak_value > 0 {
            self.record("mu_d", Some(peak.argmax as u32), Some(d), peak.peak_value)?;
        }
        self.flush()?;
        Ok(cells)
    }

    pub fn t_n(&mut self, n: u32) -> CliResult<u64> {
        match self.cached("t_n", Some(n), None) {
            Some(v) => Ok(v),
            None => Ok(self.row(n)?.iter().map(|c| c.1).sum()),
        }
    }

    pub fn t_d(&mut self, d: u32) -> CliResult<u64> {
        match self.cached("t_d", None, Some(d)) {
            Some(v) => Ok(v),
            None => Ok(self.column(d)?.iter().map(|c| c.1).sum()),
        }
    }

    pub fn cell(&mut self, n: u32, d: u32, engine: EngineArg) -> CliResult<u64> {
        if let Some(v) = self.cached("t_nd", Some(n), Some(d)) {
            return Ok(v);
        }
        let v = count_joint_with(n, d, engine.resolve(n, d))?;
        if diameter_bounds(n as u64).contains(d as u64) {
            self.record("t_nd", Some(n), Some(d), v)?;
            self.flush()?;
        }
        Ok(v)
    }

    pub fn peak_n(&mut self, n: u32, mode: PeakMode) -> CliResult<PeakLocation> {
        match mode {
            PeakMode::Exhaustive => {
                let cells = self.row(n)?;
                Ok(peak_from_cells(n as u64, cells.iter().map(|&(d, v)| (d as u64, v))))
            }
            PeakMode::Hinted => Ok(find_peak(n, mode)?),
        }
    }

    pub fn peak_d(&mut self, d: u32, mode: PeakMode) -> CliResult<PeakLocation> {
        match mode {
            PeakMode::Exhaustive => {
                let cells = self.column(d)?;
                Ok(peak_from_cells(d as u64, cells.iter().map(|&(n, v)| (n as u64, v))))
            }
            PeakMode::Hinted => Ok(find_peak_diameter(d, mode)?),
        }
    }

    pub fn fix(&mut self, n: u32) -> CliResult<FixVector> {
        let hit: Option<Vec<u64>> = ConjugacyClass::ALL
            .iter()
            .map(|c| self.cached("fix", Some(n), Some(c.ordinal())))
            .collect();
        if let Some(v) = hit {
            return Ok(FixVector {
                n: n as u64,
                fix_id: v[0],
                fix_3cyc: v[1],
                fix_dbl: v[2],
                fix_transp: v[3],
                fix_4cyc: v[4],
            });
        }
        let fv = fix_counts(n)?;
        for c in ConjugacyClass::ALL {
            self.record("fix", Some(n), Some(c.ordinal()), fv.get(c))?;
        }
        self.flush()?;
        Ok(fv)
    }
}

//! Published reference values, embedded from the CSV files in `fixtures/`.
//!
//! Count files share the header `kind,n,d,value,source`; blank `n` or `d`
//! means the field does not apply.  `stats.csv` holds printed decimals as
//! `kind,index,value,source` and keeps them as strings so comparisons happen
//! at the printed precision.

use crate::error::{Result, TetraError};

pub const PERIMETER_CSV: &str = include_str!("../fixtures/perimeter.csv");
pub const JOINT_CSV: &str = include_str!("../fixtures/joint.csv");
pub const FIX_CSV: &str = include_str!("../fixtures/fix.csv");
pub const EXTREMES_CSV: &str = include_str!("../fixtures/extremes.csv");
pub const SEQUENCES_CSV: &str = include_str!("../fixtures/sequences.csv");
pub const STATS_CSV: &str = include_str!("../fixtures/stats.csv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountFixture {
    pub kind: String,
    pub n: Option<u64>,
    pub d: Option<u64>,
    pub value: u64,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatFixture {
    pub kind: String,
    pub index: u64,
    pub printed: String,
    pub source: String,
}

fn bad(what: &str, detail: impl std::fmt::Display) -> TetraError {
    TetraError::Integrity(format!("fixture {what}: {detail}"))
}

fn optional(field: &str, what: &str) -> Result<Option<u64>> {
    if field.is_empty() {
        Ok(None)
    } else {
        field.parse().map(Some).map_err(|e| bad(what, e))
    }
}

pub fn parse_counts(text: &str, what: &str) -> Result<Vec<CountFixture>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for record in reader.records() {
        let r = record.map_err(|e| bad(what, e))?;
        if r.len() != 5 {
            return Err(bad(what, format!("expected 5 fields, got {}", r.len())));
        }
        out.push(CountFixture {
            kind: r[0].to_string(),
            n: optional(&r[1], what)?,
            d: optional(&r[2], what)?,
            value: r[3].parse().map_err(|e| bad(what, e))?,
            source: r[4].to_string(),
        });
    }
    Ok(out)
}

pub fn parse_stats(text: &str) -> Result<Vec<StatFixture>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for record in reader.records() {
        let r = record.map_err(|e| bad("stats", e))?;
        out.push(StatFixture {
            kind: r[0].to_string(),
            index: r[1].parse().map_err(|e| bad("stats", e))?,
            printed: r[2].to_string(),
            source: r[3].to_string(),
        });
    }
    Ok(out)
}

fn load(text: &str, what: &str) -> Vec<CountFixture> {
    parse_counts(text, what).expect("embedded fixture parses")
}

/// `t_n` rows (`n` set, `d` blank).
pub fn perimeter() -> Vec<CountFixture> {
    load(PERIMETER_CSV, "perimeter")
}

/// `t_nd` grid rows for `6 ≤ n ≤ 50`, zeros included.
pub fn joint() -> Vec<CountFixture> {
    load(JOINT_CSV, "joint")
}

/// `fix` rows use `d` for the class ordinal 1..=5; `t_n` and `t_n_rot` rows
/// carry the totals.
pub fn fix() -> Vec<CountFixture> {
    load(FIX_CSV, "fix")
}

/// Row and column maxima: `mu_n` has `d = d*`, `mu_d` has `n = n*`.
pub fn extremes() -> Vec<CountFixture> {
    load(EXTREMES_CSV, "extremes")
}

/// Stable column values `a_k` (k in the `n` column) and sparse-row cells.
pub fn sequences() -> Vec<CountFixture> {
    load(SEQUENCES_CSV, "sequences")
}

pub fn stats() -> Vec<StatFixture> {
    parse_stats(STATS_CSV).expect("embedded fixture parses")
}

/// Looks up a single count fixture.
pub fn find(rows: &[CountFixture], kind: &str, n: Option<u64>, d: Option<u64>) -> Option<u64> {
    rows.iter()
        .find(|r| r.kind == kind && r.n == n && r.d == d)
        .map(|r| r.value)
}

//! Append-only result store.
//!
//! The file is CSV with header `kind,n,d,value`, a `schema_version,,,1` row,
//! then one row per result.  Recording a value that disagrees with an
//! existing entry is refused.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use tetra_core::closed_forms::diameter_bounds;

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u64 = 1;
pub const HEADER: &str = "kind,n,d,value";
pub const KINDS: [&str; 6] = ["t_n", "t_d", "t_nd", "fix", "mu_n", "mu_d"];

/// Uniqueness key.  Peaks are unique per row or column whatever their
/// argmax, so their key drops the other coordinate.
type Key = (String, Option<u64>, Option<u64>);

fn key(kind: &str, n: Option<u64>, d: Option<u64>) -> Key {
    match kind {
        "mu_n" => (kind.to_string(), n, None),
        "mu_d" => (kind.to_string(), None, d),
        _ => (kind.to_string(), n, d),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Entry {
    pub n: Option<u64>,
    pub d: Option<u64>,
    pub value: u64,
}

#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    records: BTreeMap<Key, Entry>,
    pending: Vec<(String, Entry)>,
}

fn field(s: &str) -> Option<String> {
    (!s.is_empty()).then(|| s.to_string())
}

pub fn format_row(kind: &str, e: &Entry) -> String {
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    format!("{kind},{},{},{}", opt(e.n), opt(e.d), e.value)
}

impl ResultCache {
    /// Opens `path`; a missing file is an empty cache.
    pub fn open(path: &Path) -> CliResult<Self> {
        let mut cache = ResultCache { path: path.to_path_buf(), records: BTreeMap::new(), pending: Vec::new() };
        if !path.exists() {
            return Ok(cache);
        }
        let bad = |msg: String| CliError::Integrity(format!("cache {}: {msg}", path.display()));
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_path(path)
            .map_err(|e| bad(e.to_string()))?;
        let header = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
        if header.iter().collect::<Vec<_>>().join(",") != HEADER {
            return Err(bad(format!("unexpected header {header:?}")));
        }
        let mut version = None;
        for (i, record) in reader.records().enumerate() {
            let r = record.map_err(|e| bad(e.to_string()))?;
            if r.len() != 4 {
                return Err(bad(format!("row {}: expected 4 fields", i + 2)));
            }
            let num = |s: &str| -> CliResult<Option<u64>> {
                field(s).map(|v| v.parse::<u64>()).transpose().map_err(|e| bad(format!("row {}: {e}", i + 2)))
            };
            if &r[0] == "schema_version" {
                version = num(&r[3])?;
                if version != Some(SCHEMA_VERSION) {
                    return Err(bad(format!("schema version {:?}, expected {SCHEMA_VERSION}", &r[3])));
                }
                continue;
            }
            if version.is_none() {
                return Err(bad("missing schema_version row".into()));
            }
            if !KINDS.contains(&&r[0]) {
                return Err(bad(format!("row {}: unknown kind {}", i + 2, &r[0])));
            }
            let entry = Entry { n: num(&r[1])?, d: num(&r[2])?, value: num(&r[3])?.ok_or_else(|| bad("blank value".into()))? };
            cache.insert(&r[0], entry)?;
        }
        cache.check_consistency().map_err(bad)?;
        Ok(cache)
    }

    /// Totals must equal the sum of their cells whenever every cell of the
    /// row or column is stored, and no peak may exceed its total.
    fn check_consistency(&self) -> Result<(), String> {
        let mut rows: BTreeMap<u64, (u64, usize)> = BTreeMap::new();
        let mut columns: BTreeMap<u64, (u64, usize)> = BTreeMap::new();
        for ((kind, n, d), e) in &self.records {
            if kind == "t_nd" {
                if let (Some(n), Some(d)) = (n, d) {
                    let r = rows.entry(*n).or_default();
                    r.0 += e.value;
                    r.1 += 1;
                    let c = columns.entry(*d).or_default();
                    c.0 += e.value;
                    c.1 += 1;
                }
            }
        }
        for ((kind, n, d), e) in &self.records {
            let (sums, index, width) = match (kind.as_str(), n, d) {
                ("t_n", Some(n), _) => (&rows, *n, diameter_bounds(*n).iter().count()),
                ("t_d", _, Some(d)) => (&columns, *d, (3 * d + 3..=6 * d).count()),
                ("mu_n", Some(n), _) | ("mu_d", _, Some(n)) => {
                    let total = if kind == "mu_n" { ("t_n", Some(*n), None) } else { ("t_d", None, Some(*n)) };
                    if let Some(t) = self.get(total.0, total.1, total.2) {
                        if e.value > t.value {
                            return Err(format!("{kind} {} exceeds its total {}", e.value, t.value));
                        }
                    }
                    continue;
                }
                _ => continue,
            };
            if let Some(&(sum, cells)) = sums.get(&index) {
                if cells == width && sum != e.value {
                    return Err(format!("{kind} for {index} is {} but its cells sum to {sum}", e.value));
                }
            }
        }
        Ok(())
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.records.len()
    }

    fn insert(&mut self, kind: &str, entry: Entry) -> CliResult<bool> {
        match self.records.get(&key(kind, entry.n, entry.d)) {
            Some(old) if *old == entry => Ok(false),
            Some(old) => Err(CliError::Integrity(format!(
                "cache conflict for {kind}: stored {} but computed {}",
                format_row(kind, old),
                format_row(kind, &entry)
            ))),
            None => {
                self.records.insert(key(kind, entry.n, entry.d), entry);
                Ok(true)
            }
        }
    }

    pub fn get(&self, kind: &str, n: Option<u64>, d: Option<u64>) -> Option<Entry> {
        self.records.get(&key(kind, n, d)).copied()
    }

    /// Queues `entry` for the next [`flush`](Self::flush).
    pub fn record(&mut self, kind: &str, n: Option<u64>, d: Option<u64>, value: u64) -> CliResult<()> {
        let entry = Entry { n, d, value };
        if self.insert(kind, entry)? {
            self.pending.push((kind.to_string(), entry));
        }
        Ok(())
    }

    pub fn flush(&mut self) -> CliResult<()> {
        if self.pending.is_empty() {
            return Ok(());
        }
        let fresh = !self.path.exists();
        let mut file: File = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(CliError::io(format!("opening cache {}", self.path.display())))?;
        let mut text = String::new();
        if fresh {
            text.push_str(HEADER);
            text.push('\n');
            text.push_str(&format!("schema_version,,,{SCHEMA_VERSION}\n"));
        }
        for (kind, e) in self.pending.drain(..) {
            text.push_str(&format_row(&kind, &e));
            text.push('\n');
        }
        file.write_all(text.as_bytes())
            .map_err(CliError::io(format!("writing cache {}", self.path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_conflicts() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let mut c = ResultCache::open(&path).unwrap();
        c.record("t_n", Some(30), None, 117).unwrap();
        c.record("mu_n", Some(30), Some(8), 40).unwrap();
        c.record("t_n", Some(30), None, 117).unwrap();
        c.flush().unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "kind,n,d,value\nschema_version,,,1\nt_n,30,,117\nmu_n,30,8,40\n");

        let mut c = ResultCache::open(&path).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c.get("t_n", Some(30), None).unwrap().value, 117);
        assert_eq!(c.get("mu_n", Some(30), None).unwrap().d, Some(8));
        assert!(matches!(c.record("t_n", Some(30), None, 118), Err(CliError::Integrity(_))));
        assert!(matches!(c.record("mu_n", Some(30), Some(9), 40), Err(CliError::Integrity(_))));
    }

    #[test]
    fn tampered_files_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        for text in [
            "kind,n,d,value\nt_n,30,,117\n",
            "kind,n,d,value\nschema_version,,,2\n",
            "kind,n,d,value\nschema_version,,,1\nt_n,30,,117\nt_n,30,,118\n",
            "kind,n,d,value\nschema_version,,,1\nt_x,30,,117\n",
            "n,kind,d,value\n",
            "kind,n,d,value\nschema_version,,,1\nt_nd,12,2,1\nt_nd,12,3,2\nt_n,12,,4\n",
            "kind,n,d,value\nschema_version,,,1\nt_n,12,,3\nmu_n,12,3,4\n",
        ] {
            std::fs::write(&path, text).unwrap();
            assert!(matches!(ResultCache::open(&path), Err(CliError::Integrity(_))), "{text}");
        }
    }
}

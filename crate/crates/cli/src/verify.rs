//! Recomputes the embedded fixtures and diffs them exactly.  The cache is
//! not consulted.

use tetra_core::analysis::{find_peak, find_peak_diameter, PeakMode};
use tetra_core::closed_forms::stable_a;
use tetra_core::enumerate::{count_diameter, count_joint_with, count_perimeter, fix_counts, joint_table, Engine};
use tetra_core::fixtures::{self, CountFixture};
use tetra_core::symmetry::{burnside_full, burnside_rotations, ConjugacyClass};
use tetra_core::TetraError;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Core,
    Extended,
}

type Compute = Box<dyn FnOnce() -> Result<String, TetraError>>;
type Check = (String, String, Compute);

fn count(f: impl FnOnce() -> Result<u64, TetraError> + 'static) -> Compute {
    Box::new(move || f().map(|v| v.to_string()))
}

struct Report {
    failed: usize,
}

impl Report {
    fn group(&mut self, name: &str, checks: Vec<Check>) {
        let total = checks.len();
        let mut passed = 0;
        for (label, expected, compute) in checks {
            match compute() {
                Ok(v) if v == expected => passed += 1,
                Ok(v) => println!("  mismatch {label}: computed {v}, expected {expected}"),
                Err(e) => println!("  error {label}: {e}"),
            }
        }
        self.failed += total - passed;
        let status = if passed == total { "pass" } else { "FAIL" };
        println!("{name}: {passed}/{total} {status}");
    }
}

fn rows<'a>(all: &'a [CountFixture], kind: &'a str) -> impl Iterator<Item = &'a CountFixture> {
    all.iter().filter(move |r| r.kind == kind)
}

fn perimeter_checks(max: u64, min: u64) -> Vec<Check> {
    rows(&fixtures::perimeter(), "t_n")
        .filter(|r| (min..=max).contains(&r.n.unwrap()))
        .map(|r| {
            let n = r.n.unwrap() as u32;
            (format!("t_{n}"), r.value.to_string(), count(move || count_perimeter(n)))
        })
        .collect()
}

fn joint_checks() -> Vec<Check> {
    let table = match joint_table(6..=50) {
        Ok(t) => std::rc::Rc::new(t),
        Err(e) => return vec![("joint table".into(), String::new(), Box::new(move || Err(e)))],
    };
    fixtures::joint()
        .into_iter()
        .map(|r| {
            let (n, d) = (r.n.unwrap() as u32, r.d.unwrap() as u32);
            let t = table.clone();
            (format!("t_({n},{d})"), r.value.to_string(), count(move || Ok(t.get(n, d).unwrap_or(0))))
        })
        .collect()
}

fn fix_checks() -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    let all = fixtures::fix();
    for n in 1..=100u32 {
        let fv = std::rc::Rc::new(fix_counts(n));
        let pick = |f: fn(&tetra_core::symmetry::FixVector) -> Result<u64, TetraError>| {
            let fv = fv.clone();
            count(move || fv.as_ref().clone().and_then(|v| f(&v)))
        };
        for c in ConjugacyClass::ALL {
            let want = fixtures::find(&all, "fix", Some(n as u64), Some(c.ordinal() as u64));
            let get: fn(&tetra_core::symmetry::FixVector) -> Result<u64, TetraError> = match c {
                ConjugacyClass::Identity => |v| Ok(v.fix_id),
                ConjugacyClass::ThreeCycle => |v| Ok(v.fix_3cyc),
                ConjugacyClass::DoubleTransposition => |v| Ok(v.fix_dbl),
                ConjugacyClass::Transposition => |v| Ok(v.fix_transp),
                ConjugacyClass::FourCycle => |v| Ok(v.fix_4cyc),
            };
            out.push((format!("fix({c}) n={n}"), want.map(|v| v.to_string()).unwrap_or_default(), pick(get)));
        }
        let find = |kind| fixtures::find(&all, kind, Some(n as u64), None).map(|v| v.to_string()).unwrap_or_default();
        let (t, rot) = (find("t_n"), find("t_n_rot"));
        out.push((format!("t_{n} by Burnside"), t, pick(burnside_full)));
        out.push((format!("t'_{n} by Burnside"), rot, pick(burnside_rotations)));
    }
    out
}

fn diameter_checks(ds: &[u64]) -> Vec<Check> {
    let ext = fixtures::extremes();
    let mut out: Vec<Check> = Vec::new();
    for &d in ds {
        if let Some(t) = fixtures::find(&ext, "t_d", None, Some(d)) {
            out.push((format!("t^{d}"), t.to_string(), count(move || count_diameter(d as u32))));
        }
        if let Some(r) = rows(&ext, "mu_d").find(|r| r.d == Some(d)) {
            let (n_star, mu) = (r.n.unwrap(), r.value);
            out.push((
                format!("peak of column {d}"),
                format!("n={n_star} mu={mu}"),
                Box::new(move || {
                    let p = find_peak_diameter(d as u32, PeakMode::Exhaustive)?;
                    Ok(format!("n={} mu={}", p.argmax, p.peak_value))
                }),
            ));
        }
    }
    out
}

fn stable_checks() -> Vec<Check> {
    let seq = fixtures::sequences();
    let mut out: Vec<Check> = Vec::new();
    for r in rows(&seq, "a_k") {
        let k = r.n.unwrap();
        out.push((format!("a_{k} formula"), r.value.to_string(), count(move || stable_a(k))));
        out.push((
            format!("a_{k} at d=60"),
            r.value.to_string(),
            count(move || count_joint_with(360 - k as u32, 60, Engine::Walk)),
        ));
    }
    out
}

fn top_row_checks(ds: std::ops::RangeInclusive<u64>) -> Vec<Check> {
    let seq = fixtures::sequences();
    let mut out: Vec<Check> = Vec::new();
    for r in rows(&seq, "t_nd").filter(|r| r.source == "top-row-3d+5" && ds.contains(&r.d.unwrap())) {
        let (n, d) = (r.n.unwrap() as u32, r.d.unwrap() as u32);
        out.push((format!("t_({n},{d})"), r.value.to_string(), count(move || count_joint_with(n, d, Engine::auto(n, d)))));
    }
    out
}

fn row_peak_checks() -> Vec<Check> {
    let ext = fixtures::extremes();
    rows(&ext, "mu_n")
        .filter(|r| r.n == Some(1000))
        .map(|r| {
            let (n, d, mu) = (r.n.unwrap() as u32, r.d.unwrap(), r.value);
            (
                format!("hinted peak of row {n}"),
                format!("d={d} mu={mu}"),
                Box::new(move || {
                    let p = find_peak(n, PeakMode::Hinted)?;
                    Ok(format!("d={} mu={}", p.argmax, p.peak_value))
                }) as Compute,
            )
        })
        .collect()
}

pub fn run(suite: Suite) -> CliResult<()> {
    let mut report = Report { failed: 0 };
    report.group("perimeter-totals", perimeter_checks(200, 1));
    report.group("t-300", perimeter_checks(300, 300));
    report.group("joint-grid", joint_checks());
    report.group("fix-classes", fix_checks());
    report.group("diameter-100", diameter_checks(&[100]));
    report.group("stable-column", stable_checks());
    report.group("top-row", top_row_checks(1..=100));
    if suite == Suite::Extended {
        report.group("perimeter-totals extended", perimeter_checks(500, 400));
        report.group("row-peak extended", row_peak_checks());
        report.group("top-row extended", top_row_checks(101..=u64::MAX));
        report.group("diameter extended", diameter_checks(&[200, 1000]));
    }
    if report.failed == 0 {
        println!("verify: all checks pass");
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("verify: {} checks failed", report.failed)))
    }
}

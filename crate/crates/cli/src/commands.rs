use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use tetra_core::analysis::{
    peak_from_cells, stats_diameter, stats_perimeter, PeakMode, StatInput, StatRow, STAT_HEADER,
};
use tetra_core::closed_forms::{diameter_bounds, fix_four_cycle, fix_three_cycle, stable_a, stable_b};
use tetra_core::oracle::Oracle;
use tetra_core::symmetry::{burnside_full, burnside_rotations};

use crate::cache::{format_row, Entry, HEADER};
use crate::context::{Context, EngineArg};
use crate::error::{CliError, CliResult};
use crate::range::IndexRange;
use crate::svg::{heat_grid, polylines, Series};

/// Writes `text` to `out`, or to stdout when no path is given.
pub fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(CliError::io(format!("writing {}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(CliError::io("writing stdout"))
        }
    }
}

fn line(out: &mut String, kind: &str, n: Option<u32>, d: Option<u32>, value: u64) {
    out.push_str(&format_row(kind, &Entry { n: n.map(u64::from), d: d.map(u64::from), value }));
    out.push('\n');
}

pub fn count(ctx: &mut Context, perimeter: Option<u32>, diameter: Option<u32>, engine: EngineArg) -> CliResult<()> {
    let value = match (perimeter, diameter) {
        (Some(n), Some(d)) => ctx.cell(n, d, engine)?,
        (Some(n), None) => ctx.t_n(n)?,
        (None, Some(d)) => ctx.t_d(d)?,
        (None, None) => return Err(CliError::Usage("give --perimeter, --diameter or both".into())),
    };
    emit(None, &format!("{value}\n"))
}

#[derive(Debug, Clone, Copy)]
pub enum Axis {
    Perimeter(IndexRange),
    Diameter(IndexRange),
}

pub fn table(ctx: &mut Context, axis: Axis, joint: bool, step: u32, out: Option<&Path>) -> CliResult<()> {
    let mut text = format!("{HEADER}\n");
    match axis {
        Axis::Perimeter(r) => {
            for n in r.iter(step) {
                if joint {
                    for (d, v) in ctx.row(n)? {
                        line(&mut text, "t_nd", Some(n), Some(d), v);
                    }
                } else {
                    line(&mut text, "t_n", Some(n), None, ctx.t_n(n)?);
                }
            }
        }
        Axis::Diameter(r) => {
            for d in r.iter(step) {
                if joint {
                    for (n, v) in ctx.column(d)? {
                        line(&mut text, "t_nd", Some(n), Some(d), v);
                    }
                } else {
                    line(&mut text, "t_d", None, Some(d), ctx.t_d(d)?);
                }
            }
        }
    }
    emit(out, &text)
}

pub const FIX_HEADER: &str = "n,fix_id,fix_3cyc,fix_dbl,fix_transp,fix_4cyc,t_n,t_n_rot";

pub fn fix(ctx: &mut Context, range: IndexRange, out: Option<&Path>) -> CliResult<()> {
    let mut text = format!("{FIX_HEADER}\n");
    for n in range.iter(1) {
        let fv = ctx.fix(n)?;
        if fv.fix_3cyc != fix_three_cycle(n as u64) || fv.fix_4cyc != fix_four_cycle(n as u64) {
            return Err(CliError::Integrity(format!("n={n}: fixed-point counts disagree with the closed forms")));
        }
        let [a, b, c, d, e] = fv.as_array();
        let (t, rot) = (burnside_full(&fv)?, burnside_rotations(&fv)?);
        text.push_str(&format!("{n},{a},{b},{c},{d},{e},{t},{rot}\n"));
    }
    emit(out, &text)
}

pub struct StatsArgs {
    pub axis: Axis,
    pub step: u32,
    pub mode: PeakMode,
    pub input: Option<PathBuf>,
    pub s_denominator: f64,
    pub out: Option<PathBuf>,
}

/// Totals and peaks read back from a `kind,n,d,value` file.
#[derive(Default)]
struct Ingested {
    totals: BTreeMap<(char, u32), u64>,
    peaks: BTreeMap<(char, u32), (u32, u64)>,
    cells: BTreeMap<(char, u32), Vec<(u32, u64)>>,
}

fn ingest(path: &Path) -> CliResult<Ingested> {
    let mut reader = csv::Reader::from_path(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut data = Ingested::default();
    let bad = |msg: String| CliError::Usage(format!("{}: {msg}", path.display()));
    for record in reader.records() {
        let r = record?;
        if r.len() != 4 {
            return Err(bad(format!("expected 4 fields, got {}", r.len())));
        }
        let num = |s: &str| -> CliResult<Option<u32>> {
            if s.is_empty() {
                Ok(None)
            } else {
                s.parse().map(Some).map_err(|e| bad(format!("{s:?}: {e}")))
            }
        };
        let (n, d) = (num(&r[1])?, num(&r[2])?);
        let value: u64 = r[3].parse().map_err(|e| bad(format!("{:?}: {e}", &r[3])))?;
        let need = |v: Option<u32>| v.ok_or_else(|| bad(format!("{} row missing an index", &r[0])));
        match &r[0] {
            "t_n" => {
                data.totals.insert(('n', need(n)?), value);
            }
            "t_d" => {
                data.totals.insert(('d', need(d)?), value);
            }
            "mu_n" => {
                data.peaks.insert(('n', need(n)?), (need(d)?, value));
            }
            "mu_d" => {
                data.peaks.insert(('d', need(d)?), (need(n)?, value));
            }
            "t_nd" => {
                let (n, d) = (need(n)?, need(d)?);
                data.cells.entry(('n', n)).or_default().push((d, value));
                data.cells.entry(('d', d)).or_default().push((n, value));
            }
            _ => {}
        }
    }
    Ok(data)
}

fn input_from_cells(index: u32, count: u64, cells: &[(u32, u64)]) -> StatInput {
    if count == 0 {
        return StatInput::total(index as u64, 0);
    }
    let peak = peak_from_cells(index as u64, cells.iter().map(|&(x, v)| (x as u64, v)));
    StatInput::with_peak(index as u64, count, &peak)
}

fn full_line(axis: char, index: u32, cells: &[(u32, u64)]) -> bool {
    let expected = match axis {
        'n' => diameter_bounds(index as u64).iter().count(),
        _ => (3 * index as usize + 3..=6 * index as usize).count(),
    };
    cells.len() == expected
}

fn read_input(data: &Ingested, axis: char, index: u32) -> CliResult<StatInput> {
    let cells = data.cells.get(&(axis, index)).map(Vec::as_slice).unwrap_or(&[]);
    let complete = full_line(axis, index, cells);
    let count = match data.totals.get(&(axis, index)) {
        Some(&t) => t,
        None if complete => cells.iter().map(|c| c.1).sum(),
        None => return Err(CliError::Usage(format!("input has no total for {axis}={index}"))),
    };
    if let Some(&(at, mu)) = data.peaks.get(&(axis, index)) {
        let mut input = StatInput::total(index as u64, count);
        input.mu = Some(mu);
        input.argmax = Some(at as u64);
        input.mode = Some(PeakMode::Exhaustive);
        return Ok(input);
    }
    if complete {
        Ok(input_from_cells(index, count, cells))
    } else {
        Ok(StatInput::total(index as u64, count))
    }
}

fn compute_input(ctx: &mut Context, axis: char, index: u32, mode: PeakMode) -> CliResult<StatInput> {
    match (axis, mode) {
        ('n', PeakMode::Exhaustive) => {
            let cells = ctx.row(index)?;
            Ok(input_from_cells(index, cells.iter().map(|c| c.1).sum(), &cells))
        }
        (_, PeakMode::Exhaustive) => {
            let cells = ctx.column(index)?;
            Ok(input_from_cells(index, cells.iter().map(|c| c.1).sum(), &cells))
        }
        ('n', PeakMode::Hinted) => {
            let count = ctx.t_n(index)?;
            if count == 0 {
                return Ok(StatInput::total(index as u64, 0));
            }
            Ok(StatInput::with_peak(index as u64, count, &ctx.peak_n(index, mode)?))
        }
        (_, PeakMode::Hinted) => {
            let count = ctx.t_d(index)?;
            if count == 0 {
                return Ok(StatInput::total(index as u64, 0));
            }
            Ok(StatInput::with_peak(index as u64, count, &ctx.peak_d(index, mode)?))
        }
    }
}

pub fn stat_rows(ctx: &mut Context, args: &StatsArgs) -> CliResult<Vec<StatRow>> {
    let (tag, range) = match args.axis {
        Axis::Perimeter(r) => ('n', r),
        Axis::Diameter(r) => ('d', r),
    };
    let data = args.input.as_deref().map(ingest).transpose()?;
    let inputs = range
        .iter(args.step)
        .map(|i| match &data {
            Some(data) => read_input(data, tag, i),
            None => compute_input(ctx, tag, i, args.mode),
        })
        .collect::<CliResult<Vec<_>>>()?;
    Ok(match args.axis {
        Axis::Perimeter(_) => stats_perimeter(&inputs, args.s_denominator)?,
        Axis::Diameter(_) => stats_diameter(&inputs)?,
    })
}

pub fn stats(ctx: &mut Context, args: &StatsArgs) -> CliResult<()> {
    let rows = stat_rows(ctx, args)?;
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    writer.write_record(STAT_HEADER)?;
    for row in &rows {
        writer.write_record(row.fields(&row.axis.places()))?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Integrity(e.to_string()))?;
    emit(args.out.as_deref(), &String::from_utf8_lossy(&bytes))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PlotKind {
    TnCurve,
    JointHeatmap,
    TopSequences,
    StableAb,
}

/// Offsets `k` in the top sequences `ᵈt_{3d+k}`.
pub const TOP_OFFSETS: std::ops::RangeInclusive<u32> = 3..=10;

pub fn plot(ctx: &mut Context, kind: PlotKind, range: IndexRange, log: bool, prefix: &Path) -> CliResult<()> {
    let mut csv = format!("{HEADER}\n");
    let svg = match kind {
        PlotKind::TnCurve => {
            let mut points = Vec::new();
            for n in range.iter(1) {
                let t = ctx.t_n(n)?;
                line(&mut csv, "t_n", Some(n), None, t);
                points.push((n as f64, t as f64));
            }
            polylines("t_n", "n", "t_n", &[Series { label: "t_n".into(), points }], log)
        }
        PlotKind::JointHeatmap => {
            let mut cells = Vec::new();
            for n in range.iter(1) {
                for (d, v) in ctx.row(n)? {
                    line(&mut csv, "t_nd", Some(n), Some(d), v);
                    cells.push((d, n, v));
                }
            }
            heat_grid("log10 of t_nd, d across, n down", &cells)
        }
        PlotKind::TopSequences => {
            let mut series = Vec::new();
            for k in TOP_OFFSETS {
                let mut points = Vec::new();
                for d in range.iter(1).filter(|&d| d >= 1) {
                    let v = ctx.cell(3 * d + k, d, EngineArg::Auto)?;
                    line(&mut csv, "t_nd", Some(3 * d + k), Some(d), v);
                    points.push((d as f64, v as f64));
                }
                series.push(Series { label: format!("n = 3d+{k}"), points });
            }
            polylines("top rows", "d", "t_nd", &series, log)
        }
        PlotKind::StableAb => {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            let mut b_rows = String::new();
            for k in range.iter(1) {
                let ak = stable_a(k as u64)?;
                let bk = stable_b(k as u64);
                line(&mut csv, "a_k", Some(k), None, ak);
                line(&mut b_rows, "b_k", Some(k), None, bk);
                a.push((k as f64, ak as f64));
                b.push((k as f64, bk as f64));
            }
            csv.push_str(&b_rows);
            polylines(
                "stable column",
                "k",
                "value",
                &[Series { label: "a_k".into(), points: a }, Series { label: "b_k".into(), points: b }],
                log,
            )
        }
    };
    let with_ext = |ext: &str| {
        let mut p = prefix.as_os_str().to_owned();
        p.push(ext);
        PathBuf::from(p)
    };
    emit(Some(&with_ext(".csv")), &csv)?;
    emit(Some(&with_ext(".svg")), &svg)
}

pub fn oracle(ctx: &mut Context, range: IndexRange, ceiling: u32) -> CliResult<()> {
    let oracle = Oracle { ceiling };
    let mut text = String::from("n,oracle,engine,tuples_visited\n");
    let mut mismatches = Vec::new();
    for n in range.iter(1) {
        let report = oracle.scan(n)?;
        let fast = ctx.t_n(n)?;
        if report.total() != fast {
            mismatches.push(n);
        }
        text.push_str(&format!("{n},{},{fast},{}\n", report.total(), report.tuples_visited));
    }
    emit(None, &text)?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("oracle disagrees at n = {mismatches:?}")))
    }
}

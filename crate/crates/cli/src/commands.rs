use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use partition_identities::certify::{certify as run_certify, Certification, CertifiedMap};
use partition_identities::identity::{
    failures, verify as run_verify, Oracle, PathSelection, VerifyConfig,
};
use partition_identities::involutions::{
    add_m_copies, double, halve, insert_marked_part, mex_shift, mex_unshift, phi_bz, psi, psi_even,
    remove_m_copies, remove_marked_part, BzState, PsiInput,
};
use partition_identities::series::SeriesTables;
use partition_identities::statistics::{self, StatisticFamily};
use partition_identities::{Overpartition, Partition, SignedCounter, Statement};

use crate::config::FileConfig;
use crate::{
    CertifyArgs, Format, Io, MapArgs, OutputArgs, PathArg, TableArgs, VerifyArgs, CERTIFY_N_CAP,
    FAST_N_CAP, ORACLE_N_CAP,
};

pub enum Outcome {
    Success,
    Failure,
}

struct Sink {
    format: Format,
    output: Option<PathBuf>,
}

impl Sink {
    fn resolve(args: &OutputArgs, file: &FileConfig) -> Result<Self> {
        let output = args.output.clone().or_else(|| file.output.clone());
        let format = match (args.format, &file.format) {
            (Some(f), _) => f,
            (None, Some(s)) => {
                Format::from_str(s, true).map_err(|_| anyhow!("format: unknown format {s:?}"))?
            }
            (None, None) => match output.as_deref().and_then(Path::extension) {
                Some(e) if e == "csv" => Format::Csv,
                Some(e) if e == "json" => Format::Json,
                _ => Format::Text,
            },
        };
        Ok(Self { format, output })
    }

    fn emit(&self, body: &str, io: &mut Io<'_>) -> Result<()> {
        match &self.output {
            Some(path) => std::fs::write(path, body)
                .with_context(|| format!("output: cannot write {}", path.display())),
            None => Ok(io.out.write_all(body.as_bytes())?),
        }
    }
}

fn csv_string<T: Serialize>(header: Option<&[&str]>, rows: &[T]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(header.is_none())
        .from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h)?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    Ok(String::from_utf8(
        w.into_inner().map_err(|e| anyhow!("{e}"))?,
    )?)
}

fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let cols: Vec<String> = cells
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(cols.join("  ").trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn names_or_default(flag: &[String], file: &Option<Vec<String>>, default: &[&str]) -> Vec<String> {
    if !flag.is_empty() {
        flag.to_vec()
    } else if let Some(v) = file {
        v.clone()
    } else {
        default.iter().map(|s| s.to_string()).collect()
    }
}

fn parse_families(names: &[String]) -> Result<Vec<StatisticFamily>> {
    if names.iter().any(|n| n == "all") {
        return Ok(StatisticFamily::ALL.to_vec());
    }
    names
        .iter()
        .map(|n| {
            n.trim()
                .parse::<StatisticFamily>()
                .map_err(|_| anyhow!("families: unknown family {n:?}"))
        })
        .collect()
}

pub fn table(args: &TableArgs, file: &FileConfig, io: &mut Io<'_>) -> Result<Outcome> {
    let families = parse_families(&names_or_default(&args.families, &file.families, &["p"]))?;
    let n_max = args.n_max.or(file.n_max).unwrap_or(20);
    let sink = Sink::resolve(&args.out, file)?;

    let values: Vec<Vec<SignedCounter>> = if args.oracle {
        if n_max > ORACLE_N_CAP {
            bail!("n_max: {n_max} exceeds the enumeration cap {ORACLE_N_CAP}");
        }
        (0..=n_max)
            .into_par_iter()
            .map(|n| families.iter().map(|&f| statistics::value(f, n)).collect())
            .collect()
    } else {
        if n_max > FAST_N_CAP {
            bail!("n_max: {n_max} exceeds the series cap {FAST_N_CAP}");
        }
        let tables = SeriesTables::new(n_max);
        (0..=n_max)
            .map(|n| {
                families
                    .iter()
                    .map(|&f| tables.value(f, n).cloned())
                    .collect::<partition_identities::Result<Vec<_>>>()
            })
            .collect::<partition_identities::Result<_>>()?
    };

    let mut header = vec!["n"];
    header.extend(families.iter().map(|f| f.name()));
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(n, vals)| {
            std::iter::once(n.to_string())
                .chain(vals.iter().map(|v| v.to_string()))
                .collect()
        })
        .collect();

    let body = match sink.format {
        Format::Text => aligned(&header, &rows),
        Format::Csv => csv_string(Some(&header), &rows)?,
        Format::Json => {
            let objs: Vec<BTreeMap<&str, serde_json::Value>> = rows
                .iter()
                .enumerate()
                .map(|(n, row)| {
                    let mut obj = BTreeMap::new();
                    obj.insert("n", serde_json::Value::from(n));
                    for (f, v) in families.iter().zip(&row[1..]) {
                        obj.insert(f.name(), serde_json::Value::from(v.as_str()));
                    }
                    obj
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&objs)?;
            s.push('\n');
            s
        }
    };
    sink.emit(&body, io)?;
    Ok(Outcome::Success)
}

fn parse_statements(names: &[String]) -> Result<Vec<Statement>> {
    let mut out = Vec::new();
    for name in names {
        let name = name.trim();
        if name == "all" {
            out.extend(Statement::all_identities());
        } else {
            out.push(
                name.parse::<Statement>()
                    .map_err(|_| anyhow!("identities: unknown identity {name:?}"))?,
            );
        }
    }
    Ok(out)
}

fn parse_path(flag: Option<PathArg>, file: &Option<String>) -> Result<PathSelection> {
    let arg = match (flag, file) {
        (Some(p), _) => p,
        (None, Some(s)) => {
            PathArg::from_str(s, true).map_err(|_| anyhow!("path: unknown path {s:?}"))?
        }
        (None, None) => PathArg::Both,
    };
    Ok(match arg {
        PathArg::Both => PathSelection::Both,
        PathArg::Fast => PathSelection::Fast,
        PathArg::Oracle => PathSelection::Oracle,
    })
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    conventions: BTreeMap<&'static str, &'static str>,
    rows: &'a [partition_identities::identity::ReportRow],
}

pub fn verify(args: &VerifyArgs, file: &FileConfig, io: &mut Io<'_>) -> Result<Outcome> {
    let statements = parse_statements(&names_or_default(
        &args.identities,
        &file.identities,
        &["all"],
    ))?;
    let paths = parse_path(args.path, &file.path)?;
    let sink = Sink::resolve(&args.out, file)?;

    let (n_min, n_max) = match args.n {
        Some(n) => (n, n),
        None => (0, args.n_max.or(file.n_max).unwrap_or(40)),
    };
    let (m_min, m_max) = match args.m {
        Some(m) => (m, m),
        None => (1, args.m_max.or(file.m_max).unwrap_or(5)),
    };
    if m_min == 0 {
        bail!("m: the modulus must be positive");
    }
    let mut oracle_cutoff = args.oracle_cutoff.or(file.oracle_cutoff).unwrap_or(35);
    if paths == PathSelection::Oracle {
        oracle_cutoff = n_max;
    }
    if paths != PathSelection::Oracle && n_max > FAST_N_CAP {
        bail!("n_max: {n_max} exceeds the series cap {FAST_N_CAP}");
    }
    if paths != PathSelection::Fast && oracle_cutoff.min(n_max) > ORACLE_N_CAP {
        bail!(
            "oracle_cutoff: enumeration up to n = {} exceeds the cap {ORACLE_N_CAP}",
            oracle_cutoff.min(n_max)
        );
    }
    if let Some(r) = args.r {
        if r >= m_max {
            bail!("r: residue {r} must be below m = {m_max}");
        }
    }

    let config = VerifyConfig {
        n_min,
        n_max,
        m_min,
        m_max,
        r: args.r,
        oracle_cutoff,
        paths,
    };
    let tables = SeriesTables::new(if paths == PathSelection::Oracle {
        0
    } else {
        n_max
    });
    let oracle = Oracle::new();
    let reports = run_verify(&statements, &config, &tables, &oracle)?;
    let rows: Vec<_> = reports.iter().map(|r| r.row()).collect();

    let mut conventions = BTreeMap::new();
    for stmt in &statements {
        if let Some(note) = stmt.convention() {
            conventions.insert(stmt.name(), note);
        }
    }
    for (name, note) in &conventions {
        writeln!(io.err, "convention {name}: {note}")?;
    }

    if args.show_lhs {
        for r in &reports {
            let r_text = r.r.map_or_else(|| "-".to_string(), |r| r.to_string());
            writeln!(
                io.out,
                "{} m={} r={} n={} lhs={} rhs={} equal={} path={}",
                r.statement, r.m, r_text, r.n, r.lhs, r.rhs, r.equal, r.path
            )?;
        }
    }
    if !args.show_lhs || sink.output.is_some() {
        let body = match sink.format {
            Format::Csv => csv_string::<_>(None, &rows)?,
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&VerifyJson {
                    conventions: conventions.clone(),
                    rows: &rows,
                })?;
                s.push('\n');
                s
            }
            Format::Text => {
                let header = ["identity", "m", "r", "n", "lhs", "rhs", "equal", "path"];
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.identity.clone(),
                            r.m.to_string(),
                            r.r.map_or_else(String::new, |v| v.to_string()),
                            r.n.to_string(),
                            r.lhs.clone(),
                            r.rhs.clone(),
                            r.equal.to_string(),
                            r.path.clone(),
                        ]
                    })
                    .collect();
                let mut s = String::new();
                for (name, note) in &conventions {
                    let _ = writeln!(s, "# {name}: {note}");
                }
                s.push_str(&aligned(&header, &cells));
                s
            }
        };
        sink.emit(&body, io)?;
    }

    let failed: Vec<_> = failures(&reports).collect();
    let variant_mismatches = reports
        .iter()
        .filter(|r| !r.statement.is_genuine() && !r.equal)
        .count();
    writeln!(
        io.err,
        "checked {} tuples: {} genuine failures, {} variant mismatches",
        reports.len(),
        failed.len(),
        variant_mismatches
    )?;
    match failed.first() {
        Some(first) => {
            writeln!(
                io.err,
                "first failure: {} m={} r={} n={} lhs={} rhs={} path={}",
                first.statement,
                first.m,
                first.r.map_or_else(|| "-".to_string(), |r| r.to_string()),
                first.n,
                first.lhs,
                first.rhs,
                first.path
            )?;
            Ok(Outcome::Failure)
        }
        None => Ok(Outcome::Success),
    }
}

fn partition_arg(input: &str) -> Result<Partition> {
    input.parse().map_err(|e| anyhow!("input: {e}"))
}

fn required<T>(v: Option<T>, flag: &str, map: &str) -> Result<T> {
    v.ok_or_else(|| anyhow!("{flag}: required by map {map}"))
}

fn nonnegative(j: i64, map: &str) -> Result<u32> {
    u32::try_from(j).map_err(|_| anyhow!("j: map {map} needs a nonnegative value, got {j}"))
}

pub fn map(args: &MapArgs, io: &mut Io<'_>) -> Result<Outcome> {
    let name = args.name.as_str();
    let input = args.input.as_str();
    let out: String = match name {
        "psi" | "psi_even" => {
            let x: PsiInput = input.parse().map_err(|e| anyhow!("input: {e}"))?;
            let y = if name == "psi" { psi(&x) } else { psi_even(&x) };
            y?.to_string()
        }
        "phi_bz" => {
            let state = match (input.contains(':'), args.j) {
                (true, None) => input
                    .parse::<BzState>()
                    .map_err(|e| anyhow!("input: {e}"))?,
                (false, Some(j)) => BzState::new(j, partition_arg(input)?),
                (true, Some(_)) => bail!("j: given both in the input and as --j"),
                (false, None) => bail!("j: phi_bz needs \"j:parts\" or --j"),
            };
            let n = match args.n {
                Some(n) => n,
                None => {
                    u32::try_from(state.total()).map_err(|_| anyhow!("input: negative total"))?
                }
            };
            phi_bz(&state, n)?.to_string()
        }
        "conjugate" => partition_arg(input)?.conjugate().to_string(),
        "rank" => partition_arg(input)?.rank().to_string(),
        "crank" => partition_arg(input)?.crank().to_string(),
        "mex" => partition_arg(input)?.mex().to_string(),
        "insert_marked" => {
            let v = required(args.v, "v", name)?;
            insert_marked_part(&partition_arg(input)?, v)?.to_string()
        }
        "remove_marked" => {
            let beta: Overpartition = input.parse().map_err(|e| anyhow!("input: {e}"))?;
            let (lambda, v) = remove_marked_part(&beta)?;
            format!("{lambda} v={v}")
        }
        "remove_copies" | "add_copies" => {
            let j = nonnegative(required(args.j, "j", name)?, name)?;
            let m = required(args.m, "m", name)?;
            let lambda = partition_arg(input)?;
            let out = if name == "remove_copies" {
                remove_m_copies(&lambda, j, m)
            } else {
                add_m_copies(&lambda, j, m)
            };
            out?.to_string()
        }
        "mex_shift" | "mex_unshift" => {
            let j = nonnegative(required(args.j, "j", name)?, name)?;
            let lambda = partition_arg(input)?;
            if name == "mex_shift" {
                mex_shift(&lambda, j).to_string()
            } else {
                mex_unshift(&lambda, j)?.to_string()
            }
        }
        "halve" => halve(&partition_arg(input)?)?.to_string(),
        "double" => double(&partition_arg(input)?)?.to_string(),
        other => bail!("name: unknown map {other:?}"),
    };
    writeln!(io.out, "{out}")?;
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct CertRow {
    map: &'static str,
    n_max: u32,
    instances: u64,
    violations: u64,
    counterexample: Option<String>,
}

impl From<&Certification> for CertRow {
    fn from(c: &Certification) -> Self {
        Self {
            map: c.map.name(),
            n_max: c.n_max,
            instances: c.instances,
            violations: c.violations,
            counterexample: c.counterexample.clone(),
        }
    }
}

pub fn certify(args: &CertifyArgs, file: &FileConfig, io: &mut Io<'_>) -> Result<Outcome> {
    let names = names_or_default(&args.maps, &file.maps, &["all"]);
    let maps: Vec<CertifiedMap> = if names.iter().any(|n| n == "all") {
        CertifiedMap::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|n| {
                n.trim()
                    .parse()
                    .map_err(|_| anyhow!("map: unknown map {n:?}"))
            })
            .collect::<Result<_>>()?
    };
    let n_max = args.n_max.or(file.n_max).unwrap_or(20);
    if n_max > CERTIFY_N_CAP {
        bail!("n_max: {n_max} exceeds the certification cap {CERTIFY_N_CAP}");
    }
    let sink = Sink::resolve(&args.out, file)?;

    let results: Vec<Certification> = maps.iter().map(|&m| run_certify(m, n_max)).collect();
    let rows: Vec<CertRow> = results.iter().map(CertRow::from).collect();
    let body = match sink.format {
        Format::Csv => csv_string::<_>(None, &rows)?,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows)?;
            s.push('\n');
            s
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.map.to_string(),
                        r.n_max.to_string(),
                        r.instances.to_string(),
                        r.violations.to_string(),
                    ]
                })
                .collect();
            aligned(&["map", "n_max", "instances", "violations"], &cells)
        }
    };
    sink.emit(&body, io)?;

    let mut outcome = Outcome::Success;
    for c in results.iter().filter(|c| !c.passed()) {
        writeln!(
            io.err,
            "{} failed: {}",
            c.map,
            c.counterexample
                .as_deref()
                .unwrap_or("no counterexample recorded")
        )?;
        outcome = Outcome::Failure;
    }
    Ok(outcome)
}

//! Subcommand dispatch and report rendering behind the `sgdeg` binary.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bounds::{
    cauchy_bound_checks, cor26_bound_check, decompositions, lb3_check, lemma1_bound_check, lemma2_bound_check,
    prime_index_normals, shape_of, theorem1_check, BoundCheckResult, ShapeReading,
};
use crate::cache::{CacheOutcome, LatticeCache};
use crate::catalog::{catalog, CatalogEntry};
use crate::degree::degree_report;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ingest::load_group_file;
use crate::lattice::{enumerate_subgroups, MaxConvention, SubgroupLattice};
use crate::moebius::{corollary_mu_bound, moebius_table, predicted_mu_symmetric};
use crate::named::make_named;
use crate::primes::prime_signature;
use crate::verify::{verify_paper, VerifyOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputSource {
    Named(String),
    File(PathBuf),
    None,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            _ => Err(Error::Input(format!("unknown format `{s}` (expected table, json or csv)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BoundsClaim {
    #[default]
    All,
    Lemma1,
    Lemma2,
    Theorem1,
    Cor26,
    Cauchy,
    Lb3,
    CorollaryMu,
}

impl BoundsClaim {
    pub const NAMES: [&'static str; 8] =
        ["all", "lemma1", "lemma2", "theorem1", "cor26", "cauchy", "lb3", "corollary-mu"];

    fn wants(self, other: BoundsClaim) -> bool {
        self == BoundsClaim::All || self == other
    }
}

impl FromStr for BoundsClaim {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use BoundsClaim::*;
        let all = [All, Lemma1, Lemma2, Theorem1, Cor26, Cauchy, Lb3, CorollaryMu];
        Self::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|i| all[i])
            .ok_or_else(|| Error::Input(format!("unknown claim `{s}` (expected one of {})", Self::NAMES.join(", "))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Info,
    Lattice,
    Degrees,
    Bounds {
        claim: BoundsClaim,
        /// Node index of `N`; every suitable normal subgroup when absent.
        normal: Option<usize>,
        /// Node index of `H`; every complement candidate when absent.
        complement: Option<usize>,
    },
    Moebius,
    Batch,
    VerifyPaper,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: InputSource,
    pub command: Command,
    pub convention: MaxConvention,
    pub format: OutputFormat,
    pub max_order: usize,
    pub max_nodes: usize,
    pub cache_dir: Option<PathBuf>,
    pub stretch: bool,
    pub reading: ShapeReading,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            source: InputSource::None,
            command,
            convention: MaxConvention::Raw,
            format: OutputFormat::Table,
            max_order: crate::DEFAULT_MAX_ORDER,
            max_nodes: crate::DEFAULT_MAX_NODES,
            cache_dir: None,
            stretch: false,
            reading: ShapeReading::Strict,
        }
    }

    pub fn with_group(mut self, spec: &str) -> Self {
        self.source = InputSource::Named(spec.to_string());
        self
    }

    pub fn with_format(mut self, format: OutputFormat) -> Self {
        self.format = format;
        self
    }
}

/// Rendered output of one run. `success` is false when an asserted check
/// failed; `warnings` go to stderr.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
    pub warnings: Vec<String>,
}

/// A report is a single record or a list of rows.
#[derive(Clone, Debug, PartialEq)]
pub enum Report {
    Record(Map<String, Value>),
    Rows(Vec<Map<String, Value>>),
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let v = match self {
                    Report::Record(m) => Value::Object(m.clone()),
                    Report::Rows(rows) => Value::Array(rows.iter().cloned().map(Value::Object).collect()),
                };
                let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
                s.push('\n');
                s
            }
            OutputFormat::Table => match self {
                Report::Record(m) => {
                    let rows: Vec<Vec<String>> = m.iter().map(|(k, v)| vec![k.clone(), cell(v)]).collect();
                    render_table(&["field".into(), "value".into()], &rows)
                }
                Report::Rows(rows) => {
                    let (header, body) = grid(rows);
                    render_table(&header, &body)
                }
            },
            OutputFormat::Csv => {
                let (header, body) = match self {
                    Report::Record(m) => grid(std::slice::from_ref(m)),
                    Report::Rows(rows) => grid(rows),
                };
                let mut w = csv::Writer::from_writer(Vec::new());
                if !header.is_empty() {
                    w.write_record(&header).expect("in-memory write");
                }
                for row in &body {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 output")
            }
        }
    }
}

/// Column names in first-seen order, and the stringified cells.
fn grid(rows: &[Map<String, Value>]) -> (Vec<String>, Vec<Vec<String>>) {
    let mut header: Vec<String> = Vec::new();
    for row in rows {
        for k in row.keys() {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let body = rows
        .iter()
        .map(|row| header.iter().map(|k| row.get(k).map_or_else(|| "-".into(), cell)).collect())
        .collect();
    (header, body)
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(", "),
        Value::Object(m) => match (m.get("num"), m.get("den")) {
            (Some(Value::String(n)), Some(Value::String(d))) if d == "1" => n.clone(),
            (Some(Value::String(n)), Some(Value::String(d))) => format!("{n}/{d}"),
            _ => Value::Object(m.clone()).to_string(),
        },
    }
}

fn render_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header);
    out += &line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>());
    for row in rows {
        out += &line(row);
    }
    out
}

fn to_map<T: Serialize>(value: &T) -> Map<String, Value> {
    match serde_json::to_value(value).expect("report types serialize") {
        Value::Object(m) => m,
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

struct Session<'a> {
    cfg: &'a RunConfig,
    cache: Option<LatticeCache>,
    warnings: Mutex<Vec<String>>,
}

impl Session<'_> {
    fn warn(&self, msg: String) {
        self.warnings.lock().expect("warning lock").push(msg);
    }

    fn lattice(&self, g: FiniteGroup) -> Result<SubgroupLattice> {
        let Some(cache) = &self.cache else {
            return enumerate_subgroups(g, self.cfg.max_nodes);
        };
        let name = g.name().to_string();
        let (l, outcome) = cache.lattice(g, self.cfg.max_nodes)?;
        if let CacheOutcome::Corrupt(why) = outcome {
            self.warn(format!("cache entry for {name} ignored ({why}); recomputed"));
        }
        Ok(l)
    }

    fn group(&self) -> Result<FiniteGroup> {
        match &self.cfg.source {
            InputSource::Named(spec) => make_named(spec, self.cfg.max_order),
            InputSource::File(path) => load_group_file(path, self.cfg.max_order),
            InputSource::None => Err(Error::Input("this subcommand needs --group or --input".into())),
        }
    }
}

/// Runs one subcommand. Errors are input or usage problems.
pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    if cfg.max_order == 0 {
        return Err(Error::Input("--max-order must be at least 1".into()));
    }
    let session = Session {
        cfg,
        cache: cfg.cache_dir.as_ref().map(LatticeCache::new).transpose()?,
        warnings: Mutex::new(Vec::new()),
    };
    let (report, success) = match &cfg.command {
        Command::Info => (Report::Record(info(&session.group()?)), true),
        Command::Lattice => (lattice_rows(&session.lattice(session.group()?)?, cfg.convention), true),
        Command::Degrees => {
            let l = session.lattice(session.group()?)?;
            (Report::Record(to_map(&degree_report(&l, cfg.convention))), true)
        }
        Command::Bounds { claim, normal, complement } => {
            let l = session.lattice(session.group()?)?;
            bounds(&l, cfg, *claim, *normal, *complement)?
        }
        Command::Moebius => moebius(&session)?,
        Command::Batch => (batch(&session)?, true),
        Command::VerifyPaper => {
            let opts = VerifyOptions {
                max_order: cfg.max_order,
                max_nodes: cfg.max_nodes,
                stretch: cfg.stretch,
                convention: cfg.convention,
                reading: cfg.reading,
            };
            let report = verify_paper(&opts, |g| session.lattice(g))?;
            let rows = report.rows.iter().map(to_map).collect();
            (Report::Rows(rows), report.passed())
        }
    };
    Ok(Outcome {
        output: report.render(cfg.format),
        success,
        warnings: session.warnings.into_inner().expect("warning lock"),
    })
}

fn labels(g: &FiniteGroup, xs: impl IntoIterator<Item = usize>) -> Value {
    Value::Array(xs.into_iter().map(|x| Value::String(g.label(x))).collect())
}

fn info(g: &FiniteGroup) -> Map<String, Value> {
    let flags = g.structural_predicates();
    let fit = g.fitting_subgroup();
    let c = g.centralizer_of_set(&fit);
    let (_, fit_gens) = g.closure_with_generators(fit.iter());
    let primes: Vec<u64> = prime_signature(g.order() as u64).primes().collect();
    let mut m = Map::new();
    m.insert("group".into(), json!(g.name()));
    m.insert("order".into(), json!(g.order()));
    m.insert("prime_divisors".into(), json!(primes));
    m.insert("abelian".into(), json!(flags.is_abelian));
    m.insert("nilpotent".into(), json!(flags.is_nilpotent));
    m.insert("solvable".into(), json!(flags.is_solvable));
    m.insert("center_order".into(), json!(g.center().count()));
    m.insert("fitting_order".into(), json!(fit.count()));
    m.insert("fitting_generators".into(), labels(g, fit_gens));
    m.insert("centralizer_of_fitting_order".into(), json!(c.count()));
    m.insert("centralizer_of_fitting_index".into(), json!(g.order() / c.count()));
    m
}

fn lattice_rows(l: &SubgroupLattice, convention: MaxConvention) -> Report {
    let g = l.group();
    let normal = l.normal_subgroups();
    let subnormal = l.subnormal_subgroups();
    let maximal = l.maximal_subgroups(convention).ok();
    let sylow = l.sylow_subgroups();
    let mu = moebius_table(l);
    let rows = (0..l.len())
        .map(|i| {
            let mut m = Map::new();
            m.insert("node".into(), json!(i));
            m.insert("order".into(), json!(l.node(i).count()));
            m.insert("generators".into(), labels(g, l.generators(i).iter().copied()));
            m.insert("normal".into(), json!(normal.contains(i)));
            m.insert("subnormal".into(), json!(subnormal.contains(i)));
            m.insert("maximal".into(), json!(maximal.as_ref().is_some_and(|s| s.contains(i))));
            m.insert("sylow".into(), json!(sylow.contains(i)));
            m.insert("mu".into(), json!(mu.get(i)));
            m
        })
        .collect();
    Report::Rows(rows)
}

fn bound_row(group: &str, n: Option<usize>, h: Option<usize>, r: &BoundCheckResult) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("group".into(), json!(group));
    m.insert("claim".into(), json!(r.claim));
    m.insert("n".into(), json!(n));
    m.insert("h".into(), json!(h));
    m.insert("convention".into(), json!(r.convention));
    m.insert("hypothesis_satisfied".into(), json!(r.hypothesis_satisfied));
    m.insert("bound".into(), json!(r.bound));
    m.insert("actual".into(), json!(r.actual));
    m.insert("holds".into(), json!(r.holds));
    m.insert("slack".into(), json!(r.slack));
    m.insert("reasons".into(), json!(r.reasons.join("; ")));
    m
}

fn bounds(
    l: &SubgroupLattice,
    cfg: &RunConfig,
    claim: BoundsClaim,
    normal: Option<usize>,
    complement: Option<usize>,
) -> Result<(Report, bool)> {
    for node in [normal, complement].into_iter().flatten() {
        if node >= l.len() {
            return Err(Error::Input(format!("node {node} out of range (lattice has {} nodes)", l.len())));
        }
    }
    let g = l.group();
    let name = g.name();
    let conv = cfg.convention;
    let mut rows = Vec::new();
    let prime_normals: Vec<usize> = match normal {
        Some(n) => vec![n],
        None => prime_index_normals(l),
    };
    let shaped: Vec<usize> = if normal.is_some() {
        prime_normals.clone()
    } else {
        let mut v = Vec::new();
        for &n in &prime_normals {
            if shape_of(&g.subgroup_as_group(l.node(n), "N")?.0, cfg.reading).is_some() {
                v.push(n);
            }
        }
        v
    };
    let pairs: Vec<(usize, usize)> = match (normal, complement) {
        (Some(n), Some(h)) => vec![(n, h)],
        (Some(n), None) => l.complement_candidates(n).into_iter().map(|h| (n, h)).collect(),
        (None, Some(h)) => decompositions(l).into_iter().filter(|&(_, x)| x == h).collect(),
        (None, None) => decompositions(l),
    };

    if claim.wants(BoundsClaim::Lemma1) {
        for &n in &shaped {
            let hs = match complement {
                Some(h) => vec![h],
                None => l.complement_candidates(n),
            };
            for h in hs {
                rows.push(bound_row(name, Some(n), Some(h), &lemma1_bound_check(l, n, h, conv, cfg.reading)?));
            }
        }
    }
    if claim.wants(BoundsClaim::Lemma2) {
        for &n in &shaped {
            rows.push(bound_row(name, Some(n), None, &lemma2_bound_check(l, n, cfg.reading)?));
        }
    }
    if claim.wants(BoundsClaim::Theorem1) {
        let t = theorem1_check(l, conv, cfg.reading)?;
        if let Some(r) = &t.part_ii {
            rows.push(bound_row(name, t.centralizer_node, None, r));
        }
        if let Some((h, r)) = &t.part_i {
            rows.push(bound_row(name, t.centralizer_node, Some(*h), r));
        }
        if !t.hypotheses {
            let mut r = BoundCheckResult {
                claim: "theorem1".into(),
                convention: Some(conv),
                hypothesis_satisfied: false,
                reasons: t.reasons.clone(),
                bound: None,
                bound_squared: None,
                actual: None,
                holds: None,
                slack: None,
            };
            r.reasons.push(format!("{} reading", t.reading));
            rows.push(bound_row(name, t.centralizer_node, None, &r));
        }
    }
    if claim.wants(BoundsClaim::Cor26) {
        for &n in &prime_normals {
            if normal.is_none() && !g.subgroup_as_group(l.node(n), "N")?.0.is_abelian() {
                continue;
            }
            rows.push(bound_row(name, Some(n), None, &cor26_bound_check(l, n)?));
        }
    }
    if claim.wants(BoundsClaim::Cauchy) {
        for &(n, h) in &pairs {
            let (spd_r, sd_r) = cauchy_bound_checks(l, n, h, conv)?;
            rows.push(bound_row(name, Some(n), Some(h), &spd_r));
            rows.push(bound_row(name, Some(n), Some(h), &sd_r));
        }
    }
    if claim.wants(BoundsClaim::Lb3) {
        for &(n, h) in &pairs {
            rows.push(bound_row(name, Some(n), Some(h), &lb3_check(l, n, h, conv)?));
        }
    }
    if claim.wants(BoundsClaim::CorollaryMu) {
        rows.push(bound_row(name, None, None, &corollary_mu_bound(l, conv, cfg.reading)?));
    }
    let success = rows
        .iter()
        .all(|r| !(r["hypothesis_satisfied"] == json!(true) && r["holds"] == json!(false)));
    Ok((Report::Rows(rows), success))
}

/// Degree `n` when the group came from an `S<n>` descriptor.
fn symmetric_degree(name: &str) -> Option<u64> {
    name.strip_prefix('S')?.parse().ok()
}

fn moebius(session: &Session) -> Result<(Report, bool)> {
    let groups: Vec<FiniteGroup> = match session.cfg.source {
        InputSource::None => {
            let top = if session.cfg.stretch { 6 } else { 5 };
            let mut v = Vec::new();
            for n in 2..=top {
                match make_named(&format!("S{n}"), session.cfg.max_order) {
                    Ok(g) => v.push(g),
                    Err(Error::OrderCap { order, .. }) => {
                        session.warn(format!("S{n} skipped: order {order} exceeds --max-order"))
                    }
                    Err(e) => return Err(e),
                }
            }
            v
        }
        _ => vec![session.group()?],
    };
    let results: Vec<Result<Map<String, Value>>> = groups
        .into_par_iter()
        .map(|g| {
            let named_sym = matches!(session.cfg.source, InputSource::Named(_) | InputSource::None);
            let degree = if named_sym { symmetric_degree(g.name()) } else { None };
            let name = g.name().to_string();
            let l = session.lattice(g)?;
            let mu = moebius_table(&l).bottom();
            let predicted = degree.and_then(predicted_mu_symmetric);
            let mut m = Map::new();
            m.insert("group".into(), json!(name));
            m.insert("lattice_size".into(), json!(l.len()));
            m.insert("mu_bottom".into(), json!(mu));
            m.insert("predicted".into(), json!(predicted.as_ref().map(|p| p.to_string())));
            m.insert("agrees".into(), json!(predicted.map(|p| p == mu.into())));
            Ok(m)
        })
        .collect();
    let rows = results.into_iter().collect::<Result<Vec<_>>>()?;
    let success = rows.iter().all(|r| r["agrees"] != json!(false));
    Ok((Report::Rows(rows), success))
}

fn batch(session: &Session) -> Result<Report> {
    let mut groups = Vec::new();
    for entry in catalog(session.cfg.max_order, session.cfg.stretch)? {
        match entry {
            CatalogEntry::Ready(g) => groups.push(g),
            CatalogEntry::Skipped { spec, order } => {
                session.warn(format!("{spec} skipped: order {order} exceeds --max-order"))
            }
        }
    }
    let rows: Vec<Result<Map<String, Value>>> = groups
        .into_par_iter()
        .map(|g| Ok(to_map(&degree_report(&session.lattice(g)?, session.cfg.convention))))
        .collect();
    Ok(Report::Rows(rows.into_iter().collect::<Result<_>>()?))
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Table => "table",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        })
    }
}

//! The `eqlab` command line: argument parsing, input formats, run reports.
//!
//! Everything is driven through [`run`], which writes the report to one
//! writer and diagnostics to another and returns the exit status, so the
//! binary is a thin shim and the commands are testable in-process.
//!
//! Exit status: 0 when the property holds or a verification passes, 1 when
//! the property fails (the witness is printed), 2 for usage and input
//! errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{
    enumerate_all, enumerate_regular, parse_graph6_lines, write_graph6, GraphCatalog,
    MAX_ALL_ORDER, MAX_REGULAR_ORDER,
};
use crate::error::{Error, Result};
use crate::families::recognize;
use crate::graph::{Graph, MAX_ORDER};
use crate::oracles::{evaluate, OracleConfig, Property, DEFAULT_MAX_ORDER};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;
/// Environment variable that lowers every order cap.
pub const MAX_ORDER_ENV: &str = "EQLAB_MAX_ORDER";
/// Largest order accepted by `spectral-search` with a degree filter.
pub const MAX_SPECTRAL_REGULAR_ORDER: usize = 10;

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "eqlab", version, about = "Degree-equipartite graph toolkit")]
pub struct Cli {
    /// Emit the run report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for oracle evaluation. Results do not depend on it.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    /// Leave wall time out of the report so identical runs are byte-identical.
    #[arg(long, global = true)]
    pub deterministic: bool,
    /// Run oracles above their default order ceiling.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one property for one graph.
    Check {
        /// graph6 string, edge-list text, a file holding either, or `-` for stdin.
        input: String,
        #[arg(long, default_value = "degree-equipartite")]
        property: Property,
    },
    /// List the equipartite families a graph belongs to.
    Classify { input: String },
    /// Compare oracle and recognizer on every graph of an even order <= 8.
    VerifyTheorem {
        #[arg(long)]
        order: usize,
    },
    /// Find spectral-equipartite graphs and flag those outside the families.
    SpectralSearch {
        #[arg(long)]
        order: usize,
        /// Restrict to regular graphs of this degree.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Print a catalog as graph6 lines.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Translate between edge-list and graph6.
    Convert { input: String },
}

/// Order limits in force for one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub oracle: usize,
    pub all_catalog: usize,
    pub regular_catalog: usize,
    pub spectral_regular: usize,
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle: DEFAULT_MAX_ORDER,
            all_catalog: MAX_ALL_ORDER,
            regular_catalog: MAX_REGULAR_ORDER,
            spectral_regular: MAX_SPECTRAL_REGULAR_ORDER,
            force: false,
        }
    }
}

impl Limits {
    /// Every cap lowered to `cap` (never raised).
    pub fn lowered_to(self, cap: usize) -> Limits {
        Limits {
            oracle: self.oracle.min(cap),
            all_catalog: self.all_catalog.min(cap),
            regular_catalog: self.regular_catalog.min(cap),
            spectral_regular: self.spectral_regular.min(cap),
            force: self.force,
        }
    }

    fn from_env() -> std::result::Result<Limits, String> {
        match std::env::var(MAX_ORDER_ENV) {
            Ok(v) => v
                .trim()
                .parse::<usize>()
                .map(|cap| Limits::default().lowered_to(cap))
                .map_err(|_| format!("{MAX_ORDER_ENV}={v:?} is not a non-negative integer")),
            Err(_) => Ok(Limits::default()),
        }
    }

    fn oracle_config(&self, jobs: u64) -> OracleConfig {
        OracleConfig {
            parallel: jobs > 1,
            force: self.force,
            max_order: self.oracle,
        }
    }

    fn check_catalog(&self, order: usize, degree: Option<usize>) -> Result<()> {
        let cap = if degree.is_some() {
            self.regular_catalog
        } else {
            self.all_catalog
        };
        if order > cap {
            return Err(Error::capacity(format!(
                "catalog order {order} exceeds the cap of {cap}"
            )));
        }
        Ok(())
    }
}

/// One oracle outcome inside a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictRecord {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Vec<usize>>,
    pub subsets_examined: u64,
}

/// One graph inside a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub graph6: String,
    pub verdicts: Vec<VerdictRecord>,
    /// Family labels; absent when the command does not classify.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    /// Set when this graph is what the command was looking for: an oracle
    /// and recognizer disagreement, or a spectral-equipartite graph outside
    /// the families.
    pub flagged: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filter: Option<String>,
    pub records: Vec<GraphRecord>,
    pub summary: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

/// What a command produced, before it is written out.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub exit: i32,
    pub report: RunReport,
    /// Human-readable rendering, used without `--json`.
    pub text: String,
}

/// Parse the arguments, run the command, write the report to `out` and
/// diagnostics to `err`, and return the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_HOLDS
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let limits = match Limits::from_env() {
        Ok(l) => Limits {
            force: cli.force,
            ..l
        },
        Err(msg) => {
            let _ = writeln!(err, "eqlab: {msg}");
            return EXIT_USAGE;
        }
    };
    let invocation = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    match execute(&cli, &limits, &invocation) {
        Ok(outcome) => {
            let written = if cli.json {
                serde_json::to_string_pretty(&outcome.report)
                    .map_err(io::Error::other)
                    .and_then(|s| writeln!(out, "{s}"))
            } else {
                out.write_all(outcome.text.as_bytes())
            };
            if let Err(e) = written.and_then(|_| out.flush()) {
                let _ = writeln!(err, "eqlab: cannot write report: {e}");
                return EXIT_USAGE;
            }
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(err, "eqlab: {e}");
            EXIT_USAGE
        }
    }
}

/// Run the parsed command inside a pool of `--jobs` threads.
pub fn execute(cli: &Cli, limits: &Limits, invocation: &str) -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build()
        .map_err(|e| Error::validation(format!("cannot start {} worker threads: {e}", cli.jobs)))?;
    let start = Instant::now();
    let mut outcome = pool.install(|| dispatch(cli, limits))?;
    outcome.report.command = invocation.to_string();
    if !cli.deterministic {
        outcome.report.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(outcome)
}

fn dispatch(cli: &Cli, limits: &Limits) -> Result<Outcome> {
    let cfg = limits.oracle_config(cli.jobs);
    match &cli.command {
        Command::Check { input, property } => check(&read_graph(input)?, *property, &cfg),
        Command::Classify { input } => classify(&read_graph(input)?),
        Command::VerifyTheorem { order } => verify_theorem(*order, limits, &cfg),
        Command::SpectralSearch { order, degree } => spectral_search(*order, *degree, limits, &cfg),
        Command::Enumerate { order, degree } => {
            limits.check_catalog(*order, *degree)?;
            enumerate(*order, *degree)
        }
        Command::Convert { input } => convert(&read_input(input)?),
    }
}

fn report(order: Option<usize>, filter: Option<String>) -> RunReport {
    RunReport {
        schema_version: SCHEMA_VERSION,
        command: String::new(),
        order,
        filter,
        records: Vec::new(),
        summary: BTreeMap::new(),
        wall_time_ms: None,
    }
}

fn verdict_record(g: &Graph, property: Property, cfg: &OracleConfig) -> Result<VerdictRecord> {
    let v = evaluate(g, property, cfg)?;
    Ok(VerdictRecord {
        property,
        holds: v.holds,
        witness: v.witness.map(|w| w.to_vec()),
        subsets_examined: v.subsets_examined,
    })
}

fn label_names(g: &Graph) -> Vec<String> {
    recognize(g)
        .labels
        .iter()
        .map(ToString::to_string)
        .collect()
}

pub fn check(g: &Graph, property: Property, cfg: &OracleConfig) -> Result<Outcome> {
    let v = verdict_record(g, property, cfg)?;
    let mut text = format!("{property}: {}\n", if v.holds { "holds" } else { "fails" });
    if let Some(w) = &v.witness {
        text += &format!("witness: {{{}}}\n", join(w));
    }
    let exit = if v.holds { EXIT_HOLDS } else { EXIT_FAILS };
    let mut r = report(Some(g.order()), None);
    r.summary.insert("holds".into(), v.holds as u64);
    r.records.push(GraphRecord {
        graph6: write_graph6(g),
        verdicts: vec![v],
        labels: None,
        flagged: false,
    });
    Ok(Outcome {
        exit,
        report: r,
        text,
    })
}

pub fn classify(g: &Graph) -> Result<Outcome> {
    let labels = label_names(g);
    let text = if labels.is_empty() {
        "not in characterization\n".to_string()
    } else {
        labels.iter().map(|l| format!("{l}\n")).collect()
    };
    let mut r = report(Some(g.order()), None);
    r.summary.insert("labels".into(), labels.len() as u64);
    r.records.push(GraphRecord {
        graph6: write_graph6(g),
        verdicts: Vec::new(),
        labels: Some(labels),
        flagged: false,
    });
    Ok(Outcome {
        exit: EXIT_HOLDS,
        report: r,
        text,
    })
}

/// Evaluate `per_graph` over the catalog, across the current pool when
/// `cfg.parallel`, keeping catalog order.
fn map_catalog<F>(
    catalog: &GraphCatalog,
    cfg: &OracleConfig,
    per_graph: F,
) -> Result<Vec<GraphRecord>>
where
    F: Fn(&Graph, &OracleConfig) -> Result<GraphRecord> + Sync,
{
    let graphs: Vec<&Graph> = catalog.graphs().collect();
    // parallelise across graphs; each oracle scan stays sequential
    let inner = OracleConfig {
        parallel: false,
        ..*cfg
    };
    if cfg.parallel {
        graphs.par_iter().map(|g| per_graph(g, &inner)).collect()
    } else {
        graphs.iter().map(|g| per_graph(g, &inner)).collect()
    }
}

pub fn verify_theorem(order: usize, limits: &Limits, cfg: &OracleConfig) -> Result<Outcome> {
    if order % 2 == 1 || order == 0 {
        return Err(Error::validation(format!(
            "verify-theorem needs an even order in 2..={MAX_ALL_ORDER}, got {order}"
        )));
    }
    limits.check_catalog(order, None)?;
    let catalog = enumerate_all(order)?;
    let records = map_catalog(&catalog, cfg, |g, cfg| {
        let v = verdict_record(g, Property::DegreeEquipartite, cfg)?;
        let labels = label_names(g);
        let flagged = v.holds == labels.is_empty();
        Ok(GraphRecord {
            graph6: write_graph6(g),
            verdicts: vec![v],
            labels: Some(labels),
            flagged,
        })
    })?;
    let positives = records.iter().filter(|r| r.verdicts[0].holds).count();
    let disagreements: Vec<&GraphRecord> = records.iter().filter(|r| r.flagged).collect();
    let mut text = format!(
        "order {order}: {} graphs, {positives} degree-equipartite, {} disagreements\n",
        records.len(),
        disagreements.len()
    );
    for d in &disagreements {
        text += &format!(
            "  disagreement: {} oracle={} labels=[{}]\n",
            d.graph6,
            d.verdicts[0].holds,
            d.labels.as_deref().unwrap_or_default().join(", ")
        );
    }
    let exit = if disagreements.is_empty() {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    };
    let mut r = report(Some(order), Some("all".into()));
    r.summary.insert("graphs".into(), records.len() as u64);
    r.summary.insert("positives".into(), positives as u64);
    r.summary
        .insert("disagreements".into(), disagreements.len() as u64);
    r.records = records;
    Ok(Outcome {
        exit,
        report: r,
        text,
    })
}

pub fn spectral_search(
    order: usize,
    degree: Option<usize>,
    limits: &Limits,
    cfg: &OracleConfig,
) -> Result<Outcome> {
    if order % 2 == 1 {
        return Err(Error::validation(format!(
            "spectral-search needs an even order, got {order}"
        )));
    }
    let cap = match degree {
        Some(_) => limits.spectral_regular,
        None => limits.all_catalog,
    };
    if order > cap {
        return Err(Error::capacity(format!(
            "spectral-search order {order} exceeds the cap of {cap}{}",
            if degree.is_none() {
                " (pass --degree for regular catalogs)"
            } else {
                ""
            }
        )));
    }
    let catalog = match degree {
        Some(k) => enumerate_regular(order, k)?,
        None => enumerate_all(order)?,
    };
    let records = map_catalog(&catalog, cfg, |g, cfg| {
        let spec = verdict_record(g, Property::SpectralEquipartite, cfg)?;
        let deg = verdict_record(g, Property::DegreeEquipartite, cfg)?;
        let flagged = spec.holds && !deg.holds;
        Ok(GraphRecord {
            graph6: write_graph6(g),
            verdicts: vec![spec, deg],
            labels: Some(label_names(g)),
            flagged,
        })
    })?;
    let spectral: Vec<&GraphRecord> = records.iter().filter(|r| r.verdicts[0].holds).collect();
    let exceptions = records.iter().filter(|r| r.flagged).count();
    let mut text = format!(
        "order {order} ({}): {} graphs scanned, {} spectral-equipartite\n",
        catalog.filter(),
        records.len(),
        spectral.len()
    );
    for s in &spectral {
        let labels = s.labels.as_deref().unwrap_or_default();
        let tag = if s.flagged {
            "EXCEPTION: not degree-equipartite".to_string()
        } else {
            labels.join(", ")
        };
        text += &format!("  {} {tag}\n", s.graph6);
    }
    text += if exceptions == 0 {
        "all spectral-equipartite graphs are in the characterization\n"
    } else {
        "exception found: spectral-equipartite graphs outside the characterization\n"
    };
    let mut r = report(Some(order), Some(catalog.filter().to_string()));
    r.summary.insert("graphs".into(), records.len() as u64);
    r.summary
        .insert("spectral_equipartite".into(), spectral.len() as u64);
    r.summary.insert("exceptions".into(), exceptions as u64);
    r.records = records;
    Ok(Outcome {
        exit: EXIT_HOLDS,
        report: r,
        text,
    })
}

pub fn enumerate(order: usize, degree: Option<usize>) -> Result<Outcome> {
    let catalog = match degree {
        Some(k) => enumerate_regular(order, k)?,
        None => enumerate_all(order)?,
    };
    let mut r = report(Some(order), Some(catalog.filter().to_string()));
    let mut text = String::new();
    for g in catalog.graphs() {
        let s = write_graph6(g);
        text += &s;
        text.push('\n');
        r.records.push(GraphRecord {
            graph6: s,
            verdicts: Vec::new(),
            labels: None,
            flagged: false,
        });
    }
    r.summary.insert("graphs".into(), catalog.len() as u64);
    Ok(Outcome {
        exit: EXIT_HOLDS,
        report: r,
        text,
    })
}

/// Edge-list input becomes one graph6 line; graph6 input (one or more
/// lines) becomes edge lists separated by blank lines.
pub fn convert(text: &str) -> Result<Outcome> {
    let mut r = report(None, None);
    let (graphs, out) = if looks_like_edge_list(text) {
        let g = parse_edge_list(text)?;
        let s = write_graph6(&g) + "\n";
        (vec![g], s)
    } else {
        let gs = parse_graph6_lines(text)?;
        let s = gs
            .iter()
            .map(write_edge_list)
            .collect::<Vec<_>>()
            .join("\n");
        (gs, s)
    };
    for g in &graphs {
        r.records.push(GraphRecord {
            graph6: write_graph6(g),
            verdicts: Vec::new(),
            labels: None,
            flagged: false,
        });
    }
    r.summary.insert("graphs".into(), graphs.len() as u64);
    Ok(Outcome {
        exit: EXIT_HOLDS,
        report: r,
        text: out,
    })
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// `input` names a file if one exists at that path, `-` means standard
/// input, and anything else is taken as the graph text itself.
pub fn read_input(input: &str) -> Result<String> {
    if input == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::validation(format!("cannot read standard input: {e}")))?;
        return Ok(s);
    }
    let path = Path::new(input);
    if path.is_file() {
        return std::fs::read_to_string(path)
            .map_err(|e| Error::validation(format!("cannot read {input}: {e}")));
    }
    Ok(input.to_string())
}

fn read_graph(input: &str) -> Result<Graph> {
    parse_graph(&read_input(input)?)
}

/// Parse a single graph given as graph6 or as an edge list.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if looks_like_edge_list(text) {
        return parse_edge_list(text);
    }
    let mut gs = parse_graph6_lines(text)?;
    match gs.len() {
        1 => Ok(gs.pop().expect("one graph")),
        0 => Err(Error::parse(0, "no graph in input")),
        n => Err(Error::validation(format!("expected one graph, found {n}"))),
    }
}

/// Edge lists start with a decimal vertex count; graph6 bytes never include
/// ASCII digits.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.starts_with(|c: char| c.is_ascii_digit()))
}

/// Parse `order` on the first line and one `u v` pair per following line.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let body = line.trim_end_matches(['\n', '\r']);
        if body.trim().is_empty() || body.trim_start().starts_with('#') {
            continue;
        }
        let mut fields = Vec::new();
        let mut pos = 0;
        for tok in body.split_whitespace() {
            let at = pos + body[pos..].find(tok).expect("token is in its line");
            pos = at + tok.len();
            let v = tok
                .parse::<usize>()
                .map_err(|_| Error::parse(start + at, format!("{tok:?} is not a vertex number")))?;
            fields.push((v, start + at));
        }
        match (order, fields.as_slice()) {
            (None, [(n, at)]) => {
                if *n > MAX_ORDER {
                    return Err(Error::capacity(format!(
                        "order {n} at byte {at} exceeds the maximum of {MAX_ORDER}"
                    )));
                }
                order = Some(*n);
            }
            (None, _) => return Err(Error::parse(start, "first line must hold only the order")),
            (Some(n), [(u, at_u), (v, at_v)]) => {
                for (x, at) in [(u, at_u), (v, at_v)] {
                    if x >= &n {
                        return Err(Error::parse(
                            *at,
                            format!("vertex {x} is not below the order {n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(Error::parse(*at_u, format!("loop at vertex {u}")));
                }
                edges.push((*u, *v));
            }
            (Some(_), _) => return Err(Error::parse(start, "expected two vertex numbers")),
        }
    }
    let order = order.ok_or_else(|| Error::parse(text.len(), "missing order line"))?;
    Graph::new(order, edges)
}

/// Render `g` as an edge list: the order, then one `u v` line per edge.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s += &format!("{u} {v}\n");
    }
    s
}

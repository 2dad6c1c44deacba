//! Command-line front end.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::capacity::{self, closed_form_table, hz_bounds_for, lower_bound, row_label, sample, upper_bound, HzOptions};
use crate::error::{Error, Result};
use crate::graphs::{BruhatGraph, GraphDocument, QuantumBruhatGraph, WeightedCayleyGraph, DEFAULT_CAYLEY_CAP};
use crate::rational::{parse_rational_list, to_wire, Rational, RationalVector};
use crate::rootsystem::{Family, RootSystem};
use crate::verify::{self, VerifyConfig};
use crate::weyl::{WeylGroup, DEFAULT_GROUP_CAP};
use crate::W0Decomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphKind {
    Bruhat,
    Quantum,
    Cayley,
}

#[derive(Debug, Parser)]
#[command(name = "hzbounds", version, about = "Exact Hofer-Zehnder capacity bounds for coadjoint orbits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Root system family (A-G).
    #[arg(long = "type", global = true, value_name = "FAMILY")]
    pub family: Option<Family>,

    #[arg(long, global = true)]
    pub rank: Option<usize>,

    /// Comma-separated rationals, e.g. 3,2,1/2,0.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<String>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Largest Weyl group order that will be enumerated.
    #[arg(long, global = true, env = "BC_GROUP_CAP", default_value_t = DEFAULT_GROUP_CAP)]
    pub group_cap: u128,

    /// Largest n for the weighted Cayley graph of S_n.
    #[arg(long, global = true, default_value_t = DEFAULT_CAYLEY_CAP)]
    pub cayley_cap: usize,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List roots, coroots, heights and the highest root.
    Roots,
    /// Export the Bruhat, quantum Bruhat or weighted Cayley graph.
    Graph {
        #[arg(value_enum)]
        kind: GraphKind,
        /// Size of the symmetric group for the Cayley graph.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Lower and upper capacity bounds for one weight.
    Capacity,
    /// Closed-form table against the general formulas, as CSV.
    Table {
        /// Extra random dominant weights per row.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Run the property checks.
    Verify {
        /// Check names, comma separated or repeated. All checks when omitted.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
}

/// Result of a command: text to emit and whether embedded checks passed.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

impl Cli {
    fn root_system(&self) -> Result<RootSystem> {
        let family = self
            .family
            .ok_or_else(|| Error::Parse("--type is required".into()))?;
        let rank = self.rank.ok_or_else(|| Error::Parse("--rank is required".into()))?;
        RootSystem::build(family, rank)
    }

    fn lambda_values(&self) -> Result<Option<Vec<Rational>>> {
        self.lambda.as_deref().map(parse_rational_list).transpose()
    }

    fn format_or(&self, default: Format, allowed: &[Format]) -> Result<Format> {
        let f = self.format.unwrap_or(default);
        if allowed.contains(&f) {
            Ok(f)
        } else {
            let names: Vec<String> = allowed.iter().map(|a| format!("{a:?}").to_lowercase()).collect();
            Err(Error::UnknownFormat(format!("{f:?} (this command supports {})", names.join(", ")).to_lowercase()))
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Roots => cmd_roots(cli),
        Command::Graph { kind, n } => cmd_graph(cli, *kind, *n),
        Command::Capacity => cmd_capacity(cli),
        Command::Table { samples } => cmd_table(cli, *samples),
        Command::Verify { only, list } => cmd_verify(cli, only, *list),
    }
}

/// Parses arguments, runs, writes output; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| e.to_string()),
                None => std::io::stdout().write_all(out.text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return 2;
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[derive(Serialize)]
struct RootRecord {
    index: usize,
    root: Vec<String>,
    coroot: Vec<String>,
    positive: bool,
    simple: Option<usize>,
    coefficients: Vec<i32>,
    height: i32,
    coroot_coefficients: Vec<i32>,
    coroot_height: i32,
}

#[derive(Serialize)]
struct RootListing {
    r#type: String,
    rank: usize,
    ambient_dim: usize,
    positive_roots: usize,
    highest_root: Vec<String>,
    roots: Vec<RootRecord>,
}

fn cmd_roots(cli: &Cli) -> Result<Outcome> {
    let rs = cli.root_system()?;
    let format = cli.format_or(Format::Text, &[Format::Text, Format::Json, Format::Csv])?;
    let records: Vec<RootRecord> = (0..rs.num_roots())
        .map(|i| RootRecord {
            index: i,
            root: rs.root(i).to_wire(),
            coroot: rs.coroot(i).to_wire(),
            positive: rs.is_positive(i),
            simple: rs.simple_position(i).map(|p| p + 1),
            coefficients: rs.root_coefficients(i).to_vec(),
            height: rs.root_height(i),
            coroot_coefficients: rs.coroot_coefficients(i).to_vec(),
            coroot_height: rs.coroot_height(i),
        })
        .collect();
    let text = match format {
        Format::Json => {
            let listing = RootListing {
                r#type: rs.family().to_string(),
                rank: rs.rank(),
                ambient_dim: rs.ambient_dim(),
                positive_roots: rs.positive_roots().len(),
                highest_root: rs.root(rs.highest_root()).to_wire(),
                roots: records,
            };
            json(&listing)?
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "root", "coroot", "positive", "simple", "coefficients", "height", "coroot_height"])
                .map_err(csv_err)?;
            for r in &records {
                w.write_record([
                    r.index.to_string(),
                    r.root.join(" "),
                    r.coroot.join(" "),
                    r.positive.to_string(),
                    r.simple.map(|s| s.to_string()).unwrap_or_default(),
                    join_ints(&r.coefficients),
                    r.height.to_string(),
                    r.coroot_height.to_string(),
                ])
                .map_err(csv_err)?;
            }
            csv_string(w)?
        }
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "type {}: {} roots, |R+| = {}", rs.label(), rs.num_roots(), rs.positive_roots().len());
            let _ = writeln!(s, "highest root rho = {}", rs.describe_root(rs.highest_root()));
            let simple: Vec<String> = rs.simple().iter().map(|&a| rs.describe_root(a)).collect();
            let _ = writeln!(s, "simple roots: {}", simple.join(", "));
            for &a in rs.positive_roots() {
                let _ = writeln!(
                    s,
                    "  {:<28} coroot {:<28} ht {:>2}  coroot ht {:>2}  [{}]",
                    rs.describe_root(a),
                    crate::rational::format_in_basis(&rs.coroot(a)),
                    rs.root_height(a),
                    rs.coroot_height(a),
                    join_ints(rs.root_coefficients(a))
                );
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

fn join_ints(xs: &[i32]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn csv_err(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

fn render(doc: GraphDocument, format: Format) -> Result<String> {
    let doc = doc.sorted();
    let mut s = match format {
        Format::Json => doc.to_json()?,
        _ => doc.to_dot(),
    };
    if !s.ends_with('\n') {
        s.push('\n');
    }
    Ok(s)
}

fn cmd_graph(cli: &Cli, kind: GraphKind, n: Option<usize>) -> Result<Outcome> {
    let format = cli.format_or(Format::Dot, &[Format::Dot, Format::Json])?;
    if kind == GraphKind::Cayley {
        let lambda = match (cli.lambda_values()?, n) {
            (Some(l), Some(n)) if l.len() != n => {
                return Err(Error::DimensionMismatch { expected: n, got: l.len() })
            }
            (Some(l), _) => l,
            (None, Some(n)) => (0..n as i64).rev().map(crate::rational::int).collect(),
            (None, None) => return Err(Error::Parse("graph cayley needs --n or --lambda".into())),
        };
        let g = WeightedCayleyGraph::new(&lambda, cli.cayley_cap)?;
        return Ok(Outcome::ok(render(g.document(), format)?));
    }
    let rs = Arc::new(cli.root_system()?);
    let group = WeylGroup::generate(Arc::clone(&rs), cli.group_cap)?;
    let doc = match kind {
        GraphKind::Quantum => QuantumBruhatGraph::new(&group).document(),
        _ => match cli.lambda_values()? {
            Some(l) => {
                let lambda = capacity::WeightLambda::new(&rs, RationalVector(l))?;
                let subset = rs.stabilizer_subset(lambda.coords())?;
                BruhatGraph::new(&group, group.parabolic(&subset)?).document(Some(lambda.coords()))?
            }
            None => BruhatGraph::full(&group)?.document(None)?,
        },
    };
    Ok(Outcome::ok(render(doc, format)?))
}

fn cmd_capacity(cli: &Cli) -> Result<Outcome> {
    let format = cli.format_or(Format::Json, &[Format::Json, Format::Text])?;
    let rs = Arc::new(cli.root_system()?);
    let lambda = match cli.lambda_values()? {
        Some(l) => RationalVector(l),
        None => capacity::default_lambda(&rs),
    };
    let opts = HzOptions {
        group_cap: cli.group_cap,
        ..HzOptions::default()
    };
    let b = hz_bounds_for(rs, lambda, &opts)?;
    let report = b.report();
    let text = match format {
        Format::Json => json(&report)?,
        _ => {
            let mut s = String::new();
            let label = rs_label(&report);
            if label == report.group {
                let _ = writeln!(s, "{label}");
            } else {
                let _ = writeln!(s, "{label} ({})", report.group);
            }
            let coords: Vec<String> = b.lambda.coords().coords().iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "lambda        = ({})", coords.join(", "));
            if report.lambda_projected {
                let _ = writeln!(s, "                (projected to the root span)");
            }
            let _ = writeln!(s, "lower bound   = {}   (witness alpha_{})", b.lower, report.witness_simple);
            let _ = writeln!(s, "upper bound   = {}", b.upper);
            if let Some(e) = &b.exact {
                let _ = writeln!(s, "exact (U(n))  = {}", e);
            }
            let roots: Vec<String> = b.decomposition_vectors.iter().map(crate::rational::format_in_basis).collect();
            let _ = writeln!(s, "w0 = product of reflections in: {}", roots.join(", "));
            if let Some(d) = &b.d_min_degree {
                let _ = writeln!(s, "d_min(w0, e)  = {d}");
            }
            if let Some(a) = &b.min_path_area {
                let _ = writeln!(s, "min path area = {}", a);
            }
            let flag = |x: bool| if x { "yes" } else { "no" };
            let _ = writeln!(
                s,
                "sharp: {}  ratio ok: {}  table match: {}  d_min consistent: {}",
                flag(report.checks.sharp),
                flag(report.checks.ratio_ok),
                flag(report.checks.table_match),
                report.checks.dmin_consistent.map(flag).unwrap_or("not computed")
            );
            if let Some(note) = &report.note {
                let _ = writeln!(s, "note: {note}");
            }
            s
        }
    };
    Ok(Outcome {
        text,
        ok: b.all_checks_pass(),
    })
}

fn rs_label(r: &capacity::CapacityReport) -> String {
    format!("{}{}", r.r#type, r.rank)
}

/// Default table rows: A2..A6, B2..B6, C2..C6, D3..D6, E6, E7, E8, F4, G2.
pub fn table_rows() -> Vec<(Family, usize)> {
    verify::catalogue()
}

fn cmd_table(cli: &Cli, samples: usize) -> Result<Outcome> {
    cli.format_or(Format::Csv, &[Format::Csv])?;
    let rows = match (cli.family, cli.rank) {
        (Some(f), Some(r)) => vec![(f, r)],
        (Some(f), None) => table_rows().into_iter().filter(|&(g, _)| g == f).collect(),
        (None, _) => table_rows(),
    };
    let given = cli.lambda_values()?;
    if given.is_some() && rows.len() != 1 {
        return Err(Error::Parse("--lambda in table needs --type and --rank".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "type",
        "rank",
        "group",
        "lambda",
        "lower_closed_form",
        "lower_first_principles",
        "upper_closed_form",
        "upper_first_principles",
        "exact",
        "lower_match",
        "upper_match",
        "sharp",
    ])
    .map_err(csv_err)?;
    let mut all_match = true;
    for (f, r) in rows {
        let rs = RootSystem::build(f, r)?;
        let dec = W0Decomposition::for_root_system(&rs)?;
        let mut weights = vec![match &given {
            Some(l) => RationalVector(l.clone()),
            None => capacity::default_lambda(&rs),
        }];
        for _ in 0..samples {
            weights.push(sample::dominant(&rs, &mut rng, 0, 9)?);
        }
        for lambda in weights {
            let l = capacity::WeightLambda::new(&rs, lambda)?;
            let cf = closed_form_table(&rs, &l)?;
            let lo = lower_bound(&rs, &l, &dec)?.value;
            let up = upper_bound(&rs, &l, &dec)?;
            let exact = match f {
                Family::A => to_wire(&capacity::unitary_capacity(l.coords().coords())?),
                _ => String::new(),
            };
            let (lm, um) = (cf.lower == lo, cf.upper == up);
            all_match &= lm && um;
            w.write_record([
                f.to_string(),
                r.to_string(),
                row_label(f, r),
                l.coords().to_wire().join(" "),
                to_wire(&cf.lower),
                to_wire(&lo),
                to_wire(&cf.upper),
                to_wire(&up),
                exact,
                lm.to_string(),
                um.to_string(),
                (lo == up).to_string(),
            ])
            .map_err(csv_err)?;
        }
    }
    Ok(Outcome {
        text: csv_string(w)?,
        ok: all_match,
    })
}

#[derive(Serialize)]
struct VerifyLine {
    name: String,
    passed: bool,
    millis: u128,
    detail: String,
}

fn cmd_verify(cli: &Cli, only: &[String], list: bool) -> Result<Outcome> {
    let format = cli.format_or(Format::Text, &[Format::Text, Format::Json])?;
    if list {
        let mut s = String::new();
        for c in verify::CHECKS {
            let _ = writeln!(s, "{:<16} {}", c.name, c.summary);
        }
        return Ok(Outcome::ok(s));
    }
    let only_type = match (cli.family, cli.rank) {
        (Some(f), Some(r)) => {
            f.validate_rank(r)?;
            Some((f, r))
        }
        (None, None) => None,
        _ => return Err(Error::Parse("verify needs both --type and --rank, or neither".into())),
    };
    let cfg = VerifyConfig {
        seed: cli.seed,
        only_type,
        group_cap: cli.group_cap,
        ..VerifyConfig::default()
    };
    let results = verify::run_checks(only, &cfg)?;
    let ok = results.iter().all(|r| r.passed);
    let text = match format {
        Format::Json => {
            let lines: Vec<VerifyLine> = results
                .iter()
                .map(|r| VerifyLine {
                    name: r.name.into(),
                    passed: r.passed,
                    millis: r.elapsed.as_millis(),
                    detail: r.detail.clone(),
                })
                .collect();
            json(&lines)?
        }
        _ => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(
                    s,
                    "{} {:<16} {:>8.3}s  {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.elapsed.as_secs_f64(),
                    r.detail
                );
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            let _ = writeln!(s, "{} checks, {} failed", results.len(), failed);
            s
        }
    };
    Ok(Outcome { text, ok })
}

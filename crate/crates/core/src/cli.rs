//! Command-line front end: `verify`, `verify-all`, `list`, `table`, `bench`.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::partitions::{self, ENUMERATION_LIMIT};
use crate::registry::{self, Status, Tag, VerificationReport};
use crate::series::LaurentSeries;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qpv", version, about = "Exact q-series identity verification")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "QPV_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the given identities (by id or tag).
    Verify {
        #[arg(long)]
        id: Vec<String>,
        #[arg(long, value_parser = parse_tag)]
        tag: Vec<Tag>,
        /// Truncation order; defaults to each identity's own.
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        order: Option<i64>,
    },
    /// Verify every identity, optionally filtered by tag.
    VerifyAll {
        #[arg(long, value_parser = parse_tag)]
        tag: Vec<Tag>,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        order: Option<i64>,
    },
    /// List registered identities.
    List {
        #[arg(long, value_parser = parse_tag)]
        tag: Vec<Tag>,
    },
    /// Print NT(r,m,n) and M_ω(r,m,n) for n ≤ nmax.
    Table {
        #[arg(long, value_enum)]
        stat: Option<Stat>,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        m: i64,
        /// Residue; all residues when omitted.
        #[arg(long)]
        r: Option<i64>,
        #[arg(long, default_value_t = 60)]
        nmax: u32,
    },
    /// Time series multiplication and registry verification.
    Bench {
        #[arg(long, value_parser = parse_tag)]
        tag: Vec<Tag>,
        /// Skip the registry timings.
        #[arg(long)]
        no_verify: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Nt,
    Mw,
}

fn parse_tag(s: &str) -> Result<Tag, String> {
    s.parse().map_err(|e: crate::SeriesError| e.to_string())
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
        }
    };
    execute(&config)
}

pub fn execute(config: &RunConfig) -> i32 {
    if let Some(jobs) = config.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return EXIT_USAGE;
        }
        // only the first configuration in a process takes effect
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let mut out = std::io::stdout().lock();
    let code = match &config.command {
        Command::Verify { id, tag, order } => cmd_verify(&mut out, id, tag, *order, config.json),
        Command::VerifyAll { tag, order } => {
            emit_reports(&mut out, registry::verify_all(*order, tag), config.json)
        }
        Command::List { tag } => cmd_list(&mut out, tag, config.json),
        Command::Table { stat, m, r, nmax } => {
            cmd_table(&mut out, *stat, *m, *r, *nmax, config.json)
        }
        Command::Bench { tag, no_verify } => cmd_bench(&mut out, tag, *no_verify, config.json),
    };
    let _ = out.flush();
    code
}

fn cmd_verify(
    out: &mut impl Write,
    ids: &[String],
    tags: &[Tag],
    order: Option<i64>,
    json: bool,
) -> i32 {
    if ids.is_empty() && tags.is_empty() {
        eprintln!("error: verify needs --id or --tag (use verify-all for everything)");
        return EXIT_USAGE;
    }
    let mut reports = Vec::new();
    for id in ids {
        let identity = match registry::get(id) {
            Ok(i) => i,
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        };
        let o = identity.effective_order(order);
        reports.push(
            identity
                .verify(o)
                .unwrap_or_else(|e| error_report(identity.id, o, &e)),
        );
    }
    if !tags.is_empty() {
        reports.extend(registry::verify_all(order, tags));
    }
    emit_reports(out, reports, json)
}

fn error_report(id: &str, order: i64, e: &crate::VerifyError) -> VerificationReport {
    VerificationReport {
        id: id.to_string(),
        order,
        status: Status::Error,
        first_mismatch: None,
        ms: 0.0,
        error: Some(e.to_string()),
    }
}

fn emit_reports(out: &mut impl Write, reports: Vec<VerificationReport>, json: bool) -> i32 {
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        );
    } else {
        for r in &reports {
            let _ = writeln!(out, "{r}");
        }
        let passed = reports.iter().filter(|r| r.passed()).count();
        let _ = writeln!(out, "{passed}/{} passed", reports.len());
    }
    if reports.iter().any(|r| r.status == Status::Error) {
        EXIT_USAGE
    } else if reports.iter().any(|r| r.status == Status::Fail) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

fn cmd_list(out: &mut impl Write, tags: &[Tag], json: bool) -> i32 {
    let list: Vec<_> = registry::list_identities()
        .into_iter()
        .filter(|m| tags.is_empty() || m.tags.iter().any(|t| tags.contains(t)))
        .collect();
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&list).expect("metadata serializes")
        );
    } else {
        for m in &list {
            let tags: Vec<_> = m.tags.iter().map(|t| t.as_str()).collect();
            let _ = writeln!(
                out,
                "{:<16} {:>4}  {:<20} {}",
                m.id,
                m.default_order,
                tags.join(","),
                m.formula
            );
        }
    }
    EXIT_PASS
}

#[derive(Debug, Serialize)]
struct TableRow {
    n: u32,
    r: i64,
    m: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    nt: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mw: Option<u64>,
}

fn cmd_table(
    out: &mut impl Write,
    stat: Option<Stat>,
    m: i64,
    r: Option<i64>,
    nmax: u32,
    json: bool,
) -> i32 {
    if nmax > ENUMERATION_LIMIT {
        eprintln!(
            "error: nmax = {nmax} exceeds the enumeration budget ({ENUMERATION_LIMIT}); \
             use the series identities (verify) for larger n"
        );
        return EXIT_USAGE;
    }
    if let Some(r) = r {
        if !(0..m).contains(&r) {
            eprintln!("error: need 0 ≤ r < m, got r = {r}, m = {m}");
            return EXIT_USAGE;
        }
    }
    let aggs = partitions::aggregates_upto(nmax);
    let residues: Vec<i64> = match r {
        Some(r) => vec![r],
        None => (0..m).collect(),
    };
    let want_nt = stat != Some(Stat::Mw);
    let want_mw = stat != Some(Stat::Nt);
    let rows: Vec<TableRow> = aggs
        .iter()
        .enumerate()
        .flat_map(|(n, a)| {
            residues.iter().map(move |&r| TableRow {
                n: n as u32,
                r,
                m,
                nt: want_nt.then(|| a.nt(r, m)),
                mw: want_mw.then(|| a.mw(r, m)),
            })
        })
        .collect();
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&rows).expect("rows serialize")
        );
        return EXIT_PASS;
    }
    let mut header = vec!["n", "r", "m"];
    if want_nt {
        header.push("nt");
    }
    if want_mw {
        header.push("mw");
    }
    let _ = writeln!(out, "{}", header.join("\t"));
    for row in rows {
        let mut cols = vec![row.n.to_string(), row.r.to_string(), row.m.to_string()];
        cols.extend(row.nt.map(|v| v.to_string()));
        cols.extend(row.mw.map(|v| v.to_string()));
        let _ = writeln!(out, "{}", cols.join("\t"));
    }
    EXIT_PASS
}

#[derive(Debug, Serialize)]
struct BenchResult {
    name: String,
    ms: f64,
}

fn cmd_bench(out: &mut impl Write, tags: &[Tag], no_verify: bool, json: bool) -> i32 {
    let mut results = Vec::new();
    for order in [500i64, 1000, 2000] {
        let a = crate::products::pochhammer(1, 1, 1, order).expect("J_1 evaluates");
        let b = crate::products::phi(order);
        let inv = a.invert().expect("J_1 is invertible");
        let start = Instant::now();
        let prod: LaurentSeries = &inv * &(&b * &b);
        std::hint::black_box(prod);
        results.push(BenchResult {
            name: format!("mul order {order}"),
            ms: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    if !no_verify {
        let start = Instant::now();
        let reports = registry::verify_all(None, tags);
        let total = start.elapsed().as_secs_f64() * 1e3;
        for r in &reports {
            results.push(BenchResult {
                name: format!("verify {} order {}", r.id, r.order),
                ms: r.ms,
            });
        }
        results.push(BenchResult {
            name: format!("verify_all ({} identities)", reports.len()),
            ms: total,
        });
    }
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&results).expect("timings serialize")
        );
    } else {
        for r in &results {
            let _ = writeln!(out, "{:<40} {:>10.3} ms", r.name, r.ms);
        }
    }
    EXIT_PASS
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or data error, 2 invariant violation or
//! expectation mismatch. Errors go to stderr as a single `error[kind]: ...` line.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use codeglab_core::classify;
use codeglab_core::{arith, chartab, ClassData, PermGroup};
use serde::Serialize;

use crate::corpus::{self, RunOptions};
use crate::error::{Error, Result};
use crate::manifest::Manifest;
use crate::report::{self, Report, Timings};
use crate::source;

pub const WORKERS_ENV: &str = "CODEGLAB_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "codeglab", version, about = "Codegree tests for permutation groups")]
pub struct Cli {
    /// Worker threads (default: $CODEGLAB_WORKERS, then available parallelism)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Stop at the first failing pair
    #[arg(long, global = true)]
    fail_fast: bool,
    /// Write the output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Character table plus both classifications for each prime
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Prime to test (repeatable; default: every prime divisor of |G|)
        #[arg(long = "prime")]
        primes: Vec<String>,
        /// Record wall-clock timings in the report
        #[arg(long)]
        timings: bool,
    },
    /// Dump the character table
    Chartab {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Structural classification only (no character table)
    Classify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long = "prime")]
        primes: Vec<String>,
    },
    /// Cross-check every entry of a corpus manifest
    VerifyCorpus {
        manifest: PathBuf,
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SourceArgs {
    /// Builtin group, e.g. symmetric:4 or gamma_family:3,1
    #[arg(long)]
    builtin: Option<String>,
    /// Generators in .pgr format
    #[arg(long)]
    file: Option<PathBuf>,
}

impl SourceArgs {
    fn id(&self) -> String {
        match (&self.builtin, &self.file) {
            (Some(b), _) => b.clone(),
            (_, Some(f)) => f
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| f.display().to_string()),
            _ => unreachable!(),
        }
    }

    fn build(&self) -> Result<PermGroup> {
        match (&self.builtin, &self.file) {
            (Some(b), _) => source::builtin(b),
            (_, Some(f)) => source::group_from_file(f),
            _ => unreachable!(),
        }
    }
}

fn parse_primes(raw: &[String]) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for s in raw {
        match s.parse::<u64>() {
            Ok(p) if arith::is_prime(p) => out.push(p),
            _ => return Err(Error::Usage(format!("prime expected, got {s:?}"))),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn primes_or_divisors(given: Vec<u64>, g: &PermGroup) -> Result<Vec<u64>> {
    if !given.is_empty() {
        return Ok(given);
    }
    let ps: Vec<u64> = arith::factorize(g.order()).into_iter().map(|(p, _)| p).collect();
    if ps.is_empty() {
        return Err(Error::Usage("trivial group: give --prime explicitly".into()));
    }
    Ok(ps)
}

/// Flag, then environment, then available parallelism.
pub fn resolve_workers(flag: Option<usize>, env: Option<&str>) -> Result<usize> {
    let n = match (flag, env) {
        (Some(n), _) => n,
        (None, Some(s)) => s
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("{WORKERS_ENV} must be a positive integer, got {s:?}")))?,
        (None, None) => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    if n == 0 {
        return Err(Error::Usage("worker count must be at least 1".into()));
    }
    Ok(n)
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.clone(),
            source,
        }),
        None => stdout.write_all(text.as_bytes()).map_err(|source| Error::Io {
            path: Path::new("<stdout>").into(),
            source,
        }),
    }
}

#[derive(Serialize)]
struct StructuralRecord {
    group: String,
    p: u64,
    ti: bool,
    cases_a: Vec<String>,
    cases_c: Vec<String>,
    params: std::collections::BTreeMap<String, u64>,
    notes: Vec<String>,
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let first = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            let _ = writeln!(stderr, "error[usage]: {first}");
            return 1;
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{}", e.one_line());
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let env = std::env::var(WORKERS_ENV).ok();
    let workers = resolve_workers(cli.workers, env.as_deref())?;
    match cli.command {
        Command::Analyze {
            source,
            primes,
            timings,
        } => {
            let given = parse_primes(&primes)?;
            let id = source.id();
            let g = source.build()?;
            let primes = primes_or_divisors(given, &g)?;
            let t = Instant::now();
            let table = chartab::dixon_schneider(&ClassData::new(&g)?)?;
            let table_time = t.elapsed();
            let mut reports = Vec::new();
            let mut code = 0;
            for p in primes {
                let t = Instant::now();
                let r = classify::classify(&id, &g, &table, p)?;
                let tm = timings.then(|| Timings {
                    table_ms: table_time.as_secs_f64() * 1e3,
                    classify_ms: t.elapsed().as_secs_f64() * 1e3,
                });
                if let Err(e) = r.check() {
                    let _ = writeln!(stderr, "{}", Error::from(e).one_line());
                    code = 2;
                }
                reports.push(Report::new(&r, tm));
                if code != 0 && cli.fail_fast {
                    break;
                }
            }
            emit(&cli.out, &report::to_json(&mut reports, |r| (r.group.clone(), r.p)), stdout)?;
            Ok(code)
        }
        Command::Chartab { source } => {
            let g = source.build()?;
            g.check_cap()?;
            let table = chartab::dixon_schneider(&ClassData::new(&g)?)?;
            emit(&cli.out, &table.dump(), stdout)?;
            Ok(0)
        }
        Command::Classify { source, primes } => {
            let given = parse_primes(&primes)?;
            let id = source.id();
            let g = source.build()?;
            let mut records = Vec::new();
            for p in primes_or_divisors(given, &g)? {
                let v = classify::structural_classify(&g, p)?;
                records.push(StructuralRecord {
                    group: id.clone(),
                    p,
                    ti: classify::has_abelian_ti_sylow(&g, p)?,
                    cases_a: v.cases_a.iter().map(|c| c.label().to_string()).collect(),
                    cases_c: v.cases_c.iter().map(|c| c.label().to_string()).collect(),
                    params: v.params,
                    notes: v.notes,
                });
            }
            emit(&cli.out, &report::to_json(&mut records, |r| (r.group.clone(), r.p)), stdout)?;
            Ok(0)
        }
        Command::VerifyCorpus { manifest, timings } => {
            let m = Manifest::load(&manifest)?;
            let outcome = corpus::run(
                &m,
                &RunOptions {
                    workers,
                    fail_fast: cli.fail_fast,
                    timings,
                },
            )?;
            let _ = stdout.write_all(outcome.matrix().as_bytes());
            if let Some(path) = &cli.out {
                emit(&Some(path.clone()), &outcome.json(), stdout)?;
            }
            for e in outcome.entries.iter().filter_map(|e| e.error.as_ref()) {
                let _ = writeln!(stderr, "{}", e.one_line());
            }
            Ok(outcome.exit_code())
        }
    }
}

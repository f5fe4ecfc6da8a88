//! Corpus verification: both sides of the classification on every manifest
//! entry, fanned out over a worker pool.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use codeglab_core::chartab::{self, CharacterTable};
use codeglab_core::classify;
use codeglab_core::{ClassData, PermGroup};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::manifest::{Check, Entry, Manifest};
use crate::report::{self, CorpusRecord, Report, Timings};

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub workers: usize,
    pub fail_fast: bool,
    pub timings: bool,
}

/// Problems found on one `(group, p)` pair.
#[derive(Clone, Debug, Default)]
pub struct Problems {
    pub violations: Vec<String>,
    pub mismatches: Vec<String>,
}

impl Problems {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty() && self.mismatches.is_empty()
    }

    fn all(&self) -> Vec<String> {
        let v = self.violations.iter().map(|s| format!("violation: {s}"));
        let m = self.mismatches.iter().map(|s| format!("mismatch: {s}"));
        v.chain(m).collect()
    }
}

#[derive(Debug)]
pub struct PairOutcome {
    pub report: Report,
    pub problems: Problems,
    /// Present when the pair is direct-`H_p`.
    pub hereditary: Option<classify::HereditaryOutcome>,
    /// Whether `|P| = p` for a case-(2) match with nonsolvable `N'`.
    pub case2_sylow_is_prime: Option<bool>,
    /// Whether some codegree is divisible by `p`, when `p` divides `|G|`.
    pub p_divides_some_codegree: Option<bool>,
}

#[derive(Debug)]
pub struct EntryOutcome {
    pub id: String,
    pub pairs: Vec<PairOutcome>,
    pub error: Option<Error>,
    pub elapsed: Duration,
}

#[derive(Debug)]
pub struct CorpusOutcome {
    /// Sorted by id.
    pub entries: Vec<EntryOutcome>,
    pub elapsed: Duration,
}

impl CorpusOutcome {
    pub fn pairs(&self) -> impl Iterator<Item = &PairOutcome> {
        self.entries.iter().flat_map(|e| &e.pairs)
    }

    /// 2 on any violation or mismatch, otherwise 1 on any entry error, otherwise 0.
    pub fn exit_code(&self) -> i32 {
        let failed = self.pairs().any(|p| !p.problems.is_empty())
            || self.entries.iter().any(|e| e.error.as_ref().is_some_and(|x| x.exit_code() == 2));
        if failed {
            2
        } else if self.entries.iter().any(|e| e.error.is_some()) {
            1
        } else {
            0
        }
    }

    pub fn records(&self) -> Vec<CorpusRecord> {
        self.pairs()
            .map(|p| CorpusRecord {
                report: p.report.clone(),
                status: if p.problems.is_empty() { "pass" } else { "fail" },
                problems: p.problems.all(),
            })
            .collect()
    }

    /// The sorted JSON array of corpus records.
    pub fn json(&self) -> String {
        report::to_json(&mut self.records(), |r| (r.report.group.clone(), r.report.p))
    }

    /// Human-readable pass/fail matrix with timings.
    pub fn matrix(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            if let Some(err) = &e.error {
                out.push_str(&format!("{:<14} ERROR {}\n", e.id, err.one_line()));
            }
            for p in &e.pairs {
                let r = &p.report;
                out.push_str(&format!(
                    "{:<14} p={:<3} {} hp={:<5} hp*={:<5} A={{{}}} C={{{}}}\n",
                    e.id,
                    r.p,
                    if p.problems.is_empty() { "pass" } else { "FAIL" },
                    r.direct_hp,
                    r.direct_hp_star,
                    r.cases_a.join(","),
                    r.cases_c.join(","),
                ));
                for s in p.problems.all() {
                    out.push_str(&format!("    {s}\n"));
                }
            }
            out.push_str(&format!("{:<14} {:.2}s\n", e.id, e.elapsed.as_secs_f64()));
        }
        let n = self.pairs().count();
        let bad = self.pairs().filter(|p| !p.problems.is_empty()).count();
        out.push_str(&format!(
            "{} pairs, {} failed, {} entry errors, {:.2}s\n",
            n,
            bad,
            self.entries.iter().filter(|e| e.error.is_some()).count(),
            self.elapsed.as_secs_f64()
        ));
        out
    }
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e3 * 1e3).round() / 1e3
}

/// Classifies one pair against a precomputed table and runs every check.
pub fn check_pair(
    id: &str,
    g: &PermGroup,
    classes: &ClassData,
    table: &CharacterTable,
    check: &Check,
    table_time: Option<Duration>,
) -> Result<PairOutcome> {
    let p = check.p;
    let t = Instant::now();
    let r = classify::classify(id, g, table, p)?;
    let mut problems = Problems {
        violations: r.violations(),
        ..Problems::default()
    };
    let hereditary = if r.direct_hp.holds {
        let h = classify::hereditary_checks(g, classes, p)?;
        problems.violations.extend(h.failures.iter().cloned());
        Some(h)
    } else {
        None
    };
    let case2_sylow_is_prime = classify::nonsolvable_case2_sylow_is_prime(g, p, &r.structural)?;
    if case2_sylow_is_prime == Some(false) {
        problems
            .violations
            .push("case 2 with nonsolvable N' but |P| != p".into());
    }
    let p_divides_some_codegree = (g.order() % p == 0).then(|| table.codegrees().iter().any(|c| c % p == 0));
    if p_divides_some_codegree == Some(false) {
        problems.violations.push("no codegree divisible by p".into());
    }
    let timings = table_time.map(|tt| Timings {
        table_ms: ms(tt),
        classify_ms: ms(t.elapsed()),
    });
    let report = Report::new(&r, timings);
    let m = &mut problems.mismatches;
    if report.direct_hp != check.direct_hp {
        m.push(format!("direct_hp = {}, expected {}", report.direct_hp, check.direct_hp));
    }
    if let Some(star) = check.direct_hp_star {
        if report.direct_hp_star != star {
            m.push(format!("direct_hp_star = {}, expected {star}", report.direct_hp_star));
        }
    }
    if r.structural.cases_a != check.expected_cases_a() {
        m.push(format!("cases_a = {:?}, expected {:?}", report.cases_a, check.cases_a));
    }
    if let Some(c) = check.expected_cases_c() {
        if r.structural.cases_c != c {
            m.push(format!("cases_c = {:?}, expected {:?}", report.cases_c, check.cases_c.as_ref().unwrap()));
        }
    }
    Ok(PairOutcome {
        report,
        problems,
        hereditary,
        case2_sylow_is_prime,
        p_divides_some_codegree,
    })
}

fn run_entry(entry: &Entry, opts: &RunOptions, stop: &AtomicBool) -> EntryOutcome {
    let t = Instant::now();
    let mut pairs = Vec::new();
    let result = (|| -> Result<()> {
        let g = entry.build()?;
        let classes = ClassData::new(&g)?;
        let table = chartab::dixon_schneider(&classes)?;
        let tt = opts.timings.then(|| t.elapsed());
        for check in &entry.check {
            if opts.fail_fast && stop.load(Ordering::Relaxed) {
                break;
            }
            let pair = check_pair(&entry.id, &g, &classes, &table, check, tt)?;
            if !pair.problems.is_empty() {
                stop.store(true, Ordering::Relaxed);
            }
            pairs.push(pair);
        }
        Ok(())
    })();
    let error = result.err();
    if error.is_some() {
        stop.store(true, Ordering::Relaxed);
    }
    EntryOutcome {
        id: entry.id.clone(),
        pairs,
        error,
        elapsed: t.elapsed(),
    }
}

/// Runs every entry on a pool of `opts.workers` threads; the outcome is
/// sorted by id regardless of scheduling.
pub fn run(manifest: &Manifest, opts: &RunOptions) -> Result<CorpusOutcome> {
    if opts.workers == 0 {
        return Err(Error::Usage("worker count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::Usage(format!("thread pool: {e}")))?;
    let stop = AtomicBool::new(false);
    let t = Instant::now();
    let mut entries: Vec<EntryOutcome> = pool.install(|| {
        manifest
            .group
            .par_iter()
            .filter_map(|e| {
                if opts.fail_fast && stop.load(Ordering::Relaxed) {
                    None
                } else {
                    Some(run_entry(e, opts, &stop))
                }
            })
            .collect()
    });
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    for e in &mut entries {
        e.pairs.sort_by_key(|p| p.report.p);
    }
    Ok(CorpusOutcome {
        entries,
        elapsed: t.elapsed(),
    })
}

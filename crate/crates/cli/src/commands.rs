//! Command implementations.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use maxab_core::{
    run_checks, standard_corpus, FiniteGroup, SuiteOptions, TheoremId, TheoremReport, Verdict,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::CliError;
use crate::manifest::{load_catalog, read_manifest, slug, write_catalog, MANIFEST};
use crate::report::AnalysisReport;
use crate::spec::GroupSpec;
use crate::{AnalyzeArgs, CatalogArgs, CheckArgs, Command, Format, OutputArgs, VerifyArgs};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok,
    Error,
    Failure,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Ok => 0,
            ExitStatus::Error => 1,
            ExitStatus::Failure => 2,
        }
    }
}

pub fn execute(command: Command) -> Result<ExitStatus, CliError> {
    match command {
        Command::Analyze(args) => analyze(&args),
        Command::Verify(args) => verify(&args),
        Command::Catalog(args) => catalog(&args).map(|_| ExitStatus::Ok),
    }
}

/// Parses a comma-separated theorem list; `t2` expands to its first three
/// parts and `all` to every theorem. Duplicates are dropped and the result
/// follows the canonical theorem order.
pub fn parse_theorems(list: &str) -> Result<Vec<TheoremId>, CliError> {
    use TheoremId::*;
    let mut set = BTreeSet::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if token.eq_ignore_ascii_case("all") {
            set.extend(TheoremId::ALL);
        } else if token.eq_ignore_ascii_case("t2") {
            set.extend([T2i, T2ii, T2iii]);
        } else {
            let t = TheoremId::parse(token).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown theorem `{token}`; expected a comma-separated list of t2i, t2ii, t2iii, t2, t2iv, t2v, t4, t5, t6, t7, cover or all"
                ))
            })?;
            set.insert(t);
        }
    }
    if set.is_empty() {
        return Err(CliError::Usage(
            "--theorems needs at least one theorem".into(),
        ));
    }
    Ok(set.into_iter().collect())
}

fn suite_options(check: &CheckArgs) -> SuiteOptions {
    let mut opts = SuiteOptions {
        oracle: check.oracle,
        ..Default::default()
    };
    opts.partition.seed = check.seed;
    opts
}

fn emit(output: &OutputArgs, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::io(Path::new("<stdout>"), e))
        }
    }
}

/// A self-contained record of failed checks: the table they refer to and
/// the full reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleFile {
    pub schema: u32,
    pub group: String,
    pub order: usize,
    /// Row-major Cayley table with the identity at 0; report indices refer
    /// to it.
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub reports: Vec<TheoremReport>,
}

impl CounterexampleFile {
    pub fn new(g: &FiniteGroup, reports: Vec<TheoremReport>) -> Self {
        CounterexampleFile {
            schema: SCHEMA,
            group: g.name().to_string(),
            order: g.order(),
            table: g.rows(),
            labels: g.labels().map(<[String]>::to_vec),
            reports,
        }
    }

    /// Rebuilds the group from the stored table.
    pub fn group(&self) -> Result<FiniteGroup, maxab_core::GroupError> {
        FiniteGroup::from_table(self.group.clone(), &self.table, self.labels.clone())
    }
}

/// Writes a counterexample file into `dir` under a name not yet in
/// `taken`, and returns its path.
pub fn write_counterexample(
    dir: &Path,
    file: &CounterexampleFile,
    taken: &mut BTreeSet<String>,
) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    let base = format!("{:03}-{}", file.order, slug(&file.group));
    let mut name = format!("{base}.json");
    let mut k = 2;
    while !taken.insert(name.clone()) {
        name = format!("{base}-{k}.json");
        k += 1;
    }
    let path = dir.join(name);
    let mut json = serde_json::to_string_pretty(file)?;
    json.push('\n');
    fs::write(&path, json).map_err(|e| CliError::io(&path, e))?;
    Ok(path)
}

pub fn analyze(args: &AnalyzeArgs) -> Result<ExitStatus, CliError> {
    let g = GroupSpec::parse(&args.spec)?.resolve()?;
    let report = AnalysisReport::build(&g, &suite_options(&args.check), args.timings);
    let text = match args.output.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    emit(&args.output, &text)?;
    let failures: Vec<TheoremReport> = report.failures().into_iter().cloned().collect();
    if !failures.is_empty() {
        let file = CounterexampleFile::new(&g, failures);
        let path =
            write_counterexample(&args.check.counterexample_dir, &file, &mut BTreeSet::new())?;
        eprintln!("counterexample written to {}", path.display());
    }
    Ok(
        if report.has_failures() || !report.oracle_mismatches.is_empty() {
            ExitStatus::Failure
        } else {
            ExitStatus::Ok
        },
    )
}

pub fn catalog(args: &CatalogArgs) -> Result<crate::manifest::Manifest, CliError> {
    let entries = standard_corpus(args.max_order);
    let manifest = write_catalog(&args.out, args.max_order, &entries)?;
    eprintln!(
        "wrote {} groups of order <= {} to {}",
        manifest.entries.len(),
        args.max_order,
        args.out.display()
    );
    Ok(manifest)
}

/// The corpus for `verify`: from `dir` when given (generated there first
/// if it holds no manifest), otherwise built in memory.
pub fn load_corpus(dir: Option<&Path>, max_order: usize) -> Result<Vec<FiniteGroup>, CliError> {
    let Some(dir) = dir else {
        return Ok(standard_corpus(max_order)
            .into_iter()
            .map(|e| e.group)
            .collect());
    };
    if !dir.join(MANIFEST).exists() {
        let empty = match fs::read_dir(dir) {
            Ok(mut it) => it.next().is_none(),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => true,
            Err(e) => return Err(CliError::io(dir, e)),
        };
        if !empty {
            return Err(CliError::Usage(format!(
                "{} is not empty and has no {MANIFEST}; refusing to write a corpus there",
                dir.display()
            )));
        }
        eprintln!("corpus directory {} is empty; generating it", dir.display());
        write_catalog(dir, max_order, &standard_corpus(max_order))?;
    }
    let manifest = read_manifest(dir)?;
    if manifest.max_order < max_order {
        eprintln!(
            "warning: corpus in {} only covers orders up to {}",
            dir.display(),
            manifest.max_order
        );
    }
    load_catalog(dir, &manifest, max_order)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCounts {
    pub theorem: TheoremId,
    pub holds: usize,
    pub not_applicable: usize,
    pub fails: usize,
    pub sampled: usize,
    pub skipped: usize,
}

impl TheoremCounts {
    fn new(theorem: TheoremId) -> Self {
        TheoremCounts {
            theorem,
            holds: 0,
            not_applicable: 0,
            fails: 0,
            sampled: 0,
            skipped: 0,
        }
    }

    fn add(&mut self, v: Verdict) {
        *match v {
            Verdict::Holds => &mut self.holds,
            Verdict::NotApplicable => &mut self.not_applicable,
            Verdict::Fails => &mut self.fails,
            Verdict::Sampled => &mut self.sampled,
            Verdict::Skipped => &mut self.skipped,
        } += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub group: String,
    pub order: usize,
    pub theorem: TheoremId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample_file: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub schema: u32,
    pub groups: usize,
    pub theorems: Vec<TheoremCounts>,
    pub failures: Vec<Failure>,
    pub oracle_mismatches: Vec<String>,
}

impl VerifySummary {
    pub fn total_fails(&self) -> usize {
        self.theorems.iter().map(|c| c.fails).sum()
    }

    pub fn counts(&self, t: TheoremId) -> Option<&TheoremCounts> {
        self.theorems.iter().find(|c| c.theorem == t)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "verified {} groups", self.groups).unwrap();
        writeln!(
            out,
            "{:<8} {:>7} {:>15} {:>7} {:>8} {:>8}",
            "theorem", "HOLDS", "NOT_APPLICABLE", "FAILS", "SAMPLED", "SKIPPED"
        )
        .unwrap();
        for c in &self.theorems {
            writeln!(
                out,
                "{:<8} {:>7} {:>15} {:>7} {:>8} {:>8}",
                c.theorem.as_str(),
                c.holds,
                c.not_applicable,
                c.fails,
                c.sampled,
                c.skipped
            )
            .unwrap();
        }
        for f in &self.failures {
            write!(
                out,
                "FAILS {} on {} (order {})",
                f.theorem, f.group, f.order
            )
            .unwrap();
            match &f.counterexample_file {
                Some(p) => writeln!(out, ": counterexample in {p}"),
                None => writeln!(out),
            }
            .unwrap();
        }
        for m in &self.oracle_mismatches {
            writeln!(out, "oracle mismatch: {m}").unwrap();
        }
        out
    }
}

/// Runs `theorems` over `groups` in parallel on the current rayon pool and
/// merges the results in corpus order. Counterexample files go to
/// `counterexample_dir` when given.
pub fn verify_groups(
    groups: &[FiniteGroup],
    theorems: &[TheoremId],
    opts: &SuiteOptions,
    counterexample_dir: Option<&Path>,
) -> Result<VerifySummary, CliError> {
    let runs: Vec<_> = groups
        .par_iter()
        .map(|g| {
            let run = run_checks(g, theorems, opts);
            (run.reports, run.oracle_mismatches)
        })
        .collect();
    let mut counts: Vec<TheoremCounts> = theorems.iter().map(|&t| TheoremCounts::new(t)).collect();
    let mut failures = Vec::new();
    let mut oracle_mismatches = Vec::new();
    let mut taken = BTreeSet::new();
    for (g, (reports, mismatches)) in groups.iter().zip(runs) {
        for (c, r) in counts.iter_mut().zip(&reports) {
            c.add(r.verdict);
        }
        oracle_mismatches.extend(mismatches);
        let failed: Vec<TheoremReport> = reports
            .into_iter()
            .filter(|r| r.verdict == Verdict::Fails)
            .collect();
        if failed.is_empty() {
            continue;
        }
        let file = match counterexample_dir {
            Some(dir) => Some(
                write_counterexample(dir, &CounterexampleFile::new(g, failed.clone()), &mut taken)?
                    .display()
                    .to_string(),
            ),
            None => None,
        };
        failures.extend(failed.iter().map(|r| Failure {
            group: g.name().to_string(),
            order: g.order(),
            theorem: r.theorem,
            counterexample_file: file.clone(),
        }));
    }
    Ok(VerifySummary {
        schema: SCHEMA,
        groups: groups.len(),
        theorems: counts,
        failures,
        oracle_mismatches,
    })
}

pub fn verify(args: &VerifyArgs) -> Result<ExitStatus, CliError> {
    let theorems = parse_theorems(&args.theorems)?;
    let opts = suite_options(&args.check);
    let groups = load_corpus(args.corpus.as_deref(), args.max_order)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", args.jobs)))?;
    let summary = pool.install(|| {
        verify_groups(
            &groups,
            &theorems,
            &opts,
            Some(&args.check.counterexample_dir),
        )
    })?;
    let text = match args.output.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&summary)?;
            s.push('\n');
            s
        }
        Format::Text => summary.to_text(),
    };
    emit(&args.output, &text)?;
    Ok(
        if summary.total_fails() > 0 || !summary.oracle_mismatches.is_empty() {
            ExitStatus::Failure
        } else {
            ExitStatus::Ok
        },
    )
}

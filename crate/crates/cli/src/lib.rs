//! The `maxab` command line: `analyze`, `verify` and `catalog`.

pub mod commands;
pub mod error;
pub mod formats;
pub mod manifest;
pub mod report;
pub mod spec;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxab_core::verify::PartitionOptions;

pub use commands::{ExitStatus, VerifySummary};
pub use error::CliError;
pub use report::AnalysisReport;
pub use spec::GroupSpec;

#[derive(Debug, Parser)]
#[command(
    name = "maxab",
    version,
    about = "Maximal abelian subgroup analysis of finite groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one group: family, Z-classification and every theorem check.
    Analyze(AnalyzeArgs),
    /// Run theorem checks over every corpus group.
    Verify(VerifyArgs),
    /// Write the corpus as table files plus a manifest.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Seed for sampled partition checks.
    #[arg(long, default_value_t = PartitionOptions::default().seed)]
    pub seed: u64,
    /// Cross-check the family against both oracle paths and revalidate
    /// every report.
    #[arg(long)]
    pub oracle: bool,
    /// Directory for counterexample files, written only when a check FAILS.
    #[arg(long, default_value = "counterexamples")]
    pub counterexample_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// `family <kind> <n>`, `table <path>`, `generators <path>` or
    /// `product <spec> <spec>`.
    #[arg(required = true, num_args = 1.., allow_hyphen_values = false)]
    pub spec: Vec<String>,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub check: CheckArgs,
    /// Include per-phase timings in the report.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 128)]
    pub max_order: usize,
    /// Comma-separated: t2i, t2ii, t2iii, t2, t2iv, t2v, t4, t5, t6, t7,
    /// cover, all.
    #[arg(long, default_value = "all")]
    pub theorems: String,
    /// Worker threads; 0 uses one per processor.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Corpus directory with a manifest; generated there when missing or
    /// empty. Without it the corpus is built in memory.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
    #[command(flatten)]
    pub check: CheckArgs,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long, default_value_t = 16)]
    pub max_order: usize,
    #[arg(long)]
    pub out: PathBuf,
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code: 0 when every check holds, 1 on usage or
/// ingest errors, 2 when a check FAILS or an oracle disagrees.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match commands::execute(cli.command) {
        Ok(status) => status.code(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitStatus::Error.code()
        }
    }
}

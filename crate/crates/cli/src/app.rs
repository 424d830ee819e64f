//! Subcommands and exit codes: 0 ok, 1 violation or engine error, 2 usage.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use homograde_core::Budgets;
use homograde_harness::{evaluate_invariant, prepare, run_corpus, CheckId, Instance, Invariant, RunConfig};

use crate::pretty::print_definition;
use crate::report::{render, Format, ReportConfig};
use crate::syntax::parse_definition;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Extension of definition files inside a corpus directory.
pub const EXTENSION: &str = "hg";

#[derive(Parser, Debug)]
#[command(name = "homograde", version, about = "Certified homological invariants of graded modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Ext/Tor vanishing scan length.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    budget_ext: u32,
    /// Tail length for total reflexivity.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    budget_gdim: u32,
    /// Bass numbers are checked up to depth R plus this many.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    budget_bass: u32,
    /// Resolution steps for pd (default depth R + 2).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    res_cap: Option<u32>,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        Budgets { ext: self.budget_ext, gdim: self.budget_gdim, bass: self.budget_bass, res_cap: self.res_cap }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a definition file and print it in normal form.
    Parse { file: PathBuf },
    /// Compute one invariant, e.g. `invariant r2.hg qpd k` or `invariant r1.hg P k k`.
    Invariant {
        file: PathBuf,
        /// depth, dim, grade, cmd, pd, gdim, qpd, qid, P or q.
        invariant: String,
        #[arg(num_args = 1..=2, required = true)]
        modules: Vec<String>,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Also print the evidence.
        #[arg(short, long)]
        verbose: bool,
    },
    /// Run checks over a corpus directory or a single definition file.
    Verify {
        /// Defaults to $HOMOGRADE_CORPUS, then the shipped corpus.
        path: Option<PathBuf>,
        /// Comma-separated check ids (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// json, md or plain.
        #[arg(long, default_value = "plain")]
        format: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (default: one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Include per-row evidence in plain output.
        #[arg(short, long)]
        verbose: bool,
    },
}

/// The corpus shipped with this crate.
pub fn shipped_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn load_file(path: &Path) -> Result<Instance, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    parse_definition(&text, &id).map_err(|e| format!("{}:{}", path.display(), e))
}

/// All definition files of a directory in file-name order, or one file.
pub fn load_corpus(path: &Path) -> Result<Vec<Instance>, String> {
    if !path.is_dir() {
        return Ok(vec![load_file(path)?]);
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(path)
        .map_err(|e| format!("{}: {}", path.display(), e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == EXTENSION))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(format!("{}: no .{} files", path.display(), EXTENSION));
    }
    files.iter().map(|f| load_file(f)).collect()
}

/// Runs the program with `args` (including the program name).
pub fn run(args: impl IntoIterator<Item = OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{}", text) } else { write!(out, "{}", text) };
            return code;
        }
    };
    match cli.command {
        Command::Parse { file } => match load_file(&file) {
            Ok(inst) => {
                let _ = write!(out, "{}", print_definition(&inst));
                EXIT_OK
            }
            Err(e) => usage(err, &e),
        },
        Command::Invariant { file, invariant, modules, budgets, verbose } => {
            let inst = match load_file(&file) {
                Ok(i) => i,
                Err(e) => return usage(err, &e),
            };
            let Some(inv) = Invariant::from_name(&invariant) else {
                return usage(err, &format!("unknown invariant {}", invariant));
            };
            if !inv.arities().contains(&modules.len()) {
                return usage(err, &format!("{} takes {:?} module arguments", inv.name(), inv.arities()));
            }
            let (a, ids) = match prepare(&inst, budgets.budgets()) {
                Ok(x) => x,
                Err(e) => return failed(err, &e.to_string()),
            };
            let mut args = Vec::new();
            for m in &modules {
                match ids.iter().find(|(n, _)| n == m) {
                    Some((_, id)) => args.push(*id),
                    None => return usage(err, &format!("unknown module {}", m)),
                }
            }
            match evaluate_invariant(&a, inv, &args) {
                Ok(v) => {
                    let _ = writeln!(out, "{}", v);
                    if verbose {
                        let _ = writeln!(out, "evidence: {}", v.evidence);
                    }
                    EXIT_OK
                }
                Err(e) => failed(err, &e.to_string()),
            }
        }
        Command::Verify { path, checks, budgets, format, out: out_path, jobs, verbose } => {
            let Some(format) = Format::from_name(&format) else {
                return usage(err, &format!("unknown format {} (json, md or plain)", format));
            };
            let mut ids = Vec::new();
            for c in &checks {
                match CheckId::from_name(c.trim()) {
                    Some(id) if !ids.contains(&id) => ids.push(id),
                    Some(_) => {}
                    None => return usage(err, &format!("unknown check id {}", c)),
                }
            }
            if ids.is_empty() {
                ids = CheckId::ALL.to_vec();
            }
            let path =
                path.or_else(|| std::env::var_os("HOMOGRADE_CORPUS").map(PathBuf::from)).unwrap_or_else(shipped_corpus);
            let instances = match load_corpus(&path) {
                Ok(i) => i,
                Err(e) => return usage(err, &e),
            };
            let cfg = RunConfig { budgets: budgets.budgets(), checks: ids.clone(), jobs };
            let report = run_corpus(&instances, &cfg);
            let text = render(&report, &ReportConfig { budgets: cfg.budgets, checks: ids }, format, verbose);
            match out_path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        return failed(err, &format!("{}: {}", p.display(), e));
                    }
                }
                None => {
                    let _ = write!(out, "{}", text);
                }
            }
            if report.totals.clean() {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
    }
}

fn usage(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {}", msg);
    EXIT_USAGE
}

fn failed(err: &mut dyn Write, msg: &str) -> i32 {
    let _ = writeln!(err, "error: {}", msg);
    EXIT_FAILED
}

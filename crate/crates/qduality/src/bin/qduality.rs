//! Thin command-line front-end: compute character and branching tables,
//! print Q-functions, and run the verification suites. All mathematics lives
//! in the library; this binary only parses flags, routes to one library
//! entry point per subcommand, and persists results.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qduality::characters::{
    bprime_char_table, branching_multiplicities, characters_report, stembridge_report, CharTable,
};
use qduality::combinatorics::parse_parts;
use qduality::report::SuiteReport;
use qduality::superrep::{duality_report, verify_relations};
use qduality::symfunc::{schur_q, Bank};
use qduality::QdError;

#[derive(Parser)]
#[command(name = "qduality", version, about = "Exact character tables, Q-functions, and duality checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Duality,
    Characters,
    Stembridge,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the character table at degree k and write it out.
    Chartable {
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Branching multiplicities of one strict partition into block sizes.
    Branch {
        /// Comma-separated strict partition, e.g. "3,1".
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        n0: usize,
        #[arg(long)]
        n1: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Schur Q-function of a strict partition.
    Qfunc {
        #[arg(long)]
        lambda: String,
        /// Number of variables.
        #[arg(long)]
        vars: usize,
    },
    /// Run a verification suite; exit status 0 iff every check passes.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "1")]
        n0: usize,
        #[arg(long, default_value = "1")]
        n1: usize,
        /// Write the JSON report here in addition to the summary.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Refuse commutant solves with more unknowns than this.
        #[arg(long, default_value = "4096")]
        max_dim: usize,
    },
}

fn write_or_print(path: Option<&Path>, bytes: &str) -> Result<(), QdError> {
    match path {
        Some(p) => {
            std::fs::write(p, bytes)?;
            eprintln!("wrote {}", p.display());
            Ok(())
        }
        None => {
            print!("{bytes}");
            Ok(())
        }
    }
}

fn cache_path(command: &str, k: u32, n0: usize, n1: usize) -> Option<PathBuf> {
    let dir = std::env::var_os("QDUALITY_CACHE_DIR")?;
    let version = env!("CARGO_PKG_VERSION");
    Some(PathBuf::from(dir).join(format!("{command}_k{k}_n{n0}x{n1}_v{version}.json")))
}

fn chartable_cached(k: u32) -> Result<CharTable, QdError> {
    if let Some(path) = cache_path("chartable", k, 0, 0) {
        if path.exists() {
            let bytes = std::fs::read_to_string(&path)?;
            if let Ok(table) = serde_json::from_str::<CharTable>(&bytes) {
                if table.k == k {
                    return Ok(table);
                }
            }
        }
        let table = bprime_char_table(k)?;
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(&path, serde_json::to_string_pretty(&table)?)?;
        return Ok(table);
    }
    bprime_char_table(k)
}

fn run_suite(suite: Suite, k: u32, n0: usize, n1: usize, max_dim: usize) -> Result<SuiteReport, QdError> {
    match suite {
        Suite::Relations => verify_relations(k as usize, n0, n1),
        Suite::Duality => {
            let dim = (2 * (n0 + n1)).pow(k);
            let unknowns = dim * dim / 2;
            if unknowns > max_dim {
                return Err(QdError::InvalidInput(format!(
                    "commutant solve needs {unknowns} unknowns per degree, over the --max-dim bound {max_dim}"
                )));
            }
            duality_report(k as usize, n0, n1)
        }
        Suite::Characters => characters_report(k),
        Suite::Stembridge => stembridge_report(k),
    }
}

fn real_main() -> Result<bool, QdError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Chartable { k, format, out } => {
            let table = chartable_cached(k)?;
            let body = match format {
                Format::Csv => table.to_csv(),
                Format::Json => serde_json::to_string_pretty(&table)? + "\n",
            };
            write_or_print(out.as_deref(), &body)?;
            Ok(true)
        }
        Command::Branch { lambda, n0, n1, format, out } => {
            let lam = parse_parts(&lambda)?;
            let table = branching_multiplicities(&lam, n0, n1)?;
            let body = match format {
                Format::Csv => table.to_csv(),
                Format::Json => serde_json::to_string_pretty(&table)? + "\n",
            };
            write_or_print(out.as_deref(), &body)?;
            Ok(true)
        }
        Command::Qfunc { lambda, vars } => {
            let lam = parse_parts(&lambda)?;
            let q = schur_q(&lam, Bank::X, vars, 0)?;
            println!("{}", q.render());
            Ok(true)
        }
        Command::Verify { suite, k, n0, n1, out, max_dim } => {
            let report = run_suite(suite, k, n0, n1, max_dim)?;
            for c in &report.checks {
                let status = match c.status {
                    qduality::report::CheckStatus::Pass => "pass",
                    qduality::report::CheckStatus::Fail => "FAIL",
                };
                println!("[{status}] {} — {} ({})", c.name, c.law, c.witness);
            }
            let passed = report.all_passed();
            println!(
                "suite {} at k={} (n0={}, n1={}): {}",
                report.suite,
                report.k,
                report.n0,
                report.n1,
                if passed { "all checks passed" } else { "FAILURES PRESENT" }
            );
            if let Some(path) = out {
                std::fs::write(&path, serde_json::to_string_pretty(&report)?)?;
                eprintln!("wrote {}", path.display());
            }
            Ok(passed)
        }
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

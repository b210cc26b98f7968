//! Command-line driver: run check suites, explain check ids, list the
//! available suites. Exit codes: 0 all checks passed, 1 at least one
//! check failed, 2 configuration or usage error.

use clap::{Parser, Subcommand};

use wavekernel::suites::{self, OutputFormat, Suite, SuiteConfig};

/// Decimal digits annotated next to rational witness values in text
/// reports. JSON output stays exact and unannotated.
const DECIMAL_DIGITS: usize = 6;

#[derive(Parser)]
#[command(
    name = "wavekernel",
    version,
    about = "Exact verification of relativistic wave operators and spin invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run check suites and print the report.
    Verify {
        /// Suite to run (repeatable); omit to run everything.
        #[arg(long = "suite", value_name = "NAME")]
        suite: Vec<String>,
        /// JSON run configuration; command-line flags override it.
        #[arg(long, value_name = "PATH")]
        config: Option<String>,
        /// Report format: `json` or `text`.
        #[arg(long, value_name = "FORMAT")]
        output: Option<String>,
        /// Stop at the first failing check.
        #[arg(long)]
        fail_fast: bool,
    },
    /// Print what a check id verifies.
    Explain {
        /// A check id such as `proca.transversality`.
        check_id: String,
    },
    /// List the available suites.
    ListSuites,
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify {
            suite,
            config,
            output,
            fail_fast,
        } => verify(suite, config, output, fail_fast),
        Command::Explain { check_id } => explain(&check_id),
        Command::ListSuites => list_suites(),
    };
    std::process::exit(code);
}

fn verify(
    suite: Vec<String>,
    config: Option<String>,
    output: Option<String>,
    fail_fast: bool,
) -> i32 {
    let mut cfg = match config {
        Some(path) => match load_config(&path) {
            Ok(c) => c,
            Err(message) => {
                eprintln!("error: {message}");
                return 2;
            }
        },
        None => SuiteConfig::default(),
    };
    if !suite.is_empty() {
        cfg.suites = suite;
    }
    if output.is_some() {
        cfg.output = output;
    }
    if fail_fast {
        cfg.fail_fast = Some(true);
    }
    let plan = match suites::resolve(&cfg) {
        Ok(plan) => plan,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let report = suites::run(&plan);
    match plan.output {
        OutputFormat::Json => print!("{}", report.to_json()),
        OutputFormat::Text => print!("{}", report.render_text(Some(DECIMAL_DIGITS))),
    }
    if report.all_passed() {
        0
    } else {
        1
    }
}

fn load_config(path: &str) -> Result<SuiteConfig, String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse `{path}`: {e}"))
}

fn explain(check_id: &str) -> i32 {
    match suites::describe_check(check_id) {
        Some((suite, id, summary)) => {
            println!("{id}");
            println!("  suite:    {suite}");
            println!("  verifies: {summary}");
            0
        }
        None => {
            eprintln!("error: unknown check id `{check_id}`");
            2
        }
    }
}

fn list_suites() -> i32 {
    for s in Suite::ALL {
        println!("{:<14} {}", s.name(), s.describe());
    }
    0
}

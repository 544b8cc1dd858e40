//! `regmatch`: exact matching polynomials, extremal scans, conjecture checks
//! and bounds from the command line.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use report::RunReport;

#[derive(Parser, Debug)]
#[command(
    name = "regmatch",
    version,
    about = "Matching polynomials and matching-count bounds for regular graphs"
)]
struct Cli {
    /// Worker threads for parallel scans (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Print the JSON run report instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON run report to this file
    #[arg(long, short = 'o', global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
enum Command {
    /// Matching polynomial of a family expression or a graph file
    Poly { graph: String },
    /// Coefficientwise comparison of two graphs
    Compare { f: String, g: String },
    /// List Ω(n, k): unions of k paths and cycles on n vertices
    EnumOmega {
        n: usize,
        k: usize,
        flavor: OmegaArg,
    },
    /// List r-regular bipartite graphs on 2n vertices up to isomorphism
    EnumRegular {
        two_n: usize,
        r: usize,
        #[command(flatten)]
        class: ClassArgs,
        /// Print every graph in the text format
        #[arg(long)]
        graphs: bool,
    },
    /// Per-coefficient minima and maxima over an enumerated class
    Scan {
        #[command(subcommand)]
        target: ScanTarget,
    },
    /// Check a conjecture or an extremal theorem on every enumerated graph
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
    /// Exact expected number of m-matchings of a random r-regular bipartite multigraph
    Expect {
        which: ExpectArg,
        m: u64,
        n: u64,
        r: u64,
        /// Also estimate the mean from this many samples
        #[arg(long, value_name = "SAMPLES")]
        mc: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate a bound; omit the last parameter to sweep it
    Bound {
        #[command(subcommand)]
        which: BoundKind,
        /// Emit the rows as CSV
        #[arg(long, global = true)]
        csv: bool,
        /// Grid points for sweeps over p
        #[arg(long, global = true, default_value_t = 20)]
        steps: u32,
    },
    /// Closed formula for the number of m-matchings, m <= 4
    Smallm {
        n: u64,
        r: u64,
        m: u64,
        /// Number of 4-cycles (needed for m = 4)
        #[arg(long)]
        a4: Option<u64>,
    },
}

#[derive(Args, Debug, Clone, Copy, Serialize)]
struct ClassArgs {
    /// Allow parallel edges
    #[arg(long)]
    multi: bool,
    /// Connected graphs only
    #[arg(long)]
    connected: bool,
    /// Largest vertex count to enumerate
    #[arg(long, default_value_t = regmatch::enumerate::DEFAULT_VERTEX_CAP)]
    cap: usize,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "target")]
enum ScanTarget {
    /// Ω(n, k)
    Omega {
        n: usize,
        k: usize,
        flavor: OmegaArg,
    },
    /// 2-regular graphs on n vertices
    #[command(name = "2reg")]
    TwoRegular { n: usize, flavor: TwoRegArg },
    /// r-regular bipartite graphs on 2n vertices
    Regular {
        two_n: usize,
        r: usize,
        #[command(flatten)]
        class: ClassArgs,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "check")]
enum VerifyCheck {
    /// Finite lower matching bound and perfect-matching bounds for 2n <= MAX_TWO_N
    Lmc { max_two_n: usize, r: usize },
    /// Per-m maxima against the conjectured extremal family
    Umc { two_n: usize, r: usize },
    /// Extremal members of Ω(n, k) for MIN_N <= n <= MAX_N
    OmegaExtremal {
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        min_n: usize,
    },
    /// Extremal 2-regular graphs for MIN_N <= n <= MAX_N
    #[command(name = "2reg-extremal")]
    TwoRegExtremal {
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        min_n: usize,
    },
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "bound")]
enum BoundKind {
    /// gh_r(p)
    Gh { r: u64, p: Option<f64> },
    /// Finite lower matching bound
    Lmc { n: u64, r: u64, m: Option<u64> },
    /// Perfect matchings, first bound
    Schrijver { n: u64, r: u64 },
    /// Perfect matchings, sharpened bound
    Gurvits { n: u64, r: u64 },
    /// Partial-matching bound with s extra columns
    Fg { r: u64, s: u64, p: Option<f64> },
    /// Conjectured lower bound without the leading factor
    Conj { n: u64, r: u64, m: Option<u64> },
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "kebab-case")]
enum OmegaArg {
    Simple,
    SimpleBipartite,
    Multi,
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "kebab-case")]
enum TwoRegArg {
    Simple,
    SimpleBipartite,
    MultiBipartite,
}

#[derive(ValueEnum, Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "lowercase")]
enum ExpectArg {
    E1,
    E2,
}

fn command_name(c: &Command) -> String {
    let base = match c {
        Command::Poly { .. } => "poly",
        Command::Compare { .. } => "compare",
        Command::EnumOmega { .. } => "enum-omega",
        Command::EnumRegular { .. } => "enum-regular",
        Command::Scan { .. } => "scan",
        Command::Verify { .. } => "verify",
        Command::Expect { .. } => "expect",
        Command::Bound { .. } => "bound",
        Command::Smallm { .. } => "smallm",
    };
    base.to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: cannot configure {t} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let started = Instant::now();
    let out = match commands::run(&cli.command) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let parameters = serde_json::to_value(&cli.command).expect("parameters serialize");
    let report = RunReport::new(&command_name(&cli.command), parameters, &out, started);
    let rendered = serde_json::to_string_pretty(&report).expect("report serializes");
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, format!("{rendered}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json {
        println!("{rendered}");
    } else {
        print!("{}", out.text);
    }
    if out.violated {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

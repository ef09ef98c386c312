use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use mtdyck::closedform::FormulaFamily;
use mtdyck_cli::{Format, Source, SuiteArg};

#[derive(Parser)]
#[command(
    name = "mtdyck",
    version,
    about = "Exact enumeration of (m,t)-Dyck and Schröder paths"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Allow parameters beyond the default grid limits.
    #[arg(long, global = true)]
    unsafe_scale: bool,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, env = "MTDYCK_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Grid {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 1)]
    t: u32,
}

#[derive(Subcommand)]
enum PathsCmd {
    /// Number of paths.
    Count {
        #[command(flatten)]
        grid: Grid,
        /// dyck, dyck-noret, small, small-mdiv, positive or positive-mdiv.
        #[arg(long, default_value = "dyck")]
        kind: String,
    },
    /// Every path as a word over N, E, D in lexicographic order.
    List {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value = "dyck")]
        kind: String,
    },
}

#[derive(Subcommand)]
enum Command {
    /// Count or list lattice paths.
    #[command(subcommand)]
    Paths(PathsCmd),
    /// Print a generating polynomial.
    Poly {
        /// N, A, B, F, Fm, S, Sm, P or Pm.
        #[arg(long)]
        family: FormulaFamily,
        /// May be negative for closed forms.
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        t: u32,
        #[arg(long, value_enum, default_value_t = Source::Closed)]
        source: Source,
        /// Valley residue for brute-force B.
        #[arg(long)]
        residue: Option<u32>,
    },
    /// Run verification suites; exits non-zero if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        max_m: u32,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
        /// List passing checks too.
        #[arg(long)]
        verbose: bool,
    },
    /// Closed-form coefficients over a grid.
    Table {
        /// Comma-separated families.
        #[arg(long, value_delimiter = ',', default_value = "N,A,B")]
        families: Vec<FormulaFamily>,
        /// Comma-separated values of m; negative values allowed.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,2,3")]
        m: Vec<i64>,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
    },
    /// Lattice points of the dilated simplex by number of walls.
    Simplex {
        #[arg(long)]
        n: u32,
        /// Compare dilations mn+1 and mn-1 with the Narayana numbers.
        #[arg(long)]
        m: Option<u32>,
        /// Report a single dilation instead.
        #[arg(long)]
        dilation: Option<u32>,
    },
}

fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    let (text, ok) = match cli.command {
        Command::Paths(PathsCmd::Count { grid, kind }) => {
            let kind = mtdyck_cli::path_kind(&kind)?;
            (
                mtdyck_cli::paths_count(kind, grid.m, grid.n, grid.t, cli.unsafe_scale, format)?,
                true,
            )
        }
        Command::Paths(PathsCmd::List { grid, kind }) => {
            let kind = mtdyck_cli::path_kind(&kind)?;
            (
                mtdyck_cli::paths_list(kind, grid.m, grid.n, grid.t, cli.unsafe_scale, format)?,
                true,
            )
        }
        Command::Poly {
            family,
            m,
            n,
            t,
            source,
            residue,
        } => {
            let p = mtdyck_cli::family_poly(family, m, n, t, source, residue, cli.unsafe_scale)?;
            (mtdyck_cli::render_poly(family, m, n, t, &p, format), true)
        }
        Command::Verify {
            suite,
            max_m,
            max_n,
            verbose,
        } => {
            let reports = mtdyck_cli::run_verification(suite, max_m, max_n, cli.unsafe_scale)?;
            for r in &reports {
                eprintln!("{}: {:.2}s", r.suite, r.duration.as_secs_f64());
            }
            let ok = reports.iter().all(|r| r.passed());
            (mtdyck_cli::render_reports(&reports, format, verbose)?, ok)
        }
        Command::Table { families, m, max_n } => {
            if !cli.unsafe_scale {
                anyhow::ensure!(
                    max_n <= mtdyck_cli::MAX_N,
                    "max-n above {} needs --unsafe-scale",
                    mtdyck_cli::MAX_N
                );
            }
            (mtdyck_cli::table(&families, &m, max_n, format)?, true)
        }
        Command::Simplex { n, m, dilation } => mtdyck_cli::simplex_report(n, m, dilation, format)?,
    };
    print!("{text}");
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .context("configuring the thread pool")
        {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

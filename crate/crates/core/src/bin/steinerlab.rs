use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use steinerlab::cli::{
    cmd_cohomology, cmd_export, cmd_rank, cmd_table, cmd_verify, render, ExportKind, RunConfig,
    Suite, TableKind, VerifyParams, DEFAULT_SEED, DEFAULT_TRIALS,
};
use steinerlab::steiner::DEFAULT_DMAX;
use steinerlab::DEFAULT_PRIME;

#[derive(Parser)]
#[command(
    name = "steinerlab",
    version,
    about = "Exact F_p checks for Steiner bundles on P3"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    #[arg(long, global = true, env = "STEINERLAB_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, global = true, env = "STEINERLAB_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, env = "STEINERLAB_TRIALS", default_value_t = DEFAULT_TRIALS)]
    trials: usize,
    #[arg(long, global = true, env = "STEINERLAB_JSON")]
    json: bool,
    #[arg(long, global = true, env = "STEINERLAB_DMAX", default_value_t = DEFAULT_DMAX)]
    dmax: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology table of a PW sample (-f), a generic presentation, or --input
    Cohomology {
        #[arg(short, default_value_t = 1)]
        a: usize,
        #[arg(short, default_value_t = 4)]
        b: usize,
        #[arg(short)]
        f: Option<usize>,
        #[arg(long, default_value_t = -6, allow_negative_numbers = true)]
        k_min: i64,
        #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
        k_max: i64,
        /// File in `steiner a b p` format
        #[arg(long)]
        input: Option<String>,
    },
    /// Jordan stratification tables
    Table {
        #[arg(value_enum)]
        which: Which,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(short)]
        a: Option<usize>,
        #[arg(short)]
        b: Option<usize>,
        #[arg(short)]
        f: Option<usize>,
        /// Rank-0 search inside A⊗H.V
        #[arg(long)]
        hyperplane: bool,
        /// Also check h1(I_C(s-3)) by the direct rank of m(s-3)
        #[arg(long)]
        direct: bool,
        #[arg(long, allow_negative_numbers = true)]
        k_min: Option<i64>,
        #[arg(long, allow_negative_numbers = true)]
        k_max: Option<i64>,
    },
    /// Print a PW sample in interchange format
    Export {
        #[arg(value_enum)]
        what: What,
        #[arg(short)]
        a: usize,
        #[arg(short)]
        b: usize,
        #[arg(short, default_value_t = 0)]
        f: usize,
    },
    /// Rank of a matrix in `rows cols p` format
    Rank { input: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Jordan4,
    Jordan3x4,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Transport,
    Pw,
    Mh,
    Rank0,
    Curve,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Steiner,
    Fform,
    Linforms,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = cli.global;
    let cfg = RunConfig {
        prime: g.prime,
        seed: g.seed,
        trials: g.trials,
        json: g.json,
        dmax: g.dmax,
    };
    let read = |path: &str| fs::read_to_string(path).map_err(steinerlab::Error::from);

    let result = match cli.command {
        Command::Cohomology {
            a,
            b,
            f,
            k_min,
            k_max,
            input,
        } => match input.as_deref().map(read).transpose() {
            Ok(text) => cmd_cohomology(a, b, f, k_min, k_max, text.as_deref(), &cfg),
            Err(e) => Err(e),
        },
        Command::Table { which } => {
            let kind = match which {
                Which::Jordan4 => TableKind::Jordan4,
                Which::Jordan3x4 => TableKind::Jordan3x4,
            };
            cmd_table(kind, &cfg)
        }
        Command::Verify {
            suite,
            a,
            b,
            f,
            hyperplane,
            direct,
            k_min,
            k_max,
        } => {
            let suite = match suite {
                SuiteArg::Transport => Suite::Transport,
                SuiteArg::Pw => Suite::Pw,
                SuiteArg::Mh => Suite::Mh,
                SuiteArg::Rank0 => Suite::Rank0,
                SuiteArg::Curve => Suite::Curve,
            };
            cmd_verify(
                suite,
                &VerifyParams {
                    a,
                    b,
                    f,
                    hyperplane,
                    direct,
                    k_min,
                    k_max,
                },
                &cfg,
            )
        }
        Command::Export { what, a, b, f } => {
            let kind = match what {
                What::Steiner => ExportKind::Steiner,
                What::Fform => ExportKind::Fform,
                What::Linforms => ExportKind::Linforms,
            };
            return match cmd_export(kind, a, b, f, &cfg) {
                Ok(text) => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            };
        }
        Command::Rank { input } => read(&input).and_then(|text| cmd_rank(&text, &cfg)),
    };

    match result {
        Ok(report) => {
            print!("{}", render(&report, &cfg));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

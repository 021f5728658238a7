use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cn_groups::app::{cmd_analyze, cmd_catalog, cmd_construct, cmd_lemmas, cmd_verify, Output};
use cn_groups::Bounds;

#[derive(Parser)]
#[command(name = "cngroups", version, about = "Finite-group engine and CN-group classifier")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    limits: Limits,
}

#[derive(Args)]
struct Limits {
    /// Largest group order enumerated element by element.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_order: u128,
    /// Largest permutation degree a constructor may build.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_degree: u128,
    /// Candidate evaluations allowed to one representation search.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    search_budget: u64,
    /// Seed recorded in reports and used by the lemma suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the group described by a spec file.
    Analyze { spec: PathBuf },
    /// Classify every spec in a directory (the built-in catalog if omitted).
    Verify { dir: Option<PathBuf> },
    /// Build a family instance and write it as a permutation spec.
    Construct {
        family: String,
        /// Parameters as key=value, e.g. m=3 k=2.
        params: Vec<String>,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Run the lemma suites and the catalog-wide checks.
    Lemmas {
        dir: Option<PathBuf>,
        /// Random instances per suite.
        #[arg(long, default_value_t = 100)]
        instances: usize,
    },
    /// Write the built-in catalog as spec files.
    Catalog {
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let l = &cli.limits;
    let bounds = Bounds {
        max_order: l.max_order,
        max_degree: l.max_degree,
        search_budget: l.search_budget,
        ..Bounds::default()
    };
    let out: Output = match &cli.command {
        Command::Analyze { spec } => cmd_analyze(spec, l.seed, &bounds),
        Command::Verify { dir } => cmd_verify(dir.as_deref(), l.jobs, l.seed, &bounds),
        Command::Construct {
            family,
            params,
            output,
        } => {
            let mut pairs = Vec::new();
            for p in params {
                match p.split_once('=') {
                    Some((k, v)) => pairs.push((k.to_string(), v.to_string())),
                    None => {
                        eprintln!("error: parameter `{p}` is not key=value");
                        return ExitCode::from(2);
                    }
                }
            }
            cmd_construct(family, &pairs, output.as_deref(), &bounds)
        }
        Command::Lemmas { dir, instances } => {
            cmd_lemmas(dir.as_deref(), l.seed, *instances, l.jobs, &bounds)
        }
        Command::Catalog { output } => cmd_catalog(output, &bounds),
    };
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.exit as u8)
}

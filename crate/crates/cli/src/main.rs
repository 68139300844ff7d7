use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gately_cli::commands::{self, CoreQuery, Outcome, VerifySource};
use gately_cli::{CliError, EXIT_OK, EXIT_VERIFICATION};
use gately_core::measures::Measure;
use gately_core::{Limits, Rational};

/// Power measures and theorem checks for directed hierarchical networks.
///
/// Input files are JSON (`{"nodes": [...], "edges": [["A", "B"], ...]}`) or
/// an edge list with one `pred succ` pair or `node label` per line. Use `-`
/// to read standard input.
#[derive(Parser)]
#[command(name = "gately", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit the machine-readable result document as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Largest node count for which all coalitions are enumerated.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.max_players)]
    cap: usize,
    /// Largest number of simple subnetworks that may be enumerated.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.max_subnetworks)]
    subnet_cap: u128,
    /// Largest node count for the permutation-average Shapley cross-check.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT.max_permutation_players)]
    perm_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the node partition and class flags.
    Classify { input: String },
    /// Print power measures; all of them when no measure flag is given.
    Measure(MeasureArgs),
    /// Test a measure for Core membership or list the Core's vertices.
    Core(CoreArgs),
    /// Check the theorems and axioms on one network or a random suite.
    Verify(VerifyArgs),
    /// Print a seeded random network as an edge list (JSON with --json).
    Generate {
        #[arg(long)]
        nodes: usize,
        #[arg(long, default_value = "1/2")]
        edge_prob: Rational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct MeasureArgs {
    input: String,
    #[arg(long)]
    beta: bool,
    #[arg(long)]
    gately: bool,
    #[arg(long)]
    egalitarian: bool,
    #[arg(long)]
    proportional: bool,
    #[arg(long)]
    degree: bool,
    #[arg(long)]
    all: bool,
}

impl MeasureArgs {
    fn selected(&self) -> Vec<Measure> {
        let flags = [
            self.beta,
            self.gately,
            self.egalitarian,
            self.proportional,
            self.degree,
        ];
        let chosen: Vec<Measure> = Measure::ALL
            .into_iter()
            .zip(flags)
            .filter(|&(_, on)| on || self.all)
            .map(|(m, _)| m)
            .collect();
        if chosen.is_empty() {
            Measure::ALL.to_vec()
        } else {
            chosen
        }
    }
}

#[derive(Args)]
struct CoreArgs {
    input: String,
    /// Measure to test: beta, gately, egalitarian, proportional or degree.
    #[arg(
        long,
        required_unless_present = "vertices",
        conflicts_with = "vertices"
    )]
    check: Option<Measure>,
    /// List the distinct vertices of the Core.
    #[arg(long)]
    vertices: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, conflicts_with_all = ["random", "nodes", "seed", "edge_prob"], required_unless_present = "random")]
    input: Option<String>,
    /// Number of random networks to check.
    #[arg(long, requires = "nodes")]
    random: Option<usize>,
    #[arg(long)]
    nodes: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "1/2")]
    edge_prob: Rational,
}

fn render(outcome: Outcome, json: bool) -> (String, bool) {
    let text = if json {
        serde_json::to_string_pretty(&outcome.document).expect("result serialises") + "\n"
    } else {
        outcome.text
    };
    (text, outcome.passed)
}

/// Returns the text to print and whether every check passed.
fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let limits = Limits {
        max_players: cli.cap,
        max_subnetworks: cli.subnet_cap,
        max_permutation_players: cli.perm_cap,
    };
    match cli.command {
        Command::Classify { input } => Ok(render(
            commands::classify(&commands::load(&input)?),
            cli.json,
        )),
        Command::Measure(args) => Ok(render(
            commands::measure(&commands::load(&args.input)?, &args.selected()),
            cli.json,
        )),
        Command::Core(args) => {
            let query = match args.check {
                Some(m) => CoreQuery::Check(m),
                None => CoreQuery::Vertices,
            };
            Ok(render(
                commands::core(&commands::load(&args.input)?, query, &limits)?,
                cli.json,
            ))
        }
        Command::Verify(args) => {
            let source = match (args.input, args.random) {
                (Some(path), _) => VerifySource::Input(commands::load(&path)?),
                (None, Some(count)) => VerifySource::Random {
                    count,
                    nodes: args.nodes.expect("clap requires --nodes"),
                    seed: args.seed,
                    edge_prob: args.edge_prob,
                },
                (None, None) => unreachable!("clap requires --input or --random"),
            };
            Ok(render(commands::verify(&source, &limits)?, cli.json))
        }
        Command::Generate {
            nodes,
            edge_prob,
            seed,
        } => {
            let doc = commands::generate(nodes, &edge_prob, seed)?;
            let text = if cli.json {
                doc.to_json() + "\n"
            } else {
                doc.to_edge_list()
            };
            Ok((text, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, passed)) => {
            print!("{text}");
            ExitCode::from(if passed { EXIT_OK } else { EXIT_VERIFICATION })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

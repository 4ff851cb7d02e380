use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mindist::{Representation, SearchParams};
use mindist_cli::{run_experiment, verify_codeword, AlgorithmChoice, CliError, RunConfig};

/// Upper bounds on the minimum distance of linear codes over GF(p^r).
#[derive(Parser, Debug)]
#[command(name = "mindist", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run an experiment and print (or write) its JSON report.
    Run(RunArgs),
    /// Check whether a word is a codeword and report its weight.
    Verify {
        /// Generating matrix file.
        #[arg(long)]
        matrix: PathBuf,
        /// The word: n packed field elements separated by spaces or commas.
        #[arg(long)]
        word: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Algo {
    Gga,
    Chc,
    Random,
    Brute,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Repr {
    Discrete,
    Order,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Generating matrix file (`q n k` header, optional `poly`, k rows).
    #[arg(long)]
    matrix: PathBuf,
    /// Search algorithm, or exact enumeration.
    #[arg(long, value_enum, default_value = "gga")]
    algo: Algo,
    /// Chromosome encoding; defaults to order for searches, must be omitted for brute.
    #[arg(long, value_enum)]
    repr: Option<Repr>,
    /// Population size (even) [default: 400]
    #[arg(long)]
    pop: Option<usize>,
    /// Evaluation budget per run [default: 500000]
    #[arg(long)]
    evals: Option<u64>,
    /// Crossover probability [default: 0.7 discrete, 0.8 order]
    #[arg(long)]
    pc: Option<f64>,
    /// Per-gene mutation probability, discrete GGA [default: 0.01]
    #[arg(long)]
    pm: Option<f64>,
    /// CHC threshold decrement as a fraction of the largest pairwise distance [default: 0.1]
    #[arg(long)]
    tau: Option<f64>,
    /// Evaluations without improvement before a GGA restart [default: 100000]
    #[arg(long)]
    reinit: Option<u64>,
    /// Base seed; run i uses seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of independent runs.
    #[arg(long, default_value_t = 1)]
    runs: usize,
    /// Stop a run once a codeword of at most this weight is found.
    #[arg(long)]
    target: Option<usize>,
    /// Number of parents in the algebraic crossover [default: 2]
    #[arg(long = "ax-m")]
    ax_m: Option<usize>,
    /// Gate CHC recombination on distance < threshold instead of >=.
    #[arg(long = "chc-literal")]
    chc_literal: bool,
    /// Record population diversity every generation.
    #[arg(long)]
    diversity: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        let algorithm = match self.algo {
            Algo::Gga => AlgorithmChoice::Gga,
            Algo::Chc => AlgorithmChoice::Chc,
            Algo::Random => AlgorithmChoice::Random,
            Algo::Brute => AlgorithmChoice::Brute,
        };
        let repr = self.repr.map(|r| match r {
            Repr::Discrete => Representation::Discrete,
            Repr::Order => Representation::Order,
        });
        let representation = match algorithm {
            AlgorithmChoice::Brute => repr,
            _ => Some(repr.unwrap_or(Representation::Order)),
        };
        let d = SearchParams::defaults_for(representation.unwrap_or(Representation::Order));
        let params = SearchParams {
            population: self.pop.unwrap_or(d.population),
            crossover_prob: self.pc.unwrap_or(d.crossover_prob),
            mutation_prob: self.pm.unwrap_or(d.mutation_prob),
            tau: self.tau.unwrap_or(d.tau),
            max_evals: self.evals.unwrap_or(d.max_evals),
            max_reinit: self.reinit.unwrap_or(d.max_reinit),
            target_weight: self.target,
            seed: self.seed,
            ax_m: self.ax_m.unwrap_or(d.ax_m),
            chc_literal: self.chc_literal,
            record_diversity: self.diversity,
        };
        RunConfig {
            matrix_path: self.matrix.clone(),
            algorithm,
            representation,
            params,
            runs: self.runs,
            output_path: self.out.clone(),
            emit_diversity: self.diversity,
        }
    }
}

fn parse_word(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Config(format!("`{t}` is not a field element"))))
        .collect()
}

fn real_main(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => {
            let config = args.config();
            let interrupt = Arc::new(AtomicBool::new(false));
            let flag = interrupt.clone();
            // best effort: without a handler an interrupt simply kills the process
            let _ = ctrlc::set_handler(move || flag.store(true, Ordering::Relaxed));
            let report = run_experiment(&config, Some(&interrupt))?;
            if config.output_path.is_none() {
                println!("{}", report.to_json());
            }
            if report.interrupted {
                eprintln!("interrupted: {} of {} runs completed", report.runs.len(), config.runs);
            }
            Ok(())
        }
        Command::Verify { matrix, word } => {
            let v = verify_codeword(&matrix, &parse_word(&word)?)?;
            println!("{}", serde_json::to_string(&v).expect("serializable"));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match real_main(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}


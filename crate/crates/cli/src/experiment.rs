//! Multi-run experiments and their JSON reports.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use mindist::search::{self, Problem};
use mindist::{DistanceBound, Elem, LinearCode, Representation, SearchParams, SearchReport};

use crate::matrix_file::parse_matrix_file;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgorithmChoice {
    Gga,
    Chc,
    Random,
    /// Exact distance by enumeration.
    Brute,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub matrix_path: PathBuf,
    pub algorithm: AlgorithmChoice,
    /// `None` for brute force; searches default to the order representation.
    pub representation: Option<Representation>,
    pub params: SearchParams,
    pub runs: usize,
    pub output_path: Option<PathBuf>,
    pub emit_diversity: bool,
}

impl RunConfig {
    /// Defaults for an order-representation GGA on `matrix_path`.
    pub fn new(matrix_path: impl Into<PathBuf>, algorithm: AlgorithmChoice) -> Self {
        let representation = (algorithm != AlgorithmChoice::Brute).then_some(Representation::Order);
        RunConfig {
            matrix_path: matrix_path.into(),
            algorithm,
            representation,
            params: SearchParams::defaults_for(Representation::Order),
            runs: 1,
            output_path: None,
            emit_diversity: false,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |m: &str| Err(CliError::Config(m.into()));
        if self.runs == 0 {
            return bad("runs must be at least 1");
        }
        match (self.algorithm, self.representation) {
            (AlgorithmChoice::Brute, Some(_)) => return bad("brute force takes no representation"),
            (AlgorithmChoice::Random, Some(Representation::Discrete)) => {
                return bad("random search uses the order representation")
            }
            (AlgorithmChoice::Gga | AlgorithmChoice::Chc | AlgorithmChoice::Random, None) => {
                return bad("a search needs a representation")
            }
            _ => {}
        }
        if self.algorithm != AlgorithmChoice::Brute {
            self.params.validate()?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunResult {
    Search(SearchReport),
    Exact(DistanceBound),
}

impl RunResult {
    pub fn bound(&self) -> &DistanceBound {
        match self {
            RunResult::Search(r) => &r.best,
            RunResult::Exact(b) => b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: u64,
    pub wall_time_secs: f64,
    pub result: RunResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub best: usize,
    pub worst: usize,
    pub mean: f64,
    /// Number of runs that reached `best`.
    pub hits: usize,
}

impl Aggregate {
    pub fn from_runs(runs: &[RunRecord]) -> Option<Aggregate> {
        let ds: Vec<usize> = runs.iter().map(|r| r.result.bound().d).collect();
        let best = *ds.iter().min()?;
        let worst = *ds.iter().max()?;
        let mean = ds.iter().sum::<usize>() as f64 / ds.len() as f64;
        let hits = ds.iter().filter(|&&d| d == best).count();
        Some(Aggregate { best, worst, mean, hits })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    pub modulus: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: RunConfig,
    pub code: CodeSummary,
    pub runs: Vec<RunRecord>,
    pub aggregate: Option<Aggregate>,
    /// Set when the experiment was cut short; `runs` holds what finished.
    pub interrupted: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub member: bool,
    pub weight: usize,
}

/// Membership (stacking the word under G leaves the rank at k) and weight.
pub fn verify_word(code: &LinearCode, word: &[Elem]) -> Result<Verification, CliError> {
    if word.len() != code.n() {
        return Err(mindist::CodeError::LengthMismatch { expected: code.n(), got: word.len() }.into());
    }
    if let Some(bad) = word.iter().find(|e| !code.field().contains(**e)) {
        return Err(CliError::Config(format!("{} is not an element of GF({})", bad.value(), code.q())));
    }
    let stacked = code.generator().stack_row(word)?;
    Ok(Verification { member: stacked.rank() == code.k(), weight: mindist::weight(word) })
}

pub fn verify_codeword(matrix_path: &Path, word: &[u32]) -> Result<Verification, CliError> {
    let code = LinearCode::new(parse_matrix_file(matrix_path)?)?;
    let word: Vec<Elem> = word
        .iter()
        .map(|&v| code.field().elem(v))
        .collect::<Result<_, _>>()?;
    verify_word(&code, &word)
}

fn run_one(code: &LinearCode, config: &RunConfig, seed: u64) -> Result<RunResult, CliError> {
    match config.algorithm {
        AlgorithmChoice::Brute => Ok(RunResult::Exact(code.brute_force_distance()?)),
        alg => {
            let repr = config.representation.expect("validated");
            let mut params = config.params.clone();
            params.seed = seed;
            params.record_diversity |= config.emit_diversity;
            let problem = Problem::new(code, repr);
            let algorithm = match alg {
                AlgorithmChoice::Gga => search::Algorithm::Gga,
                AlgorithmChoice::Chc => search::Algorithm::Chc,
                AlgorithmChoice::Random => search::Algorithm::Random,
                AlgorithmChoice::Brute => unreachable!(),
            };
            Ok(RunResult::Search(search::run(&problem, algorithm, &params)?))
        }
    }
}

/// Runs the experiment on an already loaded code. Runs execute in parallel;
/// run `i` uses seed `params.seed + i`. When `interrupt` is raised, runs not
/// yet started are skipped and the report is marked as interrupted.
pub fn run_experiment_on(code: &LinearCode, config: &RunConfig, interrupt: Option<&AtomicBool>) -> Result<Report, CliError> {
    config.validate()?;
    let base = config.params.seed;
    let outcomes: Vec<Option<Result<RunRecord, CliError>>> = (0..config.runs)
        .into_par_iter()
        .map(|i| {
            if interrupt.is_some_and(|f| f.load(Ordering::Relaxed)) {
                return None;
            }
            let seed = base.wrapping_add(i as u64);
            let start = Instant::now();
            let result = run_one(code, config, seed);
            Some(result.map(|result| RunRecord { seed, wall_time_secs: start.elapsed().as_secs_f64(), result }))
        })
        .collect();

    let mut runs = Vec::with_capacity(config.runs);
    let mut interrupted = false;
    for o in outcomes {
        match o {
            Some(r) => runs.push(r?),
            None => interrupted = true,
        }
    }
    for r in &runs {
        let b = r.result.bound();
        let v = verify_word(code, b.witness.entries())?;
        if !v.member || v.weight != b.d || b.d == 0 {
            return Err(CliError::WitnessRejected { seed: r.seed, d: b.d });
        }
    }

    let f = code.field();
    Ok(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        code: CodeSummary { q: code.q(), n: code.n(), k: code.k(), modulus: f.modulus() },
        aggregate: Aggregate::from_runs(&runs),
        runs,
        interrupted,
    })
}

/// Loads the matrix, runs the experiment and, if an output path is set,
/// writes the report there atomically.
pub fn run_experiment(config: &RunConfig, interrupt: Option<&AtomicBool>) -> Result<Report, CliError> {
    config.validate()?;
    let code = LinearCode::new(parse_matrix_file(&config.matrix_path)?)?;
    let report = run_experiment_on(&code, config, interrupt)?;
    if let Some(out) = &config.output_path {
        write_atomic(out, &report.to_json())?;
    }
    Ok(report)
}

/// Writes to a sibling temporary file and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let name = path.file_name().ok_or_else(|| CliError::Io(format!("{}: not a file path", path.display())))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(name);
    tmp_name.push(format!(".tmp{}", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    std::fs::write(&tmp, contents).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        io(e)
    })
}

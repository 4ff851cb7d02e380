//! File formats and experiment orchestration behind the `mindist` binary.

pub mod experiment;
pub mod matrix_file;

use thiserror::Error;

use mindist::{CodeError, FieldError, MatrixError, SearchError};

pub use experiment::{
    run_experiment, run_experiment_on, verify_codeword, verify_word, Aggregate, AlgorithmChoice, Report, RunConfig,
    RunRecord, RunResult, Verification,
};
pub use matrix_file::{parse_matrix_file, parse_matrix_str, serialize_matrix};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("{0}")]
    Io(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("run with seed {seed} produced a witness that does not certify d = {d}")]
    WitnessRejected { seed: u64, d: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

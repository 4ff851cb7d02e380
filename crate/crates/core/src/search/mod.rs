//! Metaheuristic searches for a light codeword.
//!
//! Two representations are supported. A discrete chromosome is a nonzero
//! message `m` scored by `w(m * G)`. An order chromosome is a column
//! permutation `x` scored by the least row weight of `RREF(G * P_x)`. Both
//! can be driven by a generational GA with binary tournament selection,
//! elitism and restarts ([`run_gga`]) or by CHC with incest prevention and
//! cataclysmic restarts ([`run_chc`]). [`run_random_search`] samples
//! permutations uniformly.
//!
//! Every run is a pure function of the code, the parameters and the seed.

mod chc;
mod gga;
pub mod operators;
mod random;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chc::{run_chc, run_chc_with};
pub use gga::{run_gga, run_gga_with};
pub use random::run_random_search;

use crate::code::{CodeError, Codeword, DistanceBound, LinearCode, MinWeightBackend, OrderEvaluator};
use crate::gf::Elem;
use crate::matrix::Permutation;

/// Fitness assigned to the zero message in CHC-Discrete; never survives.
pub const INVALID_FITNESS: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("k = n leaves no non-pivot region to swap with")]
    DegenerateDimensions,
    #[error("diversity needs at least two individuals")]
    TooSmall,
    #[error("initial population does not match the problem: {0}")]
    BadInitialPopulation(String),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    Discrete,
    Order,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Gga,
    Chc,
    Random,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    /// Population size N, even.
    pub population: usize,
    pub crossover_prob: f64,
    /// Per-gene mutation probability (discrete GGA only).
    pub mutation_prob: f64,
    /// CHC threshold decrement as a fraction of the largest pairwise distance.
    pub tau: f64,
    pub max_evals: u64,
    /// Evaluations without improvement before a GGA restart.
    pub max_reinit: u64,
    /// Stop as soon as a codeword of at most this weight is found.
    pub target_weight: Option<usize>,
    pub seed: u64,
    /// Number of parents combined by the algebraic crossover.
    pub ax_m: usize,
    /// Gate CHC recombination on `distance < threshold` instead of
    /// `distance >= threshold`.
    pub chc_literal: bool,
    /// Record the mean pairwise distance of the population every generation.
    pub record_diversity: bool,
}

impl SearchParams {
    pub fn defaults_for(repr: Representation) -> Self {
        SearchParams {
            population: 400,
            crossover_prob: match repr {
                Representation::Discrete => 0.7,
                Representation::Order => 0.8,
            },
            mutation_prob: 0.01,
            tau: 0.1,
            max_evals: 500_000,
            max_reinit: 100_000,
            target_weight: None,
            seed: 0,
            ax_m: 2,
            chc_literal: false,
            record_diversity: false,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |msg: &str| Err(SearchError::Config(msg.to_string()));
        if self.population < 2 || !self.population.is_multiple_of(2) {
            return bad("population size must be even and at least 2");
        }
        if !(0.0..=1.0).contains(&self.crossover_prob) {
            return bad("crossover probability must lie in [0, 1]");
        }
        if !(0.0..=1.0).contains(&self.mutation_prob) {
            return bad("mutation probability must lie in [0, 1]");
        }
        if !(self.tau > 0.0 && self.tau <= 1.0) {
            return bad("tau must lie in (0, 1]");
        }
        if self.max_reinit == 0 {
            return bad("reinitialization period must be at least 1");
        }
        if self.ax_m < 2 || self.ax_m > self.population {
            return bad("AX arity must be between 2 and the population size");
        }
        Ok(())
    }
}

/// A search problem: a code and the chromosome encoding to search with.
#[derive(Debug, Clone, Copy)]
pub struct Problem<'a> {
    pub code: &'a LinearCode,
    pub representation: Representation,
}

impl<'a> Problem<'a> {
    pub fn new(code: &'a LinearCode, representation: Representation) -> Self {
        Problem { code, representation }
    }

    fn random_genes(&self, rng: &mut impl Rng) -> Genes {
        match self.representation {
            Representation::Discrete => Genes::Discrete(operators::random_message(self.code.k(), self.code.q(), rng)),
            Representation::Order => Genes::Order(operators::random_permutation(self.code.n(), rng)),
        }
    }

    fn check_genes(&self, g: &Genes) -> Result<(), SearchError> {
        let ok = match (self.representation, g) {
            (Representation::Discrete, Genes::Discrete(m)) => {
                m.len() == self.code.k() && m.iter().all(|e| self.code.field().contains(*e))
            }
            (Representation::Order, Genes::Order(x)) => x.len() == self.code.n(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(SearchError::BadInitialPopulation(format!("{g:?}")))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Genes {
    Discrete(Vec<Elem>),
    Order(Permutation),
}

impl Genes {
    pub fn len(&self) -> usize {
        match self {
            Genes::Discrete(m) => m.len(),
            Genes::Order(x) => x.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Positional Hamming distance.
    pub fn distance(&self, other: &Genes) -> usize {
        match (self, other) {
            (Genes::Discrete(a), Genes::Discrete(b)) => a.iter().zip(b).filter(|(x, y)| x != y).count(),
            (Genes::Order(a), Genes::Order(b)) => a.as_slice().iter().zip(b.as_slice()).filter(|(x, y)| x != y).count(),
            _ => panic!("distance between different representations"),
        }
    }

    fn is_zero_message(&self) -> bool {
        matches!(self, Genes::Discrete(m) if m.iter().all(|e| e.is_zero()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Individual {
    pub genes: Genes,
    pub fitness: usize,
}

/// Mean pairwise positional Hamming distance.
pub fn population_diversity(genes: &[&Genes]) -> Result<f64, SearchError> {
    pairwise_stats(genes).map(|(mean, _)| mean)
}

/// Mean and maximum pairwise distance.
fn pairwise_stats(genes: &[&Genes]) -> Result<(f64, usize), SearchError> {
    let n = genes.len();
    if n < 2 {
        return Err(SearchError::TooSmall);
    }
    let mut sum = 0u64;
    let mut max = 0usize;
    for i in 0..n {
        for j in i + 1..n {
            let d = genes[i].distance(genes[j]);
            sum += d as u64;
            max = max.max(d);
        }
    }
    let pairs = (n * (n - 1) / 2) as f64;
    Ok((sum as f64 / pairs, max))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    Budget,
    TargetReached,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiversityPoint {
    pub generation: u64,
    pub evals: u64,
    pub diversity: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub best: DistanceBound,
    /// Chromosome of the best individual.
    pub best_genes: Genes,
    pub evals_used: u64,
    pub generations: u64,
    pub stop_reason: StopReason,
    pub diversity_trace: Option<Vec<DiversityPoint>>,
    /// Generations at which the population was restarted.
    pub reinitializations: Vec<u64>,
    pub seed: u64,
}

/// Per-generation record handed to an observer.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationLog {
    pub generation: u64,
    pub parent_fitness: Vec<usize>,
    pub child_fitness: Vec<usize>,
    /// Population after survivor selection or elitism, before any restart.
    pub survivor_fitness: Vec<usize>,
    pub crossovers: usize,
    /// CHC recombination threshold after this generation's update.
    pub threshold: Option<f64>,
    pub reinitialized: bool,
    pub best_so_far: usize,
}

/// Optional instrumentation for a run.
#[derive(Default)]
pub struct RunHooks<'h> {
    /// Replaces the random initial population.
    pub initial: Option<Vec<Genes>>,
    pub observer: Option<&'h mut dyn FnMut(&GenerationLog)>,
}

impl RunHooks<'_> {
    fn notify(&mut self, log: GenerationLog) {
        if let Some(obs) = self.observer.as_mut() {
            obs(&log);
        }
    }
}

struct Best {
    fitness: usize,
    witness: Codeword,
    genes: Genes,
}

/// Counts evaluations and keeps the best codeword seen.
struct Evaluator<'a> {
    code: &'a LinearCode,
    order: OrderEvaluator<'a>,
    evals: u64,
    since_improvement: u64,
    best: Option<Best>,
    max_evals: u64,
    target: Option<usize>,
}

impl<'a> Evaluator<'a> {
    fn new(problem: &Problem<'a>, params: &SearchParams) -> Self {
        Evaluator {
            code: problem.code,
            order: OrderEvaluator::new(problem.code),
            evals: 0,
            since_improvement: 0,
            best: None,
            max_evals: params.max_evals,
            target: params.target_weight,
        }
    }

    /// Zero messages get [`INVALID_FITNESS`] without spending an evaluation.
    fn evaluate(&mut self, genes: &Genes) -> usize {
        if genes.is_zero_message() {
            return INVALID_FITNESS;
        }
        self.evals += 1;
        self.since_improvement += 1;
        let (fitness, witness) = match genes {
            Genes::Discrete(m) => {
                let c = self.code.encode(m).expect("message length checked");
                (c.weight(), Some(c))
            }
            Genes::Order(x) => {
                let (w, _) = self.order.evaluate(x).expect("permutation length checked");
                (w, None)
            }
        };
        if self.best.as_ref().is_none_or(|b| fitness < b.fitness) {
            let witness = witness.unwrap_or_else(|| match genes {
                Genes::Order(x) => {
                    let (_, row) = crate::matrix::min_row_weight(self.order.last_rref(), self.code.n()).unwrap();
                    self.order.witness(x, row)
                }
                Genes::Discrete(_) => unreachable!(),
            });
            self.best = Some(Best { fitness, witness, genes: genes.clone() });
            self.since_improvement = 0;
        }
        fitness
    }

    fn individual(&mut self, genes: Genes) -> Individual {
        let fitness = self.evaluate(&genes);
        Individual { genes, fitness }
    }

    fn best_fitness(&self) -> usize {
        self.best.as_ref().map_or(INVALID_FITNESS, |b| b.fitness)
    }

    fn stop_reason(&self) -> Option<StopReason> {
        if self.target.is_some_and(|t| self.best_fitness() <= t) {
            Some(StopReason::TargetReached)
        } else if self.evals >= self.max_evals {
            Some(StopReason::Budget)
        } else {
            None
        }
    }

    fn into_report(self, generations: u64, stop_reason: StopReason, trace: Option<Vec<DiversityPoint>>, reinits: Vec<u64>, seed: u64) -> SearchReport {
        let best = self.best.expect("at least one valid individual was evaluated");
        SearchReport {
            best: DistanceBound { d: best.fitness, witness: best.witness, exact: false },
            best_genes: best.genes,
            evals_used: self.evals,
            generations,
            stop_reason,
            diversity_trace: trace,
            reinitializations: reinits,
            seed,
        }
    }
}

fn initial_population(problem: &Problem, n: usize, hooks: &mut RunHooks, rng: &mut impl Rng) -> Result<Vec<Genes>, SearchError> {
    match hooks.initial.take() {
        Some(init) => {
            if init.len() != n {
                return Err(SearchError::BadInitialPopulation(format!("expected {n} individuals, got {}", init.len())));
            }
            for g in &init {
                problem.check_genes(g)?;
                if g.is_zero_message() {
                    return Err(SearchError::BadInitialPopulation("zero message".into()));
                }
            }
            Ok(init)
        }
        None => Ok((0..n).map(|_| problem.random_genes(rng)).collect()),
    }
}

fn check_problem(problem: &Problem, params: &SearchParams, mutates: bool) -> Result<(), SearchError> {
    params.validate()?;
    if mutates && problem.representation == Representation::Order && problem.code.k() == problem.code.n() {
        return Err(SearchError::DegenerateDimensions);
    }
    Ok(())
}

fn record(trace: &mut Option<Vec<DiversityPoint>>, generation: u64, evals: u64, pop: &[Individual]) {
    if let Some(t) = trace.as_mut() {
        let genes: Vec<&Genes> = pop.iter().map(|i| &i.genes).collect();
        let diversity = population_diversity(&genes).expect("population has at least two members");
        t.push(DiversityPoint { generation, evals, diversity });
    }
}

/// Runs `algorithm` with the given representation.
pub fn run(problem: &Problem, algorithm: Algorithm, params: &SearchParams) -> Result<SearchReport, SearchError> {
    match algorithm {
        Algorithm::Gga => run_gga(problem, params),
        Algorithm::Chc => run_chc(problem, params),
        Algorithm::Random => run_random_search(problem, params),
    }
}

/// Uses an order-representation search as the minimum weight codeword
/// routine of the general decoder.
#[derive(Debug, Clone)]
pub struct SearchBackend {
    pub algorithm: Algorithm,
    pub params: SearchParams,
}

impl MinWeightBackend for SearchBackend {
    fn min_weight_codeword(&self, code: &LinearCode) -> Result<Codeword, CodeError> {
        let problem = Problem::new(code, Representation::Order);
        run(&problem, self.algorithm, &self.params)
            .map(|r| r.best.witness)
            .map_err(|e| CodeError::BackendFailure(e.to_string()))
    }
}

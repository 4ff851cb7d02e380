//! Uniform random sampling of column permutations, as a baseline.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::operators::random_permutation;
use super::{Evaluator, Genes, Problem, Representation, SearchError, SearchParams, SearchReport};

/// Scores uniformly random permutations until the budget or the target is
/// reached. Only the order representation is meaningful here; each sample
/// counts as one generation.
pub fn run_random_search(problem: &Problem, params: &SearchParams) -> Result<SearchReport, SearchError> {
    if problem.representation != Representation::Order {
        return Err(SearchError::Config("random search uses the order representation".into()));
    }
    if params.max_evals == 0 {
        return Err(SearchError::Config("random search needs a budget of at least one evaluation".into()));
    }
    let n = problem.code.n();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut eval = Evaluator::new(problem, params);
    let mut generation = 0u64;
    let stop = loop {
        if generation > 0 {
            if let Some(reason) = eval.stop_reason() {
                break reason;
            }
        }
        generation += 1;
        eval.evaluate(&Genes::Order(random_permutation(n, &mut rng)));
    };
    Ok(eval.into_report(generation, stop, None, Vec::new(), params.seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::LinearCode;
    use crate::fixtures;
    use crate::search::StopReason;

    fn params(evals: u64, seed: u64) -> SearchParams {
        SearchParams { max_evals: evals, seed, ..SearchParams::defaults_for(Representation::Order) }
    }

    #[test]
    fn budget_is_exact() {
        let code = LinearCode::new(fixtures::g_4_10()).unwrap();
        let problem = Problem::new(&code, Representation::Order);
        for budget in [1, 7, 100] {
            let r = run_random_search(&problem, &params(budget, 1)).unwrap();
            assert_eq!(r.evals_used, budget);
            assert_eq!(r.stop_reason, StopReason::Budget);
            assert!(r.best.verify(&code));
        }
    }

    #[test]
    fn more_samples_never_hurt() {
        let code = LinearCode::new(fixtures::g_4_10()).unwrap();
        let problem = Problem::new(&code, Representation::Order);
        let ds: Vec<usize> = [1, 10, 100, 1000].iter().map(|&b| run_random_search(&problem, &params(b, 3)).unwrap().best.d).collect();
        assert!(ds.windows(2).all(|w| w[1] <= w[0]), "{ds:?}");
    }

    #[test]
    fn target_stops_early() {
        let code = LinearCode::new(fixtures::g_4_8()).unwrap();
        let problem = Problem::new(&code, Representation::Order);
        let mut p = params(100_000, 2);
        p.target_weight = Some(2);
        let r = run_random_search(&problem, &p).unwrap();
        assert_eq!((r.best.d, r.stop_reason), (2, StopReason::TargetReached));
        assert!(r.evals_used < 100_000);
    }

    #[test]
    fn discrete_rejected() {
        let code = LinearCode::new(fixtures::g_4_8()).unwrap();
        let problem = Problem::new(&code, Representation::Discrete);
        assert!(matches!(run_random_search(&problem, &params(10, 0)), Err(SearchError::Config(_))));
    }
}

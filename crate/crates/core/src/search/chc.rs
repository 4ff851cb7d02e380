//! CHC: elitist survivor selection, incest prevention and cataclysmic
//! restarts. There is no mutation operator.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::operators::{ax_crossover, uniform_crossover};
use super::{
    check_problem, initial_population, pairwise_stats, record, Evaluator, GenerationLog, Genes, Individual, Problem,
    RunHooks, SearchError, SearchParams, SearchReport,
};

pub fn run_chc(problem: &Problem, params: &SearchParams) -> Result<SearchReport, SearchError> {
    run_chc_with(problem, params, &mut RunHooks::default())
}

fn threshold_and_decrement(pop: &[Individual], tau: f64) -> (f64, f64) {
    let genes: Vec<&Genes> = pop.iter().map(|i| &i.genes).collect();
    let (mean, max) = pairwise_stats(&genes).expect("population has at least two members");
    (mean, tau * max as f64)
}

fn sorted_genes(pop: &[Individual]) -> Vec<&Genes> {
    let mut g: Vec<&Genes> = pop.iter().map(|i| &i.genes).collect();
    g.sort();
    g
}

/// CHC with instrumentation.
///
/// The recombination threshold starts at the mean pairwise distance of the
/// population and drops by `tau` times the largest pairwise distance after
/// every generation in which the population did not change. Parents are
/// paired at random; a pair recombines when its distance is at least the
/// threshold (or, with `chc_literal`, strictly below it). The next
/// population is the best N of parents and children, parents first on ties.
/// When the threshold reaches zero the population restarts from the best
/// individual plus N-1 random ones.
pub fn run_chc_with(problem: &Problem, params: &SearchParams, hooks: &mut RunHooks) -> Result<SearchReport, SearchError> {
    check_problem(problem, params, false)?;
    let n_pop = params.population;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut eval = Evaluator::new(problem, params);
    let mut trace = params.record_diversity.then(Vec::new);
    let mut reinits = Vec::new();

    let init = initial_population(problem, n_pop, hooks, &mut rng)?;
    let mut pop: Vec<Individual> = init.into_iter().map(|g| eval.individual(g)).collect();
    record(&mut trace, 0, eval.evals, &pop);
    let (mut threshold, mut dec) = threshold_and_decrement(&pop, params.tau);

    let group = match problem.representation {
        super::Representation::Discrete => 2,
        super::Representation::Order => params.ax_m,
    };

    let mut generation = 0u64;
    let stop = loop {
        if let Some(reason) = eval.stop_reason() {
            break reason;
        }
        generation += 1;

        let mut order: Vec<usize> = (0..n_pop).collect();
        order.shuffle(&mut rng);

        let mut children: Vec<Individual> = Vec::new();
        let mut crossovers = 0;
        for chunk in order.chunks_exact(group) {
            let mut dist = usize::MAX;
            for (a, &i) in chunk.iter().enumerate() {
                for &j in &chunk[a + 1..] {
                    dist = dist.min(pop[i].genes.distance(&pop[j].genes));
                }
            }
            let enabled = if params.chc_literal { (dist as f64) < threshold } else { dist as f64 >= threshold };
            if !enabled {
                continue;
            }
            crossovers += 1;
            match &pop[chunk[0]].genes {
                Genes::Discrete(_) => {
                    let (Genes::Discrete(a), Genes::Discrete(b)) = (&pop[chunk[0]].genes, &pop[chunk[1]].genes) else {
                        unreachable!()
                    };
                    let (c1, c2) = uniform_crossover(a, b, &mut rng);
                    children.push(eval.individual(Genes::Discrete(c1)));
                    children.push(eval.individual(Genes::Discrete(c2)));
                }
                Genes::Order(_) => {
                    let xs: Vec<_> = chunk
                        .iter()
                        .map(|&i| match &pop[i].genes {
                            Genes::Order(x) => x,
                            Genes::Discrete(_) => unreachable!(),
                        })
                        .collect();
                    for (x, f) in ax_crossover(&xs, |x| eval.evaluate(&Genes::Order(x.clone()))) {
                        children.push(Individual { genes: Genes::Order(x), fitness: f });
                    }
                }
            }
        }

        let parent_fitness: Vec<usize> = pop.iter().map(|i| i.fitness).collect();
        let child_fitness: Vec<usize> = children.iter().map(|i| i.fitness).collect();
        let mut union: Vec<Individual> = pop.iter().cloned().chain(children).collect();
        // stable, so incumbents precede children of equal fitness
        union.sort_by_key(|i| i.fitness);
        union.truncate(n_pop);
        let stagnant = sorted_genes(&union) == sorted_genes(&pop);
        pop = union;
        let survivor_fitness: Vec<usize> = pop.iter().map(|i| i.fitness).collect();

        let mut reinitialized = false;
        if stagnant {
            threshold -= dec;
            if threshold <= 0.0 && eval.stop_reason().is_none() {
                let best = pop.swap_remove(0);
                pop.clear();
                pop.push(best);
                for _ in 1..n_pop {
                    let g = problem.random_genes(&mut rng);
                    pop.push(eval.individual(g));
                }
                (threshold, dec) = threshold_and_decrement(&pop, params.tau);
                reinits.push(generation);
                reinitialized = true;
            }
        }

        record(&mut trace, generation, eval.evals, &pop);
        hooks.notify(GenerationLog {
            generation,
            parent_fitness,
            child_fitness,
            survivor_fitness,
            crossovers,
            threshold: Some(threshold),
            reinitialized,
            best_so_far: eval.best_fitness(),
        });
    };

    Ok(eval.into_report(generation, stop, trace, reinits, params.seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::LinearCode;
    use crate::fixtures;
    use crate::gf::Elem;
    use crate::search::{operators, Representation, INVALID_FITNESS};
    use rand::Rng;

    fn params(repr: Representation, n: usize, evals: u64, seed: u64) -> SearchParams {
        SearchParams { population: n, max_evals: evals, seed, ..SearchParams::defaults_for(repr) }
    }

    #[test]
    fn finds_distance_of_worked_code() {
        let code = LinearCode::new(fixtures::g_4_8()).unwrap();
        let problem = Problem::new(&code, Representation::Order);
        for seed in 0..100 {
            let mut p = params(Representation::Order, 16, 10_000, seed);
            p.target_weight = Some(2);
            let r = run_chc(&problem, &p).unwrap();
            assert_eq!(r.best.d, 2, "seed {seed}");
            assert!(r.best.verify(&code));
        }
    }

    #[test]
    fn identical_population_restarts_at_once() {
        // d = 0 and dec = 0: the first stagnant generation drives d to 0
        let code = LinearCode::new(fixtures::g_4_8()).unwrap();
        let problem = Problem::new(&code, Representation::Discrete);
        let m = Genes::Discrete(vec![Elem(1), Elem(0), Elem(2), Elem(0)]);
        let mut p = params(Representation::Discrete, 8, 40, 1);
        p.chc_literal = true;
        let mut logs = Vec::new();
        let mut obs = |l: &GenerationLog| logs.push(l.clone());
        let r = run_chc_with(&problem, &p, &mut RunHooks { initial: Some(vec![m; 8]), observer: Some(&mut obs) }).unwrap();
        assert_eq!(logs[0].crossovers, 0);
        assert!(logs[0].reinitialized);
        assert_eq!(r.reinitializations[0], 1);
    }

    #[test]
    fn threshold_decays_to_restart() {
        // two parents at distance D: the literal gate D < d never opens, so
        // every generation stagnates and d falls by tau*D until it hits 0
        let code = LinearCode::new(fixtures::g_4_8()).unwrap();
        let problem = Problem::new(&code, Representation::Order);
        let x = crate::matrix::Permutation::identity(8);
        let y = fixtures::x_4_8();
        let mut p = params(Representation::Order, 2, 1_000, 1);
        p.tau = 0.25;
        p.chc_literal = true;
        let mut logs = Vec::new();
        let mut obs = |l: &GenerationLog| logs.push(l.clone());
        let init = vec![Genes::Order(x), Genes::Order(y)];
        let r = run_chc_with(&problem, &p, &mut RunHooks { initial: Some(init), observer: Some(&mut obs) }).unwrap();
        assert_eq!(&logs[0].threshold, &Some(6.0));
        assert!(logs[..3].iter().all(|l| l.crossovers == 0 && !l.reinitialized));
        assert!(logs[3].reinitialized);
        assert_eq!(r.reinitializations[0], 4);
    }

    #[test]
    fn survivors_are_the_best_n() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let code = LinearCode::random(fixtures::gf8(), 14, 6, &mut rng);
        for repr in [Representation::Discrete, Representation::Order] {
            let problem = Problem::new(&code, repr);
            let mut ok = true;
            let mut bests = Vec::new();
            let mut obs = |l: &GenerationLog| {
                let mut all: Vec<usize> = l.parent_fitness.iter().chain(&l.child_fitness).copied().collect();
                all.sort();
                let mut got = l.survivor_fitness.clone();
                got.sort();
                ok &= got[..] == all[..got.len()];
                ok &= !got.contains(&INVALID_FITNESS);
                bests.push(got[0]);
            };
            run_chc_with(&problem, &params(repr, 20, 4000, 9), &mut RunHooks { initial: None, observer: Some(&mut obs) }).unwrap();
            assert!(ok);
            assert!(bests.windows(2).all(|w| w[1] <= w[0]));
        }
    }

    #[test]
    fn zero_children_never_survive() {
        let f = std::sync::Arc::new(crate::gf::Field::with_order(2).unwrap());
        let g = crate::matrix::MatrixGF::from_rows(f, &[[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]]).unwrap();
        let code = LinearCode::new(g).unwrap();
        let problem = Problem::new(&code, Representation::Discrete);
        let mut saw_invalid = false;
        let mut survivors_ok = true;
        let mut obs = |l: &GenerationLog| {
            saw_invalid |= l.child_fitness.contains(&INVALID_FITNESS);
            survivors_ok &= !l.survivor_fitness.contains(&INVALID_FITNESS);
        };
        run_chc_with(&problem, &params(Representation::Discrete, 6, 300, 2), &mut RunHooks { initial: None, observer: Some(&mut obs) }).unwrap();
        assert!(saw_invalid);
        assert!(survivors_ok);
    }

    #[test]
    fn literal_and_prose_gates_differ() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let code = LinearCode::random(fixtures::gf8(), 12, 5, &mut rng);
        let problem = Problem::new(&code, Representation::Order);
        let a = run_chc(&problem, &params(Representation::Order, 10, 500, 5)).unwrap();
        let mut lit = params(Representation::Order, 10, 500, 5);
        lit.chc_literal = true;
        let b = run_chc(&problem, &lit).unwrap();
        assert_ne!(a, b);
        assert!(a.best.verify(&code) && b.best.verify(&code));
    }

    #[test]
    fn overshoot_is_at_most_one_generation() {
        let code = LinearCode::new(fixtures::g_3_6()).unwrap();
        for repr in [Representation::Discrete, Representation::Order] {
            let problem = Problem::new(&code, repr);
            for budget in [1, 37, 100, 555] {
                let mut p = params(repr, 10, budget, budget);
                p.tau = 1.0;
                let r = run_chc(&problem, &p).unwrap();
                assert!(!r.reinitializations.is_empty() || budget < 100);
                assert!(r.evals_used >= budget.min(10) && r.evals_used <= budget + 10, "{repr:?} {budget}: {}", r.evals_used);
            }
        }
    }

    #[test]
    fn deterministic() {
        let code = LinearCode::new(fixtures::g_4_10()).unwrap();
        for repr in [Representation::Discrete, Representation::Order] {
            let problem = Problem::new(&code, repr);
            let mut p = params(repr, 12, 1500, rand::thread_rng().gen_range(0..1000));
            p.record_diversity = true;
            assert_eq!(run_chc(&problem, &p).unwrap(), run_chc(&problem, &p).unwrap());
        }
    }

    #[test]
    fn rejects_mismatched_initial_population() {
        let code = LinearCode::new(fixtures::g_4_8()).unwrap();
        let problem = Problem::new(&code, Representation::Order);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let init = vec![Genes::Order(operators::random_permutation(7, &mut rng)); 4];
        let r = run_chc_with(&problem, &params(Representation::Order, 4, 10, 0), &mut RunHooks { initial: Some(init), observer: None });
        assert!(matches!(r, Err(SearchError::BadInitialPopulation(_))));
    }
}

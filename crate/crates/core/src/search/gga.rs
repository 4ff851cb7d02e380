//! Generational genetic algorithm.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::operators::{ax_crossover, binary_tournament, random_mutation_discrete, swap_mutation, uniform_crossover};
use super::{
    check_problem, initial_population, record, Evaluator, GenerationLog, Genes, Individual, Problem, RunHooks, SearchError,
    SearchParams, SearchReport,
};

pub fn run_gga(problem: &Problem, params: &SearchParams) -> Result<SearchReport, SearchError> {
    run_gga_with(problem, params, &mut RunHooks::default())
}

/// GGA with instrumentation.
///
/// Each generation selects N parents by binary tournament, then for every
/// group (pairs, or `ax_m`-tuples for order chromosomes) either recombines
/// with probability `p_c` or mutates each member. Discrete children equal to
/// the zero message are replaced by random valid messages. If no child is at
/// least as good as the previous best, the worst child is replaced by it.
/// After `max_reinit` evaluations without strict improvement the population
/// is rebuilt from the best individual and N-1 random ones.
///
/// Stopping is checked between generations, so a run may exceed
/// `max_evals` by one generation's worth of evaluations: N, or
/// N * (m-1)! with `ax_m = m`.
pub fn run_gga_with(problem: &Problem, params: &SearchParams, hooks: &mut RunHooks) -> Result<SearchReport, SearchError> {
    check_problem(problem, params, true)?;
    let n_pop = params.population;
    let code = problem.code;
    let (k, q) = (code.k(), code.q());
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut eval = Evaluator::new(problem, params);
    let mut trace = params.record_diversity.then(Vec::new);
    let mut reinits = Vec::new();

    let init = initial_population(problem, n_pop, hooks, &mut rng)?;
    let mut pop: Vec<Individual> = init.into_iter().map(|g| eval.individual(g)).collect();
    record(&mut trace, 0, eval.evals, &pop);

    let mut generation = 0u64;
    let stop = loop {
        if let Some(reason) = eval.stop_reason() {
            break reason;
        }
        generation += 1;

        let fitness: Vec<usize> = pop.iter().map(|i| i.fitness).collect();
        let prev_best = *fitness.iter().min().unwrap();
        let parents: Vec<usize> = (0..n_pop).map(|_| binary_tournament(&fitness, &mut rng)).collect();

        let group = match problem.representation {
            super::Representation::Discrete => 2,
            super::Representation::Order => params.ax_m,
        };
        let mut children: Vec<Individual> = Vec::with_capacity(n_pop);
        let mut crossovers = 0;
        let mut chunks = parents.chunks_exact(group);
        for chunk in &mut chunks {
            if rng.gen::<f64>() < params.crossover_prob {
                crossovers += 1;
                match &pop[chunk[0]].genes {
                    Genes::Discrete(_) => {
                        let (Genes::Discrete(a), Genes::Discrete(b)) = (&pop[chunk[0]].genes, &pop[chunk[1]].genes) else {
                            unreachable!()
                        };
                        let (c1, c2) = uniform_crossover(a, b, &mut rng);
                        for c in [c1, c2] {
                            let g = repair(Genes::Discrete(c), problem, &mut rng);
                            children.push(eval.individual(g));
                        }
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
            } else {
                for &i in chunk {
                    let g = mutate(&pop[i].genes, params, k, q, &mut rng)?;
                    let g = repair(g, problem, &mut rng);
                    children.push(eval.individual(g));
                }
            }
        }
        for &i in chunks.remainder() {
            let g = mutate(&pop[i].genes, params, k, q, &mut rng)?;
            let g = repair(g, problem, &mut rng);
            children.push(eval.individual(g));
        }

        let child_fitness: Vec<usize> = children.iter().map(|c| c.fitness).collect();
        if child_fitness.iter().all(|&f| f > prev_best) {
            let best_idx = first_min(&fitness);
            let worst_idx = first_max(&child_fitness);
            children[worst_idx] = pop[best_idx].clone();
        }
        let survivor_fitness: Vec<usize> = children.iter().map(|c| c.fitness).collect();
        pop = children;

        // a restart just before stopping would only overshoot the budget
        let mut reinitialized = false;
        if eval.since_improvement >= params.max_reinit && eval.stop_reason().is_none() {
            let best_idx = first_min(&survivor_fitness);
            let best = pop.swap_remove(best_idx);
            pop.clear();
            pop.push(best);
            for _ in 1..n_pop {
                let g = problem.random_genes(&mut rng);
                pop.push(eval.individual(g));
            }
            eval.since_improvement = 0;
            reinits.push(generation);
            reinitialized = true;
        }

        record(&mut trace, generation, eval.evals, &pop);
        hooks.notify(GenerationLog {
            generation,
            parent_fitness: parents.iter().map(|&i| fitness[i]).collect(),
            child_fitness,
            survivor_fitness,
            crossovers,
            threshold: None,
            reinitialized,
            best_so_far: eval.best_fitness(),
        });
    };

    Ok(eval.into_report(generation, stop, trace, reinits, params.seed))
}

fn mutate(genes: &Genes, params: &SearchParams, k: usize, q: usize, rng: &mut ChaCha8Rng) -> Result<Genes, SearchError> {
    Ok(match genes {
        Genes::Discrete(m) => Genes::Discrete(random_mutation_discrete(m, params.mutation_prob, q, rng)),
        Genes::Order(x) => Genes::Order(swap_mutation(x, k, rng)?),
    })
}

fn repair(genes: Genes, problem: &Problem, rng: &mut ChaCha8Rng) -> Genes {
    if genes.is_zero_message() {
        problem.random_genes(rng)
    } else {
        genes
    }
}

fn first_min(v: &[usize]) -> usize {
    let m = *v.iter().min().unwrap();
    v.iter().position(|&x| x == m).unwrap()
}

fn first_max(v: &[usize]) -> usize {
    let m = *v.iter().max().unwrap();
    v.iter().position(|&x| x == m).unwrap()
}

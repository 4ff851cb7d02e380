//! Selection, recombination and mutation operators.

use rand::seq::SliceRandom;
use rand::Rng;

use super::SearchError;
use crate::gf::Elem;
use crate::matrix::Permutation;

/// Draws two indices uniformly with replacement and returns the fitter one;
/// on a tie the first draw wins.
pub fn binary_tournament(fitness: &[usize], rng: &mut impl Rng) -> usize {
    assert!(!fitness.is_empty(), "tournament on an empty population");
    let a = rng.gen_range(0..fitness.len());
    let b = rng.gen_range(0..fitness.len());
    if fitness[b] < fitness[a] {
        b
    } else {
        a
    }
}

/// Swaps each position between the parents with probability 1/2.
pub fn uniform_crossover(a: &[Elem], b: &[Elem], rng: &mut impl Rng) -> (Vec<Elem>, Vec<Elem>) {
    assert_eq!(a.len(), b.len());
    let mut c1 = a.to_vec();
    let mut c2 = b.to_vec();
    for i in 0..a.len() {
        if rng.gen::<bool>() {
            std::mem::swap(&mut c1[i], &mut c2[i]);
        }
    }
    (c1, c2)
}

/// Replaces each gene with probability `p_m` by a different element of
/// GF(q), drawn uniformly.
pub fn random_mutation_discrete(genes: &[Elem], p_m: f64, q: usize, rng: &mut impl Rng) -> Vec<Elem> {
    genes
        .iter()
        .map(|&g| {
            if q > 1 && rng.gen::<f64>() < p_m {
                let r = rng.gen_range(0..q as u16 - 1);
                Elem(if r >= g.0 { r + 1 } else { r })
            } else {
                g
            }
        })
        .collect()
}

/// Algebraic crossover: composes the `m` parents in every order (parent
/// index permutations enumerated lexicographically), scores every candidate
/// and keeps the `m` fittest, ties going to the earlier candidate.
pub fn ax_crossover(parents: &[&Permutation], mut fitness: impl FnMut(&Permutation) -> usize) -> Vec<(Permutation, usize)> {
    let m = parents.len();
    assert!(m >= 2, "AX needs at least two parents");
    let mut order: Vec<usize> = (0..m).collect();
    let mut candidates = Vec::new();
    loop {
        let mut x = parents[order[0]].clone();
        for &i in &order[1..] {
            x = x.compose(parents[i]).expect("parents have equal length");
        }
        let f = fitness(&x);
        candidates.push((x, f));
        if !next_permutation(&mut order) {
            break;
        }
    }
    // stable: earlier candidates win ties
    candidates.sort_by_key(|&(_, f)| f);
    candidates.truncate(m);
    candidates
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Swaps a column of the pivot region `[0, k)` of `G * P_x` with one of the
/// region `[k, n)`, i.e. exchanges `x[a]` and `x[b]` for `a < k <= b`.
pub fn swap_mutation(x: &Permutation, k: usize, rng: &mut impl Rng) -> Result<Permutation, SearchError> {
    let n = x.len();
    if k == 0 || k >= n {
        return Err(SearchError::DegenerateDimensions);
    }
    let a = rng.gen_range(0..k);
    let b = rng.gen_range(k..n);
    let mut y = x.clone();
    y.swap_positions(a, b);
    Ok(y)
}

pub fn random_permutation(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    Permutation::new(map).expect("shuffle of identity")
}

/// Uniform over the nonzero vectors of GF(q)^k, by rejection.
pub fn random_message(k: usize, q: usize, rng: &mut impl Rng) -> Vec<Elem> {
    loop {
        let m: Vec<Elem> = (0..k).map(|_| Elem(rng.gen_range(0..q as u16))).collect();
        if m.iter().any(|e| !e.is_zero()) {
            return m;
        }
    }
}

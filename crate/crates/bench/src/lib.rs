//! Workloads shared by the benchmarks.

use mindist::{Field, LinearCode};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// A random full-rank `[n, k]` code over GF(q), fixed by `seed`.
pub fn random_code(q: u32, n: usize, k: usize, seed: u64) -> LinearCode {
    let field = Arc::new(Field::with_order(q).expect("valid field order"));
    LinearCode::random(field, n, k, &mut ChaCha8Rng::seed_from_u64(seed))
}

//! Linear codes, the two fitness maps and exact distance by enumeration.
//!
//! A code is given by a full-rank `k x n` generating matrix. The order
//! fitness of a column permutation `x` is the least row weight of
//! `RREF(G * P_x)`; some permutation always attains the minimum distance, and
//! the lightest row mapped back through `P_x^{-1}` is a codeword of that
//! weight. The discrete fitness of a nonzero message `m` is `w(m * G)`.

use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Elem, Field};
use crate::matrix::{self, MatrixError, MatrixGF, Permutation};

/// Default number of scalar classes the brute-force oracle will enumerate.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("generator has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("the zero message does not encode a nonzero codeword")]
    ZeroMessage,
    #[error("enumeration needs {required} codewords, cap is {cap}")]
    TooLarge { required: u64, cap: u64 },
    #[error("k = n leaves no non-pivot region")]
    DegenerateDimensions,
    #[error("minimum weight backend failed: {0}")]
    BackendFailure(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Number of nonzero entries.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

/// Number of errors a code of minimum distance `d` is guaranteed to correct.
pub fn error_capability(d: usize) -> usize {
    d.saturating_sub(1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Codeword {
    entries: Vec<Elem>,
    weight: usize,
}

impl Codeword {
    pub fn new(entries: Vec<Elem>) -> Self {
        let weight = weight(&entries);
        Codeword { entries, weight }
    }

    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn into_entries(self) -> Vec<Elem> {
        self.entries
    }
}

/// An upper bound on the minimum distance certified by a codeword.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub d: usize,
    pub witness: Codeword,
    /// Set only when the bound is known to be the true distance.
    pub exact: bool,
}

impl DistanceBound {
    /// Whether the witness is a nonzero codeword of `code` of weight `d`.
    pub fn verify(&self, code: &LinearCode) -> bool {
        self.d >= 1 && self.witness.weight() == self.d && code.contains(self.witness.entries())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: MatrixGF,
    rref: MatrixGF,
    pivots: Vec<usize>,
}

impl LinearCode {
    pub fn new(generator: MatrixGF) -> Result<Self, CodeError> {
        let k = generator.rows();
        let (rref, rank) = generator.rref();
        if rank != k {
            return Err(CodeError::RankDeficient { rank, k });
        }
        let pivots = rref.row_iter().map(|row| row.iter().position(|e| !e.is_zero()).unwrap()).collect();
        Ok(LinearCode { generator, rref, pivots })
    }

    /// A uniformly random `k x n` generating matrix of full rank.
    pub fn random(field: Arc<Field>, n: usize, k: usize, rng: &mut impl Rng) -> Self {
        assert!(1 <= k && k <= n, "need 1 <= k <= n");
        let q = field.order() as u16;
        loop {
            let data = (0..k * n).map(|_| Elem(rng.gen_range(0..q))).collect();
            let g = MatrixGF::new(field.clone(), k, n, data).unwrap();
            if let Ok(code) = LinearCode::new(g) {
                return code;
            }
        }
    }

    pub fn generator(&self) -> &MatrixGF {
        &self.generator
    }

    /// The generator in reduced row echelon form.
    pub fn systematic(&self) -> &MatrixGF {
        &self.rref
    }

    pub fn field(&self) -> &Arc<Field> {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn q(&self) -> usize {
        self.field().order()
    }

    /// `v` minus its projection on the code along the pivot coordinates.
    /// Zero exactly when `v` is a codeword.
    pub fn residual(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut r = v.to_vec();
        for (row, &p) in self.rref.row_iter().zip(&self.pivots) {
            let c = r[p];
            if !c.is_zero() {
                f.axpy(&mut r, f.neg(c), row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n() && self.residual(v).iter().all(|e| e.is_zero())
    }

    pub fn encode(&self, m: &[Elem]) -> Result<Codeword, CodeError> {
        if m.len() != self.k() {
            return Err(CodeError::LengthMismatch { expected: self.k(), got: m.len() });
        }
        Ok(Codeword::new(self.generator.vec_mul(m)?))
    }

    /// Least row weight of `RREF(G * P_x)` and that row moved back through
    /// `P_x^{-1}`, which is a codeword.
    pub fn fitness_order(&self, x: &Permutation) -> Result<(usize, Codeword), CodeError> {
        let mut eval = OrderEvaluator::new(self);
        let (w, row) = eval.evaluate(x)?;
        Ok((w, eval.witness(x, row)))
    }

    /// Weight of `m * G` for a nonzero message.
    pub fn fitness_discrete(&self, m: &[Elem]) -> Result<(usize, Codeword), CodeError> {
        if m.iter().all(|e| e.is_zero()) {
            return Err(CodeError::ZeroMessage);
        }
        let c = self.encode(m)?;
        Ok((c.weight(), c))
    }

    /// Number of nonzero messages with first nonzero coordinate equal to 1.
    pub fn scalar_classes(&self) -> Option<u64> {
        let q = self.q() as u64;
        q.checked_pow(self.k() as u32).map(|qk| (qk - 1) / (q - 1))
    }

    pub fn brute_force_distance(&self) -> Result<DistanceBound, CodeError> {
        self.brute_force_distance_capped(DEFAULT_ENUMERATION_CAP)
    }

    /// Exact minimum distance by enumerating one message per scalar class.
    pub fn brute_force_distance_capped(&self, cap: u64) -> Result<DistanceBound, CodeError> {
        let required = self.scalar_classes().unwrap_or(u64::MAX);
        if required > cap {
            return Err(CodeError::TooLarge { required, cap });
        }
        let f = self.field();
        let (k, n, q) = (self.k(), self.n(), self.q());
        let rows: Vec<&[Elem]> = self.rref.row_iter().collect();
        let mut best: Option<Vec<Elem>> = None;
        let mut best_w = usize::MAX;
        let mut digits = vec![0usize; k];
        let mut acc = vec![Elem::ZERO; n];

        'lead: for lead in 0..k {
            acc.copy_from_slice(rows[lead]);
            digits.iter_mut().for_each(|d| *d = 0);
            loop {
                let w = weight(&acc);
                if w < best_w {
                    best_w = w;
                    best = Some(acc.clone());
                    if w == 1 {
                        break 'lead;
                    }
                }
                // odometer over the free digits lead+1..k
                let mut j = k;
                loop {
                    if j == lead + 1 {
                        continue 'lead;
                    }
                    j -= 1;
                    let old = Elem(digits[j] as u16);
                    if digits[j] + 1 < q {
                        digits[j] += 1;
                        let delta = f.sub(Elem(digits[j] as u16), old);
                        f.axpy(&mut acc, delta, rows[j]);
                        break;
                    }
                    digits[j] = 0;
                    f.axpy(&mut acc, f.neg(old), rows[j]);
                }
            }
        }

        let witness = Codeword::new(best.expect("k >= 1 gives at least one class"));
        Ok(DistanceBound { d: best_w, witness, exact: true })
    }
}

/// Reusable scratch space for repeated order-fitness evaluations.
pub struct OrderEvaluator<'a> {
    code: &'a LinearCode,
    scratch: Vec<Elem>,
}

impl<'a> OrderEvaluator<'a> {
    pub fn new(code: &'a LinearCode) -> Self {
        OrderEvaluator { code, scratch: vec![Elem::ZERO; code.k() * code.n()] }
    }

    pub fn code(&self) -> &'a LinearCode {
        self.code
    }

    /// Least row weight of `RREF(G * P_x)` and the index of that row.
    pub fn evaluate(&mut self, x: &Permutation) -> Result<(usize, usize), CodeError> {
        let code = self.code;
        let n = code.n();
        if x.len() != n {
            return Err(CodeError::LengthMismatch { expected: n, got: x.len() });
        }
        // the systematic generator is row equivalent to G, so both have the
        // same RREF after any column permutation
        matrix::permute_into(code.rref.data(), n, x.as_slice(), &mut self.scratch);
        matrix::rref_in_place(code.field(), &mut self.scratch, code.k(), n);
        Ok(matrix::min_row_weight(&self.scratch, n).expect("full rank code has nonzero rows"))
    }

    /// Row `row` of the last evaluated RREF, mapped back into the code
    /// through `P_x^{-1}`: entry `i` returns to position `x[i]`.
    pub fn witness(&self, x: &Permutation, row: usize) -> Codeword {
        let n = self.code.n();
        let b = &self.scratch[row * n..(row + 1) * n];
        let mut c = vec![Elem::ZERO; n];
        for (&v, &to) in b.iter().zip(x.as_slice()) {
            c[to] = v;
        }
        Codeword::new(c)
    }

    /// The last evaluated RREF.
    pub fn last_rref(&self) -> &[Elem] {
        &self.scratch
    }
}

/// Anything that can produce a nonzero codeword of least weight.
pub trait MinWeightBackend {
    fn min_weight_codeword(&self, code: &LinearCode) -> Result<Codeword, CodeError>;
}

/// Exhaustive enumeration.
#[derive(Debug, Clone, Copy)]
pub struct BruteForce {
    pub cap: u64,
}

impl Default for BruteForce {
    fn default() -> Self {
        BruteForce { cap: DEFAULT_ENUMERATION_CAP }
    }
}

impl MinWeightBackend for BruteForce {
    fn min_weight_codeword(&self, code: &LinearCode) -> Result<Codeword, CodeError> {
        code.brute_force_distance_capped(self.cap).map(|b| b.witness)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecodeStatus {
    /// The received word was already a codeword.
    NoErrorDetected,
    /// An error pattern was removed.
    Corrected,
    /// The backend returned a codeword of the original code, so no error
    /// pattern could be identified; the result is a codeword but not
    /// necessarily the nearest one.
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: Codeword,
    pub error: Codeword,
    pub status: DecodeStatus,
}

/// Nearest-codeword decoding through a minimum weight codeword search on the
/// code spanned by `G` and `y`. Correct whenever the error weight is at most
/// the error capability of the code and the backend is exact.
pub fn decode(code: &LinearCode, y: &[Elem], backend: &dyn MinWeightBackend) -> Result<Decoded, CodeError> {
    let n = code.n();
    if y.len() != n {
        return Err(CodeError::LengthMismatch { expected: n, got: y.len() });
    }
    let f = code.field();
    let ry = code.residual(y);
    let Some(pos) = ry.iter().position(|e| !e.is_zero()) else {
        return Ok(Decoded {
            codeword: Codeword::new(y.to_vec()),
            error: Codeword::new(vec![Elem::ZERO; n]),
            status: DecodeStatus::NoErrorDetected,
        });
    };

    let extended = LinearCode::new(code.generator().stack_row(y)?)?;
    let w = backend.min_weight_codeword(&extended)?;
    if !extended.contains(w.entries()) || w.weight() == 0 {
        return Err(CodeError::BackendFailure("backend returned a non-codeword".into()));
    }

    // w = c + lambda*y for some c in C; the residual isolates lambda
    let rw = code.residual(w.entries());
    let lambda = f.mul(rw[pos], f.inv(ry[pos]).unwrap());
    if lambda.is_zero() {
        let fallback: Vec<Elem> = y.iter().zip(&ry).map(|(&a, &b)| f.sub(a, b)).collect();
        return Ok(Decoded { codeword: Codeword::new(fallback), error: Codeword::new(ry), status: DecodeStatus::Unresolved });
    }
    let inv = f.inv(lambda).unwrap();
    let e: Vec<Elem> = w.entries().iter().map(|&v| f.mul(inv, v)).collect();
    let c: Vec<Elem> = y.iter().zip(&e).map(|(&a, &b)| f.sub(a, b)).collect();
    debug_assert!(code.contains(&c));
    Ok(Decoded { codeword: Codeword::new(c), error: Codeword::new(e), status: DecodeStatus::Corrected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Every message, no scalar-class shortcut.
    fn naive_distance(code: &LinearCode) -> usize {
        let (k, q) = (code.k(), code.q());
        let mut best = usize::MAX;
        for idx in 1..(q as u64).pow(k as u32) {
            let mut m = Vec::with_capacity(k);
            let mut v = idx;
            for _ in 0..k {
                m.push(Elem((v % q as u64) as u16));
                v /= q as u64;
            }
            best = best.min(code.encode(&m).unwrap().weight());
        }
        best
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        // Heap's algorithm
        let mut a: Vec<usize> = (0..n).collect();
        let mut c = vec![0; n];
        let mut out = vec![a.clone()];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i);
                } else {
                    a.swap(c[i], i);
                }
                out.push(a.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    #[test]
    fn example_codes() {
        let c = LinearCode::new(fixtures::g_3_6()).unwrap();
        assert_eq!((c.n(), c.k(), c.q()), (6, 3, 8));
        let b = c.brute_force_distance().unwrap();
        assert_eq!(b.d, 2);
        assert!(b.exact && b.verify(&c));

        let c = LinearCode::new(fixtures::g_4_8()).unwrap();
        assert_eq!(c.brute_force_distance().unwrap().d, 2);
        let (w, witness) = c.fitness_order(&fixtures::x_4_8()).unwrap();
        assert_eq!(w, 2);
        assert!(c.contains(witness.entries()));
        assert_eq!(witness.weight(), 2);
    }

    #[test]
    fn generation_example_fitnesses() {
        // these separate the two possible column actions of a permutation
        let c = LinearCode::new(fixtures::g_4_10()).unwrap();
        let pop = fixtures::example2_population();
        let fs: Vec<usize> = pop.iter().map(|x| c.fitness_order(x).unwrap().0).collect();
        assert_eq!(fs, [4, 6, 5, 5]);
        for x in &pop {
            let (w, witness) = c.fitness_order(x).unwrap();
            assert!(c.contains(witness.entries()) && witness.weight() == w);
        }
    }

    #[test]
    fn discrete_fitness_example() {
        let c = LinearCode::new(fixtures::g_3_6()).unwrap();
        let f = c.field().clone();
        let a4 = f.pow_primitive(4);
        let (w, cw) = c.fitness_discrete(&[Elem::ONE, a4, Elem::ZERO]).unwrap();
        assert_eq!(w, 2);
        assert_eq!(cw.entries(), &[Elem::ONE, a4, Elem::ZERO, Elem::ZERO, Elem::ZERO, Elem::ZERO]);
        assert_eq!(c.fitness_discrete(&[Elem::ZERO; 3]), Err(CodeError::ZeroMessage));
        for i in 0..3 {
            let mut e = vec![Elem::ZERO; 3];
            e[i] = Elem::ONE;
            assert_eq!(c.fitness_discrete(&e).unwrap().0, weight(c.generator().row(i)));
        }
    }

    #[test]
    fn weights_and_capability() {
        let f = Field::new(2, 3, None).unwrap();
        assert_eq!(weight(&[Elem::ONE, f.pow_primitive(4), Elem::ZERO, Elem::ZERO, Elem::ZERO, Elem::ZERO]), 2);
        assert_eq!(weight(&[Elem::ZERO; 5]), 0);
        assert_eq!(weight(&[Elem::ONE; 7]), 7);
        assert_eq!(error_capability(2), 0);
        assert_eq!(error_capability(3), 1);
        assert_eq!(error_capability(48), 23);
        assert_eq!(error_capability(1), 0);
    }

    #[test]
    fn rank_checks() {
        let f = fixtures::gf8();
        let padded = MatrixGF::from_rows(f.clone(), &[[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0]]).unwrap();
        let c = LinearCode::new(padded).unwrap();
        assert_eq!(c.brute_force_distance().unwrap().d, 1);
        let dup = MatrixGF::from_rows(f, &[[1, 2, 3, 4], [1, 2, 3, 4], [0, 1, 0, 1]]).unwrap();
        assert_eq!(LinearCode::new(dup).unwrap_err(), CodeError::RankDeficient { rank: 2, k: 3 });
    }

    #[test]
    fn identity_permutation_on_systematic_generator() {
        let c = LinearCode::new(fixtures::g_3_6()).unwrap();
        let (w, _) = c.fitness_order(&Permutation::identity(6)).unwrap();
        let rows_min = c.generator().min_row_weight().unwrap().0;
        assert_eq!(w, rows_min);
        assert!(c.fitness_order(&Permutation::identity(5)).is_err());
    }

    #[test]
    fn brute_force_too_large() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = LinearCode::random(fixtures::gf8(), 12, 6, &mut rng);
        assert_eq!(c.brute_force_distance_capped(100), Err(CodeError::TooLarge { required: 37449, cap: 100 }));
    }

    #[test]
    fn oracle_agrees_with_naive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for q in [2u32, 3, 4, 5, 8, 9] {
            let f = Arc::new(Field::with_order(q).unwrap());
            for _ in 0..10 {
                let n = rng.gen_range(2..9);
                let k = rng.gen_range(1..=n.min(4));
                let c = LinearCode::random(f.clone(), n, k, &mut rng);
                let b = c.brute_force_distance().unwrap();
                assert_eq!(b.d, naive_distance(&c));
                assert!(b.verify(&c));
            }
        }
    }

    #[test]
    fn minimum_over_all_permutations_is_distance() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for q in [2u32, 3, 4, 8] {
            let f = Arc::new(Field::with_order(q).unwrap());
            for _ in 0..4 {
                let n = rng.gen_range(3..=7);
                let k = rng.gen_range(1..=n.min(4));
                let c = LinearCode::random(f.clone(), n, k, &mut rng);
                let d = c.brute_force_distance().unwrap().d;
                let mut eval = OrderEvaluator::new(&c);
                let mut best = usize::MAX;
                for p in all_permutations(n) {
                    let x = Permutation::new(p).unwrap();
                    let (w, row) = eval.evaluate(&x).unwrap();
                    assert!(w >= d);
                    let wit = eval.witness(&x, row);
                    assert!(c.contains(wit.entries()) && wit.weight() == w);
                    best = best.min(w);
                }
                assert_eq!(best, d, "q={q} n={n} k={k}");
            }
        }
    }

    #[test]
    fn permutation_equivalent_codes_share_distance() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..20 {
            let c = LinearCode::random(fixtures::gf4(), 8, 3, &mut rng);
            let mut p: Vec<usize> = (0..8).collect();
            p.shuffle(&mut rng);
            let x = Permutation::new(p).unwrap();
            let cx = LinearCode::new(c.generator().permute_columns(&x).unwrap()).unwrap();
            assert_eq!(c.brute_force_distance().unwrap().d, cx.brute_force_distance().unwrap().d);
        }
    }

    #[test]
    fn swapping_non_pivot_columns_keeps_fitness() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..50 {
            let n = 9;
            let k = 4;
            let c = LinearCode::random(fixtures::gf8(), n, k, &mut rng);
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            let x = Permutation::new(p).unwrap();
            let mut eval = OrderEvaluator::new(&c);
            let (w, _) = eval.evaluate(&x).unwrap();
            let gx = c.generator().permute_columns(&x).unwrap();
            let last_pivot = *gx.pivot_columns().last().unwrap();
            let free: Vec<usize> = (last_pivot + 1..n).collect();
            if free.len() < 2 {
                continue;
            }
            let (a, b) = (free[0], free[free.len() - 1]);
            // (a b)∘x swaps columns a and b of G * P_x
            let y = Permutation::transposition(n, a, b).compose(&x).unwrap();
            assert_eq!(c.generator().permute_columns(&y).unwrap(), {
                let mut m = gx.clone();
                for r in 0..k {
                    let (va, vb) = (m.get(r, a), m.get(r, b));
                    m.set(r, a, vb);
                    m.set(r, b, va);
                }
                m
            });
            assert_eq!(eval.evaluate(&y).unwrap().0, w);
        }
    }

    #[test]
    fn membership_via_residual() {
        let c = LinearCode::new(fixtures::g_3_6()).unwrap();
        let f = c.field().clone();
        let a = f.primitive();
        let pw = |e| f.pow_primitive(e);
        let word = [Elem::ONE, a, Elem::ONE, pw(3), pw(4), pw(3)];
        assert!(c.contains(&word));
        assert!(c.contains(&[Elem::ZERO; 6]));
        let mut bad = word;
        bad[5] = f.add(bad[5], Elem::ONE);
        assert!(!c.contains(&bad));
    }

    #[test]
    fn decode_clean_word() {
        let c = LinearCode::new(fixtures::g_4_8()).unwrap();
        let y = c.encode(&[Elem(1), Elem(2), Elem(0), Elem(3)]).unwrap();
        let out = decode(&c, y.entries(), &BruteForce::default()).unwrap();
        assert_eq!(out.status, DecodeStatus::NoErrorDetected);
        assert_eq!(out.codeword, y);
        assert_eq!(out.error.weight(), 0);
    }

    #[test]
    fn decode_below_capability_still_returns_codeword() {
        // d = 2 means t = 0: a single error is detected but not correctable
        let c = LinearCode::new(fixtures::g_4_8()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..20 {
            let m: Vec<Elem> = (0..4).map(|_| Elem(rng.gen_range(0..4))).collect();
            let mut y = c.encode(&m).unwrap().into_entries();
            let pos = rng.gen_range(0..8);
            y[pos] = c.field().add(y[pos], Elem(rng.gen_range(1..4)));
            let out = decode(&c, &y, &BruteForce::default()).unwrap();
            assert!(c.contains(out.codeword.entries()));
        }
    }

    #[test]
    fn decode_corrects_up_to_capability_over_gf4() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        let f = fixtures::gf4();
        let c = loop {
            let c = LinearCode::random(f.clone(), 12, 3, &mut rng);
            if c.brute_force_distance().unwrap().d >= 5 {
                break c;
            }
        };
        let t = error_capability(c.brute_force_distance().unwrap().d);
        for _ in 0..50 {
            let m: Vec<Elem> = (0..3).map(|_| Elem(rng.gen_range(0..4))).collect();
            let sent = c.encode(&m).unwrap();
            let mut y = sent.entries().to_vec();
            let mut pos: Vec<usize> = (0..12).collect();
            pos.shuffle(&mut rng);
            for &p in &pos[..rng.gen_range(1..=t)] {
                y[p] = f.add(y[p], Elem(rng.gen_range(1..4)));
            }
            let out = decode(&c, &y, &BruteForce::default()).unwrap();
            assert_eq!(out.codeword, sent);
            assert_eq!(out.status, DecodeStatus::Corrected);
        }
    }

    #[test]
    fn decode_length_mismatch() {
        let c = LinearCode::new(fixtures::g_4_8()).unwrap();
        assert!(matches!(decode(&c, &[Elem::ZERO; 3], &BruteForce::default()), Err(CodeError::LengthMismatch { .. })));
    }
}

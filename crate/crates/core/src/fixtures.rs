//! Small worked codes used throughout the tests and documentation.
//!
//! Entries are packed polynomial-basis integers. Over GF(4) = {0, 1, a, a+1}
//! that is `a = 2` and `a + 1 = 3`; over GF(8) with modulus a^3 + a + 1 the
//! powers a^0..a^6 are 1, 2, 4, 3, 6, 7, 5.

use std::sync::Arc;

use crate::gf::Field;
use crate::matrix::{MatrixGF, Permutation};

pub fn gf4() -> Arc<Field> {
    Arc::new(Field::new(2, 2, Some(0b111)).expect("GF(4)"))
}

pub fn gf8() -> Arc<Field> {
    Arc::new(Field::new(2, 3, Some(0b1011)).expect("GF(8)"))
}

/// A [6,3,2] code over GF(8) in systematic form.
pub fn g_3_6() -> MatrixGF {
    MatrixGF::from_rows(gf8(), &[[1, 0, 0, 7, 4, 6], [0, 1, 0, 2, 7, 1], [0, 0, 1, 0, 7, 7]]).unwrap()
}

/// An [8,4,2] code over GF(4).
pub fn g_4_8() -> MatrixGF {
    MatrixGF::from_rows(
        gf4(),
        &[
            [1, 0, 3, 3, 3, 0, 0, 2],
            [3, 0, 0, 3, 2, 3, 1, 3],
            [1, 3, 1, 3, 2, 0, 2, 0],
            [0, 0, 0, 2, 2, 2, 3, 2],
        ],
    )
    .unwrap()
}

/// The product of the transpositions (0 1)(2 3)(4 5)(6 7).
pub fn x_4_8() -> Permutation {
    Permutation::new(vec![1, 0, 3, 2, 5, 4, 7, 6]).unwrap()
}

/// `g_4_8() * P_x` for `x = x_4_8()`.
pub fn g_4_8_permuted() -> MatrixGF {
    MatrixGF::from_rows(
        gf4(),
        &[
            [0, 1, 3, 3, 0, 3, 2, 0],
            [0, 3, 3, 0, 3, 2, 3, 1],
            [3, 1, 3, 1, 0, 2, 0, 2],
            [0, 0, 2, 0, 2, 2, 2, 3],
        ],
    )
    .unwrap()
}

/// RREF of [`g_4_8_permuted`]; row weights 4, 2, 5, 5.
pub fn g_4_8_permuted_rref() -> MatrixGF {
    MatrixGF::from_rows(
        gf4(),
        &[
            [1, 0, 0, 0, 3, 0, 2, 2],
            [0, 1, 0, 0, 0, 2, 0, 0],
            [0, 0, 1, 0, 1, 1, 1, 2],
            [0, 0, 0, 1, 1, 3, 2, 2],
        ],
    )
    .unwrap()
}

/// A [10,4] code over GF(4) used to illustrate one GGA-Order generation.
pub fn g_4_10() -> MatrixGF {
    MatrixGF::from_rows(
        gf4(),
        &[
            [2, 1, 3, 0, 0, 2, 1, 1, 3, 2],
            [2, 0, 2, 1, 1, 3, 2, 3, 3, 2],
            [0, 1, 3, 1, 3, 2, 0, 2, 2, 3],
            [2, 1, 1, 0, 0, 1, 3, 2, 3, 1],
        ],
    )
    .unwrap()
}

/// Chromosomes c1..c4 for [`g_4_10`], fitnesses 4, 6, 5, 5.
pub fn example2_population() -> [Permutation; 4] {
    [
        Permutation::from_one_based(&[6, 4, 3, 9, 7, 10, 2, 1, 8, 5]).unwrap(),
        Permutation::from_one_based(&[9, 3, 7, 10, 1, 4, 5, 2, 8, 6]).unwrap(),
        Permutation::from_one_based(&[1, 8, 9, 7, 6, 2, 3, 10, 4, 5]).unwrap(),
        Permutation::from_one_based(&[2, 9, 8, 3, 4, 10, 6, 5, 7, 1]).unwrap(),
    ]
}

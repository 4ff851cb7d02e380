//! Upper bounds on the minimum distance of linear codes over GF(p^r).
//!
//! The pieces, bottom up: finite field arithmetic ([`gf`]), dense matrices
//! with reduced row echelon form and column permutations ([`matrix`]),
//! linear codes with their fitness maps, exact enumeration and a general
//! decoder ([`code`]), and the metaheuristic searches ([`search`]).
//!
//! ```
//! use mindist::{fixtures, LinearCode};
//!
//! let code = LinearCode::new(fixtures::g_4_8()).unwrap();
//! let (w, _) = code.fitness_order(&fixtures::x_4_8()).unwrap();
//! assert_eq!(w, 2);
//! assert_eq!(code.brute_force_distance().unwrap().d, 2);
//! ```

pub mod code;
pub mod fixtures;
pub mod gf;
pub mod matrix;
pub mod search;

pub use code::{
    decode, error_capability, weight, BruteForce, CodeError, Codeword, DecodeStatus, Decoded, DistanceBound, LinearCode,
    MinWeightBackend,
};
pub use gf::{Elem, Field, FieldError};
pub use matrix::{MatrixError, MatrixGF, Permutation};
pub use search::{
    Algorithm, Genes, Problem, Representation, SearchBackend, SearchError, SearchParams, SearchReport, StopReason,
};

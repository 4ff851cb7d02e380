//! Dense matrices over a [`Field`], Gauss-Jordan reduction and column
//! permutations.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Elem, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("entry {0} is not an element of the field")]
    InvalidEntry(Elem),
    #[error("all rows are zero")]
    AllRowsZero,
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("matrices are over different fields")]
    FieldMismatch,
}

/// A dense row-major `rows x cols` matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixGF {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for MatrixGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatrixGF {}x{} over GF({})", self.rows, self.cols, self.field.order())?;
        for row in self.row_iter() {
            let line: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", line.join(" "))?;
        }
        Ok(())
    }
}

impl MatrixGF {
    pub fn new(field: Arc<Field>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self, MatrixError> {
        if rows == 0 || cols == 0 {
            return Err(MatrixError::Empty);
        }
        if data.len() != rows * cols {
            return Err(MatrixError::LengthMismatch { expected: rows * cols, got: data.len() });
        }
        if let Some(&bad) = data.iter().find(|&&e| !field.contains(e)) {
            return Err(MatrixError::InvalidEntry(bad));
        }
        Ok(MatrixGF { field, rows, cols, data })
    }

    /// Builds a matrix from rows of packed integer values.
    pub fn from_rows<R: AsRef<[u32]>>(field: Arc<Field>, rows: &[R]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(MatrixError::LengthMismatch { expected: cols, got: row.len() });
            }
            for &v in row {
                if v as usize >= field.order() {
                    return Err(MatrixError::InvalidEntry(Elem(v.min(u16::MAX as u32) as u16)));
                }
                data.push(Elem(v as u16));
            }
        }
        MatrixGF::new(field, rows.len(), cols, data)
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Self {
        let mut data = vec![Elem::ZERO; n * n];
        for i in 0..n {
            data[i * n + i] = Elem::ONE;
        }
        MatrixGF::new(field, n, n, data).expect("identity is well formed")
    }

    pub fn zeros(field: Arc<Field>, rows: usize, cols: usize) -> Self {
        MatrixGF::new(field, rows, cols, vec![Elem::ZERO; rows * cols]).expect("nonempty zero matrix")
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        assert!(self.field.contains(v));
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Elem]> {
        self.data.chunks_exact(self.cols)
    }

    /// Appends a row at the bottom.
    pub fn stack_row(&self, row: &[Elem]) -> Result<MatrixGF, MatrixError> {
        if row.len() != self.cols {
            return Err(MatrixError::LengthMismatch { expected: self.cols, got: row.len() });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(row);
        MatrixGF::new(self.field.clone(), self.rows + 1, self.cols, data)
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self) -> (MatrixGF, usize) {
        let mut out = self.clone();
        let pivots = rref_in_place(&self.field, &mut out.data, self.rows, self.cols);
        (out, pivots.len())
    }

    /// Pivot columns of the RREF, in row order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut data = self.data.clone();
        rref_in_place(&self.field, &mut data, self.rows, self.cols)
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns().len()
    }

    pub fn is_rref(&self) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero = false;
        for (i, row) in self.row_iter().enumerate() {
            match row.iter().position(|e| !e.is_zero()) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || row[c] != Elem::ONE || last_pivot.is_some_and(|p| c <= p) {
                        return false;
                    }
                    if (0..self.rows).any(|j| j != i && !self.get(j, c).is_zero()) {
                        return false;
                    }
                    last_pivot = Some(c);
                }
            }
        }
        true
    }

    /// Column `i` of the result is column `x[i]` of `self`, i.e. `self * P_x`
    /// with `P_x[x[i], i] = 1`.
    pub fn permute_columns(&self, x: &Permutation) -> Result<MatrixGF, MatrixError> {
        if x.len() != self.cols {
            return Err(MatrixError::LengthMismatch { expected: self.cols, got: x.len() });
        }
        let mut data = vec![Elem::ZERO; self.data.len()];
        permute_into(&self.data, self.cols, x.as_slice(), &mut data);
        Ok(MatrixGF { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Hamming weight of the lightest nonzero row and the first row index
    /// attaining it.
    pub fn min_row_weight(&self) -> Result<(usize, usize), MatrixError> {
        min_row_weight(&self.data, self.cols).ok_or(MatrixError::AllRowsZero)
    }

    /// Row vector times matrix, `v * self`.
    pub fn vec_mul(&self, v: &[Elem]) -> Result<Vec<Elem>, MatrixError> {
        if v.len() != self.rows {
            return Err(MatrixError::LengthMismatch { expected: self.rows, got: v.len() });
        }
        let mut out = vec![Elem::ZERO; self.cols];
        for (&c, row) in v.iter().zip(self.row_iter()) {
            self.field.axpy(&mut out, c, row);
        }
        Ok(out)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &MatrixGF) -> Result<MatrixGF, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::LengthMismatch { expected: self.cols, got: other.rows });
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for row in self.row_iter() {
            data.extend(other.vec_mul(row)?);
        }
        MatrixGF::new(self.field.clone(), self.rows, other.cols, data)
    }

    /// Whether both matrices span the same row space.
    pub fn row_equivalent(&self, other: &MatrixGF) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let (a, ra) = self.rref();
        let (b, rb) = other.rref();
        ra == rb && a.data[..ra * a.cols] == b.data[..rb * b.cols]
    }
}

/// Writes `src * P_x` into `dst`.
pub(crate) fn permute_into(src: &[Elem], cols: usize, x: &[usize], dst: &mut [Elem]) {
    for (s, d) in src.chunks_exact(cols).zip(dst.chunks_exact_mut(cols)) {
        for (out, &from) in d.iter_mut().zip(x) {
            *out = s[from];
        }
    }
}

pub(crate) fn min_row_weight(data: &[Elem], cols: usize) -> Option<(usize, usize)> {
    data.chunks_exact(cols)
        .enumerate()
        .map(|(i, row)| (row.iter().filter(|e| !e.is_zero()).count(), i))
        .filter(|&(w, _)| w > 0)
        .min()
}

/// Gauss-Jordan elimination in place. Columns are scanned left to right and
/// the topmost nonzero entry at or below the current row is the pivot.
/// Returns the pivot columns.
pub(crate) fn rref_in_place(field: &Field, data: &mut [Elem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::with_capacity(rows.min(cols));
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in c..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let lead = data[r * cols + c];
        if lead != Elem::ONE {
            let inv = field.inv(lead).expect("pivot is nonzero");
            field.scale(&mut data[r * cols + c..(r + 1) * cols], inv);
        }
        // entries left of c in the pivot row are already zero
        let (before, rest) = data.split_at_mut(r * cols);
        let (pivot_row, after) = rest.split_at_mut(cols);
        let pivot_tail = &pivot_row[c..];
        for row in before.chunks_exact_mut(cols).chain(after.chunks_exact_mut(cols)) {
            let f = row[c];
            if !f.is_zero() {
                field.axpy(&mut row[c..], field.neg(f), pivot_tail);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A permutation of `{0, .., n-1}`, as the map `i -> map[i]`.
///
/// Acting on columns, position `i` of `M * P_x` holds column `x[i]` of `M`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    map: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = MatrixError;

    fn try_from(map: Vec<usize>) -> Result<Self, Self::Error> {
        Permutation::new(map)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.map
    }
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self, MatrixError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &v in &map {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(MatrixError::NotAPermutation(format!("{map:?}")));
            }
        }
        Ok(Permutation { map })
    }

    /// From a 1-based listing such as `[6, 4, 3, ...]`.
    pub fn from_one_based(map: &[usize]) -> Result<Self, MatrixError> {
        if map.contains(&0) {
            return Err(MatrixError::NotAPermutation(format!("{map:?}")));
        }
        Permutation::new(map.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.map.swap(i, j);
        p
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { map: inv }
    }

    /// `x∘y` sends `i` to `y[x[i]]`: first `x`, then `y`. Acting on
    /// columns, `P_{x∘y} = P_y P_x`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, MatrixError> {
        if self.len() != other.len() {
            return Err(MatrixError::LengthMismatch { expected: self.len(), got: other.len() });
        }
        Ok(Permutation { map: self.map.iter().map(|&v| other.map[v]).collect() })
    }

    /// Exchanges the images of positions `i` and `j`, i.e. `(i j)∘self`.
    pub fn swap_positions(&mut self, i: usize, j: usize) {
        self.map.swap(i, j);
    }

    /// `v * P_self`: `out[i] = v[self[i]]`.
    pub fn permute_vec<T: Copy>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.len());
        self.map.iter().map(|&from| v[from]).collect()
    }
}

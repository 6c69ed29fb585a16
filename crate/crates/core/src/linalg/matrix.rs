//! Dense matrices over exact scalars.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::field::Field;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A dense row-major matrix. Every entry belongs to `field`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(field);
        }
        m
    }

    /// The 1×1 matrix holding `s`.
    pub fn scalar(s: Scalar) -> Matrix {
        Matrix {
            field: s.field(),
            rows: 1,
            cols: 1,
            data: vec![s],
        }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Convenience constructor for rational matrices from integer entries.
    pub fn from_ints(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rational;
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(f, r, c, |i, j| Scalar::from_int(f, rows[i][j]))
    }

    /// A column matrix.
    pub fn column(field: Field, entries: Vec<Scalar>) -> Matrix {
        Matrix {
            field,
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |r, c| columns[c][r].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        debug_assert_eq!(s.field(), self.field);
        self.data[r * self.cols + c] = s;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let s = self.get(r, c);
                    if r == c {
                        s.is_one()
                    } else {
                        s.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * other.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn zip(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip(other, |a, b| a - b)
    }

    /// Kronecker product; index (i, j) of the result is `i * other.dim + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field, "kron field mismatch");
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.field, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(field: Field, rows: usize, blocks: &[Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                for c in 0..b.cols {
                    out.data[r * cols + off + c] = b.get(r, c).clone();
                }
            }
            off += b.cols;
        }
        out
    }

    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend(b.data.iter().cloned());
            rows += b.rows;
        }
        Matrix { field, rows, cols, data }
    }

    /// Column-major vectorisation, as used by [`solve_sylvester_family`].
    pub fn vec(&self) -> Vec<Scalar> {
        (0..self.cols).flat_map(|c| (0..self.rows).map(move |r| (r, c))).map(|(r, c)| self.get(r, c).clone()).collect()
    }

    /// Inverse of [`Matrix::vec`].
    pub fn unvec(field: Field, v: &[Scalar], rows: usize, cols: usize) -> Matrix {
        assert_eq!(v.len(), rows * cols);
        Matrix::from_fn(field, rows, cols, |r, c| v[c * rows + r].clone())
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.field, self.cols);
        for r in 0..self.rows {
            red.push(self.row(r).to_vec());
        }
        red.rank()
    }

    /// Basis of the right null space, as the columns of the result.
    pub fn kernel(&self) -> Matrix {
        let mut red = RowReducer::new(self.field, self.cols);
        for r in 0..self.rows {
            red.push(self.row(r).to_vec());
            if red.rank() == self.cols {
                break;
            }
        }
        Matrix::from_columns(self.field, self.cols, &red.kernel_basis())
    }

    /// A projection `Q` onto a complement of the column space: `Q·M = 0` and
    /// `rank Q = rows(M) − rank M`. The rows of `Q` span the left null space.
    pub fn cokernel(&self) -> Matrix {
        self.transpose().kernel().transpose()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { Scalar::one(self.field) } else { Scalar::zero(self.field) }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::Singular)?;
            a.swap(c, p);
            let inv = a[c][c].inv()?;
            for x in a[c].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = a[c].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                        if !p.is_zero() {
                            *x = &*x - &(&f * p);
                        }
                    }
                }
            }
        }
        Ok(Matrix::from_fn(self.field, n, n, |r, c| a[r][n + c].clone()))
    }

    /// Submatrix of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|r| serde_json::Value::Array(self.row(r).iter().map(Scalar::to_json).collect()))
                .collect(),
        )
    }

    pub fn from_json(field: Field, value: &serde_json::Value) -> Result<Matrix> {
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Schema("matrix must be an array of rows".into()))?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Schema("matrix row must be an array".into()))?
                    .iter()
                    .map(|v| Scalar::from_json(field, v))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, rows)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental reduced row-echelon form.
///
/// Rows are fed one at a time and kept fully reduced, so the kernel can be
/// read off at any point. Large intertwiner systems are streamed through
/// this instead of being materialised as one matrix.
#[derive(Clone, Debug)]
pub struct RowReducer {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(field: Field, ncols: usize) -> RowReducer {
        RowReducer {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Adds a row; returns whether the rank grew.
    pub fn push(&mut self, mut row: Vec<Scalar>) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        for (prow, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(prow) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let Some(lead) = row.iter().position(|s| !s.is_zero()) else {
            return false;
        };
        let inv = row[lead].inv().expect("nonzero pivot");
        for x in row.iter_mut().skip(lead) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for prow in self.rows.iter_mut() {
            if prow[lead].is_zero() {
                continue;
            }
            let f = prow[lead].clone();
            for (x, y) in prow.iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        self.rows.push(row);
        self.pivots.push(lead);
        true
    }

    /// Basis of the null space of the rows pushed so far.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Scalar::zero(self.field); self.ncols];
                v[free] = Scalar::one(self.field);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -&row[free];
                }
                v
            })
            .collect()
    }
}

/// Basis (as column-major vectorised columns) of
/// `{ T : A_i T = T B_i for all i }`, where `T` is `rows × cols`.
///
/// Each `A_i` must be `rows × rows` and each `B_i` `cols × cols`. With an
/// empty family the whole matrix space is returned.
pub fn solve_sylvester_family(field: Field, pairs: &[(Matrix, Matrix)], rows: usize, cols: usize) -> Result<Matrix> {
    let n = rows * cols;
    for (a, b) in pairs {
        if a.rows() != rows || !a.is_square() || b.rows() != cols || !b.is_square() {
            return Err(Error::DimensionMismatch("Sylvester family sizes disagree".into()));
        }
        if a.field() != field {
            return Err(Error::FieldMismatch(field, a.field()));
        }
        if b.field() != field {
            return Err(Error::FieldMismatch(field, b.field()));
        }
    }
    let mut red = RowReducer::new(field, n);
    'outer: for (a, b) in pairs {
        // Equation for entry (r, c): Σ_k A[r,k] T[k,c] − Σ_k T[r,k] B[k,c] = 0,
        // where T[k,c] sits at index c*rows + k.
        for c in 0..cols {
            for r in 0..rows {
                let mut eq = vec![Scalar::zero(field); n];
                let mut nonzero = false;
                for k in 0..rows {
                    let x = a.get(r, k);
                    if !x.is_zero() {
                        eq[c * rows + k] = &eq[c * rows + k] + x;
                        nonzero = true;
                    }
                }
                for k in 0..cols {
                    let x = b.get(k, c);
                    if !x.is_zero() {
                        eq[k * rows + r] = &eq[k * rows + r] - x;
                        nonzero = true;
                    }
                }
                if nonzero {
                    red.push(eq);
                    if red.is_full() {
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(Matrix::from_columns(field, n, &red.kernel_basis()))
}

/// Coordinates with respect to a fixed linearly independent family of vectors.
#[derive(Clone, Debug)]
pub struct CoordinateSolver {
    basis: Matrix,
    pivot_rows: Vec<usize>,
    inverse: Matrix,
}

impl CoordinateSolver {
    /// `basis` holds the family as columns; they must be independent.
    pub fn new(basis: Matrix) -> Result<CoordinateSolver> {
        let mut red = RowReducer::new(basis.field(), basis.rows());
        for c in 0..basis.cols() {
            if !red.push(basis.col(c)) {
                return Err(Error::Singular);
            }
        }
        let mut pivot_rows = red.pivots().to_vec();
        pivot_rows.sort_unstable();
        let all_cols: Vec<usize> = (0..basis.cols()).collect();
        let inverse = basis.select(&pivot_rows, &all_cols).inverse()?;
        Ok(CoordinateSolver {
            basis,
            pivot_rows,
            inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Coordinates of `v`; [`Error::NotInSpan`] if `v` is outside the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let field = self.basis.field();
        if v.len() != self.basis.rows() {
            return Err(Error::DimensionMismatch("coordinate vector length".into()));
        }
        let picked = Matrix::column(field, self.pivot_rows.iter().map(|&r| v[r].clone()).collect());
        let coords = &self.inverse * &picked;
        let coords = coords.col(0);
        let back = &self.basis * &Matrix::column(field, coords.clone());
        if back.col(0) != v {
            return Err(Error::NotInSpan);
        }
        Ok(coords)
    }
}

//! Dense exact matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{inv_mod, mul_mod, Field, Scalar};
use crate::LinalgError;

/// A column vector of scalars sharing one field.
pub type Vector = Vec<Scalar>;

/// Dense row-major matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Reduced row echelon form; pivot entries are 1.
    pub reduced: Matrix,
    /// Pivot column of each nonzero row, increasing.
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                debug_assert_eq!(s.field(), field);
                data.push(s);
            }
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Matrix from integer rows. All rows must have equal length.
    pub fn from_i64_rows(field: Field, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Matrix with explicit shape from row-major scalars.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|s| s.field() != field) {
            return Err(LinalgError::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix {
            rows,
            cols,
            field,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "field mismatch in set");
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in add"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sub"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        assert_eq!(self.field, other.field, "field mismatch in mul");
        match self.field {
            Field::Prime(p) => {
                let a = self.residues();
                let b = other.residues();
                let (n, k, m) = (self.rows, self.cols, other.cols);
                let mut out = vec![0u64; n * m];
                for i in 0..n {
                    for l in 0..k {
                        let x = a[i * k + l] as u64;
                        if x == 0 {
                            continue;
                        }
                        for j in 0..m {
                            out[i * m + j] = (out[i * m + j] + x * b[l * m + j] as u64) % p as u64;
                        }
                    }
                }
                Matrix {
                    rows: n,
                    cols: m,
                    field: self.field,
                    data: out
                        .into_iter()
                        .map(|v| Scalar::Mod {
                            value: v as u32,
                            modulus: p,
                        })
                        .collect(),
                }
            }
            Field::Rational => {
                let mut out = Matrix::zeros(self.field, self.rows, other.cols);
                for i in 0..self.rows {
                    for l in 0..self.cols {
                        let x = self.get(i, l);
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..other.cols {
                            let y = other.get(l, j);
                            if y.is_zero() {
                                continue;
                            }
                            let idx = i * other.cols + j;
                            out.data[idx] = &out.data[idx] + &(x * y);
                        }
                    }
                }
                out
            }
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j]).clone()
        })
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.field, self.rows + other.rows, self.cols + other.cols, |i, j| {
            if i < self.rows && j < self.cols {
                self.get(i, j).clone()
            } else if i >= self.rows && j >= self.cols {
                other.get(i - self.rows, j - self.cols).clone()
            } else {
                self.field.zero()
            }
        })
    }

    /// Reduce every entry into a prime field.
    pub fn to_field(&self, field: Field) -> Result<Matrix, LinalgError> {
        let data = self
            .data
            .iter()
            .map(|s| s.to_field(field))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            field,
            data,
        })
    }

    fn residues(&self) -> Vec<u32> {
        self.data
            .iter()
            .map(|s| s.residue().expect("prime field entry"))
            .collect()
    }

    /// Rank over the matrix's field.
    pub fn rank(&self) -> usize {
        match self.field {
            Field::Prime(p) => {
                let mut a = self.residues();
                echelon_mod(&mut a, self.rows, self.cols, p, false).len()
            }
            Field::Rational => bareiss_rank(integer_rows(self), self.cols),
        }
    }

    /// Gauss-Jordan elimination with the first nonzero entry of each column
    /// (scanning rows top to bottom) as pivot.
    pub fn echelon(&self) -> Echelon {
        match self.field {
            Field::Prime(p) => {
                let mut a = self.residues();
                let pivots = echelon_mod(&mut a, self.rows, self.cols, p, true);
                Echelon {
                    reduced: Matrix {
                        rows: self.rows,
                        cols: self.cols,
                        field: self.field,
                        data: a.into_iter().map(|v| Scalar::Mod { value: v, modulus: p }).collect(),
                    },
                    pivots,
                }
            }
            Field::Rational => {
                let mut rows = integer_rows(self);
                let pivots = fraction_free_reduce(&mut rows, self.cols);
                let mut reduced = Matrix::zeros(self.field, self.rows, self.cols);
                for (r, &c) in pivots.iter().enumerate() {
                    let piv = rows[r][c].clone();
                    for j in 0..self.cols {
                        if !rows[r][j].is_zero() {
                            reduced.data[r * self.cols + j] =
                                Scalar::Rational(BigRational::new(rows[r][j].clone(), piv.clone()));
                        }
                    }
                }
                Echelon { reduced, pivots }
            }
        }
    }

    /// Basis of the right null space. Each vector is scaled so that its first
    /// nonzero coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &c) in ech.pivots.iter().enumerate() {
                v[c] = -ech.reduced.get(r, free);
            }
            normalize_leading(&mut v);
            basis.push(v);
        }
        basis
    }

    /// A particular solution of `self * x = b`, or `None` when inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::Shape(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::from_columns(self.field, self.rows, &[b.to_vec()]));
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in ech.pivots.iter().enumerate() {
            x[c] = ech.reduced.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solve `self * X = B` column by column.
    pub fn solve_matrix(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::Shape("row mismatch in solve_matrix".into()));
        }
        let aug = self.hstack(b);
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (r, &c) in ech.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[c * b.cols + j] = ech.reduced.get(r, self.cols + j).clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve_matrix(&Matrix::identity(self.field, n)).ok()??;
        if self.rank() == n {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Columns of `self` at the pivot positions: a basis of the column space
    /// chosen greedily from left to right.
    pub fn column_space_basis(&self) -> Vec<Vector> {
        self.echelon().pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Indices of the greedily chosen independent columns.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.echelon().pivots
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Scale so that the first nonzero coordinate becomes 1.
pub fn normalize_leading(v: &mut [Scalar]) {
    if let Some(lead) = v.iter().find(|s| !s.is_zero()).cloned() {
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero leading entry");
            for x in v.iter_mut() {
                *x = &*x * &inv;
            }
        }
    }
}

/// Gauss-Jordan modulo p in place; returns pivot columns. With `full` false
/// only forward elimination is done (enough for rank).
fn echelon_mod(a: &mut [u32], rows: usize, cols: usize, p: u32, full: bool) -> Vec<usize> {
    let m = p as u64;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                a.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(a[r * cols + c] as u64, p) as u64;
        for j in c..cols {
            a[r * cols + j] = mul_mod(a[r * cols + j] as u64, inv, p);
        }
        let start = if full { 0 } else { r + 1 };
        for i in start..rows {
            if i == r {
                continue;
            }
            let f = a[i * cols + c] as u64;
            if f == 0 {
                continue;
            }
            let neg = m - f;
            for j in c..cols {
                let x = a[r * cols + j] as u64;
                if x != 0 {
                    a[i * cols + j] = ((a[i * cols + j] as u64 + neg * x) % m) as u32;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rows cleared of denominators.
fn integer_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    (0..m.rows)
        .map(|i| {
            let row = &m.data[i * m.cols..(i + 1) * m.cols];
            let mut l = BigInt::one();
            for s in row {
                let q = s.as_rational().expect("rational entry");
                if !q.denom().is_one() {
                    l = l.lcm(q.denom());
                }
            }
            row.iter()
                .map(|s| {
                    let q = s.as_rational().expect("rational entry");
                    if q.is_zero() {
                        BigInt::zero()
                    } else {
                        q.numer() * (&l / q.denom())
                    }
                })
                .collect()
        })
        .collect()
}

/// Bareiss forward elimination; returns the rank.
fn bareiss_rank(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(piv, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Fraction-free Gauss-Jordan on integer rows with content removal.
fn fraction_free_reduce(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(piv, r);
        remove_content(&mut a[r]);
        let pivot_row = a[r].clone();
        let pc = pivot_row[c].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            let g = pc.gcd(&f);
            let (mp, mf) = (&pc / &g, &f / &g);
            for j in 0..cols {
                if pivot_row[j].is_zero() {
                    if !row[j].is_zero() {
                        row[j] = &row[j] * &mp;
                    }
                } else {
                    row[j] = &row[j] * &mp - &pivot_row[j] * &mf;
                }
            }
            remove_content(row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn remove_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x / &g;
        }
    }
    debug_assert!(!g.is_negative());
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_i64_rows(Field::Rational, rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Field::Rational, 3).rank(), 3);
        assert_eq!(Matrix::zeros(Field::Rational, 2, 5).rank(), 0);
        assert_eq!(q(&[vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let x = Matrix::identity(Field::Rational, 2)
            .solve(&[Field::Rational.from_i64(3), Field::Rational.from_i64(4)])
            .unwrap()
            .unwrap();
        assert_eq!(x, vec![Field::Rational.from_i64(3), Field::Rational.from_i64(4)]);

        let m = q(&[vec![1, 1]]);
        let x = m.solve(&[Field::Rational.from_i64(2)]).unwrap().unwrap();
        assert_eq!(&x[0] + &x[1], Field::Rational.from_i64(2));

        let m = q(&[vec![1], vec![2]]);
        let one = Field::Rational.one();
        assert!(m.solve(&[one.clone(), one]).unwrap().is_none());
        assert!(m.solve(&[Field::Rational.one()]).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(Field::Rational, 3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(Field::Rational, 1, 3).kernel_basis().len(), 3);
        let m = q(&[vec![1, 2, 3]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(Scalar::is_zero));
            assert!(v.iter().find(|s| !s.is_zero()).unwrap().is_one());
        }
    }

    #[test]
    fn rational_echelon_is_exact() {
        let m = q(&[vec![2, 4, 6], vec![3, 7, 1], vec![5, 11, 7]]);
        let e = m.echelon();
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(m.rank(), 2);
        let inv = q(&[vec![2, 1], vec![7, 4]]).inverse().unwrap();
        assert_eq!(inv, q(&[vec![4, -1], vec![-7, 2]]));
    }

    #[test]
    fn prime_inverse() {
        let f = Field::prime(5).unwrap();
        let m = Matrix::from_i64_rows(f, &[vec![1, 2], vec![3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let sing = Matrix::from_i64_rows(f, &[vec![1, 2], vec![3, 6]]);
        assert!(sing.inverse().is_none());
    }
}

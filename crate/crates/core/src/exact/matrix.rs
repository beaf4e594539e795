//! Dense exact matrices over ℚ(i).
//!
//! Products and eliminations skip zero entries, which keeps the mostly sparse
//! representation matrices of this crate cheap without a separate sparse type.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use super::gauss::GaussRat;
use super::poly::RatPoly;
use super::rational::{int, Rat};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<GaussRat>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![GaussRat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussRat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| GaussRat::from_int(x)).collect())
            .collect();
        Self::from_rows(v).expect("ragged integer rows")
    }

    pub fn from_columns(rows: usize, columns: &[Vec<GaussRat>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("column length".into()));
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| {
            columns[j][i].clone()
        }))
    }

    pub fn column_vector(v: Vec<GaussRat>) -> Self {
        ExactMatrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn diagonal(d: &[GaussRat]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussRat] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[GaussRat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<GaussRat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<GaussRat>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<GaussRat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(GaussRat::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(GaussRat::is_real)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn map(&self, f: impl Fn(&GaussRat) -> GaussRat) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|x| if x.is_zero() { GaussRat::zero() } else { x * c })
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        self.map(|x| x.scale(c))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Self {
        self.map(GaussRat::conj)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn real_part(&self) -> Self {
        self.map(|x| GaussRat::real(x.re.clone()))
    }

    pub fn imag_part(&self) -> Self {
        self.map(|x| GaussRat::real(x.im.clone()))
    }

    pub fn trace(&self) -> GaussRat {
        let mut t = GaussRat::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    /// `tr(self * other)` without forming the product.
    pub fn trace_product(&self, other: &ExactMatrix) -> GaussRat {
        assert!(
            self.cols == other.rows && self.rows == other.cols,
            "trace_product shape"
        );
        let mut t = GaussRat::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let b = &other[(k, i)];
                if !b.is_zero() {
                    t += &(a * b);
                }
            }
        }
        t
    }

    pub fn try_mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(self.cols, v.len(), "mul_vec shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = GaussRat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &ExactMatrix) -> ExactMatrix {
        &(self * other) - &(other * self)
    }

    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(blocks: &[&ExactMatrix]) -> Result<ExactMatrix> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::Dimension("vstack column count".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let data = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn hstack(blocks: &[&ExactMatrix]) -> Result<ExactMatrix> {
        let t: Vec<ExactMatrix> = blocks.iter().map(|b| b.transpose()).collect();
        Ok(Self::vstack(&t.iter().collect::<Vec<_>>())?.transpose())
    }

    /// Reduced row echelon form (zero rows dropped) and pivot columns.
    pub fn rref(&self) -> (ExactMatrix, Vec<usize>) {
        let (rows, pivots) = rref_rows(self.to_rows(), self.cols);
        let m = if rows.is_empty() {
            Self::zeros(0, self.cols)
        } else {
            Self::from_rows(rows).expect("rref keeps shape")
        };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Kernel basis as the columns of an `n × k` matrix. Each vector has a one
    /// in its free coordinate and zeros in the other free coordinates.
    pub fn null_space(&self) -> ExactMatrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out[(f, k)] = GaussRat::one();
            for (row, &p) in pivots.iter().enumerate() {
                let v = &r[(row, f)];
                if !v.is_zero() {
                    out[(p, k)] = -v;
                }
            }
        }
        out
    }

    /// Kernel basis as separate column vectors.
    pub fn kernel(&self) -> Vec<ExactMatrix> {
        let ns = self.null_space();
        (0..ns.cols)
            .map(|j| Self::column_vector(ns.column(j)))
            .collect()
    }

    /// A solution `X` of `self * X = rhs`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, rhs: &ExactMatrix) -> Result<Option<ExactMatrix>> {
        if rhs.rows != self.rows {
            return Err(Error::Dimension("solve: row count".into()));
        }
        let aug = Self::hstack(&[self, rhs])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        if self.rank() < self.rows {
            return Err(Error::Singular);
        }
        Ok(self.solve(&Self::identity(self.rows))?.expect("full rank"))
    }

    /// Characteristic polynomial `det(x I - A)` with Gaussian rational
    /// coefficients, lowest degree first (Faddeev–LeVerrier).
    pub fn char_poly_coeffs(&self) -> Result<Vec<GaussRat>> {
        if !self.is_square() {
            return Err(Error::Dimension("char_poly of non-square matrix".into()));
        }
        let n = self.rows;
        let mut c = vec![GaussRat::zero(); n + 1];
        c[n] = GaussRat::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += &c[n - k + 1];
            }
            let t = self.trace_product(&next);
            c[n - k] = -t.scale(&int(k as i64).recip());
            m = next;
        }
        Ok(c)
    }

    /// Characteristic polynomial over ℚ. Rejects matrices with non-real entries.
    pub fn char_poly(&self) -> Result<RatPoly> {
        if !self.is_real() {
            return Err(Error::NonReal);
        }
        let c = self.char_poly_coeffs()?;
        Ok(RatPoly::new(c.into_iter().map(|x| x.re).collect()))
    }
}

fn rref_rows(mut rows: Vec<Vec<GaussRat>>, ncols: usize) -> (Vec<Vec<GaussRat>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        // prefer a pivot that needs no division
        let candidates = (r..rows.len()).filter(|&i| !rows[i][c].is_zero());
        let Some(p) = candidates
            .clone()
            .find(|&i| rows[i][c].is_one())
            .or_else(|| candidates.min())
        else {
            continue;
        };
        rows.swap(r, p);
        let nz: Vec<usize> = (c..ncols).filter(|&j| !rows[r][j].is_zero()).collect();
        if !rows[r][c].is_one() {
            let inv = rows[r][c].inv().expect("nonzero pivot");
            for &j in &nz {
                rows[r][j] = &rows[r][j] * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                let t = &f * &pivot_row[j];
                row[j] -= &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    /// Panics on a shape mismatch; use [`ExactMatrix::try_mul`] for a checked product.
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.try_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "matrix sum shape"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(
            self.rows == rhs.rows && self.cols == rhs.cols,
            "matrix difference shape"
        );
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.map(|x| -x)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", line.join("  "))?;
        }
        Ok(())
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn kernel_of_rank_two() {
        let m = ExactMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!((&m * &k[0]).is_zero());
        assert_eq!(
            k[0].column(0),
            vec![
                GaussRat::from_int(-1),
                GaussRat::from_int(-1),
                GaussRat::one()
            ]
        );
    }

    #[test]
    fn inverse_and_solve() {
        let i = GaussRat::i();
        let m = ExactMatrix::from_rows(vec![
            vec![GaussRat::one(), i.clone()],
            vec![-i.clone(), GaussRat::from_int(2)],
        ])
        .unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, ExactMatrix::identity(2));
        let sing = ExactMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(sing.inverse(), Err(Error::Singular));
        let b = ExactMatrix::from_int_rows(&[&[1], &[3]]);
        assert!(sing.solve(&b).unwrap().is_none());
    }

    #[test]
    fn char_poly_examples() {
        let m = ExactMatrix::from_int_rows(&[&[2, 1], &[1, 2]]);
        assert_eq!(m.char_poly().unwrap(), RatPoly::from_ints(&[3, -4, 1]));
        let nilpotent = ExactMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(
            nilpotent.char_poly().unwrap(),
            RatPoly::from_ints(&[0, 0, 0, 1])
        );
        let complex = ExactMatrix::diagonal(&[GaussRat::i()]);
        assert_eq!(complex.char_poly(), Err(Error::NonReal));
        let half = ExactMatrix::diagonal(&[GaussRat::real(rat(1, 2)), GaussRat::real(rat(1, 3))]);
        assert_eq!(
            half.char_poly().unwrap().eval(&rat(1, 2)),
            Rat::from_integer(0.into())
        );
    }

    #[test]
    fn kron_and_commutator() {
        let a = ExactMatrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let b = ExactMatrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        let h = ExactMatrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        assert_eq!(a.commutator(&b), h);
        let k = a.kron(&ExactMatrix::identity(2));
        assert_eq!(k.rows(), 4);
        assert_eq!(k.nonzero_count(), 2);
    }
}

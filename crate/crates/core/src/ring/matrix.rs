use num_traits::{One, Zero};

use super::laurent::HalfLaurent;
use super::poly::UPoly;
use super::Rational;
use crate::error::{Error, Result};

/// Dense rational matrix, row-major. Seifert matrices and linking data are
/// stored in this form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn empty() -> Self {
        Self::zeros(0, 0)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Rows must all have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != m) {
            return Err(Error::Shape(format!("row {bad} has length {} but row 0 has {m}", rows[bad].len())));
        }
        Ok(Self { rows: n, cols: m, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }

    /// `self + coeff · e·eᵀ`.
    pub fn add_outer(&self, e: &[Rational], coeff: &Rational) -> Self {
        assert!(self.is_square() && e.len() == self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + coeff * &e[i] * &e[j])
    }

    /// Block diagonal `self ⊕ other`, with `self` in the upper-left corner.
    pub fn block_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows, self.cols);
        Self::from_fn(r + other.rows, c + other.cols, |i, j| match (i < r, j < c) {
            (true, true) => self.get(i, j).clone(),
            (false, false) => other.get(i - r, j - c).clone(),
            _ => Rational::zero(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j))
        })
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|v| v.is_integer())
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Determinant over the rationals by Gaussian elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                det = -det;
            }
            let pivot = a[k * n + k].clone();
            det *= &pivot;
            for i in k + 1..n {
                let f = &a[i * n + k] / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let d = &f * &a[k * n + j];
                    a[i * n + j] -= d;
                }
            }
        }
        Ok(det)
    }
}

/// Dense matrix over [`HalfLaurent`], row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<HalfLaurent>,
}

impl RingMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<HalfLaurent>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> HalfLaurent) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { HalfLaurent::one() } else { HalfLaurent::zero() })
    }

    /// `t^(1/2)·V − t^(−1/2)·Vᵀ` for a square rational `V`.
    pub fn seifert_form(v: &RationalMatrix) -> Self {
        assert!(v.is_square(), "Seifert matrix must be square");
        Self::from_fn(v.rows(), v.cols(), |i, j| {
            HalfLaurent::from_terms([(1, v.get(i, j).clone()), (-1, -v.get(j, i))])
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &HalfLaurent {
        &self.entries[i * self.cols + j]
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = HalfLaurent::zero();
            for k in 0..self.cols {
                acc += &(self.get(i, k) * other.get(k, j));
            }
            acc
        }))
    }

    /// Exact determinant. The empty matrix has determinant 1.
    ///
    /// Each row is multiplied by a power of `u = t^(1/2)` so that every entry
    /// becomes an ordinary polynomial in `u`; the resulting matrix over `Q[u]`
    /// is reduced by fraction-free (Bareiss) elimination, and the row shifts
    /// are undone at the end.
    pub fn determinant(&self) -> Result<HalfLaurent> {
        if self.rows != self.cols {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut total_shift = 0i64;
        let mut a: Vec<Vec<UPoly>> = Vec::with_capacity(n);
        for i in 0..n {
            let row = &self.entries[i * n..(i + 1) * n];
            let Some(low) = row.iter().filter_map(HalfLaurent::min_half_exp).min() else {
                return Ok(HalfLaurent::zero());
            };
            total_shift += low;
            a.push(row.iter().map(|e| e.shift(-low).to_nonnegative_upoly()).collect());
        }
        Ok(HalfLaurent::from_upoly(total_shift, &bareiss(a)))
    }
}

fn bareiss(mut a: Vec<Vec<UPoly>>) -> UPoly {
    let n = a.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut negate = false;
    let mut prev = UPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return UPoly::zero();
            };
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

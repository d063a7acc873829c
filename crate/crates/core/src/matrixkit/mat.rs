use std::fmt;
use std::ops::{Add, Index, Mul, Sub};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Scalar};

/// Dense row-major matrix over a single [`Field`].
///
/// Zero-sized shapes are legal; the 0×0 matrix shows up as the Levi part of
/// the open orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            field,
            entries: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| Scalar::from_int(field, (i == j) as i64))
    }

    /// Elementary matrix `E_{ij}` (0-based).
    pub fn unit(field: Field, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m.set(i, j, Scalar::one(field));
        m
    }

    pub fn diag(field: Field, d: &[Scalar]) -> Self {
        let n = d.len();
        Self::from_fn(field, n, n, |i, j| {
            if i == j {
                d[i].clone()
            } else {
                Scalar::zero(field)
            }
        })
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert_eq!(v.field(), field, "entry field differs from matrix field");
                entries.push(v);
            }
        }
        Mat {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::SizeMismatch {
                    left: (r, c),
                    right: (r, row.len()),
                });
            }
            for v in row {
                field.ensure_same(v.field())?;
                entries.push(v);
            }
        }
        Ok(Mat {
            rows: r,
            cols: c,
            field,
            entries,
        })
    }

    pub fn from_ints(field: Field, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(field, r, c, |i, j| Scalar::from_int(field, rows[i][j]))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Panics if `v` belongs to another field.
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry field differs from matrix field");
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn ensure_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn ensure_same_shape(&self, other: &Mat) -> Result<()> {
        self.field.ensure_same(other.field)?;
        if self.shape() != other.shape() {
            return Err(Error::SizeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            entries: self.entries.iter().map(|v| v * c).collect(),
            ..self.clone()
        }
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Mat {
        Mat::from_fn(self.field, r1 - r0, c1 - c0, |i, j| {
            self[(r0 + i, c0 + j)].clone()
        })
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols))
            .fold(Scalar::zero(self.field), |acc, i| &acc + &self[(i, i)])
    }

    pub fn checked_add(&self, rhs: &Mat) -> Result<Mat> {
        self.ensure_same_shape(rhs)?;
        Ok(Mat {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        })
    }

    pub fn checked_sub(&self, rhs: &Mat) -> Result<Mat> {
        self.ensure_same_shape(rhs)?;
        Ok(Mat {
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
            ..self.clone()
        })
    }

    pub fn checked_mul(&self, rhs: &Mat) -> Result<Mat> {
        self.field.ensure_same(rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::SizeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Mat::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * &rhs[(k, j)]);
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(self.field), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Commutator `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Mat) -> Result<Mat> {
        self.checked_mul(rhs)?.checked_sub(&rhs.checked_mul(self)?)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(i, j)] - &(&factor * &m[(r, j)]);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(self.field); self.cols];
                v[f] = Scalar::one(self.field);
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn inverse(&self) -> Result<Mat> {
        let n = self.ensure_square()?;
        let aug = Mat::from_fn(self.field, n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else {
                Scalar::from_int(self.field, (j - n == i) as i64)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return Err(Error::Singular);
        }
        Ok(r.submatrix(0, n, n, 2 * n))
    }

    pub fn det(&self) -> Result<Scalar> {
        let n = self.ensure_square()?;
        let mut m = self.clone();
        let mut det = Scalar::one(self.field);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Scalar::zero(self.field));
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = &det * &pivot;
            let inv = pivot.inv()?;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] * &inv;
                for j in c..n {
                    let v = &m[(i, j)] - &(&factor * &m[(c, j)]);
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Applies `f` to every entry, producing a matrix over `field`.
    pub fn map(&self, field: Field, f: impl Fn(&Scalar) -> Scalar) -> Mat {
        Mat::from_fn(field, self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }

    /// Embeds a rational matrix into the Gaussian rationals.
    pub fn complexify(&self) -> Mat {
        match self.field {
            Field::Rat => self.map(Field::Gauss, Scalar::complexify),
            _ => self.clone(),
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

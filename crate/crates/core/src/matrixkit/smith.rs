use super::Mat;
use crate::error::Result;
use crate::exactalg::{Poly, Scalar};

/// Square matrix with polynomial entries, only used for the Smith form.
struct PolyMat {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMat {
    /// `xI − m`.
    fn characteristic(m: &Mat) -> Self {
        let n = m.rows();
        let field = m.field();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let c = Poly::constant(-&m[(i, j)]);
                entries.push(if i == j { &c + &Poly::x(field) } else { c });
            }
        }
        PolyMat { n, entries }
    }

    fn at(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.n + j]
    }

    fn put(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.n + j] = p;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.n {
            self.entries.swap(i * self.n + a, i * self.n + b);
        }
    }

    /// row_dst -= q * row_src, over columns `from..`.
    fn row_axpy(&mut self, dst: usize, src: usize, q: &Poly, from: usize) {
        for j in from..self.n {
            let v = self.at(dst, j) - &(q * self.at(src, j));
            self.put(dst, j, v);
        }
    }

    fn col_axpy(&mut self, dst: usize, src: usize, q: &Poly, from: usize) {
        for i in from..self.n {
            let v = self.at(i, dst) - &(q * self.at(i, src));
            self.put(i, dst, v);
        }
    }

    /// Nonzero entry of least degree in the trailing block, ties to the
    /// smallest (row, col).
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..self.n {
            for j in t..self.n {
                if let Some(d) = self.at(i, j).degree() {
                    if best.is_none_or(|(bd, _, _)| d < bd) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Monic invariant factors `d_1 | d_2 | … | d_r` of `xI − m`, constants
/// dropped. Their product is the characteristic polynomial and the last one
/// is the minimal polynomial.
pub fn invariant_factors(m: &Mat) -> Result<Vec<Poly>> {
    m.ensure_square()?;
    let mut a = PolyMat::characteristic(m);
    let n = a.n;
    for t in 0..n {
        loop {
            let Some((pi, pj)) = a.pivot(t) else {
                break;
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let pivot = a.at(t, t).clone();
            let mut clean = true;
            for i in t + 1..n {
                if a.at(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.at(i, t).div_rem(&pivot)?;
                a.row_axpy(i, t, &q, t);
                clean &= r.is_zero();
            }
            for j in t + 1..n {
                if a.at(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.at(t, j).div_rem(&pivot)?;
                a.col_axpy(j, t, &q, t);
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let offender = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a.at(i, j).rem(&pivot).map(|r| r.is_zero()).unwrap_or(true));
            match offender {
                Some((i, _)) => {
                    let one = -&Poly::one(m.field());
                    a.row_axpy(t, i, &one, t);
                }
                None => break,
            }
        }
    }
    Ok((0..n)
        .map(|i| a.at(i, i).monic())
        .filter(|d| !d.is_constant())
        .collect())
}

/// Similarity test via equality of invariant factors.
pub fn similar(a: &Mat, b: &Mat) -> Result<bool> {
    a.ensure_square()?;
    b.ensure_square()?;
    a.ensure_same_shape(b)?;
    Ok(invariant_factors(a)? == invariant_factors(b)?)
}

/// Dimension of the centralizer `{X : XA = AX}` computed from the invariant
/// factors: `Σ_{i,j} deg gcd(d_i, d_j)`.
pub fn centralizer_dim_from_factors(factors: &[Poly]) -> usize {
    // in a divisibility chain gcd(d_i, d_j) = d_min(i,j)
    let r = factors.len();
    factors
        .iter()
        .enumerate()
        .map(|(k, d)| (2 * (r - k) - 1) * d.degree().unwrap_or(0))
        .sum()
}

/// Dimension of the centralizer computed as the nullity of the commutant map
/// `X ↦ AX − XA` on the elementary basis.
pub fn centralizer_dim_by_rank(a: &Mat) -> Result<usize> {
    let n = a.ensure_square()?;
    let field = a.field();
    let mut columns = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let e = Mat::unit(field, n, i, j);
            columns.push(a.commutator(&e)?);
        }
    }
    let map = Mat::from_fn(field, n * n, n * n, |r, c| {
        columns[c].entries()[r].clone()
    });
    Ok(n * n - map.rank())
}

/// Companion matrix of a monic polynomial (last column carries −coefficients).
pub fn companion(p: &Poly) -> Mat {
    let n = p.degree().unwrap_or(0);
    let field = p.field();
    Mat::from_fn(field, n, n, |i, j| {
        if j == n - 1 {
            -&p.coeff(i)
        } else if i == j + 1 {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Field;
    use crate::matrixkit::char_poly;

    const Q: Field = Field::Rat;

    #[test]
    fn examples() {
        let nil = Mat::from_ints(Q, &[&[0, 1], &[0, 0]]);
        assert_eq!(invariant_factors(&nil).unwrap(), vec![Poly::from_ints(Q, &[0, 0, 1])]);
        let zero = Mat::zeros(Q, 2, 2);
        let x = Poly::x(Q);
        assert_eq!(invariant_factors(&zero).unwrap(), vec![x.clone(), x]);
        let d = Mat::from_ints(Q, &[&[1, 0], &[0, 2]]);
        assert_eq!(invariant_factors(&d).unwrap(), vec![Poly::from_ints(Q, &[2, -3, 1])]);
        assert!(invariant_factors(&Mat::zeros(Q, 0, 0)).unwrap().is_empty());
    }

    #[test]
    fn distinct_eigenvalues_are_cyclic() {
        // oracle: a matrix with distinct eigenvalues is similar to the
        // companion matrix of its characteristic polynomial
        let d = Mat::from_ints(Q, &[&[1, 0], &[0, 2]]);
        let c = companion(&char_poly(&d).unwrap());
        assert_eq!(c, Mat::from_ints(Q, &[&[0, -2], &[1, 3]]));
        assert!(similar(&d, &c).unwrap());
    }

    #[test]
    fn similarity_examples() {
        let a = Mat::from_ints(Q, &[&[1, 0], &[0, 2]]);
        let b = Mat::from_ints(Q, &[&[2, 0], &[0, 1]]);
        assert!(similar(&a, &b).unwrap());
        let nil = Mat::from_ints(Q, &[&[0, 1], &[0, 0]]);
        assert!(!similar(&nil, &Mat::zeros(Q, 2, 2)).unwrap());
        assert!(similar(&a, &Mat::zeros(Q, 3, 3)).is_err());
        assert!(similar(&a, &Mat::zeros(Field::Gauss, 2, 2)).is_err());
    }

    #[test]
    fn jordan_structure() {
        // J_2(1) ⊕ J_1(1) ⊕ J_1(3)
        let m = Mat::from_ints(
            Q,
            &[&[1, 1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 3]],
        );
        let f = invariant_factors(&m).unwrap();
        assert_eq!(
            f,
            vec![
                Poly::from_ints(Q, &[-1, 1]),
                Poly::from_ints(Q, &[-3, 7, -5, 1]),
            ]
        );
        assert_eq!(centralizer_dim_from_factors(&f), 6);
        assert_eq!(centralizer_dim_by_rank(&m).unwrap(), 6);
    }
}

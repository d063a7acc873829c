//! `gl(n)` and the mirabolic algebra `p_n` with the trace pairing,
//! coadjoint actions and the moment map `gl(n)* → p_n*`.
//!
//! Functionals are always stored through a matrix preimage under the trace
//! pairing: `f ∈ gl(n)*` as the unique `ξ` with `f(η) = tr(ξη)`, and
//! `f ∈ p_n*` as the unique such `ξ` with zero last column (the space `p̄_n`).
//! With that convention `gl(n) = ker(pr′) ⊕ p̄_n`, where `ker(pr′)` consists
//! of matrices supported on the last column, so restricting a functional to
//! `p_n` amounts to zeroing the last column.

pub mod lemmas;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Field, Scalar};
use crate::matrixkit::{Mat, MatrixDoc};

/// A functional on `gl(n)`, stored as its trace-pairing preimage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GFun {
    xi: Mat,
}

impl GFun {
    pub fn new(xi: Mat) -> Result<Self> {
        let n = xi.ensure_square()?;
        if n == 0 {
            return Err(Error::EmptyAlgebra);
        }
        Ok(GFun { xi })
    }

    pub fn n(&self) -> usize {
        self.xi.rows()
    }

    pub fn xi(&self) -> &Mat {
        &self.xi
    }

    pub fn field(&self) -> Field {
        self.xi.field()
    }

    /// `f(η) = tr(ξη)`.
    pub fn eval(&self, eta: &Mat) -> Result<Scalar> {
        pairing(&self.xi, eta)
    }

    /// Dimension of `{X ∈ sub : [X, ξ] = 0}`, the Lie algebra of the
    /// stabilizer of this functional in `P_n` or `GL(n)`.
    pub fn stabilizer_dim(&self, sub: Subalgebra) -> usize {
        let basis = sub.basis(self.field(), self.n());
        let images: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|x| x.commutator(&self.xi).unwrap().entries().to_vec())
            .collect();
        basis.len() - rank_of_columns(self.field(), &images)
    }
}

/// A functional on `p_n`, stored as its preimage in `p̄_n` (zero last column).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PFun {
    xi: Mat,
}

impl PFun {
    /// Fails with [`Error::NotPBar`] unless the last column is zero.
    pub fn new(xi: Mat) -> Result<Self> {
        let n = xi.ensure_square()?;
        if n == 0 {
            return Err(Error::EmptyAlgebra);
        }
        if (0..n).any(|i| !xi[(i, n - 1)].is_zero()) {
            return Err(Error::NotPBar);
        }
        Ok(PFun { xi })
    }

    /// Assembles `[[A, 0], [αᵗ, 0]]` from the Levi block and the bottom row.
    pub fn from_blocks(levi: &Mat, alpha: &[Scalar]) -> Result<Self> {
        let m = levi.ensure_square()?;
        if alpha.len() != m {
            return Err(Error::SizeMismatch {
                left: levi.shape(),
                right: (1, alpha.len()),
            });
        }
        let field = levi.field();
        for a in alpha {
            field.ensure_same(a.field())?;
        }
        Ok(PFun {
            xi: Mat::from_fn(field, m + 1, m + 1, |i, j| {
                if j == m {
                    Scalar::zero(field)
                } else if i == m {
                    alpha[j].clone()
                } else {
                    levi[(i, j)].clone()
                }
            }),
        })
    }

    pub fn zero(field: Field, n: usize) -> Self {
        PFun {
            xi: Mat::zeros(field, n, n),
        }
    }

    pub fn n(&self) -> usize {
        self.xi.rows()
    }

    pub fn xi(&self) -> &Mat {
        &self.xi
    }

    pub fn field(&self) -> Field {
        self.xi.field()
    }

    /// The block `A ∈ gl(n−1)` pairing with the Levi subalgebra.
    pub fn levi(&self) -> Mat {
        let m = self.n() - 1;
        self.xi.submatrix(0, m, 0, m)
    }

    /// The bottom row `αᵗ`, which pairs with the nilradical `n_n`.
    pub fn alpha(&self) -> Vec<Scalar> {
        let m = self.n() - 1;
        self.xi.row(m)[..m].to_vec()
    }

    /// The `n(n−1)` free entries (all rows, first `n−1` columns), row-major.
    pub fn coords(&self) -> Vec<Scalar> {
        let n = self.n();
        (0..n)
            .flat_map(|i| self.xi.row(i)[..n - 1].iter().cloned())
            .collect()
    }

    pub fn eval(&self, eta: &Mat) -> Result<Scalar> {
        ensure_in_lie_p(eta)?;
        pairing(&self.xi, eta)
    }

    /// Dimension of `{X ∈ p_n : ad*(X) f = 0}`.
    pub fn stabilizer_dim(&self) -> usize {
        let basis = p_basis(self.field(), self.n());
        let images: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|x| ad_coadjoint_p(x, self).unwrap().coords())
            .collect();
        basis.len() - rank_of_columns(self.field(), &images)
    }
}

/// A group element of `GL(n)`, flagged when it lies in `P_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElt {
    g: Mat,
    inv: Mat,
    in_p: bool,
}

impl GroupElt {
    pub fn new(g: Mat) -> Result<Self> {
        let n = g.ensure_square()?;
        let inv = g.inverse()?;
        let in_p = n > 0 && {
            let last = g.row(n - 1);
            last[..n - 1].iter().all(Scalar::is_zero) && last[n - 1].is_one()
        };
        Ok(GroupElt { g, inv, in_p })
    }

    /// Fails with [`Error::NotInP`] unless the last row is `(0, …, 0, 1)`.
    pub fn in_p(g: Mat) -> Result<Self> {
        let e = Self::new(g)?;
        if !e.in_p {
            return Err(Error::NotInP);
        }
        Ok(e)
    }

    pub fn identity(field: Field, n: usize) -> Self {
        Self::new(Mat::identity(field, n)).unwrap()
    }

    pub fn matrix(&self) -> &Mat {
        &self.g
    }

    pub fn inverse_matrix(&self) -> &Mat {
        &self.inv
    }

    pub fn is_in_p(&self) -> bool {
        self.in_p
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }

    pub fn compose(&self, other: &GroupElt) -> Result<GroupElt> {
        GroupElt::new(self.g.checked_mul(&other.g)?)
    }

    /// `g·ξ·g⁻¹`.
    pub fn conjugate(&self, xi: &Mat) -> Result<Mat> {
        self.g.checked_mul(xi)?.checked_mul(&self.inv)
    }
}

/// Which Lie algebra a stabilizer is taken in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subalgebra {
    P,
    G,
}

impl Subalgebra {
    pub fn basis(self, field: Field, n: usize) -> Vec<Mat> {
        match self {
            Subalgebra::P => p_basis(field, n),
            Subalgebra::G => g_basis(field, n),
        }
    }
}

/// `E_{ij}` for all `i, j`, lexicographic.
pub fn g_basis(field: Field, n: usize) -> Vec<Mat> {
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| Mat::unit(field, n, i, j))
        .collect()
}

/// `E_{ij}` with `i < n−1` (0-based), lexicographic: the fixed basis of `p_n`.
pub fn p_basis(field: Field, n: usize) -> Vec<Mat> {
    (0..n.saturating_sub(1))
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| Mat::unit(field, n, i, j))
        .collect()
}

/// `E_{i,n−1}` with `i < n−1`: the nilradical `n_n`.
pub fn n_basis(field: Field, n: usize) -> Vec<Mat> {
    (0..n.saturating_sub(1))
        .map(|i| Mat::unit(field, n, i, n - 1))
        .collect()
}

/// `E_{ij}` with `i, j < n−1`: the Levi subalgebra `l_n`.
pub fn l_basis(field: Field, n: usize) -> Vec<Mat> {
    let m = n.saturating_sub(1);
    (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .map(|(i, j)| Mat::unit(field, n, i, j))
        .collect()
}

/// Rank of the matrix whose columns are the given vectors.
pub(crate) fn rank_of_columns(field: Field, columns: &[Vec<Scalar>]) -> usize {
    let Some(len) = columns.first().map(Vec::len) else {
        return 0;
    };
    Mat::from_fn(field, columns.len(), len, |i, j| columns[i][j].clone()).rank()
}

/// Kernel of `c ↦ Σ c_k columns[k]`, as coefficient vectors.
pub(crate) fn column_relations(field: Field, columns: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let len = columns.first().map_or(0, Vec::len);
    Mat::from_fn(field, len, columns.len(), |i, j| columns[j][i].clone()).kernel_basis()
}

pub(crate) fn combine(field: Field, n: usize, basis: &[Mat], coeffs: &[Scalar]) -> Mat {
    basis
        .iter()
        .zip(coeffs)
        .fold(Mat::zeros(field, n, n), |acc, (b, c)| &acc + &b.scale(c))
}

fn ensure_in_lie_p(x: &Mat) -> Result<()> {
    let n = x.ensure_square()?;
    if n == 0 || x.row(n - 1).iter().any(|v| !v.is_zero()) {
        return Err(Error::NotInLieP);
    }
    Ok(())
}

/// Trace pairing `(ξ, η) = tr(ξη)`.
pub fn pairing(xi: &Mat, eta: &Mat) -> Result<Scalar> {
    xi.ensure_square()?;
    xi.ensure_same_shape(eta)?;
    let n = xi.rows();
    let mut acc = Scalar::zero(xi.field());
    for i in 0..n {
        for k in 0..n {
            acc = &acc + &(&xi[(i, k)] * &eta[(k, i)]);
        }
    }
    Ok(acc)
}

/// The `p̄_n` representative of `pr′(ξ)`: `ξ` with its last column zeroed.
pub fn project_pbar(xi: &Mat) -> Result<PFun> {
    let n = xi.ensure_square()?;
    if n == 0 {
        return Err(Error::EmptyAlgebra);
    }
    let field = xi.field();
    Ok(PFun {
        xi: Mat::from_fn(field, n, n, |i, j| {
            if j == n - 1 {
                Scalar::zero(field)
            } else {
                xi[(i, j)].clone()
            }
        }),
    })
}

/// Restriction `f ↦ f|_{p_n}`, i.e. `pr(ξ) ↦ pr′(ξ)`.
pub fn moment_map(f: &GFun) -> PFun {
    project_pbar(&f.xi).expect("GFun is square and nonempty")
}

/// `g·f`, realized as `pr(gξg⁻¹)`.
pub fn coadjoint_g(g: &GroupElt, f: &GFun) -> Result<GFun> {
    Ok(GFun {
        xi: g.conjugate(&f.xi)?,
    })
}

/// `g·f` for `g ∈ P_n`, realized as `pr′(gξg⁻¹)`.
pub fn coadjoint_p(g: &GroupElt, f: &PFun) -> Result<PFun> {
    if !g.in_p {
        return Err(Error::NotInP);
    }
    project_pbar(&g.conjugate(&f.xi)?)
}

/// Infinitesimal coadjoint action `ad*(X) f = pr′([X, ξ])` for `X ∈ p_n`.
///
/// From `(ad(X)f)(Y) = −f([X,Y]) = tr([X,ξ]·Y)`.
pub fn ad_coadjoint_p(x: &Mat, f: &PFun) -> Result<PFun> {
    ensure_in_lie_p(x)?;
    project_pbar(&x.commutator(&f.xi)?)
}

/// Infinitesimal coadjoint action on `gl(n)*`: `pr([X, ξ])`.
pub fn ad_coadjoint_g(x: &Mat, f: &GFun) -> Result<GFun> {
    Ok(GFun {
        xi: x.commutator(&f.xi)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionalKind {
    Gfun,
    Pfun,
}

/// Serialized functional: `{"kind": "gfun"|"pfun", "matrix": {…}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionalDoc {
    pub kind: FunctionalKind,
    pub matrix: MatrixDoc,
}

impl GFun {
    pub fn to_doc(&self) -> FunctionalDoc {
        FunctionalDoc {
            kind: FunctionalKind::Gfun,
            matrix: MatrixDoc::from_mat(&self.xi),
        }
    }
}

impl PFun {
    pub fn to_doc(&self) -> FunctionalDoc {
        FunctionalDoc {
            kind: FunctionalKind::Pfun,
            matrix: MatrixDoc::from_mat(&self.xi),
        }
    }
}

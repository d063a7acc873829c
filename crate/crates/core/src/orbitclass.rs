//! Classification of `P_n`-coadjoint orbits by depth and Levi datum.
//!
//! Split `f ∈ p_m*` as `[[A, 0], [αᵗ, 0]]`. If `α = 0`, `f` lies in `l_m*`
//! and its orbit is the `GL(m−1)`-similarity class of `A`. Otherwise the Levi
//! factor moves `α` to `(0, …, 0, 1)`, the nilradical translates away the last
//! column of `A`, and what remains is a functional on `p_{m−1}`. Iterating,
//! every orbit is labelled by the number of steps taken (depth − 1) and the
//! similarity class of the terminal Levi block.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::exactalg::{Poly, Scalar};
use crate::liecore::PFun;
use crate::matrixkit::{centralizer_dim_from_factors, char_poly, invariant_factors, Mat};

/// Complete invariant of a `P_n`-coadjoint orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DepthInvariant {
    pub n: usize,
    /// `j + 1`, in `[1, n]`.
    pub depth: usize,
    /// Invariant factors of the terminal Levi block in `gl(n − depth)`.
    pub levi_invariant_factors: Vec<Poly>,
    /// Minimal polynomial of the Levi block is squarefree.
    pub semisimple: bool,
    /// Characteristic polynomial of the Levi block; its roots are the
    /// eigenvalues of the orbit.
    pub levi_char_poly: Poly,
}

impl DepthInvariant {
    pub fn levi_size(&self) -> usize {
        self.n - self.depth
    }

    pub fn is_open(&self) -> bool {
        self.depth == self.n
    }

    /// The part of the invariant that determines the orbit.
    pub fn orbit_key(&self) -> (usize, &[Poly]) {
        (self.depth, &self.levi_invariant_factors)
    }
}

impl Serialize for DepthInvariant {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("DepthInvariant", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("depth", &self.depth)?;
        let factors: Vec<String> = self
            .levi_invariant_factors
            .iter()
            .map(Poly::to_string)
            .collect();
        st.serialize_field("invariant_factors", &factors)?;
        st.serialize_field("semisimple", &self.semisimple)?;
        st.end()
    }
}

/// How the Levi element `B` with last row `αᵗ` is completed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CompletionRule {
    /// Pivot on the last nonzero entry of `α`.
    #[default]
    LastNonzero,
    /// Pivot on the first nonzero entry of `α`.
    FirstNonzero,
}

/// Result of running the reduction to termination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub depth: usize,
    /// Terminal Levi block in `gl(n − depth)`; 0×0 for the open orbit.
    pub levi: Mat,
}

/// `B` with rows `e_j` (`j ≠ i*`, ascending) followed by `αᵗ`.
fn completion(alpha: &[Scalar], rule: CompletionRule) -> Mat {
    let m = alpha.len();
    let field = alpha[0].field();
    let nonzero = |i: &usize| !alpha[*i].is_zero();
    let pivot = match rule {
        CompletionRule::LastNonzero => (0..m).rev().find(nonzero),
        CompletionRule::FirstNonzero => (0..m).find(nonzero),
    }
    .expect("alpha is nonzero");
    let rows: Vec<usize> = (0..m).filter(|&j| j != pivot).collect();
    Mat::from_fn(field, m, m, |i, j| {
        if i == m - 1 {
            alpha[j].clone()
        } else {
            Scalar::from_int(field, (rows[i] == j) as i64)
        }
    })
}

pub fn reduce_with(f: &PFun, rule: CompletionRule) -> Reduction {
    let n = f.n();
    let mut cur = f.xi().clone();
    loop {
        let m = cur.rows();
        let levi = cur.submatrix(0, m - 1, 0, m - 1);
        let alpha = cur.row(m - 1)[..m - 1].to_vec();
        if alpha.iter().all(Scalar::is_zero) {
            return Reduction {
                depth: n - m + 1,
                levi,
            };
        }
        let b = completion(&alpha, rule);
        let b_inv = b.inverse().expect("completion is invertible");
        debug_assert!({
            let moved: Vec<Scalar> = (0..m - 1)
                .map(|j| {
                    (0..m - 1).fold(Scalar::zero(cur.field()), |acc, k| {
                        &acc + &(&alpha[k] * &b_inv[(k, j)])
                    })
                })
                .collect();
            moved[..m - 2].iter().all(Scalar::is_zero) && moved[m - 2].is_one()
        });
        let conj = &(&b * &levi) * &b_inv;
        // translating by the nilradical clears the last column of the Levi block
        let size = m - 1;
        let field = cur.field();
        cur = Mat::from_fn(field, size, size, |i, j| {
            if j == size - 1 {
                Scalar::zero(field)
            } else {
                conj[(i, j)].clone()
            }
        });
    }
}

pub fn reduce(f: &PFun) -> Reduction {
    reduce_with(f, CompletionRule::default())
}

/// Depth only, skipping the invariant-factor computation.
pub fn depth(f: &PFun) -> usize {
    reduce(f).depth
}

pub fn classify(f: &PFun) -> DepthInvariant {
    classify_with(f, CompletionRule::default())
}

pub fn classify_with(f: &PFun, rule: CompletionRule) -> DepthInvariant {
    let Reduction { depth, levi } = reduce_with(f, rule);
    let factors = invariant_factors(&levi).expect("Levi block is square");
    let semisimple = factors
        .last()
        .map_or(true, |d| d.is_squarefree().expect("invariant factors are nonzero"));
    DepthInvariant {
        n: f.n(),
        depth,
        semisimple,
        levi_char_poly: char_poly(&levi).expect("Levi block is square"),
        levi_invariant_factors: factors,
    }
}

/// Two functionals lie in one `P_n`-orbit iff depth and Levi invariant
/// factors agree.
pub fn same_orbit(f1: &PFun, f2: &PFun) -> Result<bool> {
    f1.xi().ensure_same_shape(f2.xi())?;
    let a = classify(f1);
    let b = classify(f2);
    Ok(a.orbit_key() == b.orbit_key())
}

/// `dim Stab = (n − depth) + dim C(A)`: the nilradical of `P_{n−j}` plus the
/// centralizer of the Levi block in `gl(n − depth)`.
pub fn predicted_stabilizer_dim(inv: &DepthInvariant) -> usize {
    inv.levi_size() + centralizer_dim_from_factors(&inv.levi_invariant_factors)
}

/// Krylov test for the open orbit: `Some(n)` when the rows
/// `αᵗ, αᵗA, …, αᵗA^{n−2}` are linearly independent, `None` otherwise.
pub fn observability_depth(f: &PFun) -> Option<usize> {
    let n = f.n();
    let a = f.levi();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(n - 1);
    let mut cur = f.alpha();
    for _ in 0..n - 1 {
        let next = a.transpose().mul_vec(&cur);
        rows.push(std::mem::replace(&mut cur, next));
    }
    let krylov = Mat::from_fn(f.field(), n - 1, n - 1, |i, j| rows[i][j].clone());
    (krylov.rank() == n - 1).then_some(n)
}

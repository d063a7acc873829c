//! Named orbit representatives for regular semisimple `GL(n)`-orbits and
//! their images under the moment map, plus verification suites.
//!
//! A regular semisimple orbit `O_f = G·f` is split into `P`-orbits indexed by
//! nonempty selectors. The `P`-orbits in `O_f` correspond to `T`-orbits on
//! `F^n − {0}` under `g·x = (g⁻¹)ᵗx`, where `T` is the stabilizer of `f` and
//! `P` the stabilizer of `v₀ = e_n`. Each selector names a `T`-orbit
//! representative `v_sel`, and `g_sel` is chosen with `g_sel⁻¹·v₀ = v_sel`.

mod mackey;
mod report;
mod verify;

pub use mackey::{mackey_strata_match, orbit_strata, representation_strata, Stratum};
pub use report::{Report, Status};
pub use verify::{
    fiber_over_open_point, verify_lemma_suite, verify_open_orbit, verify_orbit_census,
    verify_real_complex_consistency, verify_stabilizer_dims,
};

use serde::Serialize;
use thiserror::Error;

use crate::error::Error;
use crate::exactalg::{Field, Poly, Prime, Scalar};
use crate::fforacle::OracleError;
use crate::liecore::{coadjoint_g, moment_map, GFun, GroupElt, PFun};
use crate::matrixkit::Mat;
use crate::orbitclass::{classify, DepthInvariant};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("assertion failed: {}", .0.claim)]
    AssertionFailure(Box<Report>),
    #[error("invalid selector: {0}")]
    InvalidSelector(String),
    #[error("invalid orbit data: {0}")]
    InvalidSpec(String),
    #[error("bad reduction mod {p}: {reason}")]
    BadReduction { p: u64, reason: String },
    #[error("degenerate spectral data: {0}")]
    DegenerateSpectralData(String),
    #[error(transparent)]
    Algebra(#[from] Error),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

type CResult<T> = std::result::Result<T, CatalogError>;

fn pairwise_distinct(v: &[Scalar]) -> bool {
    v.iter()
        .enumerate()
        .all(|(i, a)| v[i + 1..].iter().all(|b| a != b))
}

fn common_field(values: &[&[Scalar]], fallback: Option<Field>) -> CResult<Field> {
    let mut field = fallback;
    for v in values.iter().flat_map(|s| s.iter()) {
        match field {
            None => field = Some(v.field()),
            Some(f) if f != v.field() => {
                return Err(CatalogError::InvalidSpec(format!(
                    "mixed fields {f} and {}",
                    v.field()
                )))
            }
            _ => {}
        }
    }
    field.ok_or_else(|| CatalogError::InvalidSpec("no entries".into()))
}

/// `ξ = diag(a_1, …, a_n)` with pairwise-distinct entries.
///
/// Usually over ℚ(i); any field is accepted so that the same data can be
/// reduced to a split model over `F_p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexOrbitSpec {
    a: Vec<Scalar>,
}

impl ComplexOrbitSpec {
    pub fn new(a: Vec<Scalar>) -> CResult<Self> {
        common_field(&[&a], None)?;
        if !pairwise_distinct(&a) {
            return Err(CatalogError::InvalidSpec("eigenvalues must be distinct".into()));
        }
        Ok(ComplexOrbitSpec { a })
    }

    pub fn from_ints(field: Field, a: &[i64]) -> CResult<Self> {
        Self::new(a.iter().map(|&v| Scalar::from_int(field, v)).collect())
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn field(&self) -> Field {
        self.a[0].field()
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.a
    }

    pub fn xi(&self) -> Mat {
        Mat::diag(self.field(), &self.a)
    }

    /// The same spectrum over `F_p`, if every entry reduces and the reduced
    /// entries stay distinct.
    pub fn reduce_mod(&self, p: Prime) -> Option<ComplexOrbitSpec> {
        let a: Option<Vec<Scalar>> = self.a.iter().map(|v| v.reduce_mod(p)).collect();
        ComplexOrbitSpec::new(a?).ok()
    }
}

/// `ξ = diag(a_1 I + b_1 J, …, a_k I + b_k J, c_1, …, c_{n−2k})` with
/// `J = [[0, 1], [−1, 0]]`, eigenvalues `a_j ± i b_j` and `c_l`.
///
/// Over ℚ, or over `F_p` with `p ≡ 3 mod 4` so that each `J`-block stays
/// irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealOrbitSpec {
    a: Vec<Scalar>,
    b: Vec<Scalar>,
    c: Vec<Scalar>,
}

impl RealOrbitSpec {
    pub fn new(a: Vec<Scalar>, b: Vec<Scalar>, c: Vec<Scalar>) -> CResult<Self> {
        if a.len() != b.len() {
            return Err(CatalogError::InvalidSpec(
                "pair real and imaginary parts differ in length".into(),
            ));
        }
        let field = common_field(&[&a, &b, &c], None)?;
        match field {
            Field::Gauss => {
                return Err(CatalogError::InvalidSpec("real data must not be over gauss".into()))
            }
            Field::Fp(p) if p.get() % 4 != 3 => {
                return Err(CatalogError::InvalidSpec(format!(
                    "pair blocks split over F_{p}; need p = 3 mod 4"
                )))
            }
            _ => {}
        }
        if b.iter().any(Scalar::is_zero) {
            return Err(CatalogError::InvalidSpec("pair imaginary parts must be nonzero".into()));
        }
        if !pairwise_distinct(&c) {
            return Err(CatalogError::InvalidSpec("real eigenvalues must be distinct".into()));
        }
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if a[i] == a[j] && (b[i] == b[j] || b[i] == -&b[j]) {
                    return Err(CatalogError::InvalidSpec(
                        "complex eigenvalue pairs must be distinct".into(),
                    ));
                }
            }
        }
        Ok(RealOrbitSpec { a, b, c })
    }

    /// Integer data: pairs `(a_j, b_j)` and reals `c`, over ℚ.
    pub fn from_ints(pairs: &[(i64, i64)], reals: &[i64]) -> CResult<Self> {
        let q = |v: i64| Scalar::from_int(Field::Rat, v);
        Self::new(
            pairs.iter().map(|&(a, _)| q(a)).collect(),
            pairs.iter().map(|&(_, b)| q(b)).collect(),
            reals.iter().map(|&c| q(c)).collect(),
        )
    }

    pub fn n(&self) -> usize {
        2 * self.a.len() + self.c.len()
    }

    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn field(&self) -> Field {
        self.a.first().or(self.c.first()).expect("nonempty").field()
    }

    pub fn pair_real_parts(&self) -> &[Scalar] {
        &self.a
    }

    pub fn pair_imag_parts(&self) -> &[Scalar] {
        &self.b
    }

    pub fn reals(&self) -> &[Scalar] {
        &self.c
    }

    pub fn xi(&self) -> Mat {
        let field = self.field();
        let n = self.n();
        let k = self.k();
        let mut m = Mat::zeros(field, n, n);
        for j in 0..k {
            let (r, s) = (2 * j, 2 * j + 1);
            m.set(r, r, self.a[j].clone());
            m.set(s, s, self.a[j].clone());
            m.set(r, s, self.b[j].clone());
            m.set(s, r, -&self.b[j]);
        }
        for (l, c) in self.c.iter().enumerate() {
            m.set(2 * k + l, 2 * k + l, c.clone());
        }
        m
    }

    /// `x² − 2a_j x + a_j² + b_j²`, the real factor of the `j`-th pair.
    pub fn pair_factor(&self, j: usize) -> Poly {
        let (a, b) = (&self.a[j], &self.b[j]);
        let field = self.field();
        Poly::from_coeffs(
            field,
            vec![
                &(a * a) + &(b * b),
                -&(a * &Scalar::from_int(field, 2)),
                Scalar::one(field),
            ],
        )
        .expect("coefficients share a field")
    }

    /// The same data over ℚ(i), as a diagonalizable spectrum.
    pub fn complex_spectrum(&self) -> Vec<Scalar> {
        let i = Scalar::gauss_int(0, 1);
        let mut z = Vec::with_capacity(self.n());
        for j in 0..self.k() {
            let (a, b) = (self.a[j].complexify(), self.b[j].complexify());
            z.push(&a + &(&i * &b));
            z.push(&a - &(&i * &b));
        }
        z.extend(self.c.iter().map(Scalar::complexify));
        z
    }

    /// Reduction to `F_p` (`p ≡ 3 mod 4`) preserving all nondegeneracy.
    pub fn reduce_mod(&self, p: Prime) -> Option<RealOrbitSpec> {
        let red = |v: &[Scalar]| -> Option<Vec<Scalar>> { v.iter().map(|s| s.reduce_mod(p)).collect() };
        RealOrbitSpec::new(red(&self.a)?, red(&self.b)?, red(&self.c)?).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitSpec {
    Complex(ComplexOrbitSpec),
    Real(RealOrbitSpec),
}

impl From<ComplexOrbitSpec> for OrbitSpec {
    fn from(s: ComplexOrbitSpec) -> Self {
        OrbitSpec::Complex(s)
    }
}

impl From<RealOrbitSpec> for OrbitSpec {
    fn from(s: RealOrbitSpec) -> Self {
        OrbitSpec::Real(s)
    }
}

impl OrbitSpec {
    pub fn n(&self) -> usize {
        match self {
            OrbitSpec::Complex(s) => s.n(),
            OrbitSpec::Real(s) => s.n(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            OrbitSpec::Complex(s) => s.field(),
            OrbitSpec::Real(s) => s.field(),
        }
    }

    pub fn xi(&self) -> Mat {
        match self {
            OrbitSpec::Complex(s) => s.xi(),
            OrbitSpec::Real(s) => s.xi(),
        }
    }

    /// Number of `P`-orbits in `O_f`: `2^n − 1` or `2^{n−k} − 1`.
    pub fn expected_orbit_count(&self) -> usize {
        match self {
            OrbitSpec::Complex(s) => (1 << s.n()) - 1,
            OrbitSpec::Real(s) => (1 << (s.n() - s.k())) - 1,
        }
    }

    /// Every valid selector, ordered by bitmask.
    pub fn selectors(&self) -> Vec<Selector> {
        match self {
            OrbitSpec::Complex(s) => (1u64..1 << s.n())
                .map(|mask| Selector::from_mask(mask, s.n()))
                .collect(),
            OrbitSpec::Real(s) => {
                let (k, r) = (s.k(), s.c.len());
                (1u64..1 << (k + r))
                    .map(|mask| Selector::Real {
                        pairs: (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
                        reals: (0..r)
                            .filter(|i| mask >> (k + i) & 1 == 1)
                            .map(|i| 2 * k + i + 1)
                            .collect(),
                    })
                    .collect()
            }
        }
    }

    /// The selector whose orbit is open.
    pub fn full_selector(&self) -> Selector {
        self.selectors().pop().expect("n >= 1")
    }
}

/// A nonempty index set naming one `P`-orbit in `O_f` (1-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum Selector {
    Complex {
        #[serde(rename = "I")]
        indices: Vec<usize>,
    },
    Real {
        #[serde(rename = "I1")]
        pairs: Vec<usize>,
        #[serde(rename = "I2")]
        reals: Vec<usize>,
    },
}

fn normalized(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

impl Selector {
    pub fn complex(indices: Vec<usize>) -> Self {
        Selector::Complex {
            indices: normalized(indices),
        }
    }

    pub fn real(pairs: Vec<usize>, reals: Vec<usize>) -> Self {
        Selector::Real {
            pairs: normalized(pairs),
            reals: normalized(reals),
        }
    }

    /// Complex selector from a bitmask: bit `i` selects index `i + 1`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Selector::Complex {
            indices: (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect(),
        }
    }

    pub fn validate(&self, spec: &OrbitSpec) -> CResult<()> {
        let bad = |msg: String| Err(CatalogError::InvalidSelector(msg));
        match (self, spec) {
            (Selector::Complex { indices }, OrbitSpec::Complex(s)) => {
                if indices.is_empty() {
                    return bad("selector must be nonempty".into());
                }
                if let Some(i) = indices.iter().find(|&&i| i == 0 || i > s.n()) {
                    return bad(format!("index {i} outside 1..={}", s.n()));
                }
            }
            (Selector::Real { pairs, reals }, OrbitSpec::Real(s)) => {
                if pairs.is_empty() && reals.is_empty() {
                    return bad("selector must be nonempty".into());
                }
                if let Some(i) = pairs.iter().find(|&&i| i == 0 || i > s.k()) {
                    return bad(format!("pair index {i} outside 1..={}", s.k()));
                }
                let lo = 2 * s.k() + 1;
                if let Some(i) = reals.iter().find(|&&i| i < lo || i > s.n()) {
                    return bad(format!("real index {i} outside {lo}..={}", s.n()));
                }
            }
            _ => return bad("selector kind does not match the orbit data".into()),
        }
        Ok(())
    }

    /// `#I`, resp. `2#I1 + #I2`.
    pub fn weight(&self) -> usize {
        match self {
            Selector::Complex { indices } => indices.len(),
            Selector::Real { pairs, reals } => 2 * pairs.len() + reals.len(),
        }
    }
}

impl std::fmt::Display for Selector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let list = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            Selector::Complex { indices } => write!(f, "{{{}}}", list(indices)),
            Selector::Real { pairs, reals } => {
                write!(f, "I1={{{}}} I2={{{}}}", list(pairs), list(reals))
            }
        }
    }
}

/// The `T`-orbit representative `v_sel ∈ F^n − {0}`.
pub fn selector_vector(spec: &OrbitSpec, sel: &Selector) -> CResult<Vec<Scalar>> {
    sel.validate(spec)?;
    let field = spec.field();
    let mut v = vec![Scalar::zero(field); spec.n()];
    match sel {
        Selector::Complex { indices } => {
            for &i in indices {
                v[i - 1] = Scalar::one(field);
            }
        }
        Selector::Real { pairs, reals } => {
            for &i in pairs {
                v[2 * i - 1] = Scalar::one(field);
            }
            for &i in reals {
                v[i - 1] = Scalar::one(field);
            }
        }
    }
    Ok(v)
}

/// `g_sel` with last row `v_sel`, so that `g_sel⁻¹·v₀ = g_selᵗ e_n = v_sel`.
///
/// With `ℓ` the last nonzero position of `v_sel`: if `ℓ = n` the matrix is
/// unipotent lower-triangular `[[I, 0], [v', 1]]`; otherwise row `ℓ` is `e_n`
/// and the remaining rows are standard basis vectors.
pub fn make_g_selector(spec: &OrbitSpec, sel: &Selector) -> CResult<GroupElt> {
    let v = selector_vector(spec, sel)?;
    let n = spec.n();
    let field = spec.field();
    let last = v.iter().rposition(|x| !x.is_zero()).expect("selector is nonempty");
    let g = Mat::from_fn(field, n, n, |i, j| {
        if i == n - 1 {
            v[j].clone()
        } else if i == last {
            Scalar::from_int(field, (j == n - 1) as i64)
        } else {
            Scalar::from_int(field, (i == j) as i64)
        }
    });
    Ok(GroupElt::new(g)?)
}

/// `f = pr(ξ)` for the orbit data.
pub fn make_regular_ss(spec: &OrbitSpec) -> GFun {
    GFun::new(spec.xi()).expect("orbit data has n >= 1")
}

/// `g_sel · f`.
pub fn selector_point(spec: &OrbitSpec, sel: &Selector) -> CResult<GFun> {
    let g = make_g_selector(spec, sel)?;
    Ok(coadjoint_g(&g, &make_regular_ss(spec))?)
}

/// `p(g_sel · f)`.
pub fn moment_image(spec: &OrbitSpec, sel: &Selector) -> CResult<PFun> {
    Ok(moment_map(&selector_point(spec, sel)?))
}

pub fn classify_image(spec: &OrbitSpec, sel: &Selector) -> CResult<DepthInvariant> {
    Ok(classify(&moment_image(spec, sel)?))
}

/// Predicted depth of `p(g_sel · f)`: `#I`, resp. `2#I1 + #I2`.
pub fn expected_depth(spec: &OrbitSpec, sel: &Selector) -> CResult<usize> {
    sel.validate(spec)?;
    Ok(sel.weight())
}

/// Predicted Levi characteristic polynomial: the product of the factors of
/// the unselected eigenvalues.
pub fn expected_char_poly(spec: &OrbitSpec, sel: &Selector) -> CResult<Poly> {
    sel.validate(spec)?;
    match (spec, sel) {
        (OrbitSpec::Complex(s), Selector::Complex { indices }) => {
            let rest: Vec<Scalar> = (1..=s.n())
                .filter(|i| !indices.contains(i))
                .map(|i| s.a[i - 1].clone())
                .collect();
            Ok(Poly::from_roots(s.field(), &rest))
        }
        (OrbitSpec::Real(s), Selector::Real { pairs, reals }) => {
            let mut acc = Poly::one(s.field());
            for j in (1..=s.k()).filter(|j| !pairs.contains(j)) {
                acc = &acc * &s.pair_factor(j - 1);
            }
            for i in (2 * s.k() + 1..=s.n()).filter(|i| !reals.contains(i)) {
                acc = &acc * &Poly::linear(&s.c[i - 2 * s.k() - 1]);
            }
            Ok(acc)
        }
        _ => unreachable!("validated"),
    }
}

/// Predicted `dim Stab_P(g_sel · f)`; the stabilizer of the moment image
/// has twice this dimension.
pub fn expected_upstairs_dim(spec: &OrbitSpec, sel: &Selector) -> CResult<usize> {
    Ok(spec.n() - expected_depth(spec, sel)?)
}

/// Representatives of the open `P_n`-orbit in `p_n*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpenRep {
    /// Ones on the subdiagonal.
    Shift,
    /// `[[diag(a), 0], [bᵗ, 0]]` with distinct `a_i` and nonzero `b_i`.
    Spectral { a: Vec<Scalar>, b: Vec<Scalar> },
}

pub fn make_open_rep(field: Field, n: usize, variant: &OpenRep) -> CResult<PFun> {
    if n == 0 {
        return Err(CatalogError::Algebra(Error::EmptyAlgebra));
    }
    match variant {
        OpenRep::Shift => Ok(PFun::new(Mat::from_fn(field, n, n, |i, j| {
            Scalar::from_int(field, (i == j + 1) as i64)
        }))?),
        OpenRep::Spectral { a, b } => {
            if a.len() != n - 1 || b.len() != n - 1 {
                return Err(CatalogError::DegenerateSpectralData(format!(
                    "need {} diagonal entries and {} row entries",
                    n - 1,
                    n - 1
                )));
            }
            if a.iter().chain(b).any(|s| s.field() != field) {
                return Err(CatalogError::Algebra(Error::FieldMismatch {
                    left: field,
                    right: a.iter().chain(b).find(|s| s.field() != field).unwrap().field(),
                }));
            }
            if !pairwise_distinct(a) {
                return Err(CatalogError::DegenerateSpectralData(
                    "diagonal entries must be distinct".into(),
                ));
            }
            if b.iter().any(Scalar::is_zero) {
                return Err(CatalogError::DegenerateSpectralData(
                    "row entries must be nonzero".into(),
                ));
            }
            Ok(PFun::from_blocks(&Mat::diag(field, a), b)?)
        }
    }
}

/// Spectral data `a = (1, …, n−1)`, `b = (1, …, 1)`.
pub fn default_spectral(field: Field, n: usize) -> OpenRep {
    OpenRep::Spectral {
        a: (1..n as i64).map(|v| Scalar::from_int(field, v)).collect(),
        b: vec![Scalar::one(field); n.saturating_sub(1)],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rat;

    fn complex(a: &[i64]) -> OrbitSpec {
        ComplexOrbitSpec::from_ints(Field::Gauss, a).unwrap().into()
    }

    #[test]
    fn selector_matrices() {
        let s3 = complex(&[0, 1, 2]);
        let g = make_g_selector(&s3, &Selector::complex(vec![1, 3])).unwrap();
        assert_eq!(g.matrix(), &Mat::from_ints(Field::Gauss, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]]));
        let s2 = complex(&[1, 2]);
        let g = make_g_selector(&s2, &Selector::complex(vec![2])).unwrap();
        assert_eq!(g.matrix(), &Mat::identity(Field::Gauss, 2));
        let g = make_g_selector(&s2, &Selector::complex(vec![1])).unwrap();
        assert_eq!(g.matrix(), &Mat::from_ints(Field::Gauss, &[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn invalid_selectors() {
        let s = complex(&[1, 2]);
        for sel in [
            Selector::complex(vec![]),
            Selector::complex(vec![3]),
            Selector::complex(vec![0]),
            Selector::real(vec![1], vec![]),
        ] {
            assert!(matches!(
                make_g_selector(&s, &sel),
                Err(CatalogError::InvalidSelector(_))
            ));
        }
        let r: OrbitSpec = RealOrbitSpec::from_ints(&[(0, 1)], &[5]).unwrap().into();
        assert!(Selector::real(vec![], vec![3]).validate(&r).is_ok());
        assert!(Selector::real(vec![], vec![2]).validate(&r).is_err());
        assert!(Selector::real(vec![2], vec![]).validate(&r).is_err());
    }

    #[test]
    fn open_reps() {
        let f = make_open_rep(Q, 3, &OpenRep::Shift).unwrap();
        assert_eq!(f.xi(), &Mat::from_ints(Q, &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]));
        let f = make_open_rep(Q, 2, &OpenRep::Shift).unwrap();
        assert_eq!(f.xi(), &Mat::from_ints(Q, &[&[0, 0], &[1, 0]]));
        let spectral = OpenRep::Spectral {
            a: vec![Scalar::from_int(Q, 1), Scalar::from_int(Q, 2)],
            b: vec![Scalar::one(Q), Scalar::one(Q)],
        };
        let f = make_open_rep(Q, 3, &spectral).unwrap();
        assert_eq!(f.xi(), &Mat::from_ints(Q, &[&[1, 0, 0], &[0, 2, 0], &[1, 1, 0]]));
        let bad = OpenRep::Spectral {
            a: vec![Scalar::one(Q), Scalar::one(Q)],
            b: vec![Scalar::one(Q), Scalar::one(Q)],
        };
        assert!(matches!(
            make_open_rep(Q, 3, &bad),
            Err(CatalogError::DegenerateSpectralData(_))
        ));
        let bad = OpenRep::Spectral {
            a: vec![Scalar::one(Q), Scalar::from_int(Q, 2)],
            b: vec![Scalar::one(Q), Scalar::zero(Q)],
        };
        assert!(matches!(
            make_open_rep(Q, 3, &bad),
            Err(CatalogError::DegenerateSpectralData(_))
        ));
    }

    #[test]
    fn regular_semisimple_constructors() {
        let f = make_regular_ss(&complex(&[1, 2]));
        assert_eq!(f.xi(), &Mat::from_ints(Field::Gauss, &[&[1, 0], &[0, 2]]));
        let r: OrbitSpec = RealOrbitSpec::from_ints(&[(0, 1)], &[]).unwrap().into();
        let f = make_regular_ss(&r);
        assert_eq!(f.xi(), &Mat::from_ints(Q, &[&[0, 1], &[-1, 0]]));
        assert_eq!(f.stabilizer_dim(crate::liecore::Subalgebra::G), 2);
    }

    #[test]
    fn moment_images() {
        let s = complex(&[1, 2]);
        let full = classify_image(&s, &Selector::complex(vec![1, 2])).unwrap();
        assert_eq!(full.depth, 2);
        assert_eq!(full.levi_char_poly, Poly::one(Field::Gauss));
        let one = classify_image(&s, &Selector::complex(vec![2])).unwrap();
        assert_eq!(one.depth, 1);
        assert_eq!(one.levi_char_poly, Poly::from_ints(Field::Gauss, &[-1, 1]));
        let r: OrbitSpec = RealOrbitSpec::from_ints(&[(0, 1)], &[]).unwrap().into();
        let g = make_g_selector(&r, &Selector::real(vec![1], vec![])).unwrap();
        assert_eq!(g.matrix(), &Mat::identity(Q, 2));
        assert_eq!(classify_image(&r, &Selector::real(vec![1], vec![])).unwrap().depth, 2);
    }

    #[test]
    fn spec_validation() {
        assert!(ComplexOrbitSpec::from_ints(Q, &[1, 1]).is_err());
        assert!(RealOrbitSpec::from_ints(&[(0, 0)], &[]).is_err());
        assert!(RealOrbitSpec::from_ints(&[(1, 2), (1, -2)], &[]).is_err());
        assert!(RealOrbitSpec::from_ints(&[(1, 2)], &[3, 3]).is_err());
        let f5 = Field::fp(5).unwrap();
        let f7 = Field::fp(7).unwrap();
        assert!(RealOrbitSpec::new(vec![Scalar::zero(f5)], vec![Scalar::one(f5)], vec![]).is_err());
        assert!(RealOrbitSpec::new(vec![Scalar::zero(f7)], vec![Scalar::one(f7)], vec![]).is_ok());
    }
}

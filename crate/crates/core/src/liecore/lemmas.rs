//! Linear-algebra facts about a functional `h̄ ∈ p_n*` that vanishes on the
//! Levi subalgebra `l_n` but not on the nilradical `n_n`.
//!
//! These are the ingredients of the inductive step of the classification:
//! `η ↦ ad*(η) h̄` embeds `n_n` into `l_n*`, and the annihilator of that image
//! inside `l_n` is exactly the stabilizer `l_n^h` of `h = h̄|_{n_n}`.

use super::{
    ad_coadjoint_p, column_relations, combine, l_basis, n_basis, pairing, rank_of_columns, PFun,
};
use crate::error::{Error, Result};
use crate::exactalg::{Field, Scalar};
use crate::matrixkit::Mat;

/// `h̄` with zero Levi part and `α = (0, …, 0, 1)`.
pub fn standard_h(field: Field, n: usize) -> PFun {
    let mut alpha = vec![Scalar::zero(field); n - 1];
    if let Some(last) = alpha.last_mut() {
        *last = Scalar::one(field);
    }
    PFun::from_blocks(&Mat::zeros(field, n - 1, n - 1), &alpha).expect("shapes agree")
}

fn ensure_levi_free(h: &PFun) -> Result<()> {
    if !h.levi().is_zero() || h.alpha().iter().all(Scalar::is_zero) {
        return Err(Error::Precondition(
            "functional must vanish on the Levi subalgebra and not on the nilradical",
        ));
    }
    Ok(())
}

/// Image of `n_n` under `η ↦ ad*(η) h̄`.
pub fn nilradical_image(h: &PFun) -> Result<Vec<PFun>> {
    ensure_levi_free(h)?;
    n_basis(h.field(), h.n())
        .iter()
        .map(|eta| ad_coadjoint_p(eta, h))
        .collect()
}

/// Rank of `η ↦ ad*(η) h̄` on `n_n`; equals `n − 1` when the map is injective.
pub fn nilradical_image_rank(h: &PFun) -> Result<usize> {
    let cols: Vec<Vec<Scalar>> = nilradical_image(h)?.iter().map(PFun::coords).collect();
    Ok(rank_of_columns(h.field(), &cols))
}

/// Basis of `l_n^h = {X ∈ l_n : (ad*(X) h̄)|_{n_n} = 0}`.
pub fn levi_stabilizer_basis(h: &PFun) -> Result<Vec<Mat>> {
    ensure_levi_free(h)?;
    let field = h.field();
    let n = h.n();
    let basis = l_basis(field, n);
    let cols = basis
        .iter()
        .map(|x| Ok(ad_coadjoint_p(x, h)?.alpha()))
        .collect::<Result<Vec<_>>>()?;
    Ok(column_relations(field, &cols)
        .iter()
        .map(|c| combine(field, n, &basis, c))
        .collect())
}

/// Basis of `{ξ ∈ l_n : (ad*(η) h̄)(ξ) = 0 for all η ∈ n_n}`.
pub fn annihilator_of_nilradical_image(h: &PFun) -> Result<Vec<Mat>> {
    let image = nilradical_image(h)?;
    let field = h.field();
    let n = h.n();
    let basis = l_basis(field, n);
    let cols = basis
        .iter()
        .map(|xi| {
            image
                .iter()
                .map(|f| pairing(f.xi(), xi))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(column_relations(field, &cols)
        .iter()
        .map(|c| combine(field, n, &basis, c))
        .collect())
}

/// True when the two families span the same subspace.
pub fn same_span(field: Field, a: &[Mat], b: &[Mat]) -> bool {
    let flat = |ms: &[Mat]| -> Vec<Vec<Scalar>> { ms.iter().map(|m| m.entries().to_vec()).collect() };
    let ra = rank_of_columns(field, &flat(a));
    let rb = rank_of_columns(field, &flat(b));
    let mut both = flat(a);
    both.extend(flat(b));
    ra == rb && rank_of_columns(field, &both) == ra
}

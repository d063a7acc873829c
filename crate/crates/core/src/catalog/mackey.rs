//! Index bookkeeping between the depth stratification of `p_n*` and the
//! recursive parameterization `P̂_n = E(Ĝ_{n−1}) ⊔ I(P̂_{n−1})` of the
//! unitary dual.

use serde::Serialize;
use serde_json::json;

use super::{CResult, CatalogError, Report};
use crate::error::Error;
use crate::exactalg::{Field, Scalar};
use crate::liecore::PFun;
use crate::matrixkit::Mat;
use crate::orbitclass::classify;

/// One stratum: its depth and the rank `r` of the `GL(r)` datum that
/// parameterizes it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub depth: usize,
    pub levi_rank: usize,
}

/// Functional in `p_n*` that takes exactly `j` reduction steps: the shift
/// matrix restricted to its bottom `j` subdiagonal entries.
fn stratum_witness(n: usize, j: usize) -> PFun {
    let q = Field::Rat;
    PFun::new(Mat::from_fn(q, n, n, |r, c| {
        Scalar::from_int(q, (r == c + 1 && r + j >= n) as i64)
    }))
    .expect("last column is zero")
}

/// Orbit side, read off by classifying one functional per reduction length.
pub fn orbit_strata(n: usize) -> Vec<Stratum> {
    (0..n)
        .map(|j| {
            let inv = classify(&stratum_witness(n, j));
            Stratum {
                depth: inv.depth,
                levi_rank: inv.levi_size(),
            }
        })
        .collect()
}

/// Representation side: `P̂_m` contributes `E(σ)`, `σ ∈ Ĝ_{m−1}`, at depth
/// one, and `I` raises the depth of everything coming from `P̂_{m−1}`.
pub fn representation_strata(n: usize) -> Vec<Stratum> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = vec![Stratum {
        depth: 1,
        levi_rank: n - 1,
    }];
    out.extend(representation_strata(n - 1).into_iter().map(|s| Stratum {
        depth: s.depth + 1,
        ..s
    }));
    out
}

pub fn mackey_strata_match(n: usize) -> CResult<Report> {
    if n == 0 {
        return Err(CatalogError::Algebra(Error::EmptyAlgebra));
    }
    let mut report = Report::new(
        "orbit stratum j with GL(n-1-j) datum matches representation depth k = j+1 with GL(n-k) datum",
    );
    let orbits = orbit_strata(n);
    let reps = representation_strata(n);
    report.record(
        orbits.len() == reps.len() && orbits.len() == n,
        json!({"n": n, "orbit_strata": orbits.len(), "representation_strata": reps.len()}),
    );
    for (j, (o, r)) in orbits.iter().zip(&reps).enumerate() {
        let ok = o.depth == j + 1 && r.depth == j + 1 && o.levi_rank == r.levi_rank && o.levi_rank == n - 1 - j;
        report.record(
            ok,
            json!({
                "j": j,
                "orbit_depth": o.depth,
                "orbit_datum": format!("GL({})", o.levi_rank),
                "representation_depth": r.depth,
                "representation_datum": format!("GL({})", r.levi_rank),
            }),
        );
    }
    // GL(0) has a single orbit and a single representation
    let top_orbit = orbits.iter().filter(|s| s.depth == n).collect::<Vec<_>>();
    let top_rep = reps.iter().filter(|s| s.depth == n).collect::<Vec<_>>();
    let singleton = top_orbit.len() == 1
        && top_rep.len() == 1
        && top_orbit[0].levi_rank == 0
        && top_rep[0].levi_rank == 0;
    report.record(singleton, json!({"top_depth": n, "singleton": singleton}));
    report.set_summary(format!("{n} strata matched, top stratum singleton"));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(
            orbit_strata(1),
            vec![Stratum {
                depth: 1,
                levi_rank: 0
            }]
        );
        let three: Vec<(usize, usize)> = orbit_strata(3).iter().map(|s| (s.depth, s.levi_rank)).collect();
        assert_eq!(three, vec![(1, 2), (2, 1), (3, 0)]);
        assert_eq!(orbit_strata(3), representation_strata(3));
        assert!(mackey_strata_match(0).is_err());
        for n in 1..=6 {
            assert!(mackey_strata_match(n).unwrap().is_ok());
        }
    }
}

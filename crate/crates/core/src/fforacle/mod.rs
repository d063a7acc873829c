//! Brute-force ground truth over small prime fields.
//!
//! Everything here works with plain machine integers and exhaustive
//! enumeration: orbits are saturated with union-find over a generating set,
//! so the results do not depend on the classification theory they are used
//! to check.

mod raw;

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde_json::json;
use thiserror::Error;

use crate::catalog::{ComplexOrbitSpec, Report};
use crate::exactalg::{Field, Poly, Prime, Scalar};
use crate::liecore::PFun;
use crate::matrixkit::Mat;
use crate::orbitclass::{classify, reduce};
use raw::{RawMat, UnionFind};

/// Largest point set enumerated exhaustively.
pub const POINT_LIMIT: u128 = 10_000_000;
/// Largest `GL(n, F_p)`-orbit enumerated.
pub const ORBIT_LIMIT: u128 = 2_000_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("{what} has {size} elements, above the limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("bad reduction mod {p}: {reason}")]
    BadReduction { p: u64, reason: String },
    #[error("oracle mismatch: {}", .0.claim)]
    Mismatch(Box<Report>),
}

type OResult<T> = std::result::Result<T, OracleError>;

fn check_prime(p: u64) -> OResult<Prime> {
    Prime::new(p).map_err(|_| OracleError::BadPrime {
        p,
        reason: "not a supported prime".into(),
    })
}

fn guard(what: &'static str, size: u128, limit: u128) -> OResult<()> {
    if size > limit {
        return Err(OracleError::TooLarge { what, size, limit });
    }
    Ok(())
}

fn pow(p: u64, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(p as u128))
}

/// `|GL(m, F_p)| = Π_{i<m} (p^m − p^i)`.
pub fn gl_order(m: usize, p: u64) -> u128 {
    (0..m).map(|i| pow(p, m) - pow(p, i)).product()
}

/// `|P_n(F_p)| = p^{n−1} · |GL(n−1, F_p)|`.
pub fn p_order(n: usize, p: u64) -> u128 {
    pow(p, n - 1) * gl_order(n - 1, p)
}

/// Number of similarity classes in `gl(m, F_q)`: the coefficient of `x^m`
/// in `Π_{i≥1} 1/(1 − q x^i)`.
pub fn similarity_class_count(m: usize, q: u64) -> u128 {
    let mut c = vec![0u128; m + 1];
    c[0] = 1;
    for i in 1..=m {
        for d in i..=m {
            c[d] += q as u128 * c[d - i];
        }
    }
    c[m]
}

/// Orbit count predicted by the depth stratification:
/// `Σ_{j<n} #similarity classes in gl(n−1−j, F_p)`.
pub fn expected_class_count(n: usize, p: u64) -> u128 {
    (0..n).map(|m| similarity_class_count(m, p)).sum()
}

/// Exact `P_n(F_p)`-orbits on `p̄_n(F_p)`.
///
/// Points are indexed by the base-`p` digit string of the `n(n−1)` free
/// entries (rows in order, first `n−1` columns), first entry most
/// significant. Classes are sorted and ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    pub n: usize,
    pub p: u64,
    pub classes: Vec<Vec<u64>>,
}

impl OrbitPartition {
    pub fn point_count(&self) -> u64 {
        pow(self.p, self.n * (self.n - 1)) as u64
    }

    /// Lines `orbit_id point_index`, in point order.
    pub fn dump(&self) -> String {
        let mut labels = vec![0usize; self.point_count() as usize];
        for (id, class) in self.classes.iter().enumerate() {
            for &x in class {
                labels[x as usize] = id;
            }
        }
        let mut out = String::new();
        for (x, id) in labels.iter().enumerate() {
            writeln!(out, "{id} {x}").unwrap();
        }
        out
    }

    /// The point as a functional over `F_p`.
    pub fn functional(&self, index: u64) -> PFun {
        let prime = Prime::new(self.p).expect("validated");
        let m = decode_point(self.n, self.p, index);
        let field = Field::Fp(prime);
        PFun::new(Mat::from_fn(field, self.n, self.n, |i, j| {
            Scalar::fp(m[i * self.n + j] as i64, prime)
        }))
        .expect("last column is zero")
    }

    /// Every generator maps every class into itself.
    pub fn is_saturated(&self) -> bool {
        let mut label = vec![0usize; self.point_count() as usize];
        for (id, class) in self.classes.iter().enumerate() {
            for &x in class {
                label[x as usize] = id;
            }
        }
        let gens = p_generators(self.n, self.p);
        (0..self.point_count()).all(|x| {
            let m = decode_point(self.n, self.p, x);
            gens.iter().all(|(g, gi)| {
                label[act_pbar(self.n, self.p, g, gi, &m) as usize] == label[x as usize]
            })
        })
    }
}

fn decode_point(n: usize, p: u64, index: u64) -> RawMat {
    let digits = raw::decode(p, index, n * (n - 1));
    let mut m = vec![0; n * n];
    for i in 0..n {
        for j in 0..n - 1 {
            m[i * n + j] = digits[i * (n - 1) + j];
        }
    }
    m
}

fn encode_point(n: usize, p: u64, m: &[u64]) -> u64 {
    raw::encode(p, (0..n).flat_map(|i| (0..n - 1).map(move |j| m[i * n + j])))
}

/// `pr′(g ξ g⁻¹)` as a point index.
fn act_pbar(n: usize, p: u64, g: &[u64], g_inv: &[u64], xi: &[u64]) -> u64 {
    encode_point(n, p, &raw::conjugate(p, n, g, g_inv, xi))
}

fn transvection(n: usize, p: u64, i: usize, j: usize) -> (RawMat, RawMat) {
    let mut g = raw::identity(n);
    let mut gi = raw::identity(n);
    g[i * n + j] = 1;
    gi[i * n + j] = p - 1;
    (g, gi)
}

fn diagonal_unit(n: usize, p: u64, i: usize) -> (RawMat, RawMat) {
    let w = raw::primitive_root(p);
    let mut g = raw::identity(n);
    let mut gi = raw::identity(n);
    g[i * n + i] = w;
    gi[i * n + i] = raw::inv_mod(w, p);
    (g, gi)
}

/// `I + E_ij` for `i ≠ j`, `i < n−1`, and a primitive root in each Levi
/// diagonal slot.
fn p_generators(n: usize, p: u64) -> Vec<(RawMat, RawMat)> {
    let mut gens = Vec::new();
    for i in 0..n - 1 {
        for j in (0..n).filter(|&j| j != i) {
            gens.push(transvection(n, p, i, j));
        }
    }
    if p > 2 {
        gens.extend((0..n - 1).map(|i| diagonal_unit(n, p, i)));
    }
    gens
}

/// All transvections together with `diag(ω, 1, …, 1)`.
fn g_generators(n: usize, p: u64) -> Vec<(RawMat, RawMat)> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            gens.push(transvection(n, p, i, j));
        }
    }
    if p > 2 {
        gens.push(diagonal_unit(n, p, 0));
    }
    gens
}

pub fn enumerate_p_orbits(n: usize, p: u64) -> OResult<OrbitPartition> {
    check_prime(p)?;
    assert!(n >= 1, "n must be positive");
    let total = pow(p, n * (n - 1));
    guard("point set of p_n(F_p)*", total, POINT_LIMIT)?;
    let gens = p_generators(n, p);
    let mut uf = UnionFind::new(total as usize);
    for x in 0..total as u64 {
        let m = decode_point(n, p, x);
        for (g, gi) in &gens {
            uf.union(x as u32, act_pbar(n, p, g, gi, &m) as u32);
        }
    }
    Ok(OrbitPartition {
        n,
        p,
        classes: uf.classes(),
    })
}

/// Order of the centralizer of `a` in `GL(m, F_p)`, by enumerating the
/// centralizer algebra.
fn centralizer_gl_order(p: u64, m: usize, a: &[u64]) -> OResult<u128> {
    if m == 0 {
        return Ok(1);
    }
    // X ↦ AX − XA on vec(X), row-major
    let d = m * m;
    let mut sylvester = vec![0u64; d * d];
    for r in 0..m {
        for c in 0..m {
            let col = r * m + c;
            for i in 0..m {
                sylvester[(i * m + c) * d + col] = (sylvester[(i * m + c) * d + col] + a[i * m + r]) % p;
                sylvester[(r * m + i) * d + col] =
                    (sylvester[(r * m + i) * d + col] + p - a[c * m + i]) % p;
            }
        }
    }
    let basis = raw::kernel(p, d, d, &sylvester);
    let count = pow(p, basis.len());
    guard("centralizer algebra", count, POINT_LIMIT)?;
    let mut invertible = 0u128;
    for idx in 0..count as u64 {
        let coeffs = raw::decode(p, idx, basis.len());
        let mut x = vec![0u64; d];
        for (c, v) in coeffs.iter().zip(&basis) {
            for (xe, ve) in x.iter_mut().zip(v) {
                *xe = (*xe + c * ve) % p;
            }
        }
        if raw::is_invertible(p, m, &x) {
            invertible += 1;
        }
    }
    Ok(invertible)
}

fn fp_entries(m: &Mat) -> Vec<u64> {
    m.entries()
        .iter()
        .map(|s| s.fp_value().expect("prime field"))
        .collect()
}

/// Checks that the depth invariant induces exactly `part`, that each orbit
/// satisfies `|orbit| · |Stab| = |P_n(F_p)|` with the predicted stabilizer
/// order, and that the open orbit is unique with trivial stabilizer.
pub fn compare_with_classifier(part: &OrbitPartition) -> OResult<Report> {
    let (n, p) = (part.n, part.p);
    let mut report = Report::new(
        "a P_n-orbit is determined by its depth and the similarity class of its Levi part, with Stab = N_(n-j) x| Stab_L",
    );
    let group = p_order(n, p);
    let mut by_key: HashMap<(usize, Vec<Poly>), usize> = HashMap::new();
    let mut covered = 0u64;
    let mut open = Vec::new();
    for (id, class) in part.classes.iter().enumerate() {
        covered += class.len() as u64;
        let rep = part.functional(class[0]);
        let inv = classify(&rep);
        if let Some(&other) = class[1..]
            .iter()
            .find(|&&x| classify(&part.functional(x)) != inv)
        {
            report.record(
                false,
                json!({"same_oracle_orbit_different_invariant": [class[0], other]}),
            );
        }
        let key = (inv.depth, inv.levi_invariant_factors.clone());
        if let Some(&prev) = by_key.get(&key) {
            report.record(
                false,
                json!({"different_oracle_orbits_same_invariant": [part.classes[prev][0], class[0]]}),
            );
        }
        by_key.insert(key, id);
        let levi = reduce(&rep).levi;
        let stab = pow(p, n - inv.depth) * centralizer_gl_order(p, levi.rows(), &fp_entries(&levi))?;
        let size = class.len() as u128;
        if inv.depth == n {
            open.push(size);
        }
        report.record(
            size * stab == group,
            json!({
                "class": id,
                "size": class.len(),
                "representative": class[0],
                "depth": inv.depth,
                "invariant_factors": inv.levi_invariant_factors.iter().map(Poly::to_string).collect::<Vec<_>>(),
                "stabilizer_order": stab as u64,
            }),
        );
    }
    let expected = expected_class_count(n, p);
    let classes = part.classes.len() as u128;
    report.record(
        covered == part.point_count() && classes == expected,
        json!({"points": covered, "classes": part.classes.len(), "expected_classes": expected as u64}),
    );
    let open_ok = open.len() == 1 && open[0] == group;
    report.record(
        open_ok,
        json!({"open_orbits": open.len(), "open_orbit_size": open.first().map(|&s| s as u64), "group_order": group as u64}),
    );
    // complement of the open orbit is a vanishing fraction of the points
    let total = part.point_count() as u128;
    let complement = total - open.first().copied().unwrap_or(0);
    report.record(
        complement * (p as u128 - 1) < total,
        json!({"complement_points": complement as u64, "total_points": total as u64}),
    );
    report.set_summary(format!("partition match: {} classes", part.classes.len()));
    if report.is_ok() {
        Ok(report)
    } else {
        Err(OracleError::Mismatch(Box::new(report)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Torus {
    /// Diagonal units.
    Split,
    /// `k` blocks `λI + μJ` followed by `n − 2k` diagonal units.
    Pairs(usize),
}

/// A generator of the cyclic group `{λI + μJ}` of order `p² − 1`.
fn pair_generator(p: u64) -> (u64, u64) {
    let order = p * p - 1;
    let factors = raw::prime_factors(order);
    let mul = |(a, b): (u64, u64), (c, d): (u64, u64)| {
        ((a * c + p * p - b * d % p) % p, (a * d + b * c) % p)
    };
    let power = |x: (u64, u64), mut e: u64| {
        let (mut acc, mut b) = ((1, 0), x);
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    (0..p)
        .flat_map(|l| (1..p).map(move |m| (l, m)))
        .find(|&x| factors.iter().all(|&q| power(x, order / q) != (1, 0)))
        .expect("F_p[J] is a field")
}

/// Number of `T(F_p)`-orbits on `F_p^n − {0}` under `t·x = (t⁻¹)ᵗx`.
pub fn count_torus_orbits(n: usize, p: u64, torus: Torus) -> OResult<u64> {
    check_prime(p)?;
    let k = match torus {
        Torus::Split => 0,
        Torus::Pairs(k) => {
            if 2 * k > n {
                return Err(OracleError::BadPrime {
                    p,
                    reason: format!("{k} pairs do not fit in dimension {n}"),
                });
            }
            if k > 0 && p % 4 != 3 {
                return Err(OracleError::BadPrime {
                    p,
                    reason: "pair blocks need p = 3 mod 4".into(),
                });
            }
            k
        }
    };
    let total = pow(p, n);
    guard("F_p^n", total, POINT_LIMIT)?;
    let mut gens: Vec<RawMat> = Vec::new();
    if k > 0 {
        let (l, m) = pair_generator(p);
        for j in 0..k {
            let mut t = raw::identity(n);
            let (r, s) = (2 * j, 2 * j + 1);
            t[r * n + r] = l;
            t[s * n + s] = l;
            t[r * n + s] = m;
            t[s * n + r] = (p - m) % p;
            gens.push(t);
        }
    }
    if p > 2 {
        for i in 2 * k..n {
            gens.push(diagonal_unit(n, p, i).0);
        }
    }
    let actions: Vec<RawMat> = gens
        .iter()
        .map(|t| raw::transpose(n, &raw::inverse(p, n, t).expect("torus element")))
        .collect();
    let mut uf = UnionFind::new(total as usize);
    for x in 1..total as u64 {
        let v = raw::decode(p, x, n);
        for a in &actions {
            uf.union(x as u32, raw::encode(p, raw::mul_vec(p, n, a, &v)) as u32);
        }
    }
    Ok(uf.classes().len() as u64 - 1)
}

/// `G(F_p)·ξ` by breadth-first search over generators of `GL(n, F_p)`.
fn g_orbit(n: usize, p: u64, xi: &[u64]) -> OResult<Vec<RawMat>> {
    let gens = g_generators(n, p);
    let mut index: HashMap<RawMat, u32> = HashMap::new();
    let mut points = vec![xi.to_vec()];
    index.insert(xi.to_vec(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        for (g, gi) in &gens {
            let next = raw::conjugate(p, n, g, gi, &points[cur]);
            if !index.contains_key(&next) {
                guard("G-orbit", points.len() as u128 + 1, ORBIT_LIMIT)?;
                index.insert(next.clone(), points.len() as u32);
                queue.push_back(points.len());
                points.push(next);
            }
        }
    }
    Ok(points)
}

fn reduce_spec(spec: &ComplexOrbitSpec, p: u64) -> OResult<Vec<u64>> {
    let prime = check_prime(p)?;
    let reduced = spec.reduce_mod(prime).ok_or_else(|| OracleError::BadReduction {
        p,
        reason: "eigenvalues do not reduce to distinct residues".into(),
    })?;
    Ok(reduced
        .eigenvalues()
        .iter()
        .map(|s| s.fp_value().expect("reduced"))
        .collect())
}

/// Number of `P(F_p)`-orbits on `G(F_p)·diag(a)`, enumerating the orbit
/// directly.
pub fn double_coset_count(spec: &ComplexOrbitSpec, p: u64) -> OResult<u64> {
    let a = reduce_spec(spec, p)?;
    let n = a.len();
    guard(
        "G-orbit",
        gl_order(n, p) / pow(p - 1, n).max(1),
        ORBIT_LIMIT,
    )?;
    let mut xi = vec![0; n * n];
    for (i, v) in a.iter().enumerate() {
        xi[i * n + i] = *v;
    }
    let points = g_orbit(n, p, &xi)?;
    let index: HashMap<&RawMat, u32> = points.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
    let mut uf = UnionFind::new(points.len());
    let gens = p_generators(n, p);
    for (i, m) in points.iter().enumerate() {
        for (g, gi) in &gens {
            let image = raw::conjugate(p, n, g, gi, m);
            uf.union(i as u32, index[&image]);
        }
    }
    Ok(uf.classes().len() as u64)
}

/// Number of points of `G(F_p)·ξ` whose restriction to `p_n` equals
/// `target` (given with zero last column).
pub fn fiber_size(n: usize, p: u64, xi: &[u64], target: &[u64]) -> OResult<u64> {
    check_prime(p)?;
    let points = g_orbit(n, p, xi)?;
    let hits = points
        .iter()
        .filter(|m| (0..n * n).all(|idx| idx % n == n - 1 || m[idx] == target[idx]))
        .count();
    Ok(hits as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders_and_class_counts() {
        assert_eq!(gl_order(2, 3), 48);
        assert_eq!(p_order(2, 5), 20);
        assert_eq!(p_order(3, 7) , 49 * gl_order(2, 7));
        assert_eq!(similarity_class_count(0, 5), 1);
        assert_eq!(similarity_class_count(2, 3), 12);
        assert_eq!(similarity_class_count(4, 2), 16 + 8 + 8 + 2);
        assert_eq!(expected_class_count(2, 3), 4);
        assert_eq!(expected_class_count(3, 2), 9);
    }

    #[test]
    fn small_partitions() {
        let part = enumerate_p_orbits(2, 3).unwrap();
        let mut sizes: Vec<usize> = part.classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 6]);
        assert!(part.is_saturated());
        let part = enumerate_p_orbits(2, 5).unwrap();
        let mut sizes: Vec<usize> = part.classes.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 1, 1, 20]);
        let report = compare_with_classifier(&part).unwrap();
        assert_eq!(report.summary, "partition match: 6 classes: ok");
        let part = enumerate_p_orbits(3, 2).unwrap();
        assert_eq!(part.classes.len(), 9);
        compare_with_classifier(&part).unwrap();
        assert!(matches!(
            enumerate_p_orbits(5, 7),
            Err(OracleError::TooLarge { .. })
        ));
        assert!(enumerate_p_orbits(2, 4).is_err());
    }

    #[test]
    fn dump_lists_every_point() {
        let part = enumerate_p_orbits(2, 2).unwrap();
        let dump = part.dump();
        assert_eq!(dump.lines().count(), 4);
        assert!(dump.starts_with("0 0\n"));
    }

    #[test]
    fn torus_counts() {
        assert_eq!(count_torus_orbits(2, 3, Torus::Split).unwrap(), 3);
        assert_eq!(count_torus_orbits(3, 5, Torus::Split).unwrap(), 7);
        assert_eq!(count_torus_orbits(2, 3, Torus::Pairs(1)).unwrap(), 1);
        assert_eq!(count_torus_orbits(4, 7, Torus::Pairs(2)).unwrap(), 3);
        assert!(matches!(
            count_torus_orbits(2, 5, Torus::Pairs(1)),
            Err(OracleError::BadPrime { .. })
        ));
    }

    #[test]
    fn double_cosets() {
        let spec = |a: &[i64]| ComplexOrbitSpec::from_ints(Field::Rat, a).unwrap();
        assert_eq!(double_coset_count(&spec(&[1, 2]), 5).unwrap(), 3);
        assert_eq!(double_coset_count(&spec(&[1, 2]), 7).unwrap(), 3);
        assert_eq!(double_coset_count(&spec(&[0, 1, 2]), 5).unwrap(), 7);
        assert!(matches!(
            double_coset_count(&spec(&[1, 6]), 5),
            Err(OracleError::BadReduction { .. })
        ));
    }

    #[test]
    fn centralizer_orders() {
        // scalar 2x2 over F_3: all of GL(2, 3)
        assert_eq!(centralizer_gl_order(3, 2, &[1, 0, 0, 1]).unwrap(), 48);
        // regular semisimple: split torus
        assert_eq!(centralizer_gl_order(5, 2, &[1, 0, 0, 2]).unwrap(), 16);
    }
}

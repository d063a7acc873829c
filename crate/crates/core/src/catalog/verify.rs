use serde_json::{json, Value};

use super::{
    classify_image, default_spectral, expected_char_poly, expected_depth, expected_upstairs_dim,
    make_g_selector, make_open_rep, make_regular_ss, moment_image, selector_point, CResult,
    CatalogError, OpenRep, OrbitSpec, RealOrbitSpec, Report, Selector,
};
use crate::exactalg::{Field, Prime, Scalar};
use crate::fforacle;
use crate::liecore::lemmas::{
    annihilator_of_nilradical_image, levi_stabilizer_basis, nilradical_image, nilradical_image_rank,
    same_span, standard_h,
};
use crate::liecore::{
    ad_coadjoint_p, coadjoint_g, coadjoint_p, moment_map, GFun, GroupElt, PFun, Subalgebra,
};
use crate::matrixkit::Mat;
use crate::orbitclass::{classify, observability_depth, predicted_stabilizer_dim, same_orbit};
use crate::sample::Sampler;

fn finish(report: Report) -> CResult<Report> {
    if report.is_ok() {
        Ok(report)
    } else {
        Err(CatalogError::AssertionFailure(Box::new(report)))
    }
}

fn matrix_json(m: &Mat) -> Value {
    serde_json::to_value(crate::matrixkit::MatrixDoc::from_mat(m)).expect("matrix serializes")
}

/// The shift and spectral representatives both classify as the open orbit
/// with trivial stabilizer. The Krylov test is reported alongside but does
/// not decide the outcome.
pub fn verify_open_orbit(field: Field, n: usize) -> CResult<Report> {
    let mut report = Report::new("the open P_n-orbit is represented by both the shift and the spectral functional, with trivial stabilizer");
    let shift = make_open_rep(field, n, &OpenRep::Shift)?;
    let spectral = make_open_rep(field, n, &default_spectral(field, n))?;
    for (name, f) in [("shift", &shift), ("spectral", &spectral)] {
        let inv = classify(f);
        let stab = f.stabilizer_dim();
        let krylov = observability_depth(f);
        let ok = inv.depth == n && stab == 0 && predicted_stabilizer_dim(&inv) == 0;
        report.record(
            ok,
            json!({
                "representative": name,
                "n": n,
                "depth": inv.depth,
                "stabilizer_dim": stab,
                "observability_depth": krylov,
            }),
        );
    }
    let same = same_orbit(&shift, &spectral)?;
    report.record(same, json!({"same_orbit": same}));
    report.set_summary(format!("n = {n}, depth {n}, trivial stabilizer, one orbit"));
    finish(report)
}

struct Evaluated {
    selector: Selector,
    key: (usize, Vec<crate::exactalg::Poly>),
    depth: usize,
    semisimple: bool,
}

/// All selectors of `spec`: distinct semisimple invariants with the
/// predicted depth and Levi characteristic polynomial, one open orbit, and
/// the predicted number of orbits.
pub fn verify_orbit_census(spec: &OrbitSpec) -> CResult<Report> {
    let n = spec.n();
    let claim = match spec {
        OrbitSpec::Complex(_) => "the moment image of a regular semisimple orbit consists of exactly 2^n-1 semisimple P-orbits, one of them open; selector I has depth #I and Levi eigenvalues {a_i : i not in I}",
        OrbitSpec::Real(_) => "the moment image of a real regular semisimple orbit consists of exactly 2^(n-k)-1 semisimple P-orbits, one of them open; selector (I1, I2) has depth 2#I1+#I2",
    };
    let mut report = Report::new(claim);
    let mut seen: Vec<Evaluated> = Vec::new();
    for sel in spec.selectors() {
        let upstairs_point = selector_point(spec, &sel)?;
        let img = moment_map(&upstairs_point);
        let inv = classify(&img);
        let want_depth = expected_depth(spec, &sel)?;
        let want_poly = expected_char_poly(spec, &sel)?;
        let up = upstairs_point.stabilizer_dim(Subalgebra::P);
        let down = img.stabilizer_dim();
        let ok = inv.depth == want_depth && inv.levi_char_poly == want_poly && inv.semisimple;
        report.record(
            ok,
            json!({
                "selector": sel,
                "depth": inv.depth,
                "expected_depth": want_depth,
                "char_poly": inv.levi_char_poly.to_string(),
                "expected_char_poly": want_poly.to_string(),
                "semisimple": inv.semisimple,
                "upstairs_stabilizer_dim": up,
                "downstairs_stabilizer_dim": down,
            }),
        );
        let key = (inv.depth, inv.levi_invariant_factors.clone());
        if let Some(prev) = seen.iter().find(|e| e.key == key) {
            report.record(
                false,
                json!({"duplicate_invariant": [prev.selector.clone(), sel.clone()]}),
            );
        }
        seen.push(Evaluated {
            selector: sel,
            key,
            depth: inv.depth,
            semisimple: inv.semisimple,
        });
    }
    let open = seen.iter().filter(|e| e.depth == n).count();
    let all_ss = seen.iter().all(|e| e.semisimple);
    let expected = spec.expected_orbit_count();
    report.record(
        open == 1 && seen.len() == expected && all_ss,
        json!({"orbits": seen.len(), "expected_orbits": expected, "open": open, "all_semisimple": all_ss}),
    );
    let ss_text = if all_ss { "all semisimple" } else { "not all semisimple" };
    report.set_summary(format!("{} orbits, {open} open, {ss_text}", seen.len()));
    finish(report)
}

/// Stabilizer dimensions of `g_sel·f` in `P` (upstairs) and of its moment
/// image (downstairs), in dimensions over the base field.
pub fn verify_stabilizer_dims(spec: &OrbitSpec, sel: &Selector) -> CResult<Report> {
    let mut report = Report::new(
        "Stab_P(g.f) is a torus of dimension n-depth and Stab_P(p(g.f)) has dimension 2(n-depth)",
    );
    let point = selector_point(spec, sel)?;
    let img = moment_map(&point);
    let want = expected_upstairs_dim(spec, sel)?;
    let up = point.stabilizer_dim(Subalgebra::P);
    let down = img.stabilizer_dim();
    let predicted = predicted_stabilizer_dim(&classify(&img));
    report.record(
        up == want && down == 2 * want && predicted == down,
        json!({
            "selector": sel,
            "upstairs": up,
            "expected_upstairs": want,
            "downstairs": down,
            "expected_downstairs": 2 * want,
            "predicted_downstairs": predicted,
        }),
    );
    report.set_summary(format!("upstairs {up}, downstairs {down}"));
    finish(report)
}

/// Classifying a real selector image over ℚ and, after complexifying the
/// input, over ℚ(i) gives the same depth and invariant factors.
pub fn verify_real_complex_consistency(spec: &RealOrbitSpec) -> CResult<Report> {
    let mut report = Report::new("embedding the real form into the complex one preserves depth and eigenvalues");
    let real: OrbitSpec = spec.clone().into();
    for sel in real.selectors() {
        let over_real = classify_image(&real, &sel)?;
        let g = make_g_selector(&real, &sel)?;
        let g_c = GroupElt::new(g.matrix().complexify())?;
        let f_c = GFun::new(make_regular_ss(&real).xi().complexify())?;
        let over_complex = classify(&moment_map(&coadjoint_g(&g_c, &f_c)?));
        let lifted: Vec<_> = over_real
            .levi_invariant_factors
            .iter()
            .map(|d| d.map_coeffs(Field::Gauss, Scalar::complexify))
            .collect();
        let ok = over_real.depth == over_complex.depth && lifted == over_complex.levi_invariant_factors;
        report.record(
            ok,
            json!({
                "selector": sel,
                "depth_real": over_real.depth,
                "depth_complex": over_complex.depth,
                "invariant_factors_complex": over_complex.levi_invariant_factors.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            }),
        );
    }
    report.set_summary(format!("{} selectors consistent", real.selectors().len()));
    finish(report)
}

#[derive(Default)]
struct Tally {
    trials: usize,
    failures: usize,
    first: Option<Value>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(witness());
            }
        }
    }

    fn record(self, report: &mut Report, check: &str, n: usize) {
        report.record(
            self.failures == 0,
            json!({
                "check": check,
                "n": n,
                "trials": self.trials,
                "failures": self.failures,
                "counterexample": self.first,
            }),
        );
    }
}

/// Exact checks of the linear-algebra facts behind the classification, for
/// one size `n`, with `moves` random coadjoint moves.
pub fn verify_lemma_suite(field: Field, n: usize, moves: usize, seed: u64) -> CResult<Report> {
    let mut report = Report::new(
        "n_n embeds into l_n* via ad*(.)h, its annihilator is l_n^h, l_n^h fixes h, the moment map is P-equivariant, and the depth invariant is constant on orbits",
    );
    let mut rng = Sampler::new(field, seed);
    if n >= 2 {
        let mut hs = vec![standard_h(field, n)];
        for _ in 0..4 {
            let mut alpha: Vec<Scalar> = (0..n - 1).map(|_| rng.scalar()).collect();
            if alpha.iter().all(Scalar::is_zero) {
                alpha[0] = Scalar::one(field);
            }
            hs.push(PFun::from_blocks(&Mat::zeros(field, n - 1, n - 1), &alpha)?);
        }
        let mut injective = Tally::default();
        let mut lands_in_levi = Tally::default();
        let mut kills = Tally::default();
        let mut span = Tally::default();
        for h in &hs {
            let witness = || json!({"h": matrix_json(h.xi())});
            injective.check(nilradical_image_rank(h)? == n - 1, witness);
            let image = nilradical_image(h)?;
            lands_in_levi.check(
                image.iter().all(|f| f.alpha().iter().all(Scalar::is_zero)),
                witness,
            );
            let stab = levi_stabilizer_basis(h)?;
            let mut all_zero = stab.len() == (n - 1) * (n - 2);
            for x in &stab {
                all_zero &= ad_coadjoint_p(x, h)?.xi().is_zero();
            }
            kills.check(all_zero, witness);
            let ann = annihilator_of_nilradical_image(h)?;
            span.check(same_span(field, &stab, &ann), witness);
        }
        injective.record(&mut report, "nilradical image has rank n-1", n);
        lands_in_levi.record(&mut report, "nilradical image lies in l_n*", n);
        kills.record(&mut report, "l_n^h annihilates h", n);
        span.record(&mut report, "annihilator of the nilradical image equals l_n^h", n);
    }

    let mut equivariant = Tally::default();
    let mut invariant = Tally::default();
    let mut stabilizer = Tally::default();
    for t in 0..moves {
        let g = rng.p_element(n);
        let big = GFun::new(rng.matrix(n, n))?;
        let lhs = moment_map(&coadjoint_g(&g, &big)?);
        let rhs = coadjoint_p(&g, &moment_map(&big))?;
        equivariant.check(lhs == rhs, || {
            json!({"g": matrix_json(g.matrix()), "F": matrix_json(big.xi())})
        });
        let f = if t % 2 == 0 { rng.pfun(n) } else { rng.sparse_pfun(n) };
        let moved = coadjoint_p(&g, &f)?;
        let inv = classify(&f);
        invariant.check(inv == classify(&moved), || {
            json!({"g": matrix_json(g.matrix()), "f": matrix_json(f.xi())})
        });
        if t % 10 == 0 {
            stabilizer.check(f.stabilizer_dim() == predicted_stabilizer_dim(&inv), || {
                json!({"f": matrix_json(f.xi())})
            });
        }
    }
    equivariant.record(&mut report, "moment map is P-equivariant", n);
    invariant.record(&mut report, "classification is constant on P-orbits", n);
    stabilizer.record(&mut report, "stabilizer dimension matches the prediction", n);
    report.set_summary(format!("lemma suite n = {n}, {moves} random moves"));
    finish(report)
}

/// Number of points of `G(F_p)·f` over the moment image of the full
/// selector, by exhaustive enumeration of the orbit over `F_p`.
///
/// Complex data is reduced to a split model; real data needs `p ≡ 3 mod 4`
/// and gives a nonsplit torus model (experimental).
pub fn fiber_over_open_point(spec: &OrbitSpec, p: u64) -> CResult<u64> {
    let bad = |reason: &str| CatalogError::BadReduction {
        p,
        reason: reason.into(),
    };
    let prime = Prime::new(p).map_err(|_| bad("modulus is not a supported prime"))?;
    let reduced: OrbitSpec = match spec {
        OrbitSpec::Complex(s) => s
            .reduce_mod(prime)
            .ok_or_else(|| bad("eigenvalues do not reduce to distinct residues"))?
            .into(),
        OrbitSpec::Real(s) => {
            if p % 4 != 3 {
                return Err(bad("real data needs p = 3 mod 4"));
            }
            s.reduce_mod(prime)
                .ok_or_else(|| bad("data does not reduce to a regular semisimple element"))?
                .into()
        }
    };
    let target = moment_image(&reduced, &reduced.full_selector())?;
    let raw = |m: &Mat| -> Vec<u64> {
        m.entries()
            .iter()
            .map(|s| s.fp_value().expect("reduced data"))
            .collect()
    };
    Ok(fforacle::fiber_size(
        reduced.n(),
        p,
        &raw(&reduced.xi()),
        &raw(target.xi()),
    )?)
}

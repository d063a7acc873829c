use mirabolic::catalog::{
    self, classify_image, make_g_selector, make_open_rep, make_regular_ss, moment_image,
    selector_vector, CatalogError, ComplexOrbitSpec, OpenRep, OrbitSpec, RealOrbitSpec, Selector,
};
use mirabolic::liecore::{coadjoint_g, moment_map, GroupElt, Subalgebra};
use mirabolic::orbitclass::classify;
use mirabolic::sample::Sampler;
use mirabolic::{Field, Mat, Poly, Scalar};

fn random_complex(s: &mut Sampler, n: usize) -> OrbitSpec {
    ComplexOrbitSpec::new(s.distinct_scalars(n)).unwrap().into()
}

fn random_real(s: &mut Sampler, n: usize, k: usize) -> RealOrbitSpec {
    loop {
        let a: Vec<Scalar> = (0..k).map(|_| s.scalar()).collect();
        let b: Vec<Scalar> = (0..k).map(|_| s.nonzero_scalar()).collect();
        let c = s.distinct_scalars(n - 2 * k);
        if let Ok(spec) = RealOrbitSpec::new(a, b, c) {
            return spec;
        }
    }
}

fn specs() -> Vec<OrbitSpec> {
    let mut out = Vec::new();
    for field in [Field::Gauss, Field::Rat, Field::fp(11).unwrap()] {
        let mut s = Sampler::new(field, 31);
        for n in 1..=6 {
            out.push(random_complex(&mut s, n));
        }
    }
    for field in [Field::Rat, Field::fp(7).unwrap()] {
        let mut s = Sampler::new(field, 32);
        for n in 1..=6 {
            for k in 0..=n / 2 {
                out.push(random_real(&mut s, n, k).into());
            }
        }
    }
    out
}

/// Which torus-orbit a row vector lies in: the set of nonzero coordinates,
/// with each rotation block counted as one coordinate.
fn support(spec: &OrbitSpec, row: &[Scalar]) -> (Vec<usize>, Vec<usize>) {
    match spec {
        OrbitSpec::Complex(_) => ((0..row.len()).filter(|&i| !row[i].is_zero()).map(|i| i + 1).collect(), vec![]),
        OrbitSpec::Real(s) => {
            let pairs = (0..s.k())
                .filter(|&j| !row[2 * j].is_zero() || !row[2 * j + 1].is_zero())
                .map(|j| j + 1)
                .collect();
            let reals = (2 * s.k()..s.n()).filter(|&i| !row[i].is_zero()).map(|i| i + 1).collect();
            (pairs, reals)
        }
    }
}

/// Characteristic polynomial of the part of the spectrum left unselected.
fn leftover_char_poly(spec: &OrbitSpec, pairs: &[usize], reals: &[usize]) -> Poly {
    let field = spec.field();
    let x = Poly::x(field);
    let lin = |c: &Scalar| &x - &Poly::constant(c.clone());
    match spec {
        OrbitSpec::Complex(s) => (1..=s.n())
            .filter(|i| !pairs.contains(i))
            .fold(Poly::one(field), |acc, i| &acc * &lin(&s.eigenvalues()[i - 1])),
        OrbitSpec::Real(s) => {
            let mut acc = Poly::one(field);
            for j in (1..=s.k()).filter(|j| !pairs.contains(j)) {
                let (a, b) = (&s.pair_real_parts()[j - 1], &s.pair_imag_parts()[j - 1]);
                // (x - a)^2 + b^2
                let shifted = lin(a);
                acc = &acc * &(&(&shifted * &shifted) + &Poly::constant(b * b));
            }
            for i in (2 * s.k() + 1..=s.n()).filter(|i| !reals.contains(i)) {
                acc = &acc * &lin(&s.reals()[i - 2 * s.k() - 1]);
            }
            acc
        }
    }
}

#[test]
fn selector_element_has_selector_vector_as_last_row() {
    for spec in specs() {
        let n = spec.n();
        for sel in spec.selectors() {
            let g = make_g_selector(&spec, &sel).unwrap();
            let v = selector_vector(&spec, &sel).unwrap();
            assert_eq!(g.matrix().row(n - 1), &v[..]);
            // g⁻¹ sends the last basis covector to v
            let e_n: Vec<Scalar> = (0..n).map(|i| Scalar::from_int(spec.field(), (i == n - 1) as i64)).collect();
            assert_eq!(g.matrix().transpose().mul_vec(&e_n), v);
        }
    }
}

#[test]
fn images_match_support_of_last_row() {
    for spec in specs() {
        for sel in spec.selectors() {
            let inv = classify_image(&spec, &sel).unwrap();
            let v = selector_vector(&spec, &sel).unwrap();
            let (pairs, reals) = support(&spec, &v);
            let weight = match spec {
                OrbitSpec::Complex(_) => pairs.len(),
                OrbitSpec::Real(_) => 2 * pairs.len() + reals.len(),
            };
            assert_eq!(inv.depth, weight, "{sel}");
            assert_eq!(inv.levi_char_poly, leftover_char_poly(&spec, &pairs, &reals), "{sel}");
            assert!(inv.semisimple);
        }
    }
}

#[test]
fn arbitrary_group_elements_land_in_the_predicted_orbit() {
    for field in [Field::Rat, Field::Gauss, Field::fp(7).unwrap()] {
        let mut s = Sampler::new(field, 33);
        for n in 1..=5 {
            let mut all: Vec<OrbitSpec> = vec![random_complex(&mut s, n)];
            if field != Field::Gauss {
                for k in 1..=n / 2 {
                    all.push(random_real(&mut s, n, k).into());
                }
            }
            for spec in all {
                let f = make_regular_ss(&spec);
                for _ in 0..20 {
                    // sparse last rows reach the small strata
                    let mut m = s.matrix(n, n);
                    for j in 0..n {
                        if s.gen_bool(0.4) {
                            m.set(n - 1, j, Scalar::zero(field));
                        }
                    }
                    let Ok(h) = GroupElt::new(m) else { continue };
                    let image = moment_map(&coadjoint_g(&h, &f).unwrap());
                    let inv = classify(&image);
                    let (pairs, reals) = support(&spec, h.matrix().row(n - 1));
                    let sel = match spec {
                        OrbitSpec::Complex(_) => Selector::complex(pairs.clone()),
                        OrbitSpec::Real(_) => Selector::real(pairs.clone(), reals.clone()),
                    };
                    assert_eq!(inv.orbit_key(), classify_image(&spec, &sel).unwrap().orbit_key());
                    assert_eq!(inv.levi_char_poly, leftover_char_poly(&spec, &pairs, &reals));
                }
            }
        }
    }
}

#[test]
fn stabilizers_of_selector_points() {
    for spec in specs() {
        for sel in spec.selectors() {
            let weight = sel.weight();
            let point = catalog::selector_point(&spec, &sel).unwrap();
            let image = moment_image(&spec, &sel).unwrap();
            assert_eq!(point.stabilizer_dim(Subalgebra::P), spec.n() - weight);
            assert_eq!(image.stabilizer_dim(), 2 * (spec.n() - weight));
            catalog::verify_stabilizer_dims(&spec, &sel).unwrap();
        }
    }
}

#[test]
fn census_counts_every_selector_once() {
    for spec in specs() {
        let n = spec.n();
        let expected = match &spec {
            OrbitSpec::Complex(_) => (1usize << n) - 1,
            OrbitSpec::Real(s) => (1usize << (n - s.k())) - 1,
        };
        assert_eq!(spec.selectors().len(), expected);
        assert_eq!(spec.expected_orbit_count(), expected);
        let keys: std::collections::HashSet<_> = spec
            .selectors()
            .iter()
            .map(|sel| {
                let inv = classify_image(&spec, sel).unwrap();
                (inv.depth, inv.levi_invariant_factors)
            })
            .collect();
        assert_eq!(keys.len(), expected);
        catalog::verify_orbit_census(&spec).unwrap();
    }
}

#[test]
fn real_and_complex_classifications_agree() {
    let mut s = Sampler::new(Field::Rat, 34);
    for n in 2..=5 {
        for k in 1..=n / 2 {
            for _ in 0..3 {
                let spec = random_real(&mut s, n, k);
                let report = catalog::verify_real_complex_consistency(&spec).unwrap();
                assert!(report.is_ok());
            }
        }
    }
}

#[test]
fn selector_json_shapes() {
    let c = Selector::complex(vec![3, 1, 3]);
    assert_eq!(serde_json::to_value(&c).unwrap(), serde_json::json!({"I": [1, 3]}));
    let r = Selector::real(vec![1], vec![5]);
    assert_eq!(serde_json::to_value(&r).unwrap(), serde_json::json!({"I1": [1], "I2": [5]}));
    assert_eq!(Selector::from_mask(0b101, 3), Selector::complex(vec![1, 3]));
}

#[test]
fn invalid_inputs_are_rejected() {
    let q = Field::Rat;
    let spec: OrbitSpec = ComplexOrbitSpec::from_ints(q, &[1, 2, 3]).unwrap().into();
    for bad in [Selector::complex(vec![]), Selector::complex(vec![4]), Selector::complex(vec![0]), Selector::real(vec![1], vec![])] {
        assert!(matches!(selector_vector(&spec, &bad), Err(CatalogError::InvalidSelector(_))));
    }
    assert!(matches!(ComplexOrbitSpec::from_ints(q, &[1, 1]), Err(CatalogError::InvalidSpec(_))));
    assert!(matches!(RealOrbitSpec::from_ints(&[(1, 0)], &[]), Err(CatalogError::InvalidSpec(_))));
    assert!(matches!(RealOrbitSpec::from_ints(&[(1, 2), (1, -2)], &[]), Err(CatalogError::InvalidSpec(_))));
    assert!(matches!(RealOrbitSpec::from_ints(&[], &[3, 3]), Err(CatalogError::InvalidSpec(_))));
    let g = Scalar::gauss_int(1, 1);
    assert!(RealOrbitSpec::new(vec![g.clone()], vec![g], vec![]).is_err());
    let f5 = Field::fp(5).unwrap();
    let one = Scalar::one(f5);
    assert!(RealOrbitSpec::new(vec![one.clone()], vec![one], vec![]).is_err());
    let real: OrbitSpec = RealOrbitSpec::from_ints(&[(0, 1)], &[2]).unwrap().into();
    assert!(selector_vector(&real, &Selector::real(vec![], vec![2])).is_err());
    assert!(selector_vector(&real, &Selector::real(vec![2], vec![])).is_err());
    assert!(selector_vector(&real, &Selector::complex(vec![1])).is_err());
    assert!(matches!(
        make_open_rep(q, 3, &OpenRep::Spectral { a: vec![Scalar::one(q); 2], b: vec![Scalar::one(q); 2] }),
        Err(CatalogError::DegenerateSpectralData(_))
    ));
}

#[test]
fn open_representatives_are_open() {
    for field in [Field::Rat, Field::Gauss, Field::fp(7).unwrap()] {
        for n in 1..=6 {
            let shift = make_open_rep(field, n, &OpenRep::Shift).unwrap();
            let spectral = make_open_rep(field, n, &catalog::default_spectral(field, n)).unwrap();
            for f in [shift, spectral] {
                assert_eq!(classify(&f).depth, n);
                assert_eq!(f.stabilizer_dim(), 0);
            }
            assert!(catalog::verify_open_orbit(field, n).unwrap().is_ok());
        }
        assert_eq!(make_open_rep(field, 2, &OpenRep::Shift).unwrap().xi(), &Mat::from_ints(field, &[&[0, 0], &[1, 0]]));
    }
}

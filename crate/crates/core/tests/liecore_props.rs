use mirabolic::liecore::lemmas::{
    annihilator_of_nilradical_image, levi_stabilizer_basis, nilradical_image, nilradical_image_rank,
    same_span,
};
use mirabolic::liecore::{
    ad_coadjoint_p, coadjoint_g, coadjoint_p, g_basis, moment_map, p_basis, GFun, GroupElt, PFun,
    Subalgebra,
};
use mirabolic::sample::Sampler;
use mirabolic::{Field, Mat, Scalar};

fn fields() -> Vec<Field> {
    vec![Field::Rat, Field::Gauss, Field::fp(2).unwrap(), Field::fp(7).unwrap()]
}

#[test]
fn restriction_agrees_with_pairing_on_p() {
    for field in fields() {
        let mut s = Sampler::new(field, 11);
        for n in 1..=5 {
            for _ in 0..20 {
                let f = GFun::new(s.matrix(n, n)).unwrap();
                let image = moment_map(&f);
                for eta in p_basis(field, n) {
                    assert_eq!(image.eval(&eta).unwrap(), f.eval(&eta).unwrap());
                }
                // the stored representative vanishes on the complement of p
                let last_col = image.xi().col(n - 1);
                assert!(last_col.iter().all(Scalar::is_zero));
                assert!(image.eval(&Mat::unit(field, n, n - 1, 0)).is_err());
            }
        }
    }
}

#[test]
fn moment_map_is_equivariant() {
    for field in fields() {
        let mut s = Sampler::new(field, 12);
        for n in 1..=5 {
            for _ in 0..30 {
                let f = GFun::new(s.matrix(n, n)).unwrap();
                let g = s.p_element(n);
                let lhs = moment_map(&coadjoint_g(&g, &f).unwrap());
                let rhs = coadjoint_p(&g, &moment_map(&f)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn coadjoint_action_preserves_pairing() {
    for field in fields() {
        let mut s = Sampler::new(field, 13);
        for n in 1..=5 {
            for _ in 0..20 {
                let f = s.pfun(n);
                let g = s.p_element(n);
                let moved = coadjoint_p(&g, &f).unwrap();
                for eta in p_basis(field, n) {
                    let ad_eta = g.conjugate(&eta).unwrap();
                    assert_eq!(moved.eval(&ad_eta).unwrap(), f.eval(&eta).unwrap());
                }
                let big = GFun::new(s.matrix(n, n)).unwrap();
                let h = s.invertible(n);
                let big_moved = coadjoint_g(&h, &big).unwrap();
                for eta in g_basis(field, n) {
                    let ad_eta = h.conjugate(&eta).unwrap();
                    assert_eq!(big_moved.eval(&ad_eta).unwrap(), big.eval(&eta).unwrap());
                }
            }
        }
    }
}

#[test]
fn coadjoint_action_is_a_group_action() {
    for field in fields() {
        let mut s = Sampler::new(field, 14);
        for n in 1..=5 {
            for _ in 0..20 {
                let f = s.pfun(n);
                let (g1, g2) = (s.p_element(n), s.p_element(n));
                let composed = coadjoint_p(&g1.compose(&g2).unwrap(), &f).unwrap();
                let stepwise = coadjoint_p(&g1, &coadjoint_p(&g2, &f).unwrap()).unwrap();
                assert_eq!(composed, stepwise);
                assert_eq!(coadjoint_p(&GroupElt::identity(field, n), &f).unwrap(), f);
            }
        }
    }
}

#[test]
fn only_p_elements_act_on_p_dual() {
    let mut s = Sampler::new(Field::Rat, 15);
    let f = s.pfun(3);
    let g = GroupElt::new(Mat::from_ints(Field::Rat, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]])).unwrap();
    assert!(!g.is_in_p());
    assert!(coadjoint_p(&g, &f).is_err());
    assert!(ad_coadjoint_p(&Mat::unit(Field::Rat, 3, 2, 0), &f).is_err());
}

#[test]
fn infinitesimal_action_is_a_derivation_of_the_pairing() {
    // ad*(X)f evaluated at Y equals -f([X, Y])
    for field in fields() {
        let mut s = Sampler::new(field, 16);
        for n in 1..=4 {
            let f = s.pfun(n);
            let x = s.lie_p_element(n);
            let moved = ad_coadjoint_p(&x, &f).unwrap();
            for y in p_basis(field, n) {
                let bracket = x.commutator(&y).unwrap();
                assert_eq!(moved.eval(&y).unwrap(), -f.eval(&bracket).unwrap());
            }
        }
    }
}

fn levi_free(s: &mut Sampler, n: usize) -> PFun {
    let field = s.field();
    loop {
        let alpha: Vec<Scalar> = (0..n - 1).map(|_| s.scalar()).collect();
        if alpha.iter().any(|a| !a.is_zero()) {
            return PFun::from_blocks(&Mat::zeros(field, n - 1, n - 1), &alpha).unwrap();
        }
    }
}

#[test]
fn nilradical_lemmas_for_random_linear_forms() {
    for field in fields() {
        let mut s = Sampler::new(field, 17);
        for n in 2..=5 {
            for _ in 0..10 {
                let h = levi_free(&mut s, n);
                assert_eq!(nilradical_image_rank(&h).unwrap(), n - 1);
                for img in nilradical_image(&h).unwrap() {
                    assert!(img.alpha().iter().all(Scalar::is_zero));
                }
                let stab = levi_stabilizer_basis(&h).unwrap();
                let ann = annihilator_of_nilradical_image(&h).unwrap();
                assert_eq!(stab.len(), (n - 1) * (n - 2));
                assert!(same_span(field, &stab, &ann));
            }
        }
    }
}

#[test]
fn lemma_preconditions_are_enforced() {
    let q = Field::Rat;
    let zero = PFun::zero(q, 3);
    assert!(nilradical_image(&zero).is_err());
    let with_levi = PFun::from_blocks(&Mat::identity(q, 2), &[Scalar::one(q), Scalar::zero(q)]).unwrap();
    assert!(levi_stabilizer_basis(&with_levi).is_err());
}

#[test]
fn regular_semisimple_stabilizers() {
    for field in fields() {
        let p = field.characteristic();
        for n in 1..=5 {
            if p != 0 && (n as u64) > p {
                continue;
            }
            let d: Vec<Scalar> = (0..n as i64).map(|i| Scalar::from_int(field, i)).collect();
            let f = GFun::new(Mat::diag(field, &d)).unwrap();
            assert_eq!(f.stabilizer_dim(Subalgebra::G), n);
        }
    }
}

use mirabolic::liecore::{coadjoint_p, PFun};
use mirabolic::matrixkit::similar;
use mirabolic::orbitclass::{
    classify, classify_with, depth, observability_depth, predicted_stabilizer_dim, reduce_with,
    same_orbit, CompletionRule,
};
use mirabolic::sample::Sampler;
use mirabolic::{Field, Mat, Scalar};
use proptest::prelude::*;

fn fields() -> Vec<Field> {
    vec![
        Field::Rat,
        Field::Gauss,
        Field::fp(2).unwrap(),
        Field::fp(3).unwrap(),
        Field::fp(7).unwrap(),
    ]
}

fn sample(s: &mut Sampler, n: usize) -> PFun {
    if s.gen_bool(0.5) {
        s.pfun(n)
    } else {
        s.sparse_pfun(n)
    }
}

#[test]
fn classification_is_invariant_under_random_moves() {
    for field in fields() {
        for n in 1..=5 {
            let mut s = Sampler::new(field, 100 + n as u64);
            for _ in 0..1000 {
                let f = sample(&mut s, n);
                let g = s.p_element(n);
                let moved = coadjoint_p(&g, &f).unwrap();
                let (a, b) = (classify(&f), classify(&moved));
                assert_eq!(a, b, "{field} n={n}: {} vs {}", f.xi(), moved.xi());
                assert!(same_orbit(&f, &moved).unwrap());
            }
        }
    }
}

#[test]
fn completion_rule_does_not_change_the_result() {
    for field in fields() {
        let mut s = Sampler::new(field, 200);
        for n in 1..=6 {
            for _ in 0..100 {
                let f = sample(&mut s, n);
                let last = reduce_with(&f, CompletionRule::LastNonzero);
                let first = reduce_with(&f, CompletionRule::FirstNonzero);
                assert_eq!(last.depth, first.depth);
                assert!(similar(&last.levi, &first.levi).unwrap());
                assert_eq!(
                    classify_with(&f, CompletionRule::LastNonzero),
                    classify_with(&f, CompletionRule::FirstNonzero)
                );
            }
        }
    }
}

#[test]
fn stabilizer_dimension_matches_prediction() {
    for field in fields() {
        let mut s = Sampler::new(field, 300);
        for n in 1..=5 {
            for _ in 0..60 {
                let f = sample(&mut s, n);
                let inv = classify(&f);
                assert_eq!(f.stabilizer_dim(), predicted_stabilizer_dim(&inv), "{}", f.xi());
                assert!((1..=n).contains(&inv.depth));
                assert_eq!(inv.levi_char_poly.degree(), Some(n - inv.depth));
            }
        }
    }
}

#[test]
fn distinct_invariants_are_distinct_orbits() {
    let q = Field::Rat;
    let a = PFun::from_blocks(&Mat::zeros(q, 2, 2), &[Scalar::zero(q), Scalar::zero(q)]).unwrap();
    let b = PFun::from_blocks(&Mat::identity(q, 2), &[Scalar::zero(q), Scalar::zero(q)]).unwrap();
    let c = PFun::from_blocks(&Mat::zeros(q, 2, 2), &[Scalar::one(q), Scalar::zero(q)]).unwrap();
    assert!(!same_orbit(&a, &b).unwrap());
    assert!(!same_orbit(&a, &c).unwrap());
    assert_eq!(classify(&a).depth, 1);
    assert_eq!(classify(&c).depth, 2);
    assert!(same_orbit(&a, &PFun::zero(q, 4)).is_err());
}

fn all_functionals(n: usize, p: u64) -> impl Iterator<Item = PFun> {
    let field = Field::fp(p).unwrap();
    let count = p.pow((n * (n - 1)) as u32);
    (0..count).map(move |mut idx| {
        let xi = Mat::from_fn(field, n, n, |_, j| {
            if j == n - 1 {
                return Scalar::zero(field);
            }
            let d = idx % p;
            idx /= p;
            Scalar::from_int(field, d as i64)
        });
        PFun::new(xi).unwrap()
    })
}

#[test]
fn krylov_test_detects_the_open_orbit_exhaustively() {
    for p in [2, 3] {
        for n in 1..=4 {
            let mut open = 0u64;
            for f in all_functionals(n, p) {
                let is_open = depth(&f) == n;
                assert_eq!(observability_depth(&f) == Some(n), is_open, "{}", f.xi());
                open += is_open as u64;
            }
            // the open orbit is a single P_n(F_p)-orbit with trivial stabilizer
            let p_order: u64 = (0..n - 1).map(|i| p.pow((n - 1) as u32) - p.pow(i as u32)).product::<u64>()
                * p.pow((n - 1) as u32);
            assert_eq!(open, p_order, "p={p} n={n}");
        }
    }
}

#[test]
fn stabilizer_prediction_holds_exhaustively() {
    for (p, n) in [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)] {
        for f in all_functionals(n, p) {
            assert_eq!(f.stabilizer_dim(), predicted_stabilizer_dim(&classify(&f)), "{}", f.xi());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn invariance_over_shrinkable_seeds(seed in any::<u64>(), n in 1usize..=5, which in 0usize..5) {
        let field = fields()[which];
        let mut s = Sampler::new(field, seed);
        let f = sample(&mut s, n);
        let g = s.p_element(n);
        let moved = coadjoint_p(&g, &f).unwrap();
        prop_assert_eq!(classify(&f), classify(&moved));
        prop_assert_eq!(f.stabilizer_dim(), predicted_stabilizer_dim(&classify(&f)));
    }
}

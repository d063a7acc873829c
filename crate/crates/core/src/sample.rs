//! Seeded random generation of exact field elements, matrices, and group
//! elements for property sweeps.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{Field, Scalar};
use crate::liecore::{GroupElt, PFun};
use crate::matrixkit::Mat;

pub struct Sampler {
    rng: ChaCha8Rng,
    field: Field,
}

impl Sampler {
    pub fn new(field: Field, seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            field,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn small_ratio(&mut self) -> BigRational {
        let num: i64 = self.rng.gen_range(-4..=4);
        let den: i64 = self.rng.gen_range(1..=3);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// Small-height element: numerators in [-4, 4], denominators in [1, 3];
    /// uniform for prime fields.
    pub fn scalar(&mut self) -> Scalar {
        match self.field {
            Field::Rat => Scalar::from_ratio(self.small_ratio()),
            Field::Gauss => {
                let re = self.small_ratio();
                let im = self.small_ratio();
                Scalar::gauss(re, im)
            }
            Field::Fp(p) => Scalar::fp(self.rng.gen_range(0..p.get()) as i64, p),
        }
    }

    /// An integer-valued element in `[-bound, bound]` (reduced for prime fields).
    pub fn small_int(&mut self, bound: i64) -> Scalar {
        Scalar::from_int(self.field, self.rng.gen_range(-bound..=bound))
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// `k` pairwise-distinct scalars.
    pub fn distinct_scalars(&mut self, k: usize) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = Vec::with_capacity(k);
        while out.len() < k {
            let s = self.scalar();
            if !out.contains(&s) {
                out.push(s);
            }
        }
        out
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Mat {
        let field = self.field;
        Mat::from_fn(field, rows, cols, |_, _| self.scalar())
    }

    pub fn invertible(&mut self, n: usize) -> GroupElt {
        loop {
            if let Ok(g) = GroupElt::new(self.matrix(n, n)) {
                return g;
            }
        }
    }

    /// Uniformly structured element of `P_n`: invertible Levi block, random
    /// translation column, last row `(0, …, 0, 1)`.
    pub fn p_element(&mut self, n: usize) -> GroupElt {
        let levi = self.invertible(n - 1);
        let beta: Vec<Scalar> = (0..n - 1).map(|_| self.scalar()).collect();
        let field = self.field;
        let g = Mat::from_fn(field, n, n, |i, j| match (i == n - 1, j == n - 1) {
            (true, true) => Scalar::one(field),
            (true, false) => Scalar::zero(field),
            (false, true) => beta[i].clone(),
            (false, false) => levi.matrix()[(i, j)].clone(),
        });
        GroupElt::in_p(g).expect("constructed in P_n")
    }

    pub fn pfun(&mut self, n: usize) -> PFun {
        let levi = self.matrix(n - 1, n - 1);
        let alpha: Vec<Scalar> = (0..n - 1).map(|_| self.scalar()).collect();
        PFun::from_blocks(&levi, &alpha).expect("shapes agree")
    }

    /// A random element of `p_n` (last row zero).
    pub fn lie_p_element(&mut self, n: usize) -> Mat {
        let field = self.field;
        Mat::from_fn(field, n, n, |i, _| {
            if i == n - 1 {
                Scalar::zero(field)
            } else {
                self.scalar()
            }
        })
    }

    /// A `PFun` biased toward degenerate data: each entry is zero with
    /// probability one half, so small depths show up often.
    pub fn sparse_pfun(&mut self, n: usize) -> PFun {
        let field = self.field;
        let levi = Mat::from_fn(field, n - 1, n - 1, |_, _| {
            if self.rng.gen_bool(0.5) {
                Scalar::zero(field)
            } else {
                self.scalar()
            }
        });
        let alpha: Vec<Scalar> = (0..n - 1)
            .map(|_| {
                if self.rng.gen_bool(0.5) {
                    Scalar::zero(field)
                } else {
                    self.scalar()
                }
            })
            .collect();
        PFun::from_blocks(&levi, &alpha).expect("shapes agree")
    }

    pub fn gen_bool(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }
}

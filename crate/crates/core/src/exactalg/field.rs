use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const MAX_PRIME: u64 = 1 << 31;

/// A prime modulus, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Least generator of the multiplicative group of F_p.
    pub fn primitive_root(self) -> u64 {
        let p = self.0;
        if p == 2 {
            return 1;
        }
        let order = p - 1;
        let factors = prime_factors(order);
        (2..p)
            .find(|&g| factors.iter().all(|&q| pow_mod(g, order / q, p) != 1))
            .expect("every prime field has a primitive root")
    }

    /// Least square root of -1 in F_p, when one exists.
    pub fn sqrt_minus_one(self) -> Option<u64> {
        let p = self.0;
        (0..p).find(|&x| (x * x + 1) % p == 0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// The field a scalar lives in.
///
/// `Rat` stands in for the reals and `Gauss` (the Gaussian rationals) for the
/// complex numbers; prime fields are used by the brute-force oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rat,
    Gauss,
    Fp(Prime),
}

impl Field {
    pub fn fp(p: u64) -> Result<Self> {
        Prime::new(p).map(Field::Fp)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rat | Field::Gauss => 0,
            Field::Fp(p) => p.get(),
        }
    }

    pub fn ensure_same(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self,
                right: other,
            })
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rat => f.write_str("rat"),
            Field::Gauss => f.write_str("gauss"),
            Field::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rat" => Ok(Field::Rat),
            "gauss" => Ok(Field::Gauss),
            other => {
                let p = other
                    .strip_prefix("fp:")
                    .ok_or_else(|| Error::Parse(format!("unknown field `{other}`")))?;
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime in `{other}`")))?;
                Field::fp(p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_validated() {
        assert!(Prime::new(7).is_ok());
        assert_eq!(Prime::new(9), Err(Error::NotPrime(9)));
        assert_eq!(Prime::new(1), Err(Error::NotPrime(1)));
        assert!(Prime::new((1 << 31) - 1).is_ok());
        assert!(Prime::new((1 << 32) + 15).is_err());
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(Prime::new(2).unwrap().primitive_root(), 1);
        assert_eq!(Prime::new(3).unwrap().primitive_root(), 2);
        assert_eq!(Prime::new(7).unwrap().primitive_root(), 3);
        assert_eq!(Prime::new(5).unwrap().sqrt_minus_one(), Some(2));
        assert_eq!(Prime::new(7).unwrap().sqrt_minus_one(), None);
    }

    #[test]
    fn field_tags_round_trip() {
        for tag in ["rat", "gauss", "fp:5"] {
            assert_eq!(tag.parse::<Field>().unwrap().to_string(), tag);
        }
        assert!("fp:6".parse::<Field>().is_err());
        assert!("real".parse::<Field>().is_err());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// Univariate polynomial over a [`Field`], coefficients lowest degree first.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero(field: Field) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(Scalar::one(field))
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Poly::from_vec(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: Field) -> Self {
        Poly::from_vec(field, vec![Scalar::zero(field), Scalar::one(field)])
    }

    /// `x - root`.
    pub fn linear(root: &Scalar) -> Self {
        let field = root.field();
        Poly::from_vec(field, vec![-root, Scalar::one(field)])
    }

    pub fn from_coeffs(field: Field, coeffs: Vec<Scalar>) -> Result<Self> {
        for c in &coeffs {
            field.ensure_same(c.field())?;
        }
        Ok(Self::from_vec(field, coeffs))
    }

    pub fn from_ints(field: Field, coeffs: &[i64]) -> Self {
        Self::from_vec(
            field,
            coeffs.iter().map(|&c| Scalar::from_int(field, c)).collect(),
        )
    }

    pub(crate) fn from_vec(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Scalar::is_one)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_vec(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn checked_add(&self, rhs: &Poly) -> Result<Poly> {
        self.field.ensure_same(rhs.field)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Ok(Poly::from_vec(
            self.field,
            (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect(),
        ))
    }

    pub fn checked_sub(&self, rhs: &Poly) -> Result<Poly> {
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &Poly) -> Result<Poly> {
        self.field.ensure_same(rhs.field)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Poly::zero(self.field));
        }
        let mut out = vec![Scalar::zero(self.field); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Poly::from_vec(self.field, out))
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.field.ensure_same(divisor.field)?;
        let dlead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dlead_inv = dlead.inv()?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut quot = vec![Scalar::zero(self.field); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] * &dlead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        Ok((Poly::from_vec(self.field, quot), Poly::from_vec(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// True when `divisor` divides `self` exactly; zero divides only zero.
    pub fn divisible_by(&self, divisor: &Poly) -> Result<bool> {
        if divisor.is_zero() {
            self.field.ensure_same(divisor.field)?;
            return Ok(self.is_zero());
        }
        Ok(self.rem(divisor)?.is_zero())
    }

    pub fn derivative(&self) -> Poly {
        Poly::from_vec(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Scalar::from_int(self.field, i as i64))
                .collect(),
        )
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.field.ensure_same(other.field)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Squarefree test: `gcd(f, f')` is constant.
    ///
    /// In characteristic p a vanishing derivative means `f(x) = g(x^p) = g(x)^p`
    /// (coefficients are fixed by Frobenius over F_p), which is squarefree only
    /// when constant.
    pub fn is_squarefree(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(true);
        }
        let d = self.derivative();
        if d.is_zero() {
            debug_assert!(self.field.characteristic() > 0);
            return Ok(false);
        }
        Ok(self.gcd(&d)?.is_constant())
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(self.field), |acc, c| &(&acc * x) + c)
    }

    /// Product of `x - r` over the given roots.
    pub fn from_roots(field: Field, roots: &[Scalar]) -> Poly {
        roots
            .iter()
            .fold(Poly::one(field), |acc, r| &acc * &Poly::linear(r))
    }

    /// Maps every coefficient through `f`, which must land in `field`.
    pub fn map_coeffs(&self, field: Field, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        Poly::from_vec(field, self.coeffs.iter().map(f).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_vec(self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

/// Renders as e.g. `x^2-3x+2`, `(1+i)x-2i`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mut term = String::new();
            if deg == 0 {
                term.push_str(&c.to_string());
            } else {
                if c.is_one() {
                } else if (-c).is_one() && c.field().characteristic() == 0 {
                    term.push('-');
                } else if c.is_compound() {
                    term.push_str(&format!("({c})"));
                } else {
                    term.push_str(&c.to_string());
                }
                term.push('x');
                if deg > 1 {
                    term.push_str(&format!("^{deg}"));
                }
            }
            if !first && !term.starts_with('-') {
                f.write_str("+")?;
            }
            f.write_str(&term)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Poly {
        Poly::from_ints(Field::Rat, c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 1])).unwrap(), q(&[-1, 1]));
        assert_eq!(q(&[0, 0, 1]).gcd(&q(&[0, 1])).unwrap(), q(&[0, 1]));
        let f5 = Field::fp(5).unwrap();
        let g = Poly::from_ints(f5, &[1, 0, 1])
            .gcd(&Poly::from_ints(f5, &[2, 1]))
            .unwrap();
        assert_eq!(g, Poly::from_ints(f5, &[2, 1]));
        assert!(q(&[1]).gcd(&Poly::x(Field::Gauss)).is_err());
    }

    #[test]
    fn squarefree_examples() {
        assert!(q(&[2, -3, 1]).is_squarefree().unwrap());
        assert!(!q(&[0, 0, 1]).is_squarefree().unwrap());
        // (x-1)^2 (x-2) = x^3 - 4x^2 + 5x - 2
        assert!(!q(&[-2, 5, -4, 1]).is_squarefree().unwrap());
        assert_eq!(Poly::zero(Field::Rat).is_squarefree(), Err(Error::ZeroPolynomial));
        // x^3 - 1 = (x-1)^3 over F_3 has vanishing derivative
        let f3 = Field::fp(3).unwrap();
        assert!(!Poly::from_ints(f3, &[-1, 0, 0, 1]).is_squarefree().unwrap());
        assert!(Poly::from_ints(f3, &[1, 0, 1]).is_squarefree().unwrap());
    }

    #[test]
    fn division() {
        let (qt, r) = q(&[-1, 0, 0, 1]).div_rem(&q(&[-1, 1])).unwrap();
        assert_eq!(qt, q(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(q(&[1]).div_rem(&Poly::zero(Field::Rat)), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(q(&[2, -3, 1]).to_string(), "x^2-3x+2");
        assert_eq!(q(&[0, -1]).to_string(), "-x");
        assert_eq!(q(&[-2, 0, 1]).to_string(), "x^2-2");
        assert_eq!(q(&[1]).to_string(), "1");
        assert_eq!(Poly::zero(Field::Rat).to_string(), "0");
        let g = Poly::from_coeffs(
            Field::Gauss,
            vec![Scalar::gauss_int(0, -2), Scalar::gauss_int(1, 1), Scalar::one(Field::Gauss)],
        )
        .unwrap();
        assert_eq!(g.to_string(), "x^2+(1+i)x-2i");
        let f5 = Field::fp(5).unwrap();
        assert_eq!(Poly::from_ints(f5, &[-1, -1, 1]).to_string(), "x^2+4x+4");
        let half = Poly::from_coeffs(
            Field::Rat,
            vec![Scalar::rat(-1, 2).unwrap(), Scalar::one(Field::Rat)],
        )
        .unwrap();
        assert_eq!(half.to_string(), "x-1/2");
    }

    #[test]
    fn roots_and_eval() {
        let roots = [Scalar::from_int(Field::Rat, 1), Scalar::from_int(Field::Rat, 2)];
        let p = Poly::from_roots(Field::Rat, &roots);
        assert_eq!(p, q(&[2, -3, 1]));
        assert!(p.eval(&roots[1]).is_zero());
    }
}

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{pow_mod, Field, Prime};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Gauss { re: BigRational, im: BigRational },
    Fp { value: u64, p: Prime },
}

/// An exact element of one of the supported fields.
///
/// Values are always kept in canonical form (reduced fractions with positive
/// denominators, residues in `[0, p)`), so structural equality is field
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn zero(field: Field) -> Self {
        Self::from_int(field, 0)
    }

    pub fn one(field: Field) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: Field, v: i64) -> Self {
        match field {
            Field::Rat => Scalar(Repr::Rat(BigRational::from_integer(v.into()))),
            Field::Gauss => Scalar(Repr::Gauss {
                re: BigRational::from_integer(v.into()),
                im: BigRational::zero(),
            }),
            Field::Fp(p) => Self::fp(v, p),
        }
    }

    pub fn rat(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar(Repr::Rat(BigRational::new(num.into(), den.into()))))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Scalar(Repr::Rat(r))
    }

    pub fn gauss(re: BigRational, im: BigRational) -> Self {
        Scalar(Repr::Gauss { re, im })
    }

    /// Gaussian rational with integer parts.
    pub fn gauss_int(re: i64, im: i64) -> Self {
        Self::gauss(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    pub fn fp(v: i64, p: Prime) -> Self {
        let m = p.get() as i64;
        Scalar(Repr::Fp {
            value: v.rem_euclid(m) as u64,
            p,
        })
    }

    pub fn field(&self) -> Field {
        match &self.0 {
            Repr::Rat(_) => Field::Rat,
            Repr::Gauss { .. } => Field::Gauss,
            Repr::Fp { p, .. } => Field::Fp(*p),
        }
    }

    pub fn as_rat(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn gauss_parts(&self) -> Option<(&BigRational, &BigRational)> {
        match &self.0 {
            Repr::Gauss { re, im } => Some((re, im)),
            _ => None,
        }
    }

    pub fn fp_value(&self) -> Option<u64> {
        match &self.0 {
            Repr::Fp { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_zero(),
            Repr::Gauss { re, im } => re.is_zero() && im.is_zero(),
            Repr::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(r) => r.is_one(),
            Repr::Gauss { re, im } => re.is_one() && im.is_zero(),
            Repr::Fp { value, .. } => *value == 1,
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (Repr::Gauss { re: a, im: b }, Repr::Gauss { re: c, im: d }) => {
                Scalar::gauss(a + c, b + d)
            }
            (Repr::Fp { value: a, p }, Repr::Fp { value: b, p: q }) if p == q => {
                Scalar(Repr::Fp {
                    value: (a + b) % p.get(),
                    p: *p,
                })
            }
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.checked_add(&rhs.neg_ref())
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (Repr::Gauss { re: a, im: b }, Repr::Gauss { re: c, im: d }) => {
                Scalar::gauss(a * c - b * d, a * d + b * c)
            }
            (Repr::Fp { value: a, p }, Repr::Fp { value: b, p: q }) if p == q => {
                Scalar(Repr::Fp {
                    value: a * b % p.get(),
                    p: *p,
                })
            }
            _ => return Err(self.mismatch(rhs)),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        self.field().ensure_same(rhs.field())?;
        self.checked_mul(&rhs.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(r.recip())),
            Repr::Gauss { re, im } => {
                let norm = re * re + im * im;
                Scalar::gauss(re / &norm, -(im / &norm))
            }
            Repr::Fp { value, p } => Scalar(Repr::Fp {
                value: pow_mod(*value, p.get() - 2, p.get()),
                p: *p,
            }),
        })
    }

    fn neg_ref(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => Scalar(Repr::Rat(-r)),
            Repr::Gauss { re, im } => Scalar::gauss(-re, -im),
            Repr::Fp { value, p } => Scalar(Repr::Fp {
                value: (p.get() - value) % p.get(),
                p: *p,
            }),
        }
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn mismatch(&self, rhs: &Scalar) -> Error {
        Error::FieldMismatch {
            left: self.field(),
            right: rhs.field(),
        }
    }

    /// Embeds a rational into the Gaussian rationals; other values are returned unchanged.
    pub fn complexify(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(r) => Scalar::gauss(r.clone(), BigRational::zero()),
            _ => self.clone(),
        }
    }

    /// Reduction modulo `p`.
    ///
    /// Gaussian rationals with nonzero imaginary part map `i` to the least
    /// square root of -1 in F_p, so they only reduce when p = 2 or p ≡ 1 mod 4.
    /// Returns `None` if a denominator vanishes mod p.
    pub fn reduce_mod(&self, p: Prime) -> Option<Scalar> {
        let reduce_ratio = |r: &BigRational| -> Option<Scalar> {
            let m = BigInt::from(p.get());
            let num = r.numer().mod_floor(&m).to_i64()?;
            let den = r.denom().mod_floor(&m).to_i64()?;
            if den == 0 {
                return None;
            }
            Scalar::fp(num, p).checked_div(&Scalar::fp(den, p)).ok()
        };
        match &self.0 {
            Repr::Rat(r) => reduce_ratio(r),
            Repr::Gauss { re, im } => {
                let re = reduce_ratio(re)?;
                if im.is_zero() {
                    return Some(re);
                }
                let i = Scalar::fp(p.sqrt_minus_one()? as i64, p);
                Some(&re + &(&reduce_ratio(im)? * &i))
            }
            Repr::Fp { p: q, .. } if *q == p => Some(self.clone()),
            Repr::Fp { .. } => None,
        }
    }

    /// Parses the text syntax of `field`: `a/b` for rationals, `a/b+c/d i`
    /// (either part optional) for Gaussian rationals, a decimal residue for F_p.
    pub fn parse(s: &str, field: Field) -> Result<Scalar> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        match field {
            Field::Rat => parse_ratio(&compact).map(Scalar::from_ratio),
            Field::Gauss => parse_gauss(&compact),
            Field::Fp(p) => {
                let v: BigInt = compact
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad residue `{s}`")))?;
                let r = v.mod_floor(&BigInt::from(p.get())).to_i64().unwrap();
                Ok(Scalar::fp(r, p))
            }
        }
    }

    /// True when the text form would need parentheses as a polynomial coefficient.
    pub(crate) fn is_compound(&self) -> bool {
        matches!(&self.0, Repr::Gauss { re, im } if !re.is_zero() && !im.is_zero())
    }
}

fn parse_ratio(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

fn parse_gauss(s: &str) -> Result<Scalar> {
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Scalar::gauss(parse_ratio(s)?, BigRational::zero()));
    };
    // split off the imaginary coefficient at the last sign that is not leading
    let split = body
        .char_indices()
        .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (parse_ratio(&body[..i])?, &body[i..]),
        None => (BigRational::zero(), body),
    };
    let im = match im {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        other => parse_ratio(other.strip_prefix('+').unwrap_or(other))?,
    };
    Ok(Scalar::gauss(re, im))
}

fn fmt_imag(f: &mut fmt::Formatter<'_>, im: &BigRational) -> fmt::Result {
    if im.is_one() {
        f.write_str("i")
    } else if (-im).is_one() {
        f.write_str("-i")
    } else {
        write!(f, "{im}i")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(r) => write!(f, "{r}"),
            Repr::Gauss { re, im } => {
                if im.is_zero() {
                    write!(f, "{re}")
                } else if re.is_zero() {
                    fmt_imag(f, im)
                } else {
                    write!(f, "{re}")?;
                    if im.is_positive() {
                        f.write_str("+")?;
                    }
                    fmt_imag(f, im)
                }
            }
            Repr::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

// Operator forms panic on a field mismatch; the checked_* methods report it.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

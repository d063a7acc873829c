use super::Mat;
use crate::error::Result;
use crate::exactalg::{Field, Poly, Scalar};

/// Characteristic polynomial `det(xI − m)`, monic of degree `n`.
///
/// Prime fields use the division-free Berkowitz recursion; the rationals and
/// Gaussian rationals reduce to Hessenberg form first.
pub fn char_poly(m: &Mat) -> Result<Poly> {
    m.ensure_square()?;
    Ok(match m.field() {
        Field::Fp(_) => berkowitz(m),
        Field::Rat | Field::Gauss => hessenberg(m),
    })
}

/// Berkowitz: grows the leading principal submatrix one row at a time,
/// multiplying by a lower-triangular Toeplitz matrix at each step.
pub fn berkowitz(m: &Mat) -> Poly {
    let n = m.rows();
    let field = m.field();
    let zero = Scalar::zero(field);
    // coefficients, highest degree first
    let mut v = vec![Scalar::one(field)];
    for r in 0..n {
        // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C
        let mut t = Vec::with_capacity(r + 2);
        t.push(Scalar::one(field));
        t.push(-&m[(r, r)]);
        let mut mc: Vec<Scalar> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for _ in 0..r {
            let rc = (0..r).fold(zero.clone(), |acc, j| &acc + &(&m[(r, j)] * &mc[j]));
            t.push(-rc);
            mc = (0..r)
                .map(|i| (0..r).fold(zero.clone(), |acc, j| &acc + &(&m[(i, j)] * &mc[j])))
                .collect();
        }
        let next: Vec<Scalar> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(zero.clone(), |acc, j| &acc + &(&t[i - j] * &v[j]))
            })
            .collect();
        v = next;
    }
    v.reverse();
    Poly::from_vec(field, v)
}

/// Hessenberg reduction by elimination similarities, then the standard
/// three-term recurrence on the leading principal minors.
pub fn hessenberg(m: &Mat) -> Poly {
    let n = m.rows();
    let field = m.field();
    let mut h = m.clone();
    for c in 1..n.saturating_sub(1) {
        let Some(i) = (c..n).find(|&i| !h[(i, c - 1)].is_zero()) else {
            continue;
        };
        if i != c {
            h.swap_rows(i, c);
            h.swap_cols(i, c);
        }
        let inv = h[(c, c - 1)].inv().expect("pivot is nonzero");
        for j in c + 1..n {
            if h[(j, c - 1)].is_zero() {
                continue;
            }
            let u = &h[(j, c - 1)] * &inv;
            for k in 0..n {
                let v = &h[(j, k)] - &(&u * &h[(c, k)]);
                h.set(j, k, v);
            }
            for k in 0..n {
                let v = &h[(k, c)] + &(&u * &h[(k, j)]);
                h.set(k, c, v);
            }
        }
    }
    let x = Poly::x(field);
    let mut p: Vec<Poly> = vec![Poly::one(field)];
    for k in 0..n {
        let mut next = &(&x - &Poly::constant(h[(k, k)].clone())) * &p[k];
        let mut prod = Scalar::one(field);
        for i in (0..k).rev() {
            prod = &prod * &h[(i + 1, i)];
            let coeff = &prod * &h[(i, k)];
            if !coeff.is_zero() {
                next = &next - &p[i].scale(&coeff);
            }
        }
        p.push(next);
    }
    p.pop().unwrap()
}

//! Dense integer polynomials and gcds over `Z[t]` and `Z[t][q]`.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no
//! trailing zeros. GCDs use the primitive PRS, which keeps coefficient
//! growth modest for the small degrees met in this crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type UPoly = Vec<BigInt>;
/// Polynomial in `q` whose coefficients are polynomials in `t`.
pub type BPoly = Vec<UPoly>;

pub fn u_trim(mut a: UPoly) -> UPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn u_add(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x + y);
    }
    u_trim(out)
}

fn u_sub(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(out)
}

pub fn u_mul(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(out)
}

fn u_scale(a: &[BigInt], c: &BigInt) -> UPoly {
    u_trim(a.iter().map(|x| x * c).collect())
}

pub fn u_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Exact division `a / b`; `None` if `b` does not divide `a` in `Z[t]`.
pub fn u_divexact(a: &[BigInt], b: &[BigInt]) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut r: UPoly = a.to_vec();
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qq, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &qq * bj;
        }
        q[k] = qq;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(u_trim(q))
    } else {
        None
    }
}

fn u_prem(a: &[BigInt], b: &[BigInt]) -> UPoly {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        r = r.iter().map(|c| c * &lb).collect();
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        r = u_trim(r);
    }
    r
}

fn u_primitive(a: &[BigInt]) -> UPoly {
    let c = u_content(a);
    if c.is_zero() {
        return Vec::new();
    }
    let mut out: UPoly = a.iter().map(|x| x / &c).collect();
    if out.last().is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    out
}

/// GCD in `Z[t]`, normalized with positive leading coefficient.
pub fn u_gcd(a: &[BigInt], b: &[BigInt]) -> UPoly {
    if a.is_empty() {
        return u_primitive_keep_content(b);
    }
    if b.is_empty() {
        return u_primitive_keep_content(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    u_scale(&u_primitive(&x), &c)
}

fn u_primitive_keep_content(a: &[BigInt]) -> UPoly {
    let mut out = a.to_vec();
    if out.last().is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    out
}

pub fn b_trim(mut a: BPoly) -> BPoly {
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
    a
}

fn b_content(a: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_content(a: &BPoly, c: &[BigInt]) -> BPoly {
    a.iter().map(|x| u_divexact(x, c).expect("content divides")).collect()
}

fn b_primitive(a: &BPoly) -> BPoly {
    let c = b_content(a);
    if c.is_empty() {
        return Vec::new();
    }
    let mut out = b_div_content(a, &c);
    if let Some(lc) = out.last() {
        if lc.last().is_some_and(|x| x.is_negative()) {
            out = out.iter().map(|u| u.iter().map(|x| -x).collect()).collect();
        }
    }
    out
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let lr = r.last().unwrap().clone();
        r = r.iter().map(|c| u_mul(c, &lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            let t = u_mul(&lr, bj);
            r[shift + j] = u_sub(&r[shift + j], &t);
        }
        r = b_trim(r);
    }
    r
}

/// GCD in `Z[q, t]` (as `Z[t][q]`), sign normalized so that the leading
/// `t`-coefficient of the leading `q`-coefficient is positive.
pub fn b_gcd(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() {
        return b_primitive_sign(b);
    }
    if b.is_empty() {
        return b_primitive_sign(a);
    }
    let c = u_gcd(&b_content(a), &b_content(b));
    let (mut x, mut y) = (b_primitive(a), b_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // y is a nonzero element of Z[t] and primitive in q: gcd of
            // primitive parts is 1.
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = b_prem(&x, &y);
        x = y;
        y = b_primitive(&r);
    }
    let g = b_primitive(&x);
    g.iter().map(|u| u_mul(u, &c)).collect()
}

fn b_primitive_sign(a: &BPoly) -> BPoly {
    let mut out = a.clone();
    if let Some(lc) = out.last() {
        if lc.last().is_some_and(|x| x.is_negative()) {
            out = out.iter().map(|u| u.iter().map(|x| -x).collect()).collect();
        }
    }
    out
}

/// Exact division in `Z[t][q]`; panics if `b` does not divide `a`.
pub fn b_divexact(a: &BPoly, b: &BPoly) -> BPoly {
    assert!(!b.is_empty(), "division by zero polynomial");
    if a.is_empty() {
        return Vec::new();
    }
    assert!(a.len() >= b.len(), "non-exact division");
    let mut r = a.clone();
    let lb = b.last().unwrap();
    let mut q: BPoly = vec![Vec::new(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = r[k + b.len() - 1].clone();
        if top.is_empty() {
            continue;
        }
        let qq = u_divexact(&top, lb).expect("non-exact division");
        for (j, bj) in b.iter().enumerate() {
            let t = u_mul(&qq, bj);
            r[k + j] = u_sub(&r[k + j], &t);
        }
        q[k] = qq;
    }
    assert!(r.iter().all(|c| c.is_empty()), "non-exact division");
    b_trim(q)
}

#[allow(dead_code)]
pub(crate) fn b_mul(a: &BPoly, b: &BPoly) -> BPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out: BPoly = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = u_mul(x, y);
            out[i + j] = u_add(&out[i + j], &t);
        }
    }
    b_trim(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[i64]) -> UPoly {
        u_trim(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn univariate_gcd() {
        // (t-1)(t+2) and (t-1)(t-3)
        let a = u_mul(&u(&[-1, 1]), &u(&[2, 1]));
        let b = u_mul(&u(&[-1, 1]), &u(&[-3, 1]));
        assert_eq!(u_gcd(&a, &b), u(&[-1, 1]));
        assert_eq!(u_gcd(&u(&[4, 6]), &u(&[6])), u(&[2]));
    }

    #[test]
    fn bivariate_gcd_and_division() {
        // (q - t)(q + 1) and (q - t)(q t + 2)
        let qmt: BPoly = vec![u(&[0, -1]), u(&[1])];
        let a = b_mul(&qmt, &vec![u(&[1]), u(&[1])]);
        let b = b_mul(&qmt, &vec![u(&[2]), u(&[0, 1])]);
        let g = b_gcd(&a, &b);
        assert_eq!(g, qmt);
        assert_eq!(b_divexact(&a, &g), vec![u(&[1]), u(&[1])]);
    }
}

use super::{rational_string, Field, Rational};
use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Element of `Q(e_h)`, `e_h` a primitive `h`-th root of unity, stored as
/// coefficients on `1, e, ..., e^(phi(h)-1)`.
///
/// Rationals are always stored with conductor 1, so they mix freely with
/// any conductor and equality stays structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycScalar {
    h: u32,
    c: Vec<Rational>,
}

fn cyclotomic(h: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&h) {
        return p.clone();
    }
    // x^h - 1 divided by Phi_d for every proper divisor d
    let mut p = vec![BigInt::from(0); h as usize + 1];
    p[0] = BigInt::from(-1);
    p[h as usize] = BigInt::from(1);
    for d in 1..h {
        if h.is_multiple_of(d) {
            p = super::zpoly::u_divexact(&p, &cyclotomic(d)).expect("cyclotomic divides");
        }
    }
    let p = Arc::new(p);
    cache.lock().unwrap().insert(h, p.clone());
    p
}

/// Euler phi, as the degree of the cyclotomic polynomial.
pub fn phi(h: u32) -> usize {
    cyclotomic(h).len() - 1
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn reduce(mut v: Vec<Rational>, h: u32) -> Vec<Rational> {
    let p = cyclotomic(h);
    let d = p.len() - 1;
    while v.len() > d {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let off = v.len() - d;
        for (j, pj) in p.iter().enumerate().take(d) {
            v[off + j] -= &top * Rational::from_integer(pj.clone());
        }
    }
    v
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lb = b.last().unwrap().clone();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
        r = trim(r);
    }
    (q, r)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                a.get(i).cloned().unwrap_or_else(Rational::zero) - b.get(i).cloned().unwrap_or_else(Rational::zero)
            })
            .collect(),
    )
}

impl CycScalar {
    fn make(h: u32, c: Vec<Rational>) -> Self {
        let c = trim(c);
        if c.len() <= 1 {
            let v = c.into_iter().next().unwrap_or_else(Rational::zero);
            return CycScalar { h: 1, c: vec![v] };
        }
        let mut c = c;
        c.resize(phi(h), Rational::zero());
        CycScalar { h, c }
    }

    /// `e_h^k`.
    pub fn root_power(h: u32, k: i64) -> Self {
        assert!(h >= 1);
        let e = k.rem_euclid(h as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self::make(h, reduce(v, h))
    }

    /// Build from coefficients on powers `e^0 .. e^(h-1)` (any length).
    pub fn from_powers(h: u32, coeffs: Vec<Rational>) -> Self {
        Self::make(h, reduce(coeffs, h))
    }

    pub fn conductor(&self) -> u32 {
        self.h
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }

    fn join(&self, o: &Self) -> u32 {
        match (self.h, o.h) {
            (1, h) | (h, 1) => h,
            (a, b) if a == b => a,
            (a, b) => panic!("mixed cyclotomic conductors {a} and {b}"),
        }
    }

    /// Galois conjugation `e -> e^-1`.
    pub fn conj(&self) -> Self {
        if self.h == 1 {
            return self.clone();
        }
        let h = self.h as usize;
        let mut v = vec![Rational::zero(); h];
        for (k, x) in self.c.iter().enumerate() {
            v[(h - k) % h] += x;
        }
        Self::make(self.h, reduce(v, self.h))
    }

    /// The inverse, by extended Euclid against the cyclotomic polynomial.
    pub fn cyc_invert(&self) -> crate::error::Result<Self> {
        self.inv().ok_or(crate::error::Error::ZeroInverse)
    }

    /// Multiplicative order if this is a root of unity of order dividing
    /// the conductor (or `1`, `-1`).
    pub fn root_order(&self) -> Option<u32> {
        let h = self.h.max(2);
        let mut x = self.clone();
        for k in 1..=2 * h {
            if x.is_one() {
                return Some(k);
            }
            x = x.mul_ref(self);
        }
        None
    }
}

impl Field for CycScalar {
    fn zero() -> Self {
        CycScalar { h: 1, c: vec![Rational::zero()] }
    }
    fn one() -> Self {
        CycScalar { h: 1, c: vec![Rational::one()] }
    }
    fn from_i64(v: i64) -> Self {
        CycScalar { h: 1, c: vec![Rational::from_integer(BigInt::from(v))] }
    }
    fn from_rational(r: &Rational) -> Self {
        CycScalar { h: 1, c: vec![r.clone()] }
    }
    fn is_zero(&self) -> bool {
        self.h == 1 && self.c[0].is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        let h = self.join(o);
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                self.c.get(i).cloned().unwrap_or_else(Rational::zero)
                    + o.c.get(i).cloned().unwrap_or_else(Rational::zero)
            })
            .collect();
        Self::make(h, v)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        let h = self.join(o);
        if self.h == 1 || o.h == 1 {
            let (s, v) = if self.h == 1 { (&self.c[0], o) } else { (&o.c[0], self) };
            return Self::make(h, v.c.iter().map(|x| x * s).collect());
        }
        Self::make(h, reduce(poly_mul(&self.c, &o.c), h))
    }
    fn neg_ref(&self) -> Self {
        CycScalar { h: self.h, c: self.c.iter().map(|x| -x).collect() }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.h == 1 {
            return Some(CycScalar { h: 1, c: vec![self.c[0].recip()] });
        }
        // s*a + u*p = g with g a nonzero constant
        let p: Vec<Rational> = cyclotomic(self.h).iter().map(|x| Rational::from_integer(x.clone())).collect();
        let (mut r0, mut r1) = (p, trim(self.c.clone()));
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let g = r1[0].clone();
        let inv: Vec<Rational> = s1.iter().map(|x| x / &g).collect();
        Some(Self::make(self.h, reduce(inv, self.h)))
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.h == 1 {
            return f.write_str(&rational_string(&self.c[0]));
        }
        let mut first = true;
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let neg = x.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = x.abs();
            let mono = match k {
                0 => String::new(),
                1 => format!("e{}", self.h),
                _ => format!("e{}^{}", self.h, k),
            };
            match (mono.is_empty(), a.is_one()) {
                (true, _) => f.write_str(&rational_string(&a))?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{}*{}", rational_string(&a), mono)?,
            }
        }
        Ok(())
    }
}

super::qt::impl_ops!(CycScalar);

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn cyclotomic_polys() {
        let as_i = |h| cyclotomic(h).iter().map(|x| i64::try_from(x).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i(1), vec![-1, 1]);
        assert_eq!(as_i(3), vec![1, 1, 1]);
        assert_eq!(as_i(4), vec![1, 0, 1]);
        assert_eq!(as_i(6), vec![1, -1, 1]);
        assert_eq!(phi(12), 4);
    }

    #[test]
    fn invert_examples() {
        let e = CycScalar::root_power(3, 1);
        let inv = e.cyc_invert().unwrap();
        assert_eq!(inv, CycScalar::from_powers(3, vec![r(-1, 1), r(-1, 1)]));
        let one_minus = CycScalar::one() - e.clone();
        let inv = one_minus.cyc_invert().unwrap();
        assert_eq!(inv, CycScalar::from_powers(3, vec![r(2, 3), r(1, 3)]));
        assert_eq!(inv.to_string(), "2/3 + 1/3*e3");
        // (1 - e)(2 + e) = 3
        let two_plus = CycScalar::from_i64(2) + e;
        assert_eq!(one_minus * two_plus, CycScalar::from_i64(3));
        assert_eq!(CycScalar::one().cyc_invert().unwrap(), CycScalar::one());
        assert!(CycScalar::zero().cyc_invert().is_err());
    }

    #[test]
    fn conjugation_and_orders() {
        let e = CycScalar::root_power(5, 1);
        assert_eq!(e.conj() * e.clone(), CycScalar::one());
        assert_eq!(e.root_order(), Some(5));
        assert_eq!(CycScalar::root_power(6, 3), CycScalar::from_i64(-1));
    }
}

use super::{CycScalar, Field, QTScalar, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

/// A point of the curve `q^k = t^m` at roots of unity: `q -> u^m`,
/// `t -> u^k` with `u = e_h` and `tau = u^m` of order `l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecMap {
    pub l: u32,
    pub k: i64,
    pub m: i64,
    /// Bezout pair: `a*k + b*m = 1`.
    pub a: i64,
    pub b: i64,
    pub h: u32,
    /// `l` odd (the usual standing assumption); not enforced.
    pub odd_l: bool,
    /// `l` a prime power; recorded only.
    pub prime_power_l: bool,
}

fn is_prime_power(l: u32) -> bool {
    if l < 2 {
        return false;
    }
    let mut p = 2;
    while !l.is_multiple_of(p) {
        p += 1;
    }
    let mut x = l;
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

impl SpecMap {
    pub fn new(l: u32, k: i64, m: i64) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidSpecialization("l must be positive".into()));
        }
        let eg = k.extended_gcd(&m);
        if eg.gcd != 1 {
            return Err(Error::InvalidSpecialization(format!("gcd({k}, {m}) != 1")));
        }
        let (a, b) = (eg.x, eg.y);
        debug_assert_eq!(a * k + b * m, 1);
        let h = if m == 0 {
            if l != 1 {
                return Err(Error::InvalidSpecialization("m = 0 forces tau = 1".into()));
            }
            1
        } else {
            let mm = m.unsigned_abs();
            (1..=mm).map(|j| l as u64 * j).find(|&h| h / h.gcd(&mm) == l as u64).expect("h = l*|m| always works") as u32
        };
        Ok(SpecMap { l, k, m, a, b, h, odd_l: l % 2 == 1, prime_power_l: is_prime_power(l) })
    }

    pub fn u(&self) -> CycScalar {
        CycScalar::root_power(self.h, 1)
    }

    /// Image of `q`.
    pub fn tau(&self) -> CycScalar {
        CycScalar::root_power(self.h, self.m)
    }

    /// Image of `t`.
    pub fn zeta(&self) -> CycScalar {
        CycScalar::root_power(self.h, self.k)
    }

    fn eval(&self, p: &super::Poly2) -> CycScalar {
        let h = self.h as i64;
        let mut acc = vec![BigInt::zero(); self.h as usize];
        for ((a, b), c) in p.terms() {
            let e = (*a as i64 * self.m + *b as i64 * self.k).rem_euclid(h);
            acc[e as usize] += c;
        }
        CycScalar::from_powers(self.h, acc.into_iter().map(Rational::from_integer).collect())
    }

    pub fn specialize(&self, x: &QTScalar) -> Result<CycScalar> {
        let d = self.eval(x.denom());
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.eval(x.numer()).mul_ref(&d.inv().unwrap()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let s = SpecMap::new(3, 0, 1).unwrap();
        assert_eq!(s.h, 3);
        let e = CycScalar::root_power(3, 1);
        assert_eq!(s.specialize(&QTScalar::q()).unwrap(), e);
        assert_eq!(s.specialize(&QTScalar::monomial(1, 3, 0)).unwrap(), CycScalar::one());
        let x = QTScalar::one().div_ref(&(QTScalar::one() - QTScalar::q())).unwrap();
        assert_eq!(s.specialize(&x).unwrap().to_string(), "2/3 + 1/3*e3");
        let y = QTScalar::one().div_ref(&(QTScalar::one() - QTScalar::monomial(1, 3, 0))).unwrap();
        assert_eq!(s.specialize(&y), Err(Error::DenominatorVanishes));
    }

    #[test]
    fn conductor_and_curve() {
        for (l, k, m) in [(3, 1, 1), (5, 1, 2), (3, 1, 3), (5, -2, 3), (7, 3, -2)] {
            let s = SpecMap::new(l, k, m).unwrap();
            assert_eq!(s.tau().root_order(), Some(l), "{l} {k} {m}");
            assert_eq!(s.tau().pow_i(k).unwrap(), s.zeta().pow_i(m).unwrap());
            assert_eq!(s.a * k + s.b * m, 1);
        }
        assert_eq!(SpecMap::new(3, 1, 3).unwrap().h, 9);
        assert!(SpecMap::new(3, 2, 4).is_err());
        assert!(SpecMap::new(9, 1, 1).unwrap().prime_power_l);
        assert!(!SpecMap::new(15, 1, 1).unwrap().prime_power_l);
    }
}

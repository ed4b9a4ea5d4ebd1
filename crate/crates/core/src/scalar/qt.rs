use super::poly2::Poly2;
use super::{Field, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use std::fmt;
use std::str::FromStr;

/// Element of `Q(q, t)` as a reduced fraction of integer Laurent polynomials.
///
/// Canonical form: the denominator is a polynomial not divisible by `q` or
/// `t`, coprime to the numerator, with positive leading coefficient in
/// degree-lex order (`q` before `t`). Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QTScalar {
    num: Poly2,
    den: Poly2,
}

impl QTScalar {
    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: i64, a: i32, b: i32) -> Self {
        QTScalar { num: Poly2::monomial(c, a, b), den: Poly2::constant(1) }
    }

    pub fn from_poly(p: Poly2) -> Self {
        QTScalar { num: p, den: Poly2::constant(1) }
    }

    pub fn numer(&self) -> &Poly2 {
        &self.num
    }

    pub fn denom(&self) -> &Poly2 {
        &self.den
    }

    /// Reduce `num / den` to canonical form.
    pub fn normalize(num: Poly2, den: Poly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (na, nb) = num.min_exps();
        let (da, db) = den.min_exps();
        let nd = num.to_dense((na, nb));
        let dd = den.to_dense((da, db));
        let (nd, dd) = if dd.len() == 1 && dd[0].len() == 1 {
            // constant denominator: only the integer content cancels
            let c = dd[0][0].clone();
            let g = num.content().gcd(&c);
            let n2 = Poly2::from_dense(&nd, (0, 0)).div_int(&g);
            let d2 = Poly2::constant(&c / &g);
            (n2, d2)
        } else {
            let g = Poly2::gcd_dense(&nd, &dd);
            let n2 = super::zpoly::b_divexact(&nd, &g);
            let d2 = super::zpoly::b_divexact(&dd, &g);
            (Poly2::from_dense(&n2, (0, 0)), Poly2::from_dense(&d2, (0, 0)))
        };
        Ok(Self::finish(nd.shift(na - da, nb - db), dd))
    }

    /// Canonicalize a fraction already known to be coprime.
    fn from_coprime(num: Poly2, den: Poly2) -> Self {
        let (da, db) = den.min_exps();
        Self::finish(num.shift(-da, -db), den.shift(-da, -db))
    }

    fn finish(mut num: Poly2, mut den: Poly2) -> Self {
        if den.leading().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        QTScalar { num, den }
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Substitute `q -> q^sq`, `t -> t^st` with signs `sq, st`.
    pub fn flip(&self, sq: i32, st: i32) -> Self {
        Self::from_coprime(self.num.flip(sq, st), self.den.flip(sq, st))
    }

    pub fn from_int(c: BigInt) -> Self {
        QTScalar { num: Poly2::constant(c), den: Poly2::constant(1) }
    }
}

impl Field for QTScalar {
    fn zero() -> Self {
        QTScalar { num: Poly2::zero(), den: Poly2::constant(1) }
    }
    fn one() -> Self {
        Self::monomial(1, 0, 0)
    }
    fn from_i64(v: i64) -> Self {
        Self::monomial(v, 0, 0)
    }
    fn from_rational(r: &Rational) -> Self {
        QTScalar { num: Poly2::constant(r.numer().clone()), den: Poly2::constant(r.denom().clone()) }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }
    fn add_ref(&self, o: &Self) -> Self {
        if self.den == o.den {
            let n = self.num.add(&o.num);
            if self.den.is_one() {
                return QTScalar { num: n, den: self.den.clone() };
            }
            return Self::normalize(n, self.den.clone()).unwrap();
        }
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::normalize(n, self.den.mul(&o.den)).unwrap()
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }
    fn mul_ref(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return QTScalar { num: self.num.mul(&o.num), den: self.den.clone() };
        }
        // monomial factors never disturb coprimality
        if let Some((c, (a, b))) = o.num.as_monomial() {
            if o.den.is_one() && c.abs().is_one() {
                return QTScalar { num: self.num.shift(a, b).scale(c), den: self.den.clone() };
            }
        }
        if let Some((c, (a, b))) = self.num.as_monomial() {
            if self.den.is_one() && c.abs().is_one() {
                return QTScalar { num: o.num.shift(a, b).scale(c), den: o.den.clone() };
            }
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }
    fn neg_ref(&self) -> Self {
        QTScalar { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        Some(Self::from_coprime(self.den.clone(), self.num.clone()))
    }
}

impl fmt::Display for QTScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl FromStr for QTScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let strip = |x: &str| -> String {
            let x = x.trim();
            if x.starts_with('(') && x.ends_with(')') {
                x[1..x.len() - 1].to_string()
            } else {
                x.to_string()
            }
        };
        match s.split_once('/') {
            Some((a, b)) => Self::normalize(Poly2::parse(&strip(a))?, Poly2::parse(&strip(b))?),
            None => Ok(Self::from_poly(Poly2::parse(&strip(s))?)),
        }
    }
}

macro_rules! impl_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                self.add_ref(&o)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                self.sub_ref(&o)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                self.mul_ref(&o)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
    };
}
pub(crate) use impl_ops;
impl_ops!(QTScalar);

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(s: &str) -> QTScalar {
        s.parse().unwrap()
    }

    #[test]
    fn spec_examples() {
        let q = QTScalar::q();
        let qi = q.inv().unwrap();
        assert_eq!((q.clone() - qi.clone()) * (q.clone() + qi), qt("q^2 - q^-2"));
        assert_eq!(
            QTScalar::normalize(Poly2::parse("q^2 - 1").unwrap(), Poly2::parse("q - 1").unwrap()).unwrap(),
            qt("q + 1")
        );
        let r = QTScalar::normalize(Poly2::parse("t - t^-1").unwrap(), Poly2::parse("1 - t^2").unwrap()).unwrap();
        assert_eq!(r, qt("-t^-1"));
        // cross-multiplication oracle
        assert_eq!(r * qt("1 - t^2"), qt("t - t^-1"));
    }

    #[test]
    fn zero_denominator() {
        assert_eq!(QTScalar::normalize(Poly2::constant(1), Poly2::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn canonical_denominator() {
        let x = qt("1").div_ref(&qt("-2*q^3 + 2*q^2*t")).unwrap();
        // denominator is monomial-free with positive leading coefficient
        assert_eq!(x.denom().min_exps(), (0, 0));
        assert!(x.denom().leading().unwrap().1.is_positive());
        assert_eq!(x.to_string(), "(-q^-2) / (2*q - 2*t)");
        assert_eq!(qt(&x.to_string()), x);
    }

    #[test]
    fn display_roundtrip() {
        for s in ["0", "1", "-3*q^2*t - q + 7", "(q - 1) / (q*t + 2)", "1/2", "q^-1*t^-3"] {
            let x = qt(s);
            assert_eq!(qt(&x.to_string()), x, "{s}");
        }
    }
}

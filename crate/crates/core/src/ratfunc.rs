//! Rational functions whose denominators are products of `1 - c x_i/x_j`.

use crate::laurent::{coeff_string, LaurentPoly};
use crate::params::Params;
use crate::scalar::Field;
use crate::weight::{Perm, Weight};
use std::collections::BTreeMap;
use std::fmt;

/// Denominator factor `1 - c x_i / x_j` with `i < j` (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor<F> {
    pub i: usize,
    pub j: usize,
    pub c: F,
}

/// `num / prod(factor^mult)`, kept with no factor dividing the numerator.
/// Since every factor is irreducible and normalized, the form is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc<F> {
    num: LaurentPoly<F>,
    den: BTreeMap<Factor<F>, u32>,
}

impl<F: Field> RatFunc<F> {
    pub fn zero(n: usize) -> Self {
        Self::from_laurent(LaurentPoly::zero(n))
    }

    pub fn one(n: usize) -> Self {
        Self::from_laurent(LaurentPoly::one(n))
    }

    pub fn constant(n: usize, c: F) -> Self {
        Self::from_laurent(LaurentPoly::constant(n, c))
    }

    pub fn from_laurent(num: LaurentPoly<F>) -> Self {
        RatFunc { num, den: BTreeMap::new() }
    }

    /// `1 / (1 - c x_i / x_j)` for any `i != j`.
    pub fn inv_binomial(n: usize, i: usize, j: usize, c: F) -> Self {
        let mut r = Self::one(n);
        r.divide_by_factor(i, j, c, 1);
        r
    }

    pub fn n(&self) -> usize {
        self.num.n()
    }

    pub fn numer(&self) -> &LaurentPoly<F> {
        &self.num
    }

    pub fn factors(&self) -> impl Iterator<Item = (&Factor<F>, &u32)> {
        self.den.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly<F>> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn into_laurent(self) -> Option<LaurentPoly<F>> {
        self.den.is_empty().then_some(self.num)
    }

    /// Multiply the denominator by `(1 - c x_i/x_j)^k`, normalizing `i < j`.
    fn divide_by_factor(&mut self, i: usize, j: usize, c: F, k: u32) {
        let n = self.n();
        let f = if i < j {
            Factor { i, j, c }
        } else {
            // 1 - c x_i/x_j = -c (x_i/x_j) (1 - c^-1 x_j/x_i)
            let ci = c.inv().expect("zero factor constant");
            let unit = ci.neg_ref();
            let mono = Weight::root(n, j, i);
            for _ in 0..k {
                self.num = self.num.mul_monomial(&unit, &mono);
            }
            Factor { i: j, j: i, c: ci }
        };
        *self.den.entry(f).or_insert(0) += k;
        self.cancel();
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<Factor<F>> = self.den.keys().cloned().collect();
        for f in keys {
            while let Some(m) = self.den.get(&f).copied() {
                match self.num.div_binomial(f.i, f.j, &f.c) {
                    Some(q) => {
                        self.num = q;
                        if m == 1 {
                            self.den.remove(&f);
                        } else {
                            self.den.insert(f.clone(), m - 1);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    fn expand_den(&self, den: &BTreeMap<Factor<F>, u32>) -> LaurentPoly<F> {
        let mut p = LaurentPoly::one(self.n());
        for (f, &m) in den {
            for _ in 0..m {
                p = p.mul_binomial(f.i, f.j, &f.c);
            }
        }
        p
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            let mut r = RatFunc { num: self.num.add(&o.num), den: self.den.clone() };
            r.cancel();
            return r;
        }
        let mut lcm = self.den.clone();
        for (f, &m) in &o.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let missing = |d: &BTreeMap<Factor<F>, u32>| -> BTreeMap<Factor<F>, u32> {
            lcm.iter()
                .filter_map(|(f, &m)| {
                    let have = d.get(f).copied().unwrap_or(0);
                    (m > have).then(|| (f.clone(), m - have))
                })
                .collect()
        };
        let a = self.num.mul(&self.expand_den(&missing(&self.den)));
        let b = o.num.mul(&o.expand_den(&missing(&o.den)));
        let mut r = RatFunc { num: a.add(&b), den: lcm };
        r.cancel();
        r
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = RatFunc { num: self.num.scale(c), den: self.den.clone() };
        if r.num.is_zero() {
            r.den.clear();
        }
        r
    }

    pub fn mul_laurent(&self, p: &LaurentPoly<F>) -> Self {
        let mut r = RatFunc { num: self.num.mul(p), den: self.den.clone() };
        r.cancel();
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = RatFunc { num: self.num.mul(&o.num), den: self.den.clone() };
        for (f, &m) in &o.den {
            *r.den.entry(f.clone()).or_insert(0) += m;
        }
        r.cancel();
        r
    }

    /// Apply `x_i -> x_{w(i)}`.
    pub fn permute(&self, w: &Perm) -> Self {
        let mut r = Self::from_laurent(self.num.permute(w));
        for (f, &m) in &self.den {
            r.divide_by_factor(w.0[f.i - 1] + 1, w.0[f.j - 1] + 1, f.c.clone(), m);
        }
        r
    }

    /// Apply `x -> q^l x`.
    pub fn q_shift(&self, l: &Weight, p: &Params<F>) -> Self {
        let mut r = Self::from_laurent(self.num.q_shift(l, p));
        for (f, &m) in &self.den {
            let c = f.c.mul_ref(&p.q_pow(l.0[f.i - 1] - l.0[f.j - 1]));
            *r.den.entry(Factor { i: f.i, j: f.j, c }).or_insert(0) += m;
        }
        r.cancel();
        r
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        let mut r = RatFunc::from_laurent(self.num.map_coeffs(&f));
        for (fa, &m) in &self.den {
            r.divide_by_factor(fa.i, fa.j, f(&fa.c), m);
        }
        r
    }
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        for (idx, (fa, &m)) in self.den.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            let c = if fa.c.is_one() { String::new() } else { format!("{}*", coeff_string(&fa.c)) };
            write!(f, "(1 - {c}x{}/x{})", fa.i, fa.j)?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QTScalar;

    type R = RatFunc<QTScalar>;
    type P = LaurentPoly<QTScalar>;

    #[test]
    fn arithmetic_cancels() {
        let one = QTScalar::one();
        let a = R::inv_binomial(2, 1, 2, one.clone());
        // (x1 - x2) * 1/(1 - x1/x2) = -x2
        let f = P::var(2, 1).sub(&P::var(2, 2));
        assert_eq!(a.mul_laurent(&f).into_laurent().unwrap(), P::var(2, 2).neg());
        // 1/(1 - x2/x1) = -(x1/x2)/(1 - x1/x2), and the two add to 1
        let b = R::inv_binomial(2, 2, 1, one.clone());
        assert_eq!(a.add(&b), R::one(2));
        // s_1 swaps the two
        assert_eq!(a.permute(&Perm::s(2, 1)), b);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn q_shift_moves_constant() {
        let p = Params::generic(2);
        let a = R::inv_binomial(2, 1, 2, QTScalar::one());
        let s = a.q_shift(&Weight(vec![1, 0]), &p);
        assert_eq!(s, R::inv_binomial(2, 1, 2, QTScalar::q()));
    }
}

//! Laurent polynomials in `x_1, ..., x_n`.

use crate::params::Params;
use crate::scalar::Field;
use crate::weight::{Perm, Weight};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<F> {
    n: usize,
    terms: BTreeMap<Weight, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: F) -> Self {
        Self::monomial(c, Weight::zero(n))
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, F::one())
    }

    pub fn monomial(c: F, mu: Weight) -> Self {
        let mut p = Self::zero(mu.n());
        if !c.is_zero() {
            p.terms.insert(mu, c);
        }
        p
    }

    /// `x^mu` with coefficient 1.
    pub fn x(mu: Weight) -> Self {
        Self::monomial(F::one(), mu)
    }

    /// The variable `x_i`, 1-based.
    pub fn var(n: usize, i: usize) -> Self {
        Self::x(Weight::eps(n, i))
    }

    pub fn from_terms(n: usize, it: impl IntoIterator<Item = (Weight, F)>) -> Self {
        let mut p = Self::zero(n);
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mu: &Weight) -> F {
        self.terms.get(mu).cloned().unwrap_or_else(F::zero)
    }

    /// The constant if the polynomial is one.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&Weight::zero(self.n)).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, mu: Weight, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &Self) {
        for (k, v) in &o.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    /// `self += c * o`.
    pub fn axpy(&mut self, c: &F, o: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &o.terms {
            self.add_term(k.clone(), v.mul_ref(c));
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.axpy(&F::one().neg_ref(), o);
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg_ref())).collect() }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul_ref(c))).collect() }
    }

    pub fn mul_monomial(&self, c: &F, mu: &Weight) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(k, v)| (k + mu, v.mul_ref(c))).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.n);
        for (ka, va) in &self.terms {
            for (kb, vb) in &o.terms {
                r.add_term(ka + kb, va.mul_ref(vb));
            }
        }
        r
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// `x^mu -> x^{w mu}`, i.e. `x_i -> x_{w(i)}`.
    pub fn permute(&self, w: &Perm) -> Self {
        LaurentPoly { n: self.n, terms: self.terms.iter().map(|(k, v)| (w.act(k), v.clone())).collect() }
    }

    /// `f(x) -> f(q^{l_1} x_1, ..., q^{l_n} x_n)`.
    pub fn q_shift(&self, l: &Weight, p: &Params<F>) -> Self {
        if l.0.iter().all(|&a| a == 0) {
            return self.clone();
        }
        LaurentPoly {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.mul_ref(&p.q_pow(l.dot(k))))).collect(),
        }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        let mut r = LaurentPoly::zero(self.n);
        for (k, v) in &self.terms {
            r.add_term(k.clone(), f(v));
        }
        r
    }

    pub fn try_map_coeffs<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<LaurentPoly<G>, E> {
        let mut r = LaurentPoly::zero(self.n);
        for (k, v) in &self.terms {
            r.add_term(k.clone(), f(v)?);
        }
        Ok(r)
    }

    pub fn is_symmetric(&self) -> bool {
        (1..self.n).all(|i| self.permute(&Perm::s(self.n, i)) == *self)
    }

    /// Exact quotient by `1 - c x_i / x_j` (1-based `i != j`), or `None` if
    /// the division is not exact.
    ///
    /// Monomials split into chains along `e_i - e_j`; on each chain the
    /// quotient coefficients satisfy `b_k = a_k + c b_{k-1}`.
    pub fn div_binomial(&self, i: usize, j: usize, c: &F) -> Option<Self> {
        let (i, j) = (i - 1, j - 1);
        // chain key: exponent vector with the i-th coordinate folded into the j-th
        let mut chains: BTreeMap<Vec<i64>, BTreeMap<i64, &F>> = BTreeMap::new();
        for (mu, v) in &self.terms {
            let mut key = mu.0.clone();
            key[j] += key[i];
            key[i] = 0;
            chains.entry(key).or_default().insert(mu.0[i], v);
        }
        let mut out = Self::zero(self.n);
        for (key, chain) in chains {
            let lo = *chain.keys().next().unwrap();
            let hi = *chain.keys().next_back().unwrap();
            let mut b = F::zero();
            for k in lo..=hi {
                let a = chain.get(&k).map(|x| (*x).clone()).unwrap_or_else(F::zero);
                b = a.add_ref(&c.mul_ref(&b));
                if k == hi {
                    if !b.is_zero() {
                        return None;
                    }
                } else if !b.is_zero() {
                    let mut mu = key.clone();
                    mu[i] = k;
                    mu[j] -= k;
                    out.terms.insert(Weight(mu), b.clone());
                }
            }
        }
        Some(out)
    }

    /// `(1 - c x_i / x_j) * self`.
    pub fn mul_binomial(&self, i: usize, j: usize, c: &F) -> Self {
        let mut r = self.clone();
        r.axpy(&c.neg_ref(), &self.mul_monomial(&F::one(), &Weight::root(self.n, i, j)));
        r
    }

    /// Largest `|mu_j|` over the support.
    pub fn max_abs_exp(&self) -> i64 {
        self.terms.keys().flat_map(|k| k.0.iter().map(|a| a.abs())).max().unwrap_or(0)
    }

    /// Evaluate at `x_i = xs[i]`.
    pub fn eval(&self, xs: &[F]) -> Option<F> {
        let mut acc = F::zero();
        for (k, v) in &self.terms {
            let mut m = v.clone();
            for (x, &e) in xs.iter().zip(&k.0) {
                m = m.mul_ref(&x.pow_i(e)?);
            }
            acc = acc.add_ref(&m);
        }
        Some(acc)
    }
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, mu: &Weight) -> fmt::Result {
    let mut first = true;
    for (i, &e) in mu.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, e)?;
        }
    }
    Ok(())
}

/// Coefficient strings that are sums or fractions get parentheses.
pub fn coeff_string<F: fmt::Display>(c: &F) -> String {
    let s = c.to_string();
    let compound = s.trim_start_matches('-').contains([' ', '/']);
    if compound {
        format!("({s})")
    } else {
        s
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // descending exponent order reads more naturally
        for (idx, (mu, c)) in self.terms.iter().rev().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let cs = coeff_string(c);
            if mu.0.iter().all(|&e| e == 0) {
                f.write_str(&cs)?;
            } else if c.is_one() {
                write_monomial(f, mu)?;
            } else {
                write!(f, "{cs}*")?;
                write_monomial(f, mu)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QTScalar;

    type P = LaurentPoly<QTScalar>;

    fn x(v: &[i64]) -> P {
        P::x(Weight(v.to_vec()))
    }

    #[test]
    fn binomial_division() {
        let one = QTScalar::one();
        // (x1 - x2) / (1 - x1/x2) = -x2
        let f = x(&[1, 0]).sub(&x(&[0, 1]));
        assert_eq!(f.div_binomial(1, 2, &one).unwrap(), x(&[0, 1]).neg());
        // x1^2 - x2^2 over the same factor
        let f = x(&[2, 0]).sub(&x(&[0, 2]));
        let expect = x(&[0, 1]).mul(&x(&[1, 0]).add(&x(&[0, 1]))).neg();
        assert_eq!(f.div_binomial(1, 2, &one).unwrap(), expect);
        assert!(x(&[1, 0]).div_binomial(1, 2, &one).is_none());
        // a q-twisted factor round-trips
        let c = QTScalar::q().pow_i(-2).unwrap();
        let g = x(&[2, -1]).add(&x(&[0, 3]).scale(&QTScalar::t()));
        let prod = g.mul_binomial(2, 1, &c);
        assert_eq!(prod.div_binomial(2, 1, &c).unwrap(), g);
    }

    #[test]
    fn shifts_and_perms() {
        let p = Params::generic(2);
        let f = x(&[1, 1]);
        assert_eq!(f.q_shift(&Weight(vec![2, 0]), &p), f.scale(&QTScalar::monomial(1, 2, 0)));
        assert_eq!(x(&[1, 0]).permute(&Perm::s(2, 1)), x(&[0, 1]));
        assert!(x(&[1, 0]).add(&x(&[0, 1])).is_symmetric());
        assert_eq!(x(&[2, -1]).scale(&QTScalar::q()).to_string(), "q*x1^2*x2^-1");
    }
}

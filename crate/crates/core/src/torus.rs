//! Difference-reflection operators `sum a(x) k_l w` acting on Laurent
//! polynomials.
//!
//! `k_l` is the shift `f(x) -> f(q^l x)` and `w` the substitution
//! `x_i -> x_{w(i)}`. Normal form is coefficient, then shift, then
//! permutation; `w k_l = k_{w l} w` and `k_l f = f(q^l x) k_l`.

use crate::laurent::LaurentPoly;
use crate::params::Params;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;
use crate::weight::{Perm, Weight};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusOp<F> {
    n: usize,
    terms: BTreeMap<(Weight, Perm), RatFunc<F>>,
}

impl<F: Field> TorusOp<F> {
    pub fn zero(n: usize) -> Self {
        TorusOp { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::term(RatFunc::one(n), Weight::zero(n), Perm::identity(n))
    }

    pub fn term(c: RatFunc<F>, shift: Weight, perm: Perm) -> Self {
        let n = shift.n();
        let mut op = Self::zero(n);
        op.add_term(shift, perm, c);
        op
    }

    pub fn shift(l: Weight) -> Self {
        let n = l.n();
        Self::term(RatFunc::one(n), l, Perm::identity(n))
    }

    pub fn perm(w: Perm) -> Self {
        let n = w.n();
        Self::term(RatFunc::one(n), Weight::zero(n), w)
    }

    pub fn mult(f: LaurentPoly<F>) -> Self {
        let n = f.n();
        Self::term(RatFunc::from_laurent(f), Weight::zero(n), Perm::identity(n))
    }

    pub fn mult_rat(f: RatFunc<F>) -> Self {
        let n = f.n();
        Self::term(f, Weight::zero(n), Perm::identity(n))
    }

    pub fn scalar(n: usize, c: F) -> Self {
        Self::mult(LaurentPoly::constant(n, c))
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

    pub fn terms(&self) -> impl Iterator<Item = (&(Weight, Perm), &RatFunc<F>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, shift: &Weight, perm: &Perm) -> Option<&RatFunc<F>> {
        self.terms.get(&(shift.clone(), perm.clone()))
    }

    pub fn add_term(&mut self, shift: Weight, perm: Perm, c: RatFunc<F>) {
        if c.is_zero() {
            return;
        }
        let key = (shift, perm);
        match self.terms.get(&key) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&key);
                } else {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for ((l, w), c) in &o.terms {
            r.add_term(l.clone(), w.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        TorusOp { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero(self.n);
        for ((l, w), a) in &self.terms {
            r.add_term(l.clone(), w.clone(), a.scale(c));
        }
        r
    }

    /// `(a k_l w)(b k_m v) = a (k_l w b) k_{l + w m} w v`.
    pub fn mul(&self, o: &Self, p: &Params<F>) -> Self {
        let mut r = Self::zero(self.n);
        for ((l, w), a) in &self.terms {
            for ((m, v), b) in &o.terms {
                let moved = b.permute(w).q_shift(l, p);
                let c = a.mul(&moved);
                r.add_term(l + &w.act(m), w.compose(v), c);
            }
        }
        r
    }

    pub fn commutator(&self, o: &Self, p: &Params<F>) -> Self {
        self.mul(o, p).sub(&o.mul(self, p))
    }

    /// Action on a Laurent polynomial; the result may be rational.
    pub fn apply(&self, f: &LaurentPoly<F>, p: &Params<F>) -> RatFunc<F> {
        let mut acc = RatFunc::zero(self.n);
        for ((l, w), a) in &self.terms {
            let g = f.permute(w).q_shift(l, p);
            acc = acc.add(&a.mul_laurent(&g));
        }
        acc
    }

    pub fn apply_rat(&self, f: &RatFunc<F>, p: &Params<F>) -> RatFunc<F> {
        let mut acc = RatFunc::zero(self.n);
        for ((l, w), a) in &self.terms {
            acc = acc.add(&a.mul(&f.permute(w).q_shift(l, p)));
        }
        acc
    }

    /// JSON array of `[coeff, shift, perm]` with one-line 1-based perms.
    pub fn to_json(&self) -> Value {
        Value::Array(self.terms.iter().map(|((l, w), c)| json!([c.to_string(), l.to_string(), w.one_line()])).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QTScalar;

    type Op = TorusOp<QTScalar>;
    type P = LaurentPoly<QTScalar>;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn shift_past_multiplication() {
        let p = Params::generic(2);
        let k = Op::shift(w(&[1, 0]));
        let x1 = Op::mult(P::var(2, 1));
        let lhs = k.mul(&x1, &p);
        let rhs = x1.scale(&QTScalar::q()).mul(&k, &p);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reflection_shift_products() {
        let p = Params::generic(2);
        let s = Op::perm(Perm::s(2, 1));
        let a = s.mul(&Op::shift(w(&[1, 0])), &p);
        let b = s.mul(&Op::shift(w(&[0, 1])), &p);
        let ab = a.mul(&b, &p);
        assert_eq!(ab, Op::shift(w(&[0, 2])));
        let f = P::var(2, 1).mul(&P::var(2, 2));
        let q2 = QTScalar::monomial(1, 2, 0);
        assert_eq!(ab.apply(&f, &p).into_laurent().unwrap(), f.scale(&q2));
        // s_1 k_{2 eps_1} on x1^2 gives q^4 x2^2
        let op = s.mul(&Op::shift(w(&[2, 0])), &p);
        let x1sq = P::x(w(&[2, 0]));
        assert_eq!(op.apply(&x1sq, &p).into_laurent().unwrap(), P::x(w(&[0, 2])).scale(&QTScalar::monomial(1, 4, 0)));
        assert_eq!(Op::identity(2).mul(&op, &p), op);
    }
}

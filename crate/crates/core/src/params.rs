//! Parameter values `(q, t)` in a coefficient field.

use crate::scalar::{CycScalar, Field, QTScalar, SpecMap};

const CACHE: i64 = 64;

/// Rank `n` and the images of `q`, `t` in `F`, with cached powers of `q`.
#[derive(Clone, Debug)]
pub struct Params<F> {
    pub n: usize,
    pub q: F,
    pub t: F,
    qpows: Vec<F>,
}

impl<F: Field> Params<F> {
    pub fn new(n: usize, q: F, t: F) -> Self {
        let qi = q.inv().expect("q must be invertible");
        let mut up = vec![F::one()];
        let mut down = vec![F::one()];
        for k in 1..=CACHE as usize {
            up.push(up[k - 1].mul_ref(&q));
            down.push(down[k - 1].mul_ref(&qi));
        }
        let mut qpows: Vec<F> = down.into_iter().skip(1).rev().collect();
        qpows.extend(up);
        Params { n, q, t, qpows }
    }

    pub fn q_pow(&self, e: i64) -> F {
        if e.abs() <= CACHE {
            self.qpows[(e + CACHE) as usize].clone()
        } else {
            self.q.pow_i(e).unwrap()
        }
    }

    pub fn t_inv(&self) -> F {
        self.t.inv().expect("t must be invertible")
    }

    /// `t - t^-1`.
    pub fn hecke_c(&self) -> F {
        self.t.sub_ref(&self.t_inv())
    }

    /// Same field, parameters `(q^sq, t^st)` with signs `sq, st`.
    pub fn flipped(&self, sq: i32, st: i32) -> Self {
        let q = if sq < 0 { self.q.inv().unwrap() } else { self.q.clone() };
        let t = if st < 0 { self.t_inv() } else { self.t.clone() };
        Self::new(self.n, q, t)
    }

    pub fn with_n(&self, n: usize) -> Self {
        Params { n, ..self.clone() }
    }
}

impl Params<QTScalar> {
    pub fn generic(n: usize) -> Self {
        Self::new(n, QTScalar::q(), QTScalar::t())
    }
}

impl Params<CycScalar> {
    /// `q = u^m`, `t = u^k` at a point of the curve.
    pub fn special(n: usize, s: &SpecMap) -> Self {
        Self::new(n, s.tau(), s.zeta())
    }
}

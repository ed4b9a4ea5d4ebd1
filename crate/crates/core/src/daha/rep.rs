//! The polynomial representation, both as an action on Laurent polynomials
//! and as symbolic torus operators.

use super::{y_word, DahaWord, Token};
use crate::laurent::LaurentPoly;
use crate::params::Params;
use crate::ratfunc::RatFunc;
use crate::scalar::Field;
use crate::torus::TorusOp;
use crate::weight::{AffGen, ExtAffineElt, ExtWeight, Perm, Weight};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Deliberate breakage for negative tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// `t_1` acts as `t s_1`, without the divided difference.
    PlainT1,
}

type MonoCache<F> = Arc<RwLock<HashMap<(Token, Weight), LaurentPoly<F>>>>;

/// The representation at fixed parameters. Images of generators on single
/// monomials are memoized; clones share the cache.
#[derive(Clone, Debug)]
pub struct Rep<F> {
    p: Params<F>,
    mutation: Mutation,
    cache: MonoCache<F>,
}

/// Monomials in `[-d, d]^n`, by total absolute degree, then descending.
pub fn test_monomials(n: usize, d: i64) -> Vec<Weight> {
    let mut v = Weight::window(n, d);
    v.sort_by(|a, b| a.abs_degree().cmp(&b.abs_degree()).then(b.cmp(a)));
    v
}

impl<F: Field> Rep<F> {
    pub fn new(p: Params<F>) -> Self {
        Self::mutated(p, Mutation::None)
    }

    pub fn mutated(p: Params<F>, m: Mutation) -> Self {
        Rep { p, mutation: m, cache: Arc::new(RwLock::new(HashMap::new())) }
    }

    pub fn params(&self) -> &Params<F> {
        &self.p
    }

    pub fn mutation(&self) -> Mutation {
        self.mutation
    }

    pub fn n(&self) -> usize {
        self.p.n
    }

    /// `x^{l + d delta}` with `x_delta = q^-2`.
    fn x_ext(&self, l: &ExtWeight) -> (F, Weight) {
        (self.p.q_pow(-2 * l.delta), l.fin.clone())
    }

    /// Action of an extended affine Weyl group element on `x^m`.
    pub fn group_act(&self, g: &ExtAffineElt, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut out = LaurentPoly::zero(f.n());
        for (m, c) in f.terms() {
            let (s, w) = self.x_ext(&g.act(&ExtWeight::new(m.clone(), 0)));
            out.add_term(w, c.mul_ref(&s));
        }
        out
    }

    fn s_act(&self, i: usize, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        if i == 0 {
            self.group_act(&ExtAffineElt::generator(self.n(), AffGen::S(0)), f)
        } else {
            f.permute(&Perm::s(self.n(), i))
        }
    }

    /// `x^{alpha_i} = c x_a / x_b`, returned as `(a, b, c)`.
    fn alpha_binomial(&self, i: usize) -> (usize, usize, F) {
        if i == 0 {
            (self.n(), 1, self.p.q_pow(-2))
        } else {
            (i, i + 1, F::one())
        }
    }

    /// `(f - s_i f) / (1 - x^{alpha_i})`, always a Laurent polynomial.
    pub fn dd_apply(&self, i: usize, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        let (a, b, c) = self.alpha_binomial(i);
        f.sub(&self.s_act(i, f)).div_binomial(a, b, &c).expect("divided difference is exact")
    }

    fn t_act(&self, i: usize, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut out = self.s_act(i, f).scale(&self.p.t);
        if !(i == 1 && self.mutation == Mutation::PlainT1) {
            out.axpy(&self.p.hecke_c(), &self.dd_apply(i, f));
        }
        out
    }

    fn apply_token_raw(&self, tok: &Token, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        let n = self.n();
        match tok {
            Token::T(i) => self.t_act(*i, f),
            Token::TInv(i) => {
                let mut out = self.t_act(*i, f);
                out.axpy(&self.p.hecke_c().neg_ref(), f);
                out
            }
            Token::Pi => self.group_act(&ExtAffineElt::generator(n, AffGen::Pi), f),
            Token::PiInv => self.group_act(&ExtAffineElt::generator(n, AffGen::PiInv), f),
            Token::X(l) => {
                let (s, w) = self.x_ext(l);
                f.mul_monomial(&s, &w)
            }
            Token::Y(l) => self.apply_tokens(&y_word(l), f),
        }
    }

    fn mono_image(&self, tok: &Token, m: &Weight) -> LaurentPoly<F> {
        let key = (tok.clone(), m.clone());
        if let Some(v) = self.cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = self.apply_token_raw(tok, &LaurentPoly::x(m.clone()));
        self.cache.write().unwrap().insert(key, v.clone());
        v
    }

    pub fn apply_token(&self, tok: &Token, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        match tok {
            Token::X(_) => self.apply_token_raw(tok, f),
            // y_l is a product of commuting y_{+-eps_i}, each cached
            Token::Y(l) if l.abs_degree() > 1 => {
                let n = self.n();
                let mut g = f.clone();
                for i in 1..=n {
                    let e = l.0[i - 1];
                    let step = Token::Y(Weight::eps(n, i).scale(e.signum()));
                    for _ in 0..e.unsigned_abs() {
                        g = self.apply_token(&step, &g);
                    }
                }
                g
            }
            _ => {
                let mut out = LaurentPoly::zero(f.n());
                for (m, c) in f.terms() {
                    out.axpy(c, &self.mono_image(tok, m));
                }
                out
            }
        }
    }

    /// `sum c_l y_l` on `f`, by Horner's rule in each `y_i`.
    pub fn apply_y_poly(&self, yp: &LaurentPoly<F>, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        let terms: Vec<(&Weight, &F)> = yp.terms().collect();
        if terms.is_empty() {
            return LaurentPoly::zero(f.n());
        }
        self.horner(&terms, 0, f)
    }

    fn y_step(&self, i: usize, e: i64, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        let tok = Token::Y(Weight::eps(self.n(), i + 1).scale(e.signum()));
        (0..e.unsigned_abs()).fold(f.clone(), |g, _| self.apply_token(&tok, &g))
    }

    fn horner(&self, terms: &[(&Weight, &F)], i: usize, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        if i == self.n() {
            let c = terms.iter().fold(F::zero(), |a, (_, c)| a.add_ref(c));
            return f.scale(&c);
        }
        let mut groups: std::collections::BTreeMap<i64, Vec<(&Weight, &F)>> = Default::default();
        for &(w, c) in terms {
            groups.entry(w.0[i]).or_default().push((w, c));
        }
        let lo = *groups.keys().next().unwrap();
        let mut acc = LaurentPoly::zero(f.n());
        let mut prev: Option<i64> = None;
        for (&e, g) in groups.iter().rev() {
            if let Some(pe) = prev {
                acc = self.y_step(i, pe - e, &acc);
            }
            acc.add_assign_ref(&self.horner(g, i + 1, f));
            prev = Some(e);
        }
        self.y_step(i, lo, &acc)
    }

    /// Apply a token sequence; the rightmost token acts first.
    pub fn apply_tokens(&self, w: &[Token], f: &LaurentPoly<F>) -> LaurentPoly<F> {
        w.iter().rev().fold(f.clone(), |acc, t| self.apply_token(t, &acc))
    }

    pub fn apply(&self, w: &DahaWord<F>, f: &LaurentPoly<F>) -> LaurentPoly<F> {
        let mut out = LaurentPoly::zero(f.n());
        for (c, toks) in &w.terms {
            out.axpy(c, &self.apply_tokens(toks, f));
        }
        out
    }

    /// Symbolic operator of a group element.
    pub fn group_op(&self, g: &ExtAffineElt) -> TorusOp<F> {
        // w tau_l acts as w after k_{2l}; in normal form k_{2 w l} w
        TorusOp::shift(g.w.act(&g.lambda).scale(2)).mul(&TorusOp::perm(g.w.clone()), &self.p)
    }

    /// The image of a single token as a difference-reflection operator.
    pub fn rep_generator(&self, tok: &Token) -> TorusOp<F> {
        let n = self.n();
        let p = &self.p;
        match tok {
            Token::T(i) => {
                let s = if *i == 0 {
                    self.group_op(&ExtAffineElt::generator(n, AffGen::S(0)))
                } else {
                    TorusOp::perm(Perm::s(n, *i))
                };
                let mut op = s.scale(&p.t);
                if !(*i == 1 && self.mutation == Mutation::PlainT1) {
                    let (a, b, c) = self.alpha_binomial(*i);
                    let coef = TorusOp::mult_rat(RatFunc::inv_binomial(n, a, b, c).scale(&p.hecke_c()));
                    let diff = TorusOp::identity(n).sub(&s);
                    op = op.add(&coef.mul(&diff, p));
                }
                op
            }
            Token::TInv(i) => self.rep_generator(&Token::T(*i)).sub(&TorusOp::scalar(n, p.hecke_c())),
            Token::Pi => self.group_op(&ExtAffineElt::generator(n, AffGen::Pi)),
            Token::PiInv => self.group_op(&ExtAffineElt::generator(n, AffGen::PiInv)),
            Token::X(l) => {
                let (s, w) = self.x_ext(l);
                TorusOp::mult(LaurentPoly::monomial(s, w))
            }
            Token::Y(l) => self.tokens_op(&y_word(l)),
        }
    }

    pub fn tokens_op(&self, w: &[Token]) -> TorusOp<F> {
        w.iter().fold(TorusOp::identity(self.n()), |acc, t| acc.mul(&self.rep_generator(t), &self.p))
    }

    pub fn word_op(&self, w: &DahaWord<F>) -> TorusOp<F> {
        let mut out = TorusOp::zero(self.n());
        for (c, toks) in &w.terms {
            out = out.add(&self.tokens_op(toks).scale(c));
        }
        out
    }

    /// First monomial in the test window where the two words act
    /// differently.
    pub fn first_difference(&self, a: &DahaWord<F>, b: &DahaWord<F>, window: i64) -> Option<Weight> {
        let d = a.sub(b);
        test_monomials(self.n(), window).into_iter().find(|m| !self.apply(&d, &LaurentPoly::x(m.clone())).is_zero())
    }
}

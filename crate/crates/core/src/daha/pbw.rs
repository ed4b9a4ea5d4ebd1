//! PBW normal form `sum c x_l T_w y_m` and straightening.

use super::{y_word, DahaWord, Rep, Token};
use crate::laurent::LaurentPoly;
use crate::params::Params;
use crate::report::{Check, Suite};
use crate::scalar::Field;
use crate::weight::{AffGen, ExtAffineElt, ExtWeight, Perm, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

type Key = (Weight, Perm, Weight);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DahaElement<F> {
    n: usize,
    terms: BTreeMap<Key, F>,
}

impl<F: Field> DahaElement<F> {
    pub fn zero(n: usize) -> Self {
        DahaElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(F::one(), Weight::zero(n), Perm::identity(n), Weight::zero(n))
    }

    pub fn basis(c: F, x: Weight, w: Perm, y: Weight) -> Self {
        let mut e = Self::zero(x.n());
        e.add_term((x, w, y), c);
        e
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

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x: &Weight, w: &Perm, y: &Weight) -> F {
        self.terms.get(&(x.clone(), w.clone(), y.clone())).cloned().unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, k: Key, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, v) in &o.terms {
            r.add_term(k.clone(), v.clone());
        }
        r
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut r = Self::zero(self.n);
        for (k, v) in &self.terms {
            r.add_term(k.clone(), v.mul_ref(c));
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg_ref()))
    }

    /// Back to a word: `x_l`, then `T_w` along its reduced word, then `y_m`.
    pub fn to_word(&self) -> DahaWord<F> {
        let terms = self
            .terms
            .iter()
            .map(|((x, w, y), c)| {
                let mut t = Vec::new();
                if x.0.iter().any(|&a| a != 0) {
                    t.push(Token::x(x.clone()));
                }
                t.extend(w.reduced_word().into_iter().map(Token::T));
                if y.0.iter().any(|&a| a != 0) {
                    t.push(Token::Y(y.clone()));
                }
                (c.clone(), t)
            })
            .collect();
        DahaWord { n: self.n, terms }
    }

    pub fn straighten(w: &DahaWord<F>, p: &Params<F>) -> Self {
        Straightener::new(p).word(w)
    }

    pub fn mul(&self, o: &Self, p: &Params<F>) -> Self {
        let s = Straightener::new(p);
        let mut out = Self::zero(self.n);
        for (toks, c) in self.to_word().terms.iter().map(|(c, t)| (t, c)) {
            out = out.add(&s.left_tokens(toks, o).scale(c));
        }
        out
    }

    /// JSON list of `{x, w, y, c}` sorted by `(x, w, y)`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((x, w, y), c)| json!({"x": x.to_string(), "w": w.one_line(), "y": y.to_string(), "c": c.to_string()}))
                .collect(),
        )
    }
}

/// Terms `(u, r, c)` of `y_l T_w = sum c T_u y_r`.
type YMoves<F> = Vec<(Perm, Weight, F)>;

/// Straightening engine with a cache for moving `y` past `T_w`.
struct Straightener<'a, F> {
    p: &'a Params<F>,
    c: F,
    ycache: RefCell<HashMap<(Weight, Perm), YMoves<F>>>,
}

impl<'a, F: Field> Straightener<'a, F> {
    fn new(p: &'a Params<F>) -> Self {
        Straightener { p, c: p.hecke_c(), ycache: RefCell::new(HashMap::new()) }
    }

    fn n(&self) -> usize {
        self.p.n
    }

    /// `T_i T_w` in the `T` basis.
    fn hecke_left(&self, i: usize, w: &Perm) -> Vec<(Perm, F)> {
        let sw = Perm::s(self.n(), i).compose(w);
        if sw.length() > w.length() {
            vec![(sw, F::one())]
        } else {
            vec![(sw, F::one()), (w.clone(), self.c.clone())]
        }
    }

    fn hecke_left_elem(&self, i: usize, h: &BTreeMap<Perm, F>) -> BTreeMap<Perm, F> {
        let mut out: BTreeMap<Perm, F> = BTreeMap::new();
        for (w, a) in h {
            for (u, b) in self.hecke_left(i, w) {
                acc(&mut out, u, a.mul_ref(&b));
            }
        }
        out
    }

    fn hecke_left_inv_elem(&self, i: usize, h: &BTreeMap<Perm, F>) -> BTreeMap<Perm, F> {
        let mut out = self.hecke_left_elem(i, h);
        let mc = self.c.neg_ref();
        for (w, a) in h {
            acc(&mut out, w.clone(), a.mul_ref(&mc));
        }
        out
    }

    /// `y_l T_w = sum T_u y_r`, by the relation
    /// `y_l T_i = T_i y_{s_i l} + c (y_l - y_{s_i l}) / (1 - y_{-alpha_i})`.
    fn y_through(&self, l: &Weight, w: &Perm) -> YMoves<F> {
        let key = (l.clone(), w.clone());
        if let Some(v) = self.ycache.borrow().get(&key) {
            return v.clone();
        }
        let n = self.n();
        let word = w.reduced_word();
        let res = if word.is_empty() {
            vec![(Perm::identity(n), l.clone(), F::one())]
        } else {
            let i = word[0];
            let rest = Perm::s(n, i).compose(w);
            let sl = Perm::s(n, i).act(l);
            let mut out: BTreeMap<(Perm, Weight), F> = BTreeMap::new();
            for (u, r, a) in self.y_through(&sl, &rest) {
                for (v, b) in self.hecke_left(i, &u) {
                    acc(&mut out, (v, r.clone()), a.mul_ref(&b));
                }
            }
            let num = LaurentPoly::<F>::x(l.clone()).sub(&LaurentPoly::x(sl));
            let quot = num.div_binomial(i + 1, i, &F::one()).expect("y quotient is exact");
            for (r0, d) in quot.terms() {
                let cd = d.mul_ref(&self.c);
                for (u, r, a) in self.y_through(r0, &rest) {
                    acc(&mut out, (u, r), a.mul_ref(&cd));
                }
            }
            out.into_iter().map(|((u, r), a)| (u, r, a)).collect()
        };
        self.ycache.borrow_mut().insert(key, res.clone());
        res
    }

    fn x_ext(&self, l: &ExtWeight) -> (F, Weight) {
        (self.p.q_pow(-2 * l.delta), l.fin.clone())
    }

    /// Left multiplication of one token onto an element.
    fn left(&self, tok: &Token, e: &DahaElement<F>) -> DahaElement<F> {
        let n = self.n();
        let mut out = DahaElement::zero(n);
        match tok {
            Token::X(l) => {
                let (s, m) = self.x_ext(l);
                for ((x, w, y), c) in &e.terms {
                    out.add_term((&m + x, w.clone(), y.clone()), c.mul_ref(&s));
                }
            }
            Token::T(0) => {
                let e1 = self.left(&Token::PiInv, e);
                let e2 = self.left(&Token::T(n - 1), &e1);
                return self.left(&Token::Pi, &e2);
            }
            Token::T(i) => {
                let s = Perm::s(n, *i);
                for ((x, w, y), c) in &e.terms {
                    let sx = s.act(x);
                    for (u, b) in self.hecke_left(*i, w) {
                        out.add_term((sx.clone(), u, y.clone()), c.mul_ref(&b));
                    }
                    let num = LaurentPoly::<F>::x(x.clone()).sub(&LaurentPoly::x(sx));
                    let quot = num.div_binomial(*i, i + 1, &F::one()).expect("cross quotient is exact");
                    for (r, d) in quot.terms() {
                        out.add_term((r.clone(), w.clone(), y.clone()), c.mul_ref(d).mul_ref(&self.c));
                    }
                }
            }
            Token::TInv(i) => {
                let a = self.left(&Token::T(*i), e);
                return a.sub(&e.scale(&self.c));
            }
            Token::Pi => {
                let pi = ExtAffineElt::generator(n, AffGen::Pi);
                let e1 = Weight::eps(n, 1);
                for ((x, w, y), c) in &e.terms {
                    let (s, px) = self.x_ext(&pi.act(&ExtWeight::new(x.clone(), 0)));
                    let c = c.mul_ref(&s);
                    // t_pi = y_{eps_1} T_1^-1 ... T_{n-1}^-1
                    let mut h: BTreeMap<Perm, F> = BTreeMap::new();
                    h.insert(w.clone(), F::one());
                    for i in (1..n).rev() {
                        h = self.hecke_left_inv_elem(i, &h);
                    }
                    for (v, a) in h {
                        for (u, r, b) in self.y_through(&e1, &v) {
                            out.add_term((px.clone(), u, &r + y), c.mul_ref(&a).mul_ref(&b));
                        }
                    }
                }
            }
            Token::PiInv => {
                let pi = ExtAffineElt::generator(n, AffGen::PiInv);
                let me1 = -&Weight::eps(n, 1);
                for ((x, w, y), c) in &e.terms {
                    let (s, px) = self.x_ext(&pi.act(&ExtWeight::new(x.clone(), 0)));
                    let c = c.mul_ref(&s);
                    // t_pi^-1 = T_{n-1} ... T_1 y_{-eps_1}
                    let mut grouped: BTreeMap<Weight, BTreeMap<Perm, F>> = BTreeMap::new();
                    for (u, r, b) in self.y_through(&me1, w) {
                        acc(grouped.entry(&r + y).or_default(), u, b);
                    }
                    for (r, mut h) in grouped {
                        for i in 1..n {
                            h = self.hecke_left_elem(i, &h);
                        }
                        for (u, a) in h {
                            out.add_term((px.clone(), u, r.clone()), c.mul_ref(&a));
                        }
                    }
                }
            }
            Token::Y(l) => return self.left_tokens(&y_word(l), e),
        }
        out
    }

    fn left_tokens(&self, toks: &[Token], e: &DahaElement<F>) -> DahaElement<F> {
        toks.iter().rev().fold(e.clone(), |acc, t| self.left(t, &acc))
    }

    fn word(&self, w: &DahaWord<F>) -> DahaElement<F> {
        let one = DahaElement::one(self.n());
        let mut out = DahaElement::zero(self.n());
        for (c, toks) in &w.terms {
            out = out.add(&self.left_tokens(toks, &one).scale(c));
        }
        out
    }
}

fn acc<K: Ord, F: Field>(m: &mut BTreeMap<K, F>, k: K, v: F) {
    if v.is_zero() {
        return;
    }
    match m.get_mut(&k) {
        Some(x) => {
            *x = x.add_ref(&v);
            if x.is_zero() {
                m.remove(&k);
            }
        }
        None => {
            m.insert(k, v);
        }
    }
}

/// Distinct PBW basis elements with `|l|, |m| <= bound` (total absolute
/// degree) must act by distinct operators on the monomial window.
pub fn faithfulness_check<F: Field>(rep: &Rep<F>, bound: i64, window: i64) -> Suite {
    let n = rep.n();
    let weights: Vec<Weight> = Weight::window(n, bound).into_iter().filter(|w| w.abs_degree() <= bound).collect();
    let basis = super::test_monomials(n, window);
    let mut seen: HashMap<Vec<LaurentPoly<F>>, Key> = HashMap::new();
    let mut suite = Suite::new("pbw-faithfulness");
    let mut collisions = Vec::new();
    let mut count = 0;
    for x in &weights {
        for w in Perm::all(n) {
            for y in &weights {
                count += 1;
                let key = (x.clone(), w.clone(), y.clone());
                let word = DahaElement::basis(F::one(), x.clone(), w.clone(), y.clone()).to_word();
                let image: Vec<LaurentPoly<F>> =
                    basis.iter().map(|m| rep.apply(&word, &LaurentPoly::x(m.clone()))).collect();
                if let Some(prev) = seen.insert(image, key.clone()) {
                    collisions.push(json!({"a": format!("{prev:?}"), "b": format!("{key:?}")}));
                }
            }
        }
    }
    suite.push(if collisions.is_empty() {
        Check::pass("distinct-operators")
    } else {
        Check::fail("distinct-operators", Value::Array(collisions))
    });
    suite.detail("basis_elements", json!(count));
    suite.detail("window", json!(window));
    suite
}

/// A uniformly random token over a small alphabet.
pub fn random_token(n: usize, rng: &mut impl Rng) -> Token {
    let j = rng.gen_range(1..=n);
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let k = if n >= 2 { 6 } else { 4 };
    match rng.gen_range(0..k) {
        0 => Token::Pi,
        1 => Token::PiInv,
        2 => Token::x(Weight::eps(n, j).scale(sign)),
        3 => Token::Y(Weight::eps(n, j).scale(sign)),
        4 => Token::T(rng.gen_range(0..n)),
        _ => Token::TInv(rng.gen_range(0..n)),
    }
}

/// Seeded random words straighten to normal forms acting identically.
pub fn pbw_roundtrip<F: Field>(rep: &Rep<F>, count: usize, max_len: usize, seed: u64, window: i64) -> Suite {
    let n = rep.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Vec<Token>> = (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            (0..len).map(|_| random_token(n, &mut rng)).collect()
        })
        .collect();
    let checks: Vec<Check> = words
        .par_iter()
        .enumerate()
        .map(|(k, toks)| {
            let word = DahaWord::tokens(n, toks.clone());
            let e = DahaElement::straighten(&word, rep.params());
            let name = format!("word[{k}]");
            match rep.first_difference(&word, &e.to_word(), window) {
                None => Check::pass(name),
                Some(m) => {
                    Check::fail(name, json!({"word": word.to_string(), "monomial": LaurentPoly::<F>::x(m).to_string()}))
                }
            }
        })
        .collect();
    let mut s = Suite::new("pbw-roundtrip");
    s.extend(checks);
    s.detail("n", json!(n));
    s.detail("seed", json!(seed));
    s.detail("window", json!(window));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QTScalar;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn straighten_examples() {
        let p = Params::generic(2);
        let e = DahaElement::straighten(&DahaWord::token(2, Token::x(w(&[1, 0]))), &p);
        assert_eq!(e, DahaElement::basis(QTScalar::one(), w(&[1, 0]), Perm::identity(2), w(&[0, 0])));
        // t_1 x_1 = x_2 t_1 - (t - t^-1) x_2
        let e = DahaElement::straighten(&DahaWord::tokens(2, vec![Token::T(1), Token::x(w(&[1, 0]))]), &p);
        let expect = DahaElement::basis(QTScalar::one(), w(&[0, 1]), Perm::s(2, 1), w(&[0, 0]))
            .sub(&DahaElement::basis(p.hecke_c(), w(&[0, 1]), Perm::identity(2), w(&[0, 0])));
        assert_eq!(e, expect);
    }

    #[test]
    fn straightening_preserves_operators() {
        for n in 1..=3 {
            let p = Params::generic(n);
            let rep = Rep::new(p.clone());
            let mut words = vec![
                vec![Token::Pi, Token::x(Weight::eps(n, 1))],
                vec![Token::Y(Weight::eps(n, 1)), Token::x(Weight::eps(n, 1))],
                vec![Token::Y(-&Weight::eps(n, n)), Token::Pi, Token::Pi],
            ];
            if n >= 2 {
                words.push(vec![Token::PiInv, Token::T(0), Token::x(-&Weight::eps(n, n))]);
                words.push(vec![Token::T(1), Token::Pi, Token::TInv(0), Token::x(Weight::eps(n, 2))]);
            }
            for toks in words {
                let word = DahaWord::tokens(n, toks);
                let e = DahaElement::straighten(&word, &p);
                assert_eq!(rep.first_difference(&word, &e.to_word(), 2), None, "{word}");
                // idempotent on normal forms
                assert_eq!(DahaElement::straighten(&e.to_word(), &p), e);
            }
        }
    }

    #[test]
    fn faithful_on_small_basis() {
        let rep = Rep::new(Params::generic(2));
        let s = faithfulness_check(&rep, 1, 2);
        assert!(s.all_pass());
    }
}

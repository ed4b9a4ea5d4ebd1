//! The double affine Hecke algebra of `GL_n`.
//!
//! Conventions (checked by the relation suite, not assumed):
//!
//! | symbol | value |
//! |---|---|
//! | quadratic relation | `(T - t)(T + t^-1) = 0` |
//! | `x_delta` | `q^-2` |
//! | `pi` on weights | `eps_i -> eps_{i+1}`, `eps_n -> eps_1 - delta` |
//! | `tau_l` in the polynomial rep | `k_{2l}`, i.e. `x^m -> q^{2 l.m} x^m` |
//! | `s_0` | `s_theta tau_{-theta}`, `x^{alpha_0} = q^-2 x^{-theta}` |
//! | `y_{eps_i}` | `t_{tau_{omega_i}} t_{tau_{omega_{i-1}}}^-1` |

mod pbw;
mod relations;
mod rep;
mod symmetry;

pub use pbw::{faithfulness_check, pbw_roundtrip, random_token, DahaElement};
pub use relations::{
    relation_list, verify_presentation, verify_relations, verify_symbolic, verify_symmetry_images, Relation,
};
pub use rep::{test_monomials, Mutation, Rep};
pub use symmetry::{apply_symmetry, spherical_check, spherical_data, SphericalData, Symmetry};

use crate::laurent::LaurentPoly;
use crate::scalar::Field;
use crate::weight::{AffGen, ExtAffineElt, ExtWeight, Weight};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    /// `t_i`, `0 <= i < n`.
    T(usize),
    TInv(usize),
    Pi,
    PiInv,
    X(ExtWeight),
    /// `y_l`, expanded through `t_pi` and the `t_i`.
    Y(Weight),
}

impl Token {
    pub fn x(l: Weight) -> Self {
        Token::X(ExtWeight::new(l, 0))
    }

    pub fn inverse(&self) -> Token {
        match self {
            Token::T(i) => Token::TInv(*i),
            Token::TInv(i) => Token::T(*i),
            Token::Pi => Token::PiInv,
            Token::PiInv => Token::Pi,
            Token::X(l) => Token::X(ExtWeight::new(-&l.fin, -l.delta)),
            Token::Y(l) => Token::Y(-l),
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::T(i) => write!(f, "t{i}"),
            Token::TInv(i) => write!(f, "t{i}^-1"),
            Token::Pi => f.write_str("pi"),
            Token::PiInv => f.write_str("pi^-1"),
            Token::X(l) if l.delta == 0 => write!(f, "x[{}]", l.fin),
            Token::X(l) => write!(f, "x[{};{}]", l.fin, l.delta),
            Token::Y(l) => write!(f, "y[{}]", l),
        }
    }
}

/// Tokens for `t_g` along the greedy reduced word of `g`.
pub fn t_word(g: &ExtAffineElt) -> Vec<Token> {
    g.reduced_word()
        .into_iter()
        .map(|a| match a {
            AffGen::S(i) => Token::T(i),
            AffGen::Pi => Token::Pi,
            AffGen::PiInv => Token::PiInv,
        })
        .collect()
}

pub fn inverse_word(w: &[Token]) -> Vec<Token> {
    w.iter().rev().map(Token::inverse).collect()
}

/// `y_{eps_i}` as a word.
pub fn y_eps_word(n: usize, i: usize) -> Vec<Token> {
    let mut w = t_word(&ExtAffineElt::translation(Weight::omega(n, i)));
    w.extend(inverse_word(&t_word(&ExtAffineElt::translation(Weight::omega(n, i - 1)))));
    w
}

/// `y_l = prod_i y_{eps_i}^{l_i}`; the factors commute.
pub fn y_word(l: &Weight) -> Vec<Token> {
    let n = l.n();
    let mut out = Vec::new();
    for i in 1..=n {
        let e = l.0[i - 1];
        let w = if e >= 0 { y_eps_word(n, i) } else { inverse_word(&y_eps_word(n, i)) };
        for _ in 0..e.unsigned_abs() {
            out.extend(w.iter().cloned());
        }
    }
    out
}

/// Formal linear combination of token sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DahaWord<F> {
    pub n: usize,
    pub terms: Vec<(F, Vec<Token>)>,
}

impl<F: Field> DahaWord<F> {
    pub fn zero(n: usize) -> Self {
        DahaWord { n, terms: Vec::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::tokens(n, Vec::new())
    }

    pub fn tokens(n: usize, w: Vec<Token>) -> Self {
        DahaWord { n, terms: vec![(F::one(), w)] }
    }

    pub fn token(n: usize, t: Token) -> Self {
        Self::tokens(n, vec![t])
    }

    pub fn scalar(n: usize, c: F) -> Self {
        DahaWord { n, terms: vec![(c, Vec::new())] }
    }

    /// `sum c x^m` as a word.
    pub fn from_x_poly(p: &LaurentPoly<F>) -> Self {
        DahaWord { n: p.n(), terms: p.terms().map(|(m, c)| (c.clone(), vec![Token::x(m.clone())])).collect() }
    }

    pub fn from_y_poly(p: &LaurentPoly<F>) -> Self {
        DahaWord { n: p.n(), terms: p.terms().map(|(m, c)| (c.clone(), vec![Token::Y(m.clone())])).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.terms.clone();
        t.extend(o.terms.iter().cloned());
        DahaWord { n: self.n, terms: t }
    }

    pub fn scale(&self, c: &F) -> Self {
        DahaWord { n: self.n, terms: self.terms.iter().map(|(a, w)| (a.mul_ref(c), w.clone())).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&F::one().neg_ref()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut t = Vec::new();
        for (a, u) in &self.terms {
            for (b, v) in &o.terms {
                let mut w = u.clone();
                w.extend(v.iter().cloned());
                t.push((a.mul_ref(b), w));
            }
        }
        DahaWord { n: self.n, terms: t }
    }

    pub fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        DahaWord { n: self.n, terms: self.terms.iter().map(|(a, w)| (f(a), w.clone())).collect() }
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
    }
}

impl<F: Field> fmt::Display for DahaWord<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, w)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}", crate::laurent::coeff_string(c))?;
            for t in w {
                write!(f, "*{t}")?;
            }
        }
        Ok(())
    }
}

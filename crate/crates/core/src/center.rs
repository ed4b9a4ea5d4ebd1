//! The big center at roots of unity: symmetric functions of `x_l`, `y_l`
//! with `l` in `lX`, and the elements `sigma_x`, `sigma_y`.
//!
//! Candidates carry `Q(q, t)` coefficients; centrality is certified after
//! specializing through a [`SpecMap`], on a finite monomial window.

use crate::daha::{apply_symmetry, spherical_data, test_monomials, DahaWord, Rep, Symmetry, Token};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::params::Params;
use crate::report::{Check, Suite};
use crate::scalar::{CycScalar, Field, QTScalar, SpecMap};
use crate::weight::Weight;
use rayon::prelude::*;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// `sum c_m x^m` or `sum c_m y^m`, symmetric, exponents in `lX`.
#[derive(Clone, Debug)]
pub struct CenterCandidate {
    pub name: String,
    pub l: u32,
    pub side: Side,
    pub poly: LaurentPoly<QTScalar>,
}

impl CenterCandidate {
    fn new(name: String, l: u32, side: Side, poly: LaurentPoly<QTScalar>) -> Self {
        debug_assert!(poly.is_symmetric());
        debug_assert!(poly.terms().all(|(m, _)| m.0.iter().all(|e| e % l as i64 == 0)));
        CenterCandidate { name, l, side, poly }
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    pub fn word(&self) -> DahaWord<QTScalar> {
        match self.side {
            Side::X => DahaWord::from_x_poly(&self.poly),
            Side::Y => DahaWord::from_y_poly(&self.poly),
        }
    }

    /// The image under the Fourier transform, read back as a candidate.
    pub fn fourier(&self) -> CenterCandidate {
        let img = apply_symmetry(Symmetry::Fourier, &self.word(), |c: &QTScalar| {
            let (sq, st) = Symmetry::Fourier.param_signs();
            c.flip(sq, st)
        });
        let mut poly = LaurentPoly::zero(self.n());
        let mut side = None;
        for (c, toks) in &img.terms {
            let (s, m) = match toks.as_slice() {
                [] => (None, Weight::zero(self.n())),
                [Token::Y(m)] => (Some(Side::Y), m.clone()),
                [Token::X(m)] if m.delta == 0 => (Some(Side::X), m.fin.clone()),
                _ => unreachable!("fourier image of a one-sided symmetric polynomial"),
            };
            side = side.or(s);
            poly.add_term(m, c.clone());
        }
        let side = side.unwrap_or(match self.side {
            Side::X => Side::Y,
            Side::Y => Side::X,
        });
        CenterCandidate::new(format!("F({})", self.name), self.l, side, poly)
    }

    fn specialize(&self, s: &SpecMap) -> Result<LaurentPoly<CycScalar>> {
        self.poly.try_map_coeffs(|c| s.specialize(c))
    }
}

fn sym_candidate(name: String, n: usize, l: u32, side: Side, exps: Vec<Weight>) -> CenterCandidate {
    let poly = LaurentPoly::from_terms(n, exps.into_iter().map(|m| (m, QTScalar::one())));
    CenterCandidate::new(name, l, side, poly)
}

/// Power sums `p_a(x^l)`, `a <= n`, the units `(x_1...x_n)^{+-l}`, and the
/// same on the `y` side.
pub fn central_generators(n: usize, l: u32) -> Vec<CenterCandidate> {
    let li = l as i64;
    let mut xs = Vec::new();
    if n >= 2 {
        for a in 1..=n as i64 {
            let exps = (1..=n).map(|i| Weight::eps(n, i).scale(li * a)).collect();
            xs.push(sym_candidate(format!("p{a}(x^{l})"), n, l, Side::X, exps));
        }
    }
    for sgn in [1, -1] {
        let e = Weight(vec![sgn * li; n]);
        let tag = if sgn > 0 { "" } else { "-" };
        xs.push(sym_candidate(format!("e{n}(x)^{tag}{l}"), n, l, Side::X, vec![e]));
    }
    let ys: Vec<CenterCandidate> = xs
        .iter()
        .map(|c| {
            let mut f = c.fourier();
            f.name = c.name.replace('x', "y");
            f
        })
        .collect();
    xs.extend(ys);
    xs
}

/// `sigma_x = prod_{a root} prod_{k=0,1} (x^{l a} - t^{2lk})` and its
/// Fourier image; `t` becomes `zeta` under specialization.
pub fn sigma_elements(n: usize, l: u32) -> (CenterCandidate, CenterCandidate) {
    let li = l as i64;
    let t2l = QTScalar::monomial(1, 0, 2 * l as i32);
    let mut poly = LaurentPoly::one(n);
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let xa = LaurentPoly::x(Weight::root(n, i, j).scale(li));
            for c in [QTScalar::one(), t2l.clone()] {
                poly = poly.mul(&xa.sub(&LaurentPoly::constant(n, c)));
            }
        }
    }
    let sx = CenterCandidate::new("sigma_x".into(), l, Side::X, poly);
    let mut sy = sx.fourier();
    sy.name = "sigma_y".into();
    (sx, sy)
}

/// Generators tested against: `t_0, ..., t_{n-1}`, `t_pi^{+-1}`, `x_{eps_1}`.
pub fn test_generators(n: usize) -> Vec<Token> {
    let mut g: Vec<Token> = if n >= 2 { (0..n).map(Token::T).collect() } else { Vec::new() };
    g.extend([Token::Pi, Token::PiInv, Token::x(Weight::eps(n, 1))]);
    g
}

fn act<F: Field>(rep: &Rep<F>, side: Side, poly: &LaurentPoly<F>, f: &LaurentPoly<F>) -> LaurentPoly<F> {
    match side {
        Side::X => poly.mul(f),
        Side::Y => rep.apply_y_poly(poly, f),
    }
}

/// First `(generator, monomial)` where `[c, g]` does not vanish.
pub fn first_noncommuting<F: Field>(
    rep: &Rep<F>,
    side: Side,
    poly: &LaurentPoly<F>,
    gens: &[Token],
    bound: i64,
) -> Option<(Token, Weight)> {
    let monos = test_monomials(rep.n(), bound);
    gens.iter().find_map(|g| {
        monos
            .par_iter()
            .find_first(|m| {
                let f = LaurentPoly::x((*m).clone());
                let cg = act(rep, side, poly, &rep.apply_token(g, &f));
                let gc = rep.apply_token(g, &act(rep, side, poly, &f));
                cg != gc
            })
            .map(|m| (g.clone(), m.clone()))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Centrality {
    pub central: bool,
    pub witness: Option<(Token, Weight)>,
}

fn check_point(c: &CenterCandidate, s: &SpecMap) -> Result<()> {
    if s.tau().root_order() != Some(c.l) {
        return Err(Error::InvalidSpecialization(format!(
            "q has order {:?}, candidate needs {}",
            s.tau().root_order(),
            c.l
        )));
    }
    Ok(())
}

/// Certify `c` against [`test_generators`] at the point `s`.
pub fn is_central(c: &CenterCandidate, s: &SpecMap, bound: i64) -> Result<Centrality> {
    check_point(c, s)?;
    let rep = Rep::new(Params::special(c.n(), s));
    is_central_in(c, &rep, s, bound)
}

fn is_central_in(c: &CenterCandidate, rep: &Rep<CycScalar>, s: &SpecMap, bound: i64) -> Result<Centrality> {
    let poly = c.specialize(s)?;
    let w = first_noncommuting(rep, c.side, &poly, &test_generators(c.n()), bound);
    Ok(Centrality { central: w.is_none(), witness: w })
}

fn witness_json(w: &(Token, Weight)) -> serde_json::Value {
    json!({"generator": w.0.to_string(), "monomial": LaurentPoly::<QTScalar>::x(w.1.clone()).to_string()})
}

/// Every generator candidate plus `sigma_x`, `sigma_y` at the point `s`.
/// Even `l` is refused unless `allow_even` is set.
pub fn center_suite(n: usize, s: &SpecMap, bound: i64, allow_even: bool) -> Result<Suite> {
    if !s.odd_l && !allow_even {
        return Err(Error::InvalidSpecialization(format!("l = {} is even; pass allow_even to override", s.l)));
    }
    let mut cands = central_generators(n, s.l);
    let (sx, sy) = sigma_elements(n, s.l);
    cands.push(sx);
    cands.push(sy);
    let rep = Rep::new(Params::special(n, s));
    let mut suite = Suite::new("center-roots");
    for c in &cands {
        check_point(c, s)?;
        let r = is_central_in(c, &rep, s, bound)?;
        suite.push(match &r.witness {
            None => Check::pass(&c.name),
            Some(w) => Check::fail(&c.name, witness_json(w)),
        });
    }
    suite.detail("n", json!(n));
    suite.detail("l", json!(s.l));
    suite.detail("k", json!(s.k));
    suite.detail("m", json!(s.m));
    suite.detail("window", json!(bound));
    if !s.odd_l {
        suite.detail("warning", json!("even l"));
    }
    Ok(suite)
}

/// At generic `(q, t)`: `x`-side candidates commute with the finite `t_i`
/// and with `x_{eps_1}` but not with the full generator set; `y`-side ones
/// fail too. A check passes when the expected behavior is observed.
pub fn generic_controls(n: usize, l: u32, bound: i64) -> Suite {
    let rep = Rep::new(Params::generic(n));
    let finite: Vec<Token> = (1..n).map(Token::T).chain([Token::x(Weight::eps(n, 1))]).collect();
    let all = test_generators(n);
    let mut suite = Suite::new("center-generic-controls");
    for c in central_generators(n, l) {
        if c.side == Side::X {
            let name = format!("{}:commutes-with-finite", c.name);
            suite.push(match first_noncommuting(&rep, c.side, &c.poly, &finite, bound) {
                None => Check::pass(name),
                Some(w) => Check::fail(name, witness_json(&w)),
            });
        }
        let name = format!("{}:non-central", c.name);
        suite.push(match first_noncommuting(&rep, c.side, &c.poly, &all, bound) {
            Some(w) => Check::pass_with(name, witness_json(&w)),
            None => Check::fail(name, json!({"unexpected": "central at generic parameters"})),
        });
    }
    suite.detail("n", json!(n));
    suite.detail("l", json!(l));
    suite.detail("window", json!(bound));
    suite
}

/// `o c` against the compressions `o g o` at the point `s`.
pub fn spherical_center_check(c: &CenterCandidate, s: &SpecMap, bound: i64) -> Result<Suite> {
    check_point(c, s)?;
    let n = c.n();
    let p = Params::special(n, s);
    let rep = Rep::new(p.clone());
    let o = spherical_data(&p)?.o.to_word();
    let poly = c.specialize(s)?;
    let oc = |f: &LaurentPoly<CycScalar>| rep.apply(&o, &act(&rep, c.side, &poly, f));
    let mut suite = Suite::new("spherical-center");
    for g in test_generators(n) {
        let ogo = o.mul(&DahaWord::token(n, g.clone())).mul(&o);
        let bad = test_monomials(n, bound).into_iter().find(|m| {
            let f = LaurentPoly::x(m.clone());
            oc(&rep.apply(&ogo, &f)) != rep.apply(&ogo, &oc(&f))
        });
        let name = format!("o*{} vs o*{}*o", c.name, g);
        suite.push(match bad {
            None => Check::pass(name),
            Some(m) => Check::fail(name, witness_json(&(g, m))),
        });
    }
    suite.detail("window", json!(bound));
    Ok(suite)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_lists() {
        let g = central_generators(2, 3);
        let p1 = g.iter().find(|c| c.name == "p1(x^3)").unwrap();
        assert_eq!(p1.poly.to_string(), "x1^3 + x2^3");
        let y1 = g.iter().find(|c| c.name == "p1(y^3)").unwrap();
        assert_eq!(y1.side, Side::Y);
        assert_eq!(y1.poly, p1.poly);
        let g1 = central_generators(1, 2);
        assert_eq!(g1.len(), 4);
        assert!(g1.iter().all(|c| c.poly.len() == 1));
    }

    #[test]
    fn sigma_shapes() {
        let (sx, _) = sigma_elements(1, 3);
        assert_eq!(sx.poly, LaurentPoly::one(1));
        let (sx, sy) = sigma_elements(2, 3);
        // (X^3 - 1)(X^-3 - 1)(X^3 - t^6)(X^-3 - t^6), X = x1/x2
        let x = LaurentPoly::x(Weight(vec![3, -3]));
        let xi = LaurentPoly::x(Weight(vec![-3, 3]));
        let one = LaurentPoly::one(2);
        let t6 = LaurentPoly::constant(2, QTScalar::monomial(1, 0, 6));
        let expect = x.sub(&one).mul(&xi.sub(&one)).mul(&x.sub(&t6)).mul(&xi.sub(&t6));
        assert_eq!(sx.poly, expect);
        assert_eq!(sy.side, Side::Y);
        assert_eq!(sy.poly, expect.map_coeffs(|c| c.flip(-1, -1)));
    }

    #[test]
    fn wrong_order_is_rejected() {
        let c = &central_generators(2, 3)[0];
        let s = SpecMap::new(5, 1, 1).unwrap();
        assert!(matches!(is_central(c, &s, 1), Err(Error::InvalidSpecialization(_))));
    }

    #[test]
    fn rank_two_center_at_l3() {
        let s = SpecMap::new(3, 1, 1).unwrap();
        let suite = center_suite(2, &s, 2, false).unwrap();
        assert!(suite.all_pass(), "{:?}", suite.failures().collect::<Vec<_>>());
        let one = CenterCandidate::new("1".into(), 3, Side::X, LaurentPoly::one(2));
        assert!(is_central(&one, &s, 2).unwrap().central);
    }

    #[test]
    fn generic_parameters_break_centrality() {
        let s = generic_controls(2, 3, 1);
        assert!(s.all_pass(), "{:?}", s.failures().collect::<Vec<_>>());
        let rep = Rep::new(Params::generic(2));
        let e1 = LaurentPoly::var(2, 1).add(&LaurentPoly::var(2, 2));
        let w = first_noncommuting(&rep, Side::X, &e1, &test_generators(2), 1).unwrap();
        assert!(matches!(w.0, Token::T(0) | Token::Pi | Token::PiInv));
    }

    #[test]
    fn compressed_center_commutes() {
        let s = SpecMap::new(3, 1, 1).unwrap();
        let c = &central_generators(2, 3)[0];
        let r = spherical_center_check(c, &s, 1).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}

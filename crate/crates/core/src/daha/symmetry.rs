//! The Fourier transform, the involution IM and the spherical idempotent.

use super::{DahaElement, DahaWord, Token};
use crate::error::{Error, Result};
use crate::params::Params;
use crate::scalar::Field;
use crate::weight::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// `x <-> y`, `t_i -> t_i^-1`, `(q, t) -> (q^-1, t^-1)`.
    Fourier,
    /// `t_i -> -t_i^-1`, `x_l -> x_-l`, `t_pi -> t_pi`, `(q, t) -> (q^-1, t)`.
    Im,
}

impl Symmetry {
    /// Signs of the induced substitution on `(q, t)`.
    pub fn param_signs(self) -> (i32, i32) {
        match self {
            Symmetry::Fourier => (-1, -1),
            Symmetry::Im => (-1, 1),
        }
    }
}

fn fourier_token<F: Field>(n: usize, tok: &Token) -> DahaWord<F> {
    let one = |t| DahaWord::token(n, t);
    match tok {
        Token::T(0) => {
            // t_0 = t_pi t_{n-1} t_pi^-1
            let pi = fourier_token(n, &Token::Pi);
            let pinv = fourier_token(n, &Token::PiInv);
            pi.mul(&one(Token::TInv(n - 1))).mul(&pinv)
        }
        Token::T(i) => one(Token::TInv(*i)),
        Token::TInv(0) => {
            let pi = fourier_token(n, &Token::Pi);
            let pinv = fourier_token(n, &Token::PiInv);
            pi.mul(&one(Token::T(n - 1))).mul(&pinv)
        }
        Token::TInv(i) => one(Token::T(*i)),
        // t_pi = y_1 T_1^-1 ... T_{n-1}^-1 goes to x_1 T_1 ... T_{n-1}
        Token::Pi => {
            let mut t = vec![Token::x(crate::weight::Weight::eps(n, 1))];
            t.extend((1..n).map(Token::T));
            DahaWord::tokens(n, t)
        }
        Token::PiInv => {
            let mut t: Vec<Token> = (1..n).rev().map(Token::TInv).collect();
            t.push(Token::x(-&crate::weight::Weight::eps(n, 1)));
            DahaWord::tokens(n, t)
        }
        // the scalar x_delta = q^-2 goes to q^2 = x_{-delta}
        Token::X(l) => one(Token::Y(l.fin.clone())).with_delta(-l.delta),
        Token::Y(l) => one(Token::x(l.clone())),
    }
}

fn im_token<F: Field>(n: usize, tok: &Token) -> DahaWord<F> {
    let m1 = F::one().neg_ref();
    match tok {
        Token::T(i) => DahaWord::token(n, Token::TInv(*i)).scale(&m1),
        Token::TInv(i) => DahaWord::token(n, Token::T(*i)).scale(&m1),
        Token::Pi | Token::PiInv => DahaWord::token(n, tok.clone()),
        Token::X(l) => DahaWord::token(n, Token::X(crate::weight::ExtWeight::new(-&l.fin, -l.delta))),
        Token::Y(l) => {
            let w = super::y_word(l);
            w.iter().fold(DahaWord::one(n), |acc, t| acc.mul(&im_token(n, t)))
        }
    }
}

impl<F: Field> DahaWord<F> {
    /// Attach a `delta` power: the token `x_{k delta}` in the image algebra.
    fn with_delta(self, d: i64) -> Self {
        if d == 0 {
            return self;
        }
        let n = self.n;
        let xd = Token::X(crate::weight::ExtWeight::new(crate::weight::Weight::zero(n), d));
        DahaWord::token(n, xd).mul(&self)
    }
}

/// Image of a word; `conj` realizes the induced map on scalars.
pub fn apply_symmetry<F: Field>(kind: Symmetry, w: &DahaWord<F>, conj: impl Fn(&F) -> F) -> DahaWord<F> {
    let n = w.n;
    let mut out = DahaWord::zero(n);
    for (c, toks) in &w.terms {
        let img = toks.iter().fold(DahaWord::one(n), |acc, t| {
            let ti = match kind {
                Symmetry::Fourier => fourier_token(n, t),
                Symmetry::Im => im_token(n, t),
            };
            acc.mul(&ti)
        });
        out = out.add(&img.scale(&conj(c)));
    }
    out
}

#[derive(Clone, Debug)]
pub struct SphericalData<F> {
    pub o: DahaElement<F>,
    pub a_o: F,
}

/// `o = sum_w t^{l(w)} T_w` and `a_o = sum_w t^{2 l(w)}`.
pub fn spherical_data<F: Field>(p: &Params<F>) -> Result<SphericalData<F>> {
    let n = p.n;
    let mut o = DahaElement::zero(n);
    let mut a_o = F::zero();
    let z = crate::weight::Weight::zero(n);
    for w in Perm::all(n) {
        let l = w.length() as i64;
        let tl = p.t.pow_i(l).unwrap();
        o = o.add(&DahaElement::basis(tl.clone(), z.clone(), w, z.clone()));
        a_o = a_o.add_ref(&tl.mul_ref(&tl));
    }
    if a_o.is_zero() {
        return Err(Error::SphericalDegenerate);
    }
    Ok(SphericalData { o, a_o })
}

/// `a_o` against the Poincare product `prod_k (1 - t^{2k})/(1 - t^2)`, and
/// `o^2 = a_o o` by PBW multiplication.
pub fn spherical_check<F: Field>(p: &Params<F>) -> crate::report::Suite {
    use crate::report::{Check, Suite};
    use serde_json::json;
    let mut s = Suite::new("spherical");
    s.detail("n", json!(p.n));
    let d = match spherical_data(p) {
        Ok(d) => d,
        Err(e) => {
            s.push(Check::fail("a_o-nonzero", json!({"error": e.to_string()})));
            return s;
        }
    };
    let t2 = p.t.mul_ref(&p.t);
    let one = F::one();
    let mut prod = F::one();
    let mut ok = true;
    for k in 1..=p.n as i64 {
        let num = one.sub_ref(&t2.pow_i(k).unwrap());
        match num.div_ref(&one.sub_ref(&t2)) {
            Some(f) => prod = prod.mul_ref(&f),
            None => ok = false,
        }
    }
    let a_str = crate::laurent::coeff_string(&d.a_o);
    if !ok {
        // t^2 = 1: the product formula degenerates to n!
        prod = (1..=p.n as i64).fold(F::one(), |a, k| a.mul_ref(&F::from_i64(k)));
    }
    s.push(if prod == d.a_o {
        Check::pass("a_o-poincare")
    } else {
        Check::fail("a_o-poincare", json!({"a_o": a_str, "product": crate::laurent::coeff_string(&prod)}))
    });
    let o2 = d.o.mul(&d.o, p);
    s.push(if o2 == d.o.scale(&d.a_o) {
        Check::pass("o-squared")
    } else {
        Check::fail("o-squared", json!({"o2": o2.to_json()}))
    });
    s.detail("a_o", json!(a_str));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::{y_word, Rep};
    use crate::laurent::LaurentPoly;
    use crate::scalar::QTScalar;
    use crate::weight::Weight;

    #[test]
    fn spherical_identities() {
        for n in 1..=3 {
            let p = Params::generic(n);
            let s = spherical_check(&p);
            assert!(s.all_pass(), "n={n}: {:?}", s.failures().collect::<Vec<_>>());
        }
        let d = spherical_data(&Params::generic(3)).unwrap();
        let t2 = QTScalar::monomial(1, 0, 2);
        let one = QTScalar::one();
        let f1 = one.add_ref(&t2);
        let f2 = f1.add_ref(&t2.mul_ref(&t2));
        assert_eq!(d.a_o, f1.mul_ref(&f2));
    }

    #[test]
    fn im_is_an_involution_on_t1() {
        let w: DahaWord<QTScalar> = DahaWord::token(2, Token::T(1));
        let id = |c: &QTScalar| c.flip(-1, 1);
        let twice = apply_symmetry(Symmetry::Im, &apply_symmetry(Symmetry::Im, &w, id), id);
        let rep = Rep::new(Params::generic(2));
        assert_eq!(rep.first_difference(&twice, &w, 2), None);
    }

    #[test]
    fn fourier_sends_x_to_y() {
        let n = 2;
        let w: DahaWord<QTScalar> = DahaWord::token(n, Token::x(Weight::eps(n, 1)));
        let img = apply_symmetry(Symmetry::Fourier, &w, |c: &QTScalar| c.flip(-1, -1));
        let y = DahaWord::tokens(n, y_word(&Weight::eps(n, 1)));
        let rep = Rep::new(Params::generic(n));
        assert_eq!(rep.first_difference(&img, &y, 2), None);
        let f = LaurentPoly::var(n, 2);
        assert_eq!(rep.apply(&img, &f), rep.apply(&y, &f));
    }
}

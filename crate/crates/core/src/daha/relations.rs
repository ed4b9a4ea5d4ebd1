//! Defining relations and their verification in the polynomial
//! representation.

use super::{apply_symmetry, y_word, DahaWord, Rep, Symmetry, Token};
use crate::laurent::LaurentPoly;
use crate::report::{Check, Suite};
use crate::scalar::Field;
use crate::weight::{AffGen, ExtAffineElt, ExtWeight, Weight};
use rayon::prelude::*;
use serde_json::json;

/// `lhs = rhs` with coefficients built from the parameters.
#[derive(Clone, Debug)]
pub struct Relation<F> {
    pub name: String,
    pub lhs: DahaWord<F>,
    pub rhs: DahaWord<F>,
}

fn tw<F: Field>(n: usize, toks: Vec<Token>) -> DahaWord<F> {
    DahaWord::tokens(n, toks)
}

/// The relation set for rank `n`, plus the derived commutativity of the
/// `y_{eps_i}`.
pub fn relation_list<F: Field>(rep: &Rep<F>) -> Vec<Relation<F>> {
    let p = rep.params();
    let n = p.n;
    let c = p.hecke_c();
    let mut out = Vec::new();
    let mut rel = |name: String, lhs: DahaWord<F>, rhs: DahaWord<F>| out.push(Relation { name, lhs, rhs });
    let idx: Vec<usize> = if n >= 2 { (0..n).collect() } else { Vec::new() };

    for &i in &idx {
        // T^2 - (t - t^-1) T - 1 = 0
        let lhs = tw(n, vec![Token::T(i), Token::T(i)]).sub(&tw(n, vec![Token::T(i)]).scale(&c)).sub(&DahaWord::one(n));
        rel(format!("quadratic[{i}]"), lhs, DahaWord::zero(n));
    }
    if n >= 3 {
        for &i in &idx {
            for &j in &idx {
                if j <= i {
                    continue;
                }
                let adjacent = (i + 1) % n == j || (j + 1) % n == i;
                if adjacent {
                    rel(
                        format!("braid[{i},{j}]"),
                        tw(n, vec![Token::T(i), Token::T(j), Token::T(i)]),
                        tw(n, vec![Token::T(j), Token::T(i), Token::T(j)]),
                    );
                } else {
                    rel(
                        format!("commute[{i},{j}]"),
                        tw(n, vec![Token::T(i), Token::T(j)]),
                        tw(n, vec![Token::T(j), Token::T(i)]),
                    );
                }
            }
        }
    }
    for &i in &idx {
        rel(
            format!("pi-conj-t[{i}]"),
            tw(n, vec![Token::Pi, Token::T(i), Token::PiInv]),
            tw(n, vec![Token::T((i + 1) % n)]),
        );
    }
    rel("pi-inverse".into(), tw(n, vec![Token::Pi, Token::PiInv]), DahaWord::one(n));
    rel("pi-inverse-left".into(), tw(n, vec![Token::PiInv, Token::Pi]), DahaWord::one(n));
    let pi = ExtAffineElt::generator(n, AffGen::Pi);
    for j in 1..=n {
        let img = pi.act(&ExtWeight::new(Weight::eps(n, j), 0));
        rel(
            format!("pi-conj-x[{j}]"),
            tw(n, vec![Token::Pi, Token::x(Weight::eps(n, j)), Token::PiInv]),
            tw(n, vec![Token::X(img)]),
        );
    }
    for &i in &idx {
        let s = ExtAffineElt::generator(n, AffGen::S(i));
        let (a, b, cc) = if i == 0 { (n, 1, p.q_pow(-2)) } else { (i, i + 1, F::one()) };
        for j in 1..=n {
            for sign in [1, -1] {
                let l = Weight::eps(n, j).scale(sign);
                let sl = s.act(&ExtWeight::new(l.clone(), 0));
                let lhs =
                    tw(n, vec![Token::T(i), Token::x(l.clone())]).sub(&tw(n, vec![Token::X(sl.clone()), Token::T(i)]));
                // c (x_l - x_{s l}) / (1 - x^{alpha_i}) as an x-polynomial
                let q2 = p.q_pow(-2 * sl.delta);
                let num = LaurentPoly::x(l.clone()).sub(&LaurentPoly::monomial(q2, sl.fin.clone()));
                let quot = num.div_binomial(a, b, &cc).expect("cross relation quotient is exact");
                let rhs = DahaWord::from_x_poly(&quot.scale(&c));
                let sg = if sign > 0 { "+" } else { "-" };
                rel(format!("cross[{i},{sg}eps{j}]"), lhs, rhs);
            }
        }
    }
    for i in 1..=n {
        for j in i..=n {
            let sum = &Weight::eps(n, i) + &Weight::eps(n, j);
            rel(
                format!("x-lattice[{i},{j}]"),
                tw(n, vec![Token::x(Weight::eps(n, i)), Token::x(Weight::eps(n, j))]),
                tw(n, vec![Token::x(sum)]),
            );
        }
        rel(
            format!("x-inverse[{i}]"),
            tw(n, vec![Token::x(Weight::eps(n, i)), Token::x(-&Weight::eps(n, i))]),
            DahaWord::one(n),
        );
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let mut ab = y_word(&Weight::eps(n, i));
            ab.extend(y_word(&Weight::eps(n, j)));
            let mut ba = y_word(&Weight::eps(n, j));
            ba.extend(y_word(&Weight::eps(n, i)));
            rel(format!("y-commute[{i},{j}]"), tw(n, ab), tw(n, ba));
        }
    }
    out
}

/// Check every relation on the monomials of `[-window, window]^n`.
pub fn verify_relations<F: Field>(rep: &Rep<F>, rels: &[Relation<F>], window: i64, name: &str) -> Suite {
    let checks: Vec<Check> = rels
        .par_iter()
        .map(|r| match rep.first_difference(&r.lhs, &r.rhs, window) {
            None => Check::pass(&r.name),
            Some(m) => Check::fail(&r.name, json!({"monomial": LaurentPoly::<F>::x(m).to_string()})),
        })
        .collect();
    let mut s = Suite::new(name);
    s.extend(checks);
    s.detail("window", json!(window));
    s.detail("n", json!(rep.n()));
    s
}

pub fn verify_presentation<F: Field>(rep: &Rep<F>, window: i64) -> Suite {
    verify_relations(rep, &relation_list(rep), window, "daha-presentation")
}

/// The same relations as identities of difference-reflection operators.
pub fn verify_symbolic<F: Field>(rep: &Rep<F>) -> Suite {
    let rels = relation_list(rep);
    let checks: Vec<Check> = rels
        .par_iter()
        .map(|r| {
            let d = rep.word_op(&r.lhs).sub(&rep.word_op(&r.rhs));
            if d.is_zero() {
                Check::pass(&r.name)
            } else {
                Check::fail(&r.name, json!({"residual_terms": d.len()}))
            }
        })
        .collect();
    let mut s = Suite::new("daha-presentation-symbolic");
    s.extend(checks);
    s.detail("n", json!(rep.n()));
    s
}

/// Images of all relations under a symmetry, checked in the original
/// representation. `conj` is the induced map on scalars.
pub fn verify_symmetry_images<F: Field>(
    rep: &Rep<F>,
    kind: Symmetry,
    conj: impl Fn(&F) -> F + Copy,
    window: i64,
) -> Suite {
    let rels: Vec<Relation<F>> = relation_list(rep)
        .into_iter()
        .map(|r| Relation {
            name: r.name,
            lhs: apply_symmetry(kind, &r.lhs, conj),
            rhs: apply_symmetry(kind, &r.rhs, conj),
        })
        .collect();
    let name = match kind {
        Symmetry::Fourier => "fourier-images",
        Symmetry::Im => "im-images",
    };
    verify_relations(rep, &rels, window, name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::daha::Mutation;
    use crate::params::Params;

    #[test]
    fn n2_relations_pass() {
        let rep = Rep::new(Params::generic(2));
        let s = verify_presentation(&rep, 2);
        assert!(s.all_pass(), "{:?}", s.failures().collect::<Vec<_>>());
        let s = verify_symbolic(&rep);
        assert!(s.all_pass(), "{:?}", s.failures().collect::<Vec<_>>());
    }

    #[test]
    fn mutated_t1_fails_quadratic_at_x1() {
        let rep = Rep::mutated(Params::generic(2), Mutation::PlainT1);
        let s = verify_presentation(&rep, 3);
        let q = s.checks.iter().find(|c| c.name == "quadratic[1]").unwrap();
        assert!(!q.pass);
        assert_eq!(q.witness.as_ref().unwrap()["monomial"], "x1");
    }

    #[test]
    fn symmetry_images_are_relations() {
        use crate::scalar::QTScalar;
        for n in 1..=2 {
            let rep = Rep::new(Params::generic(n));
            for kind in [Symmetry::Fourier, Symmetry::Im] {
                let (sq, st) = kind.param_signs();
                let s = verify_symmetry_images(&rep, kind, |c: &QTScalar| c.flip(sq, st), 1);
                assert!(s.all_pass(), "{kind:?} n={n}: {:?}", s.failures().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn rank_one_is_trivially_consistent() {
        let rep = Rep::new(Params::generic(1));
        let s = verify_presentation(&rep, 3);
        assert!(s.all_pass());
        assert!(!s.checks.iter().any(|c| c.name.starts_with("quadratic")));
    }
}

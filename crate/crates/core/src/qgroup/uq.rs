//! Two explicit `U_q(gl_n)` modules with basis indexed by weights `mu`:
//! `W_t` (basis `a_mu`) and the quantum torus (basis `c_{1 mu}`), in the
//! dotted normalization `e' = (q - q^-1) e`, `f' = (q - q^-1) f`.

use super::rmatrix::{qdiff, qpow};
use crate::report::{Check, Suite};
use crate::scalar::{Field, QTScalar};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Finitely supported combination of basis vectors indexed by weights.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WtVector(pub BTreeMap<Vec<i64>, QTScalar>);

impl WtVector {
    pub fn basis(mu: Vec<i64>) -> Self {
        WtVector(BTreeMap::from([(mu, QTScalar::one())]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_term(&mut self, mu: Vec<i64>, c: QTScalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(mu.clone()).or_insert_with(QTScalar::zero);
        *e = e.add_ref(&c);
        if e.is_zero() {
            self.0.remove(&mu);
        }
    }

    pub fn axpy(&mut self, c: &QTScalar, o: &WtVector) {
        for (mu, x) in &o.0 {
            self.add_term(mu.clone(), c.mul_ref(x));
        }
    }

    pub fn sub(&self, o: &WtVector) -> WtVector {
        let mut r = self.clone();
        r.axpy(&QTScalar::from_i64(-1), o);
        r
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(|(mu, c)| json!({"mu": mu, "c": c.to_string()})).collect())
    }
}

/// Generators acting on the models; indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UqGen {
    /// `e'_i`, simple root `eps_i - eps_{i+1}`.
    E(usize),
    F(usize),
    K(Vec<i64>),
    /// `c_{1 lambda}`.
    C(Vec<i64>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UqModel {
    Wt,
    Torus,
}

impl UqModel {
    pub fn name(self) -> &'static str {
        match self {
            UqModel::Wt => "wt",
            UqModel::Torus => "torus",
        }
    }
}

/// Deliberate breakage for negative tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UqMutation {
    /// `f'` on `W_t` loses its `t^{-+1}` factors.
    DropTFactor,
}

#[derive(Clone, Debug)]
pub struct UqRep {
    pub model: UqModel,
    pub n: usize,
    pub mutation: Option<UqMutation>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `lambda~ . nu` with `lambda~ = sum_{j>1} lambda_j omega_{j-1}`.
fn tilde_dot(lambda: &[i64], nu: &[i64]) -> i64 {
    (1..lambda.len()).map(|j| lambda[j] * nu[..j].iter().sum::<i64>()).sum()
}

fn alpha(n: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut a = vec![0; n];
    a[i] = sign;
    a[i + 1] = -sign;
    a
}

fn shifted(mu: &[i64], by: &[i64]) -> Vec<i64> {
    mu.iter().zip(by).map(|(a, b)| a + b).collect()
}

/// `q^a t^-b - q^-a t^b`.
fn qt_diff(a: i64, b: i32) -> QTScalar {
    QTScalar::monomial(1, a as i32, -b).sub_ref(&QTScalar::monomial(1, -a as i32, b))
}

impl UqRep {
    pub fn new(model: UqModel, n: usize) -> Self {
        UqRep { model, n, mutation: None }
    }

    /// Image of one basis vector.
    fn act_basis(&self, g: &UqGen, mu: &[i64]) -> (Vec<i64>, QTScalar) {
        let n = self.n;
        match (self.model, g) {
            (_, UqGen::K(l)) => (mu.to_vec(), qpow(dot(l, mu) as i32)),
            (UqModel::Wt, UqGen::E(i)) => (shifted(mu, &alpha(n, *i, 1)), qt_diff(mu[i + 1] + 1, 1)),
            (UqModel::Wt, UqGen::F(i)) => {
                let tb = if self.mutation == Some(UqMutation::DropTFactor) { 0 } else { 1 };
                (shifted(mu, &alpha(n, *i, -1)), qt_diff(mu[*i] + 1, tb))
            }
            (UqModel::Wt, UqGen::C(l)) => {
                let omega = vec![1; n];
                let e = tilde_dot(l, &shifted(mu, &omega));
                (shifted(mu, l), QTScalar::monomial(1, e as i32, -(tilde_dot(l, &omega) as i32)))
            }
            // x_i x_{i+1}^-1 (y_{i+1} - y_{i+1}^-1)
            (UqModel::Torus, UqGen::E(i)) => (shifted(mu, &alpha(n, *i, 1)), qt_diff(mu[i + 1], 0)),
            // x_i^-1 x_{i+1} (y_i - y_i^-1)
            (UqModel::Torus, UqGen::F(i)) => (shifted(mu, &alpha(n, *i, -1)), qt_diff(mu[*i], 0)),
            // x_lambda y_{lambda~}
            (UqModel::Torus, UqGen::C(l)) => (shifted(mu, l), qpow(tilde_dot(l, mu) as i32)),
        }
    }

    pub fn act(&self, g: &UqGen, v: &WtVector) -> WtVector {
        let mut out = WtVector::default();
        for (mu, c) in &v.0 {
            let (nu, s) = self.act_basis(g, mu);
            out.add_term(nu, c.mul_ref(&s));
        }
        out
    }

    /// Applies a word, rightmost generator first.
    pub fn act_word(&self, w: &[UqGen], v: &WtVector) -> WtVector {
        w.iter().rev().fold(v.clone(), |acc, g| self.act(g, &acc))
    }

    fn eval(&self, terms: &[(QTScalar, Vec<UqGen>)], v: &WtVector) -> WtVector {
        let mut out = WtVector::default();
        for (c, w) in terms {
            out.axpy(c, &self.act_word(w, v));
        }
        out
    }
}

/// A relation `sum c_k w_k = 0` between words.
struct Relation {
    name: String,
    terms: Vec<(QTScalar, Vec<UqGen>)>,
}

fn unit(n: usize, j: usize, s: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[j] = s;
    v
}

fn relations(n: usize) -> Vec<Relation> {
    use UqGen::*;
    let one = QTScalar::one;
    let neg = || QTScalar::from_i64(-1);
    let mut out = Vec::new();
    let mut lambdas: Vec<Vec<i64>> = Vec::new();
    for j in 0..n {
        lambdas.push(unit(n, j, 1));
        lambdas.push(unit(n, j, -1));
    }
    for l in &lambdas {
        for i in 0..n.saturating_sub(1) {
            let p = dot(l, &alpha(n, i, 1)) as i32;
            out.push(Relation {
                name: format!("k{l:?}e{}", i + 1),
                terms: vec![(one(), vec![K(l.clone()), E(i)]), (qpow(p).neg_ref(), vec![E(i), K(l.clone())])],
            });
            out.push(Relation {
                name: format!("k{l:?}f{}", i + 1),
                terms: vec![(one(), vec![K(l.clone()), F(i)]), (qpow(-p).neg_ref(), vec![F(i), K(l.clone())])],
            });
        }
        for m in &lambdas {
            out.push(Relation {
                name: format!("k{l:?}k{m:?}"),
                terms: vec![(one(), vec![K(l.clone()), K(m.clone())]), (neg(), vec![K(shifted(l, m))])],
            });
        }
    }
    out.push(Relation { name: "k0".into(), terms: vec![(one(), vec![K(vec![0; n])]), (neg(), vec![])] });
    for i in 0..n.saturating_sub(1) {
        for j in 0..n.saturating_sub(1) {
            let mut terms = vec![(one(), vec![E(i), F(j)]), (neg(), vec![F(j), E(i)])];
            if i == j {
                terms.push((qdiff().neg_ref(), vec![K(alpha(n, i, 1))]));
                terms.push((qdiff(), vec![K(alpha(n, i, -1))]));
            }
            out.push(Relation { name: format!("[e{},f{}]", i + 1, j + 1), terms });
            if i == j {
                continue;
            }
            let qint = qpow(1).add_ref(&qpow(-1)).neg_ref();
            for (x, gi, gj) in [("e", E(i), E(j)), ("f", F(i), F(j))] {
                let terms = if i.abs_diff(j) == 1 {
                    vec![
                        (one(), vec![gi.clone(), gi.clone(), gj.clone()]),
                        (qint.clone(), vec![gi.clone(), gj.clone(), gi.clone()]),
                        (one(), vec![gj.clone(), gi.clone(), gi.clone()]),
                    ]
                } else {
                    vec![(one(), vec![gi.clone(), gj.clone()]), (neg(), vec![gj.clone(), gi.clone()])]
                };
                out.push(Relation { name: format!("serre-{x}[{},{}]", i + 1, j + 1), terms });
            }
        }
    }
    for i in 0..n {
        for j in 0..i {
            out.push(Relation {
                name: format!("torus[c{},c{}]", i + 1, j + 1),
                terms: vec![
                    (one(), vec![C(unit(n, i, 1)), C(unit(n, j, 1))]),
                    (qpow(1).neg_ref(), vec![C(unit(n, j, 1)), C(unit(n, i, 1))]),
                ],
            });
        }
    }
    for l in &lambdas {
        for j in 0..n {
            let m = unit(n, j, 1);
            out.push(Relation {
                name: format!("k{l:?}c{}", j + 1),
                terms: vec![
                    (one(), vec![K(l.clone()), C(m.clone())]),
                    (qpow(dot(l, &m) as i32).neg_ref(), vec![C(m), K(l.clone())]),
                ],
            });
        }
    }
    out
}

fn grid(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-bound..=bound).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Every relation on every basis vector with `|mu_j| <= bound`.
pub fn uq_relation_check(rep: &UqRep, bound: i64) -> Suite {
    let mut s = Suite::new("uq-relations");
    s.detail("model", json!(rep.model.name()));
    s.detail("n", json!(rep.n));
    s.detail("grid", json!(bound));
    let pts = grid(rep.n, bound);
    s.detail("basis_vectors", json!(pts.len()));
    for r in relations(rep.n) {
        let bad = pts.iter().find_map(|mu| {
            let v = rep.eval(&r.terms, &WtVector::basis(mu.clone()));
            (!v.is_zero()).then(|| json!({"mu": mu, "residual": v.to_json()}))
        });
        s.push(match bad {
            None => Check::pass(r.name),
            Some(w) => Check::fail(r.name, w),
        });
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_formulas() {
        let w = UqRep::new(UqModel::Wt, 2);
        let a0 = WtVector::basis(vec![0, 0]);
        let f = w.act(&UqGen::F(0), &a0);
        let expect = QTScalar::monomial(1, 1, -1).sub_ref(&QTScalar::monomial(1, -1, 1));
        assert_eq!(f, WtVector(BTreeMap::from([(vec![-1, 1], expect)])));
        let k = w.act(&UqGen::K(vec![2, -1]), &WtVector::basis(vec![1, 3]));
        assert_eq!(k, WtVector(BTreeMap::from([(vec![1, 3], qpow(-1))])));
        let ef = w.act_word(&[UqGen::E(0), UqGen::F(0)], &a0);
        let fe = w.act_word(&[UqGen::F(0), UqGen::E(0)], &a0);
        assert_eq!(ef, fe);
    }

    #[test]
    fn both_models_pass() {
        for n in 1..=3 {
            for m in [UqModel::Wt, UqModel::Torus] {
                let s = uq_relation_check(&UqRep::new(m, n), if n == 3 { 1 } else { 2 });
                assert!(s.all_pass(), "{:?}", s.failures().next());
            }
        }
    }

    #[test]
    fn dropping_t_breaks_the_commutator() {
        let rep = UqRep { mutation: Some(UqMutation::DropTFactor), ..UqRep::new(UqModel::Wt, 2) };
        let s = uq_relation_check(&rep, 2);
        let names: Vec<_> = s.failures().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"[e1,f1]"), "{names:?}");
    }
}

//! Quadratic r-matrix Poisson brackets on the entries of `(g, g')`.
//!
//! With `L = g`, `L' = g'` and `R = sum_{i<j} e_ij (x) e_ji + 1/2 sum_i e_ii (x) e_ii`:
//!
//! ```text
//! {L1, L2}  =  R21 L1 L2  - L1 L2 R12 + L1 R12 L2  - L2 R21 L1
//! {L'1, L'2} = R21 L'1 L'2 - L'1 L'2 R12 + L'1 R12 L'2 - L'2 R21 L'1
//! {L1, L'2} =  R21 L1 L'2 + L1 L'2 R21 - L'2 R21 L1 + L1 R12 L'2
//! ```
//!
//! `{L'1, L2}` is fixed by antisymmetry. The mixed bracket carries the
//! overall sign that makes Jacobi hold; the opposite sign is kept as
//! [`MixedForm::OPPOSITE`] for negative tests.

use crate::report::{Check, Suite};
use crate::scalar::{Field, Rational};
use rayon::prelude::*;
use serde_json::json;
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial over `Q` in the `2n^2` entries of `g` and `g'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MPoly {
    nv: usize,
    n: usize,
    terms: BTreeMap<Vec<u16>, Rational>,
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        MPoly { nv: 2 * n * n, n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(vec![0; 2 * n * n], c);
        }
        p
    }

    pub fn var(n: usize, k: usize) -> Self {
        let mut e = vec![0; 2 * n * n];
        e[k] = 1;
        let mut p = Self::zero(n);
        p.terms.insert(e, <Rational as Field>::one());
        p
    }

    /// Index of `g_ij` (`prime = false`) or `g'_ij`, 0-based `i, j`.
    pub fn index(n: usize, prime: bool, i: usize, j: usize) -> usize {
        usize::from(prime) * n * n + i * n + j
    }

    pub fn var_name(n: usize, k: usize) -> String {
        let prime = k >= n * n;
        let r = k % (n * n);
        format!("{}{}{}", if prime { "gp" } else { "g" }, r / n + 1, r % n + 1)
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

    fn add_term(&mut self, e: Vec<u16>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut r = Self::zero(self.n);
        if c.is_zero() {
            return r;
        }
        r.terms = self.terms.iter().map(|(e, v)| (e.clone(), v.mul_ref(c))).collect();
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Rational::from_i64(-1)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let e: Vec<u16> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                r.add_term(e, x.mul_ref(y));
            }
        }
        r
    }

    pub fn derivative(&self, k: usize) -> Self {
        let mut r = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[k] > 0 {
                let mut f = e.clone();
                f[k] -= 1;
                r.add_term(f, c.mul_ref(&Rational::from_i64(e[k] as i64)));
            }
        }
        r
    }

    fn support_vars(&self) -> Vec<usize> {
        (0..self.nv).filter(|&k| self.terms.keys().any(|e| e[k] > 0)).collect()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(
                    |(k, &p)| {
                        if p == 1 {
                            Self::var_name(self.n, k)
                        } else {
                            format!("{}^{p}", Self::var_name(self.n, k))
                        }
                    },
                )
                .collect();
            let one = a == <Rational as Field>::one();
            match (one, mono.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&mono.join("*"))?,
                (false, true) => f.write_str(&crate::scalar::rational_string(&a))?,
                (false, false) => write!(f, "{}*{}", crate::scalar::rational_string(&a), mono.join("*"))?,
            }
        }
        Ok(())
    }
}

use num_traits::Signed;

type PMat = Vec<Vec<MPoly>>;

fn pm_zero(n: usize, d: usize) -> PMat {
    vec![vec![MPoly::zero(n); d]; d]
}

fn pm_mul(a: &PMat, b: &PMat) -> PMat {
    let d = a.len();
    let n = a[0][0].n;
    let mut r = pm_zero(n, d);
    for i in 0..d {
        for k in 0..d {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[k][j].is_zero() {
                    r[i][j] = r[i][j].add(&a[i][k].mul(&b[k][j]));
                }
            }
        }
    }
    r
}

fn pm_lin(terms: &[(i64, &PMat)]) -> PMat {
    let d = terms[0].1.len();
    let n = terms[0].1[0][0].n;
    let mut r = pm_zero(n, d);
    for (c, m) in terms {
        let c = Rational::from_i64(*c);
        for i in 0..d {
            for j in 0..d {
                r[i][j] = r[i][j].add(&m[i][j].scale(&c));
            }
        }
    }
    r
}

/// Tensor index `(a, b)` of `C^n (x) C^n`.
fn ti(n: usize, a: usize, b: usize) -> usize {
    a * n + b
}

/// `R12` and `R21` as constant `n^2 x n^2` matrices.
fn r_matrices(n: usize) -> (PMat, PMat) {
    let d = n * n;
    let mut r12 = pm_zero(n, d);
    let mut r21 = pm_zero(n, d);
    let half = Rational::new(1.into(), 2.into());
    for i in 0..n {
        for j in 0..n {
            // e_ij (x) e_ji has entry 1 at ((i, j), (j, i))
            if i < j {
                r12[ti(n, i, j)][ti(n, j, i)] = MPoly::constant(n, <Rational as Field>::one());
                r21[ti(n, j, i)][ti(n, i, j)] = MPoly::constant(n, <Rational as Field>::one());
            }
        }
        r12[ti(n, i, i)][ti(n, i, i)] = MPoly::constant(n, half.clone());
        r21[ti(n, i, i)][ti(n, i, i)] = MPoly::constant(n, half.clone());
    }
    (r12, r21)
}

/// `L (x) 1` and `1 (x) L` for the entries of `g` or `g'`.
fn embed(n: usize, prime: bool) -> (PMat, PMat) {
    let d = n * n;
    let mut l1 = pm_zero(n, d);
    let mut l2 = pm_zero(n, d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                l1[ti(n, i, k)][ti(n, j, k)] = MPoly::var(n, MPoly::index(n, prime, i, j));
                l2[ti(n, k, i)][ti(n, k, j)] = MPoly::var(n, MPoly::index(n, prime, i, j));
            }
        }
    }
    (l1, l2)
}

/// Brackets of all pairs of coordinate functions.
#[derive(Clone, Debug)]
pub struct BracketTable {
    pub n: usize,
    table: Vec<Vec<MPoly>>,
}

/// Which of `R12`, `R21` enters a term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RSide {
    R12,
    R21,
}

/// Signs and r-matrices of the four terms of `{L1, L'2}`, in the order
/// `R L1 L'2`, `L1 L'2 R`, `L'2 R L1`, `L1 R L'2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MixedForm(pub [(i64, RSide); 4]);

impl MixedForm {
    pub const DEFAULT: MixedForm = MixedForm([(1, RSide::R21), (1, RSide::R21), (-1, RSide::R21), (1, RSide::R12)]);
    /// `-DEFAULT`; fails Jacobi on mixed triples.
    pub const OPPOSITE: MixedForm = MixedForm([(-1, RSide::R21), (-1, RSide::R21), (1, RSide::R21), (-1, RSide::R12)]);
}

/// Build the table from the three matrix formulas.
pub fn poisson_bracket_table(n: usize) -> BracketTable {
    poisson_bracket_table_with(n, MixedForm::DEFAULT)
}

pub fn poisson_bracket_table_with(n: usize, form: MixedForm) -> BracketTable {
    let (r12, r21) = r_matrices(n);
    let (l1, l2) = embed(n, false);
    let (p1, p2) = embed(n, true);
    let quad = |a1: &PMat, a2: &PMat| {
        let t1 = pm_mul(&r21, &pm_mul(a1, a2));
        let t2 = pm_mul(&pm_mul(a1, a2), &r12);
        let t3 = pm_mul(&pm_mul(a1, &r12), a2);
        let t4 = pm_mul(&pm_mul(a2, &r21), a1);
        pm_lin(&[(1, &t1), (-1, &t2), (1, &t3), (-1, &t4)])
    };
    let gg = quad(&l1, &l2);
    let pp = quad(&p1, &p2);
    let mixed = {
        let r = |k: usize| match form.0[k].1 {
            RSide::R12 => &r12,
            RSide::R21 => &r21,
        };
        let t1 = pm_mul(r(0), &pm_mul(&l1, &p2));
        let t2 = pm_mul(&pm_mul(&l1, &p2), r(1));
        let t3 = pm_mul(&pm_mul(&p2, r(2)), &l1);
        let t4 = pm_mul(&pm_mul(&l1, r(3)), &p2);
        let s = |k: usize| form.0[k].0;
        pm_lin(&[(s(0), &t1), (s(1), &t2), (s(2), &t3), (s(3), &t4)])
    };
    let nv = 2 * n * n;
    let mut table = vec![vec![MPoly::zero(n); nv]; nv];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (a, b) = (ti(n, i, k), ti(n, j, l));
                    let gij = MPoly::index(n, false, i, j);
                    let gkl = MPoly::index(n, false, k, l);
                    let pij = MPoly::index(n, true, i, j);
                    let pkl = MPoly::index(n, true, k, l);
                    table[gij][gkl] = gg[a][b].clone();
                    table[pij][pkl] = pp[a][b].clone();
                    table[gij][pkl] = mixed[a][b].clone();
                    table[pkl][gij] = mixed[a][b].scale(&Rational::from_i64(-1));
                }
            }
        }
    }
    BracketTable { n, table }
}

impl BracketTable {
    pub fn generator(&self, a: usize, b: usize) -> &MPoly {
        &self.table[a][b]
    }

    /// `{f, h}` by the Leibniz rule.
    pub fn bracket(&self, f: &MPoly, h: &MPoly) -> MPoly {
        let mut r = MPoly::zero(self.n);
        let hv = h.support_vars();
        for a in f.support_vars() {
            let da = f.derivative(a);
            for &b in &hv {
                let t = &self.table[a][b];
                if t.is_zero() {
                    continue;
                }
                r = r.add(&da.mul(&h.derivative(b)).mul(t));
            }
        }
        r
    }

    pub fn trace_power(&self, prime: bool, a: u32) -> MPoly {
        let n = self.n;
        let m: PMat = (0..n).map(|i| (0..n).map(|j| MPoly::var(n, MPoly::index(n, prime, i, j))).collect()).collect();
        let mut p: PMat = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { MPoly::constant(n, <Rational as Field>::one()) } else { MPoly::zero(n) })
                    .collect()
            })
            .collect();
        for _ in 0..a {
            p = pm_mul(&p, &m);
        }
        (0..n).fold(MPoly::zero(n), |acc, i| acc.add(&p[i][i]))
    }
}

/// Antisymmetry on all generator pairs and Jacobi on all generator triples.
pub fn bracket_suite(t: &BracketTable) -> Suite {
    let n = t.n;
    let nv = 2 * n * n;
    let name = |k| MPoly::var_name(n, k);
    let mut s = Suite::new("poisson-brackets");
    for a in 0..nv {
        for b in a..nv {
            let sum = t.generator(a, b).add(t.generator(b, a));
            let c = format!("antisym[{},{}]", name(a), name(b));
            s.push(if sum.is_zero() { Check::pass(c) } else { Check::fail(c, json!({"residual": sum.to_string()})) });
        }
    }
    let triples: Vec<(usize, usize, usize)> =
        (0..nv).flat_map(|a| (a..nv).flat_map(move |b| (b..nv).map(move |c| (a, b, c)))).collect();
    let vars: Vec<MPoly> = (0..nv).map(|k| MPoly::var(n, k)).collect();
    let checks: Vec<Check> = triples
        .par_iter()
        .map(|&(a, b, c)| {
            let j = t
                .bracket(&vars[a], t.generator(b, c))
                .add(&t.bracket(&vars[b], t.generator(c, a)))
                .add(&t.bracket(&vars[c], t.generator(a, b)));
            let nm = format!("jacobi[{},{},{}]", name(a), name(b), name(c));
            if j.is_zero() {
                Check::pass(nm)
            } else {
                Check::fail(nm, json!({"residual": j.to_string()}))
            }
        })
        .collect();
    s.extend(checks);
    s.detail("n", json!(n));
    s
}

/// `{tr(L^a), tr(L^b)}` for `1 <= a, b <= max`, for `L = g` and `L = g'`.
pub fn rs_report(t: &BracketTable, max: u32) -> Suite {
    let mut s = Suite::new("rs-report");
    let mut values = serde_json::Map::new();
    for (prime, lbl) in [(false, "g"), (true, "gp")] {
        for a in 1..=max {
            for b in a..=max {
                let v = t.bracket(&t.trace_power(prime, a), &t.trace_power(prime, b));
                let nm = format!("{{tr({lbl}^{a}),tr({lbl}^{b})}}");
                values.insert(nm.clone(), json!(v.to_string()));
                s.push(if v.is_zero() { Check::pass(nm) } else { Check::fail(nm, json!({"value": v.to_string()})) });
            }
        }
    }
    s.detail("values", serde_json::Value::Object(values));
    s.detail("n", json!(t.n));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_bracket_identities() {
        let t = poisson_bracket_table(2);
        let g11 = MPoly::index(2, false, 0, 0);
        assert!(t.generator(g11, g11).is_zero());
        let s = bracket_suite(&t);
        assert!(s.all_pass(), "{:?}", s.failures().take(3).collect::<Vec<_>>());
        let r = rs_report(&t, 2);
        assert!(r.all_pass(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn opposite_mixed_sign_breaks_jacobi() {
        let s = bracket_suite(&poisson_bracket_table_with(2, MixedForm::OPPOSITE));
        let f: Vec<_> = s.failures().collect();
        assert!(!f.is_empty());
        assert!(f.iter().all(|c| c.name.starts_with("jacobi") && c.name.contains("gp")));
    }

    #[test]
    fn leibniz_on_products() {
        let t = poisson_bracket_table(2);
        let a = MPoly::var(2, 0);
        let b = MPoly::var(2, 1);
        let c = MPoly::var(2, 5);
        let lhs = t.bracket(&a, &b.mul(&c));
        let rhs = t.bracket(&a, &b).mul(&c).add(&b.mul(&t.bracket(&a, &c)));
        assert_eq!(lhs, rhs);
    }
}

//! Quadratic algebras presented by matrix identities in `R^q`: the
//! reflection algebra on `t_ij` and the double on `l_ij, l'_ij`.

use super::rmatrix::{r21, r_matrix};
use super::sparse::{nullspace, SparseEchelon, SparseVec};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{Check, Suite};
use crate::scalar::{Field, QTScalar};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// `R21 T13 R12 T23 = T23 R21 T13 R12`.
    ReflectionF,
    /// The three families on `L`, `L'`.
    DoubleD,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::ReflectionF => "reflection_F",
            AlgebraKind::DoubleD => "double_D",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "reflection_F" | "reflection" | "F" => Ok(AlgebraKind::ReflectionF),
            "double_D" | "double" | "D" => Ok(AlgebraKind::DoubleD),
            _ => Err(Error::Config(format!("unknown algebra kind `{s}`"))),
        }
    }
}

type FreeEntry = BTreeMap<Vec<usize>, QTScalar>;

/// Square matrix with entries in the free algebra.
struct FreeMat {
    dim: usize,
    data: Vec<FreeEntry>,
}

impl FreeMat {
    fn scalar(m: &Matrix<QTScalar>) -> Self {
        let data = m
            .entries()
            .iter()
            .map(|x| if x.is_zero() { FreeEntry::new() } else { FreeEntry::from([(Vec::new(), x.clone())]) })
            .collect();
        FreeMat { dim: m.rows(), data }
    }

    fn generators(n: usize, offset: usize, slot13: bool) -> Self {
        let dim = n * n;
        let mut data = vec![FreeEntry::new(); dim * dim];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        // T13[(a,b),(c,d)] = delta_bd t_ac; T23[(a,b),(c,d)] = delta_ac t_bd
                        let g = if slot13 { (b == d).then_some(a * n + c) } else { (a == c).then_some(b * n + d) };
                        if let Some(g) = g {
                            data[(a * n + b) * dim + c * n + d].insert(vec![offset + g], QTScalar::one());
                        }
                    }
                }
            }
        }
        FreeMat { dim, data }
    }

    fn mul(&self, o: &Self) -> Self {
        let dim = self.dim;
        let mut data = vec![FreeEntry::new(); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let a = &self.data[i * dim + k];
                if a.is_empty() {
                    continue;
                }
                for j in 0..dim {
                    let b = &o.data[k * dim + j];
                    let out = &mut data[i * dim + j];
                    for (wa, ca) in a {
                        for (wb, cb) in b {
                            let mut w = wa.clone();
                            w.extend(wb);
                            let c = ca.mul_ref(cb);
                            let e = out.entry(w).or_insert_with(QTScalar::zero);
                            *e = e.add_ref(&c);
                        }
                    }
                    out.retain(|_, c| !c.is_zero());
                }
            }
        }
        FreeMat { dim, data }
    }

    fn product(fs: &[&FreeMat]) -> FreeMat {
        let mut it = fs.iter();
        let first = it.next().expect("nonempty product");
        it.fold(FreeMat { dim: first.dim, data: first.data.clone() }, |a, b| a.mul(b))
    }
}

/// Relation vectors over pairs `(a, b) -> a N + b` from `lhs - rhs`.
fn relation_rows(lhs: &FreeMat, rhs: &FreeMat, ngens: usize) -> Vec<SparseVec<QTScalar>> {
    let mut out = Vec::new();
    for (l, r) in lhs.data.iter().zip(&rhs.data) {
        let mut row: SparseVec<QTScalar> = SparseVec::new();
        for (w, c) in l {
            assert_eq!(w.len(), 2, "relations are quadratic");
            row.insert(w[0] * ngens + w[1], c.clone());
        }
        for (w, c) in r {
            let k = w[0] * ngens + w[1];
            let v = row.get(&k).cloned().unwrap_or_else(QTScalar::zero).sub_ref(c);
            if v.is_zero() {
                row.remove(&k);
            } else {
                row.insert(k, v);
            }
        }
        if !row.is_empty() {
            out.push(row);
        }
    }
    out
}

/// Free-algebra word limit for one graded component.
pub const DEFAULT_WORD_LIMIT: usize = 2048;

pub struct QuadraticAlgebra {
    pub kind: AlgebraKind,
    pub n: usize,
    pub labels: Vec<String>,
    /// Independent relation rows over degree-2 words.
    pub relations: Vec<SparseVec<QTScalar>>,
    /// `(family, independent rows contributed)`.
    pub families: Vec<(String, usize)>,
    pub word_limit: usize,
    ideals: BTreeMap<usize, SparseEchelon<QTScalar>>,
}

pub fn build_algebra(kind: AlgebraKind, n: usize) -> Result<QuadraticAlgebra> {
    if n == 0 || n > 3 {
        return Err(Error::Config(format!("quadratic algebras are built for 1 <= n <= 3, got {n}")));
    }
    let r12 = r_matrix(n);
    let r21m = r21(&r12, n);
    let (r12f, r21f) = (FreeMat::scalar(&r12), FreeMat::scalar(&r21m));
    let names =
        |p: &str| (0..n).flat_map(|i| (0..n).map(move |j| format!("{p}{}{}", i + 1, j + 1))).collect::<Vec<_>>();
    let mut families: Vec<(String, Vec<SparseVec<QTScalar>>)> = Vec::new();
    let labels = match kind {
        AlgebraKind::ReflectionF => {
            let ngens = n * n;
            let t13 = FreeMat::generators(n, 0, true);
            let t23 = FreeMat::generators(n, 0, false);
            let lhs = FreeMat::product(&[&r21f, &t13, &r12f, &t23]);
            let rhs = FreeMat::product(&[&t23, &r21f, &t13, &r12f]);
            families.push(("RTRT".into(), relation_rows(&lhs, &rhs, ngens)));
            names("t")
        }
        AlgebraKind::DoubleD => {
            let ngens = 2 * n * n;
            let l13 = FreeMat::generators(n, 0, true);
            let l23 = FreeMat::generators(n, 0, false);
            let lp13 = FreeMat::generators(n, n * n, true);
            let lp23 = FreeMat::generators(n, n * n, false);
            let r21inv = FreeMat::scalar(&r21m.inverse().expect("R^q is invertible"));
            let fam = |a: &FreeMat, b: &FreeMat, c: &FreeMat, d: &FreeMat, e: &FreeMat| {
                (FreeMat::product(&[&r21f, a, &r12f, b]), FreeMat::product(&[c, &r21f, d, e]))
            };
            let (l, r) = fam(&l13, &l23, &l23, &l13, &r12f);
            families.push(("LL".into(), relation_rows(&l, &r, ngens)));
            let (l, r) = fam(&lp13, &lp23, &lp23, &lp13, &r12f);
            families.push(("L'L'".into(), relation_rows(&l, &r, ngens)));
            let (l, r) = fam(&l13, &lp23, &lp23, &l13, &r21inv);
            families.push(("LL'".into(), relation_rows(&l, &r, ngens)));
            let mut v = names("l");
            v.extend(names("lp"));
            v
        }
    };
    let mut ech = SparseEchelon::new();
    let mut relations = Vec::new();
    let mut counts = Vec::new();
    for (name, rows) in families {
        let mut k = 0;
        for row in rows {
            if ech.insert(row.clone()) {
                relations.push(row);
                k += 1;
            }
        }
        counts.push((name, k));
    }
    Ok(QuadraticAlgebra {
        kind,
        n,
        labels,
        relations,
        families: counts,
        word_limit: DEFAULT_WORD_LIMIT,
        ideals: BTreeMap::new(),
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |a, i| a * (n - i) / (i + 1))
}

impl QuadraticAlgebra {
    pub fn ngens(&self) -> usize {
        self.labels.len()
    }

    fn words(&self, d: usize) -> Result<usize> {
        let total = (self.ngens() as u128).pow(d as u32);
        if total > self.word_limit as u128 {
            return Err(Error::ResourceBound(format!("degree {d} has {total} words, limit {}", self.word_limit)));
        }
        Ok(total as usize)
    }

    /// Degree-`d` part of the two-sided ideal generated by the relations.
    fn ideal(&mut self, d: usize) -> Result<&SparseEchelon<QTScalar>> {
        self.words(d)?;
        if !self.ideals.contains_key(&d) {
            let ng = self.ngens();
            let mut ech = SparseEchelon::new();
            if d >= 2 {
                for k in 0..=d - 2 {
                    let right = ng.pow((d - 2 - k) as u32);
                    for prefix in 0..ng.pow(k as u32) {
                        for rel in &self.relations {
                            for suffix in 0..right {
                                let row = rel
                                    .iter()
                                    .map(|(&p, c)| ((prefix * ng * ng + p) * right + suffix, c.clone()))
                                    .collect();
                                ech.insert(row);
                            }
                        }
                    }
                }
            }
            self.ideals.insert(d, ech);
        }
        Ok(&self.ideals[&d])
    }

    /// Dimension of the degree-`d` component.
    pub fn graded_dim(&mut self, d: usize) -> Result<usize> {
        let words = self.words(d)?;
        Ok(words - self.ideal(d)?.rank())
    }

    /// Word indices (base `ngens`) not led by an ideal row.
    pub fn standard_monomials(&mut self, d: usize) -> Result<Vec<usize>> {
        let words = self.words(d)?;
        let ideal = self.ideal(d)?;
        Ok((0..words).filter(|&w| !ideal.is_pivot(w)).collect())
    }

    pub fn normal_form(&mut self, d: usize, v: SparseVec<QTScalar>) -> Result<SparseVec<QTScalar>> {
        Ok(self.ideal(d)?.reduce(v))
    }

    fn commutator(&self, z: &SparseVec<QTScalar>, d: usize, u: usize, du: usize) -> SparseVec<QTScalar> {
        let ng = self.ngens();
        let (su, sd) = (ng.pow(du as u32), ng.pow(d as u32));
        let mut out = SparseVec::new();
        for (&w, c) in z {
            for (k, s) in [(w * su + u, c.clone()), (u * sd + w, c.neg_ref())] {
                let v = out.get(&k).cloned().unwrap_or_else(QTScalar::zero).add_ref(&s);
                if v.is_zero() {
                    out.remove(&k);
                } else {
                    out.insert(k, v);
                }
            }
        }
        out
    }

    /// Degree-`d` elements commuting with every generator modulo the ideal,
    /// written in standard monomials.
    pub fn central_elements(&mut self, d: usize) -> Result<Vec<SparseVec<QTScalar>>> {
        let basis = self.standard_monomials(d)?;
        let ng = self.ngens();
        self.words(d + 1)?;
        let mut rows: BTreeMap<(usize, usize), Vec<QTScalar>> = BTreeMap::new();
        for (col, &w) in basis.iter().enumerate() {
            for g in 0..ng {
                let c = self.commutator(&SparseVec::from([(w, QTScalar::one())]), d, g, 1);
                for (k, v) in self.normal_form(d + 1, c)? {
                    rows.entry((g, k)).or_insert_with(|| vec![QTScalar::zero(); basis.len()])[col] = v;
                }
            }
        }
        let rows: Vec<Vec<QTScalar>> = rows.into_values().collect();
        Ok(nullspace(&rows, basis.len())
            .into_iter()
            .map(|v| basis.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(&w, c)| (w, c)).collect())
            .collect())
    }

    /// Re-checks `z` against every word of length one and two.
    pub fn verify_central(&mut self, z: &SparseVec<QTScalar>, d: usize) -> Result<Check> {
        let ng = self.ngens();
        for du in 1..=2 {
            for u in 0..ng.pow(du as u32) {
                let c = self.commutator(z, d, u, du);
                let r = self.normal_form(d + du, c)?;
                if !r.is_empty() {
                    return Ok(Check::fail(
                        format!("central-reverify[d={d}]"),
                        json!({"word": self.format_word(u, du), "residue": self.format(&r, d + du)}),
                    ));
                }
            }
        }
        Ok(Check::pass(format!("central-reverify[d={d}]")))
    }

    pub fn format_word(&self, mut w: usize, d: usize) -> String {
        if d == 0 {
            return "1".into();
        }
        let ng = self.ngens();
        let mut parts = vec![String::new(); d];
        for k in (0..d).rev() {
            parts[k] = self.labels[w % ng].clone();
            w /= ng;
        }
        parts.join("*")
    }

    /// `c*word + ...` in word order.
    pub fn format(&self, v: &SparseVec<QTScalar>, d: usize) -> String {
        if v.is_empty() {
            return "0".into();
        }
        v.iter()
            .map(|(&w, c)| {
                let word = self.format_word(w, d);
                if c.is_one() {
                    word
                } else {
                    format!("({c})*{word}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// PBW expectation: the dimension of degree-`d` polynomials in `ngens`
    /// commuting variables.
    pub fn expected_dim(&self, d: usize) -> u64 {
        binomial((self.ngens() + d - 1) as u64, d as u64)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.name(),
            "n": self.n,
            "generators": self.labels,
            "relations": self.relations.iter().map(|r| self.format(r, 2)).collect::<Vec<_>>(),
            "families": self.families.iter().map(|(f, k)| json!({"family": f, "independent": k})).collect::<Vec<_>>(),
        })
    }
}

/// One row of a Hilbert-series report.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HilbertRow {
    pub degree: usize,
    pub dimension: usize,
    pub expected: u64,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn hilbert_series(a: &mut QuadraticAlgebra, max_d: usize) -> Result<Vec<HilbertRow>> {
    (0..=max_d)
        .map(|d| {
            let dimension = a.graded_dim(d)?;
            let expected = a.expected_dim(d);
            Ok(HilbertRow { degree: d, dimension, expected, matches: dimension as u64 == expected })
        })
        .collect()
}

pub fn hilbert_suite(a: &mut QuadraticAlgebra, max_d: usize) -> Result<Suite> {
    let rows = hilbert_series(a, max_d)?;
    let mut s = Suite::new("hilbert-series");
    s.detail("kind", json!(a.kind.name()));
    s.detail("n", json!(a.n));
    s.detail("series", serde_json::to_value(&rows).expect("serializable"));
    for r in &rows {
        let name = format!("graded-dim[d={}]", r.degree);
        s.push(if r.matches {
            Check::pass(name)
        } else {
            Check::fail(name, json!({"dimension": r.dimension, "expected": r.expected}))
        });
    }
    Ok(s)
}

/// Central elements in degree `d`, each re-verified by commutation. The
/// space is required to be nonzero only for the reflection algebra.
pub fn center_suite(a: &mut QuadraticAlgebra, d: usize) -> Result<Suite> {
    let zs = a.central_elements(d)?;
    let mut s = Suite::new("quadratic-center");
    s.detail("kind", json!(a.kind.name()));
    s.detail("n", json!(a.n));
    s.detail("degree", json!(d));
    s.detail("dimension", json!(zs.len()));
    s.detail("basis", json!(zs.iter().map(|z| a.format(z, d)).collect::<Vec<_>>()));
    if a.kind == AlgebraKind::ReflectionF {
        s.push(if zs.is_empty() {
            Check::fail(format!("center-nonzero[d={d}]"), json!("nullspace is zero"))
        } else {
            Check::pass(format!("center-nonzero[d={d}]"))
        });
    }
    for z in &zs {
        s.push(a.verify_central(z, d)?);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(k: i32) -> QTScalar {
        QTScalar::monomial(1, k, 0)
    }

    #[test]
    fn relation_counts() {
        let a = build_algebra(AlgebraKind::ReflectionF, 1).unwrap();
        assert!(a.relations.is_empty());
        let a = build_algebra(AlgebraKind::ReflectionF, 2).unwrap();
        assert_eq!((a.ngens(), a.relations.len()), (4, 6));
        let d = build_algebra(AlgebraKind::DoubleD, 2).unwrap();
        assert_eq!(d.ngens(), 8);
        assert_eq!(d.families.len(), 3);
        assert!(d.families.iter().all(|(_, k)| *k > 0));
    }

    #[test]
    fn exchange_identities_lie_in_the_relation_span() {
        // the entrywise rewriting of the reflection relations, all i, j, l, m
        let n = 2;
        let mut a = build_algebra(AlgebraKind::ReflectionF, n).unwrap();
        let g = |i: usize, j: usize| i * n + j;
        let w = |x: usize, y: usize| x * n * n + y;
        let c1 = qp(1).sub_ref(&qp(-1));
        let delta = |a: bool| if a { 1 } else { 0 };
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for m in 0..n {
                        let mut v: BTreeMap<usize, QTScalar> = BTreeMap::new();
                        let mut add = |k: usize, c: QTScalar| {
                            let e = v.entry(k).or_insert_with(QTScalar::zero);
                            *e = e.add_ref(&c);
                        };
                        add(w(g(l, m), g(i, j)), qp(delta(m == i) + delta(m == j)));
                        add(w(g(i, j), g(l, m)), qp(delta(i == l) + delta(j == l)).neg_ref());
                        let sgn = delta(i > l) - delta(j > m);
                        let cq = c1.mul_ref(&qp(delta(i == j)));
                        if sgn != 0 {
                            add(w(g(l, j), g(i, m)), cq.mul_ref(&QTScalar::from_i64(-sgn as i64)));
                        }
                        for p in 0..n {
                            if j > p && j == l {
                                add(w(g(i, p), g(p, m)), cq.neg_ref());
                            }
                            if m > p && i == m {
                                add(w(g(l, p), g(p, j)), cq.clone());
                            }
                            if i == j && sgn != 0 && j > p {
                                add(w(g(l, p), g(p, m)), c1.mul_ref(&c1).mul_ref(&QTScalar::from_i64(-sgn as i64)));
                            }
                        }
                        v.retain(|_, c| !c.is_zero());
                        let r = a.normal_form(2, v).unwrap();
                        assert!(r.is_empty(), "i={i} j={j} l={l} m={m}: {}", a.format(&r, 2));
                    }
                }
            }
        }
    }

    #[test]
    fn reflection_hilbert_series() {
        let mut a = build_algebra(AlgebraKind::ReflectionF, 2).unwrap();
        let dims: Vec<usize> = (0..=4).map(|d| a.graded_dim(d).unwrap()).collect();
        assert_eq!(dims, vec![1, 4, 10, 20, 35]);
        a.word_limit = 300;
        assert!(matches!(a.graded_dim(4), Ok(35)));
        assert!(matches!(a.graded_dim(5), Err(Error::ResourceBound(_))));
    }

    #[test]
    fn degree_two_center() {
        let mut a = build_algebra(AlgebraKind::ReflectionF, 2).unwrap();
        let s = center_suite(&mut a, 2).unwrap();
        assert!(s.all_pass(), "{:?}", s.to_json());
        assert_eq!(a.central_elements(0).unwrap().len(), 1);
        let z1 = a.central_elements(1).unwrap();
        assert_eq!(z1.len(), 1);
        assert_eq!(a.central_elements(2).unwrap().len(), 2);
        let mut d = build_algebra(AlgebraKind::DoubleD, 2).unwrap();
        let s = center_suite(&mut d, 2).unwrap();
        assert!(s.all_pass());
        assert_eq!(s.details["dimension"], json!(0));
    }
}

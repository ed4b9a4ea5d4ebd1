//! The deformed Calogero–Moser space: points `(g, g', v, phi)`, the moment
//! map `m_+`, the explicit chart `x_{h,h'}`, invariants and normal forms.
//!
//! Computations live in the `m_+ = 0` model; the commutator model
//! `m_S = zeta^{2l} e` is reached through [`model_transfer`].

mod checks;
mod numeric;
mod poisson;

pub use checks::{random_invertible, random_pair, sample_suite, SampleConfig};
pub use numeric::{diagonalize, numeric_normal_form, NumericPoint, DEFAULT_TOL};

pub use poisson::{
    bracket_suite, poisson_bracket_table, poisson_bracket_table_with, rs_report, BracketTable, MPoly, MixedForm, RSide,
};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{parse_rational, Field, Rational};
use serde_json::{json, Map, Value};

/// `(g, g', v, phi)` with the constant `zeta^{2l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMPoint<F> {
    pub g: Matrix<F>,
    pub gp: Matrix<F>,
    /// Column vector.
    pub v: Vec<F>,
    /// Row vector.
    pub phi: Vec<F>,
    pub zeta2l: F,
}

impl<F: Field> CMPoint<F> {
    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn to_json(&self) -> Value {
        let vs = |v: &[F]| Value::Array(v.iter().map(|x| json!(x.to_string())).collect());
        json!({
            "g": self.g.to_json(),
            "gp": self.gp.to_json(),
            "v": vs(&self.v),
            "phi": vs(&self.phi),
            "zeta2l": self.zeta2l.to_string(),
        })
    }
}

fn parse_scalar(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| Error::Parse(format!("not a rational: {s:?}"))),
        Value::Number(x) => {
            x.as_i64().map(Rational::from_i64).ok_or_else(|| Error::Parse(format!("not an integer: {x}")))
        }
        _ => Err(Error::Parse(format!("expected a scalar, got {v}"))),
    }
}

fn parse_vec(v: &Value, key: &str) -> Result<Vec<Rational>> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse(format!("missing array `{key}`")))?
        .iter()
        .map(parse_scalar)
        .collect()
}

impl CMPoint<Rational> {
    /// Inverse of [`CMPoint::to_json`]; scalars may be strings `a/b` or integers.
    pub fn from_json(v: &Value) -> Result<Self> {
        let vv = parse_vec(v, "v")?;
        let n = vv.len();
        let mat = |key: &str| -> Result<Matrix<Rational>> {
            let e = parse_vec(v, key)?;
            if e.len() != n * n {
                return Err(Error::Parse(format!("`{key}` has {} entries, expected {}", e.len(), n * n)));
            }
            Ok(Matrix::from_rows(e.chunks(n.max(1)).map(|c| c.to_vec()).collect()))
        };
        let phi = parse_vec(v, "phi")?;
        if phi.len() != n {
            return Err(Error::Parse("`phi` and `v` differ in length".into()));
        }
        let zeta2l = parse_scalar(v.get("zeta2l").ok_or_else(|| Error::Parse("missing `zeta2l`".into()))?)?;
        Ok(CMPoint { g: mat("g")?, gp: mat("gp")?, v: vv, phi, zeta2l })
    }
}

/// Diagonal data `(h, h')`, kept sorted by `h`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiagPair<F> {
    pub h: Vec<F>,
    pub hp: Vec<F>,
}

impl<F: Field> DiagPair<F> {
    pub fn new(h: Vec<F>, hp: Vec<F>) -> Self {
        assert_eq!(h.len(), hp.len());
        let mut pairs: Vec<(F, F)> = h.into_iter().zip(hp).collect();
        pairs.sort();
        let (h, hp) = pairs.into_iter().unzip();
        DiagPair { h, hp }
    }

    /// `h` in `H_*`: nonzero entries with `h_i / h_j` never `1` or `zeta^{2l}`.
    pub fn is_star(&self, zeta2l: &F) -> bool {
        if self.h.iter().any(|x| x.is_zero()) {
            return false;
        }
        for (i, a) in self.h.iter().enumerate() {
            for (j, b) in self.h.iter().enumerate() {
                if i != j && (a == b || *a == zeta2l.mul_ref(b)) {
                    return false;
                }
            }
        }
        true
    }
}

fn outer<F: Field>(v: &[F], phi: &[F]) -> Matrix<F> {
    Matrix::column(v).mul(&Matrix::row(phi))
}

/// `m_+ = g g' - zeta^{2l} g' g + v (x) phi`.
pub fn moment_plus<F: Field>(p: &CMPoint<F>) -> Matrix<F> {
    p.g.mul(&p.gp).sub(&p.gp.mul(&p.g).scale(&p.zeta2l)).add(&outer(&p.v, &p.phi))
}

/// `m_S = [g, g'](e + v (x) phi)` with `[g, h] = g^-1 h g h^-1`, on a point
/// given in commutator coordinates `(g, h, v, phi)`.
pub fn moment_s<F: Field>(p: &CMPoint<F>) -> Result<Matrix<F>> {
    let n = p.n();
    let gi = p.g.inverse()?;
    let hi = p.gp.inverse()?;
    let comm = gi.mul(&p.gp).mul(&p.g).mul(&hi);
    Ok(comm.mul(&Matrix::identity(n).add(&outer(&p.v, &p.phi))))
}

/// `(g, h, v, phi) -> (g, h^-1, g h^-1 v, phi)`.
pub fn model_transfer<F: Field>(p: &CMPoint<F>) -> Result<CMPoint<F>> {
    let hi = p.gp.inverse()?;
    let v = p.g.mul(&hi).mul(&Matrix::column(&p.v)).entries().to_vec();
    Ok(CMPoint { g: p.g.clone(), gp: hi, v, phi: p.phi.clone(), zeta2l: p.zeta2l.clone() })
}

/// Inverse of [`model_transfer`]: `(g, g', v, phi) -> (g, g'^-1, g'^-1 g^-1 v, phi)`.
pub fn model_transfer_inverse<F: Field>(p: &CMPoint<F>) -> Result<CMPoint<F>> {
    let h = p.gp.inverse()?;
    let gi = p.g.inverse()?;
    let v = h.mul(&gi).mul(&Matrix::column(&p.v)).entries().to_vec();
    Ok(CMPoint { g: p.g.clone(), gp: h, v, phi: p.phi.clone(), zeta2l: p.zeta2l.clone() })
}

/// The point `x_{h,h'}`: `g = diag(h)`, `g'_{ij} = h'_i h_j / (zeta^{2l} h_j - h_i)`,
/// `v = h'`, `phi = h`.
pub fn point_from_pair<F: Field>(d: &DiagPair<F>, zeta2l: &F) -> Result<CMPoint<F>> {
    let n = d.h.len();
    if !d.is_star(zeta2l) {
        return Err(Error::SingularParameter("h is not in H_*".into()));
    }
    let mut gp = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let den = zeta2l.mul_ref(&d.h[j]).sub_ref(&d.h[i]);
            let num = d.hp[i].mul_ref(&d.h[j]);
            let e = num
                .div_ref(&den)
                .ok_or_else(|| Error::SingularParameter(format!("zeta^2l h_{} = h_{}", j + 1, i + 1)))?;
            gp.set(i, j, e);
        }
    }
    Ok(CMPoint { g: Matrix::diag(&d.h), gp, v: d.hp.clone(), phi: d.h.clone(), zeta2l: zeta2l.clone() })
}

/// `(a g a^-1, a g' a^-1, a v, phi a^-1)`.
pub fn g_act<F: Field>(a: &Matrix<F>, p: &CMPoint<F>) -> Result<CMPoint<F>> {
    let ai = a.inverse()?;
    Ok(CMPoint {
        g: a.mul(&p.g).mul(&ai),
        gp: a.mul(&p.gp).mul(&ai),
        v: a.mul(&Matrix::column(&p.v)).entries().to_vec(),
        phi: Matrix::row(&p.phi).mul(&ai).entries().to_vec(),
        zeta2l: p.zeta2l.clone(),
    })
}

/// `(g', g, -zeta^{-2l} v, phi)`, a point for the parameter `zeta^{-2l}`.
pub fn fourier_point<F: Field>(p: &CMPoint<F>) -> Result<CMPoint<F>> {
    let zi = p.zeta2l.inv().ok_or(Error::ZeroInverse)?;
    let c = zi.neg_ref();
    Ok(CMPoint {
        g: p.gp.clone(),
        gp: p.g.clone(),
        v: p.v.iter().map(|x| x.mul_ref(&c)).collect(),
        phi: p.phi.clone(),
        zeta2l: zi,
    })
}

/// Words over `{A, B}` (`A = g`, `B = g'`) of length at most `d`, shortlex.
pub fn words(d: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..d {
        layer = layer.iter().flat_map(|w| [format!("{w}A"), format!("{w}B")]).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn eval_word<F: Field>(p: &CMPoint<F>, w: &str) -> Matrix<F> {
    w.chars().fold(Matrix::identity(p.n()), |m, c| match c {
        'A' => m.mul(&p.g),
        _ => m.mul(&p.gp),
    })
}

/// Invariant functions of a point, keyed by word.
///
/// `invariants` hold `tr(m)`, `det(m)`, `det(m)^-1` and `phi(m v)`; the
/// `semi` entries `det(phi m_1, ..., phi m_n)` over `m_i` of length at most
/// one pick up `det(a)^-1` under [`g_act`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord<F> {
    pub invariants: Vec<(String, F)>,
    pub semi: Vec<(String, F)>,
}

impl<F: Field> InvariantRecord<F> {
    pub fn to_json(&self) -> Value {
        let obj = |v: &[(String, F)]| {
            let mut m = Map::new();
            for (k, x) in v {
                m.insert(k.clone(), json!(x.to_string()));
            }
            Value::Object(m)
        };
        json!({"invariants": obj(&self.invariants), "semi_invariants": obj(&self.semi)})
    }

    /// Equal invariants, and semi-invariants equal after scaling by `c`.
    pub fn matches(&self, o: &Self, c: &F) -> bool {
        self.invariants == o.invariants
            && self.semi.len() == o.semi.len()
            && self.semi.iter().zip(&o.semi).all(|((ka, a), (kb, b))| ka == kb && a.mul_ref(c) == *b)
    }
}

pub fn invariants<F: Field>(p: &CMPoint<F>, d: usize) -> InvariantRecord<F> {
    let n = p.n();
    let ws = words(d);
    let mut inv = Vec::new();
    let v = Matrix::column(&p.v);
    let phi = Matrix::row(&p.phi);
    for w in &ws {
        let m = eval_word(p, w);
        let key = if w.is_empty() { "e".to_string() } else { w.clone() };
        inv.push((format!("tr({key})"), m.trace()));
        if !w.is_empty() {
            let det = m.det();
            if let Some(di) = det.inv() {
                inv.push((format!("det({key})^-1"), di));
            }
            inv.push((format!("det({key})"), det));
        }
        inv.push((format!("phi({key} v)"), phi.mul(&m).mul(&v).get(0, 0).clone()));
    }
    let short: Vec<String> = words(1);
    let mut semi = Vec::new();
    for combo in combinations(short.len(), n) {
        let rows: Vec<Vec<F>> = combo.iter().map(|&k| phi.mul(&eval_word(p, &short[k])).entries().to_vec()).collect();
        let names: Vec<&str> =
            combo.iter().map(|&k| if short[k].is_empty() { "e" } else { short[k].as_str() }).collect();
        semi.push((format!("det(phi[{}])", names.join(",")), Matrix::from_rows(rows).det()));
    }
    InvariantRecord { invariants: inv, semi }
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in 0..m {
        for mut rest in combinations(m - first - 1, k - 1) {
            for r in rest.iter_mut() {
                *r += first + 1;
            }
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// `phi` generates the dual space under right multiplication by `g`, `g'`:
/// rank of `{phi m : |m| < 2n}` equals `n`.
pub fn is_cyclic<F: Field>(p: &CMPoint<F>) -> bool {
    let n = p.n();
    if n == 0 {
        return true;
    }
    let phi = Matrix::row(&p.phi);
    let rows: Vec<Vec<F>> = words(2 * n - 1).iter().map(|w| phi.mul(&eval_word(p, w)).entries().to_vec()).collect();
    Matrix::from_rows(rows).rank() == n
}

/// `(h, h')` with `h' = v phi / h`, for a solved point with `g = diag(h)`.
pub fn normal_form<F: Field>(p: &CMPoint<F>) -> Result<DiagPair<F>> {
    if !p.g.is_diagonal() {
        return Err(Error::NonGenericPoint("g is not diagonal".into()));
    }
    let h = p.g.diagonal();
    if let Some(i) = p.phi.iter().position(|x| x.is_zero()) {
        return Err(Error::NonGenericPoint(format!("phi_{} = 0", i + 1)));
    }
    if !DiagPair::new(h.clone(), h.clone()).is_star(&p.zeta2l) {
        return Err(Error::NonGenericPoint("diag(g) is not in H_*".into()));
    }
    if !moment_plus(p).is_zero() {
        return Err(Error::NotOnVariety);
    }
    let hp: Vec<F> = (0..p.n()).map(|i| p.v[i].mul_ref(&p.phi[i]).div_ref(&h[i]).unwrap()).collect();
    Ok(DiagPair::new(h, hp))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn rv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| r(x)).collect()
    }

    #[test]
    fn explicit_points() {
        let p = point_from_pair(&DiagPair::new(rv(&[2]), rv(&[3])), &r(4)).unwrap();
        assert_eq!(p.gp.get(0, 0), &r(1));
        assert!(moment_plus(&p).is_zero());
        let d = DiagPair::new(rv(&[2, 3]), rv(&[1, 4]));
        let p = point_from_pair(&d, &r(5)).unwrap();
        assert!(moment_plus(&p).is_zero());
        // tr(g') = 1/4 + 1
        assert_eq!(p.gp.trace(), Rational::new(5.into(), 4.into()));
        let rec = invariants(&p, 2);
        let get = |k: &str| rec.invariants.iter().find(|(a, _)| a == k).unwrap().1.clone();
        assert_eq!(get("tr(A)"), r(5));
        assert_eq!(get("phi(e v)"), r(2 + 12));
        assert!(matches!(
            point_from_pair(&DiagPair::new(rv(&[1, 5]), rv(&[1, 1])), &r(5)),
            Err(Error::SingularParameter(_))
        ));
        assert!(matches!(
            point_from_pair(&DiagPair::new(rv(&[1, 1]), rv(&[1, 1])), &r(5)),
            Err(Error::SingularParameter(_))
        ));
    }

    #[test]
    fn trivial_points() {
        let n = 2;
        let p = CMPoint {
            g: Matrix::diag(&rv(&[2, 3])),
            gp: Matrix::diag(&rv(&[5, 7])),
            v: rv(&[0, 0]),
            phi: rv(&[0, 0]),
            zeta2l: r(1),
        };
        assert!(moment_plus(&p).is_zero());
        assert!(!is_cyclic(&p));
        let q =
            CMPoint { g: Matrix::identity(n), gp: Matrix::identity(n), v: rv(&[0, 0]), phi: rv(&[1, 0]), zeta2l: r(1) };
        assert!(!is_cyclic(&q));
        let t = model_transfer(&q).unwrap();
        assert_eq!(t, q);
        assert!(moment_plus(&t).is_zero());
        let f = fourier_point(&q).unwrap();
        assert_eq!(f.g, q.gp);
        assert_eq!(f.v, rv(&[0, 0]));
        let p2 = CMPoint { v: rv(&[1, 2]), ..p.clone() };
        let f2 = fourier_point(&p2).unwrap();
        assert_eq!(f2.v, rv(&[-1, -2]));
    }

    #[test]
    fn transfer_identity() {
        let p = point_from_pair(&DiagPair::new(rv(&[2, 3]), rv(&[1, 4])), &r(5)).unwrap();
        let s = model_transfer_inverse(&p).unwrap();
        assert_eq!(moment_s(&s).unwrap(), Matrix::scalar(2, r(5)));
        assert_eq!(model_transfer(&s).unwrap(), p);
        // m_+(transfer(x)) = h^-1 g (m_S(x) - zeta^{2l} e) on a non-solution
        let x = CMPoint { v: rv(&[1, -1]), ..s.clone() };
        let lhs = moment_plus(&model_transfer(&x).unwrap());
        let rhs = x.gp.inverse().unwrap().mul(&x.g).mul(&moment_s(&x).unwrap().sub(&Matrix::scalar(2, r(5))));
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }

    #[test]
    fn normal_form_roundtrip() {
        let d = DiagPair::new(rv(&[3, 2]), rv(&[1, 4]));
        let p = point_from_pair(&d, &r(5)).unwrap();
        assert_eq!(normal_form(&p).unwrap(), d);
        let a = Matrix::diag(&rv(&[7, -2]));
        let q = g_act(&a, &p).unwrap();
        assert_eq!(normal_form(&q).unwrap(), d);
        let bad = CMPoint { phi: rv(&[0, 3]), ..p.clone() };
        assert!(matches!(normal_form(&bad), Err(Error::NonGenericPoint(_))));
        assert!(is_cyclic(&p));
    }

    #[test]
    fn json_roundtrip() {
        let p = point_from_pair(&DiagPair::new(rv(&[2, 3]), rv(&[1, 4])), &r(5)).unwrap();
        assert_eq!(CMPoint::from_json(&p.to_json()).unwrap(), p);
        let bad = json!({"g": ["1"], "gp": ["1", "2"], "v": ["1"], "phi": ["1"], "zeta2l": 2});
        assert!(matches!(CMPoint::from_json(&bad), Err(Error::Parse(_))));
    }

    #[test]
    fn word_enumeration() {
        assert_eq!(words(2), vec!["", "A", "B", "AA", "AB", "BA", "BB"]);
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }
}

use super::zpoly::{self, BPoly};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Integer Laurent polynomial in `q, t`, keyed by `(q exponent, t exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly2(pub(crate) BTreeMap<(i32, i32), BigInt>);

/// Degree-lex with `q` before `t`.
fn deglex(a: &(i32, i32)) -> (i64, i32) {
    (a.0 as i64 + a.1 as i64, a.0)
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2(BTreeMap::new())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, a: i32, b: i32) -> Self {
        let c = c.into();
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert((a, b), c);
        }
        Poly2(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i32, i32), &BigInt)> {
        self.0.iter()
    }

    pub fn as_monomial(&self) -> Option<(&BigInt, (i32, i32))> {
        if self.0.len() == 1 {
            let (k, v) = self.0.iter().next().unwrap();
            Some((v, *k))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut m = self.0.clone();
        for (k, v) in &o.0 {
            let e = m.entry(*k).or_insert_with(BigInt::zero);
            *e += v;
            if e.is_zero() {
                m.remove(k);
            }
        }
        Poly2(m)
    }

    pub fn neg(&self) -> Self {
        Poly2(self.0.iter().map(|(k, v)| (*k, -v)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut m: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        for (ka, va) in &self.0 {
            for (kb, vb) in &o.0 {
                let k = (ka.0 + kb.0, ka.1 + kb.1);
                *m.entry(k).or_insert_with(BigInt::zero) += va * vb;
            }
        }
        m.retain(|_, v| !v.is_zero());
        Poly2(m)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly2(self.0.iter().map(|(k, v)| (*k, v * c)).collect())
    }

    pub fn shift(&self, a: i32, b: i32) -> Self {
        Poly2(self.0.iter().map(|(k, v)| ((k.0 + a, k.1 + b), v.clone())).collect())
    }

    /// Lowest exponents of `q` and `t` separately.
    pub fn min_exps(&self) -> (i32, i32) {
        let a = self.0.keys().map(|k| k.0).min().unwrap_or(0);
        let b = self.0.keys().map(|k| k.1).min().unwrap_or(0);
        (a, b)
    }

    pub fn leading(&self) -> Option<(&(i32, i32), &BigInt)> {
        self.0.iter().max_by_key(|(k, _)| deglex(k))
    }

    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.0.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn div_int(&self, c: &BigInt) -> Self {
        Poly2(self.0.iter().map(|(k, v)| (*k, v / c)).collect())
    }

    /// Substitute `q -> q^sq`, `t -> t^st` with `sq, st` in `{1, -1}`.
    pub fn flip(&self, sq: i32, st: i32) -> Self {
        Poly2(self.0.iter().map(|(k, v)| ((k.0 * sq, k.1 * st), v.clone())).collect())
    }

    /// Dense form after shifting to nonnegative exponents (shift must be
    /// the minimal exponents or smaller).
    pub(crate) fn to_dense(&self, shift: (i32, i32)) -> BPoly {
        let mut out: BPoly = Vec::new();
        for ((a, b), c) in &self.0 {
            let i = (a - shift.0) as usize;
            let j = (b - shift.1) as usize;
            if out.len() <= i {
                out.resize(i + 1, Vec::new());
            }
            if out[i].len() <= j {
                out[i].resize(j + 1, BigInt::zero());
            }
            out[i][j] = c.clone();
        }
        out
    }

    pub(crate) fn from_dense(d: &BPoly, shift: (i32, i32)) -> Self {
        let mut m = BTreeMap::new();
        for (i, u) in d.iter().enumerate() {
            for (j, c) in u.iter().enumerate() {
                if !c.is_zero() {
                    m.insert((i as i32 + shift.0, j as i32 + shift.1), c.clone());
                }
            }
        }
        Poly2(m)
    }

    /// GCD of two polynomials (no monomial factors assumed relevant).
    pub(crate) fn gcd_dense(a: &BPoly, b: &BPoly) -> BPoly {
        zpoly::b_gcd(a, b)
    }

    pub(crate) fn write_terms(&self, f: &mut impl fmt::Write) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(i32, i32)> = self.0.keys().collect();
        keys.sort_by_key(|k| std::cmp::Reverse(deglex(k)));
        for (idx, k) in keys.into_iter().enumerate() {
            let c = &self.0[k];
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mono = mono_string(*k);
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }

    pub fn parse(s: &str) -> Result<Self> {
        Parser { s: s.as_bytes(), i: 0 }.poly()
    }
}

fn mono_string((a, b): (i32, i32)) -> String {
    let mut parts = Vec::new();
    for (v, e) in [("q", a), ("t", b)] {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.i))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i] == b' ' {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn int(&mut self) -> Option<BigInt> {
        let start = self.i;
        if matches!(self.peek(), Some(b'-')) {
            self.i += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.i]).ok()?;
        match txt.parse() {
            Ok(v) => Some(v),
            Err(_) => {
                self.i = start;
                None
            }
        }
    }

    fn poly(&mut self) -> Result<Poly2> {
        let mut acc = Poly2::zero();
        self.ws();
        let mut sign = BigInt::one();
        if self.peek() == Some(b'-') {
            self.i += 1;
            sign = -sign;
        }
        loop {
            self.ws();
            let t = self.term()?;
            acc = acc.add(&t.scale(&sign));
            self.ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                _ => return Err(self.err("expected + or -")),
            }
            self.i += 1;
        }
    }

    fn term(&mut self) -> Result<Poly2> {
        let mut coef = BigInt::one();
        let (mut a, mut b) = (0, 0);
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coef = self.int().ok_or_else(|| self.err("bad integer"))?;
            self.ws();
            if self.peek() == Some(b'*') {
                self.i += 1;
                self.ws();
            } else {
                return Ok(Poly2::constant(coef));
            }
        }
        loop {
            let v = self.peek().ok_or_else(|| self.err("expected q or t"))?;
            if v != b'q' && v != b't' {
                return Err(self.err("expected q or t"));
            }
            self.i += 1;
            let mut e = 1;
            if self.peek() == Some(b'^') {
                self.i += 1;
                let x = self.int().ok_or_else(|| self.err("bad exponent"))?;
                e = i32::try_from(x).map_err(|_| self.err("exponent too large"))?;
            }
            if v == b'q' {
                a += e;
            } else {
                b += e;
            }
            self.ws();
            if self.peek() == Some(b'*') {
                self.i += 1;
                self.ws();
            } else {
                break;
            }
        }
        Ok(Poly2::monomial(coef, a, b))
    }
}

//! Weights of `GL_n`, permutations and the extended affine Weyl group.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `eps_i`, 1-based.
    pub fn eps(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Weight(v)
    }

    /// `alpha_i = eps_i - eps_{i+1}`, 1-based.
    pub fn alpha(n: usize, i: usize) -> Self {
        Self::root(n, i, i + 1)
    }

    /// `eps_i - eps_j`, 1-based.
    pub fn root(n: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] += 1;
        v[j - 1] -= 1;
        Weight(v)
    }

    /// `omega_i = eps_1 + ... + eps_i`.
    pub fn omega(n: usize, i: usize) -> Self {
        Weight((0..n).map(|j| i64::from(j < i)).collect())
    }

    pub fn theta(n: usize) -> Self {
        Self::root(n, 1, n)
    }

    pub fn two_rho(n: usize) -> Self {
        Weight((0..n).map(|j| n as i64 - 1 - 2 * j as i64).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// All weights in `[-b, b]^n`, lexicographic.
    pub fn window(n: usize, b: i64) -> Vec<Weight> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (-b..=b).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(Weight).collect()
    }

    pub fn dot(&self, o: &Weight) -> i64 {
        self.0.iter().zip(&o.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// `self >= o` in dominance order: the difference is a nonnegative sum
    /// of simple roots.
    pub fn dominates(&self, o: &Weight) -> bool {
        let mut acc = 0;
        for (a, b) in self.0.iter().zip(&o.0) {
            acc += a - b;
            if acc < 0 {
                return false;
            }
        }
        acc == 0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn abs_degree(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).sum()
    }

    /// The dominant weight in the `S_n`-orbit.
    pub fn sorted_desc(&self) -> Weight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight(v)
    }

    /// Is `self` a root `eps_i - eps_j`; returns `(i, j)` 1-based.
    pub fn as_root(&self) -> Option<(usize, usize)> {
        let mut pos = None;
        let mut neg = None;
        for (k, &a) in self.0.iter().enumerate() {
            match a {
                0 => {}
                1 if pos.is_none() => pos = Some(k + 1),
                -1 if neg.is_none() => neg = Some(k + 1),
                _ => return None,
            }
        }
        Some((pos?, neg?))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl std::str::FromStr for Weight {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        s.split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|e| crate::Error::Parse(format!("weight {s:?}: {e}"))))
            .collect::<crate::Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Weight plus a multiple of `delta`; `x_delta` is the scalar `q^-2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtWeight {
    pub fin: Weight,
    pub delta: i64,
}

impl ExtWeight {
    pub fn new(fin: Weight, delta: i64) -> Self {
        ExtWeight { fin, delta }
    }

    /// `alpha_0 = delta - theta`.
    pub fn alpha0(n: usize) -> Self {
        ExtWeight { fin: -&Weight::theta(n), delta: 1 }
    }
}

/// Permutation in one-line notation, 0-based: `w(eps_i) = eps_{w[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Simple transposition `s_i` (1-based, `1 <= i < n`).
    pub fn s(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// Transposition of positions `i, j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(i - 1, j - 1);
        p
    }

    /// `eps_i -> eps_{i+1}`, `eps_n -> eps_1`.
    pub fn cycle(n: usize) -> Self {
        Perm((0..n).map(|i| (i + 1) % n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| i == w)
    }

    /// Composition `self * o` (apply `o` first).
    pub fn compose(&self, o: &Perm) -> Perm {
        Perm(o.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0; self.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w] = i;
        }
        Perm(v)
    }

    pub fn act(&self, l: &Weight) -> Weight {
        let mut v = vec![0; l.0.len()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w] = l.0[i];
        }
        Weight(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let mut c = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i] > self.0[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Reduced word in simple reflections (1-based indices), with
    /// `self = s_{w[0]} s_{w[1]} ...`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut out = Vec::new();
        let n = w.n();
        'outer: while !w.is_identity() {
            for i in 1..n {
                let sw = Perm::s(n, i).compose(&w);
                if sw.length() < w.length() {
                    out.push(i);
                    w = sw;
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation has a left descent");
        }
        out
    }

    /// All permutations of `n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// One-line notation, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|w| w + 1).collect()
    }

    pub fn from_one_line(v: &[usize]) -> crate::Result<Self> {
        let n = v.len();
        let mut seen = vec![false; n];
        for &x in v {
            if x == 0 || x > n || seen[x - 1] {
                return Err(crate::Error::Parse(format!("not a permutation: {v:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(v.iter().map(|x| x - 1).collect()))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line().iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Generator of the extended affine Weyl group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffGen {
    /// `s_i`, `0 <= i < n`.
    S(usize),
    Pi,
    PiInv,
}

/// `w * tau_lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElt {
    pub w: Perm,
    pub lambda: Weight,
}

impl ExtAffineElt {
    pub fn identity(n: usize) -> Self {
        ExtAffineElt { w: Perm::identity(n), lambda: Weight::zero(n) }
    }

    pub fn translation(l: Weight) -> Self {
        ExtAffineElt { w: Perm::identity(l.n()), lambda: l }
    }

    pub fn finite(w: Perm) -> Self {
        let n = w.n();
        ExtAffineElt { w, lambda: Weight::zero(n) }
    }

    pub fn generator(n: usize, g: AffGen) -> Self {
        match g {
            AffGen::S(0) => ExtAffineElt { w: Perm::transposition(n, 1, n), lambda: -&Weight::theta(n) },
            AffGen::S(i) => Self::finite(Perm::s(n, i)),
            AffGen::Pi => ExtAffineElt { w: Perm::cycle(n), lambda: Weight::eps(n, n) },
            AffGen::PiInv => Self::generator(n, AffGen::Pi).inverse(),
        }
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// `(w, l)(w', l') = (ww', w'^-1 l + l')`.
    pub fn mul(&self, o: &Self) -> Self {
        ExtAffineElt { w: self.w.compose(&o.w), lambda: &o.w.inverse().act(&self.lambda) + &o.lambda }
    }

    pub fn inverse(&self) -> Self {
        // (w tau_l)^-1 = tau_{-l} w^-1 = w^-1 tau_{-w l}
        ExtAffineElt { w: self.w.inverse(), lambda: -&self.w.act(&self.lambda) }
    }

    /// Action on `X + Z delta`: `(w tau_l)(mu + c delta) = w mu + (c - l.mu) delta`.
    pub fn act(&self, x: &ExtWeight) -> ExtWeight {
        ExtWeight { fin: self.w.act(&x.fin), delta: x.delta - self.lambda.dot(&x.fin) }
    }

    /// Number of positive affine roots sent to negative ones.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut total = 0i64;
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                let alpha = Weight::root(n, a, b);
                let k0 = if a < b { 0 } else { 1 };
                let wa = self.w.act(&alpha);
                let wpos = wa.as_root().map(|(i, j)| i < j).unwrap();
                let la = self.lambda.dot(&alpha);
                let k1 = if wpos { la - 1 } else { la };
                total += (k1 - k0 + 1).max(0);
            }
        }
        total as usize
    }

    /// Greedy left-descent reduced word; ties go to the smallest index. The
    /// word ends with a power of `pi`.
    pub fn reduced_word(&self) -> Vec<AffGen> {
        let n = self.n();
        let mut g = self.clone();
        let mut out = Vec::new();
        let mut len = g.length();
        while len > 0 {
            let mut found = false;
            for i in 0..n {
                let sg = Self::generator(n, AffGen::S(i)).mul(&g);
                let l2 = sg.length();
                if l2 < len {
                    out.push(AffGen::S(i));
                    g = sg;
                    len = l2;
                    found = true;
                    break;
                }
            }
            assert!(found, "no left descent for an element of positive length");
        }
        // length zero: g = pi^k with k = sum of the translation part
        let k = g.lambda.degree();
        let pi = if k >= 0 { AffGen::Pi } else { AffGen::PiInv };
        out.extend(std::iter::repeat_n(pi, k.unsigned_abs() as usize));
        out
    }

    pub fn from_word(n: usize, word: &[AffGen]) -> Self {
        word.iter().fold(Self::identity(n), |acc, g| acc.mul(&Self::generator(n, *g)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_length(g: &ExtAffineElt) -> usize {
        let n = g.n();
        let mut c = 0;
        for a in 1..=n {
            for b in 1..=n {
                if a == b {
                    continue;
                }
                for k in -20..=20i64 {
                    let positive = k > 0 || (k == 0 && a < b);
                    if !positive {
                        continue;
                    }
                    let img = g.act(&ExtWeight::new(Weight::root(n, a, b), k));
                    let (i, j) = img.fin.as_root().unwrap();
                    let neg = img.delta < 0 || (img.delta == 0 && i > j);
                    if neg {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    #[test]
    fn generators_act_correctly() {
        let n = 3;
        let pi = ExtAffineElt::generator(n, AffGen::Pi);
        assert_eq!(pi.act(&ExtWeight::new(Weight::eps(n, 1), 0)), ExtWeight::new(Weight::eps(n, 2), 0));
        assert_eq!(pi.act(&ExtWeight::new(Weight::eps(n, 3), 0)), ExtWeight::new(Weight::eps(n, 1), -1));
        let s0 = ExtAffineElt::generator(n, AffGen::S(0));
        let a0 = ExtWeight::alpha0(n);
        let img = s0.act(&a0);
        assert_eq!(img, ExtWeight::new(Weight::theta(n), -1));
        assert_eq!(s0.mul(&s0), ExtAffineElt::identity(n));
        // pi s_i pi^-1 = s_{i+1}
        for i in 0..n {
            let c = pi.mul(&ExtAffineElt::generator(n, AffGen::S(i))).mul(&pi.inverse());
            assert_eq!(c, ExtAffineElt::generator(n, AffGen::S((i + 1) % n)));
        }
        let pin = (0..n).fold(ExtAffineElt::identity(n), |a, _| a.mul(&pi));
        assert_eq!(pin, ExtAffineElt::translation(Weight::omega(n, n)));
    }

    #[test]
    fn tau_eps1_word() {
        for n in 2..=4 {
            let t = ExtAffineElt::translation(Weight::eps(n, 1));
            assert_eq!(t.length(), n - 1);
            // tau_{eps_1} = pi s_{n-1} ... s_1
            let mut w = vec![AffGen::Pi];
            w.extend((1..n).rev().map(AffGen::S));
            assert_eq!(ExtAffineElt::from_word(n, &w), t);
            let rw = t.reduced_word();
            assert_eq!(rw.len(), n);
            assert_eq!(ExtAffineElt::from_word(n, &rw), t);
        }
    }

    #[test]
    fn length_matches_inversion_count_and_words_roundtrip() {
        for n in 2..=3usize {
            let lambdas = Weight::window(n, 2);
            for w in Perm::all(n) {
                for l in &lambdas {
                    let g = ExtAffineElt { w: w.clone(), lambda: l.clone() };
                    assert_eq!(g.length(), brute_length(&g), "{g:?}");
                    let word = g.reduced_word();
                    let npi = word.iter().filter(|x| !matches!(x, AffGen::S(_))).count();
                    assert_eq!(word.len() - npi, g.length());
                    assert_eq!(ExtAffineElt::from_word(n, &word), g);
                }
            }
        }
    }

    #[test]
    fn perms() {
        assert_eq!(Perm::all(3).len(), 6);
        let w = Perm(vec![2, 0, 1]);
        let rw = w.reduced_word();
        let back = rw.iter().fold(Perm::identity(3), |a, &i| a.compose(&Perm::s(3, i)));
        assert_eq!(back, w);
        assert_eq!(rw.len(), w.length());
        assert!(Weight(vec![2, 0]).dominates(&Weight(vec![1, 1])));
        assert!(!Weight(vec![1, 1]).dominates(&Weight(vec![2, 0])));
    }
}

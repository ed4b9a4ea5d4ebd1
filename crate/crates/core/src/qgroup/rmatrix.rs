//! The R-matrix `R^q` on `V (x) V`, `V = K^n`, and its consistency checks.

use crate::matrix::Matrix;
use crate::report::{Check, Suite};
use crate::scalar::{Field, QTScalar};
use serde_json::json;

pub type RMatrix = Matrix<QTScalar>;

pub(crate) fn qpow(k: i32) -> QTScalar {
    QTScalar::monomial(1, k, 0)
}

/// `q - q^-1`.
pub(crate) fn qdiff() -> QTScalar {
    qpow(1).sub_ref(&qpow(-1))
}

/// `sum_{i,j} q^{delta_ij} e_ii (x) e_jj + (q - q^-1) sum_{i<j} e_ij (x) e_ji`,
/// indexed by `(a, b) -> a n + b`.
pub fn r_matrix(n: usize) -> RMatrix {
    let mut r = Matrix::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            r.set(i * n + j, i * n + j, if i == j { qpow(1) } else { QTScalar::one() });
            if i < j {
                // e_ij (x) e_ji sends e_j (x) e_i to e_i (x) e_j
                r.set(i * n + j, j * n + i, qdiff());
            }
        }
    }
    r
}

pub fn kron<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut m = Matrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    m.set(i * br + k, j * bc + l, x.mul_ref(b.get(k, l)));
                }
            }
        }
    }
    m
}

/// The flip `P(e_a (x) e_b) = e_b (x) e_a`.
pub fn flip<F: Field>(n: usize) -> Matrix<F> {
    let mut p = Matrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            p.set(b * n + a, a * n + b, F::one());
        }
    }
    p
}

/// `R_21 = P R P`.
pub fn r21<F: Field>(r: &Matrix<F>, n: usize) -> Matrix<F> {
    let p = flip(n);
    p.mul(r).mul(&p)
}

fn first_difference<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Option<(usize, usize)> {
    (0..a.rows()).flat_map(|i| (0..a.cols()).map(move |j| (i, j))).find(|&(i, j)| a.get(i, j) != b.get(i, j))
}

/// `R_12 R_13 R_23 = R_23 R_13 R_12` for an `n^2 x n^2` matrix `r`.
pub fn ybe_holds(r: &RMatrix, n: usize) -> Check {
    let id = Matrix::identity(n);
    let r12 = kron(r, &id);
    let r23 = kron(&id, r);
    let p23 = kron(&id, &flip(n));
    let r13 = p23.mul(&r12).mul(&p23);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    let name = format!("ybe[n={n}]");
    match first_difference(&lhs, &rhs) {
        None => Check::pass(name),
        Some((i, j)) => Check::fail(
            name,
            json!({"index": [i, j], "lhs": lhs.get(i, j).to_string(), "rhs": rhs.get(i, j).to_string()}),
        ),
    }
}

/// `(P R - q)(P R + q^-1) = 0`.
pub fn hecke_holds(r: &RMatrix, n: usize) -> Check {
    let pr = flip(n).mul(r);
    let m = n * n;
    let a = pr.sub(&Matrix::scalar(m, qpow(1)));
    let b = pr.add(&Matrix::scalar(m, qpow(-1)));
    let prod = a.mul(&b);
    let name = format!("hecke[n={n}]");
    match first_difference(&prod, &Matrix::zeros(m, m)) {
        None => Check::pass(name),
        Some((i, j)) => Check::fail(name, json!({"index": [i, j], "value": prod.get(i, j).to_string()})),
    }
}

pub fn ybe_check(n: usize) -> Suite {
    let r = r_matrix(n);
    let mut s = Suite::new("r-matrix");
    s.detail("n", json!(n));
    s.push(ybe_holds(&r, n));
    s.push(hecke_holds(&r, n));
    s
}

/// `R^q` with the sign of its first off-diagonal entry flipped.
pub fn mutated_r_matrix(n: usize) -> RMatrix {
    let mut r = r_matrix(n);
    if let Some((i, j)) =
        (0..n * n).flat_map(|i| (0..n * n).map(move |j| (i, j))).find(|&(i, j)| i != j && !r.get(i, j).is_zero())
    {
        let v = r.get(i, j).neg_ref();
        r.set(i, j, v);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ybe_and_hecke() {
        for n in 1..=3 {
            assert!(ybe_check(n).all_pass(), "n={n}");
        }
        let bad = mutated_r_matrix(2);
        let c = ybe_holds(&bad, 2);
        assert!(!c.pass);
        assert!(c.witness.unwrap()["index"].is_array());
    }

    #[test]
    fn inverse_swaps_q() {
        let r = r_matrix(2);
        let ri = r.inverse().unwrap();
        let expect = r_matrix(2).map(|x| x.flip(-1, 1));
        // R^-1 = R(q^-1) on the diagonal, with the off-diagonal term negated
        assert_eq!(ri.diagonal(), expect.diagonal());
        assert_eq!(ri.get(1, 2), &qdiff().neg_ref());
    }
}

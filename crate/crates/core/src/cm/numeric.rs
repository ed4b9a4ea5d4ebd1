//! Floating-point diagonalization ahead of [`normal_form`](super::normal_form).
//!
//! For exploration only: exact results never pass through here.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

pub const DEFAULT_TOL: f64 = 1e-10;

/// A point with `f64` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericPoint {
    pub g: DMatrix<f64>,
    pub gp: DMatrix<f64>,
    pub v: DVector<f64>,
    pub phi: DVector<f64>,
    pub zeta2l: f64,
}

impl NumericPoint {
    pub fn moment_plus(&self) -> DMatrix<f64> {
        &self.g * &self.gp - (&self.gp * &self.g) * self.zeta2l + &self.v * self.phi.transpose()
    }

    /// `(a g a^-1, a g' a^-1, a v, phi a^-1)`.
    pub fn act(&self, a: &DMatrix<f64>) -> Result<Self> {
        let ai = a.clone().try_inverse().ok_or(Error::SingularMatrix)?;
        Ok(NumericPoint {
            g: a * &self.g * &ai,
            gp: a * &self.gp * &ai,
            v: a * &self.v,
            phi: (self.phi.transpose() * &ai).transpose(),
            zeta2l: self.zeta2l,
        })
    }
}

fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |a, x| a.max(x.abs()))
}

/// Conjugates `g` to diagonal form, assuming real simple eigenvalues.
pub fn diagonalize(p: &NumericPoint, tol: f64) -> Result<NumericPoint> {
    let n = p.g.nrows();
    let eig = p.g.clone().eigenvalues().ok_or_else(|| Error::NonGenericPoint("g has complex eigenvalues".into()))?;
    let mut cols = Vec::with_capacity(n);
    for &lambda in eig.iter() {
        let shifted = &p.g - DMatrix::identity(n, n) * lambda;
        let svd = shifted.svd(false, true);
        let vt = svd.v_t.ok_or_else(|| Error::NonGenericPoint("svd failed".into()))?;
        // singular values come sorted in decreasing order
        let k = svd.singular_values.imin();
        cols.push(vt.row(k).transpose());
    }
    let basis = DMatrix::from_columns(&cols);
    let q = p.act(&basis.try_inverse().ok_or_else(|| Error::NonGenericPoint("repeated eigenvalue".into()))?)?;
    let mut off = q.g.clone();
    off.fill_diagonal(0.0);
    if max_abs(&off) > tol * max_abs(&p.g).max(1.0) {
        return Err(Error::NonGenericPoint("g is not diagonalizable within tolerance".into()));
    }
    Ok(q)
}

/// `(h, h')` of a point on the variety, sorted by `h`.
pub fn numeric_normal_form(p: &NumericPoint, tol: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let scale = max_abs(&p.g).max(max_abs(&p.gp)).max(1.0);
    if max_abs(&p.moment_plus()) > tol * scale * scale {
        return Err(Error::NotOnVariety);
    }
    let q = diagonalize(p, tol)?;
    let n = q.g.nrows();
    let mut pairs = Vec::with_capacity(n);
    for i in 0..n {
        let h = q.g[(i, i)];
        if q.phi[i].abs() <= tol || h.abs() <= tol {
            return Err(Error::NonGenericPoint(format!("phi_{} or h_{} vanishes", i + 1, i + 1)));
        }
        pairs.push((h, q.v[i] * q.phi[i] / h));
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pairs.into_iter().unzip())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_pair_after_conjugation() {
        let (h, hp, z) = ([2.0, 3.0], [1.0, 4.0], 5.0);
        let n = 2;
        let gp = DMatrix::from_fn(n, n, |i, j| hp[i] * h[j] / (z * h[j] - h[i]));
        let p = NumericPoint {
            g: DMatrix::from_diagonal(&DVector::from_row_slice(&h)),
            gp,
            v: DVector::from_row_slice(&hp),
            phi: DVector::from_row_slice(&h),
            zeta2l: z,
        };
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 2.0, -1.0, 3.0]);
        let q = p.act(&a).unwrap();
        let (hh, hhp) = numeric_normal_form(&q, 1e-9).unwrap();
        for i in 0..n {
            assert!((hh[i] - h[i]).abs() < 1e-9);
            assert!((hhp[i] - hp[i]).abs() < 1e-9);
        }
        let off = NumericPoint { zeta2l: 4.0, ..q };
        assert_eq!(numeric_normal_form(&off, 1e-9), Err(Error::NotOnVariety));
    }
}

//! Sparse incremental row echelon form over an exact field.

use crate::scalar::Field;
use std::collections::BTreeMap;

pub type SparseVec<F> = BTreeMap<usize, F>;

/// Rows kept in echelon form, each normalized to a leading `1` and keyed
/// by its pivot column.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon<F> {
    pivots: BTreeMap<usize, SparseVec<F>>,
}

fn axpy<F: Field>(row: &mut SparseVec<F>, c: &F, other: &SparseVec<F>) {
    for (k, v) in other {
        let d = c.mul_ref(v);
        match row.get_mut(k) {
            Some(x) => {
                let s = x.sub_ref(&d);
                if s.is_zero() {
                    row.remove(k);
                } else {
                    *x = s;
                }
            }
            None => {
                row.insert(*k, d.neg_ref());
            }
        }
    }
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        SparseEchelon { pivots: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Adds a row; returns `false` if it was already in the span.
    pub fn insert(&mut self, mut row: SparseVec<F>) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let Some((&lead, c)) = row.iter().next() else {
                return false;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let c = c.clone();
                    axpy(&mut row, &c, p);
                }
                None => {
                    let inv = c.inv().expect("nonzero lead");
                    for v in row.values_mut() {
                        *v = v.mul_ref(&inv);
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Remainder of `row` supported on non-pivot columns.
    pub fn reduce(&self, mut row: SparseVec<F>) -> SparseVec<F> {
        row.retain(|_, v| !v.is_zero());
        let mut cursor = 0;
        while let Some((&col, c)) = row.range(cursor..).next() {
            match self.pivots.get(&col) {
                Some(p) => {
                    let c = c.clone();
                    axpy(&mut row, &c, p);
                }
                None => cursor = col + 1,
            }
        }
        row
    }

    pub fn contains(&self, row: SparseVec<F>) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<F>> {
        self.pivots.values()
    }
}

/// Basis of the right nullspace of the dense matrix with rows `rows`.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for x in m[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                #[allow(clippy::needless_range_loop)]
                for j in 0..ncols {
                    let v = m[i][j].sub_ref(&f.mul_ref(&m[r][j]));
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = m[i][f].neg_ref();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn sv(v: &[(usize, i64)]) -> SparseVec<Rational> {
        v.iter().map(|&(k, x)| (k, Rational::from_i64(x))).collect()
    }

    #[test]
    fn echelon_rank_and_reduce() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(sv(&[(0, 1), (1, 1)])));
        assert!(e.insert(sv(&[(1, 1), (2, 1)])));
        assert!(!e.insert(sv(&[(0, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.reduce(sv(&[(0, 1)])), sv(&[(2, 1)]));
        assert!(e.contains(sv(&[(0, 2), (1, 4), (2, 2)])));
    }

    #[test]
    fn nullspace_basis() {
        let r = |v: &[i64]| v.iter().map(|&x| Rational::from_i64(x)).collect::<Vec<_>>();
        let ns = nullspace(&[r(&[1, 2, 3]), r(&[2, 4, 6])], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot = v.iter().zip(r(&[1, 2, 3])).fold(Rational::from_i64(0), |a, (x, y)| a + x * y);
            assert_eq!(dot, Rational::from_i64(0));
        }
    }
}

//! Exact linear algebra over the rationals and generic determinants.

use std::collections::HashMap;

use num_traits::Zero;

use super::qpoly::Q;
use super::Ring;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    rref(&mut m.to_vec()).len()
}

/// A basis of `{x : m x = 0}`.
pub fn kernel(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Q::zero(); cols];
            x[f] = Q::from_integer(1.into());
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -a[r][f].clone();
            }
            x
        })
        .collect()
}

pub fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Determinant by cofactor expansion along rows, memoised on the set of
/// columns still available: `O(2^n n)` ring operations.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    let mut memo: HashMap<u64, R> = HashMap::new();
    fn rec<R: Ring>(m: &[Vec<R>], cols: u64, memo: &mut HashMap<u64, R>) -> R {
        let row = m.len() - cols.count_ones() as usize;
        if row == m.len() {
            return R::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = R::zero();
        let mut before = 0;
        for c in 0..m.len() {
            if cols >> c & 1 == 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = rec(m, cols & !(1 << c), memo);
                let term = m[row][c].mul_ref(&minor);
                acc = if before % 2 == 0 {
                    acc.add_ref(&term)
                } else {
                    acc.sub_ref(&term)
                };
            }
            before += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    rec(m, (1u64 << n) - 1, &mut memo)
}

/// The minor of `m` with row `i` and column `j` removed.
pub fn minor<R: Clone>(m: &[Vec<R>], i: usize, j: usize) -> Vec<Vec<R>> {
    m.iter()
        .enumerate()
        .filter(|&(r, _)| r != i)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(c, _)| c != j)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Column `j` of the adjugate: the signed cofactors `(-1)^{i+j} det M_{j,i}`.
pub fn adjugate_column<R: Ring>(m: &[Vec<R>], j: usize) -> Vec<R> {
    (0..m.len())
        .map(|i| {
            let d = determinant(&minor(m, j, i));
            if (i + j) % 2 == 0 {
                d
            } else {
                R::zero().sub_ref(&d)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::qpoly::QPoly;
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m), 2);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&m, &k[0]).iter().all(Zero::is_zero));
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn determinants() {
        let m: Vec<Vec<QPoly>> = mat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]])
            .into_iter()
            .map(|r| r.into_iter().map(QPoly::constant).collect())
            .collect();
        // 2(12-1) - 1(4-0) = 18
        assert_eq!(determinant(&m), QPoly::constant(q(18)));
        let adj = adjugate_column(&m, 0);
        assert_eq!(adj, [11, -4, 1].map(|x| QPoly::constant(q(x))).to_vec());
    }
}

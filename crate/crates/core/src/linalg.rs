//! Exact linear algebra over the rationals.
//!
//! Row reduction runs fraction-free (Bareiss) on integer rows obtained by
//! clearing denominators row by row, and only the final echelon rows are
//! normalized back to rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<BigRational>>;

fn clear_row(row: &[BigRational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// Fraction-free forward elimination. Returns the echelon rows (first
/// `pivots.len()` rows of the result are nonzero) and the pivot columns.
fn bareiss(mut a: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &pv * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Reduced row echelon form of a rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub ncols: usize,
    /// Nonzero rows, each with a leading 1 at the matching pivot column.
    pub rows: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` modulo the row space; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o -= &f * r;
                }
            }
        }
        out
    }

    /// Add `v` to the row space, keeping the form reduced. Returns false if
    /// `v` was already in the span.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        for x in r.iter_mut() {
            *x /= &lead;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Basis of `{x : A x = 0}` where `A` is the reduced matrix.
    pub fn kernel(&self) -> Matrix {
        let is_pivot = {
            let mut mask = vec![false; self.ncols];
            for &p in &self.pivots {
                mask[p] = true;
            }
            mask
        };
        (0..self.ncols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![BigRational::zero(); self.ncols];
                v[free] = BigRational::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

pub fn rref(rows: &[Vec<BigRational>], ncols: usize) -> Rref {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .map(|r| clear_row(r))
        .collect();
    let (ech, pivots) = bareiss(ints, ncols);
    let mut out: Matrix = ech
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = BigRational::from_integer(row[p].clone());
            row.into_iter()
                .map(|x| BigRational::from_integer(x) / &lead)
                .collect()
        })
        .collect();
    for k in (0..out.len()).rev() {
        let p = pivots[k];
        let (above, rest) = out.split_at_mut(k);
        let row = &rest[0];
        for other in above.iter_mut() {
            if other[p].is_zero() {
                continue;
            }
            let f = other[p].clone();
            for j in p..ncols {
                if !row[j].is_zero() {
                    let d = &f * &row[j];
                    other[j] -= d;
                }
            }
        }
    }
    Rref { ncols, rows: out, pivots }
}

pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_row(r)).collect();
    bareiss(ints, ncols).1.len()
}

/// Right null space basis of `rows` (vectors `x` with `A x = 0`).
pub fn kernel(rows: &[Vec<BigRational>], ncols: usize) -> Matrix {
    rref(rows, ncols).kernel()
}

/// One solution `x` of `A x = b`, or `None` if inconsistent.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.first().map_or(0, Vec::len);
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let red = rref(&aug, n + 1);
    if red.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigRational::one() } else { BigRational::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<BigRational>]) -> Matrix {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Matrix {
    let inner = b.len();
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero())
                        .map(|k| &row[k] * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<BigRational>], v: &[BigRational]) -> Vec<BigRational> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn inverse(a: &[Vec<BigRational>]) -> Result<Matrix> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::BadMatrixShape {
            rows: n,
            cols: a.first().map_or(0, Vec::len),
            expected: n,
        });
    }
    let id = identity(n);
    let aug: Matrix = a
        .iter()
        .zip(&id)
        .map(|(r, e)| r.iter().chain(e).cloned().collect())
        .collect();
    let red = rref(&aug, 2 * n);
    if red.pivots.len() < n || red.pivots[n - 1] >= n {
        return Err(Error::SingularMatrix);
    }
    Ok(red.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn is_zero_matrix(a: &[Vec<BigRational>]) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&a, &k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn rref_with_skipped_columns() {
        let a = m(&[&[0, 2, 4, 1], &[0, 1, 2, 3], &[0, 0, 0, 5]]);
        let r = rref(&a, 4);
        assert_eq!(r.pivots, vec![1, 3]);
        assert_eq!(r.rows, m(&[&[0, 1, 2, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn incremental_insert_matches_batch() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0], &[1, 3, 4, 4], &[0, 0, 0, 1]]);
        let mut inc = rref(&[], 4);
        let added: Vec<bool> = a.iter().map(|r| inc.insert(r)).collect();
        assert_eq!(added, vec![true, false, true, false, true]);
        assert_eq!(inc, rref(&a, 4));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])), Err(Error::SingularMatrix));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let b = vec![BigRational::from_integer(3.into()), BigRational::from_integer(1.into())];
        assert_eq!(solve(&a, &b).unwrap(), m(&[&[2, 1]])[0]);
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(solve(&a, &b).is_none());
    }

    #[test]
    fn fractions_are_handled() {
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let a = vec![
            vec![half.clone(), third.clone()],
            vec![third.clone() * BigRational::from_integer(3.into()), third.clone() * BigRational::from_integer(2.into())],
        ];
        assert_eq!(rank(&a), 1);
    }
}

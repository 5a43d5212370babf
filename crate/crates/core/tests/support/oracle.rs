//! Fraction-free (Bareiss) elimination, independent of the Smith reduction.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use zerocycle_core::IntMatrix;

fn to_rows(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..a.rows()).map(|i| a.row(i).to_vec()).collect()
}

/// Row echelon form by Bareiss; returns the rank and the sign of the row
/// permutation used.
fn bareiss(m: &mut [Vec<BigInt>], cols: usize) -> (usize, i32) {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &m[i][j] * &m[rank][col] - &m[i][col] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    (rank, sign)
}

pub fn bareiss_rank(a: &IntMatrix) -> usize {
    let mut m = to_rows(a);
    bareiss(&mut m, a.cols()).0
}

pub fn bareiss_det(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows(), a.cols(), "determinant of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = to_rows(a);
    let (rank, sign) = bareiss(&mut m, n);
    if rank < n {
        return BigInt::zero();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Whether the columns span the full lattice, by the gcd of the maximal
/// minors. Exponential in the column count; small inputs only.
pub fn spans_by_minors(a: &IntMatrix) -> bool {
    let (r, c) = a.shape();
    if r == 0 {
        return true;
    }
    if c < r {
        return false;
    }
    let mut g = BigInt::zero();
    let mut pick: Vec<usize> = (0..r).collect();
    loop {
        let entries = (0..r)
            .flat_map(|i| pick.iter().map(move |&j| a[(i, j)].clone()))
            .collect();
        let minor = bareiss_det(&IntMatrix::new(r, r, entries).unwrap());
        g = gcd(g, minor);
        if g.is_one() {
            return true;
        }
        let Some(k) = (0..r).rev().find(|&k| pick[k] < c - r + k) else {
            return false;
        };
        pick[k] += 1;
        for t in k + 1..r {
            pick[t] = pick[t - 1] + 1;
        }
    }
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    if a < BigInt::zero() {
        -a
    } else {
        a
    }
}

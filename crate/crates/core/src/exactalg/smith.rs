//! Smith normal form over the integers.
//!
//! The reduction repeatedly moves the entry of smallest absolute value in the
//! trailing submatrix to the pivot position (ties go to the lowest row, then
//! the lowest column), clears its row and column by Euclidean division, and
//! restarts whenever a remainder survives. Once the pivot divides everything
//! below and to the right of it the next diagonal position is processed.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries of `d`, positive, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut residue = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                residue |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                residue |= !d[(t, j)].is_zero();
            }

            if residue {
                // A remainder strictly smaller than the pivot survived: re-pivot.
                let (pi, pj) = smallest_entry(&d, t).expect("pivot row is nonzero");
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }

            // Row and column are clear; enforce divisibility of the rest.
            match first_non_multiple(&d, t) {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let invariant_factors = (0..t).map(|i| d[(i, i)].clone()).collect();
    SmithDecomposition {
        u,
        d,
        v,
        invariant_factors,
    }
}

/// Position of the nonzero entry of least absolute value in `d[t.., t..]`.
fn smallest_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn first_non_multiple(d: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = &d[(t, t)];
    (t + 1..d.rows()).find(|&i| (t + 1..d.cols()).any(|j| !d[(i, j)].is_multiple_of(pivot)))
}

//! Exact integer linear algebra.
//!
//! Everything here is driven by [`smith_normal_form`]: ranks, saturated kernel
//! bases, cokernel shapes and lattice-surjectivity all read off the invariant
//! factors and the unimodular column transform.

mod matrix;
mod smith;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use matrix::{IntMatrix, ShapeError};
pub use smith::{smith_normal_form, SmithDecomposition};

/// Isomorphism type of `ℤ^rows / im(A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CokernelShape {
    pub free_rank: usize,
    /// Invariant factors greater than one, in divisibility order.
    pub torsion: Vec<BigInt>,
}

impl CokernelShape {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

pub fn rank(a: &IntMatrix) -> usize {
    smith_normal_form(a).rank()
}

/// Basis of `ker(A) ∩ ℤ^cols`.
///
/// The vectors are the trailing columns of the unimodular transform `V`, so
/// they span a saturated sublattice. Each vector is sign-normalised so that
/// its first nonzero entry is positive.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (snf.rank()..a.cols())
        .map(|j| {
            let mut v = snf.v.column(j);
            if v.iter()
                .find(|x| !x.is_zero())
                .is_some_and(Signed::is_negative)
            {
                for x in &mut v {
                    *x = -core::mem::take(x);
                }
            }
            v
        })
        .collect()
}

/// Kernel basis packed as the columns of a `cols × nullity` matrix.
pub fn kernel_matrix(a: &IntMatrix) -> IntMatrix {
    IntMatrix::from_columns(a.cols(), &kernel_basis(a))
}

pub fn cokernel_shape(a: &IntMatrix) -> CokernelShape {
    let snf = smith_normal_form(a);
    CokernelShape {
        free_rank: a.rows() - snf.rank(),
        torsion: snf
            .invariant_factors
            .into_iter()
            .filter(|d| !d.is_one())
            .collect(),
    }
}

/// Whether the columns of `columns` generate all of `ℤ^rows`.
pub fn spans_full_lattice(columns: &IntMatrix) -> bool {
    let snf = smith_normal_form(columns);
    snf.rank() == columns.rows() && snf.invariant_factors.iter().all(One::is_one)
}

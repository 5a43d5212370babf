//! The H⁰ Mayer–Vietoris complexes of `Z` and `Z'` and the maps between them.
//!
//! Each copy of the coefficient group (one per component, intersection entry or
//! triple point) is a single free generator, so every map is an integer matrix:
//!
//! ```text
//!   ℤ^{n1} --phi_downstream--> ℤ^{n2} --dQ--> ℤ^{n3}
//!     | nu1                      | eps3
//!   ℤ^{m1} --phi_upstream----> ℤ^{m2}
//! ```
//!
//! Matrices act on column vectors; rows and columns follow the canonical
//! orders of [`Incidence`].

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::config::{GluingConfiguration, Incidence, Violation};
use crate::exactalg::{self, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Upstream,
    Downstream,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexPair {
    /// `n2 × n1`: restriction of component sections to intersection entries.
    pub phi_downstream: IntMatrix,
    /// `n3 × n2`: Čech differential onto the triple points.
    pub dq: IntMatrix,
    /// `m2 × m1`.
    pub phi_upstream: IntMatrix,
    /// `m1 × n1`: pullback along the component map.
    pub nu1: IntMatrix,
    /// `m2 × n2`: pullback of intersection entries to upstream points.
    pub eps3: IntMatrix,
}

pub fn build_complexes(config: &GluingConfiguration) -> Result<ComplexPair, Vec<Violation>> {
    Incidence::new(config).map(|inc| ComplexPair::from_incidence(&inc))
}

impl ComplexPair {
    pub fn from_incidence(inc: &Incidence) -> Self {
        let k = inc.counts();
        let one = BigInt::one();
        let minus = -BigInt::one();

        let mut phi_downstream = IntMatrix::zeros(k.n2, k.n1);
        for (row, e) in inc.entries.iter().enumerate() {
            phi_downstream[(row, e.components[0])] = one.clone();
            phi_downstream[(row, e.components[1])] = minus.clone();
        }

        let mut dq = IntMatrix::zeros(k.n3, k.n2);
        for (row, t) in inc.triples.iter().enumerate() {
            let [ci, cj, ck] = t.classes;
            let col = |a, b| {
                inc.entry_of_classes(a, b)
                    .expect("triple pairs are entries")
            };
            dq[(row, col(cj, ck))] = one.clone();
            dq[(row, col(ci, ck))] = minus.clone();
            dq[(row, col(ci, cj))] = one.clone();
        }

        let mut phi_upstream = IntMatrix::zeros(k.m2, k.m1);
        let mut eps3 = IntMatrix::zeros(k.m2, k.n2);
        for (row, p) in inc.points.iter().enumerate() {
            let [r, s] = p.components;
            // Signs follow the downstream order of the images; ties (node
            // pairs) fall back to the upstream order.
            let key = |c: usize| (inc.sheet[c], c);
            let (lo, hi) = if key(r) < key(s) { (r, s) } else { (s, r) };
            phi_upstream[(row, lo)] = one.clone();
            phi_upstream[(row, hi)] = minus.clone();
            if let Some(e) = inc.entry_of_classes(p.classes[0], p.classes[1]) {
                eps3[(row, e)] = one.clone();
            }
        }

        let mut nu1 = IntMatrix::zeros(k.m1, k.n1);
        for (r, &i) in inc.sheet.iter().enumerate() {
            nu1[(r, i)] = one.clone();
        }

        Self {
            phi_downstream,
            dq,
            phi_upstream,
            nu1,
            eps3,
        }
    }

    pub fn named_blocks(&self) -> [(&'static str, &IntMatrix); 5] {
        [
            ("phi_downstream", &self.phi_downstream),
            ("dQ", &self.dq),
            ("phi_upstream", &self.phi_upstream),
            ("nu1", &self.nu1),
            ("eps3", &self.eps3),
        ]
    }

    /// Matrix dump: per block a header `name rows cols` followed by one line of
    /// space-separated integers per row.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (name, m) in self.named_blocks() {
            let _ = writeln!(out, "{name} {} {}", m.rows(), m.cols());
            let _ = write!(out, "{m}");
        }
        out
    }
}

/// Rank of `H⁰(Q) = ker(dQ)`, i.e. `n2 − n3`.
///
/// Panics if `dQ` is not surjective over ℤ: every triple point owns its three
/// entries, so a failure means the model itself is broken.
pub fn h0_q_rank(pair: &ComplexPair) -> usize {
    assert!(
        exactalg::spans_full_lattice(&pair.dq),
        "dQ is not surjective over the integers"
    );
    pair.dq.cols() - pair.dq.rows()
}

/// Rank of the kernel of `phi` on the given side (one per connected piece).
pub fn h0_kernel_rank(pair: &ComplexPair, side: Side) -> usize {
    let phi = match side {
        Side::Upstream => &pair.phi_upstream,
        Side::Downstream => &pair.phi_downstream,
    };
    phi.cols() - exactalg::rank(phi)
}

/// `eps3 · phi_downstream = phi_upstream · nu1` and `dQ · phi_downstream = 0`.
pub fn check_commutativity(pair: &ComplexPair) -> bool {
    let square = pair.eps3.mul(&pair.phi_downstream) == pair.phi_upstream.mul(&pair.nu1);
    let complex = pair.dq.mul(&pair.phi_downstream).is_zero();
    square && complex
}

/// Number of zero rows of `eps3`, which equals the number of upstream points
/// glued onto node pairs.
pub fn eps3_zero_rows(pair: &ComplexPair) -> usize {
    (0..pair.eps3.rows())
        .filter(|&i| pair.eps3.row(i).iter().all(Zero::is_zero))
        .count()
}

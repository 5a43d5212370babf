//! Finite-dimensionality criteria for zero cycles on the glued surface.
//!
//! The comparison runs along the two rows of the H⁰/H¹ ladder
//!
//! ```text
//!   ℤ^{n1} --Φ--> ℤ^{n2-n3} --> SK₁(Z)  --> ⊕ H¹(Z_i)  --> 0
//!     | nu1         | eps3        | ε₄        | ε₅
//!   ℤ^{m1} --Φ'-> ℤ^{m2}    --> SK₁(Z') --> ⊕ H¹(Z'_r) --> 0
//! ```
//!
//! `ε₄` is never materialised. Its cokernel is assembled from the K₂ part
//! (generation of `ℤ^{m2}` by `eps3` and `Φ'`) and the units part (the
//! cokernel of `nu1`).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::complexes::{h0_kernel_rank, h0_q_rank, ComplexPair, Side};
use crate::config::{Counts, GluingConfiguration, Incidence, Violation};
use crate::exactalg::{self, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CriterionError {
    /// The K₂-part obstruction is unresolved, so the cokernel rank is not
    /// meaningful.
    GenerationFails,
    RowCountMismatch {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for CriterionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CriterionError::GenerationFails => {
                f.write_str("im(eps3) and im(phi_upstream) do not generate the upstream entries")
            }
            CriterionError::RowCountMismatch { expected, found } => {
                write!(f, "expected {expected} rows, found {found}")
            }
        }
    }
}

/// `(m1 − m2, n1 − n2 + n3, m1 − m2 ≥ n1 − n2 + n3)`.
pub fn numerical_criterion(counts: &Counts) -> (i64, i64, bool) {
    let c = |x: usize| i64::try_from(x).expect("count fits in i64");
    let lhs = c(counts.m1) - c(counts.m2);
    let rhs = c(counts.n1) - c(counts.n2) + c(counts.n3);
    (lhs, rhs, lhs >= rhs)
}

/// `[eps3 · K | phi_upstream]` where the columns of `K` are a saturated basis
/// of `ker dQ`.
pub fn generation_matrix(pair: &ComplexPair) -> IntMatrix {
    let kernel = exactalg::kernel_matrix(&pair.dq);
    pair.eps3.mul(&kernel).hconcat(&pair.phi_upstream)
}

/// Whether `im(eps3|ker dQ)` and `im(phi_upstream)` generate `ℤ^{m2}`.
pub fn generation_check(pair: &ComplexPair) -> bool {
    exactalg::spans_full_lattice(&generation_matrix(pair))
}

/// Ranks of the two pieces of `SK₁`: the cokernel of `Φ` into H⁰ of the
/// intersection sheaf, and one unit generator per component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sk1Presentation {
    pub k2_part_rank: usize,
    pub units_part_rank: usize,
}

pub fn sk1_presentation(pair: &ComplexPair, side: Side) -> Sk1Presentation {
    match side {
        Side::Upstream => Sk1Presentation {
            k2_part_rank: pair.phi_upstream.rows() - exactalg::rank(&pair.phi_upstream),
            units_part_rank: pair.phi_upstream.cols(),
        },
        Side::Downstream => Sk1Presentation {
            k2_part_rank: h0_q_rank(pair) - exactalg::rank(&pair.phi_downstream),
            units_part_rank: pair.phi_downstream.cols(),
        },
    }
}

/// Free rank of the units part of `coker(SK₁(Z) → SK₁(Z'))`, i.e. `m1 − rank(nu1)`.
pub fn sk1_coker_units_rank(pair: &ComplexPair) -> Result<usize, CriterionError> {
    if !generation_check(pair) {
        return Err(CriterionError::GenerationFails);
    }
    Ok(pair.nu1.rows() - exactalg::rank(&pair.nu1))
}

/// Whether the columns of `nu1` together with `extra_generators` span `ℤ^{m1}`.
pub fn h1_span_check(
    pair: &ComplexPair,
    extra_generators: &IntMatrix,
) -> Result<bool, CriterionError> {
    if extra_generators.rows() != pair.nu1.rows() {
        return Err(CriterionError::RowCountMismatch {
            expected: pair.nu1.rows(),
            found: extra_generators.rows(),
        });
    }
    Ok(exactalg::spans_full_lattice(
        &pair.nu1.hconcat(extra_generators),
    ))
}

/// Rational dimensions entering the structure-sheaf comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StructureSheafH1 {
    /// `h¹(O_Z)`, including one class per node pair.
    pub h1_downstream: usize,
    /// `h¹(O_Z')`.
    pub h1_upstream: usize,
    /// Kernel of `coker(nu1) → coker(eps3|ker dQ)`, the map induced by
    /// `phi_upstream`. When both curves are connected this is the kernel of
    /// `H¹(O_Z) → H¹(O_Z')`; node classes map isomorphically and do not
    /// contribute.
    pub kernel: usize,
}

pub fn structure_sheaf_h1(pair: &ComplexPair, inc: &Incidence) -> StructureSheafH1 {
    let rank = exactalg::rank;
    let w = pair.eps3.mul(&exactalg::kernel_matrix(&pair.dq));
    let phi_up = &pair.phi_upstream;

    let rank_phi_up = rank(phi_up);
    let rank_w = rank(&w);
    let intersection = rank_phi_up + rank_w - rank(&phi_up.hconcat(&w));
    let kernel = (phi_up.cols() - rank_phi_up) + intersection - rank(&pair.nu1);

    let h0_q = pair.dq.cols() - rank(&pair.dq);
    StructureSheafH1 {
        h1_downstream: h0_q - rank(&pair.phi_downstream) + inc.node_pairs.len(),
        h1_upstream: phi_up.rows() - rank_phi_up,
        kernel,
    }
}

pub fn structure_sheaf_h1_kernel(pair: &ComplexPair, inc: &Incidence) -> usize {
    structure_sheaf_h1(pair, inc).kernel
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    FiniteDimensional,
    NotEstablished,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::FiniteDimensional => "FiniteDimensional",
            Verdict::NotEstablished => "NotEstablished",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One checked quantity: which statement it belongs to, what was measured and
/// the value found.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceEntry {
    pub tag: &'static str,
    pub quantity: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CriterionReport {
    pub counts: Counts,
    pub inequality_lhs: i64,
    pub inequality_rhs: i64,
    pub inequality_holds: bool,
    pub generation_holds: bool,
    /// `None` when generation fails.
    pub sk1_coker_units_rank: Option<usize>,
    pub structure_h1_kernel: usize,
    pub verdict: Verdict,
    pub trace: Vec<TraceEntry>,
}

pub fn full_verdict(
    config: &GluingConfiguration,
    normalization_finite_dimensional: bool,
) -> Result<CriterionReport, Vec<Violation>> {
    let inc = Incidence::new(config)?;
    Ok(report_for(&inc, normalization_finite_dimensional))
}

pub fn report_for(inc: &Incidence, normalization_finite_dimensional: bool) -> CriterionReport {
    let counts = inc.counts();
    let pair = ComplexPair::from_incidence(inc);
    let mut trace = Vec::new();
    let mut note = |tag: &'static str, quantity: &str, value: String| {
        trace.push(TraceEntry {
            tag,
            quantity: quantity.to_string(),
            value,
        })
    };

    note(
        "counts",
        "n1 n2 n3 m1 m2",
        format!(
            "{} {} {} {} {}",
            counts.n1, counts.n2, counts.n3, counts.m1, counts.m2
        ),
    );
    note(
        "h0-intersections",
        "rank H0(Q) = n2 - n3",
        h0_q_rank(&pair).to_string(),
    );
    for (side, name) in [(Side::Downstream, "Z"), (Side::Upstream, "Z'")] {
        note(
            "h0-kernel",
            &format!("rank ker phi on {name}"),
            h0_kernel_rank(&pair, side).to_string(),
        );
    }
    for (side, name) in [(Side::Downstream, "Z"), (Side::Upstream, "Z'")] {
        let p = sk1_presentation(&pair, side);
        note(
            "sk1-presentation",
            &format!("SK1({name}) K2-part rank, units-part rank"),
            format!("{} {}", p.k2_part_rank, p.units_part_rank),
        );
    }

    let (lhs, rhs, holds) = numerical_criterion(&counts);
    note(
        "numerical-criterion",
        "m1 - m2 >= n1 - n2 + n3",
        format!("{lhs} >= {rhs}: {holds}"),
    );

    let gen = generation_matrix(&pair);
    let coker = exactalg::cokernel_shape(&gen);
    let generation_holds = coker.is_trivial();
    let torsion: Vec<String> = coker.torsion.iter().map(ToString::to_string).collect();
    note(
        "generation",
        "im(eps3) + im(phi_upstream) = Z^m2",
        format!(
            "{generation_holds} (rational rank {} of {}, cokernel torsion [{}])",
            gen.rows() - coker.free_rank,
            gen.rows(),
            torsion.join(", ")
        ),
    );

    let sk1_coker_units_rank = sk1_coker_units_rank(&pair).ok();
    note(
        "sk1-cokernel",
        "free units rank of coker(SK1(Z) -> SK1(Z'))",
        match sk1_coker_units_rank {
            Some(r) => r.to_string(),
            None => "undefined: generation fails".to_string(),
        },
    );

    let structure = structure_sheaf_h1(&pair, inc);
    note(
        "structure-sheaf-h1",
        "dim ker(H1(O_Z) -> H1(O_Z'))",
        format!(
            "{} (h1(O_Z) = {}, h1(O_Z') = {})",
            structure.kernel, structure.h1_downstream, structure.h1_upstream
        ),
    );

    let verdict = if generation_holds && normalization_finite_dimensional {
        Verdict::FiniteDimensional
    } else {
        Verdict::NotEstablished
    };
    note(
        "verdict",
        "CH0 of the glued surface is finite dimensional",
        format!("{verdict} (normalization hypothesis: {normalization_finite_dimensional})"),
    );

    CriterionReport {
        counts,
        inequality_lhs: lhs,
        inequality_rhs: rhs,
        inequality_holds: holds,
        generation_holds,
        sk1_coker_units_rank,
        structure_h1_kernel: structure.kernel,
        verdict,
        trace,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::build_complexes;
    use crate::config::testing::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn k(n1: usize, n2: usize, n3: usize, m1: usize, m2: usize) -> Counts {
        Counts { n1, n2, n3, m1, m2 }
    }

    fn disjoint_fold() -> GluingConfiguration {
        GluingConfiguration {
            name: "disjoint-fold".to_string(),
            upstream_components: vec![comp("L1"), comp("L2")],
            upstream_points: vec![],
            component_map: map(&[("L1", "A"), ("L2", "A")]),
            point_blocks: vec![],
            branch_classes: vec![],
        }
    }

    #[test]
    fn numerical_examples() {
        assert_eq!(numerical_criterion(&k(7, 20, 6, 14, 21)), (-7, -7, true));
        assert_eq!(numerical_criterion(&k(1, 0, 0, 2, 1)), (1, 1, true));
        assert_eq!(numerical_criterion(&k(2, 3, 0, 2, 1)), (1, -1, true));
        assert_eq!(numerical_criterion(&k(1, 0, 0, 2, 2)), (0, 1, false));
        assert_eq!(numerical_criterion(&k(4, 9, 0, 4, 9)), (-5, -5, true));
    }

    #[test]
    fn two_lines_ranks() {
        let pair = build_complexes(&two_lines()).unwrap();
        assert!(generation_check(&pair));
        assert_eq!(
            sk1_presentation(&pair, Side::Downstream),
            Sk1Presentation {
                k2_part_rank: 0,
                units_part_rank: 2
            }
        );
        assert_eq!(sk1_coker_units_rank(&pair), Ok(0));
        let inc = Incidence::new(&two_lines()).unwrap();
        assert_eq!(structure_sheaf_h1_kernel(&pair, &inc), 0);
    }

    #[test]
    fn disjoint_fold_examples() {
        let config = disjoint_fold();
        let pair = build_complexes(&config).unwrap();
        let inc = Incidence::new(&config).unwrap();
        assert!(generation_check(&pair));
        assert_eq!(sk1_coker_units_rank(&pair), Ok(1));
        assert_eq!(structure_sheaf_h1_kernel(&pair, &inc), 1);
    }

    #[test]
    fn span_check_rows() {
        let pair = build_complexes(&disjoint_fold()).unwrap();
        assert_eq!(
            h1_span_check(&pair, &IntMatrix::zeros(3, 1)),
            Err(CriterionError::RowCountMismatch {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(h1_span_check(&pair, &IntMatrix::identity(2)), Ok(true));
        assert_eq!(h1_span_check(&pair, &IntMatrix::zeros(2, 0)), Ok(false));
    }

    #[test]
    fn double_node_fails_both_ways() {
        let config = GluingConfiguration {
            name: "double-node".to_string(),
            upstream_components: vec![comp("L1"), comp("L2")],
            upstream_points: vec![point("p", "L1", "L2"), point("q", "L1", "L2")],
            component_map: map(&[("L1", "A"), ("L2", "A")]),
            point_blocks: vec![block("x", &["p"]), block("y", &["q"])],
            branch_classes: vec![
                vec![br("p", 'a')],
                vec![br("p", 'b')],
                vec![br("q", 'a')],
                vec![br("q", 'b')],
            ],
        };
        let report = full_verdict(&config, true).unwrap();
        assert!(!report.inequality_holds);
        assert!(!report.generation_holds);
        assert_eq!(report.sk1_coker_units_rank, None);
        assert_eq!(report.verdict, Verdict::NotEstablished);
    }

    #[test]
    fn hypothesis_gates_verdict() {
        assert_eq!(
            full_verdict(&two_lines(), true).unwrap().verdict,
            Verdict::FiniteDimensional
        );
        assert_eq!(
            full_verdict(&two_lines(), false).unwrap().verdict,
            Verdict::NotEstablished
        );
    }
}

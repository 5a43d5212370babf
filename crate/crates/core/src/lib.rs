//! Exact bookkeeping for glued curve configurations.
//!
//! A configuration is a union `Z'` of smooth rational curves together with a
//! gluing datum producing a curve `Z`. This crate turns such a pair into the
//! integer matrices of its Mayer–Vietoris complexes and checks the
//! finite-dimensionality criteria for zero cycles on the glued surface:
//!
//! * [`exactalg`]: Smith normal form and the lattice queries built on it.
//! * [`config`]: the configuration model, its validator and the derived counts.
//! * [`complexes`]: the H⁰ complexes and comparison maps as matrices.
//! * [`criteria`]: the numerical criterion, generation check and verdict.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod complexes;
pub mod config;
pub mod criteria;
pub mod exactalg;

pub use complexes::{build_complexes, ComplexPair, Side};
pub use config::{
    counts, downstream_view, validate, Branch, ConfigError, Counts, DownstreamPoint,
    DownstreamView, GluingConfiguration, Incidence, PointBlock, Slot, UpstreamComponent,
    UpstreamPoint, Violation, Warning,
};
pub use criteria::{full_verdict, CriterionReport, Sk1Presentation, TraceEntry, Verdict};
pub use exactalg::{CokernelShape, IntMatrix, SmithDecomposition};

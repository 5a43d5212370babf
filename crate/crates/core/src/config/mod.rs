//! Normalisation pairs `(Z', gluing)` and the downstream curve `Z` they define.
//!
//! Every upstream component is a smooth rational curve and every upstream
//! point is a transversal crossing of two distinct components. The gluing
//! datum maps components onto downstream components, groups upstream points
//! into downstream points (blocks) and groups the upstream branches through a
//! block into downstream branches (branch classes).

mod incidence;
mod validate;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use incidence::{
    BlockInfo, ClassInfo, Counts, DownstreamPoint, DownstreamView, Entry, Incidence,
    IncidencePoint, NodePair, Triple,
};
pub use validate::{validate, Violation, Warning};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpstreamComponent {
    pub id: String,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpstreamPoint {
    pub id: String,
    pub label: Option<String>,
    /// Component ids of the two branches, slots `a` and `b`.
    pub branches: [String; 2],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    A,
    B,
}

impl Slot {
    pub fn index(self) -> usize {
        match self {
            Slot::A => 0,
            Slot::B => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Slot::A => "a",
            Slot::B => "b",
        }
    }
}

/// One branch of an upstream point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Branch {
    pub point: String,
    pub slot: Slot,
}

impl Branch {
    pub fn new(point: impl Into<String>, slot: Slot) -> Self {
        Self {
            point: point.into(),
            slot,
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.point, self.slot.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointBlock {
    /// Label of the downstream point.
    pub label: String,
    pub points: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluingConfiguration {
    pub name: String,
    pub upstream_components: Vec<UpstreamComponent>,
    pub upstream_points: Vec<UpstreamPoint>,
    /// Upstream component id → downstream component name, in document order.
    pub component_map: Vec<(String, String)>,
    pub point_blocks: Vec<PointBlock>,
    pub branch_classes: Vec<Vec<Branch>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdKind {
    Component,
    Point,
    BlockLabel,
}

impl fmt::Display for IdKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IdKind::Component => "component",
            IdKind::Point => "point",
            IdKind::BlockLabel => "point block",
        })
    }
}

/// Reference errors detected while resolving ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConfigError {
    DuplicateId {
        kind: IdKind,
        id: String,
    },
    UnknownId {
        kind: IdKind,
        id: String,
        context: &'static str,
    },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::DuplicateId { kind, id } => write!(f, "duplicate id: {kind} `{id}`"),
            ConfigError::UnknownId { kind, id, context } => {
                write!(f, "unknown id: {kind} `{id}` referenced from {context}")
            }
        }
    }
}

impl GluingConfiguration {
    /// Checks that ids are unique and that every reference resolves.
    ///
    /// Returns the first problem in document order.
    pub fn check_references(&self) -> Result<(), ConfigError> {
        let mut components = BTreeSet::new();
        for c in &self.upstream_components {
            if !components.insert(c.id.as_str()) {
                return Err(ConfigError::DuplicateId {
                    kind: IdKind::Component,
                    id: c.id.clone(),
                });
            }
        }
        let mut points = BTreeSet::new();
        for p in &self.upstream_points {
            if !points.insert(p.id.as_str()) {
                return Err(ConfigError::DuplicateId {
                    kind: IdKind::Point,
                    id: p.id.clone(),
                });
            }
            for b in &p.branches {
                if !components.contains(b.as_str()) {
                    return Err(ConfigError::UnknownId {
                        kind: IdKind::Component,
                        id: b.clone(),
                        context: "upstream_points",
                    });
                }
            }
        }
        let mut mapped = BTreeSet::new();
        for (from, _) in &self.component_map {
            if !components.contains(from.as_str()) {
                return Err(ConfigError::UnknownId {
                    kind: IdKind::Component,
                    id: from.clone(),
                    context: "component_map",
                });
            }
            if !mapped.insert(from.as_str()) {
                return Err(ConfigError::DuplicateId {
                    kind: IdKind::Component,
                    id: from.clone(),
                });
            }
        }
        let mut labels = BTreeSet::new();
        for block in &self.point_blocks {
            if !labels.insert(block.label.as_str()) {
                return Err(ConfigError::DuplicateId {
                    kind: IdKind::BlockLabel,
                    id: block.label.clone(),
                });
            }
            for p in &block.points {
                if !points.contains(p.as_str()) {
                    return Err(ConfigError::UnknownId {
                        kind: IdKind::Point,
                        id: p.clone(),
                        context: "point_blocks",
                    });
                }
            }
        }
        for class in &self.branch_classes {
            for b in class {
                if !points.contains(b.point.as_str()) {
                    return Err(ConfigError::UnknownId {
                        kind: IdKind::Point,
                        id: b.point.clone(),
                        context: "branch_classes",
                    });
                }
            }
        }
        Ok(())
    }

    pub fn component_map_lookup(&self) -> BTreeMap<&str, &str> {
        self.component_map
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_str()))
            .collect()
    }

    /// The configuration glued by the identity: `Z = Z'`, one block and two
    /// singleton branch classes per upstream point.
    pub fn identity_gluing(
        name: impl Into<String>,
        upstream_components: Vec<UpstreamComponent>,
        upstream_points: Vec<UpstreamPoint>,
    ) -> Self {
        let component_map = upstream_components
            .iter()
            .map(|c| (c.id.clone(), c.id.clone()))
            .collect();
        let point_blocks = upstream_points
            .iter()
            .map(|p| PointBlock {
                label: p.id.clone(),
                points: alloc::vec![p.id.clone()],
            })
            .collect();
        let branch_classes = upstream_points
            .iter()
            .flat_map(|p| {
                [Slot::A, Slot::B]
                    .into_iter()
                    .map(|s| alloc::vec![Branch::new(p.id.clone(), s)])
            })
            .collect();
        Self {
            name: name.into(),
            upstream_components,
            upstream_points,
            component_map,
            point_blocks,
            branch_classes,
        }
    }
}

/// Counts of a valid configuration.
pub fn counts(config: &GluingConfiguration) -> Result<Counts, Vec<Violation>> {
    Incidence::new(config).map(|inc| inc.counts())
}

pub fn downstream_view(config: &GluingConfiguration) -> Result<DownstreamView, Vec<Violation>> {
    Incidence::new(config).map(|inc| inc.downstream_view())
}

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{Branch, ConfigError, GluingConfiguration, Slot};

/// A broken modelling assumption. Violations are data: [`validate`] collects
/// all of them instead of stopping at the first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    Reference(ConfigError),
    /// Both branches of the point lie on the same component.
    NotNormalCrossing {
        point: String,
    },
    UnmappedComponent {
        component: String,
    },
    UnplacedPoint {
        point: String,
    },
    PointInSeveralBlocks {
        point: String,
    },
    EmptyBlock {
        block: String,
    },
    UnclassifiedBranch {
        branch: Branch,
    },
    BranchInSeveralClasses {
        branch: Branch,
    },
    EmptyClass {
        class: usize,
    },
    ClassAcrossBlocks {
        class: usize,
    },
    ClassOverSeveralImages {
        class: usize,
    },
    BranchesShareClass {
        point: String,
    },
    TooManyBranches {
        block: String,
        classes: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Reference(e) => write!(f, "{e}"),
            Violation::NotNormalCrossing { point } => write!(
                f,
                "upstream point `{point}` has both branches on one component; Z' must be a normal crossings divisor"
            ),
            Violation::UnmappedComponent { component } => {
                write!(f, "upstream component `{component}` is missing from component_map")
            }
            Violation::UnplacedPoint { point } => {
                write!(f, "upstream point `{point}` belongs to no point block")
            }
            Violation::PointInSeveralBlocks { point } => {
                write!(f, "upstream point `{point}` belongs to more than one point block")
            }
            Violation::EmptyBlock { block } => write!(f, "point block `{block}` has no points"),
            Violation::UnclassifiedBranch { branch } => {
                write!(f, "branch {branch} belongs to no branch class")
            }
            Violation::BranchInSeveralClasses { branch } => {
                write!(f, "branch {branch} belongs to more than one branch class")
            }
            Violation::EmptyClass { class } => write!(f, "branch class #{class} is empty"),
            Violation::ClassAcrossBlocks { class } => {
                write!(f, "branch class #{class} mixes branches from different point blocks")
            }
            Violation::ClassOverSeveralImages { class } => write!(
                f,
                "branch class #{class} mixes branches whose components map to different downstream components"
            ),
            Violation::BranchesShareClass { point } => write!(
                f,
                "the two branches of upstream point `{point}` share a branch class"
            ),
            Violation::TooManyBranches { block, classes } => write!(
                f,
                "point block `{block}` yields {classes} branches: at most 3 components through a point"
            ),
        }
    }
}

/// Conditions that do not invalidate a configuration but weaken what the
/// verdict-level operations can claim about it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Warning {
    DisconnectedUpstream {
        pieces: usize,
    },
    DisconnectedDownstream {
        pieces: usize,
    },
    /// Two branches of one class sit on the same upstream component, so that
    /// component is glued to itself.
    SelfGluedComponent {
        class: usize,
        component: String,
    },
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::DisconnectedUpstream { pieces } => {
                write!(f, "Z' is disconnected ({pieces} connected pieces)")
            }
            Warning::DisconnectedDownstream { pieces } => {
                write!(f, "Z is disconnected ({pieces} connected pieces)")
            }
            Warning::SelfGluedComponent { class, component } => write!(
                f,
                "branch class #{class} glues upstream component `{component}` to itself"
            ),
        }
    }
}

pub fn validate(config: &GluingConfiguration) -> Vec<Violation> {
    if let Err(e) = config.check_references() {
        return alloc::vec![Violation::Reference(e)];
    }
    let mut out = Vec::new();

    let cmap = config.component_map_lookup();
    let comp_of: BTreeMap<&str, &[String; 2]> = config
        .upstream_points
        .iter()
        .map(|p| (p.id.as_str(), &p.branches))
        .collect();

    for p in &config.upstream_points {
        if p.branches[0] == p.branches[1] {
            out.push(Violation::NotNormalCrossing {
                point: p.id.clone(),
            });
        }
    }
    for c in &config.upstream_components {
        if !cmap.contains_key(c.id.as_str()) {
            out.push(Violation::UnmappedComponent {
                component: c.id.clone(),
            });
        }
    }

    let mut block_of: BTreeMap<&str, usize> = BTreeMap::new();
    for (bi, block) in config.point_blocks.iter().enumerate() {
        if block.points.is_empty() {
            out.push(Violation::EmptyBlock {
                block: block.label.clone(),
            });
        }
        for p in &block.points {
            if block_of.insert(p.as_str(), bi).is_some() {
                out.push(Violation::PointInSeveralBlocks { point: p.clone() });
            }
        }
    }
    for p in &config.upstream_points {
        if !block_of.contains_key(p.id.as_str()) {
            out.push(Violation::UnplacedPoint {
                point: p.id.clone(),
            });
        }
    }

    let mut class_of: BTreeMap<&Branch, usize> = BTreeMap::new();
    for (ci, class) in config.branch_classes.iter().enumerate() {
        if class.is_empty() {
            out.push(Violation::EmptyClass { class: ci });
            continue;
        }
        for b in class {
            if class_of.insert(b, ci).is_some() {
                out.push(Violation::BranchInSeveralClasses { branch: b.clone() });
            }
        }
        let blocks: BTreeSet<Option<&usize>> = class
            .iter()
            .map(|b| block_of.get(b.point.as_str()))
            .collect();
        if blocks.len() > 1 {
            out.push(Violation::ClassAcrossBlocks { class: ci });
        }
        let images: BTreeSet<Option<&&str>> = class
            .iter()
            .map(|b| cmap.get(comp_of[b.point.as_str()][b.slot.index()].as_str()))
            .collect();
        if images.len() > 1 {
            out.push(Violation::ClassOverSeveralImages { class: ci });
        }
    }
    for p in &config.upstream_points {
        let a = class_of.get(&Branch::new(p.id.clone(), Slot::A));
        let b = class_of.get(&Branch::new(p.id.clone(), Slot::B));
        for (slot, c) in [(Slot::A, a), (Slot::B, b)] {
            if c.is_none() {
                out.push(Violation::UnclassifiedBranch {
                    branch: Branch::new(p.id.clone(), slot),
                });
            }
        }
        if a.is_some() && a == b {
            out.push(Violation::BranchesShareClass {
                point: p.id.clone(),
            });
        }
    }

    for block in &config.point_blocks {
        let classes: BTreeSet<usize> = block
            .points
            .iter()
            .flat_map(|p| {
                [Slot::A, Slot::B]
                    .into_iter()
                    .filter_map(|s| class_of.get(&Branch::new(p.clone(), s)).copied())
            })
            .collect();
        if classes.len() > 3 {
            out.push(Violation::TooManyBranches {
                block: block.label.clone(),
                classes: classes.len(),
            });
        }
    }

    out
}

//! Canonical indexed form of a valid configuration.
//!
//! Orderings are fixed so that every matrix built from an [`Incidence`] is
//! reproducible entry for entry:
//!
//! * upstream components by id, downstream components by name;
//! * downstream points (blocks) by label, upstream points by (block label, id);
//! * branch classes by (block, least branch), where a branch is keyed by its
//!   point's position and then its slot;
//! * intersection entries by (block, lower component, higher component, classes).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::validate::{validate, Violation, Warning};
use super::{Branch, GluingConfiguration, Slot};

/// `n1, n2, n3` describe `Z`; `m1, m2` describe `Z'`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Counts {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub m1: usize,
    pub m2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidencePoint {
    pub id: String,
    pub block: usize,
    /// Upstream component index per slot.
    pub components: [usize; 2],
    /// Branch class index per slot.
    pub classes: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockInfo {
    pub label: String,
    pub points: Vec<usize>,
    pub classes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub block: usize,
    /// Downstream component carrying this branch.
    pub component: usize,
    /// (upstream point index, slot), sorted.
    pub branches: Vec<(usize, Slot)>,
}

/// A pair of branches at a downstream point lying on distinct components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub block: usize,
    /// Classes ordered as `components`.
    pub classes: [usize; 2],
    /// Downstream component indices, lower first.
    pub components: [usize; 2],
}

/// Three branches at one downstream point on pairwise distinct components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub block: usize,
    pub classes: [usize; 3],
    /// Strictly increasing.
    pub components: [usize; 3],
}

/// Two branches of one downstream component through the same point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodePair {
    pub block: usize,
    pub classes: [usize; 2],
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownstreamPoint {
    pub label: String,
    /// Downstream component names, one per branch class, sorted.
    pub branch_multiset: Vec<String>,
}

impl DownstreamPoint {
    pub fn is_nodal(&self) -> bool {
        self.branch_multiset.windows(2).any(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownstreamView {
    pub points: Vec<DownstreamPoint>,
    /// (downstream component name, carries a node), sorted by name.
    pub nodal: Vec<(String, bool)>,
}

impl DownstreamView {
    pub fn nodal_components(&self) -> Vec<&str> {
        self.nodal
            .iter()
            .filter(|(_, n)| *n)
            .map(|(c, _)| c.as_str())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub name: String,
    pub components: Vec<String>,
    pub downstream: Vec<String>,
    /// Upstream component index → downstream component index.
    pub sheet: Vec<usize>,
    pub points: Vec<IncidencePoint>,
    pub blocks: Vec<BlockInfo>,
    pub classes: Vec<ClassInfo>,
    pub entries: Vec<Entry>,
    pub triples: Vec<Triple>,
    pub node_pairs: Vec<NodePair>,
}

impl Incidence {
    pub fn new(config: &GluingConfiguration) -> Result<Self, Vec<Violation>> {
        let violations = validate(config);
        if !violations.is_empty() {
            return Err(violations);
        }
        Ok(Self::build(config))
    }

    fn build(config: &GluingConfiguration) -> Self {
        let mut components: Vec<String> = config
            .upstream_components
            .iter()
            .map(|c| c.id.clone())
            .collect();
        components.sort();
        let comp_index: BTreeMap<&str, usize> = components
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_str(), i))
            .collect();

        let cmap = config.component_map_lookup();
        let downstream: Vec<String> = cmap
            .values()
            .map(|s| String::from(*s))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let down_index: BTreeMap<&str, usize> = downstream
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_str(), i))
            .collect();
        let sheet = components
            .iter()
            .map(|c| down_index[cmap[c.as_str()]])
            .collect();

        let mut block_order: Vec<usize> = (0..config.point_blocks.len()).collect();
        block_order.sort_by(|&a, &b| {
            config.point_blocks[a]
                .label
                .cmp(&config.point_blocks[b].label)
        });
        let mut block_of_point: BTreeMap<&str, usize> = BTreeMap::new();
        for (bi, &orig) in block_order.iter().enumerate() {
            for p in &config.point_blocks[orig].points {
                block_of_point.insert(p.as_str(), bi);
            }
        }

        let mut raw_points: Vec<(usize, &str, [usize; 2])> = config
            .upstream_points
            .iter()
            .map(|p| {
                (
                    block_of_point[p.id.as_str()],
                    p.id.as_str(),
                    [
                        comp_index[p.branches[0].as_str()],
                        comp_index[p.branches[1].as_str()],
                    ],
                )
            })
            .collect();
        raw_points.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        let point_index: BTreeMap<&str, usize> = raw_points
            .iter()
            .enumerate()
            .map(|(i, p)| (p.1, i))
            .collect();

        let mut raw_classes: Vec<(usize, Vec<(usize, Slot)>)> = config
            .branch_classes
            .iter()
            .map(|class| {
                let mut branches: Vec<(usize, Slot)> = class
                    .iter()
                    .map(|b| (point_index[b.point.as_str()], b.slot))
                    .collect();
                branches.sort();
                (raw_points[branches[0].0].0, branches)
            })
            .collect();
        raw_classes.sort_by(|a, b| (a.0, &a.1[0]).cmp(&(b.0, &b.1[0])));

        let mut class_of: BTreeMap<(usize, Slot), usize> = BTreeMap::new();
        let classes: Vec<ClassInfo> = raw_classes
            .into_iter()
            .enumerate()
            .map(|(ci, (block, branches))| {
                for &b in &branches {
                    class_of.insert(b, ci);
                }
                let (p, s) = branches[0];
                let component = sheet_of(&raw_points[p].2, s, &components, &cmap, &down_index);
                ClassInfo {
                    block,
                    component,
                    branches,
                }
            })
            .collect();

        let points: Vec<IncidencePoint> = raw_points
            .iter()
            .enumerate()
            .map(|(pi, (block, id, comps))| IncidencePoint {
                id: String::from(*id),
                block: *block,
                components: *comps,
                classes: [class_of[&(pi, Slot::A)], class_of[&(pi, Slot::B)]],
            })
            .collect();

        let blocks: Vec<BlockInfo> = block_order
            .iter()
            .enumerate()
            .map(|(bi, &orig)| BlockInfo {
                label: config.point_blocks[orig].label.clone(),
                points: (0..points.len())
                    .filter(|&p| points[p].block == bi)
                    .collect(),
                classes: (0..classes.len())
                    .filter(|&c| classes[c].block == bi)
                    .collect(),
            })
            .collect();

        let mut entries = Vec::new();
        let mut triples = Vec::new();
        let mut node_pairs = Vec::new();
        for (bi, block) in blocks.iter().enumerate() {
            let mut local = Vec::new();
            for (x, &c1) in block.classes.iter().enumerate() {
                for &c2 in &block.classes[x + 1..] {
                    let (d1, d2) = (classes[c1].component, classes[c2].component);
                    if d1 == d2 {
                        node_pairs.push(NodePair {
                            block: bi,
                            classes: [c1, c2],
                            component: d1,
                        });
                    } else if d1 < d2 {
                        local.push(Entry {
                            block: bi,
                            classes: [c1, c2],
                            components: [d1, d2],
                        });
                    } else {
                        local.push(Entry {
                            block: bi,
                            classes: [c2, c1],
                            components: [d2, d1],
                        });
                    }
                }
            }
            local.sort_by_key(|e| (e.components, e.classes));
            entries.extend(local);

            if block.classes.len() == 3 {
                let mut cs: Vec<usize> = block.classes.clone();
                cs.sort_by_key(|&c| (classes[c].component, c));
                let comps = [
                    classes[cs[0]].component,
                    classes[cs[1]].component,
                    classes[cs[2]].component,
                ];
                if comps[0] < comps[1] && comps[1] < comps[2] {
                    triples.push(Triple {
                        block: bi,
                        classes: [cs[0], cs[1], cs[2]],
                        components: comps,
                    });
                }
            }
        }

        Self {
            name: config.name.clone(),
            components,
            downstream,
            sheet,
            points,
            blocks,
            classes,
            entries,
            triples,
            node_pairs,
        }
    }

    pub fn counts(&self) -> Counts {
        Counts {
            n1: self.downstream.len(),
            n2: self.entries.len(),
            n3: self.triples.len(),
            m1: self.components.len(),
            m2: self.points.len(),
        }
    }

    /// Index of the entry whose branch pair is exactly `{c1, c2}`.
    pub fn entry_of_classes(&self, c1: usize, c2: usize) -> Option<usize> {
        self.entries
            .iter()
            .position(|e| e.classes == [c1, c2] || e.classes == [c2, c1])
    }

    pub fn downstream_view(&self) -> DownstreamView {
        let points = self
            .blocks
            .iter()
            .map(|b| {
                let mut branch_multiset: Vec<String> = b
                    .classes
                    .iter()
                    .map(|&c| self.downstream[self.classes[c].component].clone())
                    .collect();
                branch_multiset.sort();
                DownstreamPoint {
                    label: b.label.clone(),
                    branch_multiset,
                }
            })
            .collect();
        let nodal_set: BTreeSet<usize> = self.node_pairs.iter().map(|n| n.component).collect();
        let nodal = self
            .downstream
            .iter()
            .enumerate()
            .map(|(i, name)| (name.clone(), nodal_set.contains(&i)))
            .collect();
        DownstreamView { points, nodal }
    }

    /// Number of connected pieces of `Z'` (components joined through points).
    pub fn upstream_pieces(&self) -> usize {
        let mut uf = UnionFind::new(self.components.len());
        for p in &self.points {
            uf.union(p.components[0], p.components[1]);
        }
        uf.pieces()
    }

    /// Number of connected pieces of `Z` (components joined through blocks).
    pub fn downstream_pieces(&self) -> usize {
        let mut uf = UnionFind::new(self.downstream.len());
        for b in &self.blocks {
            for w in b.classes.windows(2) {
                uf.union(self.classes[w[0]].component, self.classes[w[1]].component);
            }
        }
        uf.pieces()
    }

    pub fn is_connected(&self) -> bool {
        self.upstream_pieces() <= 1 && self.downstream_pieces() <= 1
    }

    pub fn warnings(&self) -> Vec<Warning> {
        let mut out = Vec::new();
        let up = self.upstream_pieces();
        if up > 1 {
            out.push(Warning::DisconnectedUpstream { pieces: up });
        }
        let down = self.downstream_pieces();
        if down > 1 {
            out.push(Warning::DisconnectedDownstream { pieces: down });
        }
        for (ci, class) in self.classes.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &(p, s) in &class.branches {
                let comp = self.points[p].components[s.index()];
                if !seen.insert(comp) {
                    out.push(Warning::SelfGluedComponent {
                        class: ci,
                        component: self.components[comp].clone(),
                    });
                    break;
                }
            }
        }
        out
    }

    /// The branch with the given canonical position, as a model-level value.
    pub fn branch(&self, point: usize, slot: Slot) -> Branch {
        Branch::new(self.points[point].id.clone(), slot)
    }
}

fn sheet_of(
    comps: &[usize; 2],
    slot: Slot,
    components: &[String],
    cmap: &BTreeMap<&str, &str>,
    down_index: &BTreeMap<&str, usize>,
) -> usize {
    down_index[cmap[components[comps[slot.index()]].as_str()]]
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    fn pieces(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

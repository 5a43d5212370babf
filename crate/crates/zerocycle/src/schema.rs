//! JSON encoding of configurations.
//!
//! ```json
//! {
//!   "name": string,
//!   "upstream_components": [ { "id": string, "label": string? } ],
//!   "upstream_points":     [ { "id": string, "label": string?,
//!                              "branches": [componentId, componentId] } ],
//!   "component_map":       { upstreamComponentId: downstreamComponentName },
//!   "point_blocks":        [ { "label": string, "points": [pointId, ...] } ],
//!   "branch_classes":      [ [ [pointId, "a"|"b"], ... ], ... ]
//! }
//! ```
//!
//! Unknown fields are rejected and keys are written in the order above.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;
use zerocycle_core::config::ConfigError;
use zerocycle_core::{
    Branch, GluingConfiguration, PointBlock, Slot, UpstreamComponent, UpstreamPoint,
};

pub const SCHEMA_HELP: &str = r#"Configuration files are UTF-8 JSON documents:
{
  "name": string,
  "upstream_components": [ { "id": string, "label": string? } ],
  "upstream_points":     [ { "id": string, "label": string?,
                             "branches": [componentId, componentId] } ],
  "component_map":       { upstreamComponentId: downstreamComponentName },
  "point_blocks":        [ { "label": string, "points": [pointId, ...] } ],
  "branch_classes":      [ [ [pointId, "a"|"b"], ... ], ... ]
}
Unknown fields are rejected."#;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Reference(ConfigError),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    name: String,
    upstream_components: Vec<ComponentDoc>,
    upstream_points: Vec<PointDoc>,
    component_map: OrderedMap,
    point_blocks: Vec<BlockDoc>,
    branch_classes: Vec<Vec<(String, SlotDoc)>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComponentDoc {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointDoc {
    id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    branches: [String; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockDoc {
    label: String,
    points: Vec<String>,
}

#[derive(Clone, Copy, Serialize, Deserialize)]
enum SlotDoc {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
}

/// JSON object kept in document order; duplicate keys survive so the
/// reference check can report them.
struct OrderedMap(Vec<(String, String)>);

impl Serialize for OrderedMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for OrderedMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct OrderedVisitor;

        impl<'de> Visitor<'de> for OrderedVisitor {
            type Value = OrderedMap;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping component ids to downstream names")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<OrderedMap, A::Error> {
                let mut pairs = Vec::new();
                while let Some((k, v)) = access.next_entry::<String, String>()? {
                    pairs.push((k, v));
                }
                Ok(OrderedMap(pairs))
            }
        }

        deserializer.deserialize_map(OrderedVisitor)
    }
}

impl From<SlotDoc> for Slot {
    fn from(s: SlotDoc) -> Self {
        match s {
            SlotDoc::A => Slot::A,
            SlotDoc::B => Slot::B,
        }
    }
}

impl From<Slot> for SlotDoc {
    fn from(s: Slot) -> Self {
        match s {
            Slot::A => SlotDoc::A,
            Slot::B => SlotDoc::B,
        }
    }
}

impl From<Document> for GluingConfiguration {
    fn from(doc: Document) -> Self {
        GluingConfiguration {
            name: doc.name,
            upstream_components: doc
                .upstream_components
                .into_iter()
                .map(|c| UpstreamComponent {
                    id: c.id,
                    label: c.label,
                })
                .collect(),
            upstream_points: doc
                .upstream_points
                .into_iter()
                .map(|p| UpstreamPoint {
                    id: p.id,
                    label: p.label,
                    branches: p.branches,
                })
                .collect(),
            component_map: doc.component_map.0,
            point_blocks: doc
                .point_blocks
                .into_iter()
                .map(|b| PointBlock {
                    label: b.label,
                    points: b.points,
                })
                .collect(),
            branch_classes: doc
                .branch_classes
                .into_iter()
                .map(|class| {
                    class
                        .into_iter()
                        .map(|(point, slot)| Branch::new(point, slot.into()))
                        .collect()
                })
                .collect(),
        }
    }
}

impl From<&GluingConfiguration> for Document {
    fn from(c: &GluingConfiguration) -> Self {
        Document {
            name: c.name.clone(),
            upstream_components: c
                .upstream_components
                .iter()
                .map(|u| ComponentDoc {
                    id: u.id.clone(),
                    label: u.label.clone(),
                })
                .collect(),
            upstream_points: c
                .upstream_points
                .iter()
                .map(|p| PointDoc {
                    id: p.id.clone(),
                    label: p.label.clone(),
                    branches: p.branches.clone(),
                })
                .collect(),
            component_map: OrderedMap(c.component_map.clone()),
            point_blocks: c
                .point_blocks
                .iter()
                .map(|b| BlockDoc {
                    label: b.label.clone(),
                    points: b.points.clone(),
                })
                .collect(),
            branch_classes: c
                .branch_classes
                .iter()
                .map(|class| {
                    class
                        .iter()
                        .map(|b| (b.point.clone(), b.slot.into()))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Parses a configuration and resolves every id it references.
pub fn parse_configuration(text: &str) -> Result<GluingConfiguration, ParseError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let config = GluingConfiguration::from(doc);
    config.check_references().map_err(ParseError::Reference)?;
    Ok(config)
}

/// Pretty-printed JSON with a trailing newline.
pub fn serialize_configuration(config: &GluingConfiguration) -> String {
    let mut out = serde_json::to_string_pretty(&Document::from(config))
        .expect("configuration documents always serialize");
    out.push('\n');
    out
}

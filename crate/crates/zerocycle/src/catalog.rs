//! Bundled configurations.
//!
//! The three fake-plane fixtures encode the special fibres of Mumford's and
//! Kato–Ishida's fake projective planes; the rest are small hand-built
//! configurations covering nodes, triple points, self-gluing and failures of
//! the numerical criterion. Every fixture ships as a JSON file under
//! `fixtures/` and is embedded at compile time.

use thiserror::Error;
use zerocycle_core::{Counts, GluingConfiguration};

use crate::schema::parse_configuration;

/// Values a fixture must reproduce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub counts: Counts,
    pub inequality_holds: bool,
    pub generation_holds: bool,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub source: &'static str,
    pub config: GluingConfiguration,
    pub expected: Expected,
    /// Raw file contents.
    pub text: &'static str,
}

#[derive(Debug, Error)]
#[error("unknown fixture `{0}`")]
pub struct UnknownFixture(pub String);

struct Entry {
    name: &'static str,
    source: &'static str,
    text: &'static str,
    counts: [usize; 5],
    inequality_holds: bool,
    generation_holds: bool,
}

macro_rules! fixture {
    ($name:literal, $source:expr, $counts:expr, $ineq:expr, $gen:expr) => {
        Entry {
            name: $name,
            source: $source,
            text: include_str!(concat!("../fixtures/", $name, ".json")),
            counts: $counts,
            inequality_holds: $ineq,
            generation_holds: $gen,
        }
    };
}

/// Sorted by name.
const ENTRIES: &[Entry] = &[
    fixture!("disjoint-fold", "synthetic: two disjoint lines onto one line", [1, 0, 0, 2, 0], true, true),
    fixture!("double-node", "synthetic: two lines meeting twice, folded onto one line", [1, 0, 0, 2, 2], false, false),
    fixture!("fold-node", "synthetic: two crossing lines folded onto a nodal line", [1, 0, 0, 2, 1], true, true),
    fixture!(
        "kato-ishida-1",
        "Kato-Ishida fake projective plane, first special fibre table (Z'_i glued to Z'_{i+7})",
        [7, 21, 7, 14, 21],
        true,
        true
    ),
    fixture!(
        "kato-ishida-2",
        "Kato-Ishida fake projective plane, second special fibre table (Z'_i glued to Z'_{i+7}); experimental: the traced gluing has nodal lines",
        [7, 18, 4, 14, 21],
        true,
        true
    ),
    fixture!(
        "mumford",
        "Mumford fake projective plane, special fibre: normalisation table and glued table",
        [7, 20, 6, 14, 21],
        true,
        true
    ),
    fixture!("nodal-branch", "synthetic: a node crossed by a third branch", [2, 2, 0, 4, 3], true, true),
    fixture!("square", "synthetic: identity gluing of a cycle of four lines", [4, 4, 0, 4, 4], true, true),
    fixture!("theta", "synthetic: identity gluing of two lines meeting twice", [2, 2, 0, 2, 2], true, true),
    fixture!("triangle", "synthetic: identity gluing of three lines meeting pairwise", [3, 3, 0, 3, 3], true, true),
    fixture!("triangle-fold", "synthetic: triangle with two sides folded together", [2, 2, 0, 3, 3], true, true),
    fixture!(
        "triangle-pinch",
        "synthetic: folded triangle with its two remaining vertices pinched together",
        [2, 1, 0, 3, 3],
        false,
        false
    ),
    fixture!("triple-glue", "synthetic: three sheets of two lines glued into an ordinary triple point", [3, 3, 1, 6, 3], true, true),
    fixture!("two-lines", "synthetic: identity gluing of two crossing lines", [2, 1, 0, 2, 1], true, true),
    fixture!("two-sheets", "synthetic: two crossing pairs glued into one crossing", [2, 1, 0, 4, 2], true, true),
];

impl Entry {
    fn load(&self) -> Fixture {
        let [n1, n2, n3, m1, m2] = self.counts;
        Fixture {
            name: self.name,
            source: self.source,
            config: parse_configuration(self.text)
                .unwrap_or_else(|e| panic!("bundled fixture {} is malformed: {e}", self.name)),
            expected: Expected {
                counts: Counts { n1, n2, n3, m1, m2 },
                inequality_holds: self.inequality_holds,
                generation_holds: self.generation_holds,
            },
            text: self.text,
        }
    }
}

pub fn get_fixture(name: &str) -> Result<Fixture, UnknownFixture> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .map(Entry::load)
        .ok_or_else(|| UnknownFixture(name.to_string()))
}

/// `(name, source, expected counts)` for every fixture, sorted by name.
pub fn list_fixtures() -> Vec<(&'static str, &'static str, Counts)> {
    ENTRIES
        .iter()
        .map(|e| {
            let [n1, n2, n3, m1, m2] = e.counts;
            (e.name, e.source, Counts { n1, n2, n3, m1, m2 })
        })
        .collect()
}

pub fn all_fixtures() -> Vec<Fixture> {
    ENTRIES.iter().map(Entry::load).collect()
}

/// The fake-plane fixtures, as opposed to the synthetic ones.
pub const FAKE_PLANE_FIXTURES: [&str; 3] = ["kato-ishida-1", "kato-ishida-2", "mumford"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listing_is_sorted_and_nonempty() {
        let names: Vec<&str> = list_fixtures().iter().map(|f| f.0).collect();
        assert!(!names.is_empty());
        let mut sorted = names.clone();
        sorted.sort_unstable();
        assert_eq!(names, sorted);
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            get_fixture("nonexistent").unwrap_err().to_string(),
            "unknown fixture `nonexistent`"
        );
    }

    #[test]
    fn names_match_documents() {
        for f in all_fixtures() {
            assert_eq!(f.config.name, f.name);
        }
    }
}

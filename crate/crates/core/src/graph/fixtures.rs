use std::sync::OnceLock;

use serde::Deserialize;

use super::{Fixture, GraphJson};
use crate::{Error, Result};

const DATA: &str = include_str!("../../data/fixtures.json");

#[derive(Deserialize)]
struct Entry {
    name: String,
    description: String,
    #[serde(flatten)]
    graph: GraphJson,
}

fn registry() -> &'static [Entry] {
    static REG: OnceLock<Vec<Entry>> = OnceLock::new();
    REG.get_or_init(|| serde_json::from_str(DATA).expect("fixtures.json is well formed"))
}

/// Names of all registered fixtures, in file order.
pub fn fixture_names() -> Vec<&'static str> {
    registry().iter().map(|e| e.name.as_str()).collect()
}

/// Looks up a named fixture from the bundled edge-list file.
pub fn fixture(name: &str) -> Result<Fixture> {
    let entry = registry()
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    entry.graph.to_fixture(&entry.name)
}

/// One-line description of a fixture.
pub fn fixture_description(name: &str) -> Result<&'static str> {
    registry()
        .iter()
        .find(|e| e.name == name)
        .map(|e| e.description.as_str())
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;

    #[test]
    fn all_fixtures_load_and_are_trees() {
        for name in fixture_names() {
            let f = fixture(name).unwrap();
            f.graph.check_invariants().unwrap();
            assert!(f.graph.is_tree(), "{name}");
            assert!(!f.marks.is_empty(), "{name}");
        }
        assert_eq!(fixture_names().len(), 14);
    }

    #[test]
    fn p7_is_path_with_center() {
        let f = fixture("p7").unwrap();
        assert_eq!(f.graph, path(7).unwrap());
        assert_eq!(f.mark("x").unwrap(), 3);
    }

    #[test]
    fn dist_t8_is_spider() {
        let g = fixture("dist_T8").unwrap().graph;
        assert_eq!(g.n(), 8);
        assert_eq!(g.degree_sequence(), vec![1, 1, 1, 2, 2, 2, 2, 3]);
    }

    #[test]
    fn e6_joins_p7_and_y5() {
        let f = fixture("e6").unwrap();
        assert_eq!(f.graph.n(), 12);
        assert!(f.graph.has_edge(f.mark("x").unwrap(), f.mark("y").unwrap()));
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
        assert!(matches!(
            fixture("hp").unwrap().mark("q"),
            Err(Error::UnknownMark { .. })
        ));
    }
}

//! Exhaustive generation of trees and small connected graphs, and the
//! censuses built on them.

mod census;
mod graphs;
mod trees;

pub use census::{
    ambivalent_vertex_census, census_records, cross_size_census, decisive_census,
    determined_by_spectrum, hash_rows, to_json_lines, walk_identifiability_census,
    AmbivalentCensus, CensusRecord, CrossSizePair, DecisiveCensus, DecisiveEntry,
    IdentifiabilityLevel, IdentifiabilityReport, Mode, TreePair, VertexMatch, WithinMatch,
};
pub use graphs::{enumerate_connected_graphs, MAX_GRAPH_N};
pub use trees::{enumerate_trees, Trees};

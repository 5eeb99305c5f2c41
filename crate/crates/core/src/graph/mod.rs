//! Simple undirected graphs, rooted graphs, and the named constructions.

mod build;
mod families;
mod fixtures;
mod graph6;
mod random;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::algebra::{BigInt, ExactMatrix};
use crate::{Error, Result};

pub use build::{
    coalescence, coalescence_with_map, complete, cycle, edge_join, graftage, pad_with_pendants, path, star, tadpole,
    vertex_deleted, y_graph,
};
pub use families::{
    harary_palmer, hp_construct, krebs_verbitsky, random_hp_input, schwenk_graph, HpInput,
    KvColor, KvPair,
};
pub use fixtures::{fixture, fixture_description, fixture_names};
pub use graph6::{from_graph6, to_graph6};
pub use random::{derive_seed, random_connected_gnp, random_gnp, random_tree};

/// Undirected simple graph on vertices `0..n`, `n >= 1`.
///
/// Neighbor lists are kept sorted; a bit matrix backs constant-time edge
/// queries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    bits: Vec<Vec<u64>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let words = n.div_ceil(64);
        Ok(Self {
            adj: vec![Vec::new(); n],
            bits: vec![vec![0; words]; n],
        })
    }

    /// Builds a graph from an edge list, rejecting loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range for n = {n}")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        if self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
        }
        for (a, b) in [(u, v), (v, u)] {
            let pos = self.adj[a].partition_point(|&x| x < b);
            self.adj[a].insert(pos, b);
            self.bits[a][b / 64] |= 1 << (b % 64);
        }
        Ok(())
    }

    /// Appends `count` isolated vertices, returning the index of the first.
    pub(crate) fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.n();
        let n = first + count;
        let words = n.div_ceil(64);
        for row in &mut self.bits {
            row.resize(words, 0);
        }
        self.adj.resize(n, Vec::new());
        self.bits.resize(n, vec![0; words]);
        first
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Bitset row of the neighborhood of `v` (bit `u` set iff `u ~ v`).
    pub fn neighbor_bits(&self, v: usize) -> &[u64] {
        &self.bits[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u][v / 64] >> (v % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!(
                "vertex {v} out of range for n = {}",
                self.n()
            )))
        }
    }

    /// Verifies the simple-graph invariants (no loops, symmetric, sorted,
    /// bit matrix consistent with the lists).
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n();
        if n == 0 {
            return Err(Error::Integrity("graph with no vertices".into()));
        }
        for v in 0..n {
            let nb = &self.adj[v];
            if nb.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Integrity(format!("neighbors of {v} not strictly sorted")));
            }
            for &u in nb {
                if u == v || u >= n {
                    return Err(Error::Integrity(format!("bad neighbor {u} of {v}")));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(Error::Integrity(format!("edge ({v}, {u}) not symmetric")));
                }
            }
            let count: u32 = self.bits[v].iter().map(|w| w.count_ones()).sum();
            if count as usize != nb.len() || nb.iter().any(|&u| !self.has_edge(v, u)) {
                return Err(Error::Integrity(format!("bit row of {v} disagrees with list")));
            }
        }
        Ok(())
    }

    /// BFS distances; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut comps = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                comp.push(x);
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n()
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n() && self.is_connected()
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len())?;
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                let j = index[u];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced by the vertices within distance `radius` of `v`,
    /// renumbered in increasing original order; also returns that order.
    pub fn ball(&self, v: usize, radius: usize) -> Result<(Graph, Vec<usize>)> {
        let keep: Vec<usize> = self
            .distances_from(v)
            .iter()
            .enumerate()
            .filter(|(_, d)| d.is_some_and(|d| d <= radius))
            .map(|(i, _)| i)
            .collect();
        Ok((self.induced(&keep)?, keep))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::InvalidArgument("permutation length differs from n".into()));
        }
        let edges: Vec<(usize, usize)> =
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n(), &edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        let off = g.add_vertices(other.n());
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off).expect("disjoint union keeps edges simple");
        }
        g
    }

    pub fn adjacency_matrix(&self) -> ExactMatrix {
        let rows: Vec<Vec<BigInt>> = (0..self.n())
            .map(|u| {
                (0..self.n())
                    .map(|v| BigInt::from(u8::from(self.has_edge(u, v))))
                    .collect()
            })
            .collect();
        ExactMatrix::from_int_rows(&rows).expect("square adjacency")
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            marks: BTreeMap::new(),
        }
    }
}

/// A graph with a designated root vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    pub graph: Graph,
    pub root: usize,
}

impl RootedGraph {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        graph.check_vertex(root)?;
        Ok(Self { graph, root })
    }
}

/// A named graph with marked vertices, e.g. the `x` and `y` of a drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    pub marks: BTreeMap<String, usize>,
}

impl Fixture {
    pub fn new(name: impl Into<String>, graph: Graph, marks: &[(&str, usize)]) -> Result<Self> {
        for &(_, v) in marks {
            graph.check_vertex(v)?;
        }
        Ok(Self {
            name: name.into(),
            graph,
            marks: marks.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        })
    }

    pub fn mark(&self, name: &str) -> Result<usize> {
        self.marks.get(name).copied().ok_or_else(|| Error::UnknownMark {
            fixture: self.name.clone(),
            mark: name.to_string(),
        })
    }

    pub fn rooted(&self, mark: &str) -> Result<RootedGraph> {
        RootedGraph::new(self.graph.clone(), self.mark(mark)?)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            marks: self.marks.clone(),
            ..self.graph.to_json()
        }
    }
}

/// JSON graph schema: `{"n": int, "edges": [[u, v], ...], "marks": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub marks: BTreeMap<String, usize>,
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(self.n, &edges)
    }

    pub fn to_fixture(&self, name: &str) -> Result<Fixture> {
        let graph = self.to_graph()?;
        let marks: Vec<(&str, usize)> = self.marks.iter().map(|(k, &v)| (k.as_str(), v)).collect();
        Fixture::new(name, graph, &marks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_empty() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
        assert!(Graph::empty(0).is_err());
    }

    #[test]
    fn basic_queries() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        g.check_invariants().unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.neighbors(2), &[0, 1, 3]);
        assert!(g.has_edge(3, 2) && !g.has_edge(0, 3));
        assert_eq!(g.distances_from(3), vec![Some(2), Some(2), Some(1), Some(0)]);
        assert!(g.is_connected() && !g.is_tree() && !g.is_forest());
    }

    #[test]
    fn wide_graph_bitsets() {
        let edges: Vec<(usize, usize)> = (0..129).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edges(130, &edges).unwrap();
        g.check_invariants().unwrap();
        assert!(g.has_edge(128, 129) && g.is_tree());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let f = Fixture::new("p3", g, &[("x", 1)]).unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_fixture("p3").unwrap(), f);
    }

    #[test]
    fn induced_and_ball() {
        let g = path(6).unwrap();
        let (b, keep) = g.ball(0, 2).unwrap();
        assert_eq!(keep, vec![0, 1, 2]);
        assert_eq!(b, path(3).unwrap());
    }
}

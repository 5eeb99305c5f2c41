use super::{Fixture, Graph, RootedGraph};
use crate::{Error, Result};

/// Path on `n` vertices numbered along the path.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    Graph::from_edges(n, &edges)
}

/// Star with center 0 and `leaves` leaves.
pub fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// `Y_n`: the path `0..n-2` with two extra leaves on vertex `n-3`; `u = 0`.
pub fn y_graph(n: usize) -> Result<Fixture> {
    if n < 4 {
        return Err(Error::InvalidArgument("y_graph needs n >= 4".into()));
    }
    let mut edges: Vec<_> = (1..n - 2).map(|i| (i - 1, i)).collect();
    edges.push((n - 3, n - 2));
    edges.push((n - 3, n - 1));
    Fixture::new(format!("y{n}"), Graph::from_edges(n, &edges)?, &[("u", 0)])
}

/// Tadpole `T_{c,s}`: cycle on `0..c` and a path on `c..c+s`, with `c`
/// joined to cycle vertex 0.
pub fn tadpole(cycle_len: usize, s: usize) -> Result<Graph> {
    if s < 1 {
        return Err(Error::InvalidArgument("tadpole needs s >= 1".into()));
    }
    let mut g = cycle(cycle_len)?;
    let first = g.add_vertices(s);
    g.add_edge(0, first)?;
    for i in first + 1..first + s {
        g.add_edge(i - 1, i)?;
    }
    Ok(g)
}

/// Coalescence `G_x . H_z`: `H` is glued onto `G` by identifying the roots.
///
/// Vertices of `G` keep their indices. The second return value maps each
/// vertex of `H` to its index in the result.
pub fn coalescence_with_map(g: &RootedGraph, h: &RootedGraph) -> (RootedGraph, Vec<usize>) {
    let mut out = g.graph.clone();
    let first = out.add_vertices(h.graph.n() - 1);
    let map: Vec<usize> = (0..h.graph.n())
        .map(|v| match v.cmp(&h.root) {
            std::cmp::Ordering::Less => first + v,
            std::cmp::Ordering::Equal => g.root,
            std::cmp::Ordering::Greater => first + v - 1,
        })
        .collect();
    for (a, b) in h.graph.edges() {
        out.add_edge(map[a], map[b]).expect("coalescence keeps edges simple");
    }
    (
        RootedGraph {
            graph: out,
            root: g.root,
        },
        map,
    )
}

pub fn coalescence(g: &RootedGraph, h: &RootedGraph) -> RootedGraph {
    coalescence_with_map(g, h).0
}

/// Graftage: disjoint union of `G` and `H` (shifted by `|G|`) plus a new
/// root joined to both old roots.
pub fn graftage(g: &RootedGraph, h: &RootedGraph) -> RootedGraph {
    let mut out = g.graph.disjoint_union(&h.graph);
    let w = out.add_vertices(1);
    out.add_edge(w, g.root).expect("fresh vertex");
    out.add_edge(w, g.graph.n() + h.root).expect("fresh vertex");
    RootedGraph { graph: out, root: w }
}

/// Disjoint union of `G` and `H` plus the edge between their roots; returns
/// the graph and the two roots in it.
pub fn edge_join(g: &RootedGraph, h: &RootedGraph) -> (Graph, usize, usize) {
    let mut out = g.graph.disjoint_union(&h.graph);
    let u = g.graph.n() + h.root;
    out.add_edge(g.root, u).expect("roots lie in different parts");
    (out, g.root, u)
}

/// `G - v`, remaining vertices renumbered in order.
pub fn vertex_deleted(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    if g.n() == 1 {
        return Err(Error::InvalidArgument("cannot delete the only vertex".into()));
    }
    let keep: Vec<usize> = (0..g.n()).filter(|&u| u != v).collect();
    g.induced(&keep)
}

/// Attaches `target_n - n` new leaves to the root of each graph.
pub fn pad_with_pendants(
    g: &RootedGraph,
    h: &RootedGraph,
    target_n: usize,
) -> Result<(RootedGraph, RootedGraph)> {
    if g.graph.n() != h.graph.n() {
        return Err(Error::InvalidArgument("padded graphs must have equal order".into()));
    }
    let n = g.graph.n();
    if target_n < n {
        return Err(Error::InvalidArgument(format!("target {target_n} below current order {n}")));
    }
    let pad = |r: &RootedGraph| {
        let mut out = r.graph.clone();
        let first = out.add_vertices(target_n - n);
        for leaf in first..target_n {
            out.add_edge(r.root, leaf).expect("fresh vertex");
        }
        RootedGraph {
            graph: out,
            root: r.root,
        }
    };
    Ok((pad(g), pad(h)))
}

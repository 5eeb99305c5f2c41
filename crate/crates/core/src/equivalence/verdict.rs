use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{canonical_key, rooted_key, CanonKey};
use crate::graph::{to_graph6, Graph, RootedGraph};
use crate::walk::{closed_walk_rows, walk_rows};
use crate::{Error, Result};

type Rows = Vec<Vec<BigInt>>;

/// An explicit list of connected `n`-vertex graphs, one per isomorphism
/// class, with every vertex indexed by its `W` and `R` profiles (first `2n`
/// terms).
pub struct Universe {
    descriptor: String,
    n: usize,
    graphs: Vec<Graph>,
    keys: Vec<CanonKey>,
    w_rows: Vec<Rows>,
    r_rows: Vec<Rows>,
    by_w: HashMap<Vec<BigInt>, Vec<(usize, usize)>>,
    by_r: HashMap<Vec<BigInt>, Vec<(usize, usize)>>,
}

impl Universe {
    pub fn new(descriptor: impl Into<String>, n: usize, graphs: Vec<Graph>) -> Result<Self> {
        if let Some(g) = graphs.iter().find(|g| g.n() != n || !g.is_connected()) {
            return Err(Error::InvalidArgument(format!(
                "universe members must be connected with {n} vertices (found n = {})",
                g.n()
            )));
        }
        let len = 2 * n;
        let computed: Vec<(CanonKey, Rows, Rows)> = graphs
            .par_iter()
            .map(|g| -> Result<_> {
                Ok((canonical_key(g)?, walk_rows(g, len - 1), closed_walk_rows(g, len - 1)))
            })
            .collect::<Result<_>>()?;
        let mut keys = Vec::with_capacity(graphs.len());
        let mut w_rows = Vec::with_capacity(graphs.len());
        let mut r_rows = Vec::with_capacity(graphs.len());
        let mut by_w: HashMap<_, Vec<_>> = HashMap::new();
        let mut by_r: HashMap<_, Vec<_>> = HashMap::new();
        for (gi, (key, w, r)) in computed.into_iter().enumerate() {
            for v in 0..n {
                by_w.entry(w[v].clone()).or_default().push((gi, v));
                by_r.entry(r[v].clone()).or_default().push((gi, v));
            }
            keys.push(key);
            w_rows.push(w);
            r_rows.push(r);
        }
        let mut sorted = keys.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("universe repeats an isomorphism class".into()));
        }
        Ok(Self {
            descriptor: descriptor.into(),
            n,
            graphs,
            keys,
            w_rows,
            r_rows,
            by_w,
            by_r,
        })
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn key(&self, index: usize) -> &CanonKey {
        &self.keys[index]
    }

    /// Index of the member isomorphic to `g`, if any.
    pub fn position(&self, g: &Graph) -> Result<Option<usize>> {
        if g.n() != self.n {
            return Ok(None);
        }
        let key = canonical_key(g)?;
        Ok(self.keys.iter().position(|k| *k == key))
    }

    /// Walk profile of vertex `v` of member `index` (first `2n` terms).
    pub fn walk_row(&self, index: usize, v: usize) -> &[BigInt] {
        &self.w_rows[index][v]
    }

    pub fn closed_row(&self, index: usize, v: usize) -> &[BigInt] {
        &self.r_rows[index][v]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Decisive,
    /// Witness `(H, u)` with `H ≇ G` and both profiles equal.
    Ambivalent { witness: RootedGraph },
    NeitherDetermined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexVerdict {
    pub status: Status,
    pub w_decisive: bool,
    pub r_decisive: bool,
    pub universe: String,
}

impl VertexVerdict {
    pub fn is_decisive(&self) -> bool {
        self.status == Status::Decisive
    }

    pub fn is_ambivalent(&self) -> bool {
        matches!(self.status, Status::Ambivalent { .. })
    }

    pub fn report(&self, g: &Graph, v: usize) -> Result<VerdictReport> {
        let (status, witness_graph6, witness_vertex) = match &self.status {
            Status::Decisive => ("decisive", None, None),
            Status::NeitherDetermined => ("neither", None, None),
            Status::Ambivalent { witness } => (
                "ambivalent",
                Some(to_graph6(&witness.graph)?),
                Some(witness.root),
            ),
        };
        Ok(VerdictReport {
            graph: to_graph6(g)?,
            vertex: v,
            status: status.to_string(),
            witness_graph6,
            witness_vertex,
            w_decisive: self.w_decisive,
            r_decisive: self.r_decisive,
            universe: self.universe.clone(),
        })
    }
}

/// JSON verdict report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub graph: String,
    pub vertex: usize,
    pub status: String,
    pub witness_graph6: Option<String>,
    pub witness_vertex: Option<usize>,
    pub w_decisive: bool,
    pub r_decisive: bool,
    pub universe: String,
}

/// Decides whether `v` is decisive, ambivalent or neither, relative to the
/// graphs of `universe` (which may include `G` itself).
pub fn vertex_verdict(g: &Graph, v: usize, universe: &Universe) -> Result<VertexVerdict> {
    g.check_vertex(v)?;
    if g.n() != universe.n || !g.is_connected() {
        return Err(Error::InvalidArgument(format!(
            "vertex verdict needs a connected graph on {} vertices",
            universe.n
        )));
    }
    let len = 2 * g.n();
    let w = walk_rows(g, len - 1).swap_remove(v);
    let r = closed_walk_rows(g, len - 1).swap_remove(v);
    let own = canonical_key(g)?;
    let rooted = rooted_key(g, v)?;
    let none = Vec::new();

    let is_rooted_iso = |gi: usize, u: usize| -> Result<bool> {
        Ok(universe.keys[gi] == own && rooted_key(&universe.graphs[gi], u)? == rooted)
    };
    let decisive_on = |matches: &[(usize, usize)]| -> Result<bool> {
        for &(gi, u) in matches {
            if !is_rooted_iso(gi, u)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let w_matches = universe.by_w.get(&w).unwrap_or(&none);
    let r_matches = universe.by_r.get(&r).unwrap_or(&none);
    let w_decisive = decisive_on(w_matches)?;
    let r_decisive = decisive_on(r_matches)?;

    let witness = w_matches
        .iter()
        .find(|&&(gi, u)| universe.keys[gi] != own && universe.r_rows[gi][u] == r);
    let status = match witness {
        Some(&(gi, u)) => Status::Ambivalent {
            witness: RootedGraph::new(universe.graphs[gi].clone(), u)?,
        },
        None if w_decisive && r_decisive => Status::Decisive,
        None => Status::NeitherDetermined,
    };
    Ok(VertexVerdict {
        status,
        w_decisive,
        r_decisive,
        universe: universe.descriptor.clone(),
    })
}

//! Vertex-pair classification and the decisive/ambivalent verdicts.

mod canon;
mod verdict;

use num_bigint::BigInt;
use serde::Serialize;

use crate::graph::{vertex_deleted, Graph};
use crate::walk::{closed_walk_counts, closed_triples, graph_char_poly, walk_counts, ClosedTriple};
use crate::algebra::Poly;
use crate::{Error, Result};

pub use canon::{
    canonical_form, canonical_graph, canonical_key, general_canonical_form, isomorphic,
    rooted_canonical_form, rooted_isomorphic, rooted_key, CanonForm, CanonKey, MAX_GENERAL_N,
};
pub use verdict::{vertex_verdict, Status, Universe, VertexVerdict, VerdictReport};

/// Number of profile terms compared for graphs of orders `n` and `m`.
pub fn threshold(n: usize, m: usize) -> usize {
    n + m
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected(format!("graph on {} vertices", g.n())))
    }
}

/// Walk and closed-walk profiles of `(g, v)` truncated to `len` terms.
pub fn profiles(g: &Graph, v: usize, len: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    let k = len.saturating_sub(1);
    let mut w = walk_counts(g, v, k)?.counts;
    let mut r = closed_walk_counts(g, v, k)?.counts;
    w.truncate(len);
    r.truncate(len);
    Ok((w, r))
}

fn compare(g: &Graph, v: usize, h: &Graph, u: usize) -> Result<(bool, bool)> {
    require_connected(g)?;
    require_connected(h)?;
    let len = threshold(g.n(), h.n());
    let (wg, rg) = profiles(g, v, len)?;
    let (wh, rh) = profiles(h, u, len)?;
    Ok((wg == wh, rg == rh))
}

/// `W_G(v) = W_H(u)`, decided on the first `n + m` terms.
pub fn walk_equivalent(g: &Graph, v: usize, h: &Graph, u: usize) -> Result<bool> {
    Ok(compare(g, v, h, u)?.0)
}

/// `R_G(v) = R_H(u)`, decided on the first `n + m` terms.
pub fn closed_walk_equivalent(g: &Graph, v: usize, h: &Graph, u: usize) -> Result<bool> {
    Ok(compare(g, v, h, u)?.1)
}

pub fn strongly_walk_equivalent(g: &Graph, v: usize, h: &Graph, u: usize) -> Result<bool> {
    let (w, r) = compare(g, v, h, u)?;
    Ok(w && r)
}

/// Automorphism of `g` mapping `x` to `y`.
pub fn similar(g: &Graph, x: usize, y: usize) -> Result<bool> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    rooted_isomorphic(g, x, g, y)
}

/// `G - x` and `G - y` are isomorphic.
pub fn removal_similar(g: &Graph, x: usize, y: usize) -> Result<bool> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Ok(true);
    }
    Ok(isomorphic(&vertex_deleted(g, x)?, &vertex_deleted(g, y)?)?.is_some())
}

pub fn pseudosimilar(g: &Graph, x: usize, y: usize) -> Result<bool> {
    Ok(removal_similar(g, x, y)? && !similar(g, x, y)?)
}

fn deleted_char_poly(g: &Graph, v: usize) -> Result<Poly> {
    if g.n() == 1 {
        return Ok(Poly::one());
    }
    Ok(graph_char_poly(&vertex_deleted(g, v)?))
}

/// `P_{G-x} = P_{G-y}`.
pub fn cospectral_vertices(g: &Graph, x: usize, y: usize) -> Result<bool> {
    if g.n() < 2 {
        return Err(Error::InvalidArgument("cospectral vertices need n >= 2".into()));
    }
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    Ok(deleted_char_poly(g, x)? == deleted_char_poly(g, y)?)
}

/// Cross-graph cospectrality: `P_{G-x} / P_G = P_{H-y} / P_H`, compared as
/// `P_{G-x} P_H = P_{H-y} P_G`.
pub fn cospectral_pair(g: &Graph, x: usize, h: &Graph, y: usize) -> Result<bool> {
    g.check_vertex(x)?;
    h.check_vertex(y)?;
    let lhs = &deleted_char_poly(g, x)? * &graph_char_poly(h);
    let rhs = &deleted_char_poly(h, y)? * &graph_char_poly(g);
    Ok(lhs == rhs)
}

/// Classification of a vertex pair `x ∈ G`, `y ∈ H`.
///
/// Across two graphs, `removal_similar` means `G ≅ H` and `G - x ≅ H - y`,
/// and `similar` means `(G, x) ≅ (H, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub walk_eq: bool,
    pub closed_walk_eq: bool,
    pub removal_similar: bool,
    pub similar: bool,
    pub cospectral: bool,
}

impl PairVerdict {
    /// Builds a verdict, rejecting combinations that contradict the
    /// implications between the notions.
    pub fn new(
        walk_eq: bool,
        closed_walk_eq: bool,
        removal_similar: bool,
        similar: bool,
        cospectral: bool,
    ) -> Result<Self> {
        let v = Self {
            walk_eq,
            closed_walk_eq,
            removal_similar,
            similar,
            cospectral,
        };
        let broken = if similar && !removal_similar {
            Some("similar but not removal-similar")
        } else if removal_similar && !walk_eq {
            Some("removal-similar but not walk-equivalent")
        } else if removal_similar && !cospectral {
            Some("removal-similar but not cospectral")
        } else if cospectral != closed_walk_eq {
            Some("cospectrality disagrees with closed-walk equivalence")
        } else {
            None
        };
        match broken {
            Some(msg) => Err(Error::Integrity(format!("{msg}: {v:?}"))),
            None => Ok(v),
        }
    }

    pub fn strongly(&self) -> bool {
        self.walk_eq && self.closed_walk_eq
    }

    pub fn pseudosimilar(&self) -> bool {
        self.removal_similar && !self.similar
    }
}

pub fn classify_pair(g: &Graph, x: usize, h: &Graph, y: usize) -> Result<PairVerdict> {
    g.check_vertex(x)?;
    h.check_vertex(y)?;
    let (walk_eq, closed_walk_eq) = compare(g, x, h, y)?;
    let same_graph = isomorphic(g, h)?.is_some();
    let removal_similar = same_graph
        && if g.n() == 1 {
            true
        } else {
            isomorphic(&vertex_deleted(g, x)?, &vertex_deleted(h, y)?)?.is_some()
        };
    let similar = same_graph && rooted_isomorphic(g, x, h, y)?;
    let cospectral = cospectral_pair(g, x, h, y)?;
    PairVerdict::new(walk_eq, closed_walk_eq, removal_similar, similar, cospectral)
}

/// Closed triples of every vertex plus the classes of colliding vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleLabeling {
    pub triples: Vec<ClosedTriple>,
    /// Vertex classes of size at least two sharing a triple, sorted.
    pub collisions: Vec<Vec<usize>>,
}

impl TripleLabeling {
    pub fn is_canonical(&self) -> bool {
        self.collisions.is_empty()
    }
}

pub fn canonical_triple_labeling(g: &Graph) -> TripleLabeling {
    let triples = closed_triples(g);
    let mut idx: Vec<usize> = (0..g.n()).collect();
    idx.sort_by_key(|&v| (triples[v], v));
    let mut collisions: Vec<Vec<usize>> = idx
        .chunk_by(|&a, &b| triples[a] == triples[b])
        .filter(|c| c.len() > 1)
        .map(<[usize]>::to_vec)
        .collect();
    collisions.sort();
    TripleLabeling {
        triples,
        collisions,
    }
}

#[cfg(test)]
mod tests;

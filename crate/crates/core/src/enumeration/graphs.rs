use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::equivalence::{canonical_form, CanonKey};
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order for which connected graphs are enumerated.
pub const MAX_GRAPH_N: usize = 7;

fn canonical(g: &Graph) -> Result<(CanonKey, Graph)> {
    let form = canonical_form(g)?;
    let mut perm = vec![0; g.n()];
    for (i, &v) in form.order.iter().enumerate() {
        perm[v] = i;
    }
    Ok((form.key, g.relabel(&perm)?))
}

/// Non-isomorphic connected graphs on `n <= 7` vertices, in canonical
/// labeling, sorted by canonical key.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// extending each connected `(n-1)`-vertex graph by a new vertex with every
/// nonempty neighborhood reaches every class; duplicates are removed by
/// canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_GRAPH_N {
        return Err(Error::Budget(format!(
            "connected graph enumeration limited to n <= {MAX_GRAPH_N}, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)?];
    for m in 1..n {
        let found: Vec<Vec<(CanonKey, Graph)>> = level
            .par_iter()
            .map(|g| {
                (1u32..1 << m)
                    .map(|mask| {
                        let mut h = g.clone();
                        let w = h.add_vertices(1);
                        for u in (0..m).filter(|u| mask >> u & 1 == 1) {
                            h.add_edge(u, w)?;
                        }
                        canonical(&h)
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        let unique: BTreeMap<CanonKey, Graph> = found.into_iter().flatten().collect();
        level = unique.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(enumerate_connected_graphs(8).is_err());
    }
}

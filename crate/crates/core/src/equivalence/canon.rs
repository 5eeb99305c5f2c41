//! Canonical forms: AHU codes for trees and forests, refinement plus
//! individualization for small general graphs.

use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order accepted by the general-graph search.
pub const MAX_GENERAL_N: usize = 16;
const LEAF_BUDGET: usize = 1 << 18;

/// Isomorphism-invariant byte string; equal keys mean isomorphic inputs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey(pub Vec<u8>);

/// A canonical key together with a canonical vertex order: `order[i]` is
/// the vertex placed at canonical position `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonForm {
    pub key: CanonKey,
    pub order: Vec<usize>,
}

const TREE: u8 = b'T';
const FOREST: u8 = b'F';
const ROOTED_TREE: u8 = b'R';
const GENERAL: u8 = b'G';

/// AHU code of the subtree at `v` (away from `parent`), with the vertices
/// listed in canonical order.
fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> (Vec<u8>, Vec<usize>) {
    let mut kids: Vec<(Vec<u8>, Vec<usize>)> = g
        .neighbors(v)
        .iter()
        .filter(|&&u| Some(u) != parent)
        .map(|&u| rooted_code(g, u, Some(v)))
        .collect();
    kids.sort_by(|a, b| a.0.cmp(&b.0));
    let mut code = vec![b'('];
    let mut order = vec![v];
    for (c, o) in kids {
        code.extend(c);
        order.extend(o);
    }
    code.push(b')');
    (code, order)
}

/// Centers of a tree (one or two vertices), found by leaf stripping.
fn centers(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    let mut deg = vec![0usize; g.n()];
    for &v in vertices {
        deg[v] = g.degree(v);
    }
    let mut layer: Vec<usize> = vertices.iter().copied().filter(|&v| deg[v] <= 1).collect();
    let mut left = vertices.len();
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &x in &layer {
            for &y in g.neighbors(x) {
                if deg[y] > 1 {
                    deg[y] -= 1;
                    if deg[y] == 1 {
                        next.push(y);
                    }
                }
            }
            deg[x] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Free-tree code for the component containing `vertices`.
fn tree_code(g: &Graph, vertices: &[usize]) -> (Vec<u8>, Vec<usize>) {
    match centers(g, vertices)[..] {
        [c] => rooted_code(g, c, None),
        [a, b] => {
            let mut halves = [rooted_code(g, a, Some(b)), rooted_code(g, b, Some(a))];
            halves.sort_by(|x, y| x.0.cmp(&y.0));
            let [(c1, o1), (c2, o2)] = halves;
            let mut code = vec![b'['];
            code.extend(c1);
            code.extend(c2);
            code.push(b']');
            (code, [o1, o2].concat())
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

fn forest_form(g: &Graph) -> CanonForm {
    let mut parts: Vec<(Vec<u8>, Vec<usize>)> =
        g.components().iter().map(|c| tree_code(g, c)).collect();
    parts.sort_by(|a, b| a.0.cmp(&b.0));
    let mut key = vec![FOREST];
    let mut order = Vec::with_capacity(g.n());
    for (c, o) in parts {
        key.extend(c);
        order.extend(o);
    }
    CanonForm {
        key: CanonKey(key),
        order,
    }
}

/// Canonical form of any graph: AHU codes for trees and forests, the
/// general search otherwise (at most [`MAX_GENERAL_N`] vertices).
pub fn canonical_form(g: &Graph) -> Result<CanonForm> {
    if g.is_tree() {
        let all: Vec<usize> = (0..g.n()).collect();
        let (code, order) = tree_code(g, &all);
        let mut key = vec![TREE];
        key.extend(code);
        return Ok(CanonForm {
            key: CanonKey(key),
            order,
        });
    }
    if g.is_forest() {
        return Ok(forest_form(g));
    }
    general_canonical_form(g, &vec![0; g.n()])
}

/// Canonical form of the rooted graph `(g, root)`; the root is always at
/// canonical position 0.
pub fn rooted_canonical_form(g: &Graph, root: usize) -> Result<CanonForm> {
    g.check_vertex(root)?;
    if g.is_tree() {
        let (code, order) = rooted_code(g, root, None);
        let mut key = vec![ROOTED_TREE];
        key.extend(code);
        return Ok(CanonForm {
            key: CanonKey(key),
            order,
        });
    }
    let mut colors = vec![1; g.n()];
    colors[root] = 0;
    general_canonical_form(g, &colors)
}

pub fn canonical_key(g: &Graph) -> Result<CanonKey> {
    Ok(canonical_form(g)?.key)
}

pub fn rooted_key(g: &Graph, root: usize) -> Result<CanonKey> {
    Ok(rooted_canonical_form(g, root)?.key)
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let order = canonical_form(g)?.order;
    let mut perm = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    g.relabel(&perm)
}

/// Ranks values so that equal values share a rank and ranks follow the
/// value order.
fn rank<T: Ord + Clone>(values: &[T]) -> (Vec<u32>, usize) {
    let mut uniq: Vec<T> = values.to_vec();
    uniq.sort();
    uniq.dedup();
    let ranks = values
        .iter()
        .map(|x| uniq.binary_search(x).expect("present") as u32)
        .collect();
    (ranks, uniq.len())
}

/// Color refinement to the coarsest stable refinement of `colors`.
fn refine(g: &Graph, colors: &[u32]) -> Vec<u32> {
    let (mut colors, mut count) = rank(colors);
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let (next, next_count) = rank(&sigs);
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

struct Search<'a> {
    g: &'a Graph,
    initial: Vec<u32>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    leaves: usize,
}

impl Search<'_> {
    fn leaf_code(&self, order: &[usize]) -> Vec<u8> {
        let n = order.len();
        let mut code = Vec::with_capacity(n + n * n / 16 + 1);
        code.extend(order.iter().map(|&v| self.initial[v] as u8));
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | u8::from(self.g.has_edge(order[i], order[j]));
                filled += 1;
                if filled == 8 {
                    code.push(acc);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            code.push(acc << (8 - filled));
        }
        code
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let (bu, bv) = (self.g.neighbor_bits(u), self.g.neighbor_bits(v));
        bu.iter().zip(bv).enumerate().all(|(w, (&a, &b))| {
            let mask = |x: usize| if x / 64 == w { !(1u64 << (x % 64)) } else { !0 };
            a & mask(v) == b & mask(u)
        })
    }

    fn run(&mut self, colors: Vec<u32>) -> Result<()> {
        let n = self.g.n();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let target = (0..n)
            .filter(|&c| sizes[c] > 1)
            .min_by_key(|&c| (sizes[c], c));
        let Some(target) = target else {
            self.leaves += 1;
            if self.leaves > LEAF_BUDGET {
                return Err(Error::Budget(format!(
                    "canonical labeling exceeded {LEAF_BUDGET} search leaves"
                )));
            }
            let mut order = vec![0; n];
            for (v, &c) in colors.iter().enumerate() {
                order[c as usize] = v;
            }
            let code = self.leaf_code(&order);
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, order));
            }
            return Ok(());
        };
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] as usize == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let split: Vec<(u32, bool)> = (0..n).map(|w| (colors[w], w != v)).collect();
            let (ranked, _) = rank(&split);
            self.run(refine(self.g, &ranked))?;
        }
        Ok(())
    }
}

/// Canonical form by color refinement and individualization, keeping the
/// lexicographically least leaf. `colors` is an initial vertex coloring
/// that the form must respect.
pub fn general_canonical_form(g: &Graph, colors: &[u32]) -> Result<CanonForm> {
    let n = g.n();
    if n > MAX_GENERAL_N {
        return Err(Error::Budget(format!(
            "general isomorphism limited to n <= {MAX_GENERAL_N}, got {n}"
        )));
    }
    if colors.len() != n {
        return Err(Error::InvalidArgument("one color per vertex required".into()));
    }
    let (initial, _) = rank(colors);
    let mut search = Search {
        g,
        initial: initial.clone(),
        best: None,
        leaves: 0,
    };
    search.run(refine(g, &initial))?;
    let (code, order) = search.best.expect("at least one leaf");
    let mut key = vec![GENERAL, n as u8];
    key.extend(code);
    Ok(CanonForm {
        key: CanonKey(key),
        order,
    })
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(None);
    }
    let (a, b) = (canonical_form(g)?, canonical_form(h)?);
    if a.key != b.key {
        return Ok(None);
    }
    let mut map = vec![0; g.n()];
    for (i, &v) in a.order.iter().enumerate() {
        map[v] = b.order[i];
    }
    Ok(Some(map))
}

/// Whether the rooted graphs `(g, x)` and `(h, y)` are isomorphic.
pub fn rooted_isomorphic(g: &Graph, x: usize, h: &Graph, y: usize) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree(x) != h.degree(y) {
        return Ok(false);
    }
    Ok(rooted_key(g, x)? == rooted_key(h, y)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, random_gnp, random_tree, star};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shuffled(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        (g.relabel(&perm).unwrap(), perm)
    }

    fn is_iso_map(g: &Graph, h: &Graph, map: &[usize]) -> bool {
        g.edges().iter().all(|&(u, v)| h.has_edge(map[u], map[v]))
    }

    #[test]
    fn trees_relabel_invariant() {
        for seed in 0..200 {
            let t = random_tree(1 + (seed % 30) as usize, seed).unwrap();
            let (u, _) = shuffled(&t, seed + 1000);
            let map = isomorphic(&t, &u).unwrap().expect("relabeled copy");
            assert!(is_iso_map(&t, &u, &map));
        }
    }

    #[test]
    fn general_relabel_invariant() {
        for seed in 0..200 {
            let g = random_gnp(1 + (seed % 12) as usize, 0.4, seed).unwrap();
            let (h, _) = shuffled(&g, seed + 7);
            let map = isomorphic(&g, &h).unwrap().expect("relabeled copy");
            assert!(is_iso_map(&g, &h, &map));
            let a = general_canonical_form(&g, &vec![0; g.n()]).unwrap();
            let b = general_canonical_form(&h, &vec![0; h.n()]).unwrap();
            assert_eq!(a.key, b.key);
        }
    }

    #[test]
    fn symmetric_graphs_stay_within_budget() {
        for g in [complete(16).unwrap(), star(15).unwrap(), cycle(16).unwrap()] {
            general_canonical_form(&g, &vec![0; g.n()]).unwrap();
        }
        assert!(matches!(
            general_canonical_form(&path(17).unwrap(), &[0; 17]),
            Err(Error::Budget(_))
        ));
    }

    #[test]
    fn distinguishes_small_graphs() {
        let p4 = path(4).unwrap();
        let s3 = star(3).unwrap();
        assert!(isomorphic(&p4, &s3).unwrap().is_none());
        let c6 = cycle(6).unwrap();
        let two_triangles = complete(3).unwrap().disjoint_union(&complete(3).unwrap());
        assert!(isomorphic(&c6, &two_triangles).unwrap().is_none());
    }

    #[test]
    fn rooted_forms() {
        let p4 = path(4).unwrap();
        assert!(rooted_isomorphic(&p4, 0, &p4, 3).unwrap());
        assert!(!rooted_isomorphic(&p4, 0, &p4, 1).unwrap());
        let c5 = cycle(5).unwrap();
        assert!(rooted_isomorphic(&c5, 0, &c5, 3).unwrap());
    }

    #[test]
    fn tree_codes_agree_with_general_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for seed in 0..500u64 {
            let n = 1 + (seed % 12) as usize;
            let a = random_tree(n, seed).unwrap();
            let b = random_tree(n, seed.wrapping_mul(31) + 1).unwrap();
            let by_code = canonical_key(&a).unwrap() == canonical_key(&b).unwrap();
            let by_search = general_canonical_form(&a, &vec![0; n]).unwrap().key
                == general_canonical_form(&b, &vec![0; n]).unwrap().key;
            assert_eq!(by_code, by_search);
            let x = rand::Rng::gen_range(&mut rng, 0..n);
            let y = rand::Rng::gen_range(&mut rng, 0..n);
            let mut ca = vec![1; n];
            ca[x] = 0;
            let mut cb = vec![1; n];
            cb[y] = 0;
            assert_eq!(
                rooted_key(&a, x).unwrap() == rooted_key(&b, y).unwrap(),
                general_canonical_form(&a, &ca).unwrap().key
                    == general_canonical_form(&b, &cb).unwrap().key
            );
        }
    }

    #[test]
    fn forests() {
        let f = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let g = Graph::from_edges(5, &[(3, 4), (0, 2)]).unwrap();
        assert!(isomorphic(&f, &g).unwrap().is_some());
        let h = Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap();
        assert!(isomorphic(&f, &h).unwrap().is_none());
    }
}

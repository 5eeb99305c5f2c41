use std::collections::HashSet;

use walklab::enumeration::{
    ambivalent_vertex_census, cross_size_census, enumerate_connected_graphs, enumerate_trees,
    walk_identifiability_census, Mode,
};
use walklab::equivalence::{canonical_key, isomorphic};
use walklab::graph::{fixture, from_graph6, Graph};

fn same_tree(g6: &str, name: &str) -> bool {
    let g = from_graph6(g6).unwrap();
    isomorphic(&g, &fixture(name).unwrap().graph).unwrap().is_some()
}

#[test]
fn no_cross_tree_matches_up_to_11() {
    for n in 1..=11 {
        let c = ambivalent_vertex_census(n).unwrap();
        assert!(c.cross_pairs.is_empty(), "n = {n}: {:?}", c.cross_pairs);
    }
    let hp = ambivalent_vertex_census(11).unwrap();
    assert!(!hp.within.is_empty());
}

#[test]
fn twelve_vertex_pair() {
    let c = ambivalent_vertex_census(12).unwrap();
    assert_eq!(c.cross_pairs.len(), 1);
    let p = &c.cross_pairs[0];
    let fwd = same_tree(&p.t, "amb12_T") && same_tree(&p.s, "amb12_S");
    let rev = same_tree(&p.t, "amb12_S") && same_tree(&p.s, "amb12_T");
    assert!(fwd || rev);
    assert!(p.strongly());
}

#[test]
fn thirteen_vertex_pairs() {
    let c = ambivalent_vertex_census(13).unwrap();
    assert_eq!(c.cross_pairs.len(), 3, "{:#?}", c.cross_pairs);
    let strong = c.cross_pairs.iter().filter(|p| p.strongly()).count();
    assert_eq!(strong, 2);
    let sporadic = c.cross_pairs.iter().find(|p| !p.strongly()).unwrap();
    let hit = (same_tree(&sporadic.t, "sporadic13_T") && same_tree(&sporadic.s, "sporadic13_S"))
        || (same_tree(&sporadic.t, "sporadic13_S") && same_tree(&sporadic.s, "sporadic13_T"));
    assert!(hit);
}

#[test]
fn cross_size_censuses() {
    let strong = cross_size_census(11, Mode::Strong).unwrap();
    assert_eq!(strong.len(), 1);
    assert!(same_tree(&strong[0].large, "diststrong_T11") && same_tree(&strong[0].small, "diststrong_S10"));

    let closed = cross_size_census(7, Mode::Closed).unwrap();
    assert_eq!(closed.len(), 1);
    assert!(same_tree(&closed[0].large, "p7") && same_tree(&closed[0].small, "y5"));

    let walk = cross_size_census(11, Mode::Walk).unwrap();
    assert_eq!(walk.len(), 4, "{walk:#?}");
    assert!(walk.iter().all(|p| p.large_n == 11));
    let mut smalls: Vec<usize> = walk.iter().map(|p| p.small_n).collect();
    smalls.sort_unstable();
    assert_eq!(smalls, vec![8, 9, 9, 10]);
    assert!(walk
        .iter()
        .any(|p| same_tree(&p.small, "dist_T8") && same_tree(&p.large, "dist_S11")));
}

#[test]
fn identifiability_small() {
    let r = walk_identifiability_census(12).unwrap();
    assert!(r.all_identifiable());
    assert_eq!(r.levels[11].trees, 551);
}

/// Independent tree-count oracle: grow every tree on `n - 1` vertices by a
/// leaf in every position and deduplicate by canonical form.
fn leaf_extension_counts(n_max: usize) -> Vec<usize> {
    let mut level = vec![Graph::from_edges(1, &[]).unwrap()];
    let mut counts = vec![1];
    for n in 2..=n_max {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.n() {
                let mut edges = t.edges();
                edges.push((v, n - 1));
                let g = Graph::from_edges(n, &edges).unwrap();
                if seen.insert(canonical_key(&g).unwrap()) {
                    next.push(g);
                }
            }
        }
        counts.push(next.len());
        level = next;
    }
    counts
}

/// Brute-force oracle for small n: decode every Prüfer sequence.
fn prufer_counts(n: usize) -> usize {
    let total = n.pow(n as u32 - 2);
    let mut seen = HashSet::new();
    for mut code in 0..total {
        let mut seq = Vec::with_capacity(n - 2);
        for _ in 0..n - 2 {
            seq.push(code % n);
            code /= n;
        }
        let g = prufer_tree(n, &seq);
        seen.insert(canonical_key(&g).unwrap());
    }
    seen.len()
}

fn prufer_tree(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn tree_counts_match_independent_oracles() {
    let oracle = leaf_extension_counts(14);
    for n in 1..=14 {
        assert_eq!(enumerate_trees(n).count(), oracle[n - 1], "n = {n}");
    }
    for n in 3..=8 {
        assert_eq!(enumerate_trees(n).count(), prufer_counts(n), "n = {n}");
    }
}

#[test]
fn emitted_trees_are_canonical_under_relabeling() {
    for n in 1..=10 {
        for t in enumerate_trees(n) {
            let perm: Vec<usize> = (0..n).rev().collect();
            let u = t.relabel(&perm).unwrap();
            assert_eq!(canonical_key(&t).unwrap(), canonical_key(&u).unwrap());
        }
    }
}

/// Brute-force canonical form: least upper-triangle bit string over all
/// permutations.
fn brute_canon(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let bits: Vec<bool> = (0..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| g.has_edge(perm[i], perm[j]))
            .collect();
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best.unwrap()
}

#[test]
fn connected_graph_counts_match_mask_sweep() {
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut classes = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                classes.insert(brute_canon(&g));
            }
        }
        let ours = enumerate_connected_graphs(n).unwrap();
        assert_eq!(ours.len(), classes.len(), "n = {n}");
        let theirs: HashSet<Vec<bool>> = ours.iter().map(brute_canon).collect();
        assert_eq!(theirs, classes);
    }
    assert_eq!(enumerate_connected_graphs(7).unwrap().len(), 853);
}

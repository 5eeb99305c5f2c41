use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::{Error, Result};

/// Sub-seed for the `index`-th item of a run: the splitmix64 finalizer
/// applied to `seed ^ (index + 1) * golden_gamma`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform random labeled tree via Prüfer decoding.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("random_tree needs n >= 1".into()));
    }
    if n <= 2 {
        return Graph::from_edges(n, if n == 2 { &[(0, 1)] } else { &[] });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, &prufer_decode(n, &code))
}

/// Decodes a Prüfer sequence of length `n - 2` into tree edges.
pub(crate) fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf.min(n - 1), leaf.max(n - 1)));
    edges
}

/// Erdős–Rényi `G(n, p)`; pairs `i < j` are drawn in lexicographic order.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n)?;
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// Rejection-samples `G(n, p)` until connected, trying sub-seeds in turn.
pub fn random_connected_gnp(n: usize, p: f64, seed: u64, max_tries: usize) -> Result<Graph> {
    for i in 0..max_tries {
        let g = random_gnp(n, p, derive_seed(seed, i as u64))?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::Budget(format!("no connected G({n}, {p}) within {max_tries} tries")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn tree_edge_counts() {
        assert_eq!(random_tree(2, 99).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(random_tree(1, 0).unwrap().n(), 1);
        for seed in 0..50 {
            let t = random_tree(20, seed).unwrap();
            assert!(t.is_tree());
            assert_eq!(t.edge_count(), 19);
        }
    }

    #[test]
    fn prufer_is_bijective_on_small_n() {
        let n = 5;
        let mut trees = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let mut e = prufer_decode(n, &[a, b, c]);
                    e.sort_unstable();
                    trees.insert(e);
                }
            }
        }
        assert_eq!(trees.len(), 125);
    }

    #[test]
    fn gnp_mean_edge_count() {
        let n = 100;
        let total: usize = (0..200).map(|s| random_gnp(n, 0.5, s).unwrap().edge_count()).sum();
        let mean = total as f64 / 200.0;
        let sigma = ((n * (n - 1)) as f64 / 8.0).sqrt() / (200f64).sqrt();
        assert!((mean - 2475.0).abs() < 3.0 * sigma, "mean {mean}");
        assert!(random_gnp(3, 1.5, 0).is_err());
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_gnp(30, 0.3, 7).unwrap(), random_gnp(30, 0.3, 7).unwrap());
        assert_eq!(random_tree(30, 7).unwrap(), random_tree(30, 7).unwrap());
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
    }
}

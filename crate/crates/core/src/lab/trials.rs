use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::ambivalent_vertex_census;
use crate::equivalence::{canonical_key, rooted_key, CanonKey};
use crate::graph::{derive_seed, from_graph6, random_gnp, random_tree, Graph};
use crate::walk::{closed_triples, walk_counts_between, walk_rows};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub collisions: usize,
    pub rate: f64,
}

/// Runs `trials` independent trials; trial `i` gets sub-seed
/// `derive_seed(seed, i)`, so the count does not depend on scheduling.
pub fn run_trials<F>(n: usize, trials: usize, seed: u64, trial: F) -> Result<TrialReport>
where
    F: Fn(u64) -> Result<bool> + Sync,
{
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial".into()));
    }
    let hits = (0..trials as u64)
        .into_par_iter()
        .map(|i| trial(derive_seed(seed, i)).map(usize::from))
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(TrialReport {
        n,
        trials,
        seed,
        collisions: hits,
        rate: hits as f64 / trials as f64,
    })
}

/// True iff two vertices share their `(r2, r3, r4)` triple.
pub fn triple_collision(g: &Graph) -> bool {
    let mut t = closed_triples(g);
    t.sort_unstable();
    t.windows(2).any(|w| w[0] == w[1])
}

/// Fraction of `G(n, 1/2)` samples in which some vertex pair shares its
/// closed-walk triple.
pub fn random_triple_trial(n: usize, trials: usize, seed: u64) -> Result<TrialReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("triple trials need n >= 2".into()));
    }
    run_trials(n, trials, seed, |s| Ok(triple_collision(&random_gnp(n, 0.5, s)?)))
}

/// One [`random_triple_trial`] per entry of `ns`, all from the same seed.
pub fn rate_curve(ns: &[usize], trials: usize, seed: u64) -> Result<Vec<TrialReport>> {
    ns.iter().map(|&n| random_triple_trial(n, trials, seed)).collect()
}

pub fn rate_curve_csv(reports: &[TrialReport]) -> String {
    let mut out = String::from("n,trials,collisions,rate\n");
    for r in reports {
        out.push_str(&format!("{},{},{},{}\n", r.n, r.trials, r.collisions, r.rate));
    }
    out
}

/// True iff the tree has two non-similar vertices with equal walk and
/// closed-walk counts up to length `2n`.
pub fn tree_has_ambivalent_pair(t: &Graph) -> Result<bool> {
    let len = 2 * t.n();
    let rows = walk_rows(t, len);
    let mut groups: HashMap<&[_], Vec<usize>> = HashMap::new();
    for (v, row) in rows.iter().enumerate() {
        groups.entry(row.as_slice()).or_default().push(v);
    }
    for members in groups.values().filter(|m| m.len() > 1) {
        let mut by_closed: HashMap<Vec<_>, Vec<usize>> = HashMap::new();
        for &v in members {
            by_closed.entry(walk_counts_between(t, v, v, len)?).or_default().push(v);
        }
        for same in by_closed.values().filter(|m| m.len() > 1) {
            let first = rooted_key(t, same[0])?;
            for &v in &same[1..] {
                if rooted_key(t, v)? != first {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Up to this order the tree trial looks each sample up in the exhaustive
/// census instead of using the within-tree test.
pub const EXACT_TREE_N: usize = 12;

/// Canonical keys of the `n`-vertex trees with a vertex that is strongly
/// walk-equivalent to a vertex of a non-isomorphic tree.
fn ambivalent_trees(n: usize) -> Result<HashSet<CanonKey>> {
    let census = ambivalent_vertex_census(n)?;
    let mut keys = HashSet::new();
    for pair in census.cross_pairs.iter().filter(|p| p.strongly()) {
        for g6 in [&pair.t, &pair.s] {
            keys.insert(canonical_key(&from_graph6(g6)?)?);
        }
    }
    Ok(keys)
}

/// Fraction of uniform labeled trees on `n` vertices with an ambivalent
/// vertex. Up to [`EXACT_TREE_N`] vertices this is decided exactly against
/// all trees of the same order; above it a tree counts when it contains a
/// non-similar, strongly walk-equivalent vertex pair.
pub fn random_tree_ambivalence_trial(n: usize, trials: usize, seed: u64) -> Result<TrialReport> {
    if n < 1 {
        return Err(Error::InvalidArgument("tree trials need n >= 1".into()));
    }
    if n <= EXACT_TREE_N {
        let keys = ambivalent_trees(n)?;
        return run_trials(n, trials, seed, |s| Ok(keys.contains(&canonical_key(&random_tree(n, s)?)?)));
    }
    run_trials(n, trials, seed, |s| tree_has_ambivalent_pair(&random_tree(n, s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, fixture};

    #[test]
    fn complete_graph_always_collides() {
        for n in 2..8 {
            assert!(triple_collision(&complete(n).unwrap()));
        }
        let r = run_trials(5, 20, 1, |_| Ok(triple_collision(&complete(5)?))).unwrap();
        assert_eq!((r.collisions, r.rate), (20, 1.0));
    }

    #[test]
    fn reproducible_across_pools() {
        let a = random_triple_trial(12, 200, 7).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let b = pool.install(|| random_triple_trial(12, 200, 7)).unwrap();
        assert_eq!(a, b);
        assert!(a.collisions > 0 && a.collisions < 200);
    }

    #[test]
    fn within_tree_pairs() {
        assert!(tree_has_ambivalent_pair(&fixture("hp").unwrap().graph).unwrap());
        assert!(!tree_has_ambivalent_pair(&crate::graph::path(9).unwrap()).unwrap());
    }

    #[test]
    fn exact_range_uses_census() {
        let keys = ambivalent_trees(12).unwrap();
        assert_eq!(keys.len(), 2);
        assert!(keys.contains(&canonical_key(&fixture("amb12_T").unwrap().graph).unwrap()));
        assert!(ambivalent_trees(11).unwrap().is_empty());
        let r = random_tree_ambivalence_trial(11, 300, 3).unwrap();
        assert_eq!(r.collisions, 0);
    }

    #[test]
    fn csv_shape() {
        let r = rate_curve(&[6, 8], 10, 0).unwrap();
        let csv = rate_curve_csv(&r);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.starts_with("n,trials,collisions,rate\n6,10,"));
    }

    #[test]
    fn zero_trials_rejected() {
        assert!(random_triple_trial(5, 0, 0).is_err());
    }
}

//! Exhaustive and randomized checks of the vertex lemmas, the gluing
//! constructions and the walk-count oracles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{irreducibility_certificate, min_recurrence, poly_divides, primes_below, rank_exact, rats, Poly};
use crate::enumeration::{decisive_census, enumerate_connected_graphs};
use crate::equivalence::{
    closed_walk_equivalent, cospectral_vertices, removal_similar, strongly_walk_equivalent,
};
use crate::graph::{
    coalescence, derive_seed, edge_join, fixture, fixture_names, graftage, hp_construct, random_connected_gnp,
    random_gnp, random_hp_input, random_tree, Graph,
};
use crate::walk::{
    brute_force_closed, brute_force_walks, closed_triple, closed_walk_counts, graph_char_poly, walk_counts,
    walk_counts_between, walk_matrix,
};
use crate::{Error, Result, RootedGraph};

/// Outcome of one suite: how many instances were checked and what failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.into(),
            ..Self::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(what());
        }
    }

    fn merge(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn ensure(&self) -> Result<&Self> {
        match self.violations.first() {
            None => Ok(self),
            Some(v) => Err(Error::TheoremViolation(format!(
                "{}: {} violation(s), first: {v}",
                self.name,
                self.violations.len()
            ))),
        }
    }
}

fn charpoly_of(row: &[crate::algebra::BigInt], n: usize) -> Result<Poly> {
    let fit = min_recurrence(&rats(&row[..2 * n]), n)?;
    fit.spec()
        .map(|s| s.charpoly().clone())
        .ok_or_else(|| Error::Integrity("walk row without a recurrence of order <= n".into()))
}

fn lemmas_for_graph(g: &Graph, seed: u64, primes: &[u64]) -> Result<SuiteReport> {
    let mut rep = SuiteReport::default();
    let n = g.n();
    let p = graph_char_poly(g);
    let g6 = crate::graph::to_graph6(g)?;
    let rows: Vec<(Vec<_>, Vec<_>)> = (0..n)
        .map(|v| Ok((walk_counts(g, v, 2 * n - 1)?.counts, walk_counts_between(g, v, v, 2 * n - 1)?)))
        .collect::<Result<_>>()?;
    let irreducible = irreducibility_certificate(&p, primes)?.is_irreducible();
    for (v, (w, r)) in rows.iter().enumerate() {
        for (label, row) in [("W", w), ("R", r)] {
            let chi = charpoly_of(row, n)?;
            rep.check(poly_divides(&chi, &p)?, || format!("{g6}: chi of {label}({v}) does not divide P_G"));
            if irreducible {
                rep.check(chi == p, || format!("{g6}: chi of {label}({v}) differs from irreducible P_G"));
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            let closed_eq = rows[x].1 == rows[y].1;
            rep.check(cospectral_vertices(g, x, y)? == closed_eq, || {
                format!("{g6}: cospectrality of {x},{y} disagrees with closed walks")
            });
            if removal_similar(g, x, y)? {
                rep.check(rows[x].0 == rows[y].0, || format!("{g6}: removal-similar {x},{y} not walk-equivalent"));
            }
        }
    }
    if irreducible {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..20 {
            let size = rng.gen_range(1..=n);
            let mut all: Vec<usize> = (0..n).collect();
            all.shuffle(&mut rng);
            let mut subset = all[..size].to_vec();
            subset.sort_unstable();
            let rank = rank_exact(&walk_matrix(g, &subset)?.to_exact());
            rep.check(rank == n, || format!("{g6}: walk matrix of {subset:?} has rank {rank}"));
        }
    }
    Ok(rep)
}

/// Every connected graph with at most `n_max` vertices: cospectral vertex
/// pairs are exactly the closed-walk-equivalent ones, removal-similar pairs
/// are walk-equivalent, every walk row's minimal polynomial divides `P_G`
/// and equals it when `P_G` is irreducible (then every walk matrix has full
/// rank), and spectrally determined graphs with irreducible `P_G` have only
/// decisive vertices.
pub fn lemma_suite(n_max: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma suite");
    let primes = primes_below(100);
    for n in 1..=n_max {
        let graphs = enumerate_connected_graphs(n)?;
        let parts: Vec<SuiteReport> = graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| lemmas_for_graph(g, derive_seed(seed, (n as u64) << 32 | i as u64), &primes))
            .collect::<Result<_>>()?;
        for part in parts {
            rep.merge(part);
        }
        match decisive_census(n) {
            Ok(c) => rep.check(true, || unreachable!("{}", c.n)),
            Err(Error::TheoremViolation(m)) => rep.check(false, || m),
            Err(e) => return Err(e),
        }
    }
    Ok(rep)
}

fn random_small_tree(rng: &mut ChaCha8Rng, max_n: usize) -> Result<RootedGraph> {
    let n = rng.gen_range(1..=max_n);
    let t = random_tree(n, rng.gen())?;
    let root = rng.gen_range(0..n);
    RootedGraph::new(t, root)
}

/// A tree with removal-similar vertices `x`, `y` from a random
/// Harary-Palmer input.
fn hp_tree(rng: &mut ChaCha8Rng) -> Result<(Graph, usize, usize)> {
    let inp = random_hp_input(15, rng.gen())?;
    let f = hp_construct(&inp.u, &inp.alpha, inp.v)?;
    Ok((f.graph.clone(), f.mark("x")?, f.mark("y")?))
}

/// Randomized instances of the gluing lemmas: coalescence and graftage keep
/// strong walk equivalence, joining two roots by an edge keeps closed-walk
/// and strong equivalence in both directions, and the Harary-Palmer construction emits
/// removal-similar vertices.
pub fn construction_suite(instances: usize, hp_instances: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("construction suite");
    let strong_pairs = [("diststrong_T11", "x", "diststrong_S10", "y")];
    for i in 0..instances as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, i));

        let (l, x, y) = hp_tree(&mut rng)?;
        let m = random_small_tree(&mut rng, 8)?;
        let a = coalescence(&RootedGraph::new(l.clone(), x)?, &m);
        let b = coalescence(&RootedGraph::new(l.clone(), y)?, &m);
        rep.check(strongly_walk_equivalent(&a.graph, x, &b.graph, y)?, || {
            format!("coalescence instance {i}: x and y separated")
        });

        let (gv, hu) = if i % 4 == 3 {
            let (g, x, h, y) = strong_pairs[0];
            (fixture(g)?.rooted(x)?, fixture(h)?.rooted(y)?)
        } else {
            (RootedGraph::new(l.clone(), x)?, RootedGraph::new(l.clone(), y)?)
        };
        let f = random_small_tree(&mut rng, 8)?;
        let glued = coalescence(&graftage(&gv, &hu), &f);
        let (v, u) = (gv.root, gv.graph.n() + hu.root);
        rep.check(strongly_walk_equivalent(&glued.graph, v, &glued.graph, u)?, || {
            format!("graftage instance {i}: roots separated")
        });

        let (g, h) = edge_join_pair(i, &mut rng)?;
        let (joined, v, u) = edge_join(&g, &h);
        let before = (
            closed_walk_equivalent(&g.graph, g.root, &h.graph, h.root)?,
            strongly_walk_equivalent(&g.graph, g.root, &h.graph, h.root)?,
        );
        let after = (
            closed_walk_equivalent(&joined, v, &joined, u)?,
            strongly_walk_equivalent(&joined, v, &joined, u)?,
        );
        rep.check(before == after, || format!("edge join instance {i}: {before:?} became {after:?}"));
    }
    for i in 0..hp_instances as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed ^ 0x4850, i));
        let (t, x, y) = hp_tree(&mut rng)?;
        rep.check(removal_similar(&t, x, y)?, || format!("hp instance {i}: x, y not removal-similar"));
    }
    Ok(rep)
}

/// Rooted pairs for the edge-join check: bundled equivalent pairs, relabeled
/// copies, and unrelated random trees.
fn edge_join_pair(i: u64, rng: &mut ChaCha8Rng) -> Result<(RootedGraph, RootedGraph)> {
    const KNOWN: [(&str, &str, &str, &str); 4] = [
        ("p7", "x", "y5", "y"),
        ("dist_T8", "x", "dist_S11", "y"),
        ("schwenk", "x", "schwenk", "y"),
        ("hp", "x", "hp", "y"),
    ];
    match i % 3 {
        0 => {
            let (g, x, h, y) = KNOWN[(i / 3) as usize % KNOWN.len()];
            Ok((fixture(g)?.rooted(x)?, fixture(h)?.rooted(y)?))
        }
        1 => {
            let g = random_small_tree(rng, 9)?;
            let mut perm: Vec<usize> = (0..g.graph.n()).collect();
            perm.shuffle(rng);
            let h = RootedGraph::new(g.graph.relabel(&perm)?, perm[g.root])?;
            Ok((g, h))
        }
        _ => Ok((random_small_tree(rng, 9)?, random_small_tree(rng, 9)?)),
    }
}

/// Matrix walk counters against explicit DFS enumeration on every fixture
/// and on `random_graphs` samples (`n <= 8`, `k <= 8`), then the bitset
/// closed-walk triple against the closed-walk counter on `triple_graphs`
/// samples of `G(n, 1/2)` with `n <= 40`.
pub fn oracle_suite(random_graphs: usize, triple_graphs: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("oracle suite");
    let mut graphs: Vec<(String, Graph, usize)> = Vec::new();
    for name in fixture_names() {
        graphs.push((name.to_string(), fixture(name)?.graph, 10));
    }
    for i in 0..random_graphs as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, i));
        let n = rng.gen_range(1..=8);
        let g = if i % 2 == 0 {
            random_gnp(n, rng.gen_range(0.2..0.8), rng.gen())?
        } else {
            random_connected_gnp(n, 0.5, rng.gen(), 1000)?
        };
        graphs.push((format!("random graph {i}"), g, 8));
    }
    let parts: Vec<SuiteReport> = graphs
        .par_iter()
        .map(|(name, g, k_max)| -> Result<SuiteReport> {
            let mut rep = SuiteReport::default();
            for v in 0..g.n() {
                let w = walk_counts(g, v, *k_max)?.counts;
                let r = closed_walk_counts(g, v, *k_max)?.counts;
                for k in 0..=*k_max {
                    rep.check(brute_force_walks(g, v, k)? == w[k], || format!("{name}: walks from {v} at k = {k}"));
                    rep.check(brute_force_closed(g, v, k)? == r[k], || format!("{name}: closed walks at {v}, k = {k}"));
                }
            }
            Ok(rep)
        })
        .collect::<Result<_>>()?;
    for p in parts {
        rep.merge(p);
    }
    let parts: Vec<SuiteReport> = (0..triple_graphs as u64)
        .into_par_iter()
        .map(|i| -> Result<SuiteReport> {
            let mut rep = SuiteReport::default();
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed ^ 0x7452, i));
            let n = rng.gen_range(1..=40);
            let g = random_gnp(n, 0.5, rng.gen())?;
            for v in 0..n {
                let t = closed_triple(&g, v)?;
                let r = closed_walk_counts(&g, v, 4)?.counts;
                let direct = [&r[2], &r[3], &r[4]].map(|c| c.to_string());
                rep.check(direct == [t.r2, t.r3, t.r4].map(|c| c.to_string()), || {
                    format!("triple sample {i}, vertex {v}: {t:?} vs {direct:?}")
                });
            }
            Ok(rep)
        })
        .collect::<Result<_>>()?;
    for p in parts {
        rep.merge(p);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::walk_equivalent;

    #[test]
    fn lemmas_through_five() {
        let r = lemma_suite(5, 1).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.checked > 100);
    }

    #[test]
    fn constructions_small() {
        let r = construction_suite(12, 6, 3).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn oracles_small() {
        let r = oracle_suite(10, 10, 5).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }

    #[test]
    fn edge_join_loses_plain_walk_equivalence() {
        // Walk-equivalent but not closed-walk-equivalent roots: the return
        // counts on each side enter the joined walk counts asymmetrically.
        let (g, h) = (fixture("dist_T8").unwrap().rooted("x").unwrap(), fixture("dist_S11").unwrap().rooted("y").unwrap());
        assert!(walk_equivalent(&g.graph, g.root, &h.graph, h.root).unwrap());
        let (j, v, u) = edge_join(&g, &h);
        assert!(!walk_equivalent(&j, v, &j, u).unwrap());
    }

    #[test]
    fn ensure_reports_first_violation() {
        let mut r = SuiteReport::new("x");
        r.check(false, || "bad".into());
        assert!(matches!(r.ensure(), Err(Error::TheoremViolation(m)) if m.contains("bad")));
    }
}

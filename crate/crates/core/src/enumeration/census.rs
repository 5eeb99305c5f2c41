use std::collections::{BTreeMap, HashMap};
use std::hash::{DefaultHasher, Hash, Hasher};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::{enumerate_connected_graphs, enumerate_trees};
use crate::algebra::{irreducibility_certificate, primes_below, IrreducibilityCertificate, Poly};
use crate::equivalence::{
    closed_walk_equivalent, rooted_key, vertex_verdict, walk_equivalent, Universe,
};
use crate::graph::{to_graph6, Graph};
use crate::walk::{closed_walk_rows, graph_char_poly, walk_rows};
use crate::{Error, Result};

/// Index key of a profile matrix: a hash of its decimal rendering. Equal
/// keys are always re-checked on the exact values.
pub fn hash_rows(rows: &[Vec<BigInt>]) -> u64 {
    let mut h = DefaultHasher::new();
    for row in rows {
        for x in row {
            x.to_string().hash(&mut h);
        }
        b';'.hash(&mut h);
    }
    h.finish()
}

/// Rows of `W` for `k < 2n`, sorted: the walk matrix up to row order.
fn sorted_walk_matrix(g: &Graph) -> Vec<Vec<BigInt>> {
    let mut rows = walk_rows(g, 2 * g.n() - 1);
    rows.sort();
    rows
}

/// One line of census output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRecord {
    pub class: String,
    pub n: usize,
    pub index: usize,
    pub graph6: String,
    pub profile_key: String,
}

pub fn census_records(class: &str, graphs: &[Graph]) -> Result<Vec<CensusRecord>> {
    graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            Ok(CensusRecord {
                class: class.to_string(),
                n: g.n(),
                index,
                graph6: to_graph6(g)?,
                profile_key: format!("{:016x}", hash_rows(&sorted_walk_matrix(g))),
            })
        })
        .collect()
}

pub fn to_json_lines<T: Serialize>(items: &[T]) -> Result<String> {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item)?);
        out.push('\n');
    }
    Ok(out)
}

/// Trees of one order sharing a walk matrix with another tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentifiabilityLevel {
    pub n: usize,
    pub trees: usize,
    pub collisions: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentifiabilityReport {
    pub levels: Vec<IdentifiabilityLevel>,
}

impl IdentifiabilityReport {
    pub fn all_identifiable(&self) -> bool {
        self.levels.iter().all(|l| l.collisions.is_empty())
    }
}

/// Groups trees with exactly equal values of `matrix`, via hash buckets.
fn exact_classes<K: PartialEq>(
    hashes: &[u64],
    matrix: impl Fn(usize) -> K,
) -> Vec<Vec<usize>> {
    let mut buckets: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for (i, &h) in hashes.iter().enumerate() {
        buckets.entry(h).or_default().push(i);
    }
    let mut classes = Vec::new();
    for bucket in buckets.into_values().filter(|b| b.len() > 1) {
        let mut groups: Vec<(K, Vec<usize>)> = Vec::new();
        for i in bucket {
            let m = matrix(i);
            match groups.iter_mut().find(|(k, _)| *k == m) {
                Some((_, members)) => members.push(i),
                None => groups.push((m, vec![i])),
            }
        }
        classes.extend(groups.into_iter().map(|(_, g)| g).filter(|g| g.len() > 1));
    }
    classes.sort();
    classes
}

/// For each `n <= n_max`, the classes of trees whose walk matrices
/// (rows `k < 2n`, up to row order) coincide.
pub fn walk_identifiability_census(n_max: usize) -> Result<IdentifiabilityReport> {
    let mut levels = Vec::new();
    for n in 1..=n_max {
        let trees: Vec<Graph> = enumerate_trees(n).collect();
        let hashes: Vec<u64> = trees.par_iter().map(|t| hash_rows(&sorted_walk_matrix(t))).collect();
        let classes = exact_classes(&hashes, |i| sorted_walk_matrix(&trees[i]));
        let collisions = classes
            .iter()
            .map(|c| c.iter().map(|&i| to_graph6(&trees[i])).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        levels.push(IdentifiabilityLevel {
            n,
            trees: trees.len(),
            collisions,
        });
    }
    Ok(IdentifiabilityReport { levels })
}

/// A vertex `x` of one tree matched with a vertex `y` of another (or the
/// same) tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexMatch {
    pub x: usize,
    pub y: usize,
    pub closed_eq: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TreePair {
    pub t: String,
    pub s: String,
    pub matches: Vec<VertexMatch>,
}

impl TreePair {
    /// Some matched pair also has equal closed walk counts.
    pub fn strongly(&self) -> bool {
        self.matches.iter().any(|m| m.closed_eq)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WithinMatch {
    pub tree: String,
    pub x: usize,
    pub y: usize,
    pub closed_eq: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbivalentCensus {
    pub n: usize,
    pub trees: usize,
    /// Unordered pairs of non-isomorphic trees with walk-equivalent
    /// vertices.
    pub cross_pairs: Vec<TreePair>,
    /// Non-similar walk-equivalent vertices inside one tree.
    pub within: Vec<WithinMatch>,
}

/// Indexes every vertex of every `n`-vertex tree by its walk profile row
/// (`k < 2n`) and reports the matches.
pub fn ambivalent_vertex_census(n: usize) -> Result<AmbivalentCensus> {
    let trees: Vec<Graph> = enumerate_trees(n).collect();
    if trees.is_empty() {
        return Ok(AmbivalentCensus {
            n,
            trees: 0,
            cross_pairs: Vec::new(),
            within: Vec::new(),
        });
    }
    let len = 2 * n;
    let rows: Vec<Vec<Vec<BigInt>>> = trees.par_iter().map(|t| walk_rows(t, len - 1)).collect();
    let entries: Vec<(usize, usize)> = (0..trees.len()).flat_map(|t| (0..n).map(move |v| (t, v))).collect();
    let hashes: Vec<u64> = entries
        .iter()
        .map(|&(t, v)| hash_rows(std::slice::from_ref(&rows[t][v])))
        .collect();
    let classes = exact_classes(&hashes, |i| {
        let (t, v) = entries[i];
        rows[t][v].clone()
    });

    let mut closed_cache: HashMap<usize, Vec<Vec<BigInt>>> = HashMap::new();
    let mut closed_eq = |a: (usize, usize), b: (usize, usize)| -> bool {
        let ra = closed_cache
            .entry(a.0)
            .or_insert_with(|| closed_walk_rows(&trees[a.0], len - 1))[a.1]
            .clone();
        let rb = &closed_cache
            .entry(b.0)
            .or_insert_with(|| closed_walk_rows(&trees[b.0], len - 1))[b.1];
        ra == *rb
    };

    let mut cross: BTreeMap<(usize, usize), Vec<VertexMatch>> = BTreeMap::new();
    let mut within = Vec::new();
    for class in &classes {
        for (i, &a) in class.iter().enumerate() {
            for &b in &class[i + 1..] {
                let (ea, eb) = (entries[a], entries[b]);
                if !walk_equivalent(&trees[ea.0], ea.1, &trees[eb.0], eb.1)? {
                    return Err(Error::Integrity("census match fails the walk threshold".into()));
                }
                let ce = closed_eq(ea, eb);
                if ea.0 == eb.0 {
                    let t = &trees[ea.0];
                    if rooted_key(t, ea.1)? != rooted_key(t, eb.1)? {
                        within.push(WithinMatch {
                            tree: to_graph6(t)?,
                            x: ea.1,
                            y: eb.1,
                            closed_eq: ce,
                        });
                    }
                } else {
                    cross.entry((ea.0, eb.0)).or_default().push(VertexMatch {
                        x: ea.1,
                        y: eb.1,
                        closed_eq: ce,
                    });
                }
            }
        }
    }
    let cross_pairs = cross
        .into_iter()
        .map(|((t, s), mut matches)| {
            matches.sort_by_key(|m| (m.x, m.y));
            Ok(TreePair {
                t: to_graph6(&trees[t])?,
                s: to_graph6(&trees[s])?,
                matches,
            })
        })
        .collect::<Result<_>>()?;
    within.sort_by(|a, b| (&a.tree, a.x, a.y).cmp(&(&b.tree, b.x, b.y)));
    Ok(AmbivalentCensus {
        n,
        trees: trees.len(),
        cross_pairs,
        within,
    })
}

/// Which profiles must agree in the cross-size census.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Walk,
    Closed,
    Strong,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossSizePair {
    pub small_n: usize,
    pub large_n: usize,
    pub small: String,
    pub large: String,
    /// `(x, y)` with `x` in the smaller tree.
    pub matches: Vec<(usize, usize)>,
}

/// Pairs of trees of different orders `a < b <= n_max` with vertices whose
/// profiles agree on the first `a + b` terms.
pub fn cross_size_census(n_max: usize, mode: Mode) -> Result<Vec<CrossSizePair>> {
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let len = 2 * n_max - 1;
    let by_size: Vec<Vec<(Graph, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>)>> = (0..=n_max)
        .map(|n| {
            enumerate_trees(n)
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|t| {
                    let w = walk_rows(&t, len - 1);
                    let r = closed_walk_rows(&t, len - 1);
                    (t, w, r)
                })
                .collect()
        })
        .collect();
    let key = |w: &[BigInt], r: &[BigInt], l: usize| -> Vec<BigInt> {
        match mode {
            Mode::Walk => w[..l].to_vec(),
            Mode::Closed => r[..l].to_vec(),
            Mode::Strong => [&w[..l], &r[..l]].concat(),
        }
    };
    let mut out = Vec::new();
    for a in 1..=n_max {
        for b in a + 1..=n_max {
            let l = a + b;
            let mut index: HashMap<Vec<BigInt>, Vec<(usize, usize)>> = HashMap::new();
            for (ti, (_, w, r)) in by_size[a].iter().enumerate() {
                for v in 0..a {
                    index.entry(key(&w[v], &r[v], l)).or_default().push((ti, v));
                }
            }
            let mut found: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
            for (si, (_, w, r)) in by_size[b].iter().enumerate() {
                for y in 0..b {
                    for &(ti, x) in index.get(&key(&w[y], &r[y], l)).into_iter().flatten() {
                        found.entry((ti, si)).or_default().push((x, y));
                    }
                }
            }
            for ((ti, si), mut matches) in found {
                let (t, s) = (&by_size[a][ti].0, &by_size[b][si].0);
                for &(x, y) in &matches {
                    let ok = match mode {
                        Mode::Walk => walk_equivalent(t, x, s, y)?,
                        Mode::Closed => closed_walk_equivalent(t, x, s, y)?,
                        Mode::Strong => walk_equivalent(t, x, s, y)? && closed_walk_equivalent(t, x, s, y)?,
                    };
                    if !ok {
                        return Err(Error::Integrity("cross-size match fails re-verification".into()));
                    }
                }
                matches.sort_unstable();
                out.push(CrossSizePair {
                    small_n: a,
                    large_n: b,
                    small: to_graph6(t)?,
                    large: to_graph6(s)?,
                    matches,
                });
            }
        }
    }
    Ok(out)
}

/// No member of `universe` other than `g`'s own class shares `P_G`.
pub fn determined_by_spectrum(g: &Graph, universe: &Universe) -> Result<bool> {
    let p = graph_char_poly(g);
    let own = universe.position(g)?;
    Ok(universe
        .graphs()
        .iter()
        .enumerate()
        .all(|(i, h)| Some(i) == own || graph_char_poly(h) != p))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisiveEntry {
    pub graph6: String,
    pub char_poly: String,
    pub determined_by_spectrum: bool,
    pub certificate: IrreducibilityCertificate,
    /// Set when both hypotheses hold: every vertex was checked.
    pub all_decisive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecisiveCensus {
    pub n: usize,
    pub graphs: usize,
    pub ds: usize,
    pub irreducible: usize,
    pub both: usize,
    pub vertices_checked: usize,
    pub entries: Vec<DecisiveEntry>,
}

/// For every connected `n`-vertex graph: spectral determination within
/// the universe, an irreducibility certificate for `P_G`, and, when both
/// hold, a decisiveness check of every vertex. A non-decisive vertex under
/// both hypotheses is reported as a theorem violation.
pub fn decisive_census(n: usize) -> Result<DecisiveCensus> {
    let graphs = enumerate_connected_graphs(n)?;
    let universe = Universe::new(format!("connected graphs on {n} vertices"), n, graphs)?;
    let polys: Vec<Poly> = universe.graphs().par_iter().map(graph_char_poly).collect();
    let mut multiplicity: HashMap<String, usize> = HashMap::new();
    for p in &polys {
        *multiplicity.entry(p.to_string()).or_default() += 1;
    }
    let primes = primes_below(100);
    let entries: Vec<DecisiveEntry> = universe
        .graphs()
        .par_iter()
        .zip(&polys)
        .map(|(g, p)| -> Result<DecisiveEntry> {
            let ds = multiplicity[&p.to_string()] == 1;
            let certificate = irreducibility_certificate(p, &primes)?;
            let all_decisive = if ds && certificate.is_irreducible() {
                let mut all = true;
                for v in 0..n {
                    all &= vertex_verdict(g, v, &universe)?.is_decisive();
                }
                if !all {
                    return Err(Error::TheoremViolation(format!(
                        "{} is determined by spectrum with irreducible P_G but has a non-decisive vertex",
                        to_graph6(g)?
                    )));
                }
                Some(all)
            } else {
                None
            };
            Ok(DecisiveEntry {
                graph6: to_graph6(g)?,
                char_poly: p.to_string(),
                determined_by_spectrum: ds,
                certificate,
                all_decisive,
            })
        })
        .collect::<Result<_>>()?;
    Ok(DecisiveCensus {
        n,
        graphs: entries.len(),
        ds: entries.iter().filter(|e| e.determined_by_spectrum).count(),
        irreducible: entries.iter().filter(|e| e.certificate.is_irreducible()).count(),
        both: entries.iter().filter(|e| e.all_decisive.is_some()).count(),
        vertices_checked: n * entries.iter().filter(|e| e.all_decisive.is_some()).count(),
        entries,
    })
}

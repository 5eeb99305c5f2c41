//! Walk counts: profiles `W` and `R`, endpoint counts, return
//! decompositions, walk matrices and main polynomials.

mod brute;
mod export;

use num_traits::{CheckedAdd, One, Signed, Zero};
use serde::Serialize;

use crate::algebra::matrix_int_char_poly;
use crate::algebra::{rat, solve, BigInt, ExactMatrix, Poly, Rational};
use crate::graph::{vertex_deleted, Graph};
use crate::{Error, Result};

pub use brute::{brute_force_closed, brute_force_walks};
pub use export::{decimal_strings, profile_csv, ProfileJson};

/// Default profile length `2n` (walk lengths `0..2n`).
pub fn default_len(g: &Graph) -> usize {
    2 * g.n()
}

/// Iterates `x -> A x` starting from `start`, returning `steps + 1` vectors.
/// `None` if the numeric type overflows.
fn propagate<T: Clone + Zero + CheckedAdd>(g: &Graph, start: Vec<T>, steps: usize) -> Option<Vec<Vec<T>>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(start);
    for _ in 0..steps {
        let prev = out.last().expect("nonempty");
        let mut next = Vec::with_capacity(g.n());
        for v in 0..g.n() {
            let mut acc = T::zero();
            for &u in g.neighbors(v) {
                acc = acc.checked_add(&prev[u])?;
            }
            next.push(acc);
        }
        out.push(next);
    }
    Some(out)
}

/// Transposes step vectors `[k][v]` into per-vertex rows `[v][k]`.
fn rows_of(steps: Vec<Vec<BigInt>>, n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![Vec::with_capacity(steps.len()); n];
    for step in steps {
        for (v, x) in step.into_iter().enumerate() {
            rows[v].push(x);
        }
    }
    rows
}

/// `A^k x` for `k = 0..=steps`, exact. Uses 128-bit arithmetic while it
/// suffices and falls back to big integers on overflow.
fn powers_applied(g: &Graph, start: &[u8], steps: usize) -> Vec<Vec<BigInt>> {
    let small: Vec<u128> = start.iter().map(|&x| u128::from(x)).collect();
    if let Some(out) = propagate(g, small, steps) {
        return out
            .into_iter()
            .map(|s| s.into_iter().map(BigInt::from).collect())
            .collect();
    }
    let big: Vec<BigInt> = start.iter().map(|&x| BigInt::from(x)).collect();
    propagate(g, big, steps).expect("big integers do not overflow")
}

/// Walk counts `w^k(v)` for `k = 0..=max_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WalkProfile {
    pub counts: Vec<BigInt>,
}

/// Closed walk counts `r^k(v)` for `k = 0..=max_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedWalkProfile {
    pub counts: Vec<BigInt>,
}

impl WalkProfile {
    pub fn check(&self, degree: usize) -> Result<()> {
        let c = &self.counts;
        if c.first().is_some_and(|x| !x.is_one())
            || c.get(1).is_some_and(|x| *x != BigInt::from(degree))
            || c.iter().any(Signed::is_negative)
        {
            return Err(Error::Integrity("walk profile violates w^0 = 1, w^1 = deg".into()));
        }
        Ok(())
    }
}

impl ClosedWalkProfile {
    pub fn check(&self, degree: usize) -> Result<()> {
        let c = &self.counts;
        if c.first().is_some_and(|x| !x.is_one())
            || c.get(1).is_some_and(|x| !x.is_zero())
            || c.get(2).is_some_and(|x| *x != BigInt::from(degree))
            || c.iter().any(Signed::is_negative)
        {
            return Err(Error::Integrity("closed walk profile violates r^0 = 1, r^1 = 0, r^2 = deg".into()));
        }
        Ok(())
    }
}

/// `w^k(v) = (A^k j)_v` for every vertex; `rows[v][k]`, `k = 0..=max_k`.
pub fn walk_rows(g: &Graph, max_k: usize) -> Vec<Vec<BigInt>> {
    rows_of(powers_applied(g, &vec![1; g.n()], max_k), g.n())
}

pub fn walk_counts(g: &Graph, v: usize, max_k: usize) -> Result<WalkProfile> {
    g.check_vertex(v)?;
    let mut rows = walk_rows(g, max_k);
    Ok(WalkProfile {
        counts: rows.swap_remove(v),
    })
}

/// `(A^k)_{x,z}` for `k = 0..=max_k`, one row per target `z`.
fn walks_from(g: &Graph, x: usize, max_k: usize) -> Vec<Vec<BigInt>> {
    let mut e = vec![0; g.n()];
    e[x] = 1;
    rows_of(powers_applied(g, &e, max_k), g.n())
}

pub fn walk_counts_between(g: &Graph, x: usize, z: usize, max_k: usize) -> Result<Vec<BigInt>> {
    g.check_vertex(x)?;
    g.check_vertex(z)?;
    Ok(walks_from(g, x, max_k).swap_remove(z))
}

pub fn closed_walk_counts(g: &Graph, v: usize, max_k: usize) -> Result<ClosedWalkProfile> {
    Ok(ClosedWalkProfile {
        counts: walk_counts_between(g, v, v, max_k)?,
    })
}

/// `r^k(v)` for every vertex; `rows[v][k]`.
pub fn closed_walk_rows(g: &Graph, max_k: usize) -> Vec<Vec<BigInt>> {
    (0..g.n())
        .map(|v| walks_from(g, v, max_k).swap_remove(v))
        .collect()
}

/// Total walk counts `W_k(G)`, `k = 0..=max_k`.
pub fn total_walks(g: &Graph, max_k: usize) -> Vec<BigInt> {
    powers_applied(g, &vec![1; g.n()], max_k)
        .into_iter()
        .map(|s| s.into_iter().sum())
        .collect()
}

/// `(r^2, r^3, r^4)` of one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ClosedTriple {
    pub r2: u64,
    pub r3: u64,
    pub r4: u64,
}

/// Closed walk counts of lengths 2, 3, 4 from neighborhood combinatorics:
/// the degree, twice the edges inside `N(v)`, and the sum over all `w` of
/// `|N(v) ∩ N(w)|^2`.
pub fn closed_triple(g: &Graph, v: usize) -> Result<ClosedTriple> {
    g.check_vertex(v)?;
    let nv = g.neighbor_bits(v);
    let mut r3 = 0u64;
    let mut r4 = 0u64;
    for w in 0..g.n() {
        let codeg: u64 = nv
            .iter()
            .zip(g.neighbor_bits(w))
            .map(|(a, b)| u64::from((a & b).count_ones()))
            .sum();
        r4 += codeg * codeg;
        if g.has_edge(v, w) {
            r3 += codeg;
        }
    }
    Ok(ClosedTriple {
        r2: g.degree(v) as u64,
        r3,
        r4,
    })
}

pub fn closed_triples(g: &Graph) -> Vec<ClosedTriple> {
    (0..g.n())
        .map(|v| closed_triple(g, v).expect("vertex in range"))
        .collect()
}

/// First-return counts: the unique `r̄` with
/// `r^k = sum_{s=2..k} r̄^s r^{k-s}` for `k >= 2`, and `r̄^0 = r̄^1 = 0`.
pub fn first_return_counts(r: &ClosedWalkProfile) -> Result<Vec<BigInt>> {
    let c = &r.counts;
    if c.first().is_some_and(|x| !x.is_one()) || c.get(1).is_some_and(|x| !x.is_zero()) {
        return Err(Error::Integrity("closed profile must start 1, 0".into()));
    }
    let mut bar = vec![BigInt::zero(); c.len()];
    for k in 2..c.len() {
        let mut x = c[k].clone();
        for s in 2..k {
            x -= &bar[s] * &c[k - s];
        }
        if x.is_negative() {
            return Err(Error::Integrity(format!("negative first-return count at k = {k}")));
        }
        bar[k] = x;
    }
    Ok(bar)
}

/// Never-return counts `w̄` solving `w^k = sum_{s=0..k} r^s w̄^{k-s}`.
pub fn never_return_counts(g: &Graph, v: usize, max_k: usize) -> Result<Vec<BigInt>> {
    let w = walk_counts(g, v, max_k)?.counts;
    let r = closed_walk_counts(g, v, max_k)?.counts;
    let mut bar: Vec<BigInt> = Vec::with_capacity(w.len());
    for k in 0..w.len() {
        let mut x = w[k].clone();
        for s in 1..=k {
            x -= &r[s] * &bar[k - s];
        }
        if x.is_negative() {
            return Err(Error::Integrity(format!("negative never-return count at k = {k}")));
        }
        bar.push(x);
    }
    Ok(bar)
}

/// `ŵ^k = W_k(G) - W_k(G - v)`: walks of length `k` that visit `v`.
pub fn reaches_counts(g: &Graph, v: usize, max_k: usize) -> Result<Vec<BigInt>> {
    g.check_vertex(v)?;
    let all = total_walks(g, max_k);
    if g.n() == 1 {
        return Ok(all);
    }
    let rest = total_walks(&vertex_deleted(g, v)?, max_k);
    Ok(all.into_iter().zip(rest).map(|(a, b)| a - b).collect())
}

/// Walk matrix of `(G, S)`: column `k` is `A^k j_S`, `k = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkMatrix {
    pub subset: Vec<usize>,
    pub columns: Vec<Vec<BigInt>>,
}

impl WalkMatrix {
    pub fn to_exact(&self) -> ExactMatrix {
        let n = self.columns.len();
        let rows: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        ExactMatrix::from_int_rows(&rows).expect("square walk matrix")
    }
}

pub fn walk_matrix(g: &Graph, subset: &[usize]) -> Result<WalkMatrix> {
    if subset.is_empty() {
        return Err(Error::InvalidArgument("walk matrix needs a nonempty vertex set".into()));
    }
    let mut start = vec![0u8; g.n()];
    for &v in subset {
        g.check_vertex(v)?;
        start[v] = 1;
    }
    let mut subset = subset.to_vec();
    subset.sort_unstable();
    subset.dedup();
    Ok(WalkMatrix {
        subset,
        columns: powers_applied(g, &start, g.n() - 1),
    })
}

/// Main polynomial `M_G`: `z^r - a_{r-1} z^{r-1} - ... - a_0` for the least
/// `r` with `A^r j = sum a_i A^i j`.
pub fn main_polynomial(g: &Graph) -> Result<Poly> {
    let cols = powers_applied(g, &vec![1; g.n()], g.n());
    let n = g.n();
    for r in 1..=n {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| cols[..r].iter().map(|c| rat(c[i].clone())).collect())
            .collect();
        let rhs: Vec<Rational> = cols[r].iter().map(|x| rat(x.clone())).collect();
        if let Some(a) = solve(&ExactMatrix::from_rows(rows)?, &rhs)? {
            let mut coeffs: Vec<Rational> = a.into_iter().map(|x| -x).collect();
            coeffs.push(rat(1));
            let p = Poly::from_coeffs(coeffs);
            if !p.is_integral() {
                return Err(Error::Integrity(format!("main polynomial {p} is not integral")));
            }
            return Ok(p);
        }
    }
    Err(Error::Integrity("walk matrix columns never became dependent".into()))
}

/// Characteristic polynomial `det(zI - A)` of the adjacency matrix.
pub fn graph_char_poly(g: &Graph) -> Poly {
    let rows: Vec<Vec<BigInt>> = (0..g.n())
        .map(|u| (0..g.n()).map(|v| BigInt::from(u8::from(g.has_edge(u, v)))).collect())
        .collect();
    Poly::from_ints(&matrix_int_char_poly(&rows))
}

#[cfg(test)]
mod tests;

use num_bigint::BigInt;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{extend_recurrence, min_recurrence, rat, rats, Rational, RecurrenceFit};
use crate::equivalence::threshold;
use crate::graph::{derive_seed, random_connected_gnp, random_tree, Graph};
use crate::walk::{walk_counts, walk_counts_between};
use crate::{Error, Result};

/// Two exponential sums `y_t = sum a_i p_i^t` and `z_t = sum b_j q_j^t` of
/// orders `n` and `m` that agree on exactly the first `n + m - 1` terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceWitness {
    pub y_roots: Vec<i64>,
    pub z_roots: Vec<i64>,
    pub y: Vec<Rational>,
    pub z: Vec<Rational>,
    pub y_order: usize,
    pub z_order: usize,
    /// Number of leading terms on which `y` and `z` coincide.
    pub agree_len: usize,
}

/// Builds a witness with `len` terms from `n + m` distinct nonzero integer
/// roots. The weights are the divided-difference weights
/// `1 / prod_{j != i} (x_i - x_j)`, which annihilate every power below
/// `n + m - 1` and give 1 at `n + m - 1`.
pub fn recurrence_witness(n: usize, m: usize, len: usize, seed: u64) -> Result<RecurrenceWitness> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidArgument("both orders must be positive".into()));
    }
    let total = n + m;
    if len < 2 * total {
        return Err(Error::InsufficientData(format!("need at least {} terms", 2 * total)));
    }
    let span = 3 * total as i64;
    let mut pool: Vec<i64> = (-span..=span).filter(|&x| x != 0).collect();
    pool.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let roots = &pool[..total];
    let weights: Vec<Rational> = roots
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let d: BigInt = roots
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &y)| BigInt::from(x - y))
                .product();
            Rational::one() / Rational::from_integer(d)
        })
        .collect();
    let sum = |idx: std::ops::Range<usize>, sign: i64| -> Vec<Rational> {
        (0..len)
            .map(|t| {
                idx.clone()
                    .map(|i| &weights[i] * rat(BigInt::from(roots[i]).pow(t as u32)) * rat(sign))
                    .sum()
            })
            .collect()
    };
    let y = sum(0..n, 1);
    let z = sum(n..total, -1);
    let order = |seq: &[Rational]| -> Result<usize> {
        match min_recurrence(seq, len / 2)? {
            RecurrenceFit::Found(s) => Ok(s.order()),
            RecurrenceFit::NotDetermined => Err(Error::Integrity("witness sequence has no recurrence".into())),
        }
    };
    let agree_len = y.iter().zip(&z).take_while(|(a, b)| a == b).count();
    Ok(RecurrenceWitness {
        y_roots: roots[..n].to_vec(),
        z_roots: roots[n..].to_vec(),
        y_order: order(&y)?,
        z_order: order(&z)?,
        agree_len,
        y,
        z,
    })
}

/// Fits the minimal recurrence of order at most `max_order` on the first
/// `2 * max_order` terms and checks that it regenerates the whole sequence.
pub fn extend_check(seq: &[Rational], max_order: usize) -> Result<bool> {
    let fit = min_recurrence(&seq[..2 * max_order], max_order)?;
    let spec = fit
        .spec()
        .ok_or_else(|| Error::Integrity(format!("no recurrence of order <= {max_order}")))?;
    Ok(extend_recurrence(spec, &seq[..spec.order()], seq.len() - 1)? == seq)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Part1Report {
    pub pairs: usize,
    pub walk_prefix_equal: usize,
    pub closed_prefix_equal: usize,
    pub violations: Vec<String>,
}

/// Samples rooted pairs `(G, v)`, `(H, u)` and checks that equality of the
/// first `n + m` walk (closed-walk) counts forces equality through
/// `3(n + m)`. Every walk row is also refitted by its minimal recurrence and
/// extended, which must reproduce the direct counts.
pub fn part1_property(pairs: usize, max_n: usize, seed: u64) -> Result<Part1Report> {
    if max_n < 2 {
        return Err(Error::InvalidArgument("need max_n >= 2".into()));
    }
    let mut report = Part1Report {
        pairs,
        walk_prefix_equal: 0,
        closed_prefix_equal: 0,
        violations: Vec::new(),
    };
    for i in 0..pairs as u64 {
        let sub = derive_seed(seed, i);
        let mut rng = ChaCha8Rng::seed_from_u64(sub);
        let n = rng.gen_range(2..=max_n);
        let g = sample(n, i, &mut rng)?;
        let v = rng.gen_range(0..n);
        let (h, u) = if i % 3 == 2 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            (g.relabel(&perm)?, perm[v])
        } else {
            let m = rng.gen_range(2..=max_n);
            let h = sample(m, i + 1, &mut rng)?;
            let u = rng.gen_range(0..m);
            (h, u)
        };
        let (len, far) = (threshold(g.n(), h.n()), 3 * threshold(g.n(), h.n()));
        let wg = walk_counts(&g, v, far)?.counts;
        let wh = walk_counts(&h, u, far)?.counts;
        let rg = walk_counts_between(&g, v, v, far)?;
        let rh = walk_counts_between(&h, u, u, far)?;
        if wg[..len] == wh[..len] {
            report.walk_prefix_equal += 1;
            if wg != wh {
                report.violations.push(format!("pair {i}: walk counts split after the prefix"));
            }
        }
        if rg[..len] == rh[..len] {
            report.closed_prefix_equal += 1;
            if rg != rh {
                report.violations.push(format!("pair {i}: closed counts split after the prefix"));
            }
        }
        for (name, row, order) in [("W(G)", &wg, g.n()), ("R(G)", &rg, g.n()), ("W(H)", &wh, h.n())] {
            if !extend_check(&rats(row), order)? {
                report.violations.push(format!("pair {i}: {name} extension disagrees"));
            }
        }
    }
    Ok(report)
}

fn sample(n: usize, i: u64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let s = rng.gen();
    if i % 2 == 0 {
        random_tree(n, s)
    } else {
        random_connected_gnp(n, 0.5, s, 1000)
    }
}

use num_bigint::BigInt;

use crate::graph::Graph;
use crate::{Error, Result};

const MAX_K: usize = 12;
const MAX_N: usize = 32;

fn check_budget(g: &Graph, v: usize, k: usize) -> Result<()> {
    g.check_vertex(v)?;
    if k > MAX_K || g.n() > MAX_N {
        return Err(Error::Budget(format!(
            "brute-force enumeration limited to k <= {MAX_K}, n <= {MAX_N} (got k = {k}, n = {})",
            g.n()
        )));
    }
    Ok(())
}

/// Lists every walk of length `k` from `v` explicitly, calling `visit` on
/// each endpoint.
fn dfs(g: &Graph, at: usize, left: usize, visit: &mut impl FnMut(usize)) {
    if left == 0 {
        visit(at);
        return;
    }
    for &u in g.neighbors(at) {
        dfs(g, u, left - 1, visit);
    }
}

/// Number of walks of length `k` starting at `v`, by explicit enumeration.
pub fn brute_force_walks(g: &Graph, v: usize, k: usize) -> Result<BigInt> {
    check_budget(g, v, k)?;
    let mut count = 0u64;
    dfs(g, v, k, &mut |_| count += 1);
    Ok(BigInt::from(count))
}

/// Number of closed walks of length `k` at `v`, by explicit enumeration.
pub fn brute_force_closed(g: &Graph, v: usize, k: usize) -> Result<BigInt> {
    check_budget(g, v, k)?;
    let mut count = 0u64;
    dfs(g, v, k, &mut |end| count += u64::from(end == v));
    Ok(BigInt::from(count))
}

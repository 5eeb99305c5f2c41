use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{BoundReport, Check};
use crate::equivalence::rooted_isomorphic;
use crate::graph::{krebs_verbitsky, pad_with_pendants, path, y_graph, Graph, KvColor, KvPair, RootedGraph};
use crate::walk::{closed_walk_counts, walk_counts_between, walk_rows};
use crate::{Error, Result};

/// Largest `k` with `a[0..=k] == b[0..=k]`, and the first index where they
/// differ (if within range).
fn agreement(a: &[BigInt], b: &[BigInt]) -> (usize, Option<usize>) {
    match a.iter().zip(b).position(|(x, y)| x != y) {
        Some(0) => (0, Some(0)),
        Some(i) => (i - 1, Some(i)),
        None => (a.len().min(b.len()) - 1, None),
    }
}

fn threshold_checks(
    agree: usize,
    first: Option<usize>,
    predicted_agree: usize,
    predicted_differ: usize,
) -> Vec<Check> {
    vec![
        Check::new(
            "agree through predicted length",
            agree >= predicted_agree,
            format!("agree through {agree}, predicted {predicted_agree}"),
        ),
        Check::new(
            "differ at predicted length",
            first == Some(predicted_differ),
            format!("first difference {first:?}, predicted {predicted_differ}"),
        ),
    ]
}

/// Closed walks from the end `v` of `P_n` and from the far end `u` of
/// `Y_n` agree exactly through length `2n - 5` and differ at `2n - 4`.
pub fn verify_pn_yn(n: usize) -> Result<BoundReport> {
    if n < 5 {
        return Err(Error::InvalidArgument("P_n / Y_n comparison needs n >= 5".into()));
    }
    let g = path(n)?;
    let y = y_graph(n)?;
    let (v, u) = (0, y.mark("u")?);
    let h = &y.graph;
    let k_max = 2 * n - 4;
    let rg = closed_walk_counts(&g, v, k_max)?.counts;
    let rh = closed_walk_counts(h, u, k_max)?.counts;
    let (agree, first) = agreement(&rg, &rh);
    let mut checks = threshold_checks(agree, first, 2 * n - 5, 2 * n - 4);

    let level = n - 3;
    let (gl, gmap) = g.ball(v, level)?;
    let (hl, hmap) = h.ball(u, level)?;
    let (vl, ul) = (index_in(&gmap, v), index_in(&hmap, u));
    checks.push(Check::new(
        "level balls isomorphic",
        rooted_isomorphic(&gl, vl, &hl, ul)?,
        format!("radius {level}"),
    ));
    let k = 2 * level + 2;
    let res_g = &rg[k] - closed_walk_counts(&gl, vl, k)?.counts[k].clone();
    let res_h = &rh[k] - closed_walk_counts(&hl, ul, k)?.counts[k].clone();
    checks.push(Check::new(
        "residual in P_n is 1",
        res_g == BigInt::from(1),
        format!("residual {res_g} at k = {k}"),
    ));
    checks.push(Check::new(
        "residual in Y_n is 2",
        res_h == BigInt::from(2),
        format!("residual {res_h} at k = {k}"),
    ));
    Ok(BoundReport {
        family: "pn-yn".into(),
        n,
        agree_through: agree,
        first_difference: first,
        predicted_agree: Some(2 * n - 5),
        predicted_differ: Some(2 * n - 4),
        checks,
    })
}

fn index_in(map: &[usize], v: usize) -> usize {
    map.iter().position(|&x| x == v).expect("root lies in its own ball")
}

fn color_signatures(g: &Graph, colors: &[KvColor], skip: usize) -> BTreeMap<KvColor, Vec<BTreeMap<KvColor, usize>>> {
    let mut out: BTreeMap<KvColor, Vec<BTreeMap<KvColor, usize>>> = BTreeMap::new();
    for x in (0..g.n()).filter(|&x| x != skip) {
        let mut sig = BTreeMap::new();
        for &y in g.neighbors(x) {
            *sig.entry(colors[y]).or_insert(0) += 1;
        }
        out.entry(colors[x]).or_default().push(sig);
    }
    out
}

/// Walk profiles from `v` in `G_{s,t}` and `u` in `H_{s,t}` agree for all
/// `k < 2t(s+4) - 1` and differ at `k = 2t(s+4) - 1`; the intermediate
/// claims are checked along the way.
pub fn verify_krebs_verbitsky(s: usize, t: usize) -> Result<BoundReport> {
    let kv = krebs_verbitsky(s, t)?;
    let mut report = kv_report(&kv)?;
    report.family = format!("kv(s={s},t={t})");
    Ok(report)
}

fn kv_report(kv: &KvPair) -> Result<BoundReport> {
    let (g, h) = (&kv.g.graph, &kv.h.graph);
    let n = g.n();
    let (v, u) = (kv.g.mark("v")?, kv.h.mark("u")?);
    let level = kv.level;
    let threshold = 2 * kv.t * (kv.s + 4) - 1;
    let k_max = threshold.max(n + 1);
    let wg = walk_rows(g, k_max);
    let wh = walk_rows(h, k_max);
    let dg: Vec<usize> = g.distances_from(v).into_iter().map(|d| d.expect("connected")).collect();
    let dh: Vec<usize> = h.distances_from(u).into_iter().map(|d| d.expect("connected")).collect();

    let (agree, first) = agreement(&wg[v][..=threshold], &wh[u][..=threshold]);
    let mut checks = threshold_checks(agree, first, threshold - 1, threshold);

    // Property (*): outside the roots, a color fixes the color counts of the
    // neighborhood, in both graphs at once.
    let mut sigs = color_signatures(g, &kv.g_colors, v);
    for (c, list) in color_signatures(h, &kv.h_colors, u) {
        sigs.entry(c).or_default().extend(list);
    }
    let star_ok = sigs.values().all(|l| l.windows(2).all(|w| w[0] == w[1]));
    checks.push(Check::new("color property", star_ok, format!("{} color classes", sigs.len())));

    let mut claim1 = true;
    let mut claim2 = true;
    for x in 0..n {
        for y in 0..n {
            if kv.g_colors[x] != kv.h_colors[y] {
                continue;
            }
            let m = dg[x].min(dh[y]);
            claim1 &= wg[x][..=m] == wh[y][..=m];
            if dg[x] != dh[y] {
                claim2 &= wg[x][m + 1] != wh[y][m + 1];
            }
        }
    }
    checks.push(Check::new("claim 1", claim1, "equal colors agree up to the root distance"));
    checks.push(Check::new("claim 2", claim2, "unequal root distances differ one step later"));

    let (gl, gmap) = g.ball(v, level)?;
    let (hl, hmap) = h.ball(u, level)?;
    let shared_ok = gmap == (0..kv.shared).collect::<Vec<_>>() && hmap == gmap && gl.edges() == hl.edges();
    checks.push(Check::new(
        "level balls coincide",
        shared_ok,
        format!("radius {level}, {} shared vertices", kv.shared),
    ));
    let (_, g_next) = g.ball(v, level + 1)?;
    let (_, h_next) = h.ball(u, level + 1)?;
    checks.push(Check::new(
        "level is maximal",
        g_next.len() != h_next.len(),
        format!("{} vs {} vertices at radius {}", g_next.len(), h_next.len(), level + 1),
    ));

    let (a, b, c) = (kv.g.mark("a")?, kv.g.mark("b")?, kv.g.mark("c")?);
    let (c1, c2) = (kv.h.mark("c1")?, kv.h.mark("c2")?);
    let decomposition_ok = decomposes(&wg, &gl, v, [(a, c), (b, c)], level, threshold)?
        && decomposes(&wh, &hl, u, [(a, c1), (b, c2)], level, threshold)?;
    checks.push(Check::new(
        "claim 3 decomposition",
        decomposition_ok,
        "walks split at the first exit from the level ball",
    ));

    let (g_g, h_g, h_b) = (kv.g.mark("g")?, kv.h.mark("g")?, kv.h.mark("bb")?);
    let k = level + 1;
    let claim4 = wg[a][k] == wh[a][k]
        && wg[g_g][k] == wh[h_g][k]
        && wg[b][k] != wh[h_b][k]
        && wg[c][k + 1] != wh[c1][k + 1]
        && wh[c1][k + 1] == wh[c2][k + 1];
    checks.push(Check::new(
        "claim 4",
        claim4,
        format!("w^{}(c) = {}, w^{}(c') = {}, w^{}(c'') = {}", k + 1, wg[c][k + 1], k + 1, wh[c1][k + 1], k + 1, wh[c2][k + 1]),
    ));

    Ok(BoundReport {
        family: String::new(),
        n,
        agree_through: agree,
        first_difference: first,
        predicted_agree: Some(threshold - 1),
        predicted_differ: Some(threshold),
        checks,
    })
}

/// `w^k(root) = w_ball^k(root) + sum_m sum_(p, q) w_ball^m(root, p) w^{k-m-1}(q)`
/// for every `k <= k_max`, where each exit edge `p -> q` leaves the ball.
fn decomposes(
    rows: &[Vec<BigInt>],
    ball: &Graph,
    root: usize,
    exits: [(usize, usize); 2],
    level: usize,
    k_max: usize,
) -> Result<bool> {
    let inside = crate::walk::walk_counts(ball, root, k_max)?.counts;
    let to: Vec<Vec<BigInt>> = exits
        .iter()
        .map(|&(p, _)| walk_counts_between(ball, root, p, k_max))
        .collect::<Result<_>>()?;
    for k in 0..=k_max {
        let mut total = inside[k].clone();
        for m in level..k {
            for (i, &(_, q)) in exits.iter().enumerate() {
                total += &to[i][m] * &rows[q][k - m - 1];
            }
        }
        if total != rows[root][k] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(t, s)` for the part-3 construction at order `n`: the largest `t` with
/// `3t^2 + 9t + 3 <= n`, and `s = 3t`.
pub fn part3_parameters(n: usize) -> Result<(usize, usize)> {
    let size = |t: usize| 3 * t * t + 9 * t + 3;
    if n < size(2) {
        return Err(Error::InvalidArgument(format!("part-3 construction needs n >= {}", size(2))));
    }
    let mut t = 2;
    while size(t + 1) <= n {
        t += 1;
    }
    Ok((t, 3 * t))
}

/// Largest `k` with `k < 2n - 16 sqrt(n)`, in exact integer arithmetic.
fn part3_limit(n: usize) -> Option<usize> {
    let n = n as u128;
    (0..2 * n)
        .rev()
        .find(|&k| {
            let gap = 2 * n - k;
            gap * gap > 256 * n
        })
        .map(|k| k as usize)
}

/// The padded pair `G_{3t,t}`, `H_{3t,t}` on `n` vertices agrees on walk
/// counts from `v` and `u` for every `k < 2n - 16 sqrt(n)`.
pub fn verify_part3_bound(n: usize) -> Result<BoundReport> {
    let (t, s) = part3_parameters(n)?;
    let kv = krebs_verbitsky(s, t)?;
    let g = RootedGraph::new(kv.g.graph.clone(), kv.g.mark("v")?)?;
    let h = RootedGraph::new(kv.h.graph.clone(), kv.h.mark("u")?)?;
    let (g, h) = pad_with_pendants(&g, &h, n)?;
    let k_max = 2 * n;
    let wg = crate::walk::walk_counts(&g.graph, g.root, k_max)?.counts;
    let wh = crate::walk::walk_counts(&h.graph, h.root, k_max)?.counts;
    let (agree, first) = agreement(&wg, &wh);
    let limit = part3_limit(n);
    let mut checks = vec![Check::new(
        "padded orders equal n",
        g.graph.n() == n && h.graph.n() == n,
        format!("t = {t}, s = {s}, padding {}", n - kv.g.graph.n()),
    )];
    checks.push(Check::new(
        "agree below 2n - 16 sqrt(n)",
        limit.is_none_or(|l| agree >= l),
        format!("agree through {agree}, required {limit:?}"),
    ));
    checks.push(Check::new(
        "profiles eventually differ",
        first.is_some(),
        format!("first difference {first:?}"),
    ));
    Ok(BoundReport {
        family: format!("part3(t={t},s={s})"),
        n,
        agree_through: agree,
        first_difference: first,
        predicted_agree: limit,
        predicted_differ: None,
        checks,
    })
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{cycle, fixture, vertex_deleted, Fixture, Graph};
use crate::{Error, Result};

/// The 11-vertex tree with pseudosimilar vertices `x` and `y`.
pub fn harary_palmer() -> Fixture {
    fixture("hp").expect("hp is registered")
}

/// The 9-vertex Schwenk tree with marks `x` and `y`.
pub fn schwenk_graph() -> Fixture {
    fixture("schwenk").expect("schwenk is registered")
}

/// Input to [`hp_construct`]: a unicyclic graph, an automorphism of order 3
/// given as a vertex map, and a degree-2 cycle vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HpInput {
    pub u: Graph,
    pub alpha: Vec<usize>,
    pub v: usize,
}

impl HpInput {
    /// The 12-vertex unicyclic graph whose vertex deletion yields the
    /// 11-vertex Harary-Palmer tree: a 9-cycle with pendants on 2, 5, 8.
    pub fn harary_palmer() -> Self {
        let mut edges: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        edges.extend([(2, 9), (5, 10), (8, 11)]);
        let mut alpha: Vec<usize> = (0..9).map(|i| (i + 6) % 9).collect();
        alpha.extend([11, 9, 10]);
        Self {
            u: Graph::from_edges(12, &edges).expect("static edges"),
            alpha,
            v: 6,
        }
    }
}

/// Vertices on the unique cycle of a connected unicyclic graph.
fn cycle_vertices(u: &Graph) -> Result<Vec<usize>> {
    if !u.is_connected() || u.edge_count() != u.n() {
        return Err(Error::NotUnicyclic);
    }
    let mut deg: Vec<usize> = (0..u.n()).map(|v| u.degree(v)).collect();
    let mut alive = vec![true; u.n()];
    let mut stack: Vec<usize> = (0..u.n()).filter(|&v| deg[v] == 1).collect();
    while let Some(x) = stack.pop() {
        alive[x] = false;
        for &y in u.neighbors(x) {
            if alive[y] {
                deg[y] -= 1;
                if deg[y] == 1 {
                    stack.push(y);
                }
            }
        }
    }
    Ok((0..u.n()).filter(|&v| alive[v]).collect())
}

/// Deletes `v` from `U`; the images `alpha(v)` and `alpha^2(v)` become the
/// marks `x` and `y` of the resulting graph.
pub fn hp_construct(u: &Graph, alpha: &[usize], v: usize) -> Result<Fixture> {
    let n = u.n();
    u.check_vertex(v)?;
    let on_cycle = cycle_vertices(u)?;
    if alpha.len() != n {
        return Err(Error::NotAutomorphism(format!(
            "map has {} entries, graph has {n} vertices",
            alpha.len()
        )));
    }
    let mut seen = vec![false; n];
    for &a in alpha {
        if a >= n || std::mem::replace(&mut seen[a], true) {
            return Err(Error::NotAutomorphism("map is not a permutation".into()));
        }
    }
    if let Some((a, b)) = u.edges().into_iter().find(|&(a, b)| !u.has_edge(alpha[a], alpha[b])) {
        return Err(Error::NotAutomorphism(format!("edge ({a}, {b}) is not preserved")));
    }
    let order = {
        let mut k = 1;
        let mut cur = alpha.to_vec();
        while cur.iter().enumerate().any(|(i, &c)| i != c) {
            cur = cur.iter().map(|&c| alpha[c]).collect();
            k += 1;
        }
        k
    };
    if order != 3 {
        return Err(Error::AutomorphismOrder(order));
    }
    if on_cycle.binary_search(&v).is_err() {
        return Err(Error::VertexOffCycle(v));
    }
    if u.degree(v) != 2 {
        return Err(Error::VertexDegree {
            vertex: v,
            degree: u.degree(v),
        });
    }
    let shift = |w: usize| if w > v { w - 1 } else { w };
    let x = shift(alpha[v]);
    let y = shift(alpha[alpha[v]]);
    Fixture::new("hp_construct", vertex_deleted(u, v)?, &[("x", x), ("y", y)])
}

/// Random valid input for [`hp_construct`] with at most `max_n` vertices:
/// a `3m`-cycle decorated with three rotated copies of the same pendant
/// trees, leaving at least one undecorated cycle position for `v`.
pub fn random_hp_input(max_n: usize, seed: u64) -> Result<HpInput> {
    if max_n < 3 {
        return Err(Error::InvalidArgument("need max_n >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(1..=max_n / 3);
    let len = 3 * m;
    let mut budget = (max_n - len) / 3;
    let free = rng.gen_range(0..m);
    // parent[k] for each decoration vertex of one copy: None = cycle position.
    let mut deco: Vec<(usize, Option<usize>)> = Vec::new();
    for pos in (0..m).filter(|&p| p != free) {
        if budget == 0 {
            break;
        }
        let size = rng.gen_range(0..=budget);
        budget -= size;
        let base = deco.len();
        for k in 0..size {
            let parent = if k == 0 { None } else { Some(base + rng.gen_range(0..k)) };
            deco.push((pos, parent));
        }
    }
    let per = deco.len();
    let n = len + 3 * per;
    let mut g = cycle(len)?;
    g.add_vertices(3 * per);
    let mut alpha = vec![0; n];
    for c in 0..3 {
        let off = len + c * per;
        for (k, &(pos, parent)) in deco.iter().enumerate() {
            let anchor = match parent {
                None => (pos + c * m) % len,
                Some(p) => off + p,
            };
            g.add_edge(off + k, anchor)?;
            alpha[off + k] = len + ((c + 1) % 3) * per + k;
        }
    }
    for (i, a) in alpha.iter_mut().enumerate().take(len) {
        *a = (i + m) % len;
    }
    Ok(HpInput {
        u: g,
        alpha,
        v: free + m * rng.gen_range(0..3),
    })
}

/// Auxiliary vertex colors of the Krebs-Verbitsky pair. Path vertices are
/// colored by their distance to the nearer path end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KvColor {
    A,
    B,
    Path(usize),
}

/// The pair `G_{s,t}`, `H_{s,t}` together with the data the claim
/// verifiers need.
#[derive(Clone, Debug)]
pub struct KvPair {
    pub s: usize,
    pub t: usize,
    /// Marks `v`, `a`, `b`, `c`.
    pub g: Fixture,
    /// Marks `u`, `a`, `b`, `c1`, `c2`.
    pub h: Fixture,
    pub g_colors: Vec<KvColor>,
    pub h_colors: Vec<KvColor>,
    /// Vertices `0..shared` induce the same labeled graph in `G` and `H`
    /// and contain every vertex within distance `level` of the roots.
    pub shared: usize,
    pub level: usize,
}

struct Builder {
    edges: Vec<(usize, usize)>,
    colors: Vec<KvColor>,
}

impl Builder {
    fn vertex(&mut self, c: KvColor) -> usize {
        self.colors.push(c);
        self.colors.len() - 1
    }

    /// Path of `s` vertices hanging off `from` (if any); returns its far end.
    fn path(&mut self, s: usize, from: Option<usize>) -> usize {
        let mut prev = from;
        for i in 0..s {
            let p = self.vertex(KvColor::Path(i.min(s - 1 - i)));
            if let Some(q) = prev {
                self.edges.push((q, p));
            }
            prev = Some(p);
        }
        prev.expect("s >= 1")
    }

    /// Cycle vertices `a, b1, b2, bb1, bb2` with `a` joined to `end`.
    fn diamond(&mut self, end: usize) -> [usize; 5] {
        let a = self.vertex(KvColor::A);
        let b1 = self.vertex(KvColor::B);
        let b2 = self.vertex(KvColor::B);
        let bb1 = self.vertex(KvColor::B);
        let bb2 = self.vertex(KvColor::B);
        self.edges.extend([(end, a), (a, b1), (a, b2), (b1, bb1), (b2, bb2)]);
        [a, b1, b2, bb1, bb2]
    }

    /// Tail block: path, diamond and its top; returns the top vertex.
    fn block(&mut self, s: usize, from: Option<usize>) -> usize {
        let end = self.path(s, from);
        let [_, _, _, bb1, bb2] = self.diamond(end);
        let top = self.vertex(KvColor::A);
        self.edges.extend([(bb1, top), (bb2, top)]);
        top
    }

    fn finish(self) -> Result<(Graph, Vec<KvColor>)> {
        Ok((Graph::from_edges(self.colors.len(), &self.edges)?, self.colors))
    }
}

/// Builds `G_{s,t}` and `H_{s,t}`: `t - 1` shared tadpole blocks followed by
/// the two different head blocks. Both have `t(s+6) + s + 3` vertices.
pub fn krebs_verbitsky(s: usize, t: usize) -> Result<KvPair> {
    if s < 1 || t < 2 {
        return Err(Error::InvalidArgument(format!("need s >= 1 and t >= 2, got s = {s}, t = {t}")));
    }
    let mut common = Builder {
        edges: Vec::new(),
        colors: Vec::new(),
    };
    let mut top = None;
    for _ in 0..t - 1 {
        top = Some(common.block(s, top));
    }
    let end = common.path(s, top);
    let [_, _, _, bb1, bb2] = common.diamond(end);
    let shared = common.colors.len();

    let mut g = Builder {
        edges: common.edges.clone(),
        colors: common.colors.clone(),
    };
    let c = g.vertex(KvColor::A);
    g.edges.extend([(bb1, c), (bb2, c)]);
    let end = g.path(s, Some(c));
    let g_next = c + 1;
    let atop = g.vertex(KvColor::A);
    let t1 = g.vertex(KvColor::B);
    let t2 = g.vertex(KvColor::B);
    g.edges.extend([(end, atop), (atop, t1), (atop, t2), (t1, t2)]);

    let mut h = common;
    let c1 = h.vertex(KvColor::A);
    let c2 = h.vertex(KvColor::A);
    h.edges.extend([(bb1, c1), (bb2, c2)]);
    let end = h.path(s, Some(c1));
    let h_next = c2 + 1;
    h.edges.push((end, c2));
    let b3 = h.vertex(KvColor::B);
    let b4 = h.vertex(KvColor::B);
    h.edges.extend([(c1, b3), (c2, b4), (b3, b4)]);

    let (g, g_colors) = g.finish()?;
    let (h, h_colors) = h.finish()?;
    let g = Fixture::new(
        format!("G_{s}_{t}"),
        g,
        &[("v", 0), ("a", bb1), ("b", bb2), ("c", c), ("g", g_next)],
    )?;
    let h = Fixture::new(
        format!("H_{s}_{t}"),
        h,
        &[
            ("u", 0),
            ("a", bb1),
            ("b", bb2),
            ("c1", c1),
            ("c2", c2),
            ("g", h_next),
            ("bb", b3),
        ],
    )?;
    Ok(KvPair {
        s,
        t,
        g,
        h,
        g_colors,
        h_colors,
        shared,
        level: t * (s + 4) - 2,
    })
}

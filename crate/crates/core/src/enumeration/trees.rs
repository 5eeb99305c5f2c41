//! Free trees, one per isomorphism class, by the Wright-Richmond-Odlyzko-
//! McKay successor scheme on level sequences.

use crate::graph::Graph;

/// Successor of a rooted level sequence, changing positions `p..`. With
/// `p = None` the last position with level above 1 is used.
fn next_rooted(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (levels
/// shifted down by one) and the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Advances `candidate` to the next sequence rooted at a canonical center.
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = next.len();
        for (i, slot) in next[len - (h + 1)..].iter_mut().enumerate() {
            *slot = i + 1;
        }
    }
    Some(next)
}

fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut g = Graph::empty(layout.len()).expect("n >= 1");
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = stack.last() {
            g.add_edge(i, j).expect("level sequences give trees");
        }
        stack.push(i);
    }
    g
}

/// Iterator over the non-isomorphic free trees on `n` vertices.
pub struct Trees {
    n: usize,
    layout: Option<Vec<usize>>,
    small_done: bool,
}

impl Iterator for Trees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.n <= 2 {
            if self.small_done || self.n == 0 {
                return None;
            }
            self.small_done = true;
            let edges: &[(usize, usize)] = if self.n == 2 { &[(0, 1)] } else { &[] };
            return Some(Graph::from_edges(self.n, edges).expect("small tree"));
        }
        let layout = next_tree(self.layout.take()?)?;
        let g = layout_to_graph(&layout);
        self.layout = next_rooted(&layout, None);
        Some(g)
    }
}

/// Non-isomorphic trees on `n` vertices (none for `n = 0`).
pub fn enumerate_trees(n: usize) -> Trees {
    let layout = (n >= 3).then(|| (0..=n / 2).chain(1..n.div_ceil(2)).collect());
    Trees {
        n,
        layout,
        small_done: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivalence::canonical_key;
    use std::collections::HashSet;

    const A000055: [usize; 19] = [
        1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
    ];

    #[test]
    fn counts_match_known_sequence() {
        for n in 1..=16 {
            let trees: Vec<Graph> = enumerate_trees(n).collect();
            assert_eq!(trees.len(), A000055[n], "n = {n}");
            let keys: HashSet<_> = trees.iter().map(|t| canonical_key(t).unwrap()).collect();
            assert_eq!(keys.len(), trees.len(), "duplicates at n = {n}");
            assert!(trees.iter().all(|t| t.n() == n && t.is_tree()));
        }
        assert_eq!(enumerate_trees(0).count(), 0);
    }
}

//! Canonical forms for isomorphism testing of small graphs.
//!
//! [`canonical_form`] is a brute-force search for the lexicographically
//! smallest graph6 bit string over all relabellings. Vertices may only move
//! within classes of an isomorphism-invariant key (degree, then the multiset
//! of neighbour degrees), and partial columns are compared against the best
//! string so far. That keeps order 10 tractable; beyond it use the tree form
//! or don't deduplicate.
//!
//! [`tree_canonical_form`] is the usual centre-rooted parenthesis encoding
//! and has no order limit.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_ORDER_LIMIT: usize = 10;

/// A byte string that is equal for two graphs exactly when they are
/// isomorphic. It is the graph6 line of the canonical relabelling.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > CANONICAL_ORDER_LIMIT {
        return Err(Error::OrderTooLarge { order: n, limit: CANONICAL_ORDER_LIMIT });
    }
    let perm = canonical_labelling(g);
    let mut relabel = alloc::vec![0; n];
    for (pos, &v) in perm.iter().enumerate() {
        relabel[v] = pos;
    }
    Ok(graph6::encode_bytes(&g.relabel(&relabel)))
}

/// The relabelling as `positions[i] = original vertex placed at position i`.
fn canonical_labelling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let degrees = g.degrees();
    let keys: Vec<(usize, Vec<usize>)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| degrees[u]).collect();
            nd.sort_unstable();
            (degrees[v], nd)
        })
        .collect();
    let mut slot_keys: Vec<usize> = (0..n).collect();
    slot_keys.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    // class id per vertex, and the class required at each position
    let mut class_of = alloc::vec![0usize; n];
    let mut slot_class = alloc::vec![0usize; n];
    let mut class = 0;
    for (i, &v) in slot_keys.iter().enumerate() {
        if i > 0 && keys[v] != keys[slot_keys[i - 1]] {
            class += 1;
        }
        class_of[v] = class;
        slot_class[i] = class;
    }

    let mut search = Search {
        g,
        class_of,
        slot_class,
        placed: Vec::with_capacity(n),
        used: alloc::vec![false; n],
        columns: Vec::with_capacity(n),
        best_columns: None,
        best: Vec::new(),
    };
    search.run();
    search.best
}

struct Search<'a> {
    g: &'a Graph,
    class_of: Vec<usize>,
    slot_class: Vec<usize>,
    placed: Vec<usize>,
    used: Vec<bool>,
    columns: Vec<u64>,
    best_columns: Option<Vec<u64>>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self) {
        let j = self.placed.len();
        let n = self.g.order();
        if j == n {
            let better = match &self.best_columns {
                None => true,
                Some(best) => self.columns < *best,
            };
            if better {
                self.best_columns = Some(self.columns.clone());
                self.best = self.placed.clone();
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.class_of[v] != self.slot_class[j] {
                continue;
            }
            // column j of the upper triangle, first row most significant
            let col = self.placed.iter().fold(0u64, |acc, &u| (acc << 1) | self.g.has_edge(u, v) as u64);
            if let Some(best) = &self.best_columns {
                let prefix = self.columns.iter().chain(core::iter::once(&col));
                if prefix.cmp(best[..=j].iter()) == Ordering::Greater {
                    continue;
                }
            }
            self.used[v] = true;
            self.placed.push(v);
            self.columns.push(col);
            self.run();
            self.columns.pop();
            self.placed.pop();
            self.used[v] = false;
        }
    }
}

/// Isomorphism test. Trees of any order are compared by their tree form;
/// other graphs go through [`canonical_form`] and its order limit.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }
    if g.is_tree() && h.is_tree() {
        return Ok(tree_canonical_form(g)? == tree_canonical_form(h)?);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// Parenthesis encoding of a tree rooted at its centre; for a bicentral
/// tree the smaller of the two rootings.
pub fn tree_canonical_form(t: &Graph) -> Result<Vec<u8>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let centres = tree_centres(t);
    let mut forms: Vec<Vec<u8>> = centres.iter().map(|&c| rooted_encoding(t, c, usize::MAX)).collect();
    forms.sort();
    Ok(forms.swap_remove(0))
}

/// One or two centres, found by repeatedly stripping leaves.
pub fn tree_centres(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree = t.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for u in t.neighbors(leaf).iter() {
                if degree[u] > 1 {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Parenthesis encoding of the subtree at `root` (coming from `parent`).
pub(crate) fn rooted_encoding(t: &Graph, root: usize, parent: usize) -> Vec<u8> {
    let mut children: Vec<Vec<u8>> = t
        .neighbors(root)
        .iter()
        .filter(|&c| c != parent)
        .map(|c| rooted_encoding(t, c, root))
        .collect();
    children.sort();
    let mut out = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
    out.push(b'(');
    for c in children {
        out.extend(c);
    }
    out.push(b')');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cube_graph, figure3_graph, path_graph, star};

    #[test]
    fn relabelled_path_has_same_form() {
        let p = path_graph(3);
        let q = Graph::new(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        assert!(are_isomorphic(&p, &q).unwrap());
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = path_graph(4);
        let s4 = star(4).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&s4).unwrap());
        assert_ne!(tree_canonical_form(&p4).unwrap(), tree_canonical_form(&s4).unwrap());
    }

    #[test]
    fn k44_minus_perfect_matching_is_the_cube() {
        let mut g = complete_bipartite(4, 4);
        for i in 0..4 {
            g.remove_edge_unchecked(i, 4 + i);
        }
        assert!(are_isomorphic(&g, &cube_graph()).unwrap());
    }

    #[test]
    fn figure3_reversed_labels() {
        let g = figure3_graph();
        let perm: Vec<usize> = (0..8).rev().collect();
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn order_limit() {
        assert!(matches!(canonical_form(&path_graph(11)), Err(Error::OrderTooLarge { .. })));
        assert!(tree_canonical_form(&path_graph(40)).is_ok());
        assert!(are_isomorphic(&path_graph(12), &path_graph(12)).unwrap());
    }

    #[test]
    fn centres() {
        assert_eq!(tree_centres(&path_graph(5)), alloc::vec![2]);
        assert_eq!(tree_centres(&path_graph(6)), alloc::vec![2, 3]);
        assert_eq!(tree_centres(&Graph::empty(1)), alloc::vec![0]);
    }
}

//! Exhaustive instance streams: free trees, connected graphs, unicyclic graphs.
//!
//! Free trees are produced lazily from rooted level sequences. Connected
//! graphs and unicyclic graphs are built order by order and deduplicated by
//! canonical form, so their streams hold the finished list.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const FREE_TREE_LIMIT: usize = 16;
pub const CONNECTED_GRAPH_LIMIT: usize = 7;
pub const UNICYCLIC_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    GeneratedTrees,
    GeneratedGraphs,
    GeneratedUnicyclic,
    File,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::GeneratedTrees => "generated-trees",
            Source::GeneratedGraphs => "generated-graphs",
            Source::GeneratedUnicyclic => "generated-unicyclic",
            Source::File => "file",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A tagged iterator of graphs.
pub struct InstanceStream {
    source: Source,
    orders: RangeInclusive<usize>,
    graphs: Box<dyn Iterator<Item = Graph> + Send>,
}

impl InstanceStream {
    pub fn new<I>(source: Source, orders: RangeInclusive<usize>, graphs: I) -> InstanceStream
    where
        I: IntoIterator<Item = Graph>,
        I::IntoIter: Send + 'static,
    {
        InstanceStream { source, orders, graphs: Box::new(graphs.into_iter()) }
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn orders(&self) -> RangeInclusive<usize> {
        self.orders.clone()
    }
}

impl Iterator for InstanceStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.graphs.next()
    }
}

impl fmt::Debug for InstanceStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InstanceStream").field("source", &self.source).field("orders", &self.orders).finish()
    }
}

fn check_range(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min {
        return Err(Error::OrderTooSmall { order: n, min });
    }
    if n > max {
        return Err(Error::OrderTooLarge { order: n, limit: max });
    }
    Ok(())
}

/// Every free tree on `n` vertices, once each.
pub fn free_trees(n: usize) -> Result<InstanceStream> {
    check_range(n, 1, FREE_TREE_LIMIT)?;
    Ok(InstanceStream::new(Source::GeneratedTrees, n..=n, FreeTrees { next: Some((0..n).collect()) }))
}

/// Walks canonical rooted trees by the level-sequence successor rule and
/// keeps those rooted at a centroid. A bicentroidal tree is kept only for the
/// rooting whose root half is at least its other half.
struct FreeTrees {
    next: Option<Vec<usize>>,
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            let seq = self.next.take()?;
            self.next = successor(&seq);
            if centroid_representative(&seq) {
                return Some(tree_from_levels(&seq));
            }
        }
    }
}

fn successor(seq: &[usize]) -> Option<Vec<usize>> {
    let p = seq.iter().rposition(|&l| l > 1)?;
    let q = seq[..p].iter().rposition(|&l| l == seq[p] - 1)?;
    let shift = p - q;
    let mut out = seq.to_vec();
    for i in p..out.len() {
        out[i] = out[i - shift];
    }
    Some(out)
}

/// Start indices of the root's subtrees, with their ends.
fn root_branches(seq: &[usize]) -> Vec<(usize, usize)> {
    let starts: Vec<usize> = (1..seq.len()).filter(|&i| seq[i] == 1).collect();
    starts.iter().enumerate().map(|(k, &s)| (s, starts.get(k + 1).copied().unwrap_or(seq.len()))).collect()
}

fn centroid_representative(seq: &[usize]) -> bool {
    let n = seq.len();
    let branches = root_branches(seq);
    if branches.iter().any(|&(s, e)| 2 * (e - s) > n) {
        return false;
    }
    let Some(&(s, e)) = branches.iter().find(|&&(s, e)| 2 * (e - s) == n) else {
        return true;
    };
    let half: Vec<usize> = seq[s..e].iter().map(|l| l - 1).collect();
    let rest: Vec<usize> = seq[..s].iter().chain(&seq[e..]).copied().collect();
    rest >= half
}

fn tree_from_levels(seq: &[usize]) -> Graph {
    let mut g = Graph::empty(seq.len());
    let mut stack: Vec<usize> = Vec::new();
    for (i, &l) in seq.iter().enumerate() {
        stack.truncate(l);
        if let Some(&parent) = stack.last() {
            g.add_edge_unchecked(parent, i);
        }
        stack.push(i);
    }
    g
}

/// Every connected graph on `n` vertices up to isomorphism, in canonical
/// form order. Each is reached by adding a vertex to a connected graph one
/// smaller, since every connected graph has a vertex whose removal keeps it
/// connected.
pub fn connected_graphs(n: usize) -> Result<InstanceStream> {
    check_range(n, 1, CONNECTED_GRAPH_LIMIT)?;
    let mut level: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1);
    level.insert(canonical_form(&k1)?, k1);
    for m in 1..n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for mask in 1u64..(1 << m) {
                let mut h = Graph::empty(m + 1);
                for e in g.edges() {
                    let (a, b) = e.endpoints();
                    h.add_edge_unchecked(a, b);
                }
                for v in 0..m {
                    if mask >> v & 1 == 1 {
                        h.add_edge_unchecked(v, m);
                    }
                }
                next.entry(canonical_form(&h)?).or_insert(h);
            }
        }
        level = next;
    }
    Ok(InstanceStream::new(Source::GeneratedGraphs, n..=n, level.into_values()))
}

/// Every unicyclic graph on `n` vertices up to isomorphism: free trees with
/// one chord added, grouped by degree sequence before canonicalising.
pub fn unicyclic_graphs(n: usize) -> Result<InstanceStream> {
    check_range(n, 3, UNICYCLIC_LIMIT)?;
    let mut seen: BTreeMap<(Vec<usize>, Vec<u8>), Graph> = BTreeMap::new();
    for t in free_trees(n)? {
        for a in 0..n {
            for b in a + 1..n {
                if t.has_edge(a, b) {
                    continue;
                }
                let mut g = t.clone();
                g.add_edge_unchecked(a, b);
                let key = (g.degree_sequence(), canonical_form(&g)?);
                seen.entry(key).or_insert(g);
            }
        }
    }
    let mut graphs: Vec<(Vec<u8>, Graph)> = seen.into_iter().map(|((_, c), g)| (c, g)).collect();
    graphs.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(InstanceStream::new(Source::GeneratedUnicyclic, n..=n, graphs.into_iter().map(|(_, g)| g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic, tree_canonical_form};
    use crate::families::{cycle_graph, figure3_graph};
    use alloc::collections::BTreeSet;

    // Published counts: free trees (OEIS A000055), connected graphs (A001349).
    const FREE_TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
    const CONNECTED_COUNTS: [usize; 6] = [1, 1, 2, 6, 21, 112];

    #[test]
    fn free_tree_counts() {
        for (i, &want) in FREE_TREE_COUNTS.iter().enumerate() {
            let trees: Vec<Graph> = free_trees(i + 1).unwrap().collect();
            assert_eq!(trees.len(), want, "n = {}", i + 1);
            assert!(trees.iter().all(|t| t.is_tree() && t.order() == i + 1));
            let forms: BTreeSet<Vec<u8>> = trees.iter().map(|t| tree_canonical_form(t).unwrap()).collect();
            assert_eq!(forms.len(), want);
        }
    }

    #[test]
    fn free_tree_limits() {
        assert!(free_trees(0).is_err());
        assert!(free_trees(17).is_err());
        assert_eq!(free_trees(12).unwrap().count(), 551);
    }

    #[test]
    fn connected_counts() {
        for (i, &want) in CONNECTED_COUNTS.iter().enumerate() {
            let graphs: Vec<Graph> = connected_graphs(i + 1).unwrap().collect();
            assert_eq!(graphs.len(), want, "n = {}", i + 1);
            assert!(graphs.iter().all(Graph::is_connected));
        }
        assert!(connected_graphs(8).is_err());
    }

    #[test]
    fn pairwise_distinct_small() {
        for n in 1..=6 {
            let graphs: Vec<Graph> = connected_graphs(n).unwrap().collect();
            for (i, g) in graphs.iter().enumerate() {
                for h in &graphs[i + 1..] {
                    assert!(!are_isomorphic(g, h).unwrap());
                }
            }
        }
    }

    #[test]
    fn unicyclic_examples() {
        let three: Vec<Graph> = unicyclic_graphs(3).unwrap().collect();
        assert_eq!(three.len(), 1);
        assert!(are_isomorphic(&three[0], &cycle_graph(3).unwrap()).unwrap());
        let four: Vec<Graph> = unicyclic_graphs(4).unwrap().collect();
        assert_eq!(four.len(), 2);
        assert!(four.iter().any(|g| are_isomorphic(g, &cycle_graph(4).unwrap()).unwrap()));
        let eight: Vec<Graph> = unicyclic_graphs(8).unwrap().collect();
        assert!(eight.iter().all(|g| g.is_connected() && g.size() == 8));
        assert!(eight.iter().any(|g| are_isomorphic(g, &figure3_graph()).unwrap()));
        assert!(unicyclic_graphs(2).is_err());
    }

    #[test]
    fn unicyclic_matches_connected_filter() {
        for n in 3..=6 {
            let direct = connected_graphs(n).unwrap().filter(|g| g.size() == n).count();
            assert_eq!(unicyclic_graphs(n).unwrap().count(), direct, "n = {n}");
        }
    }

    #[test]
    fn stream_tags() {
        let s = free_trees(5).unwrap();
        assert_eq!(s.source(), Source::GeneratedTrees);
        assert_eq!(s.orders(), 5..=5);
    }
}

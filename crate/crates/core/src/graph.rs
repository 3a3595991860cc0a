use alloc::collections::VecDeque;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An unordered pair of distinct vertices, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::LoopEdge(a));
        }
        Ok(Edge { u: a.min(b), v: a.max(b) })
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// A finite simple undirected graph on the vertex ids `0..order`.
///
/// Graphs are immutable once built; every modifying operation returns a new
/// value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    size: usize,
}

/// The result of [`Graph::delete_vertex`]: the smaller graph and, for each
/// new id, the id it had in the original graph.
#[derive(Clone, Debug)]
pub struct VertexDeletion {
    pub graph: Graph,
    pub original_ids: Vec<usize>,
}

/// A connected component together with the original id of each vertex.
#[derive(Clone, Debug)]
pub struct Component {
    pub graph: Graph,
    pub original_ids: Vec<usize>,
}

impl Graph {
    /// The graph with `order` vertices and no edges.
    pub fn empty(order: usize) -> Graph {
        Graph { adj: (0..order).map(|_| VertexSet::new(order)).collect(), size: 0 }
    }

    /// Builds a graph from an edge list. Loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn new<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order);
        for (a, b) in edges {
            for x in [a, b] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            let e = Edge::new(a, b)?;
            if g.has_edge(a, b) {
                return Err(Error::DuplicateEdge(e));
            }
            g.add_edge_unchecked(a, b);
        }
        Ok(g)
    }

    pub fn from_edges(order: usize, edges: &[Edge]) -> Result<Graph> {
        Graph::new(order, edges.iter().map(|e| e.endpoints()))
    }

    pub(crate) fn add_edge_unchecked(&mut self, a: usize, b: usize) {
        if self.adj[a].insert(b) {
            self.adj[b].insert(a);
            self.size += 1;
        }
    }

    pub(crate) fn remove_edge_unchecked(&mut self, a: usize, b: usize) {
        if self.adj[a].remove(b) {
            self.adj[b].remove(a);
            self.size -= 1;
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertices(&self) -> core::ops::Range<usize> {
        0..self.order()
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.order() && self.adj[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Nonincreasing degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size);
        for u in self.vertices() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Closed neighbourhood of a set: the set together with all its neighbours.
    pub fn closed_neighborhood_of(&self, set: &VertexSet) -> VertexSet {
        let mut out = set.clone();
        for v in set {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// The `X`-private neighbourhood of `x`: every `y` with `N[y] ∩ X = {x}`.
    /// Contains `x` itself when `x` has no neighbour in `X`.
    pub fn private_neighbors(&self, x: usize, set: &VertexSet) -> Result<VertexSet> {
        self.check_vertex(x)?;
        if !set.contains(x) {
            return Err(Error::NotInSet(x));
        }
        let mut out = VertexSet::new(self.order());
        for y in self.closed_neighborhood(x).iter() {
            let mut hits = self.adj[y].intersection_len(set);
            if set.contains(y) {
                hits += 1;
            }
            if hits == 1 {
                out.insert(y);
            }
        }
        Ok(out)
    }

    /// External boundary of `set`: the vertices outside it with a neighbour in it.
    pub fn boundary(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.closed_neighborhood_of(set);
        out.difference_with(set);
        out
    }

    /// `G - v`, with the remaining vertices renumbered contiguously.
    pub fn delete_vertex(&self, v: usize) -> Result<VertexDeletion> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        Ok(VertexDeletion { graph: self.induced_subgraph(&keep), original_ids: keep })
    }

    /// Deletes a set of vertices; ids are renumbered contiguously.
    pub fn delete_vertices(&self, removed: &VertexSet) -> VertexDeletion {
        let keep: Vec<usize> = self.vertices().filter(|&u| !removed.contains(u)).collect();
        VertexDeletion { graph: self.induced_subgraph(&keep), original_ids: keep }
    }

    /// The subgraph induced by `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut position = alloc::vec![usize::MAX; self.order()];
        for (i, &u) in keep.iter().enumerate() {
            position[u] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for w in self.adj[u].iter() {
                let j = position[w];
                if j != usize::MAX && j > i {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// `G - F`. Labels are preserved.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<Graph> {
        let mut g = self.clone();
        for &e in edges {
            let (a, b) = e.endpoints();
            if !g.has_edge(a, b) {
                return Err(Error::MissingEdge(e));
            }
            g.remove_edge_unchecked(a, b);
        }
        Ok(g)
    }

    /// `G - E_v`: removes every edge at `v`, leaving it isolated.
    pub fn isolate_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        for u in self.adj[v].iter() {
            g.remove_edge_unchecked(u, v);
        }
        Ok(g)
    }

    /// Component index of every vertex, numbered in order of smallest member.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let n = self.order();
        let mut label = alloc::vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    pub fn connected_components(&self) -> Vec<Component> {
        let (count, label) = self.component_labels();
        let mut members: Vec<Vec<usize>> = alloc::vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            members[c].push(v);
        }
        members
            .into_iter()
            .map(|ids| Component { graph: self.induced_subgraph(&ids), original_ids: ids })
            .collect()
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_labels().0 <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size + 1 == self.order() && self.is_connected()
    }

    /// Distances from `source` by breadth-first search; unreachable vertices get `None`.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = alloc::vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Applies a relabelling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut g = Graph::empty(self.order());
        for e in self.edges() {
            let (a, b) = e.endpoints();
            g.add_edge_unchecked(perm[a], perm[b]);
        }
        g
    }

    pub fn is_dominating(&self, set: &VertexSet) -> bool {
        self.closed_neighborhood_of(set).len() == self.order()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        } else {
            Ok(())
        }
    }

    /// Closed-neighbourhood masks; requires `order <= 64`.
    pub(crate) fn closed_masks(&self) -> Vec<u64> {
        debug_assert!(self.order() <= 64);
        self.vertices().map(|v| self.adj[v].to_mask() | (1 << v)).collect()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let (a, b) = e.endpoints();
            write!(f, "{a}-{b}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle_graph, path_graph};
    use alloc::vec;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(Graph::new(4, [(0, 0)]), Err(Error::LoopEdge(0)));
        assert_eq!(Graph::new(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert!(matches!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(_))));
    }

    #[test]
    fn path_and_edgeless() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.degrees(), vec![1, 2, 1]);
        let e3 = Graph::new(3, []).unwrap();
        assert_eq!(e3.connected_components().len(), 3);
    }

    #[test]
    fn private_neighbors_examples() {
        // P_6 as v1..v6 = 0..5
        let p6 = path_graph(6);
        let pn = p6.private_neighbors(1, &set(6, &[1, 4])).unwrap();
        assert_eq!(pn.to_vec(), vec![0, 1, 2]);

        let k3 = Graph::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(k3.private_neighbors(0, &set(3, &[0, 1])).unwrap().is_empty());

        // X = {x} gives N[x]
        let pn = p6.private_neighbors(3, &set(6, &[3])).unwrap();
        assert_eq!(pn, p6.closed_neighborhood(3));

        assert_eq!(p6.private_neighbors(2, &set(6, &[1])), Err(Error::NotInSet(2)));
    }

    #[test]
    fn boundary_examples() {
        let p3 = path_graph(3);
        assert_eq!(p3.boundary(&set(3, &[1])).to_vec(), vec![0, 2]);
        assert!(p3.boundary(&set(3, &[])).is_empty());
        let c6 = cycle_graph(6).unwrap();
        assert_eq!(c6.boundary(&set(6, &[0, 3])).to_vec(), vec![1, 2, 4, 5]);
    }

    #[test]
    fn deletions() {
        let p3 = path_graph(3);
        let d = p3.delete_vertex(1).unwrap();
        assert_eq!((d.graph.order(), d.graph.size()), (2, 0));
        assert_eq!(d.original_ids, vec![0, 2]);

        let c3 = cycle_graph(3).unwrap();
        let g = c3.delete_edges(&[Edge::new(0, 2).unwrap()]).unwrap();
        assert_eq!(g, path_graph(3));

        let p4 = path_graph(4);
        let g = p4.delete_edges(&[Edge::new(1, 2).unwrap()]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.graph == path_graph(2)));

        assert!(matches!(p4.delete_edges(&[Edge::new(0, 2).unwrap()]), Err(Error::MissingEdge(_))));
        assert!(p4.delete_vertex(4).is_err());

        let k1 = Graph::empty(1);
        let d = k1.delete_vertex(0).unwrap();
        assert_eq!(d.graph.order(), 0);
    }

    #[test]
    fn trees_and_components() {
        assert!(path_graph(4).is_tree());
        assert!(!cycle_graph(4).unwrap().is_tree());
        let g = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].original_ids, vec![2, 3, 4]);
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn removing_non_private_dominator_keeps_domination() {
        let c6 = cycle_graph(6).unwrap();
        let d = set(6, &[0, 1, 3]);
        assert!(c6.is_dominating(&d));
        assert!(c6.private_neighbors(1, &d).unwrap().is_empty());
        assert!(c6.is_dominating(&set(6, &[0, 3])));
    }
}

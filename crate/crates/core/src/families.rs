//! Named graphs with fixed vertex labellings.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `P_n` labelled `0 - 1 - ... - n-1`.
pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// `C_n` labelled around the cycle; needs `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("a cycle needs at least 3 vertices"));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid"))
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|j| (0..j).map(move |i| (i, j)))).expect("clique edges are valid")
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::new(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))))
        .expect("bipartite edges are valid")
}

/// The star on `n` vertices, `K_{1,n-1}`, with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("a star needs at least one vertex"));
    }
    Ok(Graph::new(n, (1..n).map(|i| (0, i))).expect("star edges are valid"))
}

/// The 3-cube `Q_3`: vertices are 3-bit words, adjacent when they differ in one bit.
pub fn cube_graph() -> Graph {
    let edges = (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|&(a, b)| a < b);
    Graph::new(8, edges).expect("cube edges are valid")
}

/// Vertices of `g` keep their ids; vertex `i` of `h` becomes `g.order() + i`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.order();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|e| e.endpoints())
        .chain(h.edges().into_iter().map(|e| {
            let (a, b) = e.endpoints();
            (a + off, b + off)
        }))
        .collect();
    Graph::new(off + h.order(), edges).expect("union of simple graphs is simple")
}

/// `G ∨ H`: the disjoint union plus every edge between the two sides.
pub fn join_graph(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    let off = g.order();
    for x in 0..off {
        for y in 0..h.order() {
            out.add_edge_unchecked(x, off + y);
        }
    }
    out
}

/// Two disjoint copies of `K_r` (on `0..r` and `r..2r`) joined by the edge `{0, r}`; needs `r >= 4`.
pub fn two_cliques_bridge(r: usize) -> Result<Graph> {
    if r < 4 {
        return Err(Error::InvalidParameter("two_cliques_bridge needs r >= 4"));
    }
    let k = complete_graph(r);
    let mut g = disjoint_union(&k, &k);
    g.add_edge_unchecked(0, r);
    Ok(g)
}

/// The 4-cycle `0-1-2-3` with leaves 4, 5 on vertex 0 and leaves 6, 7 on vertex 2.
pub fn figure3_graph() -> Graph {
    Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (0, 5), (2, 6), (2, 7)])
        .expect("figure graph edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn figure3_shape() {
        let g = figure3_graph();
        assert_eq!((g.order(), g.size()), (8, 8));
        assert_eq!(g.degree_sequence(), vec![4, 4, 2, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn join_k2_with_two_isolated() {
        let g = join_graph(&complete_graph(2), &Graph::empty(2));
        assert_eq!((g.order(), g.size()), (4, 5));
    }

    #[test]
    fn two_cliques() {
        let g = two_cliques_bridge(4).unwrap();
        assert_eq!((g.order(), g.size()), (8, 13));
        assert!(two_cliques_bridge(3).is_err());
    }

    #[test]
    fn standard_families() {
        assert_eq!(cube_graph().degree_sequence(), vec![3; 8]);
        assert_eq!(cube_graph().size(), 12);
        assert_eq!(complete_bipartite(4, 4).size(), 16);
        assert_eq!(star(4).unwrap().degree_sequence(), vec![3, 1, 1, 1]);
        assert!(cycle_graph(2).is_err());
        assert!(star(0).is_err());
        assert_eq!(path_graph(0).order(), 0);
    }
}

//! The labelled tree family built from `K_{1,2}` by four gadget operations.
//!
//! Every vertex carries a status `A`, `B` or `C`. The base tree is the path
//! `0 - 1 - 2` with status word `ABA`. The operations attach a gadget to an
//! existing vertex `u`:
//!
//! | op | needs `u` | gadget                                   | new statuses        |
//! |----|-----------|------------------------------------------|---------------------|
//! | O1 | A or C    | path `x-y-z`, edge `u-x`                 | x=A y=B z=A         |
//! | O2 | B         | star centre `y`, leaves `x,z,t`; `u-x`   | x=C y=B z=A t=A     |
//! | O3 | C         | path `x-y-z`, edge `u-y`                 | x=A y=B z=A         |
//! | O4 | A or C    | a fresh copy of `R` (O2 applied to the base), edge from `u` to its C vertex |
//!
//! New vertices always get the next free ids, in the order listed.
//!
//! Membership can be decided two ways. [`recognize`] asks the solver for
//! the unique minimum dominating set and reads the labelling off it.
//! [`decompose`] never calls a solver: it peels gadgets from the end of a
//! diametral path and rebuilds the labelling bottom-up. The harness checks
//! that the two agree.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::canon::tree_canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::solvers::{RomanFunction, Solver};
use crate::vertex_set::VertexSet;

/// Largest order [`generate_family`] accepts.
pub const GENERATION_LIMIT: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    A,
    B,
    C,
}

impl Status {
    pub fn as_char(self) -> char {
        match self {
            Status::A => 'A',
            Status::B => 'B',
            Status::C => 'C',
        }
    }

    pub fn from_char(c: char) -> Option<Status> {
        match c {
            'A' => Some(Status::A),
            'B' => Some(Status::B),
            'C' => Some(Status::C),
            _ => None,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Operation {
    O1,
    O2,
    O3,
    O4,
}

impl Operation {
    pub const ALL: [Operation; 4] = [Operation::O1, Operation::O2, Operation::O3, Operation::O4];

    pub fn name(self) -> &'static str {
        match self {
            Operation::O1 => "O1",
            Operation::O2 => "O2",
            Operation::O3 => "O3",
            Operation::O4 => "O4",
        }
    }

    /// Vertices added by one application.
    pub fn growth(self) -> usize {
        match self {
            Operation::O1 | Operation::O3 => 3,
            Operation::O2 => 4,
            Operation::O4 => 7,
        }
    }

    pub fn accepts(self, status: Status) -> bool {
        match self {
            Operation::O1 | Operation::O4 => matches!(status, Status::A | Status::C),
            Operation::O2 => status == Status::B,
            Operation::O3 => status == Status::C,
        }
    }
}

/// One step of a build script: apply `op` at vertex `at` of the current tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildStep {
    pub op: Operation,
    pub at: usize,
}

/// A tree together with a status for every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledTree {
    tree: Graph,
    status: Vec<Status>,
}

/// Outcome of the four structural clauses that every family member satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StatusLaws {
    /// `S_B` is independent and dominating; each B vertex has exactly two
    /// A neighbours, and those plus itself are its `S_B`-private neighbourhood.
    pub b_private: bool,
    /// Each A vertex has exactly one B neighbour, and `|S_A| = 2|S_B|`.
    pub a_matched: bool,
    /// Each C vertex has at least two B neighbours.
    pub c_shared: bool,
    /// `S_B` is the unique minimum dominating set.
    pub b_unique_gamma_set: bool,
}

impl StatusLaws {
    pub fn all(&self) -> bool {
        self.b_private && self.a_matched && self.c_shared && self.b_unique_gamma_set
    }
}

impl LabelledTree {
    pub fn new(tree: Graph, status: Vec<Status>) -> Result<LabelledTree> {
        if !tree.is_tree() {
            return Err(Error::NotATree);
        }
        if status.len() != tree.order() {
            return Err(Error::InvalidLabelling("status map does not cover the vertex set"));
        }
        Ok(LabelledTree { tree, status })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn statuses(&self) -> &[Status] {
        &self.status
    }

    pub fn status(&self, v: usize) -> Status {
        self.status[v]
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    pub fn class(&self, s: Status) -> VertexSet {
        VertexSet::from_vertices(self.order(), (0..self.order()).filter(|&v| self.status[v] == s))
    }

    pub fn status_word(&self) -> String {
        self.status.iter().map(|s| s.as_char()).collect()
    }

    /// `"<graph6> <status word>"`.
    pub fn to_line(&self) -> Result<String> {
        let mut line = graph6::write(&self.tree)?;
        line.push(' ');
        line.push_str(&self.status_word());
        Ok(line)
    }

    pub fn parse_line(line: &str) -> Result<LabelledTree> {
        let mut parts = line.split_whitespace();
        let (Some(g6), Some(word), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::InvalidLabelling("expected `<graph6> <status word>`"));
        };
        let status = word
            .chars()
            .map(Status::from_char)
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::InvalidLabelling("status word may only contain A, B and C"))?;
        LabelledTree::new(graph6::parse(g6)?, status)
    }

    /// Evaluates the four structural clauses. The last one runs the solver.
    pub fn status_laws(&self, solver: &Solver) -> Result<StatusLaws> {
        let t = &self.tree;
        let (a, b) = (self.class(Status::A), self.class(Status::B));
        let b_private = t.is_independent(&b)
            && t.is_dominating(&b)
            && b.iter().all(|v| {
                let mut expected = t.neighbors(v).clone();
                expected.intersect_with(&a);
                let two_a = expected.len() == 2;
                expected.insert(v);
                two_a && t.private_neighbors(v, &b).map(|pn| pn == expected).unwrap_or(false)
            });
        let a_matched = a.len() == 2 * b.len() && a.iter().all(|v| t.neighbors(v).intersection_len(&b) == 1);
        let c_shared = self.class(Status::C).iter().all(|v| t.neighbors(v).intersection_len(&b) >= 2);
        let summary = solver.minimum_dominating_sets(t)?;
        let b_unique_gamma_set = summary.unique && summary.all_min_sets[0] == b;
        Ok(StatusLaws { b_private, a_matched, c_shared, b_unique_gamma_set })
    }

    /// Applies one operation at `u`.
    pub fn apply(&self, op: Operation, u: usize) -> Result<LabelledTree> {
        self.tree.check_vertex(u)?;
        let found = self.status[u];
        if !op.accepts(found) {
            return Err(Error::WrongStatus { vertex: u, found, op: op.name() });
        }
        let n = self.order();
        let (mut edges, mut status) = (self.tree.edges(), self.status.clone());
        let mut add = |a: usize, b: usize| edges.push(crate::graph::Edge::new(a, b).expect("distinct"));
        match op {
            Operation::O1 => {
                add(u, n);
                add(n, n + 1);
                add(n + 1, n + 2);
                status.extend([Status::A, Status::B, Status::A]);
            }
            Operation::O2 => {
                add(u, n);
                add(n + 1, n);
                add(n + 1, n + 2);
                add(n + 1, n + 3);
                status.extend([Status::C, Status::B, Status::A, Status::A]);
            }
            Operation::O3 => {
                add(n, n + 1);
                add(n + 1, n + 2);
                add(u, n + 1);
                status.extend([Status::A, Status::B, Status::A]);
            }
            Operation::O4 => {
                let r = labelled_r();
                for e in r.tree.edges() {
                    let (x, y) = e.endpoints();
                    add(n + x, n + y);
                }
                add(u, n + R_C_VERTEX);
                status.extend(r.status.iter().copied());
            }
        }
        let tree = Graph::from_edges(n + op.growth(), &edges)?;
        Ok(LabelledTree { tree, status })
    }

    /// `f_T = (S_A ∪ S_C; ∅; S_B)`. Fails if the labelling breaks one of the
    /// solver-free structural clauses.
    pub fn canonical_gamma_r_function(&self) -> Result<RomanFunction> {
        let laws = self.cheap_laws();
        if !laws {
            return Err(Error::InvalidLabelling("labelling violates the status laws"));
        }
        let b = self.class(Status::B);
        Ok(RomanFunction::from_twos(&self.tree, &b))
    }

    fn cheap_laws(&self) -> bool {
        let t = &self.tree;
        let (a, b) = (self.class(Status::A), self.class(Status::B));
        t.is_independent(&b)
            && t.is_dominating(&b)
            && a.len() == 2 * b.len()
            && a.iter().all(|v| t.neighbors(v).intersection_len(&b) == 1)
            && self.class(Status::C).iter().all(|v| t.neighbors(v).intersection_len(&b) >= 2)
    }

    /// Member of the subfamily without C vertices.
    pub fn in_t1(&self) -> bool {
        !self.status.contains(&Status::C)
    }
}

/// The labelled `K_{1,2}`: path `0 - 1 - 2`, statuses `ABA`.
pub fn base_k12() -> LabelledTree {
    LabelledTree { tree: crate::families::path_graph(3), status: alloc::vec![Status::A, Status::B, Status::A] }
}

/// Id of the C vertex inside [`labelled_r`].
pub const R_C_VERTEX: usize = 3;

/// The labelled `R`: O2 applied at the centre of the labelled `K_{1,2}`.
pub fn labelled_r() -> LabelledTree {
    base_k12().apply(Operation::O2, 1).expect("centre of K_{1,2} has status B")
}

/// Replays a build script from the labelled `K_{1,2}`.
pub fn replay(steps: &[BuildStep]) -> Result<LabelledTree> {
    steps.iter().try_fold(base_k12(), |t, s| t.apply(s.op, s.at))
}

/// Every family member of order at most `max_order`, one per isomorphism
/// class, sorted by order and then by tree canonical form.
///
/// Orders are processed in increasing order and every operation is tried
/// at every eligible vertex of every representative. Deduplication keys on
/// the underlying tree alone, which is sound because a family member's
/// labelling is determined by its tree.
pub fn generate_family(max_order: usize) -> Result<Vec<LabelledTree>> {
    if max_order > GENERATION_LIMIT {
        return Err(Error::OrderTooLarge { order: max_order, limit: GENERATION_LIMIT });
    }
    let mut by_order: BTreeMap<usize, BTreeMap<Vec<u8>, LabelledTree>> = BTreeMap::new();
    if max_order >= 3 {
        let base = base_k12();
        by_order.entry(3).or_default().insert(tree_canonical_form(&base.tree)?, base);
    }
    for order in 3..=max_order {
        let Some(level) = by_order.get(&order).cloned() else { continue };
        for t in level.values() {
            for op in Operation::ALL {
                let child_order = order + op.growth();
                if child_order > max_order {
                    continue;
                }
                for u in 0..order {
                    if !op.accepts(t.status[u]) {
                        continue;
                    }
                    let child = t.apply(op, u)?;
                    let key = tree_canonical_form(&child.tree)?;
                    by_order.entry(child_order).or_default().entry(key).or_insert(child);
                }
            }
        }
    }
    Ok(by_order.into_values().flat_map(BTreeMap::into_values).collect())
}

fn require_tree(t: &Graph) -> Result<()> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.order() < 3 {
        return Err(Error::OrderTooSmall { order: t.order(), min: 3 });
    }
    Ok(())
}

/// Solver-backed recognition: `t` is a member exactly when it has a unique
/// minimum dominating set `D`, `D` is independent and `|pn[v, D]| = 3` for
/// every `v` in `D`. The labelling is then forced: `S_B = D`, `S_C` the
/// vertices outside `D` with at least two neighbours in it, `S_A` the rest.
pub fn recognize(solver: &Solver, t: &Graph) -> Result<Option<LabelledTree>> {
    require_tree(t)?;
    let summary = solver.minimum_dominating_sets(t)?;
    if !summary.unique {
        return Ok(None);
    }
    let d = &summary.all_min_sets[0];
    if !t.is_independent(d) {
        return Ok(None);
    }
    for v in d {
        if t.private_neighbors(v, d)?.len() != 3 {
            return Ok(None);
        }
    }
    let status = t
        .vertices()
        .map(|v| {
            if d.contains(v) {
                Status::B
            } else if t.neighbors(v).intersection_len(d) >= 2 {
                Status::C
            } else {
                Status::A
            }
        })
        .collect();
    Ok(Some(LabelledTree { tree: t.clone(), status }))
}

/// A build script found by [`decompose`], with the correspondence between
/// input vertices and the vertices of the replayed tree.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub steps: Vec<BuildStep>,
    /// `replay_id[v]` is the vertex of [`Decomposition::labelled`] that input vertex `v` became.
    pub replay_id: Vec<usize>,
    /// `replay(&steps)`.
    pub labelled: LabelledTree,
}

impl Decomposition {
    /// The labelling pulled back to the input's vertex ids.
    pub fn input_statuses(&self) -> Vec<Status> {
        self.replay_id.iter().map(|&r| self.labelled.status(r)).collect()
    }
}

/// Solver-free recognition by peeling gadgets off a diametral path.
///
/// At each step a diametral path `p_0 ... p_L` is fixed by two breadth-first
/// searches (from the smallest remaining vertex, ties to the smallest id).
/// With `v1 = p_{L-1}`, `v2 = p_{L-2}`:
///
/// * `deg(v1) = 2`: `p_L, v1, v2` must be a pendant path hanging from
///   `p_{L-3}` (O1).
/// * `deg(v1) = 3`: `v1` carries two leaves; the gadget is an O3 path hung
///   from `v2`, an O2 star hung from `v2`'s other neighbour, or a whole `R`
///   around `v2` (O4). These are tried in that order.
///
/// The rest is decomposed recursively, and a peel is only kept if the
/// attachment vertex has a status the operation accepts.
pub fn decompose(t: &Graph) -> Result<Option<Decomposition>> {
    require_tree(t)?;
    let alive = VertexSet::full(t.order());
    let Some(built) = peel(t, &alive) else { return Ok(None) };
    let replay_id = built.replay_id.iter().map(|r| r.expect("every vertex is placed")).collect();
    let labelled = replay(&built.steps)?;
    Ok(Some(Decomposition { steps: built.steps, replay_id, labelled }))
}

struct Built {
    steps: Vec<BuildStep>,
    /// Indexed by input vertex.
    replay_id: Vec<Option<usize>>,
    /// Indexed by replay vertex.
    status: Vec<Status>,
}

impl Built {
    fn status_of(&self, v: usize) -> Status {
        self.status[self.replay_id[v].expect("attachment vertex survives the peel")]
    }

    fn extend(mut self, op: Operation, u: usize, gadget: &[(usize, Status)]) -> Option<Built> {
        if !op.accepts(self.status_of(u)) {
            return None;
        }
        let at = self.replay_id[u]?;
        self.steps.push(BuildStep { op, at });
        for &(v, s) in gadget {
            self.replay_id[v] = Some(self.status.len());
            self.status.push(s);
        }
        Some(self)
    }
}

fn alive_neighbors(t: &Graph, alive: &VertexSet, v: usize) -> Vec<usize> {
    t.neighbors(v).iter().filter(|&w| alive.contains(w)).collect()
}

/// Breadth-first search inside `alive`; returns the farthest vertex (smallest
/// id on ties) and the parent array.
fn farthest(t: &Graph, alive: &VertexSet, source: usize) -> (usize, Vec<usize>) {
    let mut parent = alloc::vec![usize::MAX; t.order()];
    let mut dist = alloc::vec![usize::MAX; t.order()];
    let mut queue = alloc::collections::VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    let mut best = source;
    while let Some(u) = queue.pop_front() {
        if dist[u] > dist[best] || (dist[u] == dist[best] && u < best) {
            best = u;
        }
        for w in alive_neighbors(t, alive, u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (best, parent)
}

fn peel(t: &Graph, alive: &VertexSet) -> Option<Built> {
    let m = alive.len();
    if m < 3 {
        return None;
    }
    if m == 3 {
        let centre = alive.iter().find(|&v| alive_neighbors(t, alive, v).len() == 2)?;
        let leaves = alive_neighbors(t, alive, centre);
        let mut replay_id = alloc::vec![None; t.order()];
        replay_id[leaves[0]] = Some(0);
        replay_id[centre] = Some(1);
        replay_id[leaves[1]] = Some(2);
        return Some(Built { steps: Vec::new(), replay_id, status: base_k12().status });
    }

    let start = alive.iter().next()?;
    let (a, _) = farthest(t, alive, start);
    let (b, parent) = farthest(t, alive, a);
    let mut path = alloc::vec![b];
    while *path.last()? != a {
        path.push(parent[*path.last()?]);
    }
    // path[0] = p_L (leaf end), path[1] = v1, path[2] = v2, path[3] = v3
    if path.len() < 4 {
        return None;
    }
    let (leaf, v1, v2, v3) = (path[0], path[1], path[2], path[3]);
    let deg = |v: usize| alive_neighbors(t, alive, v).len();
    let without = |gone: &[usize]| {
        let mut rest = alive.clone();
        for &v in gone {
            rest.remove(v);
        }
        rest
    };

    match deg(v1) {
        2 => {
            if deg(v2) != 2 {
                return None;
            }
            let rest = without(&[v2, v1, leaf]);
            peel(t, &rest)?.extend(Operation::O1, v3, &[(v2, Status::A), (v1, Status::B), (leaf, Status::A)])
        }
        3 => {
            let other_leaf = alive_neighbors(t, alive, v1).into_iter().find(|&w| w != v2 && w != leaf)?;
            // O3: the K_{1,2} at v1 hangs from a C vertex v2.
            let rest = without(&[v1, leaf, other_leaf]);
            if let Some(done) = peel(t, &rest).and_then(|b| {
                b.extend(Operation::O3, v2, &[(leaf, Status::A), (v1, Status::B), (other_leaf, Status::A)])
            }) {
                return Some(done);
            }
            // O2: v2 is the C leaf of a star centred at v1, hung from a B vertex.
            if deg(v2) == 2 {
                let rest = without(&[v2, v1, leaf, other_leaf]);
                if let Some(done) = peel(t, &rest).and_then(|b| {
                    b.extend(
                        Operation::O2,
                        v3,
                        &[(v2, Status::C), (v1, Status::B), (leaf, Status::A), (other_leaf, Status::A)],
                    )
                }) {
                    return Some(done);
                }
            }
            // O4: v2 is the C vertex of a copy of R.
            if deg(v2) == 3 {
                let others: Vec<usize> = alive_neighbors(t, alive, v2).into_iter().filter(|&w| w != v1).collect();
                for (z, u) in [(others[0], others[1]), (others[1], others[0])] {
                    let z_nbrs = alive_neighbors(t, alive, z);
                    let z_leaves: Vec<usize> = z_nbrs.iter().copied().filter(|&w| deg(w) == 1).collect();
                    if z_nbrs.len() != 3 || z_leaves.len() != 2 || !z_nbrs.contains(&v2) {
                        continue;
                    }
                    let rest = without(&[z_leaves[0], z, z_leaves[1], v2, v1, leaf, other_leaf]);
                    let gadget = [
                        (z_leaves[0], Status::A),
                        (z, Status::B),
                        (z_leaves[1], Status::A),
                        (v2, Status::C),
                        (v1, Status::B),
                        (leaf, Status::A),
                        (other_leaf, Status::A),
                    ];
                    if let Some(done) = peel(t, &rest).and_then(|b| b.extend(Operation::O4, u, &gadget)) {
                        return Some(done);
                    }
                }
            }
            None
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::families::path_graph;
    use alloc::vec;

    fn word(t: &LabelledTree) -> String {
        t.status_word()
    }

    #[test]
    fn base_tree() {
        let b = base_k12();
        assert_eq!(b.order(), 3);
        assert_eq!(b.class(Status::B).len(), 1);
        assert_eq!(b.canonical_gamma_r_function().unwrap().weight(), 2);
        assert!(b.in_t1());
    }

    #[test]
    fn o1_examples() {
        let p6 = base_k12().apply(Operation::O1, 2).unwrap();
        assert_eq!(p6.tree(), &path_graph(6));
        assert_eq!(word(&p6), "ABAABA");
        let p9 = p6.apply(Operation::O1, 0).unwrap();
        assert!(are_isomorphic(p9.tree(), &path_graph(9)).unwrap());
        assert!(matches!(base_k12().apply(Operation::O1, 1), Err(Error::WrongStatus { vertex: 1, .. })));
    }

    #[test]
    fn o2_gives_r() {
        let r = labelled_r();
        assert_eq!(r.order(), 7);
        assert_eq!(
            (r.class(Status::B).len(), r.class(Status::A).len(), r.class(Status::C).len()),
            (2, 4, 1)
        );
        assert_eq!(r.status(R_C_VERTEX), Status::C);
        assert!(base_k12().apply(Operation::O2, 0).is_err());
        assert!(!r.in_t1());
    }

    #[test]
    fn o3_and_o4() {
        let r = labelled_r();
        let t = r.apply(Operation::O3, R_C_VERTEX).unwrap();
        assert_eq!(t.order(), 10);
        assert!(t.tree().is_independent(&t.class(Status::B)));
        assert!(r.apply(Operation::O3, 1).is_err());

        let t = base_k12().apply(Operation::O4, 0).unwrap();
        assert_eq!(t.order(), 10);
        assert!(base_k12().apply(Operation::O4, 1).is_err());
    }

    #[test]
    fn line_round_trip() {
        let r = labelled_r();
        let line = r.to_line().unwrap();
        assert_eq!(LabelledTree::parse_line(&line).unwrap(), r);
        assert!(LabelledTree::parse_line("Bg ABX").is_err());
        assert!(LabelledTree::parse_line("Bg").is_err());
    }

    #[test]
    fn generation_orders() {
        let small = generate_family(3).unwrap();
        assert_eq!(small.len(), 1);
        let orders: alloc::collections::BTreeSet<usize> = generate_family(8).unwrap().iter().map(|t| t.order()).collect();
        assert_eq!(orders.into_iter().collect::<Vec<_>>(), vec![3, 6, 7]);
        let ten = generate_family(10).unwrap();
        assert!(ten.iter().any(|t| are_isomorphic(t.tree(), &path_graph(9)).unwrap()));
        assert!(ten.iter().all(|t| t.order() != 8));
    }

    #[test]
    fn recognition_examples() {
        let s = Solver::default();
        let p6 = recognize(&s, &path_graph(6)).unwrap().unwrap();
        assert_eq!(p6.class(Status::B).to_vec(), vec![1, 4]);
        assert!(p6.class(Status::C).is_empty());
        assert!(recognize(&s, &path_graph(4)).unwrap().is_none());
        let r = recognize(&s, labelled_r().tree()).unwrap().unwrap();
        assert_eq!(r.class(Status::C).len(), 1);
        assert_eq!(recognize(&s, &path_graph(2)), Err(Error::OrderTooSmall { order: 2, min: 3 }));
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose(&path_graph(6)).unwrap().unwrap();
        assert_eq!(d.steps.len(), 1);
        assert_eq!(d.steps[0].op, Operation::O1);
        assert!(are_isomorphic(d.labelled.tree(), &path_graph(6)).unwrap());
        assert_eq!(d.input_statuses().iter().filter(|&&s| s == Status::B).count(), 2);

        let d = decompose(labelled_r().tree()).unwrap().unwrap();
        assert_eq!(d.steps, vec![BuildStep { op: Operation::O2, at: 1 }]);

        assert!(decompose(&path_graph(5)).unwrap().is_none());
        assert!(decompose(&path_graph(4)).unwrap().is_none());
    }

    #[test]
    fn decomposition_preserves_statuses() {
        let s = Solver::default();
        for t in generate_family(13).unwrap() {
            let d = decompose(t.tree()).unwrap().expect("family member decomposes");
            assert_eq!(d.input_statuses(), t.statuses());
            assert!(are_isomorphic(d.labelled.tree(), t.tree()).unwrap());
            assert_eq!(recognize(&s, t.tree()).unwrap().unwrap().statuses(), t.statuses());
        }
    }

    #[test]
    fn canonical_function_of_r() {
        let f = labelled_r().canonical_gamma_r_function().unwrap();
        assert_eq!(f.weight(), 4);
        assert!(f.ones().is_empty());
        let bad = LabelledTree::new(path_graph(3), vec![Status::B, Status::A, Status::B]).unwrap();
        assert!(bad.canonical_gamma_r_function().is_err());
    }
}

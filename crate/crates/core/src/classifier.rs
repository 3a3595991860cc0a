//! Vertex-removal classes and the Roman bondage number.
//!
//! A graph is in `R_UVR` when deleting any single vertex leaves γ_R
//! unchanged, and in `R_CVR` when every single deletion changes it. The
//! differential classes `∂_UVR` and `∂_CVR` are the same definitions with
//! ∂ in place of γ_R, computed through the separate differential scan.
//!
//! Note that `γ_R + ∂ = n` holds for every graph, so γ_R is unchanged by a
//! deletion exactly when ∂ drops by one. The literal ∂-classes therefore do
//! not coincide with the γ_R-classes; [`differential_drops_by_one`] gives the
//! ∂-side statement that does.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::solvers::Solver;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RemovalEffect {
    Decreased,
    Unchanged,
    Increased,
}

impl RemovalEffect {
    pub fn as_str(self) -> &'static str {
        match self {
            RemovalEffect::Decreased => "decreased",
            RemovalEffect::Unchanged => "unchanged",
            RemovalEffect::Increased => "increased",
        }
    }
}

/// Every invariant and class membership computed for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub order: usize,
    pub size: usize,
    pub gamma: usize,
    pub gamma_r: usize,
    pub differential: usize,
    pub is_roman: bool,
    pub in_r_uvr: bool,
    pub in_r_cvr: bool,
    pub in_d_uvr: bool,
    pub in_d_cvr: bool,
    pub is_urd: bool,
    /// `None` when the maximum degree is below 2.
    pub bondage: Option<usize>,
    pub per_vertex_effect: Vec<RemovalEffect>,
}

/// How deleting `v` changes γ_R. A decrease is always by exactly one; a
/// larger drop is reported as an error.
pub fn removal_effect(solver: &Solver, g: &Graph, v: usize) -> Result<RemovalEffect> {
    let before = solver.roman_domination_number(g)?;
    effect_against(solver, g, v, before)
}

fn effect_against(solver: &Solver, g: &Graph, v: usize, before: usize) -> Result<RemovalEffect> {
    let after = solver.roman_domination_number(&g.delete_vertex(v)?.graph)?;
    Ok(match after.cmp(&before) {
        core::cmp::Ordering::Less if before - after > 1 => {
            return Err(Error::RemovalDropTooLarge { vertex: v, before, after });
        }
        core::cmp::Ordering::Less => RemovalEffect::Decreased,
        core::cmp::Ordering::Equal => RemovalEffect::Unchanged,
        core::cmp::Ordering::Greater => RemovalEffect::Increased,
    })
}

/// The effect of deleting each vertex, in vertex order.
pub fn removal_effects(solver: &Solver, g: &Graph) -> Result<Vec<RemovalEffect>> {
    let before = solver.roman_domination_number(g)?;
    g.vertices().map(|v| effect_against(solver, g, v, before)).collect()
}

/// For each vertex, whether deleting it leaves ∂ unchanged.
pub fn differential_unchanged(solver: &Solver, g: &Graph) -> Result<Vec<bool>> {
    let before = solver.differential_value(g)?;
    g.vertices()
        .map(|v| Ok(solver.differential_value(&g.delete_vertex(v)?.graph)? == before))
        .collect()
}

/// For each vertex, whether deleting it lowers ∂ by exactly one, which by
/// `γ_R + ∂ = n` is the same event as γ_R staying unchanged.
pub fn differential_drops_by_one(solver: &Solver, g: &Graph) -> Result<Vec<bool>> {
    let before = solver.differential_value(g)?;
    g.vertices()
        .map(|v| Ok(solver.differential_value(&g.delete_vertex(v)?.graph)? + 1 == before))
        .collect()
}

pub fn in_class_r_uvr(solver: &Solver, g: &Graph) -> Result<bool> {
    Ok(removal_effects(solver, g)?.iter().all(|&e| e == RemovalEffect::Unchanged))
}

pub fn in_class_r_cvr(solver: &Solver, g: &Graph) -> Result<bool> {
    Ok(removal_effects(solver, g)?.iter().all(|&e| e != RemovalEffect::Unchanged))
}

pub fn in_class_d_uvr(solver: &Solver, g: &Graph) -> Result<bool> {
    Ok(differential_unchanged(solver, g)?.iter().all(|&same| same))
}

pub fn in_class_d_cvr(solver: &Solver, g: &Graph) -> Result<bool> {
    Ok(differential_unchanged(solver, g)?.iter().all(|&same| !same))
}

/// γ_R(G) = 2γ(G).
pub fn is_roman(solver: &Solver, g: &Graph) -> Result<bool> {
    Ok(solver.roman_domination_number(g)? == 2 * solver.domination_number(g)?)
}

/// Exactly one γ_R-function.
pub fn is_urd(solver: &Solver, g: &Graph) -> Result<bool> {
    Ok(solver.gamma_r_functions(g)?.len() == 1)
}

/// No γ_R-function assigns 1 to `v`.
pub fn vertex_never_one(solver: &Solver, g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    Ok(solver.gamma_r_functions(g)?.iter().all(|f| !f.ones().contains(v)))
}

/// The bound used when no cap is given: the smaller of
/// `deg(x) + deg(y) + deg(z) - |N(x) ∩ N(y)| - 3` over all paths `x, y, z`
/// and `deg(v)` over vertices that no γ_R-function labels 1.
pub fn default_bondage_cap(solver: &Solver, g: &Graph) -> Result<usize> {
    let mut cap = usize::MAX;
    for y in g.vertices() {
        for x in g.neighbors(y) {
            for z in g.neighbors(y).iter().filter(|&z| z != x) {
                let common = g.neighbors(x).intersection_len(g.neighbors(y));
                let bound = (g.degree(x) + g.degree(y) + g.degree(z)).saturating_sub(common + 3);
                cap = cap.min(bound);
            }
        }
    }
    let functions = solver.gamma_r_functions(g)?;
    let mut ever_one = VertexSet::new(g.order());
    for f in &functions {
        ever_one.union_with(f.ones());
    }
    for v in g.vertices().filter(|&v| !ever_one.contains(v)) {
        cap = cap.min(g.degree(v));
    }
    Ok(cap)
}

/// `b_R(G)`: the fewest edges whose deletion raises γ_R.
///
/// Edge sets are tried by increasing size, lexicographically within a size.
/// Since deleting edges never lowers γ_R, the first hit is the answer. Not
/// finding one within `cap` (default: [`default_bondage_cap`]) contradicts a
/// known upper bound and is returned as [`Error::BondageCapExhausted`].
pub fn roman_bondage_number(solver: &Solver, g: &Graph, cap: Option<usize>) -> Result<usize> {
    if g.max_degree() < 2 {
        return Err(Error::MaxDegreeBelowTwo);
    }
    let base = solver.roman_domination_number(g)?;
    let cap = match cap {
        Some(c) => c,
        None => default_bondage_cap(solver, g)?,
    };
    let edges = g.edges();
    let mut chosen = Vec::new();
    for k in 1..=cap.min(edges.len()) {
        if bondage_search(solver, g, &edges, base, k, 0, &mut chosen)? {
            return Ok(k);
        }
    }
    Err(Error::BondageCapExhausted { cap })
}

fn bondage_search(
    solver: &Solver,
    g: &Graph,
    edges: &[Edge],
    base: usize,
    k: usize,
    start: usize,
    chosen: &mut Vec<Edge>,
) -> Result<bool> {
    if chosen.len() == k {
        return Ok(solver.roman_domination_number(&g.delete_edges(chosen)?)? > base);
    }
    let need = k - chosen.len();
    for i in start..=edges.len() - need {
        chosen.push(edges[i]);
        let hit = bondage_search(solver, g, edges, base, k, i + 1, chosen)?;
        chosen.pop();
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Builds the full report. Bondage is skipped (left `None`) when
/// `with_bondage` is false or the maximum degree is below 2.
pub fn classify(solver: &Solver, g: &Graph, with_bondage: bool) -> Result<ClassReport> {
    let gamma = solver.domination_number(g)?;
    let gamma_r = solver.roman_domination_number(g)?;
    let differential = solver.differential_value(g)?;
    let effects = removal_effects(solver, g)?;
    let d_same = differential_unchanged(solver, g)?;
    let bondage = if with_bondage && g.max_degree() >= 2 { Some(roman_bondage_number(solver, g, None)?) } else { None };
    Ok(ClassReport {
        order: g.order(),
        size: g.size(),
        gamma,
        gamma_r,
        differential,
        is_roman: gamma_r == 2 * gamma,
        in_r_uvr: effects.iter().all(|&e| e == RemovalEffect::Unchanged),
        in_r_cvr: effects.iter().all(|&e| e != RemovalEffect::Unchanged),
        in_d_uvr: d_same.iter().all(|&s| s),
        in_d_cvr: d_same.iter().all(|&s| !s),
        is_urd: solver.gamma_r_functions(g)?.len() == 1,
        bondage,
        per_vertex_effect: effects,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cube_graph, cycle_graph, path_graph, star};

    #[test]
    fn removal_examples() {
        let s = Solver::default();
        assert_eq!(removal_effect(&s, &path_graph(4), 3).unwrap(), RemovalEffect::Decreased);
        for v in 0..6 {
            assert_eq!(removal_effect(&s, &path_graph(6), v).unwrap(), RemovalEffect::Unchanged);
        }
        assert_eq!(removal_effect(&s, &star(4).unwrap(), 0).unwrap(), RemovalEffect::Increased);
    }

    #[test]
    fn class_examples() {
        let s = Solver::default();
        assert!(in_class_r_uvr(&s, &complete_bipartite(4, 4)).unwrap());
        assert!(in_class_r_uvr(&s, &cube_graph()).unwrap());
        assert!(!in_class_r_uvr(&s, &path_graph(4)).unwrap());
        // Since γ_R + ∂ = n, an unchanged γ_R after deleting a vertex means ∂ drops by one.
        assert!(!in_class_d_uvr(&s, &cube_graph()).unwrap());
        assert!(differential_drops_by_one(&s, &cube_graph()).unwrap().iter().all(|&d| d));
    }

    #[test]
    fn roman_and_urd() {
        let s = Solver::default();
        assert!(is_roman(&s, &path_graph(6)).unwrap());
        assert!(!is_roman(&s, &path_graph(4)).unwrap());
        assert!(!is_roman(&s, &Graph::empty(1)).unwrap());
        assert!(is_urd(&s, &path_graph(3)).unwrap());
        assert!(is_urd(&s, &path_graph(6)).unwrap());
        assert!(!is_urd(&s, &cycle_graph(3).unwrap()).unwrap());
    }

    #[test]
    fn never_one() {
        let s = Solver::default();
        assert!(vertex_never_one(&s, &path_graph(3), 1).unwrap());
        assert!(!vertex_never_one(&s, &path_graph(4), 3).unwrap());
        let c6 = cycle_graph(6).unwrap();
        assert!((0..6).all(|v| vertex_never_one(&s, &c6, v).unwrap()));
    }

    /// Oracle: try every edge subset in order of size.
    fn brute_bondage(g: &Graph) -> usize {
        let s = Solver::default();
        let base = s.roman_domination_number(g).unwrap();
        let edges = g.edges();
        let m = edges.len();
        (1u32..1 << m)
            .filter(|mask| {
                let chosen: Vec<Edge> = (0..m).filter(|i| mask & (1 << i) != 0).map(|i| edges[i]).collect();
                s.roman_domination_number(&g.delete_edges(&chosen).unwrap()).unwrap() > base
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn bondage_examples() {
        let s = Solver::default();
        assert_eq!(roman_bondage_number(&s, &path_graph(6), None).unwrap(), 1);
        assert_eq!(roman_bondage_number(&s, &cycle_graph(3).unwrap(), None).unwrap(), 2);
        let p4 = roman_bondage_number(&s, &path_graph(4), None).unwrap();
        assert_eq!(p4, brute_bondage(&path_graph(4)));
        assert!(p4 <= 3);
        assert_eq!(roman_bondage_number(&s, &cycle_graph(6).unwrap(), None).unwrap(), brute_bondage(&cycle_graph(6).unwrap()));
        assert_eq!(roman_bondage_number(&s, &path_graph(2), None), Err(Error::MaxDegreeBelowTwo));
    }

    #[test]
    fn tiny_cap_is_reported() {
        let s = Solver::default();
        assert_eq!(
            roman_bondage_number(&s, &cycle_graph(3).unwrap(), Some(1)),
            Err(Error::BondageCapExhausted { cap: 1 })
        );
    }

    #[test]
    fn report_fields() {
        let s = Solver::default();
        let r = classify(&s, &path_graph(6), true).unwrap();
        assert!(r.in_r_uvr && r.is_roman && r.is_urd);
        assert!(!r.in_d_uvr);
        assert_eq!(r.bondage, Some(1));
        assert_eq!((r.gamma, r.gamma_r, r.differential), (2, 4, 2));
        let r = classify(&s, &path_graph(4), true).unwrap();
        assert!(!r.in_r_uvr);
    }
}

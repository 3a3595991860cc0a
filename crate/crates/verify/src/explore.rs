//! Exploration helpers for questions the checks do not settle.

use std::collections::BTreeMap;

use serde::Serialize;

use roman_core::classifier::in_class_r_uvr;
use roman_core::enumeration::{connected_graphs, free_trees, unicyclic_graphs, CONNECTED_GRAPH_LIMIT, FREE_TREE_LIMIT, UNICYCLIC_LIMIT};
use roman_core::{graph6, Graph, Solver};

use crate::error::{Result, VerifyError};

/// Every unicyclic `R_UVR` graph of order `n`.
pub fn unicyclic_members(solver: &Solver, n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for g in unicyclic_graphs(n)? {
        if in_class_r_uvr(solver, &g)? {
            out.push(g);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeRow {
    pub gamma_r: usize,
    pub max_size: usize,
    pub members: usize,
    pub example: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeTable {
    pub n: usize,
    /// `true` when every connected graph of order `n` was examined; above
    /// that only trees and unicyclic graphs are, so the maxima are lower
    /// bounds.
    pub exhaustive: bool,
    pub rows: Vec<SizeRow>,
}

/// Largest size of an `R_UVR` graph of order `n` for each value of γ_R
/// (restricted to `k` when given).
pub fn sizes(solver: &Solver, n: usize, k: Option<usize>) -> Result<SizeTable> {
    let (exhaustive, pool): (bool, Vec<Graph>) = if n <= CONNECTED_GRAPH_LIMIT {
        (true, connected_graphs(n)?.collect())
    } else if n <= FREE_TREE_LIMIT {
        let mut pool: Vec<Graph> = free_trees(n)?.collect();
        if n <= UNICYCLIC_LIMIT {
            pool.extend(unicyclic_graphs(n)?);
        }
        (false, pool)
    } else {
        return Err(VerifyError::Limit(format!("n = {n}, allowed 1..={FREE_TREE_LIMIT}")));
    };
    let mut rows: BTreeMap<usize, SizeRow> = BTreeMap::new();
    for g in pool {
        if !in_class_r_uvr(solver, &g)? {
            continue;
        }
        let gr = solver.roman_domination_number(&g)?;
        if k.is_some_and(|k| k != gr) {
            continue;
        }
        let row = rows.entry(gr).or_insert_with(|| SizeRow { gamma_r: gr, max_size: 0, members: 0, example: String::new() });
        row.members += 1;
        if g.size() > row.max_size || row.example.is_empty() {
            row.max_size = g.size();
            row.example = graph6::write(&g)?;
        }
    }
    Ok(SizeTable { n, exhaustive, rows: rows.into_values().collect() })
}

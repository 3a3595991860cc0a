//! Running checks over the generated corpus.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use roman_core::canon::tree_canonical_form;
use roman_core::enumeration::{connected_graphs, free_trees, unicyclic_graphs, CONNECTED_GRAPH_LIMIT, FREE_TREE_LIMIT, UNICYCLIC_LIMIT};
use roman_core::labelled::{generate_family, LabelledTree};
use roman_core::{graph6, Graph, Solver};

use crate::checks::{Check, Ctx, Domain, Instance, Verdict, REGISTRY};
use crate::error::{Result, VerifyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub trees_max_n: usize,
    pub graphs_max_n: usize,
    pub unicyclic_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { trees_max_n: 12, graphs_max_n: 6, unicyclic_n: 8 }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str, v: usize, lo: usize, hi: usize| {
            if (lo..=hi).contains(&v) {
                Ok(())
            } else {
                Err(VerifyError::Limit(format!("{what} = {v}, allowed {lo}..={hi}")))
            }
        };
        bad("trees_max_n", self.trees_max_n, 1, FREE_TREE_LIMIT)?;
        bad("graphs_max_n", self.graphs_max_n, 1, CONNECTED_GRAPH_LIMIT)?;
        bad("unicyclic_n", self.unicyclic_n, 3, UNICYCLIC_LIMIT)
    }
}

/// Every instance the checks draw from, built once per run.
pub struct Corpus {
    pub limits: Limits,
    pub graphs: Vec<Graph>,
    pub trees: Vec<Graph>,
    pub unicyclic: Vec<Graph>,
    pub family: Vec<LabelledTree>,
    family_keys: HashSet<Vec<u8>>,
}

impl Corpus {
    pub fn build(limits: Limits) -> Result<Corpus> {
        limits.validate()?;
        let mut graphs = Vec::new();
        for n in 1..=limits.graphs_max_n {
            graphs.extend(connected_graphs(n)?);
        }
        let mut trees = Vec::new();
        for n in 1..=limits.trees_max_n {
            trees.extend(free_trees(n)?);
        }
        let unicyclic = unicyclic_graphs(limits.unicyclic_n)?.collect();
        let family = generate_family(limits.trees_max_n)?;
        let family_keys = family.iter().map(|t| tree_canonical_form(t.tree())).collect::<roman_core::Result<_>>()?;
        Ok(Corpus { limits, graphs, trees, unicyclic, family, family_keys })
    }

    pub fn is_family_member(&self, t: &Graph) -> roman_core::Result<bool> {
        Ok(self.family_keys.contains(&tree_canonical_form(t)?))
    }

    fn instances(&self, domain: &Domain) -> Vec<Instance> {
        let plain = |gs: &[Graph]| gs.iter().cloned().map(Instance::graph).collect();
        match domain {
            Domain::Graphs => plain(&self.graphs),
            Domain::Trees => plain(&self.trees),
            Domain::Unicyclic => plain(&self.unicyclic),
            Domain::FamilyTrees => self
                .family
                .iter()
                .map(|t| Instance { graph: t.tree().clone(), labelled: Some(t.clone()), name: None })
                .collect(),
            Domain::Constructed(build) => build()
                .into_iter()
                .map(|(name, graph)| Instance { graph, labelled: None, name: (!name.is_empty()).then_some(name) })
                .collect(),
            Domain::Corpus => vec![Instance { graph: Graph::empty(0), labelled: None, name: Some("corpus".into()) }],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: &'static str,
    pub domain: &'static str,
    pub instance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<String>,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub micros: Option<u64>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub check: &'static str,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub limits: Limits,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fault_seed: Option<u64>,
    pub results: usize,
    pub passed: usize,
    pub failed: usize,
    /// In selection order.
    pub checks: Vec<Tally>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn tally(&self, id: &str) -> Option<&Tally> {
        self.summary.checks.iter().find(|t| t.check == id)
    }

    pub fn failures(&self, id: &str) -> impl Iterator<Item = &CheckResult> + '_ {
        let id = id.to_owned();
        self.results.iter().filter(move |r| r.check == id && !r.passed())
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub limits: Limits,
    pub fault_seed: Option<u64>,
    pub timings: bool,
}

/// Selects checks by id, or every check for `"all"`.
pub fn select(suite: &str) -> Result<Vec<&'static Check>> {
    if suite.eq_ignore_ascii_case("all") {
        return Ok(REGISTRY.iter().collect());
    }
    suite
        .split(',')
        .map(|id| crate::checks::find(id.trim()).ok_or_else(|| VerifyError::UnknownCheck(id.trim().to_owned())))
        .collect()
}

/// Evaluates each selected check on each instance of its domains. Results
/// come back in registry order, then domain order, then corpus order,
/// whatever the thread schedule.
pub fn run_suite(checks: &[&'static Check], options: &RunOptions) -> Result<Report> {
    let corpus = Corpus::build(options.limits)?;
    run_on(checks, &corpus, options)
}

pub fn run_on(checks: &[&'static Check], corpus: &Corpus, options: &RunOptions) -> Result<Report> {
    let solver = match options.fault_seed {
        Some(seed) => Solver::sweep().with_fault_injection(seed),
        None => Solver::sweep(),
    };
    let ctx = Ctx { solver, corpus };
    let mut jobs = Vec::new();
    for &check in checks {
        for domain in check.domains {
            for inst in corpus.instances(domain) {
                if matches!(domain, Domain::Corpus) || check.applies_to(inst.graph.order()) {
                    jobs.push((check, domain.name(), inst));
                }
            }
        }
    }
    let results: Vec<CheckResult> = jobs
        .par_iter()
        .map(|(check, domain, inst)| {
            let start = Instant::now();
            let verdict = check.evaluate(&ctx, inst);
            let micros = options.timings.then(|| start.elapsed().as_micros() as u64);
            let instance = match &inst.name {
                Some(name) => name.clone(),
                None => graph6::write(&inst.graph).unwrap_or_else(|e| format!("<{e}>")),
            };
            let (verdict, witness, note) = match verdict {
                Verdict::Pass { note } => ("pass", None, note),
                Verdict::Fail { witness } => ("fail", Some(witness), None),
            };
            CheckResult {
                check: check.id,
                domain,
                instance,
                status: inst.labelled.as_ref().map(LabelledTree::status_word),
                verdict,
                witness,
                note,
                micros,
            }
        })
        .collect();

    let mut tallies: Vec<Tally> = checks.iter().map(|c| Tally { check: c.id, passed: 0, failed: 0 }).collect();
    for r in &results {
        let t = tallies.iter_mut().find(|t| t.check == r.check).expect("selected check");
        if r.passed() {
            t.passed += 1;
        } else {
            t.failed += 1;
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    let summary = Summary {
        limits: corpus.limits,
        fault_seed: options.fault_seed,
        results: results.len(),
        passed: results.len() - failed,
        failed,
        checks: tallies,
    };
    Ok(Report { results, summary })
}

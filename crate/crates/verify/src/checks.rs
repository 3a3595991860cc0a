//! The check registry.
//!
//! Each check is a predicate over one instance of one or more domains. A
//! predicate returns [`Verdict::Fail`] with a witness when the statement is
//! violated; solver errors raised while evaluating it are failures too.

use std::collections::BTreeSet;

use roman_core::canon::{are_isomorphic, tree_canonical_form};
use roman_core::classifier::{self as cls, RemovalEffect};
use roman_core::enumeration::{connected_graphs, free_trees, unicyclic_graphs};
use roman_core::families::{complete_graph, disjoint_union, figure3_graph, join_graph, two_cliques_bridge};
use roman_core::labelled::{decompose, recognize, LabelledTree};
use roman_core::solvers::{tree_unique_gamma_structural, validate_rdf};
use roman_core::{Graph, RomanFunction, Solver, VertexSet};

use crate::suite::Corpus;

type CoreResult<T> = roman_core::Result<T>;

#[derive(Clone, Copy, Debug)]
pub enum Domain {
    /// Connected graphs of orders `1..=graphs_max_n`.
    Graphs,
    /// Free trees of orders `1..=trees_max_n`.
    Trees,
    /// Unicyclic graphs of order `unicyclic_n`.
    Unicyclic,
    /// Family members of order at most `trees_max_n`.
    FamilyTrees,
    /// A fixed list of named graphs supplied by the check.
    Constructed(fn() -> Vec<(String, Graph)>),
    /// A single evaluation over the whole corpus.
    Corpus,
}

impl Domain {
    pub fn name(&self) -> &'static str {
        match self {
            Domain::Graphs => "graphs",
            Domain::Trees => "trees",
            Domain::Unicyclic => "unicyclic",
            Domain::FamilyTrees => "family-trees",
            Domain::Constructed(_) => "constructed",
            Domain::Corpus => "corpus",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass { note: Option<String> },
    Fail { witness: String },
}

impl Verdict {
    fn pass() -> CoreResult<Verdict> {
        Ok(Verdict::Pass { note: None })
    }

    fn note(note: impl Into<String>) -> CoreResult<Verdict> {
        Ok(Verdict::Pass { note: Some(note.into()) })
    }

    fn fail(witness: impl Into<String>) -> CoreResult<Verdict> {
        Ok(Verdict::Fail { witness: witness.into() })
    }

    fn expect(ok: bool, witness: impl FnOnce() -> String) -> CoreResult<Verdict> {
        if ok {
            Verdict::pass()
        } else {
            Verdict::fail(witness())
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass { .. })
    }
}

/// One thing a check is evaluated on.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub labelled: Option<LabelledTree>,
    pub name: Option<String>,
}

impl Instance {
    pub fn graph(graph: Graph) -> Instance {
        Instance { graph, labelled: None, name: None }
    }
}

pub struct Ctx<'a> {
    pub solver: Solver,
    pub corpus: &'a Corpus,
}

pub struct Check {
    pub id: &'static str,
    pub statement: &'static str,
    pub domains: &'static [Domain],
    pub min_order: usize,
    pub max_order: usize,
    eval: fn(&Ctx, &Instance) -> CoreResult<Verdict>,
}

impl Check {
    pub fn evaluate(&self, ctx: &Ctx, inst: &Instance) -> Verdict {
        (self.eval)(ctx, inst).unwrap_or_else(|e| Verdict::Fail { witness: format!("error: {e}") })
    }

    pub fn applies_to(&self, order: usize) -> bool {
        (self.min_order..=self.max_order).contains(&order)
    }
}

const ANY: usize = usize::MAX;
const GRAPHS: &[Domain] = &[Domain::Graphs, Domain::Unicyclic];
const CLASS_GRAPHS: &[Domain] = &[Domain::Graphs, Domain::Unicyclic, Domain::Trees];
const TREES: &[Domain] = &[Domain::Trees];
const FAMILY: &[Domain] = &[Domain::FamilyTrees];
const CORPUS: &[Domain] = &[Domain::Corpus];

macro_rules! check {
    ($id:literal, $statement:literal, $domains:expr, $min:expr, $max:expr, $eval:expr) => {
        Check { id: $id, statement: $statement, domains: $domains, min_order: $min, max_order: $max, eval: $eval }
    };
}

pub static REGISTRY: &[Check] = &[
    check!("EQ1", "gamma <= gamma_R <= 2 gamma", GRAPHS, 1, ANY, eq1),
    check!(
        "LEM-ON",
        "in every gamma_R-function, components of <V1> have order at most 2 and no edge joins V1 and V2",
        GRAPHS, 1, ANY, lem_on
    ),
    check!(
        "LEM-MINUS",
        "gamma_R(G-v) < gamma_R(G) iff some gamma_R-function has f(v) = 1, and the drop is exactly 1",
        GRAPHS, 1, ANY, lem_minus
    ),
    check!("LEM-MINUSE", "gamma_R(G-e) >= gamma_R(G) for every edge e", GRAPHS, 1, ANY, lem_minuse),
    check!("THM-R", "G is Roman iff some gamma_R-function has V1 empty", GRAPHS, 1, ANY, thm_r),
    check!(
        "THM-UN",
        "for a tree of order >= 3, a gamma-set D is the unique one iff every vertex of D has two nonadjacent D-private neighbours",
        TREES, 3, ANY, thm_un
    ),
    check!("THM-DIFF-I", "gamma_R(G) + differential(G) = |V(G)|", CLASS_GRAPHS, 1, ANY, thm_diff_i),
    check!(
        "THM-DIFF-II",
        "an RDF is a gamma_R-function iff V2 is a differential set and V0 = B(V2)",
        GRAPHS, 1, 8, thm_diff_ii
    ),
    check!(
        "OBS-DISC",
        "G is in R_UVR iff every component is",
        &[Domain::Constructed(disjoint_pairs)], 1, ANY, obs_disc
    ),
    check!(
        "OBS-PN3",
        "in R_UVR every gamma_R-function has V1 empty, V2 a gamma-set with |pn[v,V2]| >= 3, and every gamma-set D gives (V-D; 0; D)",
        CLASS_GRAPHS, 3, ANY, obs_pn3
    ),
    check!(
        "REM-E1",
        "two K_r joined by an edge, r in {4,5,6}: gamma_R = 4, in R_UVR, and private neighbourhoods of size r-1 or r",
        &[Domain::Constructed(two_clique_family)], 1, ANY, rem_e1
    ),
    check!(
        "PROP-3V2",
        "connected G in R_UVR: 3 gamma_R <= 2n; equality iff V2 is an efficient dominating set of degree-2 vertices",
        &[Domain::Graphs, Domain::Trees], 3, ANY, prop_3v2
    ),
    check!(
        "PROP-02",
        "if no gamma_R-function labels v with 1 then gamma_R(G - E_v) > gamma_R(G)",
        GRAPHS, 1, ANY, prop_02
    ),
    check!("COR-UVRBON", "G in R_UVR with max degree >= 2 has b_R(G) <= min degree", CLASS_GRAPHS, 3, ANY, cor_uvrbon),
    check!("COR-UVRTREE", "a tree in R_UVR has b_R = 1", TREES, 3, ANY, cor_uvrtree),
    check!("OBS-SABC", "family members satisfy the four status laws", FAMILY, 3, ANY, obs_sabc),
    check!("COR-UNILAB", "a family member's labelling is determined by its tree", FAMILY, 3, ANY, cor_unilab),
    check!(
        "OBS-EQUI",
        "R_UVR = differential-UVR and R_CVR = differential-CVR (differential unchanged by every / no deletion)",
        CLASS_GRAPHS, 3, ANY, obs_equi
    ),
    check!(
        "OBS-EQUI-SHIFT",
        "G in R_UVR iff every deletion lowers the differential by exactly 1; G in R_CVR iff none does",
        CLASS_GRAPHS, 3, ANY, obs_equi_shift
    ),
    check!(
        "THM-MAIN",
        "for trees of order >= 3: family membership, R_UVR, the unique-function criterion, the unique-gamma-set criterion and differential-UVR agree",
        TREES, 3, ANY, thm_main
    ),
    check!(
        "RECOG-DECOMP",
        "solver-backed recognition and gadget decomposition agree, and decompositions replay to the input tree",
        TREES, 3, ANY, recog_decomp
    ),
    check!("COR-SB", "(S_A + S_C; 0; S_B) is the unique gamma_R-function of a family member", FAMILY, 3, ANY, cor_sb),
    check!(
        "COR-VDEL",
        "for a family member, x in V2 and distinct u, v in pn[x,V2]: gamma_R(T-{u,v}) = gamma_R(T) - 1",
        FAMILY, 3, ANY, cor_vdel
    ),
    check!(
        "COR-EDEL",
        "for a family member and an edge xy inside V0, T - xy and all its components are in R_UVR",
        FAMILY, 3, ANY, cor_edel
    ),
    check!("PROP-T1", "a family member has 3 gamma_R = 2n iff it has no C vertex", FAMILY, 3, ANY, prop_t1),
    check!("MINEDGE-I", "family members exist at orders 3, 6, 7 and every order >= 9, and no other", CORPUS, 0, ANY, minedge_i),
    check!(
        "MINEDGE-II",
        "among connected graphs of order 4 and 5, the unique R_UVR member of least size is K_2 join the empty graph on n-2 vertices",
        CORPUS, 0, ANY, minedge_ii
    ),
    check!(
        "MINEDGE-III",
        "the only 8-vertex unicyclic R_UVR graph is the 4-cycle with two leaves on each of two opposite vertices; no 8-vertex tree is in R_UVR",
        CORPUS, 0, ANY, minedge_iii
    ),
];

pub fn find(id: &str) -> Option<&'static Check> {
    REGISTRY.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

fn fmt_set(s: &VertexSet) -> String {
    format!("{s:?}")
}

fn fmt_fn(f: &RomanFunction) -> String {
    f.labels().iter().map(|l| char::from(b'0' + l)).collect()
}

fn eq1(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let gamma = ctx.solver.domination_number(g)?;
    let gr = ctx.solver.roman_domination_number(g)?;
    Verdict::expect(gamma <= gr && gr <= 2 * gamma, || format!("gamma={gamma} gamma_R={gr}"))
}

fn lem_on(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let mut singletons = 0;
    for f in ctx.solver.gamma_r_functions(g)? {
        for v in f.ones() {
            if !g.neighbors(v).is_disjoint(f.twos()) {
                return Verdict::fail(format!("f={} edge from V1 vertex {v} to V2", fmt_fn(&f)));
            }
        }
        let ones = f.ones().to_vec();
        let sub = g.induced_subgraph(&ones);
        for c in sub.connected_components() {
            match c.graph.order() {
                1 => singletons += 1,
                2 => {}
                k => return Verdict::fail(format!("f={} component of <V1> has order {k}", fmt_fn(&f))),
            }
        }
    }
    if singletons > 0 {
        Verdict::note(format!("{singletons} singleton component(s) of <V1>"))
    } else {
        Verdict::pass()
    }
}

fn lem_minus(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let effects = cls::removal_effects(&ctx.solver, g)?;
    let funcs = ctx.solver.gamma_r_functions(g)?;
    for v in g.vertices() {
        let some_one = funcs.iter().any(|f| f.label(v) == 1);
        if (effects[v] == RemovalEffect::Decreased) != some_one {
            return Verdict::fail(format!("v={v} effect={} labelled-one={some_one}", effects[v].as_str()));
        }
    }
    Verdict::pass()
}

fn lem_minuse(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let gr = ctx.solver.roman_domination_number(g)?;
    for e in g.edges() {
        let after = ctx.solver.roman_domination_number(&g.delete_edges(&[e])?)?;
        if after < gr {
            return Verdict::fail(format!("e={e} gamma_R {gr} -> {after}"));
        }
    }
    Verdict::note(format!("all {} edges", g.size()))
}

fn thm_r(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let roman = cls::is_roman(&ctx.solver, g)?;
    let v1_empty = ctx.solver.gamma_r_functions(g)?.iter().any(|f| f.ones().is_empty());
    Verdict::expect(roman == v1_empty, || format!("roman={roman} function-with-empty-V1={v1_empty}"))
}

fn thm_un(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let t = &inst.graph;
    let summary = ctx.solver.minimum_dominating_sets(t)?;
    for d in &summary.all_min_sets {
        let structural = tree_unique_gamma_structural(t, d)?;
        if structural != summary.unique {
            return Verdict::fail(format!("D={} structural={structural} unique={}", fmt_set(d), summary.unique));
        }
    }
    Verdict::pass()
}

fn thm_diff_i(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let gr = ctx.solver.roman_domination_number(g)?;
    let d = ctx.solver.differential_value(g)?;
    Verdict::expect(gr + d == g.order(), || format!("gamma_R={gr} differential={d} n={}", g.order()))
}

fn thm_diff_ii(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let funcs = ctx.solver.gamma_r_functions(g)?;
    let dsets: BTreeSet<VertexSet> = ctx.solver.differential_sets(g)?.into_iter().collect();
    for f in &funcs {
        if !dsets.contains(f.twos()) || *f.zeros() != g.boundary(f.twos()) {
            return Verdict::fail(format!("gamma_R-function {} fails the differential-set form", fmt_fn(f)));
        }
    }
    for s in &dsets {
        let f = RomanFunction::from_twos(g, s);
        if !funcs.contains(&f) {
            return Verdict::fail(format!("differential set {} does not give a gamma_R-function", fmt_set(s)));
        }
    }
    Verdict::pass()
}

fn disjoint_pairs() -> Vec<(String, Graph)> {
    let small: Vec<Graph> = (1..=4).flat_map(|n| connected_graphs(n).expect("order in range")).collect();
    let mut out = Vec::new();
    for (i, g) in small.iter().enumerate() {
        for h in &small[i..] {
            out.push((String::new(), disjoint_union(g, h)));
        }
    }
    out
}

fn obs_disc(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let whole = cls::in_class_r_uvr(&ctx.solver, g)?;
    let mut parts = true;
    for c in g.connected_components() {
        parts &= cls::in_class_r_uvr(&ctx.solver, &c.graph)?;
    }
    Verdict::expect(whole == parts, || format!("graph={whole} components={parts}"))
}

fn obs_pn3(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let s = &ctx.solver;
    if !cls::in_class_r_uvr(s, g)? {
        return Verdict::note("not in R_UVR");
    }
    if !cls::is_roman(s, g)? {
        return Verdict::fail("not Roman");
    }
    let summary = s.minimum_dominating_sets(g)?;
    let gr = s.roman_domination_number(g)?;
    for f in s.gamma_r_functions(g)? {
        if !f.ones().is_empty() {
            return Verdict::fail(format!("f={} has V1 nonempty", fmt_fn(&f)));
        }
        if f.twos().len() != summary.gamma || !g.is_dominating(f.twos()) {
            return Verdict::fail(format!("f={} V2 is not a gamma-set", fmt_fn(&f)));
        }
        for v in f.twos() {
            let pn = g.private_neighbors(v, f.twos())?;
            if pn.len() < 3 {
                return Verdict::fail(format!("f={} |pn[{v},V2]|={}", fmt_fn(&f), pn.len()));
            }
        }
    }
    for d in &summary.all_min_sets {
        let h = RomanFunction::from_twos(g, d);
        if !h.ones().is_empty() || h.weight() != gr {
            return Verdict::fail(format!("gamma-set {} gives weight {}", fmt_set(d), h.weight()));
        }
    }
    Verdict::pass()
}

fn two_clique_family() -> Vec<(String, Graph)> {
    (4..=6).map(|r| (format!("two-cliques-{r}"), two_cliques_bridge(r).expect("r >= 4"))).collect()
}

fn rem_e1(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let r = g.order() / 2;
    let gr = ctx.solver.roman_domination_number(g)?;
    if gr != 4 {
        return Verdict::fail(format!("gamma_R={gr}"));
    }
    if !cls::in_class_r_uvr(&ctx.solver, g)? {
        return Verdict::fail("not in R_UVR");
    }
    for x1 in 0..r {
        for x2 in r..2 * r {
            let twos = VertexSet::from_vertices(g.order(), [x1, x2]);
            let f = RomanFunction::from_twos(g, &twos);
            if validate_rdf(g, &f)?.is_some() || f.weight() != 4 {
                return Verdict::fail(format!("V2={} is not a gamma_R-function", fmt_set(&twos)));
            }
            for x in [x1, x2] {
                let k = g.private_neighbors(x, &twos)?.len();
                if k != r - 1 && k != r {
                    return Verdict::fail(format!("|pn[{x},V2]|={k} with V2={}", fmt_set(&twos)));
                }
            }
        }
    }
    Verdict::pass()
}

fn efficient_degree_two(g: &Graph, d: &VertexSet, eds: &[VertexSet]) -> bool {
    eds.contains(d) && d.iter().all(|v| g.degree(v) == 2)
}

fn prop_3v2(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let s = &ctx.solver;
    if !cls::in_class_r_uvr(s, g)? {
        return Verdict::note("not in R_UVR");
    }
    let (n, gr) = (g.order(), s.roman_domination_number(g)?);
    if 3 * gr > 2 * n {
        return Verdict::fail(format!("gamma_R={gr} > 2n/3 with n={n}"));
    }
    let eds = s.efficient_dominating_sets(g)?;
    let equal = 3 * gr == 2 * n;
    if equal {
        for f in s.gamma_r_functions(g)? {
            if !efficient_degree_two(g, f.twos(), &eds) {
                return Verdict::fail(format!("equality but V2={} is not an efficient set of degree-2 vertices", fmt_set(f.twos())));
            }
        }
    }
    if let Some(d) = eds.iter().find(|d| d.iter().all(|v| g.degree(v) == 2)) {
        if !equal {
            return Verdict::fail(format!("efficient set {} of degree-2 vertices but gamma_R={gr}, n={n}", fmt_set(d)));
        }
    }
    let mut notes = Vec::new();
    if equal {
        notes.push("equality instance".to_owned());
    }
    if g.min_degree() >= 3 {
        notes.push(format!("min degree >= 3, strict bound holds: {}", 3 * gr < 2 * n));
    }
    if notes.is_empty() {
        Verdict::pass()
    } else {
        Verdict::note(notes.join("; "))
    }
}

fn prop_02(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let gr = ctx.solver.roman_domination_number(g)?;
    for v in g.vertices() {
        if !cls::vertex_never_one(&ctx.solver, g, v)? {
            continue;
        }
        let after = ctx.solver.roman_domination_number(&g.isolate_vertex(v)?)?;
        if after <= gr {
            return Verdict::fail(format!("v={v} gamma_R(G-E_v)={after} gamma_R(G)={gr}"));
        }
    }
    Verdict::pass()
}

fn cor_uvrbon(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    if g.max_degree() < 2 || !cls::in_class_r_uvr(&ctx.solver, g)? {
        return Verdict::note("not applicable");
    }
    let b = cls::roman_bondage_number(&ctx.solver, g, None)?;
    Verdict::expect(b <= g.min_degree(), || format!("b_R={b} min degree={}", g.min_degree()))
}

fn cor_uvrtree(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let t = &inst.graph;
    if !cls::in_class_r_uvr(&ctx.solver, t)? {
        return Verdict::note("not in R_UVR");
    }
    let b = cls::roman_bondage_number(&ctx.solver, t, None)?;
    Verdict::expect(b == 1, || format!("b_R={b}"))
}

fn labelled(inst: &Instance) -> &LabelledTree {
    inst.labelled.as_ref().expect("family instances carry their labelling")
}

fn obs_sabc(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let laws = labelled(inst).status_laws(&ctx.solver)?;
    Verdict::expect(laws.all(), || format!("{laws:?}"))
}

fn cor_unilab(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let lt = labelled(inst);
    match recognize(&ctx.solver, lt.tree())? {
        Some(r) if r.statuses() == lt.statuses() => Verdict::pass(),
        Some(r) => Verdict::fail(format!("generated {} recognised {}", lt.status_word(), r.status_word())),
        None => Verdict::fail("not recognised"),
    }
}

fn obs_equi(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let s = &ctx.solver;
    let (ru, rc) = (cls::in_class_r_uvr(s, g)?, cls::in_class_r_cvr(s, g)?);
    let (du, dc) = (cls::in_class_d_uvr(s, g)?, cls::in_class_d_cvr(s, g)?);
    Verdict::expect(ru == du && rc == dc, || format!("R_UVR={ru} dUVR={du} R_CVR={rc} dCVR={dc}"))
}

fn obs_equi_shift(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let g = &inst.graph;
    let s = &ctx.solver;
    let (ru, rc) = (cls::in_class_r_uvr(s, g)?, cls::in_class_r_cvr(s, g)?);
    let drops = cls::differential_drops_by_one(s, g)?;
    let (all, none) = (drops.iter().all(|&d| d), !drops.iter().any(|&d| d));
    Verdict::expect(ru == all && rc == none, || format!("R_UVR={ru} all-drop={all} R_CVR={rc} none-drop={none}"))
}

/// The unique γ_R-function has V1 empty, V2 independent and `|pn[v,V2]| = 3`.
fn unique_function_criterion(s: &Solver, t: &Graph) -> CoreResult<bool> {
    let funcs = s.gamma_r_functions(t)?;
    let [f] = funcs.as_slice() else { return Ok(false) };
    if !f.ones().is_empty() || !t.is_independent(f.twos()) {
        return Ok(false);
    }
    for v in f.twos() {
        if t.private_neighbors(v, f.twos())?.len() != 3 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn thm_main(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let t = &inst.graph;
    let s = &ctx.solver;
    let member = ctx.corpus.is_family_member(t)?;
    let r_uvr = cls::in_class_r_uvr(s, t)?;
    let unique_fn = unique_function_criterion(s, t)?;
    let gamma_set = recognize(s, t)?.is_some();
    let d_uvr = cls::in_class_d_uvr(s, t)?;
    let all = [member, r_uvr, unique_fn, gamma_set, d_uvr];
    Verdict::expect(all.iter().all(|&b| b == member), || {
        format!("member={member} R_UVR={r_uvr} unique-function={unique_fn} unique-gamma-set={gamma_set} dUVR={d_uvr}")
    })
}

fn recog_decomp(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let t = &inst.graph;
    match (recognize(&ctx.solver, t)?, decompose(t)?) {
        (None, None) => Verdict::pass(),
        (Some(r), Some(d)) => {
            if !are_isomorphic(d.labelled.tree(), t)? {
                return Verdict::fail("replayed script is not isomorphic to the input");
            }
            let pulled: String = d.input_statuses().iter().map(|s| s.as_char()).collect();
            Verdict::expect(pulled == r.status_word(), || format!("recognised {} decomposed {pulled}", r.status_word()))
        }
        (r, d) => Verdict::fail(format!("recognised={} decomposed={}", r.is_some(), d.is_some())),
    }
}

fn cor_sb(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let lt = labelled(inst);
    let f = lt.canonical_gamma_r_function()?;
    let funcs = ctx.solver.gamma_r_functions(lt.tree())?;
    Verdict::expect(funcs == [f.clone()], || {
        format!("f_T={} gamma_R-functions={:?}", fmt_fn(&f), funcs.iter().map(fmt_fn).collect::<Vec<_>>())
    })
}

fn cor_vdel(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let lt = labelled(inst);
    let t = lt.tree();
    let f = lt.canonical_gamma_r_function()?;
    let gr = ctx.solver.roman_domination_number(t)?;
    for x in f.twos() {
        let pn = t.private_neighbors(x, f.twos())?.to_vec();
        for (i, &u) in pn.iter().enumerate() {
            for &v in &pn[i + 1..] {
                let rest = t.delete_vertices(&VertexSet::from_vertices(t.order(), [u, v]));
                let after = ctx.solver.roman_domination_number(&rest.graph)?;
                if after + 1 != gr {
                    return Verdict::fail(format!("x={x} u={u} v={v} gamma_R {gr} -> {after}"));
                }
            }
        }
    }
    Verdict::pass()
}

fn cor_edel(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let lt = labelled(inst);
    let t = lt.tree();
    let f = lt.canonical_gamma_r_function()?;
    for e in t.edges() {
        let (x, y) = e.endpoints();
        if f.label(x) != 0 || f.label(y) != 0 {
            continue;
        }
        let h = t.delete_edges(&[e])?;
        if !cls::in_class_r_uvr(&ctx.solver, &h)? {
            return Verdict::fail(format!("T-{e} not in R_UVR"));
        }
        for c in h.connected_components() {
            if !cls::in_class_r_uvr(&ctx.solver, &c.graph)? {
                return Verdict::fail(format!("component of T-{e} with vertices {:?} not in R_UVR", c.original_ids));
            }
        }
    }
    Verdict::pass()
}

fn prop_t1(ctx: &Ctx, inst: &Instance) -> CoreResult<Verdict> {
    let lt = labelled(inst);
    let gr = ctx.solver.roman_domination_number(lt.tree())?;
    let tight = 3 * gr == 2 * lt.order();
    Verdict::expect(tight == lt.in_t1(), || format!("3 gamma_R = 2n is {tight}, no C vertex is {}", lt.in_t1()))
}

/// Orders `{3, 6, 7} ∪ {9, 10, ...}` up to `max`.
pub fn expected_family_orders(max: usize) -> BTreeSet<usize> {
    (3..=max).filter(|&n| n == 3 || n == 6 || n == 7 || n >= 9).collect()
}

fn minedge_i(ctx: &Ctx, _: &Instance) -> CoreResult<Verdict> {
    let max = ctx.corpus.limits.trees_max_n;
    let found: BTreeSet<usize> = ctx.corpus.family.iter().map(LabelledTree::order).collect();
    let want = expected_family_orders(max);
    Verdict::expect(found == want, || format!("orders {found:?}, expected {want:?}"))
}

fn minedge_ii(ctx: &Ctx, _: &Instance) -> CoreResult<Verdict> {
    let top = ctx.corpus.limits.graphs_max_n.min(5);
    if top < 4 {
        return Verdict::note("orders 4 and 5 are above graphs_max_n");
    }
    for n in 4..=top {
        let mut members = Vec::new();
        for g in connected_graphs(n)? {
            if cls::in_class_r_uvr(&ctx.solver, &g)? {
                members.push(g);
            }
        }
        let Some(least) = members.iter().map(Graph::size).min() else {
            return Verdict::fail(format!("no R_UVR graph of order {n}"));
        };
        let smallest: Vec<&Graph> = members.iter().filter(|g| g.size() == least).collect();
        let target = join_graph(&complete_graph(2), &Graph::empty(n - 2));
        if smallest.len() != 1 || least != 2 * n - 3 || !are_isomorphic(smallest[0], &target)? {
            return Verdict::fail(format!("order {n}: {} least-size members with {least} edges", smallest.len()));
        }
    }
    Verdict::note(format!("orders 4..={top}"))
}

fn minedge_iii(ctx: &Ctx, _: &Instance) -> CoreResult<Verdict> {
    let mut members = Vec::new();
    for g in unicyclic_graphs(8)? {
        if cls::in_class_r_uvr(&ctx.solver, &g)? {
            members.push(g);
        }
    }
    if members.len() != 1 || !are_isomorphic(&members[0], &figure3_graph())? {
        return Verdict::fail(format!("{} unicyclic R_UVR graphs of order 8", members.len()));
    }
    for t in free_trees(8)? {
        if cls::in_class_r_uvr(&ctx.solver, &t)? {
            return Verdict::fail(format!("tree {:?} of order 8 is in R_UVR", tree_canonical_form(&t)?));
        }
    }
    Verdict::pass()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let ids: BTreeSet<&str> = REGISTRY.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn every_statement_has_a_check() {
        let required = [
            "EQ1", "LEM-ON", "LEM-MINUS", "LEM-MINUSE", "THM-R", "THM-UN", "THM-DIFF-I", "THM-DIFF-II", "OBS-DISC",
            "OBS-PN3", "REM-E1", "PROP-3V2", "PROP-02", "COR-UVRBON", "COR-UVRTREE", "OBS-SABC", "COR-UNILAB",
            "OBS-EQUI", "THM-MAIN", "COR-SB", "COR-VDEL", "COR-EDEL", "PROP-T1", "MINEDGE-I", "MINEDGE-II",
            "MINEDGE-III",
        ];
        for id in required {
            assert!(find(id).is_some(), "{id} missing");
        }
    }

    #[test]
    fn family_orders() {
        assert_eq!(expected_family_orders(10).into_iter().collect::<Vec<_>>(), vec![3, 6, 7, 9, 10]);
    }
}

//! The check manifest. Each entry names a corpus and the assertion made on
//! every member; the ids are the stable handles used by `monopos verify`.

mod bounds;
mod formulas;
mod realization;

use monopos::families::{generate, predict_for_spec, FamilySpec};
use monopos::io::{emit_graph6, parse_graph6};
use monopos::position::{brute_force_position, compute_parameter, position_number, Parameter, PathMode, SolverOptions};
use monopos::{Error, Graph, Result};
use rand::Rng;

use crate::corpus::{exhaustive_corpus, family_corpus, gnp_corpus, Instance};
use crate::report::{AssertionKind, Ctx, Verdict};

pub struct CheckDef {
    pub id: &'static str,
    pub kind: AssertionKind,
    pub corpus: &'static str,
    pub run: fn(&mut Ctx),
}

const fn def(id: &'static str, kind: AssertionKind, corpus: &'static str, run: fn(&mut Ctx)) -> CheckDef {
    CheckDef { id, kind, corpus, run }
}

use AssertionKind::{Equality, Inequality, Realization, Structural};

static MANIFEST: [CheckDef; 35] = [
    def("cubic-cages", Equality, "Petersen, Heawood and McGee graphs", realization::cubic_cages),
    def("petersen-general-position", Equality, "Petersen graph", realization::petersen_gp),
    def("position-chain", Inequality, "general corpus", bounds::position_chain),
    def("mp-range-complete", Structural, "general corpus", bounds::mp_range),
    def("solver-oracle-agreement", Equality, "500 random connected graphs n <= 9 plus family instances n <= 9", oracle_agreement),
    def("distance-hereditary-mp-equals-gp", Equality, "200 random distance-hereditary graphs n <= 12 plus distance-hereditary general corpus members", formulas::distance_hereditary),
    def("block-graph-simplicial", Equality, "random trees and block graphs, paths, stars, caterpillars, exhaustive block graphs n <= 7", formulas::block_graphs),
    def("complete-multipartite", Equality, "all part lists with total <= 9 plus 30 random ones with total <= 16", formulas::multipartite),
    def("longest-induced-path-bound", Inequality, "general corpus", bounds::longest_path_bound),
    def("rho-bound", Inequality, "general corpus, order <= 16", bounds::rho_bound),
    def("cut-vertex-bound", Inequality, "general corpus", bounds::cut_vertex_bound),
    def("simplicial-bound", Inequality, "general corpus", bounds::simplicial_bound),
    def("mp-set-clique-structure", Structural, "general corpus; every maximum set when n <= 10, else the solver witness", bounds::clique_structure),
    def("triangle-free-alpha-bound", Inequality, "triangle-free general corpus members, random bipartite graphs, trees, cycles, cages", bounds::triangle_free),
    def("cubic-bound", Inequality, "60 random connected cubic graphs 8 <= n <= 22 plus cages", bounds::cubic_bound),
    def("pendant-increment", Inequality, "300 random (graph, vertex) pairs", bounds::pendant_increment),
    def("pendant-at-simplicial", Equality, "150 random (graph, simplicial vertex) pairs", bounds::pendant_simplicial),
    def("mp-n-minus-one-structure", Structural, "all connected graphs 3 <= n <= 8", bounds::n_minus_one),
    def("unicyclic-five-case", Equality, "200 random unicyclic graphs n <= 14 plus cycles", formulas::unicyclic),
    def("corona-formula", Equality, "100 random factor pairs", formulas::corona_formula),
    def("join-formula", Equality, "100 random factor pairs", formulas::join_formula),
    def("bipartite-complement", Equality, "random bipartite graphs, trees, grids, hypercubes Q3 and Q4", formulas::bipartite_complement),
    def("split-separated", Equality, "200 random connected split graphs n <= 16", formulas::split_separated),
    def("split-saturating-equality", Equality, "200 random connected split graphs n <= 16", formulas::split_saturating),
    def("family-predictors", Equality, "family manifest", family_predictors),
    def("mp-gp-realization", Realization, "2 <= a <= b <= 8", realization::mp_gp),
    def("igp-mp-realization", Realization, "1 = a <= b <= 8 and 2 <= a, b <= 8", realization::igp_mp),
    def("r-graph-dissociation-2-position", Equality, "R(a-2, b-a+2) for 2 <= a <= b <= 8", realization::r_graph_diss_gp2),
    def("hull-realization", Realization, "G(a, b, l) and K_n with order <= 14", realization::hull_realization),
    def("hull-below-mp", Structural, "general corpus", realization::hull_below_mp),
    def("tree-hull-leaves", Equality, "100 random trees n <= 12", realization::tree_hull),
    def("clique-reduction", Equality, "100 random source graphs n <= 8, every k", realization::clique_reduction),
    def("reduction-join-formula", Equality, "100 random source graphs n <= 8", realization::reduction_join_formula),
    def("graph6-round-trip", Structural, "general corpus plus family manifest", graph6_round_trip),
    def("generator-determinism", Structural, "family manifest", generator_determinism),
];

pub fn manifest() -> &'static [CheckDef] {
    &MANIFEST
}

/// Small members of every family, used by several checks.
pub(crate) const FAMILY_SPECS: &[&str] = &[
    "path:1",
    "path:2",
    "path:5",
    "path:9",
    "cycle:3",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "cycle:9",
    "cycle:12",
    "complete:1",
    "complete:2",
    "complete:5",
    "complete:8",
    "complete_multipartite:1,1",
    "complete_multipartite:2,3",
    "complete_multipartite:1,2,3",
    "complete_multipartite:3,3,3",
    "complete_multipartite:1,1,1,4",
    "star:1",
    "star:3",
    "star:6",
    "caterpillar:4,1",
    "caterpillar:3,2",
    "caterpillar:5,2",
    "random_tree:9:seed=1",
    "random_tree:14:seed=2",
    "random_block:4,4:seed=3",
    "random_block:6,3:seed=4",
    "random_unicyclic:8:seed=5",
    "random_unicyclic:13:seed=6",
    "hypercube:3",
    "hypercube:4",
    "grid:3,3",
    "grid:2,5",
    "half_wheel:2",
    "half_wheel:4",
    "half_wheel:6",
    "half_wheel_pendant:3,5",
    "half_wheel_pendant:4,8",
    "wheel_pendant_W:3",
    "wheel_pendant_W:6",
    "R_graph:0,3",
    "R_graph:2,2",
    "R_graph:3,4",
    "P_graph:0,2",
    "P_graph:1,3",
    "P_graph:3,2",
    "G_abl:2,2,0",
    "G_abl:3,5,2",
    "G_abl:4,7,3",
    "petersen",
    "heawood",
    "mcgee",
    "random_split:4,5:seed=7",
    "random_split:7,8:seed=8",
    "random_bipartite:4,5:seed=9",
    "corona_of:(cycle:5),(complete:1)",
    "corona_of:(path:3),(cycle:4)",
    "join_of:(cycle:4),(cycle:4)",
    "join_of:(path:4),(complete:2)",
];

/// Exhaustive connected graphs of order 2 to 7, 120 random connected graphs
/// of order 8 to 14 and the family manifest. Shared by the bound checks, so
/// it draws from its own stream.
pub(crate) fn general_corpus(seed: u64) -> Vec<Instance> {
    let mut rng = crate::corpus::check_rng(seed, crate::report::stream_of("general-corpus"));
    let mut out = exhaustive_corpus(2..=7);
    out.extend(gnp_corpus("general", 120, 8..=14, &mut rng));
    out.extend(family_corpus(FAMILY_SPECS));
    out
}

pub(crate) fn value(g: &Graph, p: Parameter) -> Result<usize> {
    Ok(compute_parameter(g, p, &SolverOptions::default())?.value)
}

pub(crate) fn mp(g: &Graph) -> Result<usize> {
    value(g, Parameter::Mp)
}

/// A short random seed for labels.
pub(crate) fn label_seed(rng: &mut impl Rng) -> u64 {
    rng.gen::<u32>() as u64
}

const ORACLE_KINDS: [(PathMode, bool); 5] = [
    (PathMode::Monophonic, false),
    (PathMode::Geodesic, false),
    (PathMode::GeodesicLen2, false),
    (PathMode::Monophonic, true),
    (PathMode::Geodesic, true),
];

fn oracle_agreement(ctx: &mut Ctx) {
    let mut rng = ctx.rng();
    let mut corpus = gnp_corpus("oracle", 500, 3..=9, &mut rng);
    corpus.extend(family_corpus(FAMILY_SPECS).into_iter().filter(|i| i.order() <= 9));
    ctx.sweep(&corpus, |i| {
        let mut v = Verdict::new();
        for (mode, independent) in ORACLE_KINDS {
            let opts = SolverOptions {
                require_independent: independent,
                ..SolverOptions::default()
            };
            let bb = position_number(&i.graph, mode, &opts)?;
            let bf = brute_force_position(&i.graph, mode, &opts)?;
            let name = Parameter::for_position(mode, independent).name();
            v = v
                .eq(&format!("{name} value"), bf.value, bb.value)
                .eq(&format!("{name} witness"), format!("{:?}", bf.witness), format!("{:?}", bb.witness));
        }
        Ok(v)
    });
}

/// Every claim the predictors make on the family manifest, against the
/// solvers, and against the oracle where the order allows.
fn family_predictors(ctx: &mut Ctx) {
    let specs: Vec<FamilySpec> = FAMILY_SPECS.iter().map(|s| s.parse().expect("manifest parses")).collect();
    let corpus = family_corpus(FAMILY_SPECS);
    let items: Vec<(Instance, FamilySpec)> = corpus.into_iter().zip(specs).collect();
    let claims = ctx.sweep_with(&items, |(i, spec)| {
        let preds = match predict_for_spec(spec) {
            Ok(p) => p,
            Err(Error::Domain(reason)) => return Ok((Verdict::new(), Err(reason))),
            Err(e) => return Err(e),
        };
        let mut v = Verdict::new();
        for p in &preds {
            let solved = value(&i.graph, p.parameter)?;
            v = v.eq(&format!("{} [{}]", p.parameter, p.tag), p.value, solved);
            if let Some((mode, ind)) = p.parameter.position_kind() {
                if i.order() <= 9 {
                    let opts = SolverOptions {
                        require_independent: ind,
                        ..SolverOptions::default()
                    };
                    let oracle = brute_force_position(&i.graph, mode, &opts)?.value;
                    v = v.eq(&format!("{} oracle [{}]", p.parameter, p.tag), p.value, oracle);
                }
            }
        }
        Ok((v, Ok(preds.len())))
    });
    let mut verified = 0;
    for ((i, _), c) in items.iter().zip(&claims) {
        match c {
            Some(Ok(k)) => verified += k,
            Some(Err(reason)) => ctx.note(format!("{}: no claim ({reason})", i.label)),
            None => {}
        }
    }
    ctx.observe("claims_checked", verified);
}

fn graph6_round_trip(ctx: &mut Ctx) {
    let corpus = general_corpus(ctx.seed);
    ctx.sweep(&corpus, |i| {
        let s = emit_graph6(&i.graph);
        let back = parse_graph6(&s)?;
        Ok(Verdict::new()
            .holds(back == i.graph, "parse(emit(g)) == g", "identical graph", "different graph")
            .eq("emit(parse(s))", s.clone(), emit_graph6(&back)))
    });
}

fn generator_determinism(ctx: &mut Ctx) {
    let items: Vec<(Instance, FamilySpec)> = FAMILY_SPECS
        .iter()
        .map(|s| {
            let spec: FamilySpec = s.parse().expect("manifest parses");
            let g = generate(&spec).expect("manifest specs are in domain").graph;
            (Instance::new(spec.to_string(), g), spec)
        })
        .collect();
    ctx.sweep(&items, |(i, spec)| {
        let again = generate(spec)?.graph;
        let reparsed: FamilySpec = spec.to_string().parse()?;
        Ok(Verdict::new()
            .eq("graph6 of a second generation", emit_graph6(&i.graph), emit_graph6(&again))
            .eq("spec text round trip", spec.to_string(), reparsed.to_string()))
    });
}

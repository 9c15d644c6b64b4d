//! Closed-form parameter predictions for the named families.

use serde::{Deserialize, Serialize};

use super::{generate, Family, FamilySpec};
use crate::bitset::VertexSet;
use crate::clique::{alpha_omega, clique_number, independence_number};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{bipartition, distance_matrix, is_block_graph, simplicial_vertices, TwoColoring};
use crate::invariants::psi_uniform;
use crate::position::{position_number, Parameter, PathMode, SolverOptions};
use crate::split::{phi_separated, saturating_condition, split_partition, SplitPartition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedValue {
    pub parameter: Parameter,
    pub value: usize,
    /// Which formula produced the value.
    pub tag: String,
    /// Why the formula applies to this input.
    pub applies: String,
}

fn pv(parameter: Parameter, value: usize, tag: &str, applies: impl Into<String>) -> PredictedValue {
    PredictedValue {
        parameter,
        value,
        tag: tag.to_string(),
        applies: applies.into(),
    }
}

fn exact_mp(g: &Graph) -> Result<usize> {
    Ok(position_number(g, PathMode::Monophonic, &SolverOptions::default())?.value)
}

/// `mp = s(G)` for block graphs.
pub fn predict_block_graph(g: &Graph) -> Result<PredictedValue> {
    if !is_block_graph(g) {
        return Err(Error::domain("not a block graph"));
    }
    Ok(pv(
        Parameter::Mp,
        simplicial_vertices(g).len(),
        "block-graph-simplicial",
        "every block is a clique",
    ))
}

/// `mp = gp = max{largest part, number of parts}`.
pub fn predict_multipartite(parts: &[usize]) -> Result<Vec<PredictedValue>> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::domain("parts must be non-empty and positive"));
    }
    let v = parts.iter().copied().max().unwrap().max(parts.len());
    let why = format!("complete multipartite with parts {parts:?}");
    Ok(vec![
        pv(Parameter::Mp, v, "complete-multipartite", why.clone()),
        pv(Parameter::Gp, v, "complete-multipartite", why),
    ])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnicyclicCase {
    Triangle,
    /// One branching cycle vertex, or a bare cycle of length at least four.
    SingleBranch,
    /// Two non-adjacent branching vertices, one of whose branches is a path
    /// hanging from its cycle vertex.
    TwoWithPathBranch,
    TwoAdjacent,
    Otherwise,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicShape {
    /// `v_0, ..., v_{s-1}` in cyclic order, starting at the smallest id.
    pub cycle: Vec<usize>,
    /// Indices into `cycle` of the vertices of degree at least three.
    pub branching: Vec<usize>,
    pub leaves: usize,
    pub case: UnicyclicCase,
    /// The case when any path-shaped branch qualifies, not only one ending
    /// at its cycle vertex.
    pub literal_case: UnicyclicCase,
}

impl UnicyclicShape {
    pub fn predicted_mp(&self) -> usize {
        self.mp_for(self.case)
    }

    pub fn literal_mp(&self) -> usize {
        self.mp_for(self.literal_case)
    }

    fn mp_for(&self, case: UnicyclicCase) -> usize {
        match case {
            UnicyclicCase::Triangle => 3,
            UnicyclicCase::SingleBranch => self.leaves + 2,
            UnicyclicCase::TwoWithPathBranch | UnicyclicCase::TwoAdjacent => self.leaves + 1,
            UnicyclicCase::Otherwise => self.leaves,
        }
    }
}

/// The unique cycle by leaf stripping, then the branching pattern on it.
pub fn unicyclic_shape(g: &Graph) -> Result<UnicyclicShape> {
    let n = g.order();
    g.require_connected()?;
    if n < 3 || g.edge_count() != n {
        return Err(Error::domain("not unicyclic"));
    }
    let mut deg = g.degrees();
    let mut core = g.vertices();
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        core.remove(v);
        for w in g.neighbors(v).iter() {
            if core.contains(w) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let start = core.first().expect("connected with n edges has a cycle");
    let mut cycle = vec![start];
    let mut prev: Option<usize> = None;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .intersection(&core)
            .iter()
            .find(|&w| Some(w) != prev)
            .expect("core is a cycle");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = Some(cur);
        cur = next;
    }
    let s = cycle.len();
    let branching: Vec<usize> = (0..s).filter(|&i| g.degree(cycle[i]) >= 3).collect();
    let leaves = (0..n).filter(|&v| g.degree(v) == 1).count();

    // T_i: the component of G - {v_{i-1}, v_{i+1}} holding v_i. Returns
    // (is a path, is a path ending at v_i).
    let branch_shape = |i: usize| {
        let mut removed = VertexSet::new(n);
        removed.insert(cycle[(i + s - 1) % s]);
        removed.insert(cycle[(i + 1) % s]);
        let mut seen = VertexSet::new(n);
        seen.insert(cycle[i]);
        let mut stack = vec![cycle[i]];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u).iter() {
                if !removed.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        let is_path = seen.iter().all(|u| g.neighbors(u).intersection(&seen).len() <= 2);
        (is_path, is_path && g.neighbors(cycle[i]).intersection(&seen).len() <= 1)
    };
    let classify = |pendant_only: bool| {
        if n == 3 {
            UnicyclicCase::Triangle
        } else if branching.len() <= 1 {
            UnicyclicCase::SingleBranch
        } else if branching.len() == 2 {
            let (i, j) = (branching[0], branching[1]);
            let qualifies = |k: usize| {
                let (path, pendant) = branch_shape(k);
                if pendant_only {
                    pendant
                } else {
                    path
                }
            };
            if (j + s - i) % s == 1 || (i + s - j) % s == 1 {
                UnicyclicCase::TwoAdjacent
            } else if qualifies(i) || qualifies(j) {
                UnicyclicCase::TwoWithPathBranch
            } else {
                UnicyclicCase::Otherwise
            }
        } else {
            UnicyclicCase::Otherwise
        }
    };
    let case = classify(true);
    let literal_case = classify(false);
    Ok(UnicyclicShape {
        cycle,
        branching,
        leaves,
        case,
        literal_case,
    })
}

pub fn predict_unicyclic(g: &Graph) -> Result<PredictedValue> {
    let shape = unicyclic_shape(g)?;
    Ok(pv(
        Parameter::Mp,
        shape.predicted_mp(),
        "unicyclic-five-case",
        format!(
            "cycle length {}, {} branching, {} leaves: {:?}",
            shape.cycle.len(),
            shape.branching.len(),
            shape.leaves,
            shape.case
        ),
    ))
}

/// `mp(G ⊙ H) = n(G) mp(H)` and `gp(G ⊙ H) = n(G) α^ω(H)`, factor values
/// from the exact solvers. With `n(G) = 1` the corona is a join and the
/// formulas do not apply.
pub fn predict_corona(g: &Graph, h: &Graph) -> Result<Vec<PredictedValue>> {
    g.require_connected()?;
    if g.order() < 2 {
        return Err(Error::domain("outer factor needs at least two vertices"));
    }
    let n = g.order();
    let why = format!("connected outer factor of order {n}");
    Ok(vec![
        pv(Parameter::Mp, n * exact_mp(h)?, "corona-product", why.clone()),
        pv(Parameter::Gp, n * alpha_omega(h)?.0, "corona-product-gp", why),
    ])
}

/// `mp(G ∨ H) = max{ω(G) + ω(H), mp(G), mp(H)}` and the analogue for `gp`
/// with `α^ω` in place of `mp`.
pub fn predict_join(g: &Graph, h: &Graph) -> Result<Vec<PredictedValue>> {
    let cliques = clique_number(g).0 + clique_number(h).0;
    let mp = cliques.max(exact_mp(g)?).max(exact_mp(h)?);
    let gp = cliques.max(alpha_omega(g)?.0).max(alpha_omega(h)?.0);
    Ok(vec![
        pv(Parameter::Mp, mp, "join", "any two graphs"),
        pv(Parameter::Gp, gp, "join-gp", "any two graphs"),
    ])
}

fn require_bipartite(g: &Graph) -> Result<crate::invariants::Bipartition> {
    match bipartition(g)? {
        TwoColoring::Bipartite(bp) => Ok(bp),
        TwoColoring::OddCycle(_) => Err(Error::domain("not bipartite")),
    }
}

/// `mp` of the complement of a connected bipartite graph: `max{α, ψ}`.
pub fn predict_bipartite_complement(g: &Graph) -> Result<PredictedValue> {
    let bp = require_bipartite(g)?;
    let alpha = independence_number(g).0;
    let psi = psi_uniform(g, &bp).0;
    Ok(pv(
        Parameter::Mp,
        alpha.max(psi),
        "bipartite-complement",
        format!("connected bipartite, alpha {alpha}, psi {psi}"),
    ))
}

/// Trees of order at least three: `n` if the diameter is at most two, else `α`.
pub fn tree_complement_mp(t: &Graph) -> Result<PredictedValue> {
    require_bipartite(t)?;
    let n = t.order();
    if n < 3 || t.edge_count() + 1 != n {
        return Err(Error::domain("needs a tree of order at least 3"));
    }
    let diam = distance_matrix(t).diameter().expect("connected");
    let value = if diam <= 2 { n } else { independence_number(t).0 };
    Ok(pv(Parameter::Mp, value, "tree-complement", format!("tree of diameter {diam}")))
}

/// Grid with `n x m` vertices, `n, m >= 2`.
pub fn grid_complement_mp(n: usize, m: usize) -> Result<PredictedValue> {
    if n < 2 || m < 2 {
        return Err(Error::domain("grid sides must be at least 2"));
    }
    let value = if n == 2 && m == 2 {
        4
    } else {
        n.div_ceil(2) * m.div_ceil(2) + (n / 2) * (m / 2)
    };
    Ok(pv(Parameter::Mp, value, "grid-complement", format!("{n} x {m} grid")))
}

/// `2^{k-1}` for `k >= 3`.
pub fn hypercube_complement_mp(k: u32) -> Result<PredictedValue> {
    if k < 3 {
        return Err(Error::domain("needs dimension at least 3"));
    }
    Ok(pv(Parameter::Mp, 1 << (k - 1), "hypercube-complement", format!("dimension {k}")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPrediction {
    pub mp: PredictedValue,
    pub witness: VertexSet,
    pub partition: SplitPartition,
    /// `φ` measured with the divided vertex on the independent side.
    pub phi_divided_independent: usize,
    pub omega: usize,
    pub alpha: usize,
    /// The matching condition; when true, `mp = max{ω, α}` is predicted.
    pub saturating: bool,
}

/// `mp = φ` for connected split graphs, plus the matching test for
/// `φ = max{ω, α}`. `φ` is taken over the partition keeping a divided vertex
/// in the clique; with it on the independent side the largest separated
/// subgraph can fall short of `mp`.
pub fn predict_split(g: &Graph) -> Result<SplitPrediction> {
    g.require_connected()?;
    let sp = split_partition(g).ok_or_else(|| Error::domain("not a split graph"))?;
    let phi = phi_separated(g, &sp.clique_side());
    Ok(SplitPrediction {
        mp: pv(
            Parameter::Mp,
            phi.value,
            "split-separated",
            format!("clique {}, independent {}", sp.clique.len(), sp.independent.len()),
        ),
        witness: phi.witness,
        phi_divided_independent: phi_separated(g, &sp).value,
        omega: sp.omega(),
        alpha: sp.alpha(),
        saturating: saturating_condition(g, &sp),
        partition: sp,
    })
}

fn ints(spec: &FamilySpec) -> Result<Vec<usize>> {
    spec.ints()
}

/// Values claimed for the realization families.
pub fn predict_realization(spec: &FamilySpec) -> Result<Vec<PredictedValue>> {
    // domain checks live in the generator
    generate(spec)?;
    let p = ints(spec)?;
    let why = spec.to_string();
    let out = match spec.family {
        Family::HalfWheel => {
            let r = p[0];
            if r < 4 {
                return Err(Error::domain("half-wheel values are claimed for r >= 4"));
            }
            vec![
                pv(Parameter::Mp, 2, "half-wheel", why.clone()),
                pv(Parameter::Gp, r, "half-wheel", why),
            ]
        }
        Family::HalfWheelPendant => vec![
            pv(Parameter::Mp, p[0], "half-wheel-pendant", why.clone()),
            pv(Parameter::Gp, p[1], "half-wheel-pendant", why),
        ],
        Family::WheelPendant => vec![
            pv(Parameter::Mp, p[0], "wheel-pendant", why.clone()),
            pv(Parameter::Gp, p[0] + 1, "wheel-pendant", why),
        ],
        Family::RGraph => {
            let (r, s) = (p[0], p[1]);
            let mut v = vec![pv(Parameter::Igp, r + 1, "r-graph", why.clone())];
            // with no leaves the graph is K_{s+1}
            if r >= 1 {
                v.push(pv(Parameter::Mp, r + s, "r-graph", why.clone()));
            }
            if s >= 2 {
                v.push(pv(Parameter::Diss, r + 2, "r-graph-dissociation", why.clone()));
                v.push(pv(Parameter::Gp2, r + s, "r-graph-2-position", why));
            }
            v
        }
        Family::PGraph => {
            let (r, s) = (p[0], p[1]);
            let mut v = vec![pv(Parameter::Mp, r + 2, "p-graph", why.clone())];
            // without leaves the far side plus the apex is already s + 1
            if r >= 1 {
                v.push(pv(Parameter::Igp, r + s, "p-graph", why));
            }
            v
        }
        Family::GAbl => vec![
            pv(Parameter::Hm, p[0], "clique-with-path-hull", why.clone()),
            pv(Parameter::Mp, p[1], "clique-with-path-hull", why),
        ],
        _ => return Err(Error::domain(format!("{} is not a realization family", spec.family))),
    };
    Ok(out)
}

/// Every prediction available for a spec (possibly none).
pub fn predict_for_spec(spec: &FamilySpec) -> Result<Vec<PredictedValue>> {
    if spec.family.is_realization() {
        return predict_realization(spec);
    }
    let g = generate(spec)?.graph;
    let out = match spec.family {
        Family::Path
        | Family::Complete
        | Family::Star
        | Family::Caterpillar
        | Family::RandomTree
        | Family::RandomBlock => vec![predict_block_graph(&g)?],
        Family::Cycle | Family::RandomUnicyclic => vec![predict_unicyclic(&g)?],
        Family::CompleteMultipartite => predict_multipartite(&ints(spec)?)?,
        Family::Petersen => vec![
            pv(Parameter::Mp, 3, "cubic-cage", "Petersen graph"),
            pv(Parameter::Gp, 6, "cubic-cage", "Petersen graph"),
        ],
        Family::Heawood => vec![pv(Parameter::Mp, 3, "cubic-cage", "Heawood graph")],
        Family::McGee => vec![pv(Parameter::Mp, 2, "cubic-cage", "McGee graph")],
        Family::RandomSplit => vec![predict_split(&g)?.mp],
        Family::CoronaOf | Family::JoinOf => {
            let (a, b) = spec.spec_pair()?;
            let (ga, gb) = (generate(a)?.graph, generate(b)?.graph);
            if spec.family == Family::CoronaOf {
                predict_corona(&ga, &gb)?
            } else {
                predict_join(&ga, &gb)?
            }
        }
        Family::Hypercube | Family::Grid | Family::RandomBipartite => Vec::new(),
        Family::HalfWheel
        | Family::HalfWheelPendant
        | Family::WheelPendant
        | Family::RGraph
        | Family::PGraph
        | Family::GAbl => unreachable!("handled above"),
    };
    Ok(out)
}

/// A family member with `(mp, gp) = (a, b)`, for `2 <= a <= b`.
pub fn realize_mp_gp(a: usize, b: usize) -> Result<FamilySpec> {
    if a < 2 || b < a {
        return Err(Error::domain("needs 2 <= a <= b"));
    }
    Ok(match (a, b) {
        _ if a == b => FamilySpec::new(Family::Complete, &[a]),
        (2, 3) => FamilySpec::new(Family::Cycle, &[5]),
        (2, _) => FamilySpec::new(Family::HalfWheel, &[b]),
        _ if b == a + 1 => FamilySpec::new(Family::WheelPendant, &[a]),
        _ => FamilySpec::new(Family::HalfWheelPendant, &[a, b]),
    })
}

/// A family member with `(igp, mp) = (a, b)`, for `1 = a <= b` or
/// `a, b >= 2`. When `a > b` this uses `P(b - 2, a - b + 2)`, except that
/// `b = 2` needs `P(0, a - 1)` (and `C_6` for `a = 3`).
pub fn realize_igp_mp(a: usize, b: usize) -> Result<FamilySpec> {
    if a == 0 || b == 0 || (a == 1 && b < 1) || (a >= 2 && b < 2) {
        return Err(Error::domain("needs 1 = a <= b or a, b >= 2"));
    }
    Ok(if a == 1 {
        FamilySpec::new(Family::Complete, &[b])
    } else if a <= b {
        FamilySpec::new(Family::RGraph, &[a - 1, b - a + 1])
    } else if b == 2 && a == 3 {
        FamilySpec::new(Family::Cycle, &[6])
    } else if b == 2 {
        FamilySpec::new(Family::PGraph, &[0, a - 1])
    } else {
        FamilySpec::new(Family::PGraph, &[b - 2, a - b + 2])
    })
}

/// A connected graph of order `n` with `(h_m, mp) = (a, b)`: `K_n` when
/// `a = b = n`, otherwise the clique-with-path graph, needing
/// `2 <= a <= b <= n - 1`.
pub fn realize_hull_mp(a: usize, b: usize, n: usize) -> Result<FamilySpec> {
    if a == b && b == n && n >= 1 {
        return Ok(FamilySpec::new(Family::Complete, &[n]));
    }
    if a < 2 || b < a || n < b + 1 {
        return Err(Error::domain("needs 2 <= a <= b <= n - 1, or a = b = n"));
    }
    Ok(FamilySpec::new(Family::GAbl, &[a, b, n - b - 1]))
}

/// `K_1` joined to a disjoint union of at least two cliques.
pub fn is_k1_join_of_cliques(g: &Graph) -> bool {
    let n = g.order();
    (0..n).filter(|&v| g.degree(v) + 1 == n).any(|hub| {
        let mut rest = g.vertices();
        rest.remove(hub);
        let (h, _) = g.induced_subgraph(&rest);
        let comps = h.components();
        comps.len() >= 2 && comps.iter().all(|c| h.is_clique(c))
    })
}

/// A clique with between one and `n - 2` edges at a single vertex removed.
pub fn is_clique_minus_star(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    (0..n).any(|v| {
        let d = g.degree(v);
        let mut rest = g.vertices();
        rest.remove(v);
        d >= 1 && d + 1 < n && g.is_clique(&rest)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{add_pendant, complement, hypercube};
    use crate::position::{brute_force_position, hull_number};

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap().graph
    }

    fn value(g: &Graph, mode: PathMode, independent: bool) -> usize {
        let opts = SolverOptions {
            require_independent: independent,
            ..Default::default()
        };
        position_number(g, mode, &opts).unwrap().value
    }

    fn mp(g: &Graph) -> usize {
        value(g, PathMode::Monophonic, false)
    }

    #[test]
    fn block_graph_examples() {
        assert_eq!(predict_block_graph(&gen("star:5")).unwrap().value, 5);
        assert_eq!(predict_block_graph(&Graph::complete(4)).unwrap().value, 4);
        assert!(predict_block_graph(&Graph::cycle(4).unwrap()).is_err());
        for seed in 0..20 {
            let g = gen(&format!("random_block:4,4:seed={seed}"));
            assert_eq!(predict_block_graph(&g).unwrap().value, mp(&g));
        }
    }

    #[test]
    fn multipartite_examples() {
        for parts in [vec![3, 2, 2], vec![5, 1], vec![1, 1, 1], vec![2, 2, 2, 2, 1]] {
            let g = Graph::complete_multipartite(&parts).unwrap();
            let p = predict_multipartite(&parts).unwrap();
            assert_eq!(p[0].value, brute_force_position(&g, PathMode::Monophonic, &Default::default()).unwrap().value);
            assert_eq!(p[1].value, brute_force_position(&g, PathMode::Geodesic, &Default::default()).unwrap().value);
        }
        assert_eq!(predict_multipartite(&[3, 2, 2]).unwrap()[0].value, 3);
        assert!(predict_multipartite(&[]).is_err());
    }

    #[test]
    fn unicyclic_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(predict_unicyclic(&add_pendant(&c4, 0).unwrap()).unwrap().value, 3);
        assert_eq!(predict_unicyclic(&c4).unwrap().value, 2);
        assert_eq!(predict_unicyclic(&Graph::cycle(3).unwrap()).unwrap().value, 3);
        // C_6 with a two-vertex pendant path at 0 and at 3
        let g = Graph::from_edges(
            10,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (3, 8), (8, 9)],
        )
        .unwrap();
        let shape = unicyclic_shape(&g).unwrap();
        assert_eq!(shape.case, UnicyclicCase::TwoWithPathBranch);
        assert_eq!(shape.predicted_mp(), 3);
        assert_eq!(mp(&g), 3);
        assert!(predict_unicyclic(&Graph::path(4)).is_err());

        // C_6 with two leaves on v_1 and one on v_3: T_3 hangs from v_3 as a
        // path, so one cycle vertex joins the leaves
        let g = Graph::from_edges(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 6), (1, 7), (3, 8)],
        )
        .unwrap();
        let shape = unicyclic_shape(&g).unwrap();
        assert_eq!(shape.case, UnicyclicCase::TwoWithPathBranch);
        assert_eq!(shape.predicted_mp(), mp(&g));
    }

    #[test]
    fn unicyclic_literal_reading_overcounts() {
        // cycle 0-2-6-9-3-4, branch {2: 5, 7} and {9: 1, 8}
        let g = Graph::from_edges(
            10,
            &[(0, 2), (0, 4), (1, 9), (2, 5), (2, 6), (2, 7), (3, 4), (3, 9), (6, 9), (8, 9)],
        )
        .unwrap();
        let shape = unicyclic_shape(&g).unwrap();
        assert_eq!(shape.literal_case, UnicyclicCase::TwoWithPathBranch);
        assert_eq!(shape.case, UnicyclicCase::Otherwise);
        assert_eq!(mp(&g), 4);
        assert_eq!((shape.predicted_mp(), shape.literal_mp()), (4, 5));
    }

    #[test]
    fn unicyclic_against_solver() {
        let mut cases = std::collections::BTreeSet::new();
        for seed in 0..150 {
            let n = 3 + (seed as usize % 10);
            let g = gen(&format!("random_unicyclic:{n}:seed={seed}"));
            let shape = unicyclic_shape(&g).unwrap();
            cases.insert(shape.case);
            assert_eq!(shape.predicted_mp(), mp(&g), "seed {seed} {shape:?}");
        }
        assert!(cases.len() >= 4, "{cases:?}");
    }

    #[test]
    fn corona_and_join_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let k1 = Graph::complete(1);
        assert_eq!(predict_corona(&c5, &k1).unwrap()[0].value, 5);
        assert_eq!(predict_corona(&Graph::cycle(4).unwrap(), &k1).unwrap()[0].value, 4);
        let p = predict_corona(&Graph::path(3), &Graph::complete(2)).unwrap();
        assert_eq!(p[0].value, 6);
        assert!(predict_corona(&k1, &Graph::complete(2)).is_err());
        let c4 = Graph::cycle(4).unwrap();
        let j = predict_join(&c4, &c4).unwrap();
        assert_eq!(j[0].value, 4);
        assert_eq!(mp(&gen("join_of:(cycle:4),(cycle:4)")), 4);
        assert_eq!(predict_join(&Graph::complete(3), &Graph::complete(4)).unwrap()[0].value, 7);
    }

    #[test]
    fn bipartite_complement_examples() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(predict_bipartite_complement(&q3).unwrap().value, 4);
        assert_eq!(hypercube_complement_mp(3).unwrap().value, 4);
        assert_eq!(mp(&complement(&q3)), 4);
        let star = gen("star:4");
        assert_eq!(tree_complement_mp(&star).unwrap().value, 5);
        assert_eq!(mp(&complement(&star)), 5);
        let p6 = Graph::path(6);
        assert_eq!(tree_complement_mp(&p6).unwrap().value, 3);
        assert_eq!(mp(&complement(&p6)), 3);
        for (n, m) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
            let g = gen(&format!("grid:{n},{m}"));
            let want = grid_complement_mp(n, m).unwrap().value;
            assert_eq!(want, mp(&complement(&g)), "{n}x{m}");
            assert_eq!(want, predict_bipartite_complement(&g).unwrap().value);
        }
        assert!(predict_bipartite_complement(&Graph::cycle(5).unwrap()).is_err());
    }

    #[test]
    fn split_examples() {
        let star = gen("star:3");
        let p = predict_split(&star).unwrap();
        assert_eq!(p.mp.value, 3);
        assert_eq!(p.alpha, 3);
        for seed in 0..40 {
            let g = gen(&format!("random_split:4,5:seed={seed}"));
            let p = predict_split(&g).unwrap();
            let m = mp(&g);
            assert_eq!(p.mp.value, m, "seed {seed}");
            assert!(p.phi_divided_independent <= m);
            assert_eq!(p.saturating, m == p.omega.max(p.alpha), "seed {seed}");
        }
    }

    #[test]
    fn split_phi_needs_divided_vertex_in_clique() {
        // clique {0,1,2,3,6}; 0 and 6 both see no independent vertex
        let g = Graph::from_edges(
            9,
            &[
                (0, 1), (0, 2), (0, 3), (0, 6), (1, 2), (1, 3), (1, 4), (1, 6), (1, 8),
                (2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (2, 8), (3, 4), (3, 6), (3, 8),
            ],
        )
        .unwrap();
        let p = predict_split(&g).unwrap();
        assert_eq!(p.partition.divided, Some(0));
        assert_eq!(mp(&g), 6);
        assert_eq!(p.mp.value, 6);
        assert_eq!(p.phi_divided_independent, 5);
    }

    #[test]
    fn realization_predictions_hold() {
        for s in ["half_wheel:4", "half_wheel:5", "half_wheel_pendant:3,5", "wheel_pendant_W:4", "P_graph:1,3", "R_graph:2,3"] {
            let spec: FamilySpec = s.parse().unwrap();
            let g = generate(&spec).unwrap().graph;
            for p in predict_realization(&spec).unwrap() {
                let (mode, ind) = p.parameter.position_kind().unwrap_or((PathMode::Monophonic, false));
                let actual = match p.parameter {
                    Parameter::Diss => crate::clique::dissociation_number(&g).unwrap().0,
                    _ => value(&g, mode, ind),
                };
                assert_eq!(actual, p.value, "{s} {:?}", p.parameter);
            }
        }
        let g = gen("G_abl:3,5,2");
        assert_eq!(hull_number(&g, &Default::default()).unwrap().value, 3);
        assert_eq!(mp(&g), 5);
        assert!(predict_realization(&"half_wheel:3".parse().unwrap()).is_err());
        assert!(predict_realization(&"cycle:5".parse().unwrap()).is_err());
    }

    #[test]
    fn realizers() {
        for a in 2..=6 {
            for b in a..=7 {
                let g = generate(&realize_mp_gp(a, b).unwrap()).unwrap().graph;
                assert_eq!(
                    (mp(&g), value(&g, PathMode::Geodesic, false)),
                    (a, b),
                    "{}",
                    realize_mp_gp(a, b).unwrap()
                );
            }
        }
        for a in 1..=7 {
            for b in 1..=6 {
                if a >= 2 && b < 2 {
                    continue;
                }
                let spec = realize_igp_mp(a, b).unwrap();
                let g = generate(&spec).unwrap().graph;
                assert_eq!((value(&g, PathMode::Geodesic, true), mp(&g)), (a, b), "{spec}");
            }
        }
        assert_eq!(realize_hull_mp(3, 3, 3).unwrap().to_string(), "complete:3");
        assert_eq!(realize_hull_mp(2, 4, 8).unwrap().to_string(), "G_abl:2,4,3");
        assert_eq!(realize_hull_mp(2, 4, 5).unwrap().to_string(), "G_abl:2,4,0");
        assert!(realize_hull_mp(2, 4, 4).is_err());
        for n in 3..=9 {
            for b in 2..n {
                for a in 2..=b {
                    let g = generate(&realize_hull_mp(a, b, n).unwrap()).unwrap().graph;
                    assert_eq!(g.order(), n);
                    assert_eq!((hull_number(&g, &Default::default()).unwrap().value, mp(&g)), (a, b));
                }
            }
        }
    }

    #[test]
    fn n_minus_one_recognizers() {
        assert!(is_k1_join_of_cliques(&gen("star:3")));
        assert!(!is_k1_join_of_cliques(&Graph::complete(4)));
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(is_clique_minus_star(&g));
        assert!(!is_clique_minus_star(&Graph::complete(4)));
    }

    #[test]
    fn predictions_for_specs() {
        let p = predict_for_spec(&"petersen".parse().unwrap()).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(predict_for_spec(&"path:5".parse().unwrap()).unwrap()[0].value, 2);
        assert!(predict_for_spec(&"grid:3,3".parse().unwrap()).unwrap().is_empty());
        let j = predict_for_spec(&"join_of:(complete:2),(cycle:5)".parse().unwrap()).unwrap();
        assert_eq!(j[0].value, mp(&gen("join_of:(complete:2),(cycle:5)")));
    }
}

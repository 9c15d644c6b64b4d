use std::collections::BTreeMap;

use monopos::bitset::VertexSet;
use monopos::clique::{clique_number, independence_number};
use monopos::families::{is_clique_minus_star, is_k1_join_of_cliques};
use monopos::families::{Family, FamilySpec};
use monopos::graph::{add_pendant, Graph};
use monopos::invariants::{cut_vertices, simplicial_vertices};
use monopos::io::emit_graph6;
use monopos::position::{
    build_triple_index, is_position_set, position_number, ForbiddenTripleIndex, Parameter, PathMode, SolverOptions,
};
use monopos::Result;
use rand::Rng;

use super::{general_corpus, label_seed, mp, value};
use crate::corpus::{exhaustive_corpus, family_corpus, random_connected, random_cubic, Instance};
use crate::report::{Ctx, Verdict};

pub(super) fn position_chain(ctx: &mut Ctx) {
    let corpus = general_corpus(ctx.seed);
    ctx.sweep(&corpus, |i| {
        let g = &i.graph;
        let [mp, gp, gp2, imp, igp] = [Parameter::Mp, Parameter::Gp, Parameter::Gp2, Parameter::Imp, Parameter::Igp]
            .map(|p| value(g, p));
        let (mp, gp, gp2, imp, igp) = (mp?, gp?, gp2?, imp?, igp?);
        Ok(Verdict::new()
            .holds(mp <= gp, "mp <= gp", format!("<= {gp}"), mp)
            .holds(gp <= gp2, "gp <= gp2", format!("<= {gp2}"), gp)
            .holds(imp <= mp, "imp <= mp", format!("<= {mp}"), imp)
            .holds(imp <= igp, "imp <= igp", format!("<= {igp}"), imp)
            .holds(igp <= gp, "igp <= gp", format!("<= {gp}"), igp))
    });
}

pub(super) fn mp_range(ctx: &mut Ctx) {
    let corpus: Vec<Instance> = general_corpus(ctx.seed).into_iter().filter(|i| i.order() >= 2).collect();
    ctx.sweep(&corpus, |i| {
        let n = i.order();
        let m = mp(&i.graph)?;
        Ok(Verdict::new()
            .holds((2..=n).contains(&m), "2 <= mp <= n", format!("in 2..={n}"), m)
            .eq("mp = n iff complete", i.graph.is_complete(), m == n))
    });
}

pub(super) fn longest_path_bound(ctx: &mut Ctx) {
    let corpus = general_corpus(ctx.seed);
    ctx.sweep(&corpus, |i| {
        let n = i.order();
        let l = value(&i.graph, Parameter::LongestInducedPath)?;
        let m = mp(&i.graph)?;
        Ok(Verdict::new().holds(m + l <= n + 1, "mp <= n - L + 1", format!("<= {}", n + 1 - l), m))
    });
}

pub(super) fn rho_bound(ctx: &mut Ctx) {
    let corpus: Vec<Instance> = general_corpus(ctx.seed).into_iter().filter(|i| i.order() <= 16).collect();
    ctx.sweep(&corpus, |i| {
        let rho = value(&i.graph, Parameter::Rho)?;
        let m = mp(&i.graph)?;
        Ok(Verdict::new().holds(m <= 2 * rho, "mp <= 2 rho", format!("<= {}", 2 * rho), m))
    });
}

pub(super) fn cut_vertex_bound(ctx: &mut Ctx) {
    let corpus = general_corpus(ctx.seed);
    ctx.sweep(&corpus, |i| {
        let g = &i.graph;
        let n = g.order();
        let cut = cut_vertices(g)?;
        let m = mp(g)?;
        let avoiding = SolverOptions {
            restrict_to: Some(cut.complement()),
            ..SolverOptions::default()
        };
        let m_avoiding = position_number(g, PathMode::Monophonic, &avoiding)?.value;
        Ok(Verdict::new()
            .holds(m + cut.len() <= n, "mp <= n - c", format!("<= {}", n - cut.len()), m)
            .eq("mp over sets avoiding cut vertices", m, m_avoiding))
    });
}

pub(super) fn simplicial_bound(ctx: &mut Ctx) {
    let corpus = general_corpus(ctx.seed);
    ctx.sweep(&corpus, |i| {
        let s = simplicial_vertices(&i.graph).len();
        let m = mp(&i.graph)?;
        Ok(Verdict::new().holds(m >= s, "mp >= s", format!(">= {s}"), m))
    });
}

/// Every position set of size `k`, by extending position sets vertex by
/// vertex in increasing order.
fn position_sets_of_size(idx: &ForbiddenTripleIndex, k: usize) -> Vec<VertexSet> {
    fn go(idx: &ForbiddenTripleIndex, k: usize, from: usize, cur: &mut VertexSet, out: &mut Vec<VertexSet>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let n = idx.order();
        for v in from..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.insert(v);
            if is_position_set(idx, cur) {
                go(idx, k, v + 1, cur, out);
            }
            cur.remove(v);
        }
    }
    let mut out = Vec::new();
    go(idx, k, 0, &mut VertexSet::new(idx.order()), &mut out);
    out
}

/// The clique-union structure: components of `G[M]` are cliques, and with
/// two or more components any two vertices of one component have a common
/// neighbour outside `M`.
fn structure_violation(g: &Graph, m: &VertexSet) -> Option<String> {
    let (h, map) = g.induced_subgraph(m);
    let comps = h.components();
    for c in &comps {
        if !h.is_clique(c) {
            return Some(format!("component {:?} is not a clique", c.iter().map(|v| map[v]).collect::<Vec<_>>()));
        }
    }
    if comps.len() < 2 {
        return None;
    }
    for c in &comps {
        let vs: Vec<usize> = c.iter().map(|v| map[v]).collect();
        for (a, &u) in vs.iter().enumerate() {
            for &w in &vs[a + 1..] {
                let common = g.neighbors(u).intersection(g.neighbors(w)).difference(m);
                if common.is_empty() {
                    return Some(format!("{u} and {w} have no common neighbour outside the set"));
                }
            }
        }
    }
    None
}

pub(super) fn clique_structure(ctx: &mut Ctx) {
    let corpus = general_corpus(ctx.seed);
    let counts = ctx.sweep_with(&corpus, |i| {
        let g = &i.graph;
        let idx = build_triple_index(g, PathMode::Monophonic)?;
        let best = position_number(g, PathMode::Monophonic, &SolverOptions::default())?;
        let sets = if g.order() <= 10 {
            position_sets_of_size(&idx, best.value)
        } else {
            vec![best.witness_set(g.order())]
        };
        let mut v = Verdict::new();
        for s in &sets {
            if let Some(why) = structure_violation(g, s) {
                v = v.holds(false, "maximum set is a union of cliques with shared outside neighbours", "structure", format!("{:?}: {why}", s.to_vec()));
            }
        }
        Ok((v, sets.len()))
    });
    ctx.observe("maximum_sets_examined", counts.iter().flatten().sum::<usize>());
}

pub(super) fn triangle_free(ctx: &mut Ctx) {
    let mut rng = ctx.rng();
    let mut corpus: Vec<Instance> = general_corpus(ctx.seed)
        .into_iter()
        .filter(|i| i.order() >= 3 && clique_number(&i.graph).0 <= 2)
        .collect();
    let mut specs = Vec::new();
    for _ in 0..60 {
        let (a, b) = (rng.gen_range(1..=7), rng.gen_range(1..=7));
        specs.push(FamilySpec::seeded(Family::RandomBipartite, &[a, b], label_seed(&mut rng)).to_string());
    }
    for _ in 0..40 {
        let n = rng.gen_range(3..=14);
        specs.push(FamilySpec::seeded(Family::RandomTree, &[n], label_seed(&mut rng)).to_string());
    }
    for n in 4..=12 {
        specs.push(format!("cycle:{n}"));
    }
    let specs: Vec<&str> = specs.iter().map(String::as_str).collect();
    corpus.extend(family_corpus(&specs).into_iter().filter(|i| i.order() >= 3));
    let sharp = ctx.sweep_with(&corpus, |i| {
        let alpha = independence_number(&i.graph).0;
        let m = mp(&i.graph)?;
        let l = value(&i.graph, Parameter::LongestInducedPath)?;
        let mut v = Verdict::new().holds(m <= alpha, "mp <= alpha", format!("<= {alpha}"), m);
        if l <= 3 {
            v = v.eq("mp = alpha when L <= 3", alpha, m);
        }
        Ok((v, l <= 3))
    });
    ctx.observe("short_path_instances", sharp.iter().flatten().filter(|&&s| s).count());
}

pub(super) fn cubic_bound(ctx: &mut Ctx) {
    let mut rng = ctx.rng();
    let mut corpus: Vec<Instance> = (0..60)
        .map(|k| {
            let n = 2 * rng.gen_range(4..=11);
            Instance::new(format!("cubic:n={n}:#{k}"), random_cubic(n, &mut rng).expect("even order"))
        })
        .collect();
    corpus.extend(family_corpus(&["petersen", "heawood", "mcgee"]));
    ctx.sweep(&corpus, |i| {
        let n = i.order();
        let m = mp(&i.graph)?;
        Ok(Verdict::new().holds(3 * m <= 2 * (n - 1), "mp <= 2(n-1)/3", format!("<= {}", 2 * (n - 1) / 3), m))
    });
}

fn pendant_samples(ctx: &Ctx, count: usize, simplicial_only: bool) -> Vec<(Instance, usize)> {
    let mut rng = ctx.rng();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(3..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_connected(n, p, &mut rng);
        let pool: Vec<usize> = if simplicial_only {
            simplicial_vertices(&g).to_vec()
        } else {
            (0..n).collect()
        };
        if pool.is_empty() {
            continue;
        }
        let v = pool[rng.gen_range(0..pool.len())];
        let k = out.len();
        out.push((Instance::new(format!("pendant:n={n}:p={p:.3}:v={v}:#{k}"), g), v));
    }
    out
}

fn pendant_delta(g: &Graph, v: usize) -> Result<(usize, usize)> {
    Ok((mp(g)?, mp(&add_pendant(g, v)?)?))
}

pub(super) fn pendant_increment(ctx: &mut Ctx) {
    let items = pendant_samples(ctx, 300, false);
    ctx.sweep(&items, |(i, v)| {
        let (before, after) = pendant_delta(&i.graph, *v)?;
        Ok(Verdict::new().holds(
            before <= after && after <= before + 1,
            "mp after pendant at v",
            format!("{before} or {}", before + 1),
            after,
        ))
    });
}

pub(super) fn pendant_simplicial(ctx: &mut Ctx) {
    let items = pendant_samples(ctx, 150, true);
    ctx.sweep(&items, |(i, v)| {
        let (before, after) = pendant_delta(&i.graph, *v)?;
        Ok(Verdict::new().eq("mp after pendant at simplicial v", before, after))
    });
}

pub(super) fn n_minus_one(ctx: &mut Ctx) {
    let corpus = exhaustive_corpus(3..=8);
    let rows = ctx.sweep_with(&corpus, |i| {
        let g = &i.graph;
        let n = g.order();
        let hit = mp(g)? + 1 == n;
        let recognized = is_k1_join_of_cliques(g) || is_clique_minus_star(g);
        let v = Verdict::new().holds(!hit || recognized, "mp = n - 1 graph matches a recognizer", "recognized", "neither structure");
        Ok((v, (n, hit, recognized)))
    });
    let mut per_order: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut converse = Vec::new();
    for ((n, hit, recognized), i) in rows.into_iter().zip(&corpus).filter_map(|(r, i)| r.map(|r| (r, i))) {
        let e = per_order.entry(n).or_default();
        e.0 += usize::from(hit);
        e.1 += usize::from(recognized);
        if recognized && !hit {
            converse.push(emit_graph6(&i.graph));
        }
    }
    ctx.observe("mp_n_minus_one_by_order", per_order.iter().map(|(n, (h, _))| (n.to_string(), h)).collect::<BTreeMap<_, _>>());
    ctx.observe("recognized_by_order", per_order.iter().map(|(n, (_, r))| (n.to_string(), r)).collect::<BTreeMap<_, _>>());
    ctx.observe("recognized_without_mp_n_minus_one", &converse);
}

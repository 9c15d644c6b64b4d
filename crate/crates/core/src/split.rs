//! Split graphs: recognition, separated subgraphs and the matching condition
//! for `φ(G) = max{ω(G), α(G)}`.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::matching::{max_bipartite_matching, max_deficiency_set};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: VertexSet,
    pub independent: VertexSet,
    /// A vertex of `independent` adjacent to all of `clique`.
    pub divided: Option<usize>,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        self.clique.universe() == n
            && self.independent.universe() == n
            && !self.clique.intersects(&self.independent)
            && self.clique.union(&self.independent).len() == n
            && g.is_clique(&self.clique)
            && g.is_independent(&self.independent)
            && self.divided.is_none_or(|v| {
                self.independent.contains(v) && self.clique.is_subset(g.neighbors(v))
            })
    }

    /// `ω(G)` read off the normalized partition.
    pub fn omega(&self) -> usize {
        self.clique.len() + usize::from(self.divided.is_some())
    }

    /// `α(G)` read off the normalized partition.
    pub fn alpha(&self) -> usize {
        self.independent.len()
    }

    /// The same split with the divided vertex (if any) back on the clique
    /// side.
    pub fn clique_side(&self) -> SplitPartition {
        let mut sp = self.clone();
        if let Some(v) = sp.divided.take() {
            sp.independent.remove(v);
            sp.clique.insert(v);
        }
        sp
    }
}

/// Recognizes split graphs by the degree-sequence test and returns the
/// normalized partition: the clique is the block of highest-degree vertices,
/// and a clique vertex with no neighbour in the independent side (if any) is
/// moved across as the divided vertex.
pub fn split_partition(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep ascending ids
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (0..n).rfind(|&i| d[i] >= i).map_or(0, |i| i + 1);
    let head: usize = d[..m].iter().sum();
    let tail: usize = d[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique = VertexSet::from_vertices(n, order[..m].iter().copied());
    let mut independent = clique.complement();
    assert!(
        g.is_clique(&clique) && g.is_independent(&independent),
        "degree test accepted a graph without a split partition"
    );
    let divided = clique.iter().find(|&v| !g.neighbors(v).intersects(&independent));
    if let Some(v) = divided {
        clique.remove(v);
        independent.insert(v);
    }
    Some(SplitPartition {
        clique,
        independent,
        divided,
    })
}

/// Which branch realized `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparatedKind {
    /// No edge between the chosen clique and independent parts.
    NoCrossEdges,
    /// A single independent vertex together with part of its clique
    /// neighbourhood.
    CliqueWithOne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separated {
    pub value: usize,
    pub witness: VertexSet,
    pub kind: SeparatedKind,
}

/// Largest separated subgraph. The edgeless-between branch is
/// `|C| + max_J (|J| - |N_C(J)|)`, taken from a maximum `C`–`I` matching.
pub fn phi_separated(g: &Graph, sp: &SplitPartition) -> Separated {
    let n = g.order();
    let c = &sp.clique;
    let i = &sp.independent;
    let m = max_bipartite_matching(g, i, c).expect("partition sides are disjoint");
    let j = max_deficiency_set(g, i, c, &m);
    let mut nj = VertexSet::new(n);
    for v in j.iter() {
        nj.union_with(&g.neighbors(v).intersection(c));
    }
    let separated = c.difference(&nj).union(&j);
    debug_assert_eq!(separated.len(), c.len() + i.len() - m.size);
    // J = I is one of the sets the deficiency maximum ranges over
    assert!(separated.len() >= i.len());

    let mut best = Separated {
        value: separated.len(),
        witness: separated,
        kind: SeparatedKind::NoCrossEdges,
    };
    for v in i.iter() {
        let mut s = g.neighbors(v).intersection(c);
        s.insert(v);
        if s.len() > best.value {
            best = Separated {
                value: s.len(),
                witness: s,
                kind: SeparatedKind::CliqueWithOne,
            };
        }
    }
    best
}

/// The matching condition under which `φ = max{ω, α}`: a `C`–`I` matching
/// saturating one side, with the divided vertex (if any) removed from `I`.
pub fn saturating_condition(g: &Graph, sp: &SplitPartition) -> bool {
    let mut i = sp.independent.clone();
    if let Some(v) = sp.divided {
        i.remove(v);
    }
    let m = max_bipartite_matching(g, &i, &sp.clique).expect("partition sides are disjoint");
    m.size == i.len() || m.size == sp.clique.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clique::{clique_number, independence_number};
    use rand::{Rng, SeedableRng};

    fn star(k: usize) -> Graph {
        Graph::from_edges(k + 1, &(1..=k).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }

    /// Built by repeatedly adding a dominating or an isolated vertex.
    fn threshold(n: usize, seed: u64) -> Graph {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let dominating: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        Graph::from_fn(n, |u, v| dominating[u.max(v)]).unwrap()
    }

    fn is_separated(g: &Graph, c: &VertexSet, i: &VertexSet) -> bool {
        let no_cross = c.iter().all(|u| !g.neighbors(u).intersects(i));
        no_cross || (i.len() == 1 && g.is_clique(&c.union(i)))
    }

    fn phi_brute(g: &Graph, sp: &SplitPartition) -> usize {
        let cv = sp.clique.to_vec();
        let iv = sp.independent.to_vec();
        let n = g.order();
        let mut best = 0;
        for cm in 0u32..1 << cv.len() {
            let c = VertexSet::from_vertices(n, (0..cv.len()).filter(|&k| cm >> k & 1 == 1).map(|k| cv[k]));
            for im in 0u32..1 << iv.len() {
                let i = VertexSet::from_vertices(n, (0..iv.len()).filter(|&k| im >> k & 1 == 1).map(|k| iv[k]));
                if is_separated(g, &c, &i) {
                    best = best.max(c.len() + i.len());
                }
            }
        }
        best
    }

    fn random_split(seed: u64) -> Graph {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let c = rng.gen_range(1..=5);
        let i = rng.gen_range(1..=5);
        let p = rng.gen_range(0.1..0.9);
        Graph::from_fn(c + i, |u, v| {
            let (lo, hi) = (u.min(v), u.max(v));
            hi < c || (lo < c && rng.gen_bool(p))
        })
        .unwrap()
    }

    #[test]
    fn star_and_cycle() {
        let sp = split_partition(&star(3)).unwrap();
        assert_eq!(sp.clique.to_vec(), vec![0]);
        assert_eq!(sp.independent.to_vec(), vec![1, 2, 3]);
        // a leaf is adjacent to all of C, so one is recorded as divided
        assert_eq!(sp.divided, Some(1));
        assert_eq!(phi_separated(&star(3), &sp).value, 3);
        assert!(split_partition(&Graph::cycle(4).unwrap()).is_none());
        assert!(split_partition(&Graph::cycle(5).unwrap()).is_none());
    }

    #[test]
    fn complete_graph_has_divided_vertex() {
        let g = Graph::complete(4);
        let sp = split_partition(&g).unwrap();
        assert_eq!(sp.divided, Some(0));
        assert_eq!((sp.omega(), sp.alpha()), (4, 1));
        let e = Graph::empty(3);
        let sp = split_partition(&e).unwrap();
        assert!(sp.clique.is_empty());
        assert_eq!((sp.omega(), sp.alpha()), (1, 3));
    }

    #[test]
    fn threshold_graphs_are_split() {
        for seed in 0..50 {
            let g = threshold(9, seed);
            let sp = split_partition(&g).expect("threshold graphs are split");
            assert!(sp.is_valid_for(&g));
        }
    }

    #[test]
    fn normalization_matches_clique_and_independence() {
        for seed in 0..200 {
            let g = random_split(seed);
            let sp = split_partition(&g).unwrap();
            assert!(sp.is_valid_for(&g), "seed {seed}");
            assert_eq!(sp.omega(), clique_number(&g).0, "seed {seed}");
            assert_eq!(sp.alpha(), independence_number(&g).0, "seed {seed}");
        }
    }

    #[test]
    fn phi_matches_exhaustive() {
        for seed in 0..200 {
            let g = random_split(seed + 1000);
            let sp = split_partition(&g).unwrap();
            let phi = phi_separated(&g, &sp);
            assert_eq!(phi.value, phi_brute(&g, &sp), "seed {seed}");
            assert_eq!(phi.witness.len(), phi.value);
            assert!(phi.value >= sp.omega().max(sp.alpha()));
        }
    }

    #[test]
    fn complete_split_graphs() {
        for c in 1..=5 {
            for i in 1..=5 {
                let g = Graph::from_fn(c + i, |u, v| u.min(v) < c).unwrap();
                let sp = split_partition(&g).unwrap();
                let phi = phi_separated(&g, &sp).value;
                assert_eq!(phi, phi_brute(&g, &sp));
                assert_eq!(phi, i.max(c + 1), "c={c} i={i}");
            }
        }
    }
}

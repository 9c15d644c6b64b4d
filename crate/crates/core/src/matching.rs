//! Maximum bipartite matching (Hopcroft–Karp) between two vertex sets.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// `(left, right)` pairs, sorted by the left vertex.
    pub pairs: Vec<(usize, usize)>,
    pub size: usize,
}

impl Matching {
    pub fn saturates(&self, side: &VertexSet) -> bool {
        side.iter()
            .all(|v| self.pairs.iter().any(|&(a, b)| a == v || b == v))
    }
}

const NIL: usize = usize::MAX;

/// Maximum matching using only edges with one end in `left` and the other in
/// `right`.
pub fn max_bipartite_matching(g: &Graph, left: &VertexSet, right: &VertexSet) -> Result<Matching> {
    if left.intersects(right) {
        return Err(Error::InvalidArgument("matching sides must be disjoint".into()));
    }
    let n = g.order();
    let lv = left.to_vec();
    let adj: Vec<Vec<usize>> = lv.iter().map(|&u| g.neighbors(u).intersection(right).to_vec()).collect();
    let mut match_l = vec![NIL; lv.len()];
    // right vertex id -> index into lv
    let mut match_r = vec![NIL; n];
    let mut dist = vec![0usize; lv.len()];

    loop {
        // BFS layers from free left vertices
        let mut queue = VecDeque::new();
        for (i, d) in dist.iter_mut().enumerate() {
            if match_l[i] == NIL {
                *d = 0;
                queue.push_back(i);
            } else {
                *d = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(i) = queue.pop_front() {
            for &r in &adj[i] {
                let j = match_r[r];
                if j == NIL {
                    found = true;
                } else if dist[j] == usize::MAX {
                    dist[j] = dist[i] + 1;
                    queue.push_back(j);
                }
            }
        }
        if !found {
            break;
        }
        for i in 0..lv.len() {
            if match_l[i] == NIL {
                augment(i, &adj, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }

    let pairs: Vec<(usize, usize)> = match_l
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r != NIL)
        .map(|(i, &r)| (lv[i], r))
        .collect();
    Ok(Matching { size: pairs.len(), pairs })
}

fn augment(i: usize, adj: &[Vec<usize>], match_l: &mut [usize], match_r: &mut [usize], dist: &mut [usize]) -> bool {
    for &r in &adj[i] {
        let j = match_r[r];
        if j == NIL || (dist[j] == dist[i] + 1 && augment(j, adj, match_l, match_r, dist)) {
            match_l[i] = r;
            match_r[r] = i;
            return true;
        }
    }
    dist[i] = usize::MAX;
    false
}

/// A left subset `J` with `|N(J) ∩ right| < |J|` (a Hall violator) of maximum
/// deficiency, read off a maximum matching: the left vertices reachable by
/// alternating paths from unmatched left vertices.
pub fn max_deficiency_set(g: &Graph, left: &VertexSet, right: &VertexSet, m: &Matching) -> VertexSet {
    let n = g.order();
    let mut mate = vec![NIL; n];
    for &(a, b) in &m.pairs {
        mate[a] = b;
        mate[b] = a;
    }
    let mut reached = VertexSet::new(n);
    let mut stack: Vec<usize> = left.iter().filter(|&v| mate[v] == NIL).collect();
    for &v in &stack {
        reached.insert(v);
    }
    while let Some(u) = stack.pop() {
        for r in g.neighbors(u).intersection(right).iter() {
            let w = mate[r];
            if w != NIL && reached.insert(w) {
                stack.push(w);
            }
        }
    }
    reached
}

#[cfg(test)]
mod tests {
    use super::*;

    fn side(n: usize, vs: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(n, vs)
    }

    fn brute(g: &Graph, left: &VertexSet, right: &VertexSet) -> usize {
        let edges: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(u, v)| (left.contains(u) && right.contains(v)) || (left.contains(v) && right.contains(u)))
            .collect();
        fn go(i: usize, used: &mut Vec<bool>, edges: &[(usize, usize)]) -> usize {
            if i == edges.len() {
                return 0;
            }
            let skip = go(i + 1, used, edges);
            let (u, v) = edges[i];
            if used[u] || used[v] {
                return skip;
            }
            used[u] = true;
            used[v] = true;
            let take = 1 + go(i + 1, used, edges);
            used[u] = false;
            used[v] = false;
            skip.max(take)
        }
        go(0, &mut vec![false; g.order()], &edges)
    }

    #[test]
    fn small_cases() {
        let k23 = Graph::complete_multipartite(&[2, 3]).unwrap();
        let m = max_bipartite_matching(&k23, &side(5, [0, 1]), &side(5, [2, 3, 4])).unwrap();
        assert_eq!(m.size, 2);
        assert!(m.saturates(&side(5, [0, 1])));

        for k in 2..8 {
            let c = Graph::cycle(2 * k).unwrap();
            let even = side(2 * k, (0..2 * k).step_by(2));
            let odd = even.complement();
            assert_eq!(max_bipartite_matching(&c, &even, &odd).unwrap().size, k);
        }
    }

    #[test]
    fn overlapping_sides_rejected() {
        let g = Graph::path(3);
        assert!(max_bipartite_matching(&g, &side(3, [0, 1]), &side(3, [1, 2])).is_err());
    }

    #[test]
    fn matches_exhaustive_and_deficiency() {
        use rand::{Rng, SeedableRng};
        for seed in 0..60 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=10);
            let p = rng.gen_range(0.1..0.7);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap();
            let left = side(n, (0..n).filter(|_| rng.gen_bool(0.5)));
            let right = left.complement();
            let m = max_bipartite_matching(&g, &left, &right).unwrap();
            assert_eq!(m.size, brute(&g, &left, &right), "seed {seed}");
            for &(a, b) in &m.pairs {
                assert!(g.adjacent(a, b) && left.contains(a) && right.contains(b));
            }
            // deficiency duality: |left| - |M| = max_J (|J| - |N(J)|)
            let j = max_deficiency_set(&g, &left, &right, &m);
            let mut nj = VertexSet::new(n);
            for v in j.iter() {
                nj.union_with(&g.neighbors(v).intersection(&right));
            }
            assert_eq!(j.len() - nj.len(), left.len() - m.size, "seed {seed}");
        }
    }
}

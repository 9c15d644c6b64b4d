//! Exact clique-type searches: clique and independence numbers, independent
//! unions of cliques, and dissociation sets.

use crate::bitset::{Bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{complement, Graph};
use crate::with_words;

/// Order cap for the exponential subset searches ([`alpha_omega`],
/// [`dissociation_number`]).
pub const ORACLE_CAP: usize = 20;

/// Greedy-narrowing to the witness that is smallest as an integer.
///
/// `current` must be an optimum of size `k`; `find(allowed)` returns some
/// solution of size `k` inside `allowed`, if one exists. Vertices are dropped
/// from the top down whenever an optimum survives without them.
pub(crate) fn lex_smallest<const W: usize, E>(
    n: usize,
    current: Bits<W>,
    mut find: impl FnMut(Bits<W>) -> std::result::Result<Option<Bits<W>>, E>,
) -> std::result::Result<Bits<W>, E> {
    let mut allowed = Bits::<W>::full(n);
    let mut current = current;
    for v in (0..n).rev() {
        if !current.contains(v) {
            allowed.remove(v);
            continue;
        }
        let trial = allowed.without(v);
        if let Some(s) = find(trial)? {
            allowed = trial;
            current = s;
        }
    }
    Ok(current)
}

struct CliqueSearch<'a, const W: usize> {
    adj: &'a [Bits<W>],
    best: Bits<W>,
    best_len: usize,
    target: usize,
}

impl<const W: usize> CliqueSearch<'_, W> {
    /// Greedy sequential colouring of `p`; returns vertices in colour order
    /// with the colour number (1-based) of each.
    fn color_sort(&self, p: Bits<W>) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(p.len());
        let mut uncolored = p;
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored;
            while let Some(v) = q.first() {
                q.remove(v);
                q -= self.adj[v];
                uncolored.remove(v);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, chosen: Bits<W>, size: usize, mut p: Bits<W>) {
        let order = self.color_sort(p);
        for &(v, color) in order.iter().rev() {
            if size + color <= self.best_len || self.best_len >= self.target {
                return;
            }
            let c = chosen.with(v);
            let np = p & self.adj[v];
            if np.is_empty() {
                if size + 1 > self.best_len {
                    self.best_len = size + 1;
                    self.best = c;
                }
            } else {
                self.expand(c, size + 1, np);
            }
            p.remove(v);
        }
    }
}

fn max_clique_within<const W: usize>(adj: &[Bits<W>], allowed: Bits<W>, target: usize) -> (usize, Bits<W>) {
    let mut s = CliqueSearch {
        adj,
        best: Bits::EMPTY,
        best_len: 0,
        target,
    };
    if !allowed.is_empty() {
        s.expand(Bits::EMPTY, 0, allowed);
    }
    (s.best_len, s.best)
}

fn clique_kernel<const W: usize>(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    let adj = g.bit_rows::<W>();
    let (k, found) = max_clique_within(&adj, Bits::full(n), usize::MAX);
    let witness = lex_smallest::<W, ()>(n, found, |allowed| {
        let (len, s) = max_clique_within(&adj, allowed, k);
        Ok((len >= k).then_some(s))
    })
    .expect("infallible");
    (k, VertexSet::from_bits(n, &witness))
}

/// Maximum clique by colour-bounded branch and bound; the witness is the
/// integer-smallest maximum clique.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    with_words!(g.order(), |W| clique_kernel::<W>(g))
}

/// `α(g) = ω(ḡ)`.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    clique_number(&complement(g))
}

fn require_cap(what: &'static str, g: &Graph) -> Result<()> {
    if g.order() > ORACLE_CAP {
        Err(Error::CapExceeded {
            what,
            order: g.order(),
            cap: ORACLE_CAP,
        })
    } else {
        Ok(())
    }
}

/// Include/exclude search from the highest id down, excluding first, so the
/// first optimum reached is the integer-smallest one. Orders are capped at
/// [`ORACLE_CAP`], so `u32` masks suffice.
fn subset_search(g: &Graph, mut feasible: impl FnMut(u32, usize) -> bool) -> (usize, VertexSet) {
    fn run(v: usize, chosen: u32, len: usize, best: &mut (usize, u32), feasible: &mut dyn FnMut(u32, usize) -> bool) {
        if len + v <= best.0 {
            return;
        }
        if v == 0 {
            *best = (len, chosen);
            return;
        }
        let u = v - 1;
        run(u, chosen, len, best, feasible);
        if feasible(chosen, u) {
            run(u, chosen | 1 << u, len + 1, best, feasible);
        }
    }
    let n = g.order();
    let mut best = (0, 0u32);
    run(n, 0, 0, &mut best, &mut feasible);
    (best.0, VertexSet::from_vertices(n, (0..n).filter(|&v| best.1 >> v & 1 == 1)))
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect()
}

/// Largest set inducing a disjoint union of cliques.
///
/// A vertex can join the current set only if its neighbours in the set form a
/// whole component of it (which is already a clique).
pub fn alpha_omega(g: &Graph) -> Result<(usize, VertexSet)> {
    require_cap("alpha_omega", g)?;
    let adj = masks(g);
    Ok(subset_search(g, |chosen, v| {
        let inside = adj[v] & chosen;
        let mut x = inside;
        while x != 0 {
            let u = x.trailing_zeros() as usize;
            x &= x - 1;
            // u's chosen neighbourhood must be exactly the rest of the component
            if (adj[u] & chosen) | (1 << u) != inside {
                return false;
            }
        }
        true
    }))
}

/// Largest set inducing maximum degree at most one.
pub fn dissociation_number(g: &Graph) -> Result<(usize, VertexSet)> {
    require_cap("dissociation_number", g)?;
    let adj = masks(g);
    Ok(subset_search(g, |chosen, v| {
        let inside = adj[v] & chosen;
        match inside.count_ones() {
            0 => true,
            1 => adj[inside.trailing_zeros() as usize] & chosen == 0,
            _ => false,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::join;

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    fn brute<F: Fn(&Graph, &VertexSet) -> bool>(g: &Graph, ok: F) -> (usize, VertexSet) {
        let n = g.order();
        let mut best = (0, VertexSet::new(n));
        for mask in 0u32..1 << n {
            let s = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            if s.len() > best.0 && ok(g, &s) {
                best = (s.len(), s);
            }
        }
        best
    }

    fn gnp(n: usize, seed: u64) -> Graph {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        Graph::from_fn(n, |_, _| rng.gen_bool(0.5)).unwrap()
    }

    fn is_union_of_cliques(g: &Graph, s: &VertexSet) -> bool {
        let closed = |u: usize| {
            let mut c = g.neighbors(u).intersection(s);
            c.insert(u);
            c
        };
        s.iter()
            .all(|u| s.iter().all(|v| !g.adjacent(u, v) || closed(u) == closed(v)))
    }

    fn max_degree_le1(g: &Graph, s: &VertexSet) -> bool {
        s.iter().all(|u| g.neighbors(u).intersection(s).len() <= 1)
    }

    #[test]
    fn clique_small_cases() {
        assert_eq!(clique_number(&petersen()).0, 2);
        assert_eq!(clique_number(&Graph::complete_multipartite(&[3, 3]).unwrap()).0, 2);
        assert_eq!(clique_number(&Graph::complete(7)).0, 7);
        assert_eq!(clique_number(&Graph::empty(3)), (1, VertexSet::from_vertices(3, [0])));
        assert_eq!(clique_number(&Graph::empty(0)).0, 0);
    }

    #[test]
    fn clique_and_independence_match_exhaustive_oracle() {
        for seed in 0..40 {
            let g = gnp(10, seed);
            let (k, w) = clique_number(&g);
            let (bk, bw) = brute(&g, |g, s| g.is_clique(s));
            assert_eq!(k, bk, "seed {seed}");
            assert!(g.is_clique(&w));
            // brute enumerates masks upward, so its first optimum is the smallest integer
            assert_eq!(w, bw, "seed {seed}");
            let (a, aw) = independence_number(&g);
            assert_eq!(a, brute(&g, |g, s| g.is_independent(s)).0);
            assert!(g.is_independent(&aw));
        }
    }

    #[test]
    fn clique_number_of_join_adds() {
        for seed in 0..10 {
            let g = gnp(6, seed);
            let h = gnp(5, seed + 100);
            let j = join(&g, &h).unwrap();
            assert_eq!(clique_number(&j).0, clique_number(&g).0 + clique_number(&h).0);
        }
    }

    #[test]
    fn independence_small_cases() {
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()).0, 2);
        assert_eq!(independence_number(&Graph::complete(6)).0, 1);
        assert_eq!(independence_number(&petersen()).0, 4);
    }

    #[test]
    fn alpha_omega_matches_oracle() {
        assert_eq!(alpha_omega(&Graph::complete(6)).unwrap().0, 6);
        // {0, 1, 3}: an edge plus a non-adjacent vertex
        assert_eq!(alpha_omega(&Graph::cycle(5).unwrap()).unwrap().0, 3);
        for seed in 0..40 {
            let g = gnp(9, seed);
            let (k, w) = alpha_omega(&g).unwrap();
            let (bk, bw) = brute(&g, is_union_of_cliques);
            assert_eq!(k, bk, "seed {seed}");
            assert_eq!(w, bw, "seed {seed}");
            assert!(k >= clique_number(&g).0.max(independence_number(&g).0));
        }
    }

    #[test]
    fn dissociation_matches_oracle() {
        assert_eq!(dissociation_number(&Graph::complete(5)).unwrap().0, 2);
        // path on five vertices a-b-c-d-e: {a,b,d,e}
        assert_eq!(dissociation_number(&Graph::path(5)).unwrap().0, 4);
        for seed in 0..40 {
            let g = gnp(9, seed + 7);
            let (k, w) = dissociation_number(&g).unwrap();
            let (bk, bw) = brute(&g, max_degree_le1);
            assert_eq!((k, &w), (bk, &bw), "seed {seed}");
        }
    }

    #[test]
    fn caps_enforced() {
        let g = Graph::empty(ORACLE_CAP + 1);
        assert!(matches!(alpha_omega(&g), Err(Error::CapExceeded { .. })));
        assert!(matches!(dissociation_number(&g), Err(Error::CapExceeded { .. })));
    }
}

//! Graph corpora for the checks: random models, named graphs and an
//! exhaustive list of small connected graphs.

use std::collections::HashSet;
use std::sync::OnceLock;

use monopos::families::{generate, FamilySpec};
use monopos::graph::{Graph, GraphBuilder};
use monopos::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A corpus member. `label` says how it was made; the graph6 string in a
/// failure record is what reproduces it.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
}

impl Instance {
    pub fn new(label: impl Into<String>, graph: Graph) -> Self {
        Instance {
            label: label.into(),
            graph,
        }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }
}

/// Independent stream per (suite seed, check).
pub fn check_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// G(n, p) conditioned on connectivity by rejection.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    loop {
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).expect("order within limit");
        if g.is_connected() {
            return g;
        }
    }
}

/// `count` connected G(n, p) graphs with `n` drawn from `orders` and `p`
/// from `[0.2, 0.7)`.
pub fn gnp_corpus(tag: &str, count: usize, orders: std::ops::RangeInclusive<usize>, rng: &mut impl Rng) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            let n = rng.gen_range(orders.clone());
            let p: f64 = rng.gen_range(0.2..0.7);
            Instance::new(format!("{tag}:gnp:n={n}:p={p:.3}:#{i}"), random_connected(n, p, rng))
        })
        .collect()
}

/// Connected cubic graph on `n` vertices by the pairing model.
pub fn random_cubic(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("no cubic graph of order {n}")));
    }
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    'retry: loop {
        points.shuffle(rng);
        let mut b = GraphBuilder::new(n)?;
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || b.has_edge(u, v) {
                continue 'retry;
            }
            b.add_edge(u, v)?;
        }
        let g = b.build();
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// Grows a distance-hereditary graph from `K_2` by random pendant, true twin
/// and false twin extensions.
pub fn random_distance_hereditary(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    if n < 2 {
        return Ok(Graph::empty(n));
    }
    let mut adj: Vec<Vec<usize>> = vec![vec![1], vec![0]];
    for v in 2..n {
        let u = rng.gen_range(0..v);
        let mut nbrs = match rng.gen_range(0..3) {
            0 => vec![u],
            1 => adj[u].clone(),
            _ => {
                let mut t = adj[u].clone();
                t.push(u);
                t
            }
        };
        nbrs.sort_unstable();
        for &w in &nbrs {
            adj[w].push(v);
        }
        adj.push(nbrs);
    }
    let mut b = GraphBuilder::new(n)?;
    for (u, list) in adj.iter().enumerate() {
        for &w in list {
            b.add_edge(u, w)?;
        }
    }
    Ok(b.build())
}

/// Canonical code: the lexicographically smallest upper-triangle adjacency
/// string over all orderings that sort vertices by a refined degree key.
/// Orders up to 11.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 11, "canonical_code supports orders up to 11");
    let deg = g.degrees();
    let key: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| key[a].cmp(&key[b]));
    // position i may hold any vertex whose key equals that of order[i]
    let class_of: Vec<usize> = {
        let mut c = vec![0; n];
        for i in 1..n {
            c[i] = c[i - 1] + usize::from(key[order[i]] != key[order[i - 1]]);
        }
        c
    };
    let members: Vec<Vec<usize>> = {
        let k = class_of.last().map_or(0, |&c| c + 1);
        let mut m = vec![Vec::new(); k];
        for i in 0..n {
            m[class_of[i]].push(order[i]);
        }
        m
    };

    struct Search<'a> {
        g: &'a Graph,
        class_of: &'a [usize],
        members: &'a [Vec<usize>],
        chosen: Vec<usize>,
        used: Vec<bool>,
        best: u64,
    }
    impl Search<'_> {
        fn go(&mut self, code: u64) {
            let i = self.chosen.len();
            let n = self.used.len();
            if i == n {
                self.best = self.best.min(code);
                return;
            }
            for &v in &self.members[self.class_of[i]] {
                if self.used[v] {
                    continue;
                }
                let mut c = code;
                for &u in &self.chosen {
                    c = c << 1 | u64::from(self.g.adjacent(u, v));
                }
                // codes of equal length compare as integers, so prune on prefix
                let rest = (n * (n - 1) / 2) - (i * (i + 1) / 2);
                if (c << rest) > self.best {
                    continue;
                }
                self.used[v] = true;
                self.chosen.push(v);
                self.go(c);
                self.chosen.pop();
                self.used[v] = false;
            }
        }
    }
    let mut s = Search {
        g,
        class_of: &class_of,
        members: &members,
        chosen: Vec::with_capacity(n),
        used: vec![false; n],
        best: u64::MAX,
    };
    s.go(0);
    s.best
}

/// All connected graphs of order `n` up to isomorphism, `1 <= n <= 9`.
/// Each connected graph has a vertex whose removal keeps it connected, so
/// extending every order `n - 1` graph by a vertex with a non-empty
/// neighbourhood reaches every class.
pub fn connected_graphs(n: usize) -> &'static [Graph] {
    static TABLE: [OnceLock<Vec<Graph>>; 10] = [const { OnceLock::new() }; 10];
    assert!((1..=9).contains(&n), "exhaustive lists cover orders 1 to 9");
    TABLE[n].get_or_init(|| {
        if n == 1 {
            return vec![Graph::empty(1)];
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in connected_graphs(n - 1) {
            for mask in 1u32..1 << (n - 1) {
                let mut b = extended(g, n);
                for u in 0..n - 1 {
                    if mask >> u & 1 == 1 {
                        b.add_edge(u, n - 1).expect("in range");
                    }
                }
                let h = b.build();
                if seen.insert(canonical_code(&h)) {
                    out.push(h);
                }
            }
        }
        out
    })
}

/// Connected graphs of every order in `orders`, labelled by order and index.
pub fn exhaustive_corpus(orders: std::ops::RangeInclusive<usize>) -> Vec<Instance> {
    orders
        .flat_map(|n| {
            connected_graphs(n)
                .iter()
                .enumerate()
                .map(move |(i, g)| Instance::new(format!("connected:n={n}:#{i}"), g.clone()))
        })
        .collect()
}

/// Generated family instances.
pub fn family_corpus(specs: &[&str]) -> Vec<Instance> {
    specs
        .iter()
        .map(|s| {
            let spec: FamilySpec = s.parse().expect("manifest specs parse");
            let g = generate(&spec).expect("manifest specs are in domain").graph;
            Instance::new(spec.to_string(), g)
        })
        .collect()
}

fn extended(g: &Graph, n: usize) -> GraphBuilder {
    let mut b = GraphBuilder::new(n).expect("order within limit");
    for (u, v) in g.edges() {
        b.add_edge(u, v).expect("in range");
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use monopos::invariants::is_distance_hereditary;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
        assert!(connected_graphs(6).iter().all(|g| g.is_connected()));
    }

    #[test]
    fn canonical_code_is_invariant() {
        let mut rng = check_rng(7, 0);
        for _ in 0..50 {
            let n = rng.gen_range(2..=9);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(0.4)).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_code(&g), canonical_code(&g.permuted(&perm)));
        }
        let p4 = Graph::path(4);
        let k13 = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        assert_ne!(canonical_code(&p4), canonical_code(&k13));
    }

    #[test]
    fn random_models() {
        let mut rng = check_rng(1, 2);
        for n in [4, 8, 12, 20] {
            let g = random_cubic(n, &mut rng).unwrap();
            assert!(g.is_connected() && g.degrees().iter().all(|&d| d == 3));
        }
        assert!(random_cubic(7, &mut rng).is_err());
        for n in 2..=12 {
            let g = random_distance_hereditary(n, &mut rng).unwrap();
            assert!(g.is_connected());
            assert!(is_distance_hereditary(&g).unwrap());
        }
        let c = gnp_corpus("t", 10, 3..=6, &mut rng);
        assert!(c.iter().all(|i| i.graph.is_connected() && (3..=6).contains(&i.order())));
    }
}

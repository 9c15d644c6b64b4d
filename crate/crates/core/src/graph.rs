//! Simple undirected graphs with bitset adjacency, plus the standard
//! constructions (complement, join, corona, Cartesian product, pendants).

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::{Bits, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted anywhere in the crate (eight 64-bit words).
pub const MAX_ORDER: usize = 512;

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Incremental construction of a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::CapExceeded {
                what: "graph",
                order: n,
                cap: MAX_ORDER,
            });
        }
        Ok(GraphBuilder {
            n,
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Adds the edge `uv`; loops are rejected, repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
            labels: None,
        }
    }
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).expect("order within cap").build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds a graph from an adjacency predicate evaluated on all pairs `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Graph> {
        let mut b = GraphBuilder::new(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    b.add_edge(u, v)?;
                }
            }
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).expect("order within cap")
    }

    /// Path on `order` vertices `0 - 1 - ... - (order-1)`.
    pub fn path(order: usize) -> Graph {
        Graph::from_fn(order, |u, v| v == u + 1).expect("order within cap")
    }

    /// Cycle on `n >= 3` vertices in label order.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::domain(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    /// Complete multipartite graph with the given part sizes, parts laid out
    /// consecutively.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        let mut part_of = Vec::new();
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, p));
        }
        Graph::from_fn(part_of.len(), |u, v| part_of[u] != part_of[v])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Adjacency rows as fixed-width blocks for the kernels.
    pub fn bit_rows<const W: usize>(&self) -> Vec<Bits<W>> {
        self.adj.iter().map(|s| s.to_bits::<W>()).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| !self.adj[u].intersects(s))
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            let mut queue = VecDeque::from([s]);
            seen.insert(s);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for w in self.adj[u].iter() {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in increasing order of
    /// the original ids; the second component maps new ids to old ones.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let g = Graph::from_fn(map.len(), |a, b| self.adjacent(map[a], map[b]))
            .expect("subgraph order within cap");
        (g, map)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut b = GraphBuilder::new(self.n).expect("same order");
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]).expect("valid permutation");
        }
        b.build()
    }

    /// Copy of the graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut b = self.to_builder();
        b.add_edge(u, v)?;
        Ok(b.build())
    }

    pub fn to_builder(&self) -> GraphBuilder {
        GraphBuilder {
            n: self.n,
            adj: self.adj.clone(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// `u ~ v` in the result iff `u != v` and `u` is not adjacent to `v` in `g`.
pub fn complement(g: &Graph) -> Graph {
    Graph::from_fn(g.order(), |u, v| !g.adjacent(u, v)).expect("same order")
}

/// Disjoint union; `h`'s vertices are offset by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.order();
    let mut b = GraphBuilder::new(off + h.order())?;
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        b.add_edge(u + off, v + off)?;
    }
    Ok(b.build())
}

/// `g ∨ h`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let off = g.order();
    let mut b = disjoint_union(g, h)?.to_builder();
    for u in 0..off {
        for v in 0..h.order() {
            b.add_edge(u, v + off)?;
        }
    }
    Ok(b.build())
}

/// `g ⊙ h`: vertices of `g` first, then copy `i` of `h` (joined to vertex `i`
/// of `g`) at offset `g.order() + i * h.order()`.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    g.require_connected()?;
    let n = g.order();
    let k = h.order();
    let mut b = GraphBuilder::new(n * (1 + k))?;
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
    }
    for i in 0..n {
        let off = n + i * k;
        for (u, v) in h.edges() {
            b.add_edge(off + u, off + v)?;
        }
        for x in 0..k {
            b.add_edge(i, off + x)?;
        }
    }
    Ok(b.build())
}

/// `g □ h` with pair `(a, x)` at id `a * h.order() + x`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let k = h.order();
    let mut b = GraphBuilder::new(g.order() * k)?;
    for a in 0..g.order() {
        for (x, y) in h.edges() {
            b.add_edge(a * k + x, a * k + y)?;
        }
    }
    for (a, c) in g.edges() {
        for x in 0..k {
            b.add_edge(a * k + x, c * k + x)?;
        }
    }
    Ok(b.build())
}

/// Appends a new vertex `g.order()` adjacent only to `v`.
pub fn add_pendant(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut b = GraphBuilder::new(g.order() + 1)?;
    for (x, y) in g.edges() {
        b.add_edge(x, y)?;
    }
    b.add_edge(v, g.order())?;
    Ok(b.build())
}

/// Hypercube `Q_k` on `2^k` vertices; `u ~ v` iff their ids differ in one bit.
pub fn hypercube(k: u32) -> Result<Graph> {
    let n = 1usize
        .checked_shl(k)
        .filter(|&n| n <= MAX_ORDER)
        .ok_or(Error::CapExceeded {
            what: "hypercube",
            order: usize::MAX,
            cap: MAX_ORDER,
        })?;
    Graph::from_fn(n, |u, v| (u ^ v).is_power_of_two())
}

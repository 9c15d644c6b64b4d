//! Classical invariants: distances, cut vertices and blocks, simplicial
//! vertices, bipartitions and uniform sets, distance-hereditary recognition.

use std::collections::{HashMap, VecDeque};

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

/// All-pairs hop distances; `None` across components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distances {
    n: usize,
    d: Vec<u32>,
}

impl Distances {
    const INF: u32 = u32::MAX;

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.d[u * self.n + v] {
            Self::INF => None,
            x => Some(x as usize),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Largest finite distance (0 for graphs with fewer than two vertices).
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for &x in &self.d {
            if x == Self::INF {
                return None;
            }
            best = best.max(x as usize);
        }
        Some(best)
    }

    /// Vertices on at least one shortest `u,v`-path, endpoints included.
    /// Disconnected pairs give `{u, v}`.
    pub fn geodesic_interval(&self, u: usize, v: usize) -> VertexSet {
        let mut s = VertexSet::new(self.n);
        s.insert(u);
        s.insert(v);
        if let Some(duv) = self.get(u, v) {
            for y in 0..self.n {
                if let (Some(a), Some(b)) = (self.get(u, y), self.get(y, v)) {
                    if a + b == duv {
                        s.insert(y);
                    }
                }
            }
        }
        s
    }
}

/// Breadth-first distances from every vertex.
pub fn distance_matrix(g: &Graph) -> Distances {
    let n = g.order();
    let mut d = vec![Distances::INF; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for w in g.neighbors(u).iter() {
                if row[w] == Distances::INF {
                    row[w] = du + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    Distances { n, d }
}

/// Articulation vertices of a connected graph.
pub fn cut_vertices(g: &Graph) -> Result<VertexSet> {
    g.require_connected()?;
    Ok(BlockDecomposition::new(g).cut)
}

/// Maximal 2-connected subgraphs (bridges and isolated vertices included) as
/// vertex sets, in discovery order.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    BlockDecomposition::new(g).blocks
}

struct BlockDecomposition {
    cut: VertexSet,
    blocks: Vec<VertexSet>,
}

impl BlockDecomposition {
    // Iterative Hopcroft–Tarjan with an explicit edge stack.
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = VertexSet::new(n);
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut time = 0;
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if nbrs[root].is_empty() {
                blocks.push(VertexSet::from_vertices(n, [root]));
                disc[root] = time;
                time += 1;
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.last_mut() {
                let (u, parent) = (top.0, top.1);
                if top.2 < nbrs[u].len() {
                    let w = nbrs[u][top.2];
                    top.2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push((u, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if disc[w] < disc[u] {
                        edge_stack.push((u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            if parent != root {
                                cut.insert(parent);
                            }
                            let mut block = VertexSet::new(n);
                            while let Some((a, b)) = edge_stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (parent, u) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children >= 2 {
                cut.insert(root);
            }
        }
        BlockDecomposition { cut, blocks }
    }
}

/// Every block is a clique.
pub fn is_block_graph(g: &Graph) -> bool {
    blocks(g).iter().all(|b| g.is_clique(b))
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    g.is_clique(g.neighbors(v))
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    VertexSet::from_vertices(g.order(), (0..g.order()).filter(|&v| is_simplicial(g, v)))
}

/// Vertices of degree one.
pub fn leaves(g: &Graph) -> VertexSet {
    VertexSet::from_vertices(g.order(), (0..g.order()).filter(|&v| g.degree(v) == 1))
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl Bipartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side_a.union(&self.side_b) == g.vertices()
            && !self.side_a.intersects(&self.side_b)
            && g.is_independent(&self.side_a)
            && g.is_independent(&self.side_b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoColoring {
    Bipartite(Bipartition),
    /// Vertices of an odd cycle in cyclic order.
    OddCycle(Vec<usize>),
}

/// BFS 2-colouring of a connected graph; side A holds vertex 0.
pub fn bipartition(g: &Graph) -> Result<TwoColoring> {
    g.require_connected()?;
    let n = g.order();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    if n == 0 {
        return Ok(TwoColoring::Bipartite(Bipartition {
            side_a: VertexSet::new(0),
            side_b: VertexSet::new(0),
        }));
    }
    color[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u).iter() {
            if color[w] == u8::MAX {
                color[w] = 1 - color[u];
                parent[w] = u;
                depth[w] = depth[u] + 1;
                queue.push_back(w);
            } else if color[w] == color[u] {
                // Walk both ends up to their common ancestor.
                let (mut a, mut b) = (u, w);
                let mut left = vec![a];
                let mut right = vec![b];
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                        left.push(a);
                    } else {
                        b = parent[b];
                        right.push(b);
                    }
                }
                right.pop();
                right.reverse();
                left.extend(right);
                return Ok(TwoColoring::OddCycle(left));
            }
        }
    }
    let side_a = VertexSet::from_vertices(n, (0..n).filter(|&v| color[v] == 0));
    let side_b = side_a.complement();
    Ok(TwoColoring::Bipartite(Bipartition { side_a, side_b }))
}

/// Maximum uniform set: the largest neighbourhood class on each side,
/// combined. Ties go to the class that is smallest as an integer.
pub fn psi_uniform(g: &Graph, bp: &Bipartition) -> (usize, VertexSet) {
    let best_class = |side: &VertexSet| -> VertexSet {
        let mut classes: HashMap<&VertexSet, VertexSet> = HashMap::new();
        for v in side.iter() {
            classes
                .entry(g.neighbors(v))
                .or_insert_with(|| VertexSet::new(g.order()))
                .insert(v);
        }
        classes
            .into_values()
            .max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a)))
            .unwrap_or_else(|| VertexSet::new(g.order()))
    };
    let witness = best_class(&bp.side_a).union(&best_class(&bp.side_b));
    (witness.len(), witness)
}

/// Recognition by pruning: a connected graph is distance-hereditary iff it
/// shrinks to one vertex by repeatedly deleting a pendant vertex or one of a
/// pair of (true or false) twins.
pub fn is_distance_hereditary(g: &Graph) -> Result<bool> {
    g.require_connected()?;
    let mut alive = g.vertices();
    let nbr = |v: usize, alive: &VertexSet| g.neighbors(v).intersection(alive);
    'outer: while alive.len() > 1 {
        let vs = alive.to_vec();
        for &v in &vs {
            if nbr(v, &alive).len() == 1 {
                alive.remove(v);
                continue 'outer;
            }
        }
        for (i, &u) in vs.iter().enumerate() {
            let nu = nbr(u, &alive);
            for &v in &vs[i + 1..] {
                let mut nv = nbr(v, &alive);
                let mut nu2 = nu.clone();
                // compare N(u) - v with N(v) - u: covers both twin kinds
                nu2.remove(v);
                nv.remove(u);
                if nu2 == nv {
                    alive.remove(v);
                    continue 'outer;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{complement, corona};

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    #[test]
    fn distances_on_cycle_and_complete() {
        let d = distance_matrix(&Graph::cycle(6).unwrap());
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.diameter(), Some(3));
        let k = distance_matrix(&Graph::complete(5));
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(k.get(u, v), Some(usize::from(u != v)));
            }
        }
        assert_eq!(distance_matrix(&petersen()).diameter(), Some(2));
        assert_eq!(distance_matrix(&Graph::empty(2)).get(0, 1), None);
    }

    #[test]
    fn cut_vertices_basic() {
        assert_eq!(cut_vertices(&Graph::path(5)).unwrap().to_vec(), vec![1, 2, 3]);
        assert!(cut_vertices(&Graph::cycle(7).unwrap()).unwrap().is_empty());
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(cut_vertices(&star).unwrap().to_vec(), vec![0]);
        assert_eq!(cut_vertices(&Graph::empty(2)), Err(Error::Disconnected));
    }

    #[test]
    fn cut_vertices_match_removal_oracle() {
        let g = corona(&Graph::cycle(4).unwrap(), &Graph::path(2)).unwrap();
        let cut = cut_vertices(&g).unwrap();
        for v in 0..g.order() {
            let rest = g.vertices().difference(&VertexSet::from_vertices(g.order(), [v]));
            let (h, _) = g.induced_subgraph(&rest);
            assert_eq!(cut.contains(v), !h.is_connected(), "vertex {v}");
        }
    }

    #[test]
    fn blocks_of_block_graph() {
        // two triangles sharing vertex 2, plus pendant 5 on 4
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        let bs = blocks(&g);
        assert_eq!(bs.len(), 3);
        assert!(is_block_graph(&g));
        assert!(!is_block_graph(&Graph::cycle(4).unwrap()));
    }

    #[test]
    fn simplicial_counts() {
        assert_eq!(simplicial_vertices(&Graph::path(6)).to_vec(), vec![0, 5]);
        assert_eq!(simplicial_vertices(&Graph::complete(5)).len(), 5);
        assert!(simplicial_vertices(&Graph::cycle(5).unwrap()).is_empty());
    }

    #[test]
    fn bipartition_cycles() {
        match bipartition(&Graph::cycle(6).unwrap()).unwrap() {
            TwoColoring::Bipartite(bp) => {
                assert_eq!(bp.side_a.to_vec(), vec![0, 2, 4]);
                assert_eq!(bp.side_b.to_vec(), vec![1, 3, 5]);
            }
            other => panic!("{other:?}"),
        }
        let c5 = Graph::cycle(5).unwrap();
        match bipartition(&c5).unwrap() {
            TwoColoring::OddCycle(cyc) => {
                assert_eq!(cyc.len() % 2, 1);
                for i in 0..cyc.len() {
                    assert!(c5.adjacent(cyc[i], cyc[(i + 1) % cyc.len()]));
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn psi_values() {
        let bp_of = |g: &Graph| match bipartition(g).unwrap() {
            TwoColoring::Bipartite(bp) => bp,
            _ => unreachable!(),
        };
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(psi_uniform(&c4, &bp_of(&c4)).0, 4);
        let k34 = Graph::complete_multipartite(&[3, 4]).unwrap();
        assert_eq!(psi_uniform(&k34, &bp_of(&k34)).0, 7);
        let p5 = Graph::path(5);
        assert_eq!(psi_uniform(&p5, &bp_of(&p5)).0, 2);
    }

    #[test]
    fn distance_hereditary_small() {
        assert!(is_distance_hereditary(&Graph::cycle(4).unwrap()).unwrap());
        assert!(!is_distance_hereditary(&Graph::cycle(5).unwrap()).unwrap());
        assert!(is_distance_hereditary(&Graph::path(7)).unwrap());
        assert!(!is_distance_hereditary(&petersen()).unwrap());
        assert!(is_distance_hereditary(&complement(&Graph::path(4))).unwrap());
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(girth(&petersen()), Some(5));
        assert_eq!(girth(&Graph::path(5)), None);
        assert_eq!(girth(&Graph::complete(4)), Some(3));
        assert_eq!(girth(&Graph::cycle(8).unwrap()), Some(8));
    }
}

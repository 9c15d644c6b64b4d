//! Induced (monophonic) paths: enumeration, intervals `K[u,v]`, closures,
//! hulls, interior vertices, the longest induced path and induced-path
//! partitions.
//!
//! Every search extends a path `p_0, ..., p_k` only into neighbours of `p_k`
//! outside `N[p_0] ∪ ... ∪ N[p_{k-1}]`. That keeps every prefix induced,
//! including the endpoint pair, so a walk such as `0,4,3,2,1` in `C_5` is
//! never produced.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::hash::{Hash, Hasher};

use crate::bitset::{Bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::with_words;

/// Default node-expansion budget for one enumeration.
pub const DEFAULT_BUDGET: u64 = 10_000_000;
/// Order cap for [`longest_induced_path_length`].
pub const LONGEST_PATH_CAP: usize = 30;
/// Order cap for [`induced_path_partition`].
pub const PARTITION_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryMode {
    /// Union of the vertices of all induced `u,v`-paths.
    CollectVertices,
    /// Stop at the first induced `u,v`-path through the given vertex.
    EarlyExitOn(usize),
    CountOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedPathQuery {
    pub u: usize,
    pub v: usize,
    pub mode: QueryMode,
    pub budget: Option<u64>,
}

impl InducedPathQuery {
    pub fn new(u: usize, v: usize, mode: QueryMode) -> Self {
        InducedPathQuery { u, v, mode, budget: None }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathAggregate {
    /// Empty when no induced path exists.
    Vertices(VertexSet),
    Hit(bool),
    Count(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryResult {
    pub aggregate: PathAggregate,
    pub expansions: u64,
}

fn limit_error(limit: u64) -> Error {
    Error::LimitExceeded {
        what: "induced path enumeration",
        limit,
    }
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn new(limit: Option<u64>) -> Self {
        Budget {
            used: 0,
            limit: limit.unwrap_or(DEFAULT_BUDGET),
        }
    }

    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(limit_error(self.limit))
        } else {
            Ok(())
        }
    }
}

fn closed_rows<const W: usize>(adj: &[Bits<W>]) -> Vec<Bits<W>> {
    adj.iter().enumerate().map(|(v, &r)| r.with(v)).collect()
}

/// Whether `to` is reachable from `from` through `allowed` (with `from`
/// itself exempt).
fn reachable<const W: usize>(adj: &[Bits<W>], from: usize, to: usize, allowed: Bits<W>) -> bool {
    let mut seen = Bits::<W>::singleton(from);
    let mut frontier = seen;
    while !frontier.is_empty() {
        if seen.contains(to) {
            return true;
        }
        let mut next = Bits::EMPTY;
        for x in frontier.iter() {
            next |= adj[x];
        }
        frontier = next & (allowed - seen);
        seen |= frontier;
    }
    seen.contains(to)
}

struct PairSearch<'a, const W: usize> {
    adj: &'a [Bits<W>],
    closed: Vec<Bits<W>>,
    v: usize,
    mode: QueryMode,
    budget: Budget,
    union: Bits<W>,
    count: u64,
    hit: bool,
}

impl<const W: usize> PairSearch<'_, W> {
    fn run(&mut self, last: usize, forbidden: Bits<W>, on_path: Bits<W>) -> Result<()> {
        if last == self.v {
            self.union |= on_path;
            self.count += 1;
            if let QueryMode::EarlyExitOn(w) = self.mode {
                self.hit |= on_path.contains(w);
            }
            return Ok(());
        }
        let next_forbidden = forbidden | self.closed[last];
        if next_forbidden.contains(self.v) && !self.adj[last].contains(self.v) {
            return Ok(());
        }
        for w in (self.adj[last] - forbidden).iter() {
            if self.hit {
                return Ok(());
            }
            self.budget.spend()?;
            if w != self.v && !reachable(self.adj, w, self.v, !next_forbidden) {
                continue;
            }
            self.run(w, next_forbidden, on_path.with(w))?;
        }
        Ok(())
    }
}

fn pair_kernel<const W: usize>(g: &Graph, q: &InducedPathQuery) -> Result<QueryResult> {
    let adj = g.bit_rows::<W>();
    let mut s = PairSearch {
        closed: closed_rows(&adj),
        adj: &adj,
        v: q.v,
        mode: q.mode,
        budget: Budget::new(q.budget),
        union: Bits::EMPTY,
        count: 0,
        hit: false,
    };
    s.run(q.u, Bits::EMPTY, Bits::singleton(q.u))?;
    let aggregate = match q.mode {
        QueryMode::CollectVertices => PathAggregate::Vertices(VertexSet::from_bits(g.order(), &s.union)),
        QueryMode::EarlyExitOn(_) => PathAggregate::Hit(s.hit),
        QueryMode::CountOnly => PathAggregate::Count(s.count),
    };
    Ok(QueryResult {
        aggregate,
        expansions: s.budget.used,
    })
}

/// Runs one induced-path query between distinct vertices. Exhausting the
/// budget is an error, never a partial answer.
pub fn enumerate_induced_paths(g: &Graph, q: &InducedPathQuery) -> Result<QueryResult> {
    g.check_vertex(q.u)?;
    g.check_vertex(q.v)?;
    if q.u == q.v {
        return Err(Error::InvalidArgument("query endpoints must differ".into()));
    }
    if q.budget == Some(0) {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    if let QueryMode::EarlyExitOn(w) = q.mode {
        g.check_vertex(w)?;
    }
    with_words!(g.order(), |W| pair_kernel::<W>(g, q))
}

/// Calls `f` on every induced `u,v`-path in depth-first order (neighbours
/// ascending). Returns the number of paths.
pub fn for_each_induced_path(
    g: &Graph,
    u: usize,
    v: usize,
    budget: Option<u64>,
    mut f: impl FnMut(&[usize]),
) -> Result<u64> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    fn go(
        g: &Graph,
        v: usize,
        path: &mut Vec<usize>,
        forbidden: &VertexSet,
        budget: &mut Budget,
        f: &mut dyn FnMut(&[usize]),
        count: &mut u64,
    ) -> Result<()> {
        let last = *path.last().expect("non-empty path");
        if last == v {
            f(path);
            *count += 1;
            return Ok(());
        }
        let mut next = forbidden.union(g.neighbors(last));
        next.insert(last);
        for w in g.neighbors(last).difference(forbidden).iter() {
            budget.spend()?;
            path.push(w);
            go(g, v, path, &next, budget, f, count)?;
            path.pop();
        }
        Ok(())
    }
    let mut count = 0;
    let mut budget = Budget::new(budget);
    go(g, v, &mut vec![u], &VertexSet::new(g.order()), &mut budget, &mut f, &mut count)?;
    Ok(count)
}

/// Memo of intervals for one graph.
#[derive(Debug, Clone)]
pub struct IntervalCache {
    fingerprint: u64,
    budget: Option<u64>,
    map: HashMap<(usize, usize), VertexSet>,
}

fn fingerprint(g: &Graph) -> u64 {
    let mut h = DefaultHasher::new();
    g.hash(&mut h);
    h.finish()
}

impl IntervalCache {
    pub fn new(g: &Graph) -> Self {
        IntervalCache {
            fingerprint: fingerprint(g),
            budget: None,
            map: HashMap::new(),
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = Some(budget);
        self
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// `K[u,v]`: all vertices on some induced `u,v`-path. Pairs in different
/// components get `{u, v}`, and `K[u,u] = {u}`.
pub fn monophonic_interval(g: &Graph, u: usize, v: usize, cache: &mut IntervalCache) -> Result<VertexSet> {
    if cache.fingerprint != fingerprint(g) {
        return Err(Error::InvalidArgument("interval cache belongs to a different graph".into()));
    }
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Ok(VertexSet::from_vertices(g.order(), [u]));
    }
    let key = (u.min(v), u.max(v));
    if let Some(k) = cache.map.get(&key) {
        return Ok(k.clone());
    }
    let mut q = InducedPathQuery::new(key.0, key.1, QueryMode::CollectVertices);
    q.budget = cache.budget;
    let mut k = match enumerate_induced_paths(g, &q)?.aggregate {
        PathAggregate::Vertices(s) => s,
        _ => unreachable!("collect mode returns vertices"),
    };
    k.insert(u);
    k.insert(v);
    cache.map.insert(key, k.clone());
    Ok(k)
}

/// All intervals of a graph, computed by one induced-path search per source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Intervals {
    n: usize,
    k: Vec<VertexSet>,
}

struct SourceSearch<'a, const W: usize> {
    adj: &'a [Bits<W>],
    closed: &'a [Bits<W>],
    rows: Vec<Bits<W>>,
    budget: Budget,
}

impl<const W: usize> SourceSearch<'_, W> {
    // every prefix of an induced path is induced, so each node of the search
    // contributes its path to the interval of its two ends
    fn run(&mut self, last: usize, forbidden: Bits<W>, on_path: Bits<W>) -> Result<()> {
        self.rows[last] |= on_path;
        let next_forbidden = forbidden | self.closed[last];
        for w in (self.adj[last] - forbidden).iter() {
            self.budget.spend()?;
            self.run(w, next_forbidden, on_path.with(w))?;
        }
        Ok(())
    }
}

fn all_kernel<const W: usize>(g: &Graph, budget: Option<u64>) -> Result<Intervals> {
    let n = g.order();
    let adj = g.bit_rows::<W>();
    let closed = closed_rows(&adj);
    let mut k = Vec::with_capacity(n * n);
    for u in 0..n {
        let mut s = SourceSearch {
            adj: &adj,
            closed: &closed,
            rows: vec![Bits::EMPTY; n],
            budget: Budget::new(budget),
        };
        s.run(u, Bits::EMPTY, Bits::singleton(u))?;
        for (v, row) in s.rows.iter().enumerate() {
            let mut set = VertexSet::from_bits(n, row);
            set.insert(u);
            set.insert(v);
            k.push(set);
        }
    }
    Ok(Intervals { n, k })
}

/// All intervals with the default budget per source vertex.
pub fn all_intervals(g: &Graph) -> Result<Intervals> {
    all_intervals_with_budget(g, DEFAULT_BUDGET)
}

pub fn all_intervals_with_budget(g: &Graph, budget: u64) -> Result<Intervals> {
    if budget == 0 {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    with_words!(g.order(), |W| all_kernel::<W>(g, Some(budget)))
}

fn require_nonempty(m: &VertexSet, at_least: usize) -> Result<()> {
    if m.len() < at_least {
        Err(Error::InvalidArgument(format!("vertex set needs at least {at_least} element(s)")))
    } else {
        Ok(())
    }
}

impl Intervals {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &VertexSet {
        &self.k[u * self.n + v]
    }

    /// `K[M]`, the union of `K[u,v]` over `u, v ∈ M`.
    pub fn closure(&self, m: &VertexSet) -> VertexSet {
        let vs = m.to_vec();
        let mut out = m.clone();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                out.union_with(self.get(u, v));
            }
        }
        out
    }

    /// Iterates the closure to its fixpoint `[M]_m`; also returns the number
    /// of closure steps that changed the set.
    pub fn hull(&self, m: &VertexSet) -> (VertexSet, usize) {
        let mut cur = m.clone();
        let mut steps = 0;
        loop {
            let next = self.closure(&cur);
            if next == cur {
                return (cur, steps);
            }
            cur = next;
            steps += 1;
        }
    }

    /// `M⁰ = { u ∈ M : u ∈ K[M - u] }`.
    pub fn interior(&self, m: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for u in m.iter() {
            let mut rest = m.clone();
            rest.remove(u);
            if self.closure(&rest).contains(u) {
                out.insert(u);
            }
        }
        out
    }
}

fn pairwise_union(g: &Graph, m: &VertexSet, cache: &mut IntervalCache) -> Result<VertexSet> {
    let vs = m.to_vec();
    let mut out = m.clone();
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            out.union_with(&monophonic_interval(g, u, v, cache)?);
        }
    }
    Ok(out)
}

pub fn monophonic_closure(g: &Graph, m: &VertexSet) -> Result<VertexSet> {
    require_nonempty(m, 1)?;
    pairwise_union(g, m, &mut IntervalCache::new(g))
}

pub fn monophonic_hull(g: &Graph, m: &VertexSet) -> Result<(VertexSet, usize)> {
    require_nonempty(m, 1)?;
    let mut cache = IntervalCache::new(g);
    let mut cur = m.clone();
    let mut steps = 0;
    loop {
        let next = pairwise_union(g, &cur, &mut cache)?;
        if next == cur {
            return Ok((cur, steps));
        }
        cur = next;
        steps += 1;
    }
}

pub fn interior_vertices(g: &Graph, m: &VertexSet) -> Result<VertexSet> {
    require_nonempty(m, 2)?;
    let mut cache = IntervalCache::new(g);
    let mut out = VertexSet::new(g.order());
    for u in m.iter() {
        let mut rest = m.clone();
        rest.remove(u);
        if pairwise_union(g, &rest, &mut cache)?.contains(u) {
            out.insert(u);
        }
    }
    Ok(out)
}

struct Longest<'a, const W: usize> {
    adj: &'a [Bits<W>],
    closed: &'a [Bits<W>],
    full: Bits<W>,
    best: usize,
}

impl<const W: usize> Longest<'_, W> {
    fn run(&mut self, last: usize, forbidden: Bits<W>, len: usize) {
        self.best = self.best.max(len);
        let next_forbidden = forbidden | self.closed[last];
        let cand = self.adj[last] - forbidden;
        // one more vertex from `cand`, the rest from outside `next_forbidden`
        if cand.is_empty() || len + 1 + (self.full - next_forbidden).len() <= self.best {
            return;
        }
        for w in cand.iter() {
            self.run(w, next_forbidden, len + 1);
        }
    }
}

fn longest_kernel<const W: usize>(g: &Graph) -> usize {
    let adj = g.bit_rows::<W>();
    let closed = closed_rows(&adj);
    let mut s = Longest {
        adj: &adj,
        closed: &closed,
        full: Bits::full(g.order()),
        best: 0,
    };
    for u in 0..g.order() {
        s.run(u, Bits::EMPTY, 0);
    }
    s.best
}

/// Number of edges of a longest induced path.
pub fn longest_induced_path_length(g: &Graph) -> Result<usize> {
    if g.order() > LONGEST_PATH_CAP {
        return Err(Error::CapExceeded {
            what: "longest_induced_path_length",
            order: g.order(),
            cap: LONGEST_PATH_CAP,
        });
    }
    Ok(with_words!(g.order(), |W| longest_kernel::<W>(g)))
}

/// Vertex sets (as masks) of all induced paths, including single vertices.
fn induced_path_masks(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    let mut is_path = vec![false; 1 << n];
    fn go(adj: &[u32], last: usize, forbidden: u32, set: u32, is_path: &mut [bool]) {
        is_path[set as usize] = true;
        let next = forbidden | adj[last] | 1 << last;
        let mut cand = adj[last] & !forbidden;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            go(adj, w, next, set | 1 << w, is_path);
        }
    }
    for u in 0..n {
        go(&adj, u, 0, 1 << u, &mut is_path);
    }
    is_path
}

/// `ρ(G)`: fewest induced paths partitioning the vertex set, with one
/// optimal partition.
pub fn induced_path_partition(g: &Graph) -> Result<(usize, Vec<VertexSet>)> {
    let n = g.order();
    if n > PARTITION_CAP {
        return Err(Error::CapExceeded {
            what: "induced_path_partition",
            order: n,
            cap: PARTITION_CAP,
        });
    }
    let is_path = induced_path_masks(g);
    let mut by_low: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (mask, &ok) in is_path.iter().enumerate() {
        if ok && mask != 0 {
            by_low[mask.trailing_zeros() as usize].push(mask as u32);
        }
    }
    let full = (1usize << n) - 1;
    let mut dp = vec![u8::MAX; full + 1];
    let mut choice = vec![0u32; full + 1];
    dp[0] = 0;
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        for &p in &by_low[low] {
            let p = p as usize;
            if p & mask == p && dp[mask ^ p] + 1 < dp[mask] {
                dp[mask] = dp[mask ^ p] + 1;
                choice[mask] = p as u32;
            }
        }
    }
    let mut parts = Vec::new();
    let mut mask = full;
    while mask != 0 {
        let p = choice[mask] as usize;
        parts.push(VertexSet::from_vertices(n, (0..n).filter(|&v| p >> v & 1 == 1)));
        mask ^= p;
    }
    Ok((dp[full] as usize, parts))
}

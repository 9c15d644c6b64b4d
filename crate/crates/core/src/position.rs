//! Position-set solvers.
//!
//! Monophonic, geodesic and length-two geodesic position all reduce to the
//! same question once each pair `{x, z}` carries the set of vertices lying
//! strictly inside some qualifying `x,z`-path: a set is in position iff no
//! pair of its members has a witness in it. One branch and bound serves all
//! three.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bitset::{Bits, VertexSet};
use crate::clique::{alpha_omega, clique_number, dissociation_number, independence_number, lex_smallest};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{distance_matrix, simplicial_vertices};
use crate::io::emit_graph6;
use crate::paths::{all_intervals, induced_path_partition, longest_induced_path_length, Intervals};
use crate::with_words;

/// Order cap for building a triple index.
pub const INDEX_CAP: usize = 128;
/// Order cap for [`brute_force_position`].
pub const ORACLE_CAP: usize = 12;
/// Above this order the oracle takes monophonic intervals from the induced
/// path search instead of filtering all simple paths.
pub const SIMPLE_PATH_ORACLE_CAP: usize = 9;
/// Order cap for [`hull_number`].
pub const HULL_CAP: usize = 40;
pub const DEFAULT_NODE_LIMIT: u64 = 200_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathMode {
    Monophonic,
    Geodesic,
    /// Only shortest paths of length exactly two.
    GeodesicLen2,
}

impl PathMode {
    pub const ALL: [PathMode; 3] = [PathMode::Monophonic, PathMode::Geodesic, PathMode::GeodesicLen2];
}

impl FromStr for PathMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mono" | "monophonic" => Ok(PathMode::Monophonic),
            "geo" | "geodesic" => Ok(PathMode::Geodesic),
            "geo2" | "geodesic_len2" => Ok(PathMode::GeodesicLen2),
            _ => Err(Error::InvalidArgument(format!("unknown path mode {s:?}"))),
        }
    }
}

/// Interior witnesses for every pair, for one graph and path mode.
#[derive(Debug, Clone)]
pub struct ForbiddenTripleIndex {
    graph: Graph,
    mode: PathMode,
    witnesses: Vec<VertexSet>,
}

impl ForbiddenTripleIndex {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn mode(&self) -> PathMode {
        self.mode
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Vertices other than `x, z` on a qualifying `x,z`-path.
    pub fn witnesses(&self, x: usize, z: usize) -> &VertexSet {
        &self.witnesses[x * self.order() + z]
    }

    fn from_fn(g: &Graph, mode: PathMode, mut interval: impl FnMut(usize, usize) -> VertexSet) -> Self {
        let n = g.order();
        let mut witnesses = vec![VertexSet::new(n); n * n];
        for x in 0..n {
            for z in x + 1..n {
                let mut w = interval(x, z);
                w.remove(x);
                w.remove(z);
                witnesses[z * n + x] = w.clone();
                witnesses[x * n + z] = w;
            }
        }
        ForbiddenTripleIndex {
            graph: g.clone(),
            mode,
            witnesses,
        }
    }

    /// Index whose monophonic witnesses come from precomputed intervals.
    pub fn from_intervals(g: &Graph, iv: &Intervals) -> Self {
        Self::from_fn(g, PathMode::Monophonic, |x, z| iv.get(x, z).clone())
    }
}

pub fn build_triple_index(g: &Graph, mode: PathMode) -> Result<ForbiddenTripleIndex> {
    if g.order() > INDEX_CAP {
        return Err(Error::CapExceeded {
            what: "build_triple_index",
            order: g.order(),
            cap: INDEX_CAP,
        });
    }
    match mode {
        PathMode::Monophonic => Ok(ForbiddenTripleIndex::from_intervals(g, &all_intervals(g)?)),
        PathMode::Geodesic => {
            let d = distance_matrix(g);
            Ok(ForbiddenTripleIndex::from_fn(g, mode, |x, z| d.geodesic_interval(x, z)))
        }
        PathMode::GeodesicLen2 => {
            let d = distance_matrix(g);
            Ok(ForbiddenTripleIndex::from_fn(g, mode, |x, z| {
                if d.get(x, z) == Some(2) {
                    g.neighbors(x).intersection(g.neighbors(z))
                } else {
                    VertexSet::new(g.order())
                }
            }))
        }
    }
}

/// Three members of a set with `y` strictly inside a qualifying `x,z`-path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

/// The first violating triple of `s` (pairs in increasing order), if any.
pub fn position_violation(idx: &ForbiddenTripleIndex, s: &VertexSet) -> Option<Violation> {
    let vs = s.to_vec();
    for (i, &x) in vs.iter().enumerate() {
        for &z in &vs[i + 1..] {
            if let Some(y) = idx.witnesses(x, z).intersection(s).first() {
                return Some(Violation { x, y, z });
            }
        }
    }
    None
}

pub fn is_position_set(idx: &ForbiddenTripleIndex, s: &VertexSet) -> bool {
    position_violation(idx, s).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TieBreak {
    /// The optimum that is smallest read as a binary integer.
    LexSmallest,
    /// Whatever optimum the search meets first (cheaper).
    FirstFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverOptions {
    pub require_independent: bool,
    pub node_limit: u64,
    pub tie_break: TieBreak,
    /// Only vertices in this set may be chosen.
    pub restrict_to: Option<VertexSet>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            require_independent: false,
            node_limit: DEFAULT_NODE_LIMIT,
            tie_break: TieBreak::LexSmallest,
            restrict_to: None,
        }
    }
}

impl SolverOptions {
    pub fn independent() -> Self {
        SolverOptions {
            require_independent: true,
            ..Self::default()
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        if self.node_limit == 0 {
            return Err(Error::InvalidArgument("node limit must be positive".into()));
        }
        if let Some(r) = &self.restrict_to {
            if r.universe() != n {
                return Err(Error::InvalidArgument("restriction set has the wrong order".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parameter {
    #[serde(rename = "mp")]
    Mp,
    #[serde(rename = "gp")]
    Gp,
    #[serde(rename = "gp2")]
    Gp2,
    #[serde(rename = "imp")]
    Imp,
    #[serde(rename = "igp")]
    Igp,
    #[serde(rename = "diss")]
    Diss,
    #[serde(rename = "hm")]
    Hm,
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "omega")]
    Omega,
    #[serde(rename = "alpha_omega")]
    AlphaOmega,
    #[serde(rename = "simplicial")]
    Simplicial,
    #[serde(rename = "longest_induced_path")]
    LongestInducedPath,
    #[serde(rename = "rho")]
    Rho,
}

impl Parameter {
    pub const ALL: [Parameter; 13] = [
        Parameter::Mp,
        Parameter::Gp,
        Parameter::Gp2,
        Parameter::Imp,
        Parameter::Igp,
        Parameter::Diss,
        Parameter::Hm,
        Parameter::Alpha,
        Parameter::Omega,
        Parameter::AlphaOmega,
        Parameter::Simplicial,
        Parameter::LongestInducedPath,
        Parameter::Rho,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Parameter::Mp => "mp",
            Parameter::Gp => "gp",
            Parameter::Gp2 => "gp2",
            Parameter::Imp => "imp",
            Parameter::Igp => "igp",
            Parameter::Diss => "diss",
            Parameter::Hm => "hm",
            Parameter::Alpha => "alpha",
            Parameter::Omega => "omega",
            Parameter::AlphaOmega => "alpha_omega",
            Parameter::Simplicial => "simplicial",
            Parameter::LongestInducedPath => "longest_induced_path",
            Parameter::Rho => "rho",
        }
    }

    /// The path mode and independence flag of a position parameter.
    pub fn position_kind(self) -> Option<(PathMode, bool)> {
        match self {
            Parameter::Mp => Some((PathMode::Monophonic, false)),
            Parameter::Gp => Some((PathMode::Geodesic, false)),
            Parameter::Gp2 => Some((PathMode::GeodesicLen2, false)),
            Parameter::Imp => Some((PathMode::Monophonic, true)),
            Parameter::Igp => Some((PathMode::Geodesic, true)),
            _ => None,
        }
    }

    pub fn for_position(mode: PathMode, independent: bool) -> Parameter {
        match (mode, independent) {
            (PathMode::Monophonic, false) => Parameter::Mp,
            (PathMode::Geodesic, false) => Parameter::Gp,
            (PathMode::GeodesicLen2, false) => Parameter::Gp2,
            (PathMode::Monophonic, true) => Parameter::Imp,
            (PathMode::Geodesic, true) => Parameter::Igp,
            // no named parameter; reported under the plain one
            (PathMode::GeodesicLen2, true) => Parameter::Gp2,
        }
    }
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parameter::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .or(match s {
                "h_m" => Some(Parameter::Hm),
                "s" => Some(Parameter::Simplicial),
                "L" => Some(Parameter::LongestInducedPath),
                _ => None,
            })
            .ok_or_else(|| Error::InvalidArgument(format!("unknown parameter {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    BranchAndBound,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParameterReport {
    pub graph_id: String,
    pub parameter: Parameter,
    pub value: usize,
    pub witness: Vec<usize>,
    pub method: Method,
    pub expansions: u64,
    pub ms: f64,
}

impl ParameterReport {
    pub fn witness_set(&self, n: usize) -> VertexSet {
        VertexSet::from_vertices(n, self.witness.iter().copied())
    }

    /// Same report with timing zeroed, for byte-stable comparisons.
    pub fn without_timing(mut self) -> Self {
        self.ms = 0.0;
        self
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

struct Kernel<const W: usize> {
    n: usize,
    /// `blocked[a * n + b]`: vertices `c` with `{a, b, c}` forbidden, in
    /// search labels.
    blocked: Vec<Bits<W>>,
    adj: Vec<Bits<W>>,
    independent: bool,
    /// `label[v]` is the search label of vertex `v`; `vertex` inverts it.
    label: Vec<usize>,
    vertex: Vec<usize>,
    nodes: u64,
    limit: u64,
}

struct Found<const W: usize> {
    len: usize,
    set: Bits<W>,
}

impl<const W: usize> Kernel<W> {
    fn new(idx: &ForbiddenTripleIndex, independent: bool, limit: u64) -> Self {
        let n = idx.order();
        let mut raw = vec![Bits::<W>::EMPTY; n * n];
        for x in 0..n {
            for z in x + 1..n {
                for y in idx.witnesses(x, z).iter() {
                    for (a, b, c) in [(x, z, y), (x, y, z), (y, z, x)] {
                        raw[a * n + b].insert(c);
                        raw[b * n + a].insert(c);
                    }
                }
            }
        }
        // most constrained vertices first
        let weight: Vec<usize> = (0..n).map(|v| (0..n).map(|u| raw[v * n + u].len()).sum()).collect();
        let mut vertex: Vec<usize> = (0..n).collect();
        vertex.sort_by_key(|&v| (std::cmp::Reverse(weight[v]), v));
        let mut label = vec![0; n];
        for (l, &v) in vertex.iter().enumerate() {
            label[v] = l;
        }
        let relabel = |s: &Bits<W>| s.iter().map(|v| label[v]).collect::<Bits<W>>();
        let mut blocked = vec![Bits::<W>::EMPTY; n * n];
        for a in 0..n {
            for b in 0..n {
                blocked[label[a] * n + label[b]] = relabel(&raw[a * n + b]);
            }
        }
        let g = idx.graph();
        let mut adj = vec![Bits::<W>::EMPTY; n];
        for v in 0..n {
            adj[label[v]] = g.neighbors(v).iter().map(|u| label[u]).collect();
        }
        Kernel {
            n,
            blocked,
            adj,
            independent,
            label,
            vertex,
            nodes: 0,
            limit,
        }
    }

    fn to_labels(&self, s: &Bits<W>) -> Bits<W> {
        s.iter().map(|v| self.label[v]).collect()
    }

    fn to_vertices(&self, s: &Bits<W>) -> Bits<W> {
        s.iter().map(|l| self.vertex[l]).collect()
    }

    /// Largest position set inside `allowed` (vertex ids); stops as soon as
    /// one of size `target` is seen.
    fn search(&mut self, allowed: Bits<W>, target: usize) -> Result<Found<W>> {
        let mut best = Found {
            len: 0,
            set: Bits::EMPTY,
        };
        let p = self.to_labels(&allowed);
        self.expand(Bits::EMPTY, 0, p, target, &mut best)?;
        best.set = self.to_vertices(&best.set);
        Ok(best)
    }

    fn expand(&mut self, s: Bits<W>, size: usize, p: Bits<W>, target: usize, best: &mut Found<W>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::LimitExceeded {
                what: "max_position_set",
                limit: self.limit,
            });
        }
        if size > best.len {
            best.len = size;
            best.set = s;
        }
        if best.len >= target || size + p.len() <= best.len {
            return Ok(());
        }
        let v = p.first().expect("bound guarantees candidates");
        let mut np = p.without(v);
        for x in s.iter() {
            np -= self.blocked[v * self.n + x];
        }
        if self.independent {
            np -= self.adj[v];
        }
        self.expand(s.with(v), size + 1, np, target, best)?;
        self.expand(s, size, p.without(v), target, best)
    }
}

fn solve_kernel<const W: usize>(idx: &ForbiddenTripleIndex, opts: &SolverOptions) -> Result<(usize, VertexSet, u64)> {
    let n = idx.order();
    let mut k = Kernel::<W>::new(idx, opts.require_independent, opts.node_limit);
    let allowed = match &opts.restrict_to {
        Some(r) => r.to_bits::<W>(),
        None => Bits::full(n),
    };
    let found = k.search(allowed, usize::MAX)?;
    let len = found.len;
    let set = match opts.tie_break {
        TieBreak::FirstFound => found.set,
        TieBreak::LexSmallest => lex_smallest(n, found.set, |trial| {
            let f = k.search(trial & allowed, len)?;
            Ok::<_, Error>((f.len >= len).then_some(f.set))
        })?,
    };
    Ok((len, VertexSet::from_bits(n, &set), k.nodes))
}

/// Exact maximum position set by include/exclude branch and bound. Running
/// out of nodes is an error rather than a bound.
pub fn max_position_set(idx: &ForbiddenTripleIndex, opts: &SolverOptions) -> Result<ParameterReport> {
    opts.validate(idx.order())?;
    let start = Instant::now();
    let (value, witness, expansions) = with_words!(idx.order(), |W| solve_kernel::<W>(idx, opts))?;
    Ok(ParameterReport {
        graph_id: emit_graph6(idx.graph()),
        parameter: Parameter::for_position(idx.mode(), opts.require_independent),
        value,
        witness: witness.to_vec(),
        method: Method::BranchAndBound,
        expansions,
        ms: elapsed_ms(start),
    })
}

/// Builds the index for `mode` and solves.
pub fn position_number(g: &Graph, mode: PathMode, opts: &SolverOptions) -> Result<ParameterReport> {
    max_position_set(&build_triple_index(g, mode)?, opts)
}

/// Pair-interval masks computed without the induced-path search: all simple
/// paths filtered for chords (small orders) and Floyd–Warshall distances.
fn oracle_intervals(g: &Graph, mode: PathMode) -> Vec<u32> {
    let n = g.order();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    let mut out = vec![0u32; n * n];
    match mode {
        PathMode::Monophonic if n <= SIMPLE_PATH_ORACLE_CAP => {
            fn go(adj: &[u32], path: &mut Vec<usize>, used: u32, out: &mut [u32], n: usize) {
                let last = *path.last().unwrap();
                let chordless = path[..path.len().saturating_sub(2)].iter().all(|&p| adj[last] >> p & 1 == 0);
                if !chordless {
                    return;
                }
                out[path[0] * n + last] |= used;
                let mut cand = adj[last] & !used;
                while cand != 0 {
                    let w = cand.trailing_zeros() as usize;
                    cand &= cand - 1;
                    path.push(w);
                    go(adj, path, used | 1 << w, out, n);
                    path.pop();
                }
            }
            for u in 0..n {
                go(&adj, &mut vec![u], 1 << u, &mut out, n);
            }
        }
        PathMode::Monophonic => {
            let iv = all_intervals(g).expect("oracle orders are small");
            for x in 0..n {
                for z in 0..n {
                    out[x * n + z] = iv.get(x, z).iter().fold(0, |m, w| m | 1 << w);
                }
            }
        }
        PathMode::Geodesic | PathMode::GeodesicLen2 => {
            const INF: usize = usize::MAX / 4;
            let mut d = vec![INF; n * n];
            for u in 0..n {
                d[u * n + u] = 0;
                for v in g.neighbors(u).iter() {
                    d[u * n + v] = 1;
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        let via = d[i * n + k] + d[k * n + j];
                        if via < d[i * n + j] {
                            d[i * n + j] = via;
                        }
                    }
                }
            }
            for x in 0..n {
                for z in 0..n {
                    let dxz = d[x * n + z];
                    if dxz >= INF || (mode == PathMode::GeodesicLen2 && dxz != 2) {
                        continue;
                    }
                    for y in 0..n {
                        if d[x * n + y] + d[y * n + z] == dxz {
                            out[x * n + z] |= 1 << y;
                        }
                    }
                }
            }
        }
    }
    for x in 0..n {
        for z in 0..n {
            out[x * n + z] &= !(1 << x | 1 << z);
        }
    }
    out
}

/// Exhaustive subset enumeration over independently computed intervals.
pub fn brute_force_position(g: &Graph, mode: PathMode, opts: &SolverOptions) -> Result<ParameterReport> {
    let n = g.order();
    if n > ORACLE_CAP {
        return Err(Error::CapExceeded {
            what: "brute_force_position",
            order: n,
            cap: ORACLE_CAP,
        });
    }
    opts.validate(n)?;
    let start = Instant::now();
    let w = oracle_intervals(g, mode);
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, x| m | 1 << x)).collect();
    let allowed: u32 = match &opts.restrict_to {
        Some(r) => r.iter().fold(0, |m, v| m | 1 << v),
        None => ((1u64 << n) - 1) as u32,
    };
    let ok = |mask: u32| {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if opts.require_independent && vs.iter().any(|&v| adj[v] & mask != 0) {
            return false;
        }
        vs.iter()
            .enumerate()
            .all(|(i, &x)| vs[i + 1..].iter().all(|&z| w[x * n + z] & mask == 0))
    };
    let mut best = (0usize, 0u32);
    let mut checked = 0u64;
    for mask in 0..(1u64 << n) as u32 {
        if mask & !allowed != 0 || (mask.count_ones() as usize) <= best.0 {
            continue;
        }
        checked += 1;
        if ok(mask) {
            best = (mask.count_ones() as usize, mask);
        }
    }
    Ok(ParameterReport {
        graph_id: emit_graph6(g),
        parameter: Parameter::for_position(mode, opts.require_independent),
        value: best.0,
        witness: (0..n).filter(|&v| best.1 >> v & 1 == 1).collect(),
        method: Method::Oracle,
        expansions: checked,
        ms: elapsed_ms(start),
    })
}

struct HullSearch<'a> {
    iv: &'a Intervals,
    idx: &'a ForbiddenTripleIndex,
    full: VertexSet,
    nodes: u64,
    limit: u64,
}

impl HullSearch<'_> {
    /// Chooses `k` more vertices from `cand` below `below`, largest first,
    /// so sets are met in increasing integer order.
    fn pick(&mut self, chosen: &VertexSet, cand: &VertexSet, k: usize, below: usize) -> Result<Option<VertexSet>> {
        if k == 0 {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::LimitExceeded {
                    what: "hull_number",
                    limit: self.limit,
                });
            }
            return Ok((self.iv.hull(chosen).0 == self.full).then(|| chosen.clone()));
        }
        let options: Vec<usize> = cand.iter().take_while(|&t| t < below).collect();
        for (i, &t) in options.iter().enumerate() {
            if i + 1 < k {
                continue;
            }
            let mut next_cand = VertexSet::from_vertices(self.full.universe(), options[..i].iter().copied());
            // keep the chosen set in monophonic position
            for x in chosen.iter() {
                next_cand = next_cand.difference(&blocking(self.idx, t, x));
            }
            if next_cand.len() + 1 < k {
                continue;
            }
            let mut c = chosen.clone();
            c.insert(t);
            if let Some(found) = self.pick(&c, &next_cand, k - 1, t)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Vertices `c` with `{a, b, c}` in forbidden position.
fn blocking(idx: &ForbiddenTripleIndex, a: usize, b: usize) -> VertexSet {
    let n = idx.order();
    let mut out = idx.witnesses(a, b).clone();
    for c in 0..n {
        if c != a && c != b && (idx.witnesses(a, c).contains(b) || idx.witnesses(b, c).contains(a)) {
            out.insert(c);
        }
    }
    out
}

/// Monophonic hull number with the integer-smallest minimum hull set.
///
/// Every hull set contains the simplicial vertices, and a minimum hull set is
/// in monophonic position, so only position sets extending the simplicial
/// set are tried, by increasing size.
pub fn hull_number(g: &Graph, opts: &SolverOptions) -> Result<ParameterReport> {
    let n = g.order();
    if n > HULL_CAP {
        return Err(Error::CapExceeded {
            what: "hull_number",
            order: n,
            cap: HULL_CAP,
        });
    }
    g.require_connected()?;
    opts.validate(n)?;
    let start = Instant::now();
    let iv = all_intervals(g)?;
    let idx = ForbiddenTripleIndex::from_intervals(g, &iv);
    let simplicial = simplicial_vertices(g);
    let mut cand = simplicial.complement();
    let seen: Vec<usize> = simplicial.iter().collect();
    for (i, &v) in seen.iter().enumerate() {
        for &x in &seen[..i] {
            cand = cand.difference(&blocking(&idx, v, x));
        }
    }
    let mut search = HullSearch {
        iv: &iv,
        idx: &idx,
        full: VertexSet::full(n),
        nodes: 0,
        limit: opts.node_limit,
    };
    let mut found = None;
    for extra in 0..=cand.len() {
        if let Some(m) = search.pick(&simplicial, &cand, extra, n)? {
            found = Some(m);
            break;
        }
    }
    let m = found.ok_or_else(|| Error::domain("no hull set in monophonic position extends the simplicial set"))?;
    Ok(ParameterReport {
        graph_id: emit_graph6(g),
        parameter: Parameter::Hm,
        value: m.len(),
        witness: m.to_vec(),
        method: Method::BranchAndBound,
        expansions: search.nodes,
        ms: elapsed_ms(start),
    })
}

/// Result of one parameter in a suite: a value, or the reason it was not
/// computed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Value(ParameterReport),
    Skipped { reason: String },
}

impl Outcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            Outcome::Value(r) => Some(r.value),
            Outcome::Skipped { .. } => None,
        }
    }
}

fn set_report(g: &Graph, p: Parameter, method: Method, start: Instant, value: usize, witness: &VertexSet) -> ParameterReport {
    ParameterReport {
        graph_id: emit_graph6(g),
        parameter: p,
        value,
        witness: witness.to_vec(),
        method,
        expansions: 0,
        ms: elapsed_ms(start),
    }
}

/// Computes one parameter.
pub fn compute_parameter(g: &Graph, p: Parameter, opts: &SolverOptions) -> Result<ParameterReport> {
    let start = Instant::now();
    if let Some((mode, independent)) = p.position_kind() {
        let o = SolverOptions {
            require_independent: independent,
            ..opts.clone()
        };
        return position_number(g, mode, &o);
    }
    let report = match p {
        Parameter::Hm => return hull_number(g, opts),
        Parameter::Diss => {
            let (v, w) = dissociation_number(g)?;
            set_report(g, p, Method::BranchAndBound, start, v, &w)
        }
        Parameter::Alpha => {
            let (v, w) = independence_number(g);
            set_report(g, p, Method::BranchAndBound, start, v, &w)
        }
        Parameter::Omega => {
            let (v, w) = clique_number(g);
            set_report(g, p, Method::BranchAndBound, start, v, &w)
        }
        Parameter::AlphaOmega => {
            let (v, w) = alpha_omega(g)?;
            set_report(g, p, Method::BranchAndBound, start, v, &w)
        }
        Parameter::Simplicial => {
            let s = simplicial_vertices(g);
            set_report(g, p, Method::ClosedForm, start, s.len(), &s)
        }
        Parameter::LongestInducedPath => {
            let l = longest_induced_path_length(g)?;
            set_report(g, p, Method::BranchAndBound, start, l, &VertexSet::new(g.order()))
        }
        Parameter::Rho => {
            let (r, parts) = induced_path_partition(g)?;
            // witness: the lowest vertex of each part
            let heads = VertexSet::from_vertices(g.order(), parts.iter().filter_map(|p| p.first()));
            set_report(g, p, Method::BranchAndBound, start, r, &heads)
        }
        _ => unreachable!("position parameters handled above"),
    };
    Ok(report)
}

/// Every parameter, each either computed or skipped with the reason (caps,
/// limits, disconnected input). Other errors propagate.
pub fn parameter_suite(g: &Graph, opts: &SolverOptions) -> Result<BTreeMap<Parameter, Outcome>> {
    let mut out = BTreeMap::new();
    for p in Parameter::ALL {
        let outcome = match compute_parameter(g, p, opts) {
            Ok(r) => Outcome::Value(r),
            Err(e @ (Error::CapExceeded { .. } | Error::LimitExceeded { .. } | Error::Disconnected)) => {
                Outcome::Skipped { reason: e.to_string() }
            }
            Err(e) => return Err(e),
        };
        out.insert(p, outcome);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{add_pendant, corona};
    use rand::{Rng, SeedableRng};

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    fn connected_gnp(n: usize, seed: u64) -> Graph {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        loop {
            let p = rng.gen_range(0.2..0.7);
            let g = Graph::from_fn(n, |_, _| rng.gen_bool(p)).unwrap();
            if g.is_connected() {
                return g;
            }
        }
    }

    fn value(g: &Graph, mode: PathMode, independent: bool) -> usize {
        let opts = SolverOptions {
            require_independent: independent,
            ..Default::default()
        };
        position_number(g, mode, &opts).unwrap().value
    }

    #[test]
    fn index_examples() {
        let p3 = Graph::path(3);
        let idx = build_triple_index(&p3, PathMode::Monophonic).unwrap();
        assert_eq!(idx.witnesses(0, 2).to_vec(), vec![1]);
        for mode in PathMode::ALL {
            let idx = build_triple_index(&Graph::complete(5), mode).unwrap();
            for x in 0..5 {
                for z in 0..5 {
                    assert!(idx.witnesses(x, z).is_empty());
                }
            }
        }
        let c5 = Graph::cycle(5).unwrap();
        let idx = build_triple_index(&c5, PathMode::Monophonic).unwrap();
        assert_eq!(idx.witnesses(0, 2).len(), 3);
        assert!(idx.witnesses(0, 1).is_empty());
    }

    #[test]
    fn violations() {
        let p3 = Graph::path(3);
        let idx = build_triple_index(&p3, PathMode::Monophonic).unwrap();
        assert_eq!(
            position_violation(&idx, &VertexSet::full(3)),
            Some(Violation { x: 0, y: 1, z: 2 })
        );
        assert!(is_position_set(&idx, &VertexSet::from_vertices(3, [0, 2])));
        let k = Graph::complete(6);
        assert!(is_position_set(&build_triple_index(&k, PathMode::Geodesic).unwrap(), &VertexSet::full(6)));
    }

    #[test]
    fn named_values() {
        let p = petersen();
        assert_eq!(value(&p, PathMode::Monophonic, false), 3);
        assert_eq!(value(&p, PathMode::Geodesic, false), 6);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(value(&c5, PathMode::Monophonic, false), 2);
        assert_eq!(value(&c5, PathMode::Geodesic, false), 3);
        let crown = corona(&c5, &Graph::complete(1)).unwrap();
        assert_eq!(value(&crown, PathMode::Monophonic, false), 5);
        assert_eq!(value(&crown, PathMode::Geodesic, false), 5);
        for n in 4..9 {
            assert_eq!(value(&Graph::cycle(n).unwrap(), PathMode::Monophonic, false), 2);
        }
        assert_eq!(value(&Graph::complete(7), PathMode::Monophonic, false), 7);
        assert_eq!(value(&Graph::empty(0), PathMode::Monophonic, false), 0);
        // fewer than three vertices: every set qualifies
        assert_eq!(value(&Graph::path(2), PathMode::GeodesicLen2, false), 2);
    }

    #[test]
    fn solver_matches_oracle() {
        for seed in 0..80 {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=9);
            let g = connected_gnp(n, seed);
            for mode in PathMode::ALL {
                for independent in [false, true] {
                    let opts = SolverOptions {
                        require_independent: independent,
                        ..Default::default()
                    };
                    let bb = position_number(&g, mode, &opts).unwrap();
                    let or = brute_force_position(&g, mode, &opts).unwrap();
                    assert_eq!(bb.value, or.value, "seed {seed} {mode:?} {independent}");
                    // both pick the integer-smallest optimum
                    assert_eq!(bb.witness, or.witness, "seed {seed} {mode:?} {independent}");
                    let idx = build_triple_index(&g, mode).unwrap();
                    assert!(is_position_set(&idx, &bb.witness_set(n)));
                }
            }
        }
    }

    #[test]
    fn oracle_mid_size_uses_search_intervals() {
        let g = connected_gnp(11, 5);
        let opts = SolverOptions::default();
        assert_eq!(
            brute_force_position(&g, PathMode::Monophonic, &opts).unwrap().value,
            position_number(&g, PathMode::Monophonic, &opts).unwrap().value
        );
        assert!(brute_force_position(&Graph::empty(13), PathMode::Geodesic, &opts).is_err());
    }

    #[test]
    fn restriction_and_limits() {
        let p = petersen();
        let idx = build_triple_index(&p, PathMode::Geodesic).unwrap();
        let opts = SolverOptions {
            restrict_to: Some(VertexSet::from_vertices(10, 0..5)),
            ..Default::default()
        };
        let r = max_position_set(&idx, &opts).unwrap();
        assert!(r.witness.iter().all(|&v| v < 5));
        assert_eq!(r.value, 3);
        let tiny = SolverOptions {
            node_limit: 3,
            ..Default::default()
        };
        assert!(matches!(max_position_set(&idx, &tiny), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn chain_of_parameters() {
        for seed in 0..40 {
            let g = connected_gnp(8, seed + 40);
            let mp = value(&g, PathMode::Monophonic, false);
            let gp = value(&g, PathMode::Geodesic, false);
            let imp = value(&g, PathMode::Monophonic, true);
            let igp = value(&g, PathMode::Geodesic, true);
            assert!(imp <= mp && mp <= gp && imp <= igp && igp <= gp);
        }
    }

    fn hull_oracle(g: &Graph) -> usize {
        let n = g.order();
        let iv = all_intervals(g).unwrap();
        (1..=n)
            .find(|&k| {
                (0u32..1 << n).any(|m| {
                    m.count_ones() as usize == k
                        && iv.hull(&VertexSet::from_vertices(n, (0..n).filter(|&v| m >> v & 1 == 1))).0.len() == n
                })
            })
            .unwrap()
    }

    #[test]
    fn hull_numbers() {
        let opts = SolverOptions::default();
        assert_eq!(hull_number(&Graph::complete(5), &opts).unwrap().value, 5);
        assert_eq!(hull_number(&Graph::cycle(6).unwrap(), &opts).unwrap().value, 2);
        let star = Graph::complete_multipartite(&[1, 4]).unwrap();
        assert_eq!(hull_number(&star, &opts).unwrap().witness, vec![1, 2, 3, 4]);
        assert!(matches!(hull_number(&Graph::empty(2), &opts), Err(Error::Disconnected)));
        for seed in 0..40 {
            let g = connected_gnp(8, seed + 200);
            let h = hull_number(&g, &opts).unwrap();
            assert_eq!(h.value, hull_oracle(&g), "seed {seed}");
            let idx = build_triple_index(&g, PathMode::Monophonic).unwrap();
            let w = h.witness_set(8);
            assert!(is_position_set(&idx, &w));
            assert!(simplicial_vertices(&g).is_subset(&w));
            assert!(h.value <= value(&g, PathMode::Monophonic, false));
        }
    }

    #[test]
    fn pendant_changes_mp_by_at_most_one() {
        for seed in 0..30 {
            let g = connected_gnp(7, seed + 600);
            let mp = value(&g, PathMode::Monophonic, false);
            for v in 0..7 {
                let h = add_pendant(&g, v).unwrap();
                let d = value(&h, PathMode::Monophonic, false) - mp;
                assert!(d <= 1);
            }
        }
    }

    #[test]
    fn suite_reports_everything() {
        let suite = parameter_suite(&petersen(), &SolverOptions::default()).unwrap();
        assert_eq!(suite.len(), Parameter::ALL.len());
        assert_eq!(suite[&Parameter::Mp].value(), Some(3));
        assert_eq!(suite[&Parameter::Gp].value(), Some(6));
        assert_eq!(suite[&Parameter::Omega].value(), Some(2));
        assert_eq!(suite[&Parameter::LongestInducedPath].value(), Some(4));
        let big = Graph::cycle(25).unwrap();
        let suite = parameter_suite(&big, &SolverOptions::default()).unwrap();
        assert!(matches!(suite[&Parameter::Rho], Outcome::Skipped { .. }));
        assert_eq!(suite[&Parameter::Mp].value(), Some(2));
    }

    #[test]
    fn report_json_shape() {
        let r = position_number(&Graph::cycle(5).unwrap(), PathMode::Geodesic, &SolverOptions::default())
            .unwrap()
            .without_timing();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["parameter"], "gp");
        assert_eq!(v["method"], "branch_and_bound");
        assert_eq!(v["graph_id"], "Dhc");
        assert_eq!(v["witness"], serde_json::json!([0, 1, 3]));
    }
}

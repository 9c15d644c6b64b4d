//! Named graph families: a small text syntax, deterministic generators and
//! closed-form predictions for their parameters.
//!
//! Syntax: `family[:p,p,...][:seed=k]`, where a parameter is an integer or a
//! parenthesized nested spec, e.g. `half_wheel:4`, `G_abl:3,5,2`,
//! `corona_of:(cycle:5),(complete:1)`, `random_tree:10:seed=3`.

mod predict;

pub use predict::*;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, corona, hypercube, join, Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "path")]
    Path,
    #[serde(rename = "cycle")]
    Cycle,
    #[serde(rename = "complete")]
    Complete,
    #[serde(rename = "complete_multipartite")]
    CompleteMultipartite,
    #[serde(rename = "star")]
    Star,
    #[serde(rename = "caterpillar")]
    Caterpillar,
    #[serde(rename = "random_tree")]
    RandomTree,
    #[serde(rename = "random_block")]
    RandomBlock,
    #[serde(rename = "random_unicyclic")]
    RandomUnicyclic,
    #[serde(rename = "hypercube")]
    Hypercube,
    #[serde(rename = "grid")]
    Grid,
    #[serde(rename = "half_wheel")]
    HalfWheel,
    #[serde(rename = "half_wheel_pendant")]
    HalfWheelPendant,
    #[serde(rename = "wheel_pendant_W")]
    WheelPendant,
    #[serde(rename = "R_graph")]
    RGraph,
    #[serde(rename = "P_graph")]
    PGraph,
    #[serde(rename = "G_abl")]
    GAbl,
    #[serde(rename = "petersen")]
    Petersen,
    #[serde(rename = "heawood")]
    Heawood,
    #[serde(rename = "mcgee")]
    McGee,
    #[serde(rename = "random_split")]
    RandomSplit,
    #[serde(rename = "random_bipartite")]
    RandomBipartite,
    #[serde(rename = "corona_of")]
    CoronaOf,
    #[serde(rename = "join_of")]
    JoinOf,
}

impl Family {
    pub const ALL: [Family; 24] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteMultipartite,
        Family::Star,
        Family::Caterpillar,
        Family::RandomTree,
        Family::RandomBlock,
        Family::RandomUnicyclic,
        Family::Hypercube,
        Family::Grid,
        Family::HalfWheel,
        Family::HalfWheelPendant,
        Family::WheelPendant,
        Family::RGraph,
        Family::PGraph,
        Family::GAbl,
        Family::Petersen,
        Family::Heawood,
        Family::McGee,
        Family::RandomSplit,
        Family::RandomBipartite,
        Family::CoronaOf,
        Family::JoinOf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteMultipartite => "complete_multipartite",
            Family::Star => "star",
            Family::Caterpillar => "caterpillar",
            Family::RandomTree => "random_tree",
            Family::RandomBlock => "random_block",
            Family::RandomUnicyclic => "random_unicyclic",
            Family::Hypercube => "hypercube",
            Family::Grid => "grid",
            Family::HalfWheel => "half_wheel",
            Family::HalfWheelPendant => "half_wheel_pendant",
            Family::WheelPendant => "wheel_pendant_W",
            Family::RGraph => "R_graph",
            Family::PGraph => "P_graph",
            Family::GAbl => "G_abl",
            Family::Petersen => "petersen",
            Family::Heawood => "heawood",
            Family::McGee => "mcgee",
            Family::RandomSplit => "random_split",
            Family::RandomBipartite => "random_bipartite",
            Family::CoronaOf => "corona_of",
            Family::JoinOf => "join_of",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(
            self,
            Family::RandomTree
                | Family::RandomBlock
                | Family::RandomUnicyclic
                | Family::RandomSplit
                | Family::RandomBipartite
        )
    }

    pub fn is_realization(self) -> bool {
        matches!(
            self,
            Family::HalfWheel | Family::HalfWheelPendant | Family::WheelPendant | Family::RGraph | Family::PGraph | Family::GAbl
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Param {
    Int(usize),
    Spec(Box<FamilySpec>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<Param>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, ints: &[usize]) -> Self {
        FamilySpec {
            family,
            params: ints.iter().map(|&p| Param::Int(p)).collect(),
            seed: None,
        }
    }

    pub fn seeded(family: Family, ints: &[usize], seed: u64) -> Self {
        FamilySpec {
            seed: Some(seed),
            ..Self::new(family, ints)
        }
    }

    pub fn binary(family: Family, g: FamilySpec, h: FamilySpec) -> Self {
        FamilySpec {
            family,
            params: vec![Param::Spec(Box::new(g)), Param::Spec(Box::new(h))],
            seed: None,
        }
    }

    fn ints(&self) -> Result<Vec<usize>> {
        self.params
            .iter()
            .map(|p| match p {
                Param::Int(v) => Ok(*v),
                Param::Spec(_) => Err(self.domain("expects integer parameters")),
            })
            .collect()
    }

    /// Exactly `k` integer parameters.
    fn int_params<const K: usize>(&self) -> Result<[usize; K]> {
        let v = self.ints()?;
        v.try_into()
            .map_err(|_| self.domain(&format!("expects {K} integer parameter(s)")))
    }

    fn spec_pair(&self) -> Result<(&FamilySpec, &FamilySpec)> {
        match self.params.as_slice() {
            [Param::Spec(g), Param::Spec(h)] => Ok((g, h)),
            _ => Err(self.domain("expects two nested specs")),
        }
    }

    fn domain(&self, msg: &str) -> Error {
        Error::Domain(format!("{}: {msg}", self.family))
    }

    fn require(&self, ok: bool, msg: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(self.domain(msg))
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(0))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (i, p) in self.params.iter().enumerate() {
            f.write_str(if i == 0 { ":" } else { "," })?;
            match p {
                Param::Int(v) => write!(f, "{v}")?,
                Param::Spec(s) => write!(f, "({s})")?,
            }
        }
        if let Some(seed) = self.seed {
            write!(f, ":seed={seed}")?;
        }
        Ok(())
    }
}

struct SpecParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii")
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| self.err("expected a non-negative integer"))
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        let at = self.pos;
        let family: Family = self.word().parse().map_err(|e: Error| Error::Parse {
            offset: at,
            message: e.to_string(),
        })?;
        let mut spec = FamilySpec {
            family,
            params: Vec::new(),
            seed: None,
        };
        if !self.eat(b':') {
            return Ok(spec);
        }
        if self.s[self.pos..].starts_with(b"seed=") {
            self.pos += 5;
            spec.seed = Some(self.number()?);
            return Ok(spec);
        }
        loop {
            if self.eat(b'(') {
                spec.params.push(Param::Spec(Box::new(self.spec()?)));
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
            } else {
                let v = self.number()?;
                let v = usize::try_from(v).map_err(|_| self.err("parameter too large"))?;
                spec.params.push(Param::Int(v));
            }
            if !self.eat(b',') {
                break;
            }
        }
        if self.eat(b':') {
            if !self.s[self.pos..].starts_with(b"seed=") {
                return Err(self.err("expected 'seed='"));
            }
            self.pos += 5;
            spec.seed = Some(self.number()?);
        }
        Ok(spec)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser {
            s: s.trim().as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        if p.pos != p.s.len() {
            return Err(p.err("trailing characters"));
        }
        Ok(spec)
    }
}

/// A generated graph with named vertex roles (hub, cycle, pendants, ...).
#[derive(Debug, Clone)]
pub struct Generated {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub roles: BTreeMap<&'static str, Vec<usize>>,
}

fn lcf(n: usize, shifts: &[isize]) -> Graph {
    let mut b = GraphBuilder::new(n).expect("fixture order");
    for i in 0..n {
        b.add_edge(i, (i + 1) % n).unwrap();
        let j = (i as isize + shifts[i % shifts.len()]).rem_euclid(n as isize) as usize;
        if !b.has_edge(i, j) {
            b.add_edge(i, j).unwrap();
        }
    }
    b.build()
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &e).expect("fixture")
}

/// LCF `[5, -5]^7`.
pub fn heawood() -> Graph {
    lcf(14, &[5, -5])
}

/// LCF `[12, 7, -7]^8`.
pub fn mcgee() -> Graph {
    lcf(24, &[12, 7, -7])
}

/// Prüfer decoding; `n >= 2`.
fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(std::cmp::Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in &seq {
        let std::cmp::Reverse(leaf) = heap.pop().expect("a leaf always exists");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = heap.pop().unwrap();
    let std::cmp::Reverse(b) = heap.pop().unwrap();
    edges.push((a, b));
    edges
}

/// Cycle `0..2r` (labels `1..2r` shifted down by one), hub `2r` on the odd
/// ids (the even labels), then `pendants` leaves on the hub.
fn half_wheel_with_pendants(r: usize, pendants: usize) -> (Graph, BTreeMap<&'static str, Vec<usize>>) {
    let c = 2 * r;
    let hub = c;
    let mut e: Vec<(usize, usize)> = (0..c).map(|i| (i, (i + 1) % c)).collect();
    e.extend((1..c).step_by(2).map(|i| (i, hub)));
    e.extend((0..pendants).map(|k| (hub, c + 1 + k)));
    let g = Graph::from_edges(c + 1 + pendants, &e).expect("in range");
    let roles = BTreeMap::from([
        ("cycle", (0..c).collect()),
        ("spokes", (1..c).step_by(2).collect()),
        ("hub", vec![hub]),
        ("pendants", (c + 1..c + 1 + pendants).collect()),
    ]);
    (g, roles)
}

/// Builds the graph for a spec. Deterministic in `(family, params, seed)`;
/// random families default to seed 0.
pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    let mut roles = BTreeMap::new();
    let graph = match spec.family {
        Family::Path => {
            let [n] = spec.int_params()?;
            spec.require(n >= 1, "order must be at least 1")?;
            Graph::path(n)
        }
        Family::Cycle => {
            let [n] = spec.int_params()?;
            spec.require(n >= 3, "length must be at least 3")?;
            Graph::cycle(n)?
        }
        Family::Complete => {
            let [n] = spec.int_params()?;
            spec.require(n >= 1, "order must be at least 1")?;
            Graph::complete(n)
        }
        Family::CompleteMultipartite => {
            let parts = spec.ints()?;
            spec.require(!parts.is_empty() && parts.iter().all(|&p| p >= 1), "parts must be non-empty and positive")?;
            Graph::complete_multipartite(&parts)?
        }
        Family::Star => {
            let [k] = spec.int_params()?;
            spec.require(k >= 1, "needs at least one leaf")?;
            roles.insert("hub", vec![k]);
            Graph::from_edges(k + 1, &(0..k).map(|i| (i, k)).collect::<Vec<_>>())?
        }
        Family::Caterpillar => {
            // spine 0..s, then `legs` leaves per spine vertex in spine order
            let [s, legs] = spec.int_params()?;
            spec.require(s >= 1, "spine needs a vertex")?;
            let mut e: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
            for i in 0..s {
                for k in 0..legs {
                    e.push((i, s + i * legs + k));
                }
            }
            roles.insert("spine", (0..s).collect());
            Graph::from_edges(s * (1 + legs), &e)?
        }
        Family::RandomTree => {
            let [n] = spec.int_params()?;
            spec.require(n >= 1, "order must be at least 1")?;
            if n == 1 {
                Graph::empty(1)
            } else {
                Graph::from_edges(n, &random_tree(n, &mut spec.rng()))?
            }
        }
        Family::RandomBlock => {
            // a tree of cliques: each new block shares one existing vertex
            let [blocks, max_size] = spec.int_params()?;
            spec.require(blocks >= 1 && max_size >= 2, "needs a block and block size at least 2")?;
            let mut rng = spec.rng();
            let first = rng.gen_range(2..=max_size);
            let mut e = Vec::new();
            let mut n = first;
            for u in 0..first {
                for v in u + 1..first {
                    e.push((u, v));
                }
            }
            for _ in 1..blocks {
                let cut = rng.gen_range(0..n);
                let size = rng.gen_range(2..=max_size);
                let members: Vec<usize> = std::iter::once(cut).chain(n..n + size - 1).collect();
                for (i, &u) in members.iter().enumerate() {
                    for &v in &members[i + 1..] {
                        e.push((u, v));
                    }
                }
                n += size - 1;
            }
            Graph::from_edges(n, &e)?
        }
        Family::RandomUnicyclic => {
            let [n] = spec.int_params()?;
            spec.require(n >= 3, "order must be at least 3")?;
            let mut rng = spec.rng();
            let mut b = GraphBuilder::new(n)?;
            for (u, v) in random_tree(n, &mut rng) {
                b.add_edge(u, v)?;
            }
            // a tree on n >= 3 vertices always has a non-adjacent pair
            loop {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v && !b.has_edge(u, v) {
                    b.add_edge(u, v)?;
                    break;
                }
            }
            b.build()
        }
        Family::Hypercube => {
            let [k] = spec.int_params()?;
            spec.require(k <= 9, "dimension above 9 exceeds the order limit")?;
            hypercube(k as u32)?
        }
        Family::Grid => {
            // n x m vertices, id = i * m + j
            let [n, m] = spec.int_params()?;
            spec.require(n >= 1 && m >= 1, "dimensions must be positive")?;
            cartesian_product(&Graph::path(n), &Graph::path(m))?
        }
        Family::HalfWheel => {
            let [r] = spec.int_params()?;
            spec.require(r >= 2, "needs r >= 2")?;
            let (g, ro) = half_wheel_with_pendants(r, 0);
            roles = ro;
            g
        }
        Family::HalfWheelPendant => {
            // parameters (a, b): the half-wheel on b - a + 2 spokes plus a - 2 pendants
            let [a, b] = spec.int_params()?;
            spec.require(a >= 3 && b >= a + 2, "needs b >= a + 2 >= 5")?;
            let (g, ro) = half_wheel_with_pendants(b - a + 2, a - 2);
            roles = ro;
            g
        }
        Family::WheelPendant => {
            // 5-cycle 0..5, hub 5, pendants 6.. on the hub
            let [a] = spec.int_params()?;
            spec.require(a >= 3, "needs a >= 3")?;
            let mut e: Vec<(usize, usize)> = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, 5)]).collect();
            e.extend((0..a - 2).map(|k| (5, 6 + k)));
            roles.insert("cycle", (0..5).collect());
            roles.insert("hub", vec![5]);
            roles.insert("pendants", (6..4 + a).collect());
            Graph::from_edges(4 + a, &e)?
        }
        Family::RGraph => {
            // clique 0..=s, leaves s+1.. on vertex 0
            let [r, s] = spec.int_params()?;
            spec.require(s >= 1, "needs s >= 1")?;
            let mut b = GraphBuilder::new(s + 1 + r)?;
            for u in 0..=s {
                for v in u + 1..=s {
                    b.add_edge(u, v)?;
                }
            }
            for k in 0..r {
                b.add_edge(0, s + 1 + k)?;
            }
            roles.insert("clique", (0..=s).collect());
            roles.insert("hub", vec![0]);
            roles.insert("pendants", (s + 1..s + 1 + r).collect());
            b.build()
        }
        Family::PGraph => {
            // sides A = 0..s, B = s..2s with a_i ~ b_j iff i != j; apex 2s on A
            let [r, s] = spec.int_params()?;
            spec.require(s >= 2, "needs s >= 2")?;
            let x = 2 * s;
            let mut b = GraphBuilder::new(2 * s + 1 + r)?;
            for i in 0..s {
                for j in 0..s {
                    if i != j {
                        b.add_edge(i, s + j)?;
                    }
                }
                b.add_edge(i, x)?;
            }
            for k in 0..r {
                b.add_edge(x, x + 1 + k)?;
            }
            roles.insert("side_a", (0..s).collect());
            roles.insert("side_b", (s..2 * s).collect());
            roles.insert("hub", vec![x]);
            roles.insert("pendants", (x + 1..x + 1 + r).collect());
            b.build()
        }
        Family::GAbl => {
            // clique 0..b; X = 0..a-1, Y = a-1..b joined to x_0 = b; path b..=b+l
            let [a, bb, l] = spec.int_params()?;
            // l = 0 leaves x_0 alone; needed for order b + 1
            spec.require(2 <= a && a <= bb, "needs 2 <= a <= b")?;
            let mut g = GraphBuilder::new(bb + l + 1)?;
            for u in 0..bb {
                for v in u + 1..bb {
                    g.add_edge(u, v)?;
                }
            }
            for y in a - 1..bb {
                g.add_edge(y, bb)?;
            }
            for i in 0..l {
                g.add_edge(bb + i, bb + i + 1)?;
            }
            roles.insert("x_side", (0..a - 1).collect());
            roles.insert("y_side", (a - 1..bb).collect());
            roles.insert("path", (bb..=bb + l).collect());
            g.build()
        }
        Family::Petersen => {
            spec.int_params::<0>()?;
            petersen()
        }
        Family::Heawood => {
            spec.int_params::<0>()?;
            heawood()
        }
        Family::McGee => {
            spec.int_params::<0>()?;
            mcgee()
        }
        Family::RandomSplit => {
            // clique 0..c, independent c..c+i, each with a non-empty clique neighbourhood
            let [c, i] = spec.int_params()?;
            spec.require(c >= 1, "needs a non-empty clique")?;
            let mut rng = spec.rng();
            let p = rng.gen_range(0.15..0.85);
            let mut b = GraphBuilder::new(c + i)?;
            for u in 0..c {
                for v in u + 1..c {
                    b.add_edge(u, v)?;
                }
            }
            for v in c..c + i {
                let mut nbrs: Vec<usize> = (0..c).filter(|_| rng.gen_bool(p)).collect();
                if nbrs.is_empty() {
                    nbrs.push(rng.gen_range(0..c));
                }
                for u in nbrs {
                    b.add_edge(u, v)?;
                }
            }
            roles.insert("clique", (0..c).collect());
            roles.insert("independent", (c..c + i).collect());
            b.build()
        }
        Family::RandomBipartite => {
            // sides 0..a and a..a+b; a random spanning tree plus random extra edges
            let [a, bs] = spec.int_params()?;
            spec.require(a >= 1 && bs >= 1, "sides must be non-empty")?;
            let mut rng = spec.rng();
            let p = rng.gen_range(0.1..0.6);
            let mut order: Vec<usize> = (0..a + bs).collect();
            order.shuffle(&mut rng);
            let side = |v: usize| v < a;
            let mut g = GraphBuilder::new(a + bs)?;
            let first_a = *order.iter().find(|&&v| side(v)).unwrap();
            let first_b = *order.iter().find(|&&v| !side(v)).unwrap();
            g.add_edge(first_a, first_b)?;
            let mut placed = vec![first_a, first_b];
            for &v in &order {
                if v == first_a || v == first_b {
                    continue;
                }
                let opposite: Vec<usize> = placed.iter().copied().filter(|&u| side(u) != side(v)).collect();
                g.add_edge(v, *opposite.choose(&mut rng).unwrap())?;
                placed.push(v);
            }
            for u in 0..a {
                for v in a..a + bs {
                    if !g.has_edge(u, v) && rng.gen_bool(p) {
                        g.add_edge(u, v)?;
                    }
                }
            }
            roles.insert("side_a", (0..a).collect());
            roles.insert("side_b", (a..a + bs).collect());
            g.build()
        }
        Family::CoronaOf => {
            let (g, h) = spec.spec_pair()?;
            corona(&generate(g)?.graph, &generate(h)?.graph)?
        }
        Family::JoinOf => {
            let (g, h) = spec.spec_pair()?;
            join(&generate(g)?.graph, &generate(h)?.graph)?
        }
    };
    Ok(Generated {
        spec: spec.clone(),
        graph,
        roles,
    })
}

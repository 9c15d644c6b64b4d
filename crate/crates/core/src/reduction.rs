//! Clique reduces to monophonic position: join the graph to a clique of the
//! same order and shift the target by `n`.

use serde::Serialize;

use crate::clique::clique_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::position::{position_number, PathMode, SolverOptions};

/// Largest source order [`verify_reduction`] accepts (product order 20).
pub const VERIFY_CAP: usize = 10;

#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub source: Graph,
    pub k: usize,
    /// The source on `0..n`, a clique on `n..2n`, every cross pair adjacent.
    pub product: Graph,
    pub k_prime: usize,
}

pub fn reduce_clique_to_mp(g: &Graph, k: usize) -> Result<ReductionInstance> {
    let n = g.order();
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={n}")));
    }
    let mut b = GraphBuilder::new(2 * n)?;
    for (u, v) in g.edges() {
        b.add_edge(u, v)?;
    }
    for u in n..2 * n {
        for v in u + 1..2 * n {
            b.add_edge(u, v)?;
        }
    }
    for u in 0..n {
        for v in n..2 * n {
            b.add_edge(u, v)?;
        }
    }
    Ok(ReductionInstance {
        source: g.clone(),
        k,
        product: b.build(),
        k_prime: n + k,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionVerdict {
    pub n: usize,
    pub k: usize,
    pub k_prime: usize,
    pub omega_source: usize,
    pub omega_product: usize,
    pub mp_product: usize,
    pub clique_answer: bool,
    pub mp_answer: bool,
}

impl ReductionVerdict {
    /// `mp(G') = ω(G) + n`.
    pub fn identity_holds(&self) -> bool {
        self.mp_product == self.omega_source + self.n
    }

    pub fn omega_identity_holds(&self) -> bool {
        self.omega_product == self.omega_source + self.n
    }

    pub fn answers_agree(&self) -> bool {
        self.clique_answer == self.mp_answer
    }

    pub fn holds(&self) -> bool {
        self.identity_holds() && self.omega_identity_holds() && self.answers_agree()
    }
}

/// Solves both sides exactly. The product's `mp` comes from the general
/// solver, never from a join formula. Cap and limit failures are errors; a
/// false identity is reported in the verdict.
pub fn verify_reduction(inst: &ReductionInstance) -> Result<ReductionVerdict> {
    let n = inst.source.order();
    if n > VERIFY_CAP {
        return Err(Error::CapExceeded {
            what: "verify_reduction",
            order: n,
            cap: VERIFY_CAP,
        });
    }
    let omega_source = clique_number(&inst.source).0;
    let omega_product = clique_number(&inst.product).0;
    let mp_product = position_number(&inst.product, PathMode::Monophonic, &SolverOptions::default())?.value;
    Ok(ReductionVerdict {
        n,
        k: inst.k,
        k_prime: inst.k_prime,
        omega_source,
        omega_product,
        mp_product,
        clique_answer: omega_source >= inst.k,
        mp_answer: mp_product >= inst.k_prime,
    })
}

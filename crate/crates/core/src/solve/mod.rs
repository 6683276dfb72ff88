//! Exact solvers for `L{k}(G)`, the k-limited packing number `L_k(G)` and
//! the independence number `α(G)`.
//!
//! The brute-force enumerators double as oracles for the branch-and-bound
//! solver and for the reductions, so they share no search code with them.

mod bnb;
mod brute;
mod mis;

use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::{Graph, Vertex};

pub use bnb::branch_and_bound_lk;
pub use brute::{brute_force_limited_lk, brute_force_lk};
pub use mis::{l1_via_square, max_independent_set, rho2, MAX_VERTICES as MIS_MAX_VERTICES};

/// Caps for the exhaustive methods. Every cap is in vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolverConfig {
    pub brute_max_vertices: usize,
    pub limited_max_vertices: usize,
    /// At most [`MIS_MAX_VERTICES`].
    pub mis_max_vertices: usize,
    /// Refuse once branch and bound has explored this many nodes.
    pub bnb_node_limit: Option<u64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            brute_max_vertices: 20,
            limited_max_vertices: 20,
            mis_max_vertices: 40,
            bnb_node_limit: None,
        }
    }
}

/// `f: V -> {0, 1, ...}` together with `f(V)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackingFunction {
    values: Vec<u64>,
    total: u64,
}

impl PackingFunction {
    pub fn new(values: Vec<u64>) -> PackingFunction {
        let total = values.iter().sum();
        PackingFunction { values, total }
    }

    pub fn zero(n: usize) -> PackingFunction {
        PackingFunction::new(alloc::vec![0; n])
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, v: Vertex) -> u64 {
        self.values[v]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// `(v, f(v))` for every `v` with `f(v) > 0`, ascending by vertex.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vertex, u64)> + '_ {
        self.values.iter().copied().enumerate().filter(|&(_, x)| x > 0)
    }

    /// `f(N[v]) <= k` for every vertex, checked straight from the definition.
    pub fn is_feasible(&self, g: &Graph, k: u64) -> bool {
        self.values.len() == g.n()
            && (0..g.n()).all(|v| {
                let load: u64 = self.values[v] + g.neighbors(v).iter().map(|&u| self.values[u]).sum::<u64>();
                load <= k
            })
    }
}

/// A vertex set `B` with `|N[v] ∩ B| <= k` for all `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitedPackingSet {
    pub members: Vec<Vertex>,
}

impl LimitedPackingSet {
    pub fn is_feasible(&self, g: &Graph, k: u64) -> bool {
        let mut inside = alloc::vec![false; g.n()];
        for &v in &self.members {
            if v >= g.n() || inside[v] {
                return false;
            }
            inside[v] = true;
        }
        (0..g.n()).all(|v| {
            let hits = inside[v] as u64 + g.neighbors(v).iter().filter(|&&u| inside[u]).count() as u64;
            hits <= k
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    BranchAndBound,
    Reduction,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::BranchAndBound => "branch_and_bound",
            Method::Reduction => "reduction",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Function(PackingFunction),
    LimitedSet(LimitedPackingSet),
    IndependentSet(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: u64,
    pub witness: Witness,
    pub nodes_explored: u64,
    pub method: Method,
}

impl SolveResult {
    pub fn function(&self) -> Option<&PackingFunction> {
        match &self.witness {
            Witness::Function(f) => Some(f),
            _ => None,
        }
    }

    pub fn set(&self) -> Option<&[Vertex]> {
        match &self.witness {
            Witness::LimitedSet(s) => Some(&s.members),
            Witness::IndependentSet(s) => Some(s),
            Witness::Function(_) => None,
        }
    }
}

/// Exact `L{k}(G)` with whichever exhaustive method fits: brute force up to
/// `auto_brute_max` vertices, branch and bound beyond.
pub fn solve_lk(g: &Graph, k: u64, auto_brute_max: usize, config: &SolverConfig) -> Result<SolveResult> {
    if g.n() <= auto_brute_max {
        brute_force_lk(g, k, config)
    } else {
        branch_and_bound_lk(g, k, config)
    }
}

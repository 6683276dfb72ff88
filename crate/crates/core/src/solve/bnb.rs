use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Method, PackingFunction, SolveResult, SolverConfig, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lp::simplex::{self, Outcome};
use crate::lp::Rational;

struct Node {
    lower: Vec<u64>,
    upper: Vec<u64>,
}

enum Relaxation {
    Infeasible,
    Solved { value: Rational, x: Vec<Rational> },
}

/// LP relaxation of the packing ILP inside the box `lower <= x <= upper`.
///
/// Substituting `x = lower + y` keeps the right-hand side non-negative
/// whenever the box is feasible, so the slack basis is always a valid start.
fn relax(g: &Graph, k: u64, node: &Node) -> Result<Relaxation> {
    let n = g.n();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for v in 0..n {
        let used: u64 = node.lower[v] + g.neighbors(v).iter().map(|&u| node.lower[u]).sum::<u64>();
        if used > k {
            return Ok(Relaxation::Infeasible);
        }
        let mut row = vec![Rational::zero(); n];
        row[v] = int(1);
        for &u in g.neighbors(v) {
            row[u] = int(1);
        }
        rows.push(row);
        rhs.push(int(k - used));
    }
    for v in 0..n {
        // x_v <= k already follows from the row for N[v]
        if node.upper[v] < k {
            let mut row = vec![Rational::zero(); n];
            row[v] = int(1);
            rows.push(row);
            rhs.push(int(node.upper[v] - node.lower[v]));
        }
    }
    let ones = vec![int(1); n];
    match simplex::maximize(&rows, &rhs, &ones)? {
        Outcome::Optimal(s) => {
            let base: u64 = node.lower.iter().sum();
            let x = s
                .primal
                .into_iter()
                .zip(&node.lower)
                .map(|(y, &l)| y + int(l))
                .collect();
            Ok(Relaxation::Solved { value: s.value + int(base), x })
        }
        Outcome::Unbounded => unreachable!("packing LP is bounded by its constraint rows"),
    }
}

fn int(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn to_u64(x: &BigInt) -> u64 {
    x.to_u64().expect("LP values lie in 0..=k")
}

/// Index of the most fractional entry (fractional part closest to 1/2),
/// lowest index on ties. `None` when `x` is integral.
fn branching_variable(x: &[Rational]) -> Option<usize> {
    let half = Rational::new(1.into(), 2.into());
    let mut best: Option<(usize, Rational)> = None;
    for (i, xi) in x.iter().enumerate() {
        if xi.is_integer() {
            continue;
        }
        let distance = (xi.fract() - &half).abs();
        if best.as_ref().is_none_or(|(_, d)| distance < *d) {
            best = Some((i, distance));
        }
    }
    best.map(|(i, _)| i)
}

fn solve_connected(g: &Graph, k: u64, config: &SolverConfig, nodes: &mut u64) -> Result<Vec<u64>> {
    let n = g.n();
    let mut incumbent = 0u64;
    let mut best = vec![0u64; n];
    let mut stack = vec![Node {
        lower: vec![0; n],
        upper: vec![k; n],
    }];

    while let Some(node) = stack.pop() {
        *nodes += 1;
        if let Some(limit) = config.bnb_node_limit {
            if *nodes > limit {
                return Err(Error::CapExceeded {
                    what: "branch and bound",
                    size: *nodes as usize,
                    cap: limit as usize,
                });
            }
        }
        let Relaxation::Solved { value, x } = relax(g, k, &node)? else {
            continue;
        };
        if to_u64(&value.floor().to_integer()) <= incumbent {
            continue;
        }
        match branching_variable(&x) {
            None => {
                incumbent = to_u64(&value.to_integer());
                for (b, xi) in best.iter_mut().zip(&x) {
                    *b = to_u64(&xi.to_integer());
                }
            }
            Some(j) => {
                let (floor, ceil) = {
                    let (q, _) = x[j].numer().div_mod_floor(x[j].denom());
                    (to_u64(&q), to_u64(&q) + 1)
                };
                let mut down = Node {
                    lower: node.lower.clone(),
                    upper: node.upper.clone(),
                };
                down.upper[j] = floor;
                let mut up = node;
                up.lower[j] = ceil;
                // depth first, rounding up explored first
                stack.push(down);
                stack.push(up);
            }
        }
    }
    Ok(best)
}

/// Exact `L{k}(G)` by LP-based branch and bound, solved per connected
/// component and summed.
///
/// Each node solves the exact rational relaxation over its box, is fathomed
/// when `⌊LP⌋` cannot beat the incumbent, and otherwise splits the most
/// fractional variable into `x <= ⌊x*⌋` and `x >= ⌈x*⌉`.
pub fn branch_and_bound_lk(g: &Graph, k: u64, config: &SolverConfig) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1"));
    }
    let mut values = vec![0u64; g.n()];
    let mut nodes = 0;
    for comp in g.connected_components() {
        let local = solve_connected(&comp.graph, k, config, &mut nodes)?;
        for (i, x) in local.into_iter().enumerate() {
            values[comp.labels[i]] = x;
        }
    }
    let f = PackingFunction::new(values);
    Ok(SolveResult {
        optimum: f.total(),
        witness: Witness::Function(f),
        nodes_explored: nodes,
        method: Method::BranchAndBound,
    })
}

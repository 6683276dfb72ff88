//! Exact LP relaxation of the `{k}`-packing ILP:
//!
//! ```text
//! max Σ x_v   s.t.   x(N[v]) <= k  for every v,   x >= 0
//! ```
//!
//! and its dual `min k·Σ y_v  s.t.  y(N[v]) >= 1, y >= 0`. All arithmetic is
//! over arbitrary-precision rationals kept in lowest terms.

pub mod simplex;

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solve::{branch_and_bound_lk, PackingFunction, SolverConfig};

pub type Rational = num_rational::BigRational;

/// Optimal basic solution of the relaxation with its dual certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpResult {
    /// `k · Z*_rlx(G)`.
    pub objective: Rational,
    pub primal: Vec<Rational>,
    /// One entry per closed-neighborhood constraint.
    pub dual: Vec<Rational>,
    /// Least common multiple of the primal denominators.
    pub q: BigUint,
}

impl LpResult {
    /// Objective as `p/q`, or a plain integer when integral.
    pub fn objective_string(&self) -> alloc::string::String {
        rational_string(&self.objective)
    }
}

/// `p/q` in lowest terms, or `p` alone when the denominator is 1.
pub fn rational_string(x: &Rational) -> alloc::string::String {
    use alloc::string::ToString;
    if x.is_integer() {
        x.numer().to_string()
    } else {
        alloc::format!("{}/{}", x.numer(), x.denom())
    }
}

fn int(x: u64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

/// Solves the relaxation for `k` exactly and returns a vertex of the
/// feasible polyhedron together with the dual read from the final basis.
pub fn solve_relaxation(g: &Graph, k: u64) -> Result<LpResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1"));
    }
    let n = g.n();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|v| {
            let mut row = alloc::vec![Rational::zero(); n];
            for u in g.closed_nbhd(v) {
                row[u] = int(1);
            }
            row
        })
        .collect();
    let rhs = alloc::vec![int(k); n];
    let ones = alloc::vec![int(1); n];
    match simplex::maximize(&rows, &rhs, &ones)? {
        simplex::Outcome::Optimal(s) => {
            let q = compute_q(&s.primal);
            Ok(LpResult {
                objective: s.value,
                primal: s.primal,
                dual: s.dual,
                q,
            })
        }
        simplex::Outcome::Unbounded => unreachable!("x_v <= k bounds the packing LP"),
    }
}

/// Checks the primal/dual pair from scratch: `A x <= k`, `x >= 0`,
/// `Aᵀ y >= 1`, `y >= 0` and `Σ x = k Σ y`, plus `objective = Σ x`.
pub fn verify_certificate(g: &Graph, k: u64, result: &LpResult) -> Result<bool> {
    let n = g.n();
    for len in [result.primal.len(), result.dual.len()] {
        if len != n {
            return Err(Error::DimensionMismatch { expected: n, found: len });
        }
    }
    let kk = int(k);
    let one = Rational::one();
    let neighborhood_sum = |vec: &[Rational], v: usize| -> Rational {
        g.neighbors(v).iter().fold(vec[v].clone(), |acc, &u| acc + &vec[u])
    };
    let primal_ok = result.primal.iter().all(|x| !x.is_negative())
        && (0..n).all(|v| neighborhood_sum(&result.primal, v) <= kk);
    // A_G is symmetric, so column sums of Aᵀy are closed-neighborhood sums
    let dual_ok = result.dual.iter().all(|y| !y.is_negative())
        && (0..n).all(|v| neighborhood_sum(&result.dual, v) >= one);
    let primal_value: Rational = result.primal.iter().sum();
    let dual_value: Rational = result.dual.iter().sum::<Rational>() * &kk;
    Ok(primal_ok && dual_ok && primal_value == dual_value && primal_value == result.objective)
}

/// `lcm` of the lowest-terms denominators; zero entries count as `0/1`.
pub fn compute_q(primal: &[Rational]) -> BigUint {
    primal
        .iter()
        .map(|x| {
            if x.is_zero() {
                BigUint::one()
            } else {
                x.denom().magnitude().clone()
            }
        })
        .fold(BigUint::one(), |acc, d| acc.lcm(&d))
}

/// Outcome of checking `L{k1·q}(G) = k1·q·Z*_rlx(G)` on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem3Report {
    pub k1: u64,
    pub q: BigUint,
    pub z_rlx: Rational,
    /// `k1 · q`, when it fits in a `u64`.
    pub scaled_k: Option<u64>,
    /// `k1 · q · Z*_rlx`.
    pub expected_total: Rational,
    /// The LP optimum scaled by `k1 · q`, when every entry came out integral.
    pub scaled_witness: Option<PackingFunction>,
    pub witness_feasible: bool,
    /// Exact `L{k1·q}(G)`; `None` when the solve was refused.
    pub exact: Option<u64>,
}

impl Theorem3Report {
    /// The scaled LP optimum is an integral, feasible `{k1·q}`-packing whose
    /// total equals `k1·q·Z*`. Since `k·Z*` bounds `L{k}` from above, this
    /// already pins the optimum without a search.
    pub fn witness_attains_lp_bound(&self) -> bool {
        match &self.scaled_witness {
            Some(f) => self.witness_feasible && int(f.total()) == self.expected_total,
            None => false,
        }
    }

    /// Optimality confirmed by an exact solve as well.
    pub fn holds(&self) -> bool {
        self.witness_attains_lp_bound()
            && self.exact.map(|e| int(e) == self.expected_total).unwrap_or(false)
    }
}

/// Scales an optimal LP vertex by `k1·q`, certifies the result as a
/// `{k1·q}`-packing function and compares it against branch and bound.
///
/// A branch-and-bound refusal (node limit) leaves `exact` empty instead of
/// failing the whole report.
pub fn verify_theorem3(g: &Graph, k1: u64, config: &SolverConfig) -> Result<Theorem3Report> {
    if k1 == 0 {
        return Err(Error::InvalidParameter("k1 must be at least 1"));
    }
    let lp = solve_relaxation(g, 1)?;
    let scale = BigUint::from(k1) * &lp.q;
    let scale_q = Rational::from_integer(BigInt::from(scale.clone()));
    let expected_total = &lp.objective * &scale_q;
    let scaled_k = scale.to_u64();

    let scaled: Option<Vec<u64>> = lp
        .primal
        .iter()
        .map(|x| {
            let y = x * &scale_q;
            if y.is_integer() {
                y.to_integer().to_u64()
            } else {
                None
            }
        })
        .collect();
    let scaled_witness = scaled.map(PackingFunction::new);
    let witness_feasible = match (&scaled_witness, scaled_k) {
        (Some(f), Some(k)) => f.is_feasible(g, k),
        _ => false,
    };

    let exact = match scaled_k {
        Some(k) => match branch_and_bound_lk(g, k, config) {
            Ok(r) => Some(r.optimum),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        },
        None => None,
    };

    Ok(Theorem3Report {
        k1,
        q: lp.q,
        z_rlx: lp.objective,
        scaled_k,
        expected_total,
        scaled_witness,
        witness_feasible,
        exact,
    })
}

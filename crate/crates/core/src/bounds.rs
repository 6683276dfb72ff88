//! Closed-form bounds on `L{k}(G)`, the exact values for paths, cycles and
//! cliques, and the explicit cycle packing that attains `⌊nk/3⌋`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::lp::{solve_relaxation, Rational};
use crate::solve::{branch_and_bound_lk, l1_via_square, PackingFunction, SolverConfig, MIS_MAX_VERTICES};

/// `⌈(1 + Diam(G)) / 3⌉ · k`, for connected graphs.
pub fn lower_bound_diameter(g: &Graph, k: u64) -> Result<u64> {
    let diam = g.diameter()? as u64;
    Ok((diam + 1).div_ceil(3) * k)
}

/// `⌊n·k / (1 + δ(G))⌋`.
pub fn upper_bound_degree(g: &Graph, k: u64) -> u64 {
    g.n() as u64 * k / (1 + g.min_degree() as u64)
}

/// `⌊k · Z*_rlx(G)⌋`.
pub fn upper_bound_lp(g: &Graph, k: u64) -> Result<u64> {
    let z = solve_relaxation(g, 1)?.objective;
    Ok(floor_u64(&(z * Rational::from_integer(BigInt::from(k)))))
}

fn floor_u64(x: &Rational) -> u64 {
    x.floor().to_integer().to_u64().expect("bounds are small non-negative integers")
}

/// Exact `L{k}` for the families with a closed form.
pub fn family_formula(family: Family, n: usize, k: u64) -> Result<u64> {
    if n < family.min_size() {
        return Err(Error::InvalidParameter("size below family minimum"));
    }
    let n = n as u64;
    match family {
        Family::Path => Ok(n.div_ceil(3) * k),
        Family::Cycle => Ok(n * k / 3),
        Family::Clique => Ok(k),
        Family::Claw | Family::Star => Err(Error::InvalidParameter("no closed form for this family")),
    }
}

/// The periodic packing of `C_n` (canonical labels `0..n`) with values
/// `⌊k/3⌋`, `⌊k/3 + 1/2⌋`, `⌈k/3⌉` by vertex index mod 3. Its total is
/// `⌊nk/3⌋`.
pub fn cycle_witness(n: usize, k: u64) -> Result<PackingFunction> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs at least 3 vertices"));
    }
    // ⌊k/3 + 1/2⌋ = ⌊(2k + 3) / 6⌋ keeps everything in integers
    let pattern = [k / 3, (2 * k + 3) / 6, k.div_ceil(3)];
    Ok(PackingFunction::new((0..n).map(|i| pattern[i % 3]).collect()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Diameter,
    KTimesL1,
    Degree,
    Lp,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Diameter => "lower_diam",
            BoundKind::KTimesL1 => "lower_k_l1",
            BoundKind::Degree => "upper_degree",
            BoundKind::Lp => "upper_lp",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub k: u64,
    /// Omitted for disconnected graphs.
    pub lower_diam: Option<u64>,
    pub lower_k_l1: u64,
    pub upper_degree: u64,
    pub upper_lp: u64,
    pub exact: Option<u64>,
    pub tight_lower: Vec<BoundKind>,
    pub tight_upper: Vec<BoundKind>,
}

impl BoundsReport {
    pub fn best_lower(&self) -> u64 {
        self.lower_diam.unwrap_or(0).max(self.lower_k_l1)
    }

    pub fn best_upper(&self) -> u64 {
        self.upper_degree.min(self.upper_lp)
    }

    /// `max(lower) <= exact <= min(upper)` (vacuous without `exact`).
    pub fn is_consistent(&self) -> bool {
        let ordered = self.best_lower() <= self.best_upper();
        ordered && self.exact.is_none_or(|e| self.best_lower() <= e && e <= self.best_upper())
    }
}

fn exact_l1(g: &Graph, config: &SolverConfig) -> Result<u64> {
    if g.n() <= config.mis_max_vertices.min(MIS_MAX_VERTICES) {
        Ok(l1_via_square(g, config)?.optimum)
    } else {
        Ok(branch_and_bound_lk(g, 1, config)?.optimum)
    }
}

/// Every bound for `(g, k)`, optionally with the exact value and tightness.
///
/// `k·L{1}` needs an exact `L{1}`, computed as `α(G²)` within the
/// independent-set cap and by branch and bound beyond it.
pub fn bounds_report(g: &Graph, k: u64, with_exact: bool, config: &SolverConfig) -> Result<BoundsReport> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1"));
    }
    let lower_diam = match lower_bound_diameter(g, k) {
        Ok(b) => Some(b),
        Err(Error::Disconnected) => None,
        Err(e) => return Err(e),
    };
    let lower_k_l1 = k * exact_l1(g, config)?;
    let upper_degree = upper_bound_degree(g, k);
    let upper_lp = upper_bound_lp(g, k)?;
    let exact = if with_exact {
        Some(branch_and_bound_lk(g, k, config)?.optimum)
    } else {
        None
    };

    let mut tight_lower = Vec::new();
    let mut tight_upper = Vec::new();
    if let Some(e) = exact {
        if lower_diam == Some(e) {
            tight_lower.push(BoundKind::Diameter);
        }
        if lower_k_l1 == e {
            tight_lower.push(BoundKind::KTimesL1);
        }
        if upper_degree == e {
            tight_upper.push(BoundKind::Degree);
        }
        if upper_lp == e {
            tight_upper.push(BoundKind::Lp);
        }
    }
    Ok(BoundsReport {
        k,
        lower_diam,
        lower_k_l1,
        upper_degree,
        upper_lp,
        exact,
        tight_lower,
        tight_upper,
    })
}

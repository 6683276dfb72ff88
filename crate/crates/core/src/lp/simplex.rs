//! Dense primal simplex over exact rationals for problems of the form
//!
//! ```text
//! max c·x  s.t.  A x <= b,  x >= 0,  with b >= 0
//! ```
//!
//! The slack basis is feasible because `b >= 0`, so no phase one is needed.
//! Pivots follow Bland's rule (lowest-index entering column, lowest-index
//! leaving basic variable among ratio-test ties), which cannot cycle.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub value: Rational,
    /// Basic feasible solution, one entry per structural column.
    pub primal: Vec<Rational>,
    /// Shadow prices, one per constraint row, read off the slack columns of
    /// the final objective row.
    pub dual: Vec<Rational>,
    pub pivots: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Optimal(Solution),
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    /// `z_j - c_j` for every column; all non-negative at optimality.
    reduced: Vec<Rational>,
    value: Rational,
    basis: Vec<usize>,
}

impl Tableau {
    fn entering(&self) -> Option<usize> {
        self.reduced.iter().position(|r| r.is_negative())
    }

    fn leaving(&self, col: usize) -> Option<usize> {
        let mut best: Option<(usize, Rational)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            let a = &row[col];
            if !a.is_positive() {
                continue;
            }
            let ratio = &self.rhs[i] / a;
            let better = match &best {
                None => true,
                Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
            };
            if better {
                best = Some((i, ratio));
            }
        }
        best.map(|(i, _)| i)
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x / &p;
            }
        }
        self.rhs[r] = &self.rhs[r] / &p;

        let pivot_row = core::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = self.reduced[col].clone();
        if !factor.is_zero() {
            for (x, y) in self.reduced.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
            self.value -= &factor * &pivot_rhs;
        }
        self.rows[r] = pivot_row;
        self.basis[r] = col;
    }
}

/// Solves `max objective·x` subject to `constraints · x <= rhs`, `x >= 0`.
///
/// Every row of `constraints` must have `objective.len()` entries and every
/// entry of `rhs` must be non-negative.
pub fn maximize(
    constraints: &[Vec<Rational>],
    rhs: &[Rational],
    objective: &[Rational],
) -> Result<Outcome> {
    let m = constraints.len();
    let nv = objective.len();
    if rhs.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: rhs.len() });
    }
    if let Some(row) = constraints.iter().find(|row| row.len() != nv) {
        return Err(Error::DimensionMismatch { expected: nv, found: row.len() });
    }
    if rhs.iter().any(Signed::is_negative) {
        return Err(Error::InvalidParameter("right-hand side must be non-negative"));
    }

    let width = nv + m;
    let rows = constraints
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut full = Vec::with_capacity(width);
            full.extend(row.iter().cloned());
            full.extend((0..m).map(|j| if i == j { one() } else { Rational::zero() }));
            full
        })
        .collect();
    let mut reduced: Vec<Rational> = objective.iter().map(|c| -c).collect();
    reduced.resize(width, Rational::zero());

    let mut t = Tableau {
        rows,
        rhs: rhs.to_vec(),
        reduced,
        value: Rational::zero(),
        basis: (nv..width).collect(),
    };

    let mut pivots = 0;
    while let Some(col) = t.entering() {
        let Some(r) = t.leaving(col) else {
            return Ok(Outcome::Unbounded);
        };
        t.pivot(r, col);
        pivots += 1;
    }

    let mut primal = vec![Rational::zero(); nv];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nv {
            primal[b] = t.rhs[i].clone();
        }
    }
    let dual = t.reduced[nv..].to_vec();
    Ok(Outcome::Optimal(Solution {
        value: t.value,
        primal,
        dual,
        pivots,
    }))
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| r(x, 1)).collect()
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y st x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
        let a = [ints(&[1, 0]), ints(&[0, 2]), ints(&[3, 2])];
        let Outcome::Optimal(s) = maximize(&a, &ints(&[4, 12, 18]), &ints(&[3, 5])).unwrap() else {
            panic!("bounded");
        };
        assert_eq!(s.value, r(36, 1));
        assert_eq!(s.primal, ints(&[2, 6]));
        assert_eq!(s.dual, [r(0, 1), r(3, 2), r(1, 1)]);
    }

    #[test]
    fn fractional_vertex() {
        // max x + y st 2x + y <= 1, x + 2y <= 1  ->  2/3 at (1/3, 1/3)
        let a = [ints(&[2, 1]), ints(&[1, 2])];
        let Outcome::Optimal(s) = maximize(&a, &ints(&[1, 1]), &ints(&[1, 1])).unwrap() else {
            panic!("bounded");
        };
        assert_eq!(s.value, r(2, 3));
        assert_eq!(s.primal, [r(1, 3), r(1, 3)]);
        assert_eq!(s.dual, [r(1, 3), r(1, 3)]);
    }

    #[test]
    fn unbounded_and_bad_input() {
        let a = [ints(&[1, -1])];
        assert_eq!(maximize(&a, &ints(&[1]), &ints(&[0, 1])).unwrap(), Outcome::Unbounded);
        assert!(maximize(&a, &ints(&[-1]), &ints(&[0, 1])).is_err());
        assert!(maximize(&a, &ints(&[1, 1]), &ints(&[0, 1])).is_err());
        assert!(maximize(&a, &ints(&[1]), &ints(&[1])).is_err());
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Beale's cycling example (for Dantzig's rule), in <= form.
        let a = [
            vec![r(1, 4), r(-8, 1), r(-1, 1), r(9, 1)],
            vec![r(1, 2), r(-12, 1), r(-1, 2), r(3, 1)],
            vec![r(0, 1), r(0, 1), r(1, 1), r(0, 1)],
        ];
        let c = [r(3, 4), r(-20, 1), r(1, 2), r(-6, 1)];
        let Outcome::Optimal(s) = maximize(&a, &ints(&[0, 0, 1]), &c).unwrap() else {
            panic!("bounded");
        };
        assert_eq!(s.value, r(5, 4));
    }
}

//! Exact algorithms for the `{k}`-packing function problem on simple
//! undirected graphs.
//!
//! A `{k}`-packing function assigns non-negative integers to vertices so
//! that every closed neighborhood sums to at most `k`; `L{k}(G)` is the
//! largest achievable total. This crate computes it exactly (brute force,
//! LP-based branch and bound, and `α(G²)` for `k = 1`), solves the rational
//! LP relaxation with a dual certificate, tests total unimodularity of the
//! neighborhood matrix, and evaluates the closed-form bounds.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod error;
pub mod graph;
pub mod lp;
pub mod matrix;
pub mod solve;

pub use error::{Error, Result};
pub use graph::{make_family, Component, Family, Graph, NeighborhoodMatrix, Vertex};
pub use lp::{compute_q, solve_relaxation, verify_certificate, verify_theorem3, LpResult, Rational};
pub use matrix::{determinant, is_totally_unimodular, IntMatrix, TuVerdict};
pub use solve::{
    branch_and_bound_lk, brute_force_limited_lk, brute_force_lk, l1_via_square, max_independent_set, rho2,
    LimitedPackingSet, Method, PackingFunction, SolveResult, SolverConfig, Witness,
};

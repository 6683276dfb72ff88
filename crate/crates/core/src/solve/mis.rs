use alloc::vec::Vec;

use super::{Method, PackingFunction, SolveResult, SolverConfig, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex sets are `u128` masks, so no configuration can go beyond this.
pub const MAX_VERTICES: usize = 128;

struct Search {
    nbrs: Vec<u128>,
    best: u128,
    best_size: u32,
    nodes: u64,
}

impl Search {
    fn degree_in(&self, v: usize, cands: u128) -> u32 {
        (self.nbrs[v] & cands).count_ones()
    }

    /// Number of cliques in a greedy clique cover of `cands`; no independent
    /// set inside `cands` is larger.
    fn clique_cover(&self, mut cands: u128) -> u32 {
        let mut cliques = 0;
        while cands != 0 {
            let v = cands.trailing_zeros() as usize;
            let mut pool = cands & self.nbrs[v];
            cands &= !(1 << v);
            while pool != 0 {
                let u = pool.trailing_zeros() as usize;
                pool &= self.nbrs[u];
                cands &= !(1 << u);
            }
            cliques += 1;
        }
        cliques
    }

    fn expand(&mut self, mut cands: u128, mut chosen: u128) {
        self.nodes += 1;
        // a vertex with at most one candidate neighbor is in some maximum set
        loop {
            let mut forced = None;
            let mut rest = cands;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if self.degree_in(v, cands) <= 1 {
                    forced = Some(v);
                    break;
                }
            }
            match forced {
                Some(v) => {
                    chosen |= 1 << v;
                    cands &= !(self.nbrs[v] | (1 << v));
                }
                None => break,
            }
        }
        if cands == 0 {
            let size = chosen.count_ones();
            if size > self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        if chosen.count_ones() + self.clique_cover(cands) <= self.best_size {
            return;
        }
        let mut pick = 0;
        let mut pick_deg = 0;
        let mut rest = cands;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = self.degree_in(v, cands);
            if d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        self.expand(cands & !(self.nbrs[pick] | (1 << pick)), chosen | (1 << pick));
        self.expand(cands & !(1 << pick), chosen);
    }
}

fn check_cap(n: usize, config: &SolverConfig) -> Result<()> {
    let cap = config.mis_max_vertices.min(MAX_VERTICES);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "independent set search",
            size: n,
            cap,
        });
    }
    Ok(())
}

/// `α(G)` by branch and bound on vertex inclusion/exclusion.
pub fn max_independent_set(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    check_cap(g.n(), config)?;
    let nbrs = (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | (1 << u)))
        .collect();
    let mut s = Search {
        nbrs,
        best: 0,
        best_size: 0,
        nodes: 0,
    };
    let all = if g.n() == MAX_VERTICES { u128::MAX } else { (1u128 << g.n()) - 1 };
    s.expand(all, 0);
    let set: Vec<usize> = (0..g.n()).filter(|&v| s.best >> v & 1 == 1).collect();
    Ok(SolveResult {
        optimum: s.best_size as u64,
        witness: Witness::IndependentSet(set),
        nodes_explored: s.nodes,
        method: Method::Brute,
    })
}

/// `L{1}(G)` as `α(G²)`: a set independent in `G²` has pairwise distance at
/// least 3 in `G`, so its indicator meets each closed neighborhood at most
/// once, and conversely the support of a `{1}`-packing function is such a
/// set.
pub fn l1_via_square(g: &Graph, config: &SolverConfig) -> Result<SolveResult> {
    let r = max_independent_set(&g.square(), config)?;
    let mut values = alloc::vec![0; g.n()];
    for &v in r.set().unwrap_or(&[]) {
        values[v] = 1;
    }
    Ok(SolveResult {
        optimum: r.optimum,
        witness: Witness::Function(PackingFunction::new(values)),
        nodes_explored: r.nodes_explored,
        method: Method::Reduction,
    })
}

/// The 2-packing number `ρ₂(G) = α(G²)`, which coincides with `L{1}(G)`.
pub fn rho2(g: &Graph, config: &SolverConfig) -> Result<u64> {
    max_independent_set(&g.square(), config).map(|r| r.optimum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn fam(f: Family, n: usize) -> Graph {
        make_family(f, n).unwrap()
    }

    fn alpha_by_subsets(g: &Graph) -> u64 {
        (0u32..1 << g.n())
            .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
            .map(|s| s.count_ones() as u64)
            .max()
            .unwrap()
    }

    #[test]
    fn independence_numbers() {
        for n in 1..8 {
            assert_eq!(max_independent_set(&fam(Family::Clique, n), &cfg()).unwrap().optimum, 1);
            assert_eq!(max_independent_set(&Graph::empty(n).unwrap(), &cfg()).unwrap().optimum, n as u64);
        }
        let c5 = fam(Family::Cycle, 5);
        assert_eq!(max_independent_set(&c5, &cfg()).unwrap().optimum, alpha_by_subsets(&c5));
        assert_eq!(alpha_by_subsets(&c5), 2);
    }

    #[test]
    fn witness_is_independent() {
        let g = Graph::from_edges(
            9,
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 7), (7, 8), (8, 5), (2, 7)],
        )
        .unwrap();
        let r = max_independent_set(&g, &cfg()).unwrap();
        let set = r.set().unwrap();
        assert_eq!(set.len() as u64, r.optimum);
        assert_eq!(r.optimum, alpha_by_subsets(&g));
        for &u in set {
            for &v in set {
                assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn square_reduction() {
        assert_eq!(l1_via_square(&fam(Family::Cycle, 5), &cfg()).unwrap().optimum, 1);
        let p5 = fam(Family::Path, 5);
        let r = l1_via_square(&p5, &cfg()).unwrap();
        assert_eq!(r.optimum, 2);
        assert!(r.function().unwrap().is_feasible(&p5, 1));
        assert_eq!(l1_via_square(&fam(Family::Claw, 4), &cfg()).unwrap().optimum, 1);
        assert_eq!(rho2(&fam(Family::Path, 4), &cfg()).unwrap(), 2);
        assert_eq!(rho2(&fam(Family::Clique, 3), &cfg()).unwrap(), 1);
        assert_eq!(rho2(&fam(Family::Star, 6), &cfg()).unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let g = fam(Family::Path, 41);
        assert!(matches!(max_independent_set(&g, &cfg()), Err(Error::CapExceeded { .. })));
        let wide = SolverConfig { mis_max_vertices: 500, ..cfg() };
        let big = fam(Family::Path, 129);
        assert!(matches!(max_independent_set(&big, &wide), Err(Error::CapExceeded { cap: 128, .. })));
        assert_eq!(max_independent_set(&fam(Family::Path, 128), &wide).unwrap().optimum, 64);
    }
}

use alloc::vec;
use alloc::vec::Vec;

use super::{LimitedPackingSet, Method, PackingFunction, SolveResult, SolverConfig, Witness};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Depth-first enumeration of `f(v) ∈ {0..=value_cap}` under the closed
/// neighborhood limits `f(N[v]) <= k`.
///
/// Vertices are fixed in descending degree order. A value is only tried when
/// every closed neighborhood containing the vertex still has room for it,
/// and a node is cut when a neighborhood cover of the unfixed vertices shows
/// it cannot beat the incumbent.
struct Enumerator {
    k: u64,
    value_cap: u64,
    order: Vec<Vertex>,
    closed: Vec<Vec<Vertex>>,
    values: Vec<u64>,
    load: Vec<u64>,
    current: u64,
    best: u64,
    best_values: Vec<u64>,
    nodes: u64,
    covered: Vec<bool>,
}

impl Enumerator {
    fn new(g: &Graph, k: u64, value_cap: u64) -> Self {
        let n = g.n();
        let mut order: Vec<Vertex> = (0..n).collect();
        order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
        Enumerator {
            k,
            value_cap,
            order,
            closed: (0..n).map(|v| g.closed_nbhd(v)).collect(),
            values: vec![0; n],
            load: vec![0; n],
            current: 0,
            best: 0,
            best_values: vec![0; n],
            nodes: 0,
            covered: vec![false; n],
        }
    }

    fn room(&self, v: Vertex) -> u64 {
        self.closed[v].iter().map(|&w| self.k - self.load[w]).min().unwrap_or(0)
    }

    /// Upper bound on what the vertices `order[depth..]` can still add.
    fn completion_bound(&mut self, depth: usize) -> u64 {
        for &v in &self.order[depth..] {
            self.covered[v] = false;
        }
        for &v in &self.order[..depth] {
            self.covered[v] = true;
        }
        let mut bound = 0;
        for i in depth..self.order.len() {
            let v = self.order[i];
            if self.covered[v] {
                continue;
            }
            // f(N[w]) <= k - load(w) caps every unfixed vertex around w at once
            let (w, slack) = self.closed[v]
                .iter()
                .map(|&w| (w, self.k - self.load[w]))
                .min_by_key(|&(_, s)| s)
                .expect("closed neighborhood contains the vertex itself");
            let mut fresh = 0;
            for &u in &self.closed[w] {
                if !self.covered[u] {
                    self.covered[u] = true;
                    fresh += 1;
                }
            }
            bound += slack.min(self.value_cap * fresh);
        }
        bound
    }

    fn search(&mut self, depth: usize) {
        self.nodes += 1;
        if depth == self.order.len() {
            if self.current > self.best {
                self.best = self.current;
                self.best_values.copy_from_slice(&self.values);
            }
            return;
        }
        if self.current + self.completion_bound(depth) <= self.best {
            return;
        }
        let v = self.order[depth];
        let top = self.room(v).min(self.value_cap);
        for value in (0..=top).rev() {
            self.assign(v, value);
            self.search(depth + 1);
            self.assign(v, 0);
        }
    }

    fn assign(&mut self, v: Vertex, value: u64) {
        let old = self.values[v];
        for i in 0..self.closed[v].len() {
            let w = self.closed[v][i];
            self.load[w] = self.load[w] - old + value;
        }
        self.current = self.current - old + value;
        self.values[v] = value;
    }
}

fn check_k(k: u64) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParameter("k must be at least 1"))
    } else {
        Ok(())
    }
}

/// Exact `L{k}(G)` by exhaustive search. Refuses graphs with more than
/// `config.brute_max_vertices` vertices.
pub fn brute_force_lk(g: &Graph, k: u64, config: &SolverConfig) -> Result<SolveResult> {
    check_k(k)?;
    if g.n() > config.brute_max_vertices {
        return Err(Error::CapExceeded {
            what: "brute force",
            size: g.n(),
            cap: config.brute_max_vertices,
        });
    }
    let mut e = Enumerator::new(g, k, k);
    e.search(0);
    Ok(SolveResult {
        optimum: e.best,
        witness: Witness::Function(PackingFunction::new(e.best_values)),
        nodes_explored: e.nodes,
        method: Method::Brute,
    })
}

/// Exact k-limited packing number `L_k(G)`: the largest `B` with
/// `|N[v] ∩ B| <= k` for every `v`.
pub fn brute_force_limited_lk(g: &Graph, k: u64, config: &SolverConfig) -> Result<SolveResult> {
    check_k(k)?;
    if g.n() > config.limited_max_vertices {
        return Err(Error::CapExceeded {
            what: "limited packing brute force",
            size: g.n(),
            cap: config.limited_max_vertices,
        });
    }
    let mut e = Enumerator::new(g, k, 1);
    e.search(0);
    let members = e
        .best_values
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x == 1)
        .map(|(v, _)| v)
        .collect();
    Ok(SolveResult {
        optimum: e.best,
        witness: Witness::LimitedSet(LimitedPackingSet { members }),
        nodes_explored: e.nodes,
        method: Method::Brute,
    })
}

//! Simple undirected graphs and the derived graphs the packing machinery
//! needs: closed neighborhoods, the neighborhood matrix `A + I`, squares,
//! complements and strong products with cliques.
//!
//! Vertices are `0..n` inside the library. Every text format and report
//! renders them as `1..=n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple, finite, undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut twice = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: twice / 2,
        })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::from_edges(n, core::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Open neighborhood, sorted ascending. Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// δ(G).
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// `N[v] = N(v) ∪ {v}`, sorted ascending.
    pub fn closed_neighborhood(&self, v: Vertex) -> Result<Vec<Vertex>> {
        self.check_vertex(v)?;
        Ok(self.closed_nbhd(v))
    }

    pub(crate) fn closed_nbhd(&self, v: Vertex) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.adj[v].len() + 1);
        let at = self.adj[v].partition_point(|&u| u < v);
        out.extend_from_slice(&self.adj[v][..at]);
        out.push(v);
        out.extend_from_slice(&self.adj[v][at..]);
        out
    }

    pub fn neighborhood_matrix(&self) -> NeighborhoodMatrix {
        let n = self.n();
        let mut entries = vec![false; n * n];
        for v in 0..n {
            entries[v * n + v] = true;
            for &u in &self.adj[v] {
                entries[v * n + u] = true;
            }
        }
        NeighborhoodMatrix { n, entries }
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<Option<usize>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for &u in &self.adj[v] {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_from(0).iter().all(Option::is_some)
    }

    fn bfs_from(&self, source: Vertex) -> Vec<Option<usize>> {
        // `source` is always in range for internal callers
        self.bfs_distances(source).unwrap_or_default()
    }

    /// Largest pairwise distance. Undefined (an error) on disconnected graphs.
    pub fn diameter(&self) -> Result<usize> {
        let mut diam = 0;
        for v in 0..self.n() {
            for d in self.bfs_from(v) {
                diam = diam.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(diam)
    }

    /// Maximal connected subgraphs, ordered by their smallest original vertex.
    pub fn connected_components(&self) -> Vec<Component> {
        let n = self.n();
        let mut comp_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<Vertex>> = Vec::new();
        for start in 0..n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = members.len();
            let mut list = vec![start];
            comp_of[start] = id;
            let mut head = 0;
            while head < list.len() {
                let v = list[head];
                head += 1;
                for &u in &self.adj[v] {
                    if comp_of[u] == usize::MAX {
                        comp_of[u] = id;
                        list.push(u);
                    }
                }
            }
            list.sort_unstable();
            members.push(list);
        }

        members
            .into_iter()
            .map(|labels| {
                let mut local = vec![0; n];
                for (i, &v) in labels.iter().enumerate() {
                    local[v] = i;
                }
                let edges = labels
                    .iter()
                    .flat_map(|&v| self.adj[v].iter().map(move |&u| (v, u)))
                    .filter(|&(v, u)| v < u)
                    .map(|(v, u)| (local[v], local[u]));
                let graph = Graph::from_edges(labels.len(), edges)
                    .expect("component subgraph is well formed");
                Component { graph, labels }
            })
            .collect()
    }

    /// `G²`: `u ~ v` iff `1 <= d(u, v) <= 2`.
    pub fn square(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for v in 0..n {
            for &u in &self.adj[v] {
                if u > v {
                    edges.push((v, u));
                }
                for &w in &self.adj[u] {
                    if w > v {
                        edges.push((v, w));
                    }
                }
            }
        }
        Graph::from_edges(n, edges).expect("square of a valid graph")
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).expect("complement of a valid graph")
    }

    /// `G ⊗ K_k`. Product vertex `(v, i)` (with `i` in `0..k`) gets index
    /// `v * k + i`.
    pub fn strong_product_with_clique(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidParameter("clique order k must be at least 1"));
        }
        let n = self.n();
        let idx = |v: Vertex, i: usize| v * k + i;
        let mut edges = Vec::new();
        for v in 0..n {
            for i in 0..k {
                for j in i + 1..k {
                    edges.push((idx(v, i), idx(v, j)));
                }
            }
        }
        for (u, v) in self.edges() {
            for i in 0..k {
                for j in 0..k {
                    edges.push((idx(u, i), idx(v, j)));
                }
            }
        }
        Graph::from_edges(n * k, edges)
    }
}

/// A connected component together with the map back to the parent graph:
/// local vertex `i` is `labels[i]` in the original.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    pub labels: Vec<Vertex>,
}

/// `A_G = A + I`: row `i` is the indicator of `N[i]`.
#[derive(Clone, PartialEq, Eq)]
pub struct NeighborhoodMatrix {
    n: usize,
    entries: Vec<bool>,
}

impl NeighborhoodMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j] as u8
    }

    pub fn row(&self, i: usize) -> impl Iterator<Item = u8> + '_ {
        self.entries[i * self.n..(i + 1) * self.n].iter().map(|&b| b as u8)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl fmt::Debug for NeighborhoodMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            for (j, x) in self.row(i).enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x)?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Named graph families with canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `0 - 1 - ... - (n-1)`.
    Path,
    /// The path plus `{n-1, 0}`; needs `n >= 3`.
    Cycle,
    Clique,
    /// `K_{1,3}` with center 0. The size argument is ignored.
    Claw,
    /// Center 0 with `n` leaves `1..=n`.
    Star,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Cycle,
        Family::Clique,
        Family::Claw,
        Family::Star,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Clique => "clique",
            Family::Claw => "claw",
            Family::Star => "star",
        }
    }

    pub fn min_size(self) -> usize {
        match self {
            Family::Cycle => 3,
            Family::Claw => 0,
            _ => 1,
        }
    }

    pub fn build(self, n: usize) -> Result<Graph> {
        if n < self.min_size() {
            return Err(Error::InvalidParameter("size below family minimum"));
        }
        match self {
            Family::Path => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            Family::Cycle => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            Family::Clique => {
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::Claw => Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]),
            Family::Star => Graph::from_edges(n + 1, (1..=n).map(|leaf| (0, leaf))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or(Error::InvalidParameter("unknown graph family"))
    }
}

pub fn make_family(family: Family, n: usize) -> Result<Graph> {
    family.build(n)
}

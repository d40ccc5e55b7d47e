//! Simple undirected graphs and the structural queries built on them.

mod io;
pub mod random;
mod search;
mod structure;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use io::{from_edge_list_text, from_graph6, to_edge_list_text, to_graph6};
pub use search::{
    dong_koh_check, dong_koh_ordering, dong_koh_ordering_exists, hamiltonian_cycle_exists,
    independent_toughness_witness,
};
pub use structure::{
    blocks, components_after_removal, connected_components, is_bipartite, is_k_connected,
    local_connectivity, vertex_connectivity, Bipartition, BlockDecomposition,
};

/// A simple loopless undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted. Values are immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// A set of vertices of some graph, kept sorted.
pub type VertexSet = BTreeSet<usize>;

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, collapsing duplicate pairs.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn complete(n: usize) -> Self {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edge_list(n, pairs).expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let pairs = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edge_list(a + b, pairs).expect("valid complete bipartite graph")
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.adj.iter().all(|ns| ns.len() + 1 == n)
    }

    /// `G - e`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Ok(Graph { adj })
    }

    /// `G / e` as a simple graph.
    ///
    /// The merged vertex keeps index `min(u, v)`; vertices above `max(u, v)`
    /// shift down by one. Parallel edges collapse.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let relabel = |w: usize| -> usize {
            match w.cmp(&gone) {
                std::cmp::Ordering::Less => w,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => w - 1,
            }
        };
        let pairs = self
            .edges()
            .filter(|&(a, b)| !((a == keep && b == gone) || (a == gone && b == keep)))
            .map(|(a, b)| (relabel(a), relabel(b)));
        Graph::from_edge_list(self.n() - 1, pairs)
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let pairs = vertices.iter().flat_map(|&v| {
            let index = &index;
            self.adj[v]
                .iter()
                .filter(move |&&w| index[w] != usize::MAX && w > v)
                .map(move |&w| (index[v], index[w]))
        });
        Graph::from_edge_list(vertices.len(), pairs.collect::<Vec<_>>())
            .expect("induced subgraph of a valid graph")
    }

    /// Disjoint union, with `other` relabelled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let pairs = self
            .edges()
            .chain(other.edges().map(|(a, b)| (a + off, b + off)))
            .collect::<Vec<_>>();
        Graph::from_edge_list(off + other.n(), pairs).expect("valid union")
    }

    /// Adjacency rows as 64-bit masks. Requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Result<Vec<u64>> {
        if self.n() > 64 {
            return Err(Error::GraphTooLarge(self.n()));
        }
        Ok(self
            .adj
            .iter()
            .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect())
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .all(|&u| self.adj[u].iter().all(|w| !set.contains(w)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

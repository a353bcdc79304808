//! Small simple undirected graphs with one-word neighborhood masks.
//!
//! Every graph in this crate has between 1 and [`MAX_ORDER`] vertices labeled
//! `0..n`. Neighborhoods are [`VertexSet`]s, so set algebra over neighborhoods
//! (closed neighborhoods, private neighbors, domination tests) is a handful of
//! bit operations.

mod edgelist;
mod graph6;
mod named;
mod set;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use edgelist::{parse_edge_list, to_edge_list, EdgeListError};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use named::{complete, complete_bipartite, cycle, path, petersen, star};
pub use set::{Iter as VertexSetIter, VertexSet};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {0} outside supported range 1..={MAX_ORDER}")]
    InvalidOrder(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("index {index} out of range for a tuple of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
}

/// Immutable simple undirected graph on at most [`MAX_ORDER`] vertices.
///
/// The derived ordering compares the order first and then the adjacency rows
/// lexicographically; it is only used to sort canonical forms deterministically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    adj: [VertexSet; MAX_ORDER],
}

/// Length of a shortest cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(g) => Ok(Girth::Finite(g as usize)),
            Raw::Text(t) if t == "inf" => Ok(Girth::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad girth {t:?}"))),
        }
    }
}

/// Result of greedy dominated-vertex removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dismantling {
    /// `n - 1` vertices, each dominated in the graph remaining when it was removed.
    Order(Vec<usize>),
    /// The greedy fixed point still has at least two vertices.
    NotDismantleable { remaining: VertexSet },
}

impl Dismantling {
    pub fn is_dismantleable(&self) -> bool {
        matches!(self, Dismantling::Order(_))
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::InvalidOrder(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [VertexSet::EMPTY; MAX_ORDER],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows without validation.
    pub(crate) fn from_rows(n: usize, rows: &[VertexSet]) -> Self {
        let mut adj = [VertexSet::EMPTY; MAX_ORDER];
        adj[..n].copy_from_slice(&rows[..n]);
        Graph { n: n as u8, adj }
    }

    #[inline]
    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Adds a new vertex `n` adjacent to `nbrs`.
    pub fn extend(&self, nbrs: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n();
        if n == MAX_ORDER {
            return Err(GraphError::InvalidOrder(n + 1));
        }
        if !nbrs.is_subset(self.vertices()) {
            let vertex = (nbrs - self.vertices()).first().unwrap_or(n);
            return Err(GraphError::VertexOutOfRange { vertex, n });
        }
        Ok(self.extend_unchecked(nbrs))
    }

    #[inline]
    pub(crate) fn extend_unchecked(&self, nbrs: VertexSet) -> Graph {
        let n = self.n();
        let mut g = *self;
        g.n += 1;
        g.adj[n] = nbrs;
        for u in nbrs {
            g.adj[u].insert(n);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Adjacency rows `0..n`.
    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.n()]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.rows().iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows().iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.rows().iter().all(|s| s.len() == d)
    }

    /// Edges `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// `N̄(S)`: union of closed neighborhoods of the members of `set`.
    pub fn closed_neighborhood(&self, set: VertexSet) -> VertexSet {
        let mut out = set;
        for v in set {
            out |= self.adj[v];
        }
        out
    }

    /// `N(S) = N̄(S) − S`: vertices outside `set` with a neighbor in it.
    pub fn open_neighborhood(&self, set: VertexSet) -> VertexSet {
        self.closed_neighborhood(set) - set
    }

    /// `N′_U(u_j) = N(u_j) − N̄(U − u_j)`: neighbors of `u_j` away from the rest of `U`.
    ///
    /// `U` is a tuple, so repeated entries count as separate members; removing
    /// `u_j` removes only position `j`.
    pub fn private_neighbors(&self, tuple: &[usize], j: usize) -> Result<VertexSet, GraphError> {
        if j >= tuple.len() {
            return Err(GraphError::IndexOutOfRange {
                index: j,
                len: tuple.len(),
            });
        }
        for &v in tuple {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
        }
        let rest: VertexSet = tuple
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .map(|(_, &v)| v)
            .collect();
        Ok(self.adj[tuple[j]] - self.closed_neighborhood(rest))
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn component_within(&self, within: VertexSet, start: usize) -> VertexSet {
        if !within.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest member.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(rest, v);
            rest -= c;
            out.push(c);
        }
        out
    }

    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        match within.first() {
            None => true,
            Some(v) => self.component_within(within, v) == within,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// `v` is a cut vertex when deleting it leaves a disconnected graph.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        !self.is_connected_within(self.vertices().without(v))
    }

    /// Shortest cycle length by breadth-first search from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = [u8::MAX; MAX_ORDER];
        let mut parent = [u8::MAX; MAX_ORDER];
        let mut queue = VecDeque::with_capacity(n);
        for root in 0..n {
            dist.fill(u8::MAX);
            parent.fill(u8::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // every cycle closed from depth d has length at least 2d
                if 2 * dist[u] as usize >= best {
                    break;
                }
                for w in self.adj[u] {
                    if dist[w] == u8::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u as u8;
                        queue.push_back(w);
                    } else if parent[u] as usize != w {
                        best = best.min(dist[u] as usize + dist[w] as usize + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// All ordered pairs `(v, w)`, `v != w`, with `N̄(v) ⊆ N̄(w)`, ascending.
    pub fn dominated_vertices(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for v in 0..n {
            let nv = self.closed_neighbors(v);
            for w in self.adj[v] {
                if nv.is_subset(self.closed_neighbors(w)) {
                    out.push((v, w));
                }
            }
        }
        out
    }

    /// Greedy removal of the smallest-index dominated vertex until one vertex remains.
    pub fn dismantling_order(&self) -> Result<Dismantling, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut alive = self.vertices();
        let mut order = Vec::with_capacity(self.n().saturating_sub(1));
        'outer: while alive.len() > 1 {
            for v in alive {
                let nv = self.adj[v] & alive;
                let closed = nv.with(v);
                if nv.iter().any(|w| closed.is_subset(self.adj[w].with(w))) {
                    alive.remove(v);
                    order.push(v);
                    continue 'outer;
                }
            }
            return Ok(Dismantling::NotDismantleable { remaining: alive });
        }
        Ok(Dismantling::Order(order))
    }

    /// True iff `|S| = k` and `G[S]` is a single cycle.
    pub fn induced_is_cycle(&self, set: VertexSet, k: usize) -> bool {
        set.len() == k
            && k >= 3
            && set.iter().all(|v| (self.adj[v] & set).len() == 2)
            && self.is_connected_within(set)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[u8]) -> Graph {
        let n = self.n();
        let mut adj = [VertexSet::EMPTY; MAX_ORDER];
        for v in 0..n {
            adj[perm[v] as usize] = self.adj[v].map(perm);
        }
        Graph { n: self.n, adj }
    }

    /// `G[S]` with the members of `set` relabeled `0..|S|` in ascending order.
    pub fn induced(&self, set: VertexSet) -> Result<Graph, GraphError> {
        let k = set.len();
        if k == 0 {
            return Err(GraphError::InvalidOrder(0));
        }
        let mut pos = [0u8; MAX_ORDER];
        for (i, v) in set.iter().enumerate() {
            pos[v] = i as u8;
        }
        let mut adj = [VertexSet::EMPTY; MAX_ORDER];
        for (i, v) in set.iter().enumerate() {
            adj[i] = (self.adj[v] & set).map(&pos);
        }
        Ok(Graph { n: k as u8, adj })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", to_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

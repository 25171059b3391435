//! Weighted undirected graphs under edge-weight increases.
//!
//! Weights are integers in `[1, W]` and never decrease. The distance bound `Δ`
//! is fixed at construction as the smallest power of two `≥ n·W`, so it stays
//! valid for the whole update sequence.

mod contraction;
mod filtered;
mod io;
mod paths;

pub use contraction::ContractionMap;
pub use filtered::FilteredGraph;
pub use io::{
    load_edge_list, parse_update_stream, write_edge_list, write_update_stream, EdgeListOptions,
};
pub use paths::UNREACHABLE;

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// Largest `n·W` accepted, so that every simple path length fits in a `u64`
/// with room to spare for sums of two distances.
const MAX_PATH_BOUND: u128 = 1 << 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: u64,
}

impl Edge {
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A single decremental update: the weight of edge `(u, v)` rises to `new_weight`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UpdateEvent {
    pub u: Vertex,
    pub v: Vertex,
    pub new_weight: u64,
}

impl UpdateEvent {
    pub fn new(u: Vertex, v: Vertex, new_weight: u64) -> Self {
        UpdateEvent { u, v, new_weight }
    }
}

/// What an accepted update changed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AppliedUpdate {
    pub edge: EdgeId,
    pub old_weight: u64,
    pub new_weight: u64,
}

/// Rational distance threshold `num / den`; an edge is at or below it when
/// `w · den ≤ num`. Keeps scale comparisons exact for fractional scales.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    num: u128,
    den: u128,
}

impl Threshold {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "threshold denominator must be positive");
        Threshold {
            num: num as u128,
            den: den as u128,
        }
    }

    pub fn integer(value: u64) -> Self {
        Threshold::new(value, 1)
    }

    pub fn zero() -> Self {
        Threshold::integer(0)
    }

    /// `true` when `w ≤ threshold`.
    pub fn admits(&self, w: u64) -> bool {
        (w as u128) * self.den <= self.num
    }

    /// `true` when `d < threshold`.
    pub fn exceeds(&self, d: u64) -> bool {
        (d as u128) * self.den < self.num
    }

    pub fn floor(&self) -> u64 {
        (self.num / self.den) as u64
    }

    pub fn as_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

#[derive(Debug, Clone)]
pub struct WeightedGraph {
    max_weight: u64,
    delta: u64,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(Vertex, EdgeId)>>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
}

fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl WeightedGraph {
    /// Empty graph on `n` vertices with admissible weights `[1, max_weight]`.
    pub fn new(n: usize, max_weight: u64) -> Result<Self> {
        if max_weight == 0 {
            return Err(Error::InvalidParameter("W must be at least 1".into()));
        }
        let bound = n as u128 * max_weight as u128;
        if bound > MAX_PATH_BOUND {
            return Err(Error::DistanceOverflow(bound));
        }
        let delta = (bound.max(1) as u64).next_power_of_two();
        Ok(WeightedGraph {
            max_weight,
            delta,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            index: HashMap::new(),
        })
    }

    /// Builds a graph from `(u, v, w)` triples and checks connectivity.
    pub fn from_edges(n: usize, max_weight: u64, edges: &[(Vertex, Vertex, u64)]) -> Result<Self> {
        let mut g = WeightedGraph::new(n, max_weight)?;
        for (line, &(u, v, w)) in edges.iter().enumerate() {
            g.insert_edge(u, v, w).map_err(|e| e.at_line(line + 1))?;
        }
        g.check_connected()?;
        Ok(g)
    }

    /// Adds an edge during construction. Rejects self-loops, parallel edges,
    /// and weights outside `[1, W]`.
    pub fn insert_edge(&mut self, u: Vertex, v: Vertex, weight: u64) -> Result<EdgeId> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { line: 0, v: u });
        }
        if weight == 0 || weight > self.max_weight {
            return Err(Error::WeightOutOfRange {
                weight,
                max: self.max_weight,
            });
        }
        let k = key(u, v);
        if self.index.contains_key(&k) {
            return Err(Error::DuplicateEdge { line: 0, u, v });
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, weight });
        self.adjacency[u].push((v, id));
        self.adjacency[v].push((u, id));
        self.index.insert(k, id);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    /// Power-of-two bound on the diameter, fixed at construction.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.index.get(&key(u, v)).copied()
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<u64> {
        self.edge_id(u, v).map(|id| self.edges[id].weight)
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { v, n: self.n() })
        }
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let mut uf = ContractionMap::identity(self.n());
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        uf.class_count()
    }

    pub fn check_connected(&self) -> Result<()> {
        match self.components() {
            0 | 1 => Ok(()),
            components => Err(Error::Disconnected { components }),
        }
    }

    /// Validates an update without applying it.
    pub fn check_update(&self, ev: &UpdateEvent) -> Result<AppliedUpdate> {
        self.check_vertex(ev.u)?;
        self.check_vertex(ev.v)?;
        let id = self
            .edge_id(ev.u, ev.v)
            .ok_or(Error::NoSuchEdge { u: ev.u, v: ev.v })?;
        let current = self.edges[id].weight;
        if ev.new_weight <= current {
            return Err(Error::NotAnIncrease {
                u: ev.u,
                v: ev.v,
                current,
                requested: ev.new_weight,
            });
        }
        if ev.new_weight > self.max_weight {
            return Err(Error::WeightOutOfRange {
                weight: ev.new_weight,
                max: self.max_weight,
            });
        }
        Ok(AppliedUpdate {
            edge: id,
            old_weight: current,
            new_weight: ev.new_weight,
        })
    }

    /// Raises the weight of an existing edge. The graph is untouched on error.
    pub fn apply_weight_increase(&mut self, ev: &UpdateEvent) -> Result<AppliedUpdate> {
        let applied = self.check_update(ev)?;
        self.edges[applied.edge].weight = applied.new_weight;
        Ok(applied)
    }

    /// Exact shortest-path distances from `source`. With a cap, vertices
    /// farther than `cap` are reported as `None`.
    pub fn dijkstra(&self, source: Vertex, cap: Option<u64>) -> Result<Vec<Option<u64>>> {
        self.check_vertex(source)?;
        let dist = paths::sssp(self, source, cap.unwrap_or(UNREACHABLE - 1), |w| w);
        Ok(dist
            .into_iter()
            .map(|d| (d != UNREACHABLE).then_some(d))
            .collect())
    }

    /// Full distance row from `source`; `UNREACHABLE` marks vertices in other
    /// components. Panics on an invalid source.
    pub fn distances_from(&self, source: Vertex) -> Vec<u64> {
        paths::sssp(self, source, UNREACHABLE - 1, |w| w)
    }

    /// All-pairs distance matrix by repeated Dijkstra.
    pub fn all_pairs(&self) -> Vec<Vec<u64>> {
        (0..self.n()).map(|s| self.distances_from(s)).collect()
    }

    /// Union-find over endpoints of every edge with weight at most `threshold`.
    pub fn contract_below(&self, threshold: Threshold) -> ContractionMap {
        let mut map = ContractionMap::identity(self.n());
        for e in &self.edges {
            if threshold.admits(e.weight) {
                map.union(e.u, e.v);
            }
        }
        map
    }

    /// View of this graph with edges `≤ epsilon` counted as weight 0.
    pub fn filtered(&self, epsilon: Threshold) -> FilteredGraph<'_> {
        FilteredGraph::new(self, epsilon)
    }
}

impl Error {
    fn at_line(self, line: usize) -> Error {
        match self {
            Error::SelfLoop { v, .. } => Error::SelfLoop { line, v },
            Error::DuplicateEdge { u, v, .. } => Error::DuplicateEdge { line, u, v },
            other => other,
        }
    }
}

//! Decremental shortest-path tree truncated at a fixed depth.
//!
//! The tree spans every vertex within `depth_cap` of its root in the filtered
//! graph. When a tree edge gets heavier, only the subtree hanging below it can
//! change: everything else keeps its tree path, and distances never shrink.
//! That subtree is detached and re-attached by a Dijkstra seeded from its
//! boundary, which stays exact in the presence of zero-weight edges.
//! Vertices pushed past the cap leave the tree for good.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::graph::{EdgeId, FilteredGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct TreeNode {
    dist: u64,
    parent: Option<(Vertex, EdgeId)>,
}

#[derive(Debug, Clone)]
pub struct DepthBoundedTree {
    root: Vertex,
    depth_cap: u64,
    nodes: HashMap<Vertex, TreeNode>,
}

impl DepthBoundedTree {
    pub fn build(fg: &FilteredGraph<'_>, root: Vertex, depth_cap: u64) -> Self {
        let g = fg.base();
        let mut nodes: HashMap<Vertex, TreeNode> = HashMap::new();
        let mut key: HashMap<Vertex, TreeNode> = HashMap::new();
        let mut heap = BinaryHeap::new();
        key.insert(root, TreeNode { dist: 0, parent: None });
        heap.push(Reverse((0u64, root)));
        while let Some(Reverse((d, x))) = heap.pop() {
            if nodes.contains_key(&x) || key[&x].dist != d {
                continue;
            }
            nodes.insert(x, key[&x]);
            for &(y, e) in g.neighbors(x) {
                if nodes.contains_key(&y) {
                    continue;
                }
                let nd = d + fg.edge_weight(e);
                if nd <= depth_cap && key.get(&y).is_none_or(|k| nd < k.dist) {
                    key.insert(y, TreeNode { dist: nd, parent: Some((x, e)) });
                    heap.push(Reverse((nd, y)));
                }
            }
        }
        DepthBoundedTree {
            root,
            depth_cap,
            nodes,
        }
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn depth_cap(&self) -> u64 {
        self.depth_cap
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `d_G′(root, v)` if it is within the cap.
    pub fn distance(&self, v: Vertex) -> Option<u64> {
        self.nodes.get(&v).map(|n| n.dist)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.nodes.contains_key(&v)
    }

    /// The endpoint whose tree parent is edge `e`, if `e` is a tree edge.
    fn child_of_edge(&self, e: EdgeId, a: Vertex, b: Vertex) -> Option<Vertex> {
        [(a, b), (b, a)].into_iter().find_map(|(p, c)| {
            (self.nodes.get(&c).and_then(|n| n.parent) == Some((p, e))).then_some(c)
        })
    }

    /// Repairs the tree after edge `e` got heavier in `fg`. Returns the
    /// vertices that fell beyond the cap.
    pub fn handle_increase(&mut self, fg: &FilteredGraph<'_>, e: EdgeId) -> Vec<Vertex> {
        let edge = *fg.base().edge(e);
        let Some(child) = self.child_of_edge(e, edge.u, edge.v) else {
            return Vec::new();
        };
        let subtree = self.detach_subtree(child);
        self.reattach(fg, &subtree)
    }

    fn detach_subtree(&mut self, top: Vertex) -> Vec<Vertex> {
        let mut children: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
        for (&v, node) in &self.nodes {
            if let Some((p, _)) = node.parent {
                children.entry(p).or_default().push(v);
            }
        }
        let mut out = vec![top];
        let mut i = 0;
        while i < out.len() {
            if let Some(cs) = children.get(&out[i]) {
                out.extend_from_slice(cs);
            }
            i += 1;
        }
        for v in &out {
            self.nodes.remove(v);
        }
        out.sort_unstable();
        out
    }

    fn reattach(&mut self, fg: &FilteredGraph<'_>, detached: &[Vertex]) -> Vec<Vertex> {
        let g = fg.base();
        let pending: HashSet<Vertex> = detached.iter().copied().collect();
        let mut key: HashMap<Vertex, TreeNode> = HashMap::new();
        let mut heap = BinaryHeap::new();
        for &y in detached {
            let mut best: Option<TreeNode> = None;
            for &(z, e) in g.neighbors(y) {
                if let Some(nz) = self.nodes.get(&z) {
                    let nd = nz.dist + fg.edge_weight(e);
                    if nd <= self.depth_cap && best.is_none_or(|b| nd < b.dist) {
                        best = Some(TreeNode { dist: nd, parent: Some((z, e)) });
                    }
                }
            }
            if let Some(b) = best {
                key.insert(y, b);
                heap.push(Reverse((b.dist, y)));
            }
        }
        while let Some(Reverse((d, x))) = heap.pop() {
            if self.nodes.contains_key(&x) || key[&x].dist != d {
                continue;
            }
            self.nodes.insert(x, key[&x]);
            for &(y, e) in g.neighbors(x) {
                if !pending.contains(&y) || self.nodes.contains_key(&y) {
                    continue;
                }
                let nd = d + fg.edge_weight(e);
                if nd <= self.depth_cap && key.get(&y).is_none_or(|k| nd < k.dist) {
                    key.insert(y, TreeNode { dist: nd, parent: Some((x, e)) });
                    heap.push(Reverse((nd, y)));
                }
            }
        }
        detached
            .iter()
            .copied()
            .filter(|v| !self.nodes.contains_key(v))
            .collect()
    }

    /// Differences against a from-scratch rebuild, as `(vertex, kept, fresh)`.
    pub fn discrepancies(&self, fg: &FilteredGraph<'_>) -> Vec<(Vertex, Option<u64>, Option<u64>)> {
        let fresh = DepthBoundedTree::build(fg, self.root, self.depth_cap);
        let mut verts: Vec<Vertex> = self.nodes.keys().chain(fresh.nodes.keys()).copied().collect();
        verts.sort_unstable();
        verts.dedup();
        verts
            .into_iter()
            .filter_map(|v| {
                let (a, b) = (self.distance(v), fresh.distance(v));
                (a != b).then_some((v, a, b))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Threshold, UpdateEvent, WeightedGraph};
    use crate::testutil::random_connected;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn path_drops_far_end() {
        let mut g = WeightedGraph::from_edges(3, 10, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        let t0 = Threshold::zero();
        let mut tree = DepthBoundedTree::build(&g.filtered(t0), 0, 3);
        assert_eq!(tree.distance(2), Some(2));
        let a = g.apply_weight_increase(&UpdateEvent::new(1, 2, 5)).unwrap();
        let gone = tree.handle_increase(&g.filtered(t0), a.edge);
        assert_eq!(gone, vec![2]);
        assert_eq!(tree.distance(1), Some(1));
        assert!(!tree.contains(2));
    }

    #[test]
    fn reroutes_around_heavier_edge() {
        // 0-1 (1), 1-2 (1), 0-2 (3): raising 1-2 leaves 2 at distance 3
        let mut g = WeightedGraph::from_edges(3, 10, &[(0, 1, 1), (1, 2, 1), (0, 2, 3)]).unwrap();
        let t0 = Threshold::zero();
        let mut tree = DepthBoundedTree::build(&g.filtered(t0), 0, 3);
        let a = g.apply_weight_increase(&UpdateEvent::new(1, 2, 9)).unwrap();
        assert!(tree.handle_increase(&g.filtered(t0), a.edge).is_empty());
        assert_eq!(tree.distance(2), Some(3));
    }

    #[test]
    fn matches_rebuild_under_random_increases() {
        let w = 40;
        for seed in 0..30 {
            let base = random_connected(30, 40, 6, seed);
            let edges: Vec<_> = base.edges().iter().map(|e| (e.u, e.v, e.weight)).collect();
            let mut g = WeightedGraph::from_edges(30, w, &edges).unwrap();
            // a threshold of 3 leaves plenty of zero-weight edges in G′
            let eps = Threshold::integer(3);
            let mut trees: Vec<_> = (0..4)
                .map(|r| DepthBoundedTree::build(&g.filtered(eps), r * 7, 12))
                .collect();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..150 {
                let id = rng.gen_range(0..g.m());
                let e = *g.edge(id);
                if e.weight == w {
                    continue;
                }
                let nw = rng.gen_range(e.weight + 1..=(e.weight + 4).min(w));
                let a = g.apply_weight_increase(&UpdateEvent::new(e.u, e.v, nw)).unwrap();
                for t in &mut trees {
                    if !eps.admits(a.new_weight) {
                        t.handle_increase(&g.filtered(eps), a.edge);
                    }
                    assert!(t.discrepancies(&g.filtered(eps)).is_empty(), "seed {seed}");
                }
            }
        }
    }
}

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::tree::DepthBoundedTree;
use crate::decomposition::{build_cut, carve_balls, ldrd, Clustering, Cut, DecompositionParams, Scale};
use crate::embedding::Level;
use crate::error::Result;
use crate::graph::{AppliedUpdate, FilteredGraph, Threshold, Vertex, WeightedGraph};

#[derive(Debug, Clone)]
pub struct ClusterState {
    center: Vertex,
    members: Vec<Vertex>,
    side: bool,
    tree: DepthBoundedTree,
}

impl ClusterState {
    pub fn center(&self) -> Vertex {
        self.center
    }

    /// Sorted member list.
    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn side(&self) -> bool {
        self.side
    }

    pub fn tree(&self) -> &DepthBoundedTree {
        &self.tree
    }
}

/// A side-bit change caused by a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SideFlip {
    pub vertex: Vertex,
    pub inside: bool,
}

/// Live cut at one ladder level.
///
/// Every member of a cluster stays within `depth_cap` of its center in `G′`.
/// When an increase pushes members past that depth, they are re-carved into
/// new clusters. Of the resulting parts the largest keeps the old cluster id
/// and side bit (ties favour the part still around the old center); every
/// other part gets a fresh id and a fresh bit, and its vertices count a split.
/// A counted part holds at most half of the cluster it left, so no vertex
/// counts more than `log₂ n` splits.
#[derive(Debug, Clone)]
pub struct ScaleMaintainer {
    level: usize,
    scale: Scale,
    epsilon: Threshold,
    beta: f64,
    depth_cap: u64,
    clusters: Vec<ClusterState>,
    cluster_of: Vec<usize>,
    split_count: Vec<u32>,
    rng: ChaCha8Rng,
}

impl ScaleMaintainer {
    /// Same draws as the static build at this level, then keeps `rng` for splits.
    pub fn init(
        g: &WeightedGraph,
        level: &Level,
        params: &DecompositionParams,
        mut rng: ChaCha8Rng,
    ) -> Result<Self> {
        let clustering = ldrd(g, level.scale, params, &mut rng)?;
        let cut = build_cut(clustering, &mut rng);
        let c = cut.clustering();
        let fg = g.filtered(c.epsilon());
        let clusters = (0..c.len())
            .map(|id| ClusterState {
                center: c.center(id),
                members: c.members(id).to_vec(),
                side: cut.side_bit(id),
                tree: DepthBoundedTree::build(&fg, c.center(id), c.radius_cap()),
            })
            .collect();
        Ok(ScaleMaintainer {
            level: level.index,
            scale: c.scale(),
            epsilon: c.epsilon(),
            beta: c.beta(),
            depth_cap: c.radius_cap(),
            clusters,
            cluster_of: c.assignment().to_vec(),
            split_count: vec![0; g.n()],
            rng,
        })
    }

    /// 1-based ladder index.
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn scale(&self) -> Scale {
        self.scale
    }

    pub fn epsilon(&self) -> Threshold {
        self.epsilon
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn depth_cap(&self) -> u64 {
        self.depth_cap
    }

    pub fn n(&self) -> usize {
        self.cluster_of.len()
    }

    pub fn clusters(&self) -> &[ClusterState] {
        &self.clusters
    }

    pub fn cluster_of(&self, v: Vertex) -> usize {
        self.cluster_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.cluster_of
    }

    pub fn side_of(&self, v: Vertex) -> bool {
        self.clusters[self.cluster_of[v]].side
    }

    pub fn split_counts(&self) -> &[u32] {
        &self.split_count
    }

    pub fn max_split_count(&self) -> u32 {
        self.split_count.iter().copied().max().unwrap_or(0)
    }

    /// Snapshot of the current state as a static cut.
    pub fn to_cut(&self) -> Result<Cut> {
        let balls = self
            .clusters
            .iter()
            .map(|c| (c.center, c.members.clone()))
            .collect();
        let clustering = Clustering::from_balls(
            self.n(),
            self.scale,
            self.beta,
            self.epsilon,
            self.depth_cap,
            balls,
        )?;
        Cut::from_bits(clustering, self.clusters.iter().map(|c| c.side).collect())
    }

    /// Processes an increase already applied to `g`.
    pub fn handle_increase(&mut self, g: &WeightedGraph, update: &AppliedUpdate) -> Vec<SideFlip> {
        if self.epsilon.admits(update.new_weight) {
            return Vec::new();
        }
        let fg = g.filtered(self.epsilon);
        let edge = *g.edge(update.edge);
        let mut broken = Vec::new();
        for (id, c) in self.clusters.iter_mut().enumerate() {
            if !(c.tree.contains(edge.u) && c.tree.contains(edge.v)) {
                continue;
            }
            let dropped = c.tree.handle_increase(&fg, update.edge);
            if dropped.iter().any(|&v| self.cluster_of[v] == id) {
                broken.push(id);
            }
        }
        let mut flips = Vec::new();
        for id in broken {
            let overflow: Vec<Vertex> = self.clusters[id]
                .members
                .iter()
                .copied()
                .filter(|&v| !self.clusters[id].tree.contains(v))
                .collect();
            let (_, f) = self.split_cluster(&fg, id, &overflow);
            flips.extend(f);
        }
        flips
    }

    /// Re-carves `overflow` out of cluster `id`. Returns the ids of the new
    /// clusters and the vertices whose side changed.
    pub fn split_cluster(
        &mut self,
        fg: &FilteredGraph<'_>,
        id: usize,
        overflow: &[Vertex],
    ) -> (Vec<usize>, Vec<SideFlip>) {
        if overflow.is_empty() {
            return (Vec::new(), Vec::new());
        }
        let mut overflow = overflow.to_vec();
        overflow.sort_unstable();
        let old = &self.clusters[id];
        let old_side = old.side;
        let remainder: Vec<Vertex> = old
            .members
            .iter()
            .copied()
            .filter(|v| overflow.binary_search(v).is_err())
            .collect();
        let pieces = carve_balls(fg, &overflow, self.beta, self.depth_cap, &mut self.rng);

        // part 0 is the remainder around the old center
        let mut keeper = 0;
        let mut best = remainder.len();
        for (k, (_, m)) in pieces.iter().enumerate() {
            if m.len() > best {
                keeper = k + 1;
                best = m.len();
            }
        }

        let mut fresh: Vec<(Vertex, Vec<Vertex>, Option<DepthBoundedTree>)> = Vec::new();
        if keeper == 0 {
            self.clusters[id].members = remainder;
        } else {
            let (kc, km) = pieces[keeper - 1].clone();
            let tree = DepthBoundedTree::build(fg, kc, self.depth_cap);
            let prev = std::mem::replace(
                &mut self.clusters[id],
                ClusterState {
                    center: kc,
                    members: km,
                    side: old_side,
                    tree,
                },
            );
            fresh.push((prev.center, remainder, Some(prev.tree)));
        }
        for (k, (c, m)) in pieces.into_iter().enumerate() {
            if k + 1 != keeper {
                fresh.push((c, m, None));
            }
        }

        let mut created = Vec::with_capacity(fresh.len());
        let mut flips = Vec::new();
        for (center, members, tree) in fresh {
            let new_id = self.clusters.len();
            let side = self.rng.gen::<bool>();
            let tree = tree.unwrap_or_else(|| DepthBoundedTree::build(fg, center, self.depth_cap));
            for &v in &members {
                self.cluster_of[v] = new_id;
                self.split_count[v] += 1;
                if side != old_side {
                    flips.push(SideFlip { vertex: v, inside: side });
                }
            }
            self.clusters.push(ClusterState {
                center,
                members,
                side,
                tree,
            });
            created.push(new_id);
        }
        (created, flips)
    }

    #[cfg(test)]
    pub(crate) fn flip_bit_for_test(&mut self, cluster: usize) {
        self.clusters[cluster].side ^= true;
    }

    #[cfg(test)]
    pub(crate) fn move_vertex_for_test(&mut self, v: Vertex, to: usize) {
        let from = self.cluster_of[v];
        self.clusters[from].members.retain(|&x| x != v);
        let m = &mut self.clusters[to].members;
        m.push(v);
        m.sort_unstable();
        self.cluster_of[v] = to;
    }
}

use super::Vertex;

/// Union-find forest mapping each vertex to its super-vertex representative.
#[derive(Debug, Clone)]
pub struct ContractionMap {
    parent: Vec<Vertex>,
    rank: Vec<u8>,
    classes: usize,
}

impl ContractionMap {
    pub fn identity(n: usize) -> Self {
        ContractionMap {
            parent: (0..n).collect(),
            rank: vec![0; n],
            classes: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&self, mut v: Vertex) -> Vertex {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn find_compress(&mut self, v: Vertex) -> Vertex {
        let root = self.find(v);
        let mut x = v;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the classes of `a` and `b`; returns `true` if they were distinct.
    pub fn union(&mut self, a: Vertex, b: Vertex) -> bool {
        let ra = self.find_compress(a);
        let rb = self.find_compress(b);
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.classes -= 1;
        true
    }

    pub fn same(&self, a: Vertex, b: Vertex) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    /// Number of union operations that merged distinct classes, i.e. edges in
    /// a spanning forest of the contracted edges.
    pub fn forest_edges(&self) -> usize {
        self.parent.len() - self.classes
    }

    /// Canonical labelling: each vertex mapped to the smallest vertex of its class.
    pub fn representatives(&self) -> Vec<Vertex> {
        let mut smallest = vec![usize::MAX; self.len()];
        for v in 0..self.len() {
            let r = self.find(v);
            smallest[r] = smallest[r].min(v);
        }
        (0..self.len()).map(|v| smallest[self.find(v)]).collect()
    }
}

//! Exact invariant checks of a dynamic state against the current graph.

use std::fmt;

use super::DynamicEmbedding;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// `C(v)` disagrees with the member lists.
    Partition,
    /// Two members farther apart than `R_i` in `G`.
    WeakDiameter,
    /// A pair within `ε_i` in `G` split across clusters.
    Contraction,
    /// `ρ(v)_i ≠ R_i · bit(C(v))`.
    ViewConsistency,
    /// A member beyond the depth cap, or a tree distance that differs from a rebuild.
    Radius,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// 1-based level.
    pub level: usize,
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "level {} {:?}: {}", self.level, self.kind, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    pub t: u64,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.first() {
            None => write!(f, "t={} clean", self.t),
            Some(v) => write!(f, "t={} {} violation(s), first: {v}", self.t, self.violations.len()),
        }
    }
}

/// Checks every level; stops collecting after `limit` findings per level.
pub fn audit_state(d: &DynamicEmbedding) -> AuditReport {
    const LIMIT: usize = 16;
    let g = d.graph();
    let n = g.n();
    let apsp = g.all_pairs();
    let view = d.view();
    let mut violations = Vec::new();
    for (k, m) in d.maintainers().iter().enumerate() {
        let level = m.level();
        let mut found = Vec::new();
        let mut report = |kind, detail: String| {
            if found.len() < LIMIT {
                found.push(Violation { level, kind, detail });
            }
        };
        for (id, c) in m.clusters().iter().enumerate() {
            if c.members().binary_search(&c.center()).is_err() {
                report(ViolationKind::Partition, format!("cluster {id} lost its center {}", c.center()));
            }
            for &v in c.members() {
                if m.cluster_of(v) != id {
                    report(
                        ViolationKind::Partition,
                        format!("{v} listed in {id} but assigned to {}", m.cluster_of(v)),
                    );
                }
            }
        }
        let listed: usize = m.clusters().iter().map(|c| c.members().len()).sum();
        if listed != n {
            report(ViolationKind::Partition, format!("{listed} memberships for {n} vertices"));
        }

        let r = m.scale();
        for (id, c) in m.clusters().iter().enumerate() {
            let ms = c.members();
            for (i, &a) in ms.iter().enumerate() {
                for &b in &ms[i + 1..] {
                    if !r.covers(apsp[a][b]) {
                        report(
                            ViolationKind::WeakDiameter,
                            format!("cluster {id}: d({a},{b}) = {} > {}", apsp[a][b], r.value()),
                        );
                    }
                }
            }
        }

        let eps = m.epsilon();
        for a in 0..n {
            for b in a + 1..n {
                if eps.admits(apsp[a][b]) && m.cluster_of(a) != m.cluster_of(b) {
                    report(
                        ViolationKind::Contraction,
                        format!("d({a},{b}) = {} ≤ ε = {:.3} but split", apsp[a][b], eps.as_f64()),
                    );
                }
            }
        }

        for v in 0..n {
            if view.in_side(v, k) != m.side_of(v) {
                report(
                    ViolationKind::ViewConsistency,
                    format!("vertex {v}: view {} vs cluster bit {}", view.in_side(v, k), m.side_of(v)),
                );
            }
        }

        let fg = g.filtered(eps);
        for (id, c) in m.clusters().iter().enumerate() {
            let tree = c.tree();
            for &v in c.members() {
                if !tree.contains(v) {
                    report(ViolationKind::Radius, format!("cluster {id}: {v} beyond depth {}", m.depth_cap()));
                }
            }
            if let Some((v, kept, fresh)) = tree.discrepancies(&fg).into_iter().next() {
                report(
                    ViolationKind::Radius,
                    format!("cluster {id}: tree has d({v}) = {kept:?}, rebuild {fresh:?}"),
                );
            }
        }
        violations.extend(found);
    }
    AuditReport { t: d.t(), violations }
}

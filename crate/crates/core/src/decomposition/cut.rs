use std::fmt::Write as _;

use rand::Rng;

use super::{Clustering, Scale};
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// One side `S` of a random cut: the union of clusters whose side bit is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Cut {
    clustering: Clustering,
    side_bit: Vec<bool>,
    membership: Vec<bool>,
}

/// Draws an independent fair bit per cluster, in cluster order.
pub fn build_cut<R: Rng + ?Sized>(clustering: Clustering, rng: &mut R) -> Cut {
    let side_bit: Vec<bool> = (0..clustering.len()).map(|_| rng.gen::<bool>()).collect();
    Cut::from_bits(clustering, side_bit).expect("one bit per cluster")
}

/// A parsed `cluster <id> center <v> members <v...> side <0|1>` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterRecord {
    pub id: usize,
    pub center: Vertex,
    pub members: Vec<Vertex>,
    pub side: bool,
}

impl Cut {
    pub fn from_bits(clustering: Clustering, side_bit: Vec<bool>) -> Result<Self> {
        if side_bit.len() != clustering.len() {
            return Err(Error::Malformed(format!(
                "{} side bits for {} clusters",
                side_bit.len(),
                clustering.len()
            )));
        }
        let membership = (0..clustering.n())
            .map(|v| side_bit[clustering.cluster_of(v)])
            .collect();
        Ok(Cut {
            clustering,
            side_bit,
            membership,
        })
    }

    pub fn clustering(&self) -> &Clustering {
        &self.clustering
    }

    pub fn side_bit(&self, cluster: usize) -> bool {
        self.side_bit[cluster]
    }

    pub fn side_bits(&self) -> &[bool] {
        &self.side_bit
    }

    /// `v ∈ S`.
    pub fn contains(&self, v: Vertex) -> bool {
        self.membership[v]
    }

    pub fn membership(&self) -> &[bool] {
        &self.membership
    }

    /// `u` and `v` lie on different sides.
    pub fn separates(&self, u: Vertex, v: Vertex) -> bool {
        self.membership[u] != self.membership[v]
    }

    pub fn scale(&self) -> Scale {
        self.clustering.scale()
    }

    pub fn records(&self) -> Vec<ClusterRecord> {
        (0..self.clustering.len())
            .map(|c| ClusterRecord {
                id: c,
                center: self.clustering.center(c),
                members: self.clustering.members(c).to_vec(),
                side: self.side_bit[c],
            })
            .collect()
    }

    /// Line-per-cluster text form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for rec in self.records() {
            write!(out, "cluster {} center {} members", rec.id, rec.center).unwrap();
            for v in &rec.members {
                write!(out, " {v}").unwrap();
            }
            writeln!(out, " side {}", u8::from(rec.side)).unwrap();
        }
        out
    }

    /// Rebuilds a cut from its text form. Scale and `n` are not part of the
    /// format and must be supplied; `beta` and the radius cap are not recoverable
    /// and come back as 0.
    pub fn from_text(text: &str, n: usize, scale: Scale) -> Result<Self> {
        let records = parse_records(text)?;
        let mut balls = Vec::with_capacity(records.len());
        let mut bits = Vec::with_capacity(records.len());
        for (expected, rec) in records.into_iter().enumerate() {
            if rec.id != expected {
                return Err(Error::Malformed(format!(
                    "cluster ids must be 0.. in order, found {} at position {expected}",
                    rec.id
                )));
            }
            balls.push((rec.center, rec.members));
            bits.push(rec.side);
        }
        let clustering = Clustering::from_balls(n, scale, 0.0, scale.epsilon(n), 0, balls)?;
        Cut::from_bits(clustering, bits)
    }
}

fn parse_records(text: &str) -> Result<Vec<ClusterRecord>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| Error::Parse {
            line: i + 1,
            message: msg.to_string(),
        };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 7
            || toks[0] != "cluster"
            || toks[2] != "center"
            || toks[4] != "members"
            || toks[toks.len() - 2] != "side"
        {
            return Err(bad("expected `cluster <id> center <v> members <v...> side <0|1>`"));
        }
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad("bad integer"));
        let side = match toks[toks.len() - 1] {
            "0" => false,
            "1" => true,
            _ => return Err(bad("side must be 0 or 1")),
        };
        let members = toks[5..toks.len() - 2]
            .iter()
            .map(|t| num(t))
            .collect::<Result<Vec<_>>>()?;
        out.push(ClusterRecord {
            id: num(toks[1])?,
            center: num(toks[3])?,
            members,
            side,
        });
    }
    Ok(out)
}

//! Coordinate deltas and the `t v i old new` log (coordinates ×2).

use std::io::{BufRead, Write};

use crate::embedding::{MultiScaleEmbedding, ScaleLadder};
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// One changed coordinate. `level` is 1-based; values are in half-units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoordinateChange {
    pub vertex: Vertex,
    pub level: usize,
    pub old: u64,
    pub new: u64,
}

/// Every coordinate changed by update `t`; `t = 0` is the initial embedding
/// measured against the zero vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EmbeddingDelta {
    pub t: u64,
    pub changes: Vec<CoordinateChange>,
}

impl EmbeddingDelta {
    pub fn is_empty(&self) -> bool {
        self.changes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.changes.len()
    }

    /// Distinct vertices with at least one changed coordinate.
    pub fn moved_vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.changes.iter().map(|c| c.vertex).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.changes.iter().any(|c| c.vertex == v)
    }
}

pub fn write_delta_log<W: Write>(deltas: &[EmbeddingDelta], mut out: W) -> std::io::Result<()> {
    for d in deltas {
        for c in &d.changes {
            writeln!(out, "{} {} {} {} {}", d.t, c.vertex, c.level, c.old, c.new)?;
        }
    }
    Ok(())
}

/// Groups lines by `t`. Updates with no changes leave no lines and do not
/// reappear.
pub fn parse_delta_log<R: BufRead>(reader: R) -> Result<Vec<EmbeddingDelta>> {
    let mut out: Vec<EmbeddingDelta> = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: String| Error::Parse { line: i + 1, message };
        let f: Vec<u64> = line
            .split_whitespace()
            .map(|s| s.parse::<u64>().map_err(|_| bad(format!("bad number {s:?}"))))
            .collect::<Result<_>>()?;
        if f.len() != 5 {
            return Err(bad(format!("expected 5 fields, found {}", f.len())));
        }
        let change = CoordinateChange {
            vertex: f[1] as usize,
            level: f[2] as usize,
            old: f[3],
            new: f[4],
        };
        match out.last_mut() {
            Some(d) if d.t == f[0] => d.changes.push(change),
            Some(d) if d.t > f[0] => return Err(bad(format!("t = {} after t = {}", f[0], d.t))),
            _ => out.push(EmbeddingDelta {
                t: f[0],
                changes: vec![change],
            }),
        }
    }
    Ok(out)
}

/// Applies `deltas` to the zero embedding, checking each `old` value.
pub fn replay_deltas(deltas: &[EmbeddingDelta], ladder: &ScaleLadder) -> Result<MultiScaleEmbedding> {
    let mut e = MultiScaleEmbedding::zeros(ladder.clone());
    for d in deltas {
        for c in &d.changes {
            if c.vertex >= e.n() {
                return Err(Error::InvalidVertex { v: c.vertex, n: e.n() });
            }
            if c.level == 0 || c.level > ladder.len() {
                return Err(Error::Malformed(format!("t = {}: no level {}", d.t, c.level)));
            }
            let k = c.level - 1;
            let r = ladder.level(k).scale.half_units();
            let current = e.coordinate_half_units(c.vertex, k);
            if current != c.old || (c.new != 0 && c.new != r) || c.new == c.old {
                return Err(Error::Malformed(format!(
                    "t = {}: vertex {} level {} is {current}, delta says {} -> {}",
                    d.t, c.vertex, c.level, c.old, c.new
                )));
            }
            e.set_side(c.vertex, k, c.new != 0);
        }
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::DecompositionParams;

    fn ladder() -> ScaleLadder {
        ScaleLadder::new(3, 8, &DecompositionParams::default())
    }

    fn ch(vertex: usize, level: usize, old: u64, new: u64) -> CoordinateChange {
        CoordinateChange { vertex, level, old, new }
    }

    #[test]
    fn log_round_trip() {
        let deltas = vec![
            EmbeddingDelta { t: 0, changes: vec![ch(0, 1, 0, 1), ch(2, 4, 0, 8)] },
            EmbeddingDelta { t: 3, changes: vec![ch(2, 4, 8, 0)] },
        ];
        let mut buf = Vec::new();
        write_delta_log(&deltas, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "0 0 1 0 1\n0 2 4 0 8\n3 2 4 8 0\n");
        assert_eq!(parse_delta_log(&buf[..]).unwrap(), deltas);
        let e = replay_deltas(&deltas, &ladder()).unwrap();
        assert_eq!(e.vector(0), vec![0.5, 0.0, 0.0, 0.0]);
        assert_eq!(e.vector(2), vec![0.0; 4]);
    }

    #[test]
    fn replay_rejects_inconsistent_log() {
        let l = ladder();
        let bad_old = [EmbeddingDelta { t: 1, changes: vec![ch(0, 2, 2, 0)] }];
        assert!(replay_deltas(&bad_old, &l).is_err());
        let bad_value = [EmbeddingDelta { t: 1, changes: vec![ch(0, 2, 0, 3)] }];
        assert!(replay_deltas(&bad_value, &l).is_err());
        let bad_level = [EmbeddingDelta { t: 1, changes: vec![ch(0, 5, 0, 32)] }];
        assert!(replay_deltas(&bad_level, &l).is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(parse_delta_log("1 2 3 4\n".as_bytes()).is_err());
        assert!(parse_delta_log("2 0 1 0 1\n1 0 1 1 0\n".as_bytes()).is_err());
        assert!(parse_delta_log("a 0 1 0 1\n".as_bytes()).is_err());
    }
}

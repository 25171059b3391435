//! Plain-text edge lists (`u v w`) and update streams (`t u v w_new`).

use std::io::{BufRead, Write};

use super::{UpdateEvent, Vertex, WeightedGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default)]
pub struct EdgeListOptions {
    /// Vertex ids in the file start at 1.
    pub one_indexed: bool,
    /// Admissible weight bound `W`; defaults to the largest weight in the file.
    pub max_weight: Option<u64>,
    /// Vertex count; defaults to the largest id plus one.
    pub vertex_count: Option<usize>,
}

fn data_lines<R: BufRead>(reader: R) -> impl Iterator<Item = Result<(usize, String)>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::from(e))),
            Ok(l) => {
                let t = l.trim();
                if t.is_empty() || t.starts_with('#') {
                    None
                } else {
                    Some(Ok((i + 1, t.to_string())))
                }
            }
        })
}

fn parse_fields<const N: usize>(line: usize, text: &str) -> Result<[u64; N]> {
    let mut out = [0u64; N];
    let mut fields = text.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("expected {N} fields"),
        })?;
        *slot = tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {tok:?}"),
        })?;
    }
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: format!("expected {N} fields"),
        });
    }
    Ok(out)
}

fn vertex_id(line: usize, raw: u64, one_indexed: bool) -> Result<Vertex> {
    if one_indexed {
        if raw == 0 {
            return Err(Error::Parse {
                line,
                message: "vertex id 0 in a 1-indexed file".into(),
            });
        }
        Ok((raw - 1) as Vertex)
    } else {
        Ok(raw as Vertex)
    }
}

/// Reads a whitespace-separated `u v w` edge list. `#` lines are comments.
pub fn load_edge_list<R: BufRead>(reader: R, opts: &EdgeListOptions) -> Result<WeightedGraph> {
    let mut triples = Vec::new();
    for item in data_lines(reader) {
        let (line, text) = item?;
        let [u, v, w] = parse_fields::<3>(line, &text)?;
        let u = vertex_id(line, u, opts.one_indexed)?;
        let v = vertex_id(line, v, opts.one_indexed)?;
        if u == v {
            return Err(Error::SelfLoop { line, v: u });
        }
        if w == 0 {
            return Err(Error::WeightOutOfRange {
                weight: 0,
                max: opts.max_weight.unwrap_or(u64::MAX),
            });
        }
        triples.push((line, u, v, w));
    }
    let max_id = triples.iter().map(|&(_, u, v, _)| u.max(v) + 1).max().unwrap_or(0);
    let n = opts.vertex_count.unwrap_or(max_id);
    if max_id > n {
        return Err(Error::InvalidVertex { v: max_id - 1, n });
    }
    let max_weight = opts
        .max_weight
        .unwrap_or_else(|| triples.iter().map(|t| t.3).max().unwrap_or(1));
    let mut g = WeightedGraph::new(n, max_weight)?;
    for (line, u, v, w) in triples {
        g.insert_edge(u, v, w).map_err(|e| e.at_line(line))?;
    }
    g.check_connected()?;
    Ok(g)
}

/// Writes `u v w` lines, 0-indexed.
pub fn write_edge_list<W: Write>(g: &WeightedGraph, mut out: W) -> Result<()> {
    writeln!(out, "# n={} m={} W={}", g.n(), g.m(), g.max_weight())?;
    for e in g.edges() {
        writeln!(out, "{} {} {}", e.u, e.v, e.weight)?;
    }
    Ok(())
}

/// Reads `t u v w_new` lines with strictly increasing sequence numbers `t`.
/// Only syntax and ordering are checked here; the graph validates each event
/// when it is applied.
pub fn parse_update_stream<R: BufRead>(reader: R, one_indexed: bool) -> Result<Vec<UpdateEvent>> {
    let mut events = Vec::new();
    let mut last_t: Option<u64> = None;
    for item in data_lines(reader) {
        let (line, text) = item?;
        let [t, u, v, w] = parse_fields::<4>(line, &text)?;
        if last_t.is_some_and(|p| t <= p) {
            return Err(Error::Parse {
                line,
                message: format!("sequence number {t} is not increasing"),
            });
        }
        last_t = Some(t);
        events.push(UpdateEvent::new(
            vertex_id(line, u, one_indexed)?,
            vertex_id(line, v, one_indexed)?,
            w,
        ));
    }
    Ok(events)
}

/// Writes events as `t u v w_new`, numbering from 1.
pub fn write_update_stream<W: Write>(events: &[UpdateEvent], mut out: W) -> Result<()> {
    for (i, ev) in events.iter().enumerate() {
        writeln!(out, "{} {} {} {}", i + 1, ev.u, ev.v, ev.new_weight)?;
    }
    Ok(())
}

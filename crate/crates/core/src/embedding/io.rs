//! Text export: header `levels k n Δ`, then one `v b_1…b_k` line per vertex.

use std::fmt::Write as _;

use super::{MultiScaleEmbedding, ScaleLadder};
use crate::decomposition::DecompositionParams;
use crate::error::{Error, Result};

pub fn export_embedding(e: &MultiScaleEmbedding) -> String {
    let k = e.dimension();
    let mut out = String::new();
    writeln!(out, "levels {} {} {}", k, e.n(), e.ladder().delta()).unwrap();
    for v in 0..e.n() {
        let bits: String = (0..k)
            .map(|level| if e.in_side(v, level) { '1' } else { '0' })
            .collect();
        writeln!(out, "{v} {bits}").unwrap();
    }
    out
}

/// Parses an export. The ladder is rebuilt from `(n, Δ)`; `params` only
/// supplies the diagnostic `β_i` values.
pub fn import_embedding(text: &str, params: &DecompositionParams) -> Result<MultiScaleEmbedding> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Malformed("missing header".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 4 || fields[0] != "levels" {
        return Err(Error::Malformed(format!("bad header {header:?}")));
    }
    let num = |s: &str| {
        s.parse::<u64>()
            .map_err(|_| Error::Malformed(format!("bad number {s:?}")))
    };
    let k = num(fields[1])? as usize;
    let n = num(fields[2])? as usize;
    let delta = num(fields[3])?;
    if !delta.is_power_of_two() {
        return Err(Error::Malformed(format!("Δ = {delta} is not a power of two")));
    }
    let ladder = ScaleLadder::new(n, delta, params);
    if k != ladder.len() {
        return Err(Error::LevelMismatch {
            expected: ladder.len(),
            found: k,
        });
    }
    let mut bits = vec![None; n];
    for line in lines {
        let (v, b) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| Error::Malformed(format!("bad vertex line {line:?}")))?;
        let v = num(v)? as usize;
        let b = b.trim();
        if v >= n {
            return Err(Error::InvalidVertex { v, n });
        }
        if b.len() != k {
            return Err(Error::LevelMismatch {
                expected: k,
                found: b.len(),
            });
        }
        let mut mask = 0u64;
        for (level, c) in b.chars().enumerate() {
            match c {
                '0' => {}
                '1' => mask |= 1 << level,
                _ => return Err(Error::Malformed(format!("bad bit {c:?}"))),
            }
        }
        if bits[v].replace(mask).is_some() {
            return Err(Error::Malformed(format!("vertex {v} listed twice")));
        }
    }
    let bits = bits
        .into_iter()
        .enumerate()
        .map(|(v, b)| b.ok_or_else(|| Error::Malformed(format!("vertex {v} missing"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiScaleEmbedding::from_bits(ladder, bits))
}

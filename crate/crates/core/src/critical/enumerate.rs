//! Orderly generation of critical graphs up to isomorphism.
//!
//! A graph is a multiset of column codes (one `s`-bit code per `y`), so column
//! permutations are absorbed by sorting. The canonical form is the least sorted
//! code list over all row permutations, and also over the side swap when `s = t`.
//! Candidates are generated as non-decreasing code lists and kept iff they equal
//! their canonical form, which yields exactly one representative per class.

use super::CriticalGraph;
use crate::error::{Error, Result};
use crate::par::Exec;

pub const MIN_RANK: usize = 3;
pub const MAX_RANK: usize = 9;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn permute_code(code: u32, perm: &[usize]) -> u32 {
    perm.iter()
        .enumerate()
        .fold(0u32, |c, (i, &p)| c | (code >> i & 1) << p)
}

/// Least sorted code list over the row permutations `perms`.
fn min_over_rows(codes: &[u32], perms: &[Vec<usize>], scratch: &mut Vec<u32>) -> Vec<u32> {
    let mut best: Option<Vec<u32>> = None;
    for p in perms {
        scratch.clear();
        scratch.extend(codes.iter().map(|&c| permute_code(c, p)));
        scratch.sort_unstable();
        if best.as_deref().is_none_or(|b| scratch.as_slice() < b) {
            best = Some(scratch.clone());
        }
    }
    best.unwrap_or_default()
}

/// `y_i → x_j` of the original becomes `x'_i → y'_j` after swapping sides.
fn swap_sides(codes: &[u32], s: usize) -> Vec<u32> {
    let t = codes.len();
    (0..s)
        .map(|j| (0..t).fold(0u32, |c, i| c | ((codes[i] >> j & 1) ^ 1) << i))
        .collect()
}

struct Canon {
    s: usize,
    t: usize,
    perms: Vec<Vec<usize>>,
}

impl Canon {
    fn new(s: usize, t: usize) -> Self {
        Canon { s, t, perms: permutations(s) }
    }

    fn form(&self, codes: &[u32]) -> Vec<u32> {
        let mut scratch = Vec::with_capacity(codes.len());
        let mut best = min_over_rows(codes, &self.perms, &mut scratch);
        if self.s == self.t {
            let other = min_over_rows(&swap_sides(codes, self.s), &self.perms, &mut scratch);
            best = best.min(other);
        }
        best
    }

    fn rows_mixed(&self, codes: &[u32]) -> bool {
        (0..self.s).all(|i| {
            let ones = codes.iter().filter(|&&c| c >> i & 1 == 1).count();
            ones != 0 && ones != self.t
        })
    }
}

/// Canonical code list of a graph; equal iff isomorphic.
pub fn canonical_form(d: &CriticalGraph) -> Vec<u32> {
    Canon::new(d.s, d.t).form(&d.column_codes())
}

/// Non-decreasing code lists of length `t` over `codes`, grouped by first code.
fn multisets_from(codes: &[u32], t: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == t {
        out.push(cur.clone());
        return;
    }
    for i in start..codes.len() {
        cur.push(codes[i]);
        multisets_from(codes, t, i, cur, out);
        cur.pop();
    }
}

/// Canonical representatives of the critical orientations of `K_{s,t}` in rank `s + t − 1`.
pub fn enumerate_shape(s: usize, t: usize, exec: Exec) -> Vec<CriticalGraph> {
    let r = s + t - 1;
    let full = (1u32 << s) - 1;
    // columns neither all-in nor all-out
    let codes: Vec<u32> = (1..full).collect();
    let canon = Canon::new(s, t);
    let mut out = Vec::new();
    for (first, _) in codes.iter().enumerate() {
        let mut batch = Vec::new();
        let mut cur = vec![codes[first]];
        multisets_from(&codes, t, first, &mut cur, &mut batch);
        let keep = exec.map(&batch, |c| canon.rows_mixed(c) && canon.form(c) == *c);
        out.extend(
            batch
                .into_iter()
                .zip(keep)
                .filter(|(_, k)| *k)
                .map(|(c, _)| CriticalGraph::from_codes(r, s, &c)),
        );
    }
    out
}

/// All critical graphs of rank `r`, by increasing `s`, then canonical code list.
pub fn enumerate_critical_graphs(r: usize) -> Result<Vec<CriticalGraph>> {
    enumerate_with(r, Exec::default())
}

pub fn enumerate_with(r: usize, exec: Exec) -> Result<Vec<CriticalGraph>> {
    if !(MIN_RANK..=MAX_RANK).contains(&r) {
        return Err(Error::Budget(format!("critical-graph enumeration supports {MIN_RANK} <= r <= {MAX_RANK}, got {r}")));
    }
    Ok((2..=r.div_ceil(2)).flat_map(|s| enumerate_shape(s, r + 1 - s, exec)).collect())
}

//! Critical graphs: source/sink-free orientations of `K_{s,t}` with `s + t = r + 1`,
//! padded to two disjoint sets `A`, `B` of size `r`, and the matroids built on them.

mod enumerate;
mod obstruction;
mod zdelta;

pub use enumerate::{
    canonical_form, enumerate_critical_graphs, enumerate_shape, enumerate_with as enumerate_critical_graphs_with, MAX_RANK,
    MIN_RANK,
};
pub use obstruction::{find_obstructions, Obstruction, Obstructions};
pub use zdelta::{
    build_m_delta, build_z_delta, conjecture_report, report_with as conjecture_report_with, ConjectureReport,
    ZDeltaPresentation,
};

use crate::error::{domain, Result};
use crate::ground::GroundSet;
use crate::set::ElementSet;
use serde::{Deserialize, Serialize};

/// `orientation[i][j]` is true for the edge `x_i → y_j`, false for `y_j → x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CriticalGraph {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub orientation: Vec<Vec<bool>>,
}

impl CriticalGraph {
    pub fn new(r: usize, orientation: Vec<Vec<bool>>) -> Result<Self> {
        let s = orientation.len();
        let t = orientation.first().map_or(0, Vec::len);
        let g = CriticalGraph { r, s, t, orientation };
        g.check()?;
        Ok(g)
    }

    /// Re-check the shape and the source/sink condition; useful after deserializing.
    pub fn check(&self) -> Result<()> {
        self.check_shape()?;
        if let Some(v) = self.source_or_sink() {
            return domain(format!("vertex {v} is a source or sink"));
        }
        Ok(())
    }

    pub(crate) fn check_shape(&self) -> Result<()> {
        let (r, s, t) = (self.r, self.s, self.t);
        if s < 2 || t < 2 || s + t != r + 1 {
            return domain(format!("K_{{{s},{t}}} does not fit rank {r}: need s, t >= 2 and s + t = r + 1"));
        }
        if 2 * r > crate::set::MAX_ELEMENTS {
            return domain(format!("rank {r} is too large"));
        }
        if self.orientation.len() != s || self.orientation.iter().any(|row| row.len() != t) {
            return domain("orientation rows must all have length t");
        }
        Ok(())
    }

    /// Label of the first vertex whose edges all point one way.
    pub fn source_or_sink(&self) -> Option<String> {
        let o = &self.orientation;
        for (i, row) in o.iter().enumerate() {
            if row.iter().all(|&e| e) || row.iter().all(|&e| !e) {
                return Some(self.label(i));
            }
        }
        for j in 0..self.t {
            if o.iter().all(|row| row[j]) || o.iter().all(|row| !row[j]) {
                return Some(self.label(self.r + j));
            }
        }
        None
    }

    pub fn n(&self) -> usize {
        2 * self.r
    }

    /// `a1..ar` then `b1..br`.
    pub fn ground(&self) -> GroundSet {
        let labels = (1..=self.r)
            .map(|i| format!("a{i}"))
            .chain((1..=self.r).map(|i| format!("b{i}")))
            .collect();
        GroundSet::new(labels).expect("distinct labels")
    }

    pub fn label(&self, e: usize) -> String {
        if e < self.r {
            format!("a{}", e + 1)
        } else {
            format!("b{}", e - self.r + 1)
        }
    }

    pub fn a(&self) -> ElementSet {
        ElementSet::full(self.r)
    }

    pub fn b(&self) -> ElementSet {
        ElementSet(ElementSet::full(self.r).0 << self.r)
    }

    pub fn x(&self) -> ElementSet {
        ElementSet::full(self.s)
    }

    pub fn y(&self) -> ElementSet {
        ElementSet(ElementSet::full(self.t).0 << self.r)
    }

    /// Index of `y_j` in the ground set.
    pub fn y_index(&self, j: usize) -> usize {
        self.r + j
    }

    /// Edge `x_i → y_j`.
    pub fn x_to_y(&self, i: usize, j: usize) -> bool {
        self.orientation[i][j]
    }

    /// Every edge reversed.
    pub fn reversed(&self) -> CriticalGraph {
        CriticalGraph {
            r: self.r,
            s: self.s,
            t: self.t,
            orientation: self.orientation.iter().map(|row| row.iter().map(|&e| !e).collect()).collect(),
        }
    }

    /// `C_Δ(y_j, A) = {y_j} ∪ (A−X) ∪ {x : x → y_j}`; for `b ∈ B−Y` it is `A ∪ b`.
    pub fn circuit_into_a(&self, b: usize) -> ElementSet {
        let (a, x) = (self.a(), self.x());
        let j = b - self.r;
        if j >= self.t {
            return a.with(b);
        }
        let heads = (0..self.s).filter(|&i| self.orientation[i][j]);
        a.difference(x).union(ElementSet::from_indices(heads)).with(b)
    }

    /// `C_Δ(x_i, B) = {x_i} ∪ (B−Y) ∪ {y : y → x_i}`; for `a ∈ A−X` it is `B ∪ a`.
    pub fn circuit_into_b(&self, a: usize) -> ElementSet {
        let (b, y) = (self.b(), self.y());
        if a >= self.s {
            return b.with(a);
        }
        let tails = (0..self.t).filter(|&j| !self.orientation[a][j]).map(|j| self.r + j);
        b.difference(y).union(ElementSet::from_indices(tails)).with(a)
    }

    /// The `(s,t)` block as column codes: bit `i` of code `j` is the edge `x_i → y_j`.
    pub fn column_codes(&self) -> Vec<u32> {
        (0..self.t)
            .map(|j| (0..self.s).fold(0u32, |c, i| c | (self.orientation[i][j] as u32) << i))
            .collect()
    }

    pub(crate) fn from_codes(r: usize, s: usize, codes: &[u32]) -> CriticalGraph {
        let orientation = (0..s).map(|i| codes.iter().map(|c| c >> i & 1 == 1).collect()).collect();
        CriticalGraph {
            r,
            s,
            t: codes.len(),
            orientation,
        }
    }

    /// Same graph up to relabelling within sides (and swapping sides when `s = t`).
    pub fn is_isomorphic(&self, other: &CriticalGraph) -> bool {
        self.r == other.r && self.s == other.s && canonical_form(self) == canonical_form(other)
    }
}

//! Basis-exchange digraphs, exchange orderings and the base-orderability classifiers.

mod certify;
mod classify;
mod search;

pub use certify::{
    certify_excluded_minor, certify_excluded_minor_census, source_sink_reduction, CertificateMethod,
    ExcludedMinorCertificate, SourceSinkReduction,
};
pub use classify::{
    first_failing_pair, is_base_orderable, is_k_base_orderable, is_kl_base_orderable,
    is_strongly_base_orderable, pair_census, pair_has_k_ordering, reduce_nonorderable_pair, PairCensus, Reduced,
    Strength,
};
pub use search::{find_k_exchange_ordering, find_kl_ordering, verify_k_ordering};

use crate::error::{domain, Error, Result};
use crate::matching::{hall_violator, maximum_matching};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// `Ω_{A,B}`: `(a,b)` is an edge iff `(B−b)∪a` is not a basis, `(b,a)` iff `(A−a)∪b` is not.
///
/// Vertices of `A` and `B` are separate copies, so shared elements appear on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeDigraph {
    pub basis_a: ElementSet,
    pub basis_b: ElementSet,
    /// Indexed by ground element; meaningful for members of `A`.
    edges_ab: Vec<ElementSet>,
    /// Indexed by ground element; meaningful for members of `B`.
    edges_ba: Vec<ElementSet>,
}

impl ExchangeDigraph {
    pub fn new(m: &Matroid, a: ElementSet, b: ElementSet) -> Result<Self> {
        check_bases(m, a, b)?;
        let n = m.n();
        let mut edges_ab = vec![ElementSet::EMPTY; n];
        let mut edges_ba = vec![ElementSet::EMPTY; n];
        for x in a.iter() {
            for y in b.iter() {
                if !m.basis_unchecked(b.without(y).with(x)) {
                    edges_ab[x] = edges_ab[x].with(y);
                }
                if !m.basis_unchecked(a.without(x).with(y)) {
                    edges_ba[y] = edges_ba[y].with(x);
                }
            }
        }
        Ok(ExchangeDigraph {
            basis_a: a,
            basis_b: b,
            edges_ab,
            edges_ba,
        })
    }

    /// Heads of edges leaving `a ∈ A`.
    pub fn out_of_a(&self, a: usize) -> ElementSet {
        self.edges_ab[a]
    }

    /// Heads of edges leaving `b ∈ B`.
    pub fn out_of_b(&self, b: usize) -> ElementSet {
        self.edges_ba[b]
    }

    pub fn has_ab(&self, a: usize, b: usize) -> bool {
        self.edges_ab[a].contains(b)
    }

    pub fn has_ba(&self, b: usize, a: usize) -> bool {
        self.edges_ba[b].contains(a)
    }

    /// Partners `b` for which neither direction is an edge.
    pub fn admissible(&self, a: usize) -> ElementSet {
        self.basis_b
            .difference(self.edges_ab[a])
            .iter()
            .filter(|&b| !self.edges_ba[b].contains(a))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.basis_a.iter().map(|a| self.edges_ab[a].len()).sum::<usize>()
            + self.basis_b.iter().map(|b| self.edges_ba[b].len()).sum::<usize>()
    }

    /// Same vertex sets with every edge reversed.
    pub fn reversed(&self) -> ExchangeDigraph {
        let n = self.edges_ab.len();
        let mut edges_ab = vec![ElementSet::EMPTY; n];
        let mut edges_ba = vec![ElementSet::EMPTY; n];
        for a in self.basis_a.iter() {
            for b in self.basis_b.iter() {
                if self.has_ba(b, a) {
                    edges_ab[a] = edges_ab[a].with(b);
                }
                if self.has_ab(a, b) {
                    edges_ba[b] = edges_ba[b].with(a);
                }
            }
        }
        ExchangeDigraph {
            basis_a: self.basis_a,
            basis_b: self.basis_b,
            edges_ab,
            edges_ba,
        }
    }
}

/// A bijection from `basis_a` to `basis_b`, verified up to subsets of size `strength`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeOrdering {
    /// `(a, σ(a))`, sorted by `a`.
    pub map: Vec<(usize, usize)>,
    pub strength: usize,
}

impl ExchangeOrdering {
    pub fn image(&self, a: usize) -> Option<usize> {
        self.map.iter().find(|p| p.0 == a).map(|p| p.1)
    }

    pub fn image_of(&self, x: ElementSet) -> ElementSet {
        self.map.iter().filter(|p| x.contains(p.0)).map(|p| p.1).collect()
    }

    pub fn inverse(&self) -> ExchangeOrdering {
        let mut map: Vec<(usize, usize)> = self.map.iter().map(|&(a, b)| (b, a)).collect();
        map.sort_unstable();
        ExchangeOrdering {
            map,
            strength: self.strength,
        }
    }
}

/// `X ⊆ A`, `Y ⊆ B` with `|X| + |Y| = r + 1` and an edge between every `x ∈ X`, `y ∈ Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockingSubgraph {
    pub x_side: ElementSet,
    pub y_side: ElementSet,
}

impl BlockingSubgraph {
    /// Re-check the size and edge conditions against a digraph.
    pub fn verify(&self, d: &ExchangeDigraph, r: usize) -> bool {
        self.x_side.is_subset(d.basis_a)
            && self.y_side.is_subset(d.basis_b)
            && self.x_side.len() >= 2
            && self.y_side.len() >= 2
            && self.x_side.len() + self.y_side.len() == r + 1
            && self
                .x_side
                .iter()
                .all(|x| self.y_side.iter().all(|y| d.has_ab(x, y) || d.has_ba(y, x)))
    }

    /// A vertex whose cross edges all point away from it.
    pub fn source(&self, d: &ExchangeDigraph) -> Option<usize> {
        self.x_side
            .iter()
            .find(|&x| self.y_side.is_subset(d.out_of_a(x)))
            .or_else(|| self.y_side.iter().find(|&y| self.x_side.is_subset(d.out_of_b(y))))
    }

    /// A vertex whose cross edges all point towards it.
    pub fn sink(&self, d: &ExchangeDigraph) -> Option<usize> {
        self.x_side
            .iter()
            .find(|&x| self.y_side.iter().all(|y| d.has_ba(y, x)))
            .or_else(|| self.y_side.iter().find(|&y| self.x_side.iter().all(|x| d.has_ab(x, y))))
    }
}

/// Either an exchange ordering or the blocking subgraph that rules one out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderingOutcome {
    Ordering(ExchangeOrdering),
    Blocked(BlockingSubgraph),
}

impl OrderingOutcome {
    pub fn is_ordering(&self) -> bool {
        matches!(self, OrderingOutcome::Ordering(_))
    }
}

pub fn exchange_digraph(m: &Matroid, a: ElementSet, b: ElementSet) -> Result<ExchangeDigraph> {
    ExchangeDigraph::new(m, a, b)
}

/// Decide whether `A` and `B` have an exchange ordering by maximum matching in
/// the compatibility graph, returning the ordering or a blocking subgraph.
pub fn has_exchange_ordering(m: &Matroid, a: ElementSet, b: ElementSet) -> Result<OrderingOutcome> {
    let d = ExchangeDigraph::new(m, a, b)?;
    ordering_from_digraph(&d, m.r())
}

pub(crate) fn ordering_from_digraph(d: &ExchangeDigraph, r: usize) -> Result<OrderingOutcome> {
    let left: Vec<usize> = d.basis_a.to_vec();
    let right: Vec<usize> = d.basis_b.to_vec();
    let adj = compat_masks(d, &left, &right);
    let mm = maximum_matching(&adj);
    if mm.size == left.len() {
        let mut map: Vec<(usize, usize)> = mm
            .left
            .iter()
            .enumerate()
            .map(|(i, j)| (left[i], right[j.expect("perfect matching")]))
            .collect();
        map.sort_unstable();
        return Ok(OrderingOutcome::Ordering(ExchangeOrdering { map, strength: 1 }));
    }
    let v = hall_violator(&adj, &mm).expect("matching is not perfect");
    let x_side: ElementSet = ElementSet(v.left).iter().map(|i| left[i]).collect();
    let y_side: ElementSet = ElementSet(!v.neighbours & ((1u64 << right.len()) - 1))
        .iter()
        .map(|j| right[j])
        .collect();
    let bl = BlockingSubgraph { x_side, y_side };
    if !bl.verify(d, r) {
        return Err(Error::Invariant(format!("blocking subgraph {bl:?} fails its own checks")));
    }
    Ok(OrderingOutcome::Blocked(bl))
}

/// Whether a perfect matching exists, without building witnesses.
pub(crate) fn pair_is_orderable(m: &Matroid, a: ElementSet, b: ElementSet) -> bool {
    let left: Vec<usize> = a.difference(b).to_vec();
    let right: Vec<usize> = b.difference(a).to_vec();
    let mut adj = Vec::with_capacity(left.len());
    for &x in &left {
        let mut mask = 0u64;
        for (j, &y) in right.iter().enumerate() {
            if m.basis_unchecked(b.without(y).with(x)) && m.basis_unchecked(a.without(x).with(y)) {
                mask |= 1 << j;
            }
        }
        if mask == 0 {
            return false;
        }
        adj.push(mask);
    }
    maximum_matching(&adj).size == left.len()
}

fn compat_masks(d: &ExchangeDigraph, left: &[usize], right: &[usize]) -> Vec<u64> {
    left.iter()
        .map(|&x| {
            let ok = d.admissible(x);
            right
                .iter()
                .enumerate()
                .filter(|(_, &y)| ok.contains(y))
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}

pub(crate) fn check_bases(m: &Matroid, a: ElementSet, b: ElementSet) -> Result<()> {
    for s in [a, b] {
        if !m.is_basis(s)? {
            return domain(format!("{:?} is not a basis", m.ground().labels_of(s)));
        }
    }
    Ok(())
}

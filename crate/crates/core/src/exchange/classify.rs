//! Whole-matroid classifiers over all basis pairs, and the pair census that
//! decides every single-element minor at once.

use super::search::{half_up, k_ordering_unchecked, Engine};
use super::pair_is_orderable;
use crate::error::{domain, Error, Result};
use crate::matroid::Matroid;
use crate::par::Exec;
use crate::set::ElementSet;

/// How much of the exchange condition a pair must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strength {
    /// Subsets of size at most `k`.
    K(usize),
    /// Every subset; strongly base-orderable.
    Strong,
}

impl Strength {
    fn k(self) -> usize {
        match self {
            Strength::K(k) => k,
            Strength::Strong => usize::MAX,
        }
    }

    pub fn name(self) -> String {
        match self {
            Strength::K(1) => "bo".into(),
            Strength::K(k) => format!("kbo={k}"),
            Strength::Strong => "sbo".into(),
        }
    }
}

/// Whether bases `a`, `b` have an ordering of the given strength. Level one uses matching.
pub fn pair_has_k_ordering(m: &Matroid, a: ElementSet, b: ElementSet, s: Strength) -> bool {
    let free = a.difference(b).len();
    if free <= 1 {
        return true;
    }
    match s.k() {
        0 => true,
        1 => pair_is_orderable(m, a, b),
        k => pair_is_orderable(m, a, b) && k_ordering_unchecked(m, a, b, k).is_some(),
    }
}

/// The first unordered pair `(A, B)`, `A < B` by bitmask, lacking an ordering.
pub fn first_failing_pair(m: &Matroid, s: Strength, exec: Exec) -> Option<(ElementSet, ElementSet)> {
    let bases: Vec<ElementSet> = m.bases().collect();
    let idx: Vec<usize> = (0..bases.len()).collect();
    exec.find_first(&idx, |&i| {
        let a = bases[i];
        bases[i + 1..]
            .iter()
            .find(|&&b| !pair_has_k_ordering(m, a, b, s))
            .map(|&b| (a, b))
    })
}

pub fn is_base_orderable(m: &Matroid) -> bool {
    first_failing_pair(m, Strength::K(1), Exec::default()).is_none()
}

/// `k`-base-orderable; `k` above the rank behaves like the rank.
pub fn is_k_base_orderable(m: &Matroid, k: usize) -> Result<bool> {
    if k == 0 {
        return domain("k must be at least 1");
    }
    Ok(first_failing_pair(m, Strength::K(k), Exec::default()).is_none())
}

/// Strongly base-orderable, checked as `⌈r/2⌉`-base-orderable.
pub fn is_strongly_base_orderable(m: &Matroid) -> bool {
    first_failing_pair(m, Strength::K(half_up(m.r())), Exec::default()).is_none()
}

/// `(k, l)`-base-orderable: the one-sided condition for `|X| ≤ k` or `|X| ≥ r − l`.
pub fn is_kl_base_orderable(m: &Matroid, k: usize, l: usize) -> Result<bool> {
    let r = m.r();
    if k > r || l > r || k + l == 0 {
        return domain(format!("(k, l) = ({k}, {l}) needs 0 <= k, l <= {r} and k + l > 0"));
    }
    let bases: Vec<ElementSet> = m.bases().collect();
    let idx: Vec<usize> = (0..bases.len()).collect();
    // the condition is one-sided, so ordered pairs are needed
    let fail = Exec::default().find_first(&idx, |&i| {
        let a = bases[i];
        bases
            .iter()
            .find(|&&b| Engine::new(m, a, b, a, b, k, l).run().is_none())
            .map(|&b| (a, b))
    });
    Ok(fail.is_none())
}

/// Failing-pair statistics of a matroid at one strength.
///
/// A pair of bases of `M \ x` or `M / x` is a pair of `M` avoiding `x`, or
/// containing `x` in both, with the same orderings; so the census settles the
/// single-element minors without building them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCensus {
    pub strength: Strength,
    pub pairs_checked: u64,
    pub failing: u64,
    pub first_failing: Option<(ElementSet, ElementSet)>,
    /// Unordered failing pairs that are disjoint and cover the ground set.
    pub complementary_failing: Vec<(ElementSet, ElementSet)>,
    /// `x` such that some failing pair avoids `x`: `M \ x` fails.
    pub deletion_fails: ElementSet,
    /// `x` such that some failing pair shares `x`: `M / x` fails.
    pub contraction_fails: ElementSet,
}

impl PairCensus {
    pub fn member(&self) -> bool {
        self.failing == 0
    }

    /// Fails, and every proper single-element minor passes.
    pub fn is_excluded_minor(&self, m: &Matroid) -> bool {
        let loops = m.loops();
        let coloops = m.coloops();
        !self.member()
            && loops.is_empty()
            && coloops.is_empty()
            && self.deletion_fails.is_empty()
            && self.contraction_fails.is_empty()
    }

    fn merge(mut self, o: PairCensus) -> PairCensus {
        self.pairs_checked += o.pairs_checked;
        self.failing += o.failing;
        self.first_failing = self.first_failing.or(o.first_failing);
        self.complementary_failing.extend(o.complementary_failing);
        self.deletion_fails = self.deletion_fails.union(o.deletion_fails);
        self.contraction_fails = self.contraction_fails.union(o.contraction_fails);
        self
    }
}

/// Check every unordered pair of bases at strength `s`.
pub fn pair_census(m: &Matroid, s: Strength, exec: Exec) -> PairCensus {
    let bases: Vec<ElementSet> = m.bases().collect();
    let full = m.full();
    let empty = PairCensus {
        strength: s,
        pairs_checked: 0,
        failing: 0,
        first_failing: None,
        complementary_failing: Vec::new(),
        deletion_fails: ElementSet::EMPTY,
        contraction_fails: ElementSet::EMPTY,
    };
    let idx: Vec<usize> = (0..bases.len()).collect();
    let parts = exec.map(&idx, |&i| {
        let a = bases[i];
        let mut c = PairCensus { ..empty.clone() };
        for &b in &bases[i + 1..] {
            c.pairs_checked += 1;
            if pair_has_k_ordering(m, a, b, s) {
                continue;
            }
            c.failing += 1;
            c.first_failing.get_or_insert((a, b));
            if a.is_disjoint(b) && a.union(b) == full {
                c.complementary_failing.push((a, b));
            }
            c.deletion_fails = c.deletion_fails.union(full.difference(a.union(b)));
            c.contraction_fails = c.contraction_fails.union(a.intersection(b));
        }
        c
    });
    parts.into_iter().fold(empty, PairCensus::merge)
}

/// A minor on two disjoint bases without an ordering, with those bases.
#[derive(Clone, Debug)]
pub struct Reduced {
    pub minor: Matroid,
    pub basis_a: ElementSet,
    pub basis_b: ElementSet,
}

/// `M / (A∩B) \ (E − (A∪B))` for the first failing pair `(A, B)`.
pub fn reduce_nonorderable_pair(m: &Matroid, s: Strength) -> Result<Reduced> {
    let (a, b) = first_failing_pair(m, s, Exec::default())
        .ok_or_else(|| Error::Precondition(format!("matroid is {}", s.name())))?;
    let keep = a.symmetric_difference(b);
    let minor = m.minor(a.intersection(b), m.full().difference(a.union(b)))?;
    Ok(Reduced {
        basis_a: a.difference(b).compress(keep),
        basis_b: b.difference(a).compress(keep),
        minor,
    })
}

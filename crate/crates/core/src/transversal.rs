//! Transversality via the Mason–Ingleton antichain inequalities.

use crate::matroid::Matroid;
use crate::set::ElementSet;

/// An antichain of cyclic flats on which the Mason–Ingleton inequality fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasonIngletonFailure {
    pub antichain: Vec<ElementSet>,
    /// `r(∩F)`.
    pub lhs: i64,
    /// The alternating sum of ranks of unions.
    pub rhs: i64,
}

/// `Σ over nonempty F' ⊆ F of (−1)^{|F'|+1} r(∪F')`.
pub fn alternating_union_sum(m: &Matroid, family: &[ElementSet]) -> i64 {
    let mut terms: Vec<(ElementSet, i64)> = Vec::with_capacity(1 << family.len());
    for &g in family {
        let k = terms.len();
        for i in 0..k {
            let (u, s) = terms[i];
            terms.push((u.union(g), -s));
        }
        terms.push((g, 1));
    }
    terms.iter().map(|&(u, s)| s * m.rank_of(u) as i64).sum()
}

/// `rhs − lhs` of the inequality for `family`; negative means it fails.
pub fn mason_ingleton_slack(m: &Matroid, family: &[ElementSet]) -> i64 {
    let meet = family
        .iter()
        .fold(m.full(), |acc, &f| acc.intersection(f));
    alternating_union_sum(m, family) - m.rank_of(meet) as i64
}

impl Matroid {
    pub fn is_transversal(&self) -> bool {
        self.transversal_failure().is_none()
    }

    /// First antichain of at least three cyclic flats breaking the inequality.
    /// Smaller antichains satisfy it automatically.
    pub fn transversal_failure(&self) -> Option<MasonIngletonFailure> {
        let flats: Vec<ElementSet> = self.cyclic_flats().iter().map(|f| f.set).collect();
        let mut state = Search {
            m: self,
            flats: &flats,
            chosen: Vec::new(),
            terms: Vec::new(),
        };
        state.dfs(0)
    }
}

struct Search<'a> {
    m: &'a Matroid,
    flats: &'a [ElementSet],
    chosen: Vec<ElementSet>,
    /// (union, sign, rank) for every nonempty subfamily of `chosen`.
    terms: Vec<(ElementSet, i64, i64)>,
}

impl Search<'_> {
    fn dfs(&mut self, start: usize) -> Option<MasonIngletonFailure> {
        for i in start..self.flats.len() {
            let g = self.flats[i];
            if self.chosen.iter().any(|&c| !c.is_incomparable(g)) {
                continue;
            }
            let k = self.terms.len();
            for j in 0..k {
                let (u, s, _) = self.terms[j];
                let u = u.union(g);
                self.terms.push((u, -s, self.m.rank_of(u) as i64));
            }
            self.terms.push((g, 1, self.m.rank_of(g) as i64));
            self.chosen.push(g);
            if self.chosen.len() >= 3 {
                let rhs: i64 = self.terms.iter().map(|&(_, s, r)| s * r).sum();
                let meet = self.chosen.iter().fold(self.m.full(), |a, &f| a.intersection(f));
                let lhs = self.m.rank_of(meet) as i64;
                if lhs > rhs {
                    return Some(MasonIngletonFailure {
                        antichain: self.chosen.clone(),
                        lhs,
                        rhs,
                    });
                }
            }
            if let Some(f) = self.dfs(i + 1) {
                return Some(f);
            }
            self.chosen.pop();
            self.terms.truncate(k);
        }
        None
    }
}

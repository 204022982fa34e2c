//! Ranked families of sets intended as the cyclic flats of a matroid, and the
//! axiom check (Z0)–(Z3) that decides whether such a matroid exists.

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::set::ElementSet;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RankedFlat {
    pub set: ElementSet,
    pub rank: usize,
}

impl RankedFlat {
    pub fn new(set: ElementSet, rank: usize) -> Self {
        RankedFlat { set, rank }
    }
}

/// The four cyclic-flat axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Axiom {
    /// The family is a lattice under inclusion.
    Z0,
    /// The least member has rank zero.
    Z1,
    /// Strict rank and size gaps along proper inclusions.
    Z2,
    /// Submodularity with slack for incomparable pairs.
    Z3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The first violated axiom together with the pair of sets that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: (ElementSet, ElementSet),
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axiom {} fails for {:?} and {:?}: {}",
            self.axiom, self.witness.0, self.witness.1, self.detail
        )
    }
}

/// A ground set with a ranked family of distinct subsets.
///
/// Flats are kept in canonical order (size, then sorted member list) so two
/// presentations of the same matroid compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicFlatPresentation {
    ground: GroundSet,
    flats: Vec<RankedFlat>,
}

impl CyclicFlatPresentation {
    /// Build a presentation, rejecting malformed input. Axioms are not checked here.
    pub fn new(ground: GroundSet, mut flats: Vec<RankedFlat>) -> Result<Self> {
        let full = ground.full();
        let mut seen = HashSet::with_capacity(flats.len());
        for f in &flats {
            if !f.set.is_subset(full) {
                return Err(Error::Malformed(format!(
                    "set {:?} is not inside the {}-element ground set",
                    f.set,
                    ground.len()
                )));
            }
            if !seen.insert(f.set) {
                return Err(Error::Malformed(format!("duplicate set {:?}", f.set)));
            }
            if f.rank > f.set.len() {
                return Err(Error::Malformed(format!(
                    "set {:?} has rank {} exceeding its size",
                    f.set, f.rank
                )));
            }
        }
        flats.sort_by_key(|f| f.set.canonical_key());
        Ok(CyclicFlatPresentation { ground, flats })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn flats(&self) -> &[RankedFlat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn rank_of_flat(&self, s: ElementSet) -> Option<usize> {
        self.flats.iter().find(|f| f.set == s).map(|f| f.rank)
    }


    /// Check (Z0)–(Z3). On failure returns the first violated axiom in the
    /// order Z0, Z1, Z2, Z3; for Z3 the witness with the smallest combined size
    /// is reported.
    pub fn validate(&self) -> Result<()> {
        match self.first_violation() {
            None => Ok(()),
            Some(v) => Err(Error::Axiom(v)),
        }
    }

    pub fn first_violation(&self) -> Option<Violation> {
        let lat = match Lattice::build(&self.flats) {
            Ok(l) => l,
            Err(v) => return Some(v),
        };
        let fl = &self.flats;
        let bottom = fl[lat.bottom];
        if bottom.rank != 0 {
            return Some(Violation {
                axiom: Axiom::Z1,
                witness: (bottom.set, bottom.set),
                detail: format!("least set has rank {}", bottom.rank),
            });
        }
        for (i, x) in fl.iter().enumerate() {
            for (j, y) in fl.iter().enumerate() {
                if i == j || !x.set.is_proper_subset(y.set) {
                    continue;
                }
                let gap = y.rank as i64 - x.rank as i64;
                let size = y.set.difference(x.set).len() as i64;
                if !(0 < gap && gap < size) {
                    return Some(Violation {
                        axiom: Axiom::Z2,
                        witness: (x.set, y.set),
                        detail: format!("rank gap {gap} must lie strictly between 0 and {size}"),
                    });
                }
            }
        }
        self.z3_violations_in(&lat).into_iter().next()
    }

    /// Every incomparable pair breaking (Z3), smallest combined size first.
    /// Returns an empty list when (Z0) fails, since joins and meets are undefined.
    pub fn z3_violations(&self) -> Vec<Violation> {
        match Lattice::build(&self.flats) {
            Ok(lat) => self.z3_violations_in(&lat),
            Err(_) => Vec::new(),
        }
    }

    fn z3_violations_in(&self, lat: &Lattice) -> Vec<Violation> {
        let fl = &self.flats;
        let mut out = Vec::new();
        for i in 0..fl.len() {
            for j in i + 1..fl.len() {
                let (x, y) = (fl[i], fl[j]);
                if !x.set.is_incomparable(y.set) {
                    continue;
                }
                let join = fl[lat.join[i * fl.len() + j]];
                let meet = fl[lat.meet[i * fl.len() + j]];
                let lhs = x.rank + y.rank;
                let rhs = join.rank
                    + meet.rank
                    + x.set.intersection(y.set).difference(meet.set).len();
                if lhs < rhs {
                    out.push(Violation {
                        axiom: Axiom::Z3,
                        witness: (x.set, y.set),
                        detail: format!("r(X)+r(Y) = {lhs} < {rhs}"),
                    });
                }
            }
        }
        out.sort_by_key(|v| (v.witness.0.len() + v.witness.1.len(), v.witness.0, v.witness.1));
        out
    }
}

/// Join and meet tables of a family that is a lattice under inclusion.
struct Lattice {
    join: Vec<usize>,
    meet: Vec<usize>,
    bottom: usize,
}

impl Lattice {
    fn build(fl: &[RankedFlat]) -> std::result::Result<Lattice, Violation> {
        let n = fl.len();
        if n == 0 {
            return Err(Violation {
                axiom: Axiom::Z0,
                witness: (ElementSet::EMPTY, ElementSet::EMPTY),
                detail: "empty family".into(),
            });
        }
        let mut join = vec![0; n * n];
        let mut meet = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let (x, y) = (fl[i].set, fl[j].set);
                let u = x.union(y);
                let ub = least_containing(fl, u).ok_or_else(|| Violation {
                    axiom: Axiom::Z0,
                    witness: (x, y),
                    detail: "no unique minimal common upper bound".into(),
                })?;
                let c = x.intersection(y);
                let lb = greatest_contained(fl, c).ok_or_else(|| Violation {
                    axiom: Axiom::Z0,
                    witness: (x, y),
                    detail: "no unique maximal common lower bound".into(),
                })?;
                join[i * n + j] = ub;
                join[j * n + i] = ub;
                meet[i * n + j] = lb;
                meet[j * n + i] = lb;
            }
        }
        let all = fl.iter().fold(fl[0].set, |acc, f| acc.intersection(f.set));
        let bottom = greatest_contained(fl, all).filter(|&b| fl.iter().all(|f| fl[b].set.is_subset(f.set)));
        let bottom = bottom.ok_or_else(|| Violation {
            axiom: Axiom::Z0,
            witness: (all, all),
            detail: "no least member".into(),
        })?;
        Ok(Lattice { join, meet, bottom })
    }
}

fn least_containing(fl: &[RankedFlat], s: ElementSet) -> Option<usize> {
    let cands: Vec<usize> = (0..fl.len()).filter(|&k| s.is_subset(fl[k].set)).collect();
    let best = *cands.iter().min_by_key(|&&k| fl[k].set.len())?;
    cands
        .iter()
        .all(|&k| fl[best].set.is_subset(fl[k].set))
        .then_some(best)
}

fn greatest_contained(fl: &[RankedFlat], s: ElementSet) -> Option<usize> {
    let cands: Vec<usize> = (0..fl.len()).filter(|&k| fl[k].set.is_subset(s)).collect();
    let best = *cands.iter().max_by_key(|&&k| fl[k].set.len())?;
    cands
        .iter()
        .all(|&k| fl[k].set.is_subset(fl[best].set))
        .then_some(best)
}

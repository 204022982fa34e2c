//! Matroids given by their cyclic flats, with a memoized rank oracle.

use crate::error::{domain, Error, Result};
use crate::ground::GroundSet;
use crate::presentation::{CyclicFlatPresentation, RankedFlat};
use crate::set::{Combinations, ElementSet};
use dashmap::DashMap;
use std::fmt;
use std::sync::atomic::{AtomicU8, Ordering};

/// Grounds up to this size get a dense, lazily filled rank table.
const DENSE_LIMIT: usize = 20;
/// Largest ground on which a full subset sweep is attempted.
pub const SWEEP_LIMIT: usize = 22;

enum RankCache {
    /// Entry `x` holds `rank(x) + 1`, zero meaning not yet computed.
    Dense(Box<[AtomicU8]>),
    Sparse(DashMap<u64, u8>),
}

impl RankCache {
    fn new(n: usize) -> Self {
        if n <= DENSE_LIMIT {
            RankCache::Dense((0..1usize << n).map(|_| AtomicU8::new(0)).collect())
        } else {
            RankCache::Sparse(DashMap::new())
        }
    }

    fn from_table(n: usize, table: &[u8]) -> Self {
        if n <= DENSE_LIMIT {
            RankCache::Dense(table.iter().map(|&r| AtomicU8::new(r + 1)).collect())
        } else {
            RankCache::Sparse(DashMap::new())
        }
    }
}

/// A matroid: a validated cyclic-flat presentation plus a rank memo.
///
/// Values are immutable; concurrent rank queries are allowed.
pub struct Matroid {
    pres: CyclicFlatPresentation,
    flats: Vec<(u64, u8)>,
    rank: usize,
    cache: RankCache,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid::from_validated(self.pres.clone())
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.pres == other.pres
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("ground", &self.pres.ground().labels())
            .field("rank", &self.rank)
            .field("flats", &self.pres.flats())
            .finish()
    }
}

impl Matroid {
    /// Validate the presentation against (Z0)–(Z3).
    pub fn new(pres: CyclicFlatPresentation) -> Result<Self> {
        pres.validate()?;
        Ok(Self::from_validated(pres))
    }

    pub fn from_flats(ground: GroundSet, flats: impl IntoIterator<Item = (ElementSet, usize)>) -> Result<Self> {
        let flats = flats.into_iter().map(|(s, r)| RankedFlat::new(s, r)).collect();
        Self::new(CyclicFlatPresentation::new(ground, flats)?)
    }

    pub(crate) fn from_validated(pres: CyclicFlatPresentation) -> Self {
        let flats: Vec<(u64, u8)> = pres.flats().iter().map(|f| (f.set.bits(), f.rank as u8)).collect();
        let n = pres.ground().len();
        let full = pres.ground().full().bits();
        let rank = flats
            .iter()
            .map(|&(a, r)| r as usize + (full & !a).count_ones() as usize)
            .min()
            .unwrap_or(0);
        Matroid {
            cache: RankCache::new(n),
            pres,
            flats,
            rank,
        }
    }

    /// Build a matroid from a rank function by sweeping every subset of the ground.
    ///
    /// The function is trusted to be a matroid rank function; the resulting
    /// presentation is still validated.
    pub fn from_rank_fn(ground: GroundSet, f: impl Fn(ElementSet) -> usize) -> Result<Self> {
        let n = ground.len();
        if n > SWEEP_LIMIT {
            return Err(Error::Budget(format!("rank sweep over {n} elements exceeds limit {SWEEP_LIMIT}")));
        }
        let table: Vec<u8> = (0..1u64 << n).map(|x| f(ElementSet(x)) as u8).collect();
        let flats = cyclic_flats_of_table(n, &table);
        let pres = CyclicFlatPresentation::new(ground, flats)?;
        pres.validate()
            .map_err(|e| Error::Invariant(format!("rank sweep produced an invalid presentation: {e}")))?;
        let mut m = Matroid::from_validated(pres);
        m.cache = RankCache::from_table(n, &table);
        Ok(m)
    }

    pub fn presentation(&self) -> &CyclicFlatPresentation {
        &self.pres
    }

    pub fn ground(&self) -> &GroundSet {
        self.pres.ground()
    }

    pub fn n(&self) -> usize {
        self.pres.ground().len()
    }

    pub fn full(&self) -> ElementSet {
        self.pres.ground().full()
    }

    pub fn cyclic_flats(&self) -> &[RankedFlat] {
        self.pres.flats()
    }

    /// Rank of the whole ground set.
    pub fn r(&self) -> usize {
        self.rank
    }

    /// Rank of `x`; domain error when `x` is not a subset of the ground set.
    pub fn rank(&self, x: ElementSet) -> Result<usize> {
        self.ground().check_subset(x)?;
        Ok(self.rank_of(x))
    }

    /// Rank without the subset check.
    #[inline]
    pub fn rank_of(&self, x: ElementSet) -> usize {
        let bits = x.bits();
        match &self.cache {
            RankCache::Dense(t) => {
                let cell = &t[bits as usize];
                let v = cell.load(Ordering::Relaxed);
                if v != 0 {
                    return (v - 1) as usize;
                }
                let r = self.rank_uncached(bits);
                cell.store(r as u8 + 1, Ordering::Relaxed);
                r
            }
            RankCache::Sparse(map) => {
                if let Some(v) = map.get(&bits) {
                    return *v as usize;
                }
                let r = self.rank_uncached(bits);
                map.insert(bits, r as u8);
                r
            }
        }
    }

    #[inline]
    fn rank_uncached(&self, x: u64) -> usize {
        let mut best = u32::MAX;
        for &(a, r) in &self.flats {
            let v = r as u32 + (x & !a).count_ones();
            if v < best {
                best = v;
            }
        }
        best as usize
    }

    /// A presented flat attaining the minimum in the rank formula.
    pub fn rank_witness(&self, x: ElementSet) -> RankedFlat {
        *self
            .pres
            .flats()
            .iter()
            .min_by_key(|f| f.rank + x.difference(f.set).len())
            .expect("presentation is never empty")
    }

    pub fn is_independent(&self, x: ElementSet) -> Result<bool> {
        Ok(self.rank(x)? == x.len())
    }

    pub fn is_spanning(&self, x: ElementSet) -> Result<bool> {
        Ok(self.rank(x)? == self.rank)
    }

    pub fn is_basis(&self, x: ElementSet) -> Result<bool> {
        self.ground().check_subset(x)?;
        Ok(self.basis_unchecked(x))
    }

    #[inline]
    pub(crate) fn basis_unchecked(&self, x: ElementSet) -> bool {
        x.len() == self.rank && self.rank_of(x) == self.rank
    }

    /// Every basis once, in increasing bitmask order.
    pub fn bases(&self) -> impl Iterator<Item = ElementSet> + '_ {
        Combinations::new(self.n(), self.rank)
            .map(ElementSet)
            .filter(move |&b| self.rank_of(b) == self.rank)
    }

    pub fn closure(&self, x: ElementSet) -> ElementSet {
        let r = self.rank_of(x);
        self.full()
            .difference(x)
            .iter()
            .filter(|&e| self.rank_of(x.with(e)) == r)
            .fold(x, |acc, e| acc.with(e))
    }

    pub fn is_flat(&self, x: ElementSet) -> bool {
        self.closure(x) == x
    }

    pub fn is_cyclic(&self, x: ElementSet) -> bool {
        let r = self.rank_of(x);
        x.iter().all(|e| self.rank_of(x.without(e)) == r)
    }

    pub fn is_circuit(&self, x: ElementSet) -> bool {
        !x.is_empty()
            && self.rank_of(x) + 1 == x.len()
            && x.iter().all(|e| self.rank_of(x.without(e)) == x.len() - 1)
    }

    /// Circuits with at most `max_size` elements, by size then bitmask.
    pub fn circuits_up_to(&self, max_size: usize) -> Vec<ElementSet> {
        let n = self.n();
        (1..=max_size.min(n))
            .flat_map(|k| Combinations::new(n, k).map(ElementSet))
            .filter(|&c| self.is_circuit(c))
            .collect()
    }

    pub fn circuits(&self) -> Vec<ElementSet> {
        self.circuits_up_to(self.rank + 1)
    }

    /// The unique circuit in `b ∪ {e}` for a basis `b` and `e ∉ b`.
    pub fn fundamental_circuit(&self, b: ElementSet, e: usize) -> Option<ElementSet> {
        if b.contains(e) || self.rank_of(b.with(e)) > self.rank_of(b) {
            return None;
        }
        let with = b.with(e);
        Some(
            b.iter()
                .filter(|&f| self.rank_of(with.without(f)) == self.rank_of(with))
                .fold(ElementSet::singleton(e), |acc, f| acc.with(f)),
        )
    }

    pub fn loops(&self) -> ElementSet {
        self.closure(ElementSet::EMPTY)
    }

    pub fn coloops(&self) -> ElementSet {
        let full = self.full();
        full.iter()
            .filter(|&e| self.rank_of(full.without(e)) < self.rank)
            .collect()
    }

    /// Dense table of all ranks; budget error above the sweep limit.
    pub fn rank_table(&self) -> Result<Vec<u8>> {
        let n = self.n();
        if n > SWEEP_LIMIT {
            return Err(Error::Budget(format!("rank table over {n} elements")));
        }
        Ok((0..1u64 << n).map(|x| self.rank_of(ElementSet(x)) as u8).collect())
    }

    /// Recompute the cyclic flats from scratch by checking every subset.
    pub fn cyclic_flats_by_sweep(&self) -> Result<Vec<RankedFlat>> {
        let table = self.rank_table()?;
        let mut flats = cyclic_flats_of_table(self.n(), &table);
        flats.sort_by_key(|f| f.set.canonical_key());
        Ok(flats)
    }

    pub fn dual(&self) -> Matroid {
        let full = self.full();
        let flats = self
            .pres
            .flats()
            .iter()
            .map(|f| {
                let c = full.difference(f.set);
                RankedFlat::new(c, c.len() + f.rank - self.rank)
            })
            .collect();
        let pres = CyclicFlatPresentation::new(self.ground().clone(), flats)
            .expect("complements of distinct sets are distinct");
        Matroid::from_validated(pres)
    }

    pub fn delete(&self, s: ElementSet) -> Result<Matroid> {
        self.minor(ElementSet::EMPTY, s)
    }

    pub fn contract(&self, s: ElementSet) -> Result<Matroid> {
        self.minor(s, ElementSet::EMPTY)
    }

    pub fn delete_element(&self, e: usize) -> Result<Matroid> {
        self.delete(ElementSet::singleton(e))
    }

    pub fn contract_element(&self, e: usize) -> Result<Matroid> {
        self.contract(ElementSet::singleton(e))
    }

    /// `M / contract \ delete` on the remaining elements, relabelled in order.
    ///
    /// Every cyclic flat of the minor has the form `F − (contract ∪ delete)` for a
    /// cyclic flat `F` of `M`, so those candidates are tested for being closed and
    /// cyclic in the minor.
    pub fn minor(&self, contract: ElementSet, delete: ElementSet) -> Result<Matroid> {
        self.ground().check_subset(contract)?;
        self.ground().check_subset(delete)?;
        if !contract.is_disjoint(delete) {
            return domain("contracted and deleted sets overlap");
        }
        let removed = contract.union(delete);
        let keep = self.full().difference(removed);
        let rc = self.rank_of(contract);
        let rk = |x: ElementSet| self.rank_of(x.union(contract)) - rc;
        let mut cands: Vec<ElementSet> = self.pres.flats().iter().map(|f| f.set.difference(removed)).collect();
        cands.sort();
        cands.dedup();
        let mut flats = Vec::new();
        for g in cands {
            let r = rk(g);
            let closed = keep.difference(g).iter().all(|e| rk(g.with(e)) > r);
            let cyclic = g.iter().all(|e| rk(g.without(e)) == r);
            if closed && cyclic {
                flats.push(RankedFlat::new(g.compress(keep), r));
            }
        }
        let pres = CyclicFlatPresentation::new(self.ground().restrict(keep), flats)?;
        debug_assert!(pres.validate().is_ok(), "minor presentation failed validation");
        Ok(Matroid::from_validated(pres))
    }

    /// Direct sum; the label sets must be disjoint.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let ground = self.ground().concat(other.ground())?;
        let shift = self.n();
        let mut flats = Vec::with_capacity(self.pres.len() * other.pres.len());
        for f in self.pres.flats() {
            for g in other.pres.flats() {
                let s = f.set.union(ElementSet(g.set.bits() << shift));
                flats.push(RankedFlat::new(s, f.rank + g.rank));
            }
        }
        Ok(Matroid::from_validated(CyclicFlatPresentation::new(ground, flats)?))
    }

    /// Same matroid with element `e` renamed to `perm[e]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Matroid> {
        let n = self.n();
        if perm.len() != n || ElementSet::from_indices(perm.iter().copied()) != self.full() {
            return domain("not a permutation of the ground set");
        }
        let mut labels = vec![String::new(); n];
        for (e, &p) in perm.iter().enumerate() {
            labels[p] = self.ground().label(e).to_string();
        }
        let flats = self
            .pres
            .flats()
            .iter()
            .map(|f| RankedFlat::new(f.set.map(perm), f.rank))
            .collect();
        Ok(Matroid::from_validated(CyclicFlatPresentation::new(GroundSet::new(labels)?, flats)?))
    }

    /// Same matroid with a new label table.
    pub fn relabeled(&self, ground: GroundSet) -> Result<Matroid> {
        if ground.len() != self.n() {
            return domain("relabelling must keep the ground size");
        }
        Ok(Matroid::from_validated(CyclicFlatPresentation::new(ground, self.pres.flats().to_vec())?))
    }

    /// Equal as matroids on index sets, ignoring labels.
    pub fn same_structure(&self, other: &Matroid) -> bool {
        self.n() == other.n() && self.pres.flats() == other.pres.flats()
    }
}

/// Cyclic flats of the matroid whose ranks are tabulated in `table`.
pub(crate) fn cyclic_flats_of_table(n: usize, table: &[u8]) -> Vec<RankedFlat> {
    let mut out = Vec::new();
    for x in 0..1u64 << n {
        let r = table[x as usize];
        let mut ok = true;
        for e in 0..n {
            let bit = 1u64 << e;
            let ok_e = if x & bit == 0 {
                table[(x | bit) as usize] > r
            } else {
                table[(x & !bit) as usize] == r
            };
            if !ok_e {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(RankedFlat::new(ElementSet(x), r as usize));
        }
    }
    out
}

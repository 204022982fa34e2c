//! `M_β`: rank `2k` with `|C| = |F| = |A∪B| = |D∪E| = k` and the extra
//! circuit-hyperplane `A∪B∪D∪E`.

use super::Parts;
use crate::error::{domain, Error, Result};
use crate::exchange::{certify_excluded_minor_census, find_k_exchange_ordering, pair_has_k_ordering, Strength};
use crate::matroid::Matroid;
use crate::par::Exec;
use crate::presentation::RankedFlat;
use crate::set::ElementSet;
use serde::{Deserialize, Serialize};

/// Largest `k` for which every assertion is checked.
pub const BETA_FULL_LIMIT: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaTuple {
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub d: usize,
    pub e: usize,
}

impl BetaTuple {
    pub fn new(k: usize, a: usize, b: usize, d: usize, e: usize) -> Result<Self> {
        let t = BetaTuple { k, a, b, d, e };
        t.check()?;
        Ok(t)
    }

    pub fn check(&self) -> Result<()> {
        let BetaTuple { k, a, b, d, e } = *self;
        if k < 2 {
            return domain(format!("k = {k} must be at least 2"));
        }
        if [a, b, d, e].contains(&0) {
            return domain("beta parts must be non-empty");
        }
        if a + b != k || d + e != k {
            return domain(format!("need |A|+|B| = |D|+|E| = k = {k}, got {} and {}", a + b, d + e));
        }
        if 4 * k > crate::set::MAX_ELEMENTS {
            return domain(format!("k = {k} is too large"));
        }
        Ok(())
    }

    pub fn sizes(&self) -> [usize; 6] {
        [self.a, self.b, self.k, self.d, self.e, self.k]
    }

    pub fn parts(&self) -> Parts {
        Parts { sizes: self.sizes() }
    }

    /// `β′ = (A, B, C, E, D, F)`.
    pub fn swapped(&self) -> BetaTuple {
        BetaTuple { d: self.e, e: self.d, ..*self }
    }

    /// All four of `A`, `B`, `D`, `E` have size `k/2`.
    pub fn balanced(&self) -> bool {
        2 * self.a == self.k && 2 * self.b == self.k && 2 * self.d == self.k && 2 * self.e == self.k
    }
}

/// Every size profile for a given `k`.
pub fn beta_tuples(k: usize) -> Vec<BetaTuple> {
    let mut out = Vec::new();
    for a in 1..k {
        for d in 1..k {
            out.push(BetaTuple { k, a, b: k - a, d, e: k - d });
        }
    }
    out
}

fn build(t: &BetaTuple, hyperplane: &str) -> Result<Matroid> {
    t.check()?;
    let p = t.parts();
    let k = t.k;
    let flats = [
        (ElementSet::EMPTY, 0),
        (p.union(hyperplane), 2 * k - 1),
        (p.union("CBE"), k + t.b),
        (p.union("CAD"), k + t.a),
        (p.union("FEA"), k + t.e),
        (p.union("FDB"), k + t.d),
        (ElementSet::full(p.n()), 2 * k),
    ];
    Matroid::from_flats(p.ground(), flats)
}

pub fn build_m_beta(t: &BetaTuple) -> Result<Matroid> {
    build(t, "ABDE")
}

/// `M′_β`: the dependent hyperplane `A∪B∪D∪E` replaced by `C∪F`.
pub fn build_m_beta_prime(t: &BetaTuple) -> Result<Matroid> {
    build(t, "CF")
}

/// The single-exchange compatibility of `D∪E∪F → A∪B∪C` already forces
/// `σ(E) ⊆ C∪B` and `σ(D) ⊆ C∪A`.
pub fn beta_forced_images(m: &Matroid, t: &BetaTuple) -> bool {
    let p = t.parts();
    let (src, dst) = (p.union("DEF"), p.union("ABC"));
    let partners = |x: usize| -> ElementSet {
        dst.iter()
            .filter(|&y| m.rank_of(src.without(x).with(y)) == m.r() && m.rank_of(dst.without(y).with(x)) == m.r())
            .collect()
    };
    p.part(4).iter().all(|e| partners(e).is_subset(p.union("CB")))
        && p.part(3).iter().all(|d| partners(d).is_subset(p.union("CA")))
}

#[derive(Clone, Debug, Serialize)]
pub struct BetaReport {
    pub tuple: BetaTuple,
    /// `A∪B∪C` and `D∪E∪F` are bases.
    pub named_bases: bool,
    pub not_k_bo: bool,
    pub not_sbo: bool,
    pub contractions_transversal: bool,
    pub excluded_sbo: Option<bool>,
    pub excluded_kbo: Option<bool>,
    pub k_minus_one_bo: Option<bool>,
    /// Unordered complementary basis pairs without a `k`-exchange-ordering.
    pub disjoint_failing_pairs: usize,
    pub expected_failing_pairs: usize,
    pub forced_images: bool,
    /// `M_β* = M′_{β′}` exactly, with `β′`'s `D` laid on `β`'s `E` and vice versa.
    pub dual_identity: bool,
    /// Every assertion was checked.
    pub complete: bool,
    pub holds: bool,
}

fn complementary_failing(m: &Matroid, k: usize) -> usize {
    let full = m.full();
    m.bases()
        .filter(|&b1| {
            let b2 = full.difference(b1);
            b1 < b2 && m.rank_of(b2) == m.r() && !pair_has_k_ordering(m, b1, b2, Strength::K(k))
        })
        .count()
}

fn dual_identity(m: &Matroid, t: &BetaTuple) -> Result<bool> {
    let prime = build_m_beta_prime(&t.swapped())?;
    let p = t.parts();
    let q = t.swapped().parts();
    // q's D block (size |E|) sits on p's E block, q's E block on p's D block
    let mut perm = vec![0usize; p.n()];
    for i in 0..6 {
        let target = match i {
            3 => 4,
            4 => 3,
            j => j,
        };
        for (x, y) in q.part(i).iter().zip(p.part(target).iter()) {
            perm[x] = y;
        }
    }
    let mut mapped: Vec<RankedFlat> = prime
        .cyclic_flats()
        .iter()
        .map(|f| RankedFlat::new(f.set.map(&perm), f.rank))
        .collect();
    mapped.sort_by_key(|f| f.set.canonical_key());
    Ok(m.dual().cyclic_flats() == mapped.as_slice())
}

fn check(t: &BetaTuple, exec: Exec, full: bool) -> Result<BetaReport> {
    let m = build_m_beta(t)?;
    let p = t.parts();
    let k = t.k;
    let (abc, def) = (p.union("ABC"), p.union("DEF"));
    let named_bases = m.is_basis(abc)? && m.is_basis(def)?;
    let not_k_bo = find_k_exchange_ordering(&m, abc, def, k)?.is_none();
    let contractions: Vec<Matroid> = (0..m.n()).map(|x| m.contract_element(x)).collect::<Result<_>>()?;
    let contractions_transversal = exec.all(&contractions, Matroid::is_transversal);
    let disjoint_failing_pairs = complementary_failing(&m, k);
    let expected_failing_pairs = if t.balanced() { 2 } else { 1 };
    let forced_images = beta_forced_images(&m, t);
    let dual_identity = dual_identity(&m, t)?;
    let (mut excluded_sbo, mut excluded_kbo, mut k_minus_one_bo) = (None, None, None);
    if full {
        let (cert, _) = certify_excluded_minor_census(&m, Strength::K(k), exec);
        // SBO on rank 2k is k-BO
        excluded_sbo = Some(cert.excluded_minor);
        excluded_kbo = Some(cert.excluded_minor);
        let (_, lower) = certify_excluded_minor_census(&m, Strength::K(k - 1), exec);
        k_minus_one_bo = Some(lower.member());
    }
    let holds = named_bases
        && not_k_bo
        && contractions_transversal
        && disjoint_failing_pairs == expected_failing_pairs
        && forced_images
        && dual_identity
        && [excluded_sbo, excluded_kbo, k_minus_one_bo].iter().all(|x| x.unwrap_or(true));
    Ok(BetaReport {
        tuple: *t,
        named_bases,
        not_k_bo,
        not_sbo: not_k_bo,
        contractions_transversal,
        excluded_sbo,
        excluded_kbo,
        k_minus_one_bo,
        disjoint_failing_pairs,
        expected_failing_pairs,
        forced_images,
        dual_identity,
        complete: full,
        holds,
    })
}

/// All five assertions of the theorem on `M_β`. Budget error above [`BETA_FULL_LIMIT`].
pub fn verify_beta_theorem(t: &BetaTuple, exec: Exec) -> Result<BetaReport> {
    t.check()?;
    if t.k > BETA_FULL_LIMIT {
        return Err(Error::Budget(format!(
            "full check stops at k = {BETA_FULL_LIMIT}; use verify_beta_partial for assertions 1, 2 and 5"
        )));
    }
    check(t, exec, true)
}

/// Assertions 1, 2 and 5 plus the forced images and the dual identity, for any `k`.
pub fn verify_beta_partial(t: &BetaTuple, exec: Exec) -> Result<BetaReport> {
    check(t, exec, false)
}

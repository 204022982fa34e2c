//! Backtracking search for exchange orderings that work for larger exchanged sets.

use super::{check_bases, ExchangeOrdering};
use crate::error::{domain, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// Bijection search from `free_a` onto `free_b`. An assignment `σ` must satisfy
/// `(A−X)∪σ(X)` basis for `|X| ≤ k1` and `(B−σ(X))∪X` basis for `|X| ≤ k2`,
/// over subsets `X` of `free_a`.
pub(crate) struct Engine<'a> {
    m: &'a Matroid,
    a: ElementSet,
    b: ElementSet,
    k1: usize,
    k2: usize,
    order: Vec<usize>,
    cands: Vec<Vec<usize>>,
    image: Vec<usize>,
    used: ElementSet,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(m: &'a Matroid, a: ElementSet, b: ElementSet, free_a: ElementSet, free_b: ElementSet, k1: usize, k2: usize) -> Self {
        let mut rows: Vec<(usize, Vec<usize>)> = free_a
            .iter()
            .map(|x| {
                let c = free_b
                    .iter()
                    .filter(|&y| {
                        (k1 == 0 || m.basis_unchecked(a.without(x).with(y)))
                            && (k2 == 0 || m.basis_unchecked(b.without(y).with(x)))
                    })
                    .collect();
                (x, c)
            })
            .collect();
        rows.sort_by_key(|(x, c)| (c.len(), *x));
        let n = rows.len();
        Engine {
            m,
            a,
            b,
            k1,
            k2,
            order: rows.iter().map(|r| r.0).collect(),
            cands: rows.into_iter().map(|r| r.1).collect(),
            image: vec![usize::MAX; n],
            used: ElementSet::EMPTY,
        }
    }

    /// `(x, σ(x))` pairs of the first bijection found.
    pub(crate) fn run(mut self) -> Option<Vec<(usize, usize)>> {
        if self.cands.iter().any(|c| c.is_empty()) {
            return None;
        }
        if self.go(0) {
            Some(self.order.iter().copied().zip(self.image.iter().copied()).collect())
        } else {
            None
        }
    }

    fn go(&mut self, i: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        for ci in 0..self.cands[i].len() {
            let y = self.cands[i][ci];
            if self.used.contains(y) {
                continue;
            }
            self.image[i] = y;
            if self.consistent(i) {
                self.used = self.used.with(y);
                if self.go(i + 1) {
                    return true;
                }
                self.used = self.used.without(y);
            }
        }
        self.image[i] = usize::MAX;
        false
    }

    /// Check every subset of positions `0..=i` that contains `i` and has size ≥ 2.
    fn consistent(&self, i: usize) -> bool {
        let kmax = self.k1.max(self.k2);
        if kmax < 2 || i == 0 {
            return true;
        }
        let (xi, yi) = (self.order[i], self.image[i]);
        for size in 1..kmax.min(i + 1) {
            for mask in crate::set::Combinations::new(i, size) {
                let mut xs = ElementSet::singleton(xi);
                let mut ys = ElementSet::singleton(yi);
                for p in ElementSet(mask).iter() {
                    xs = xs.with(self.order[p]);
                    ys = ys.with(self.image[p]);
                }
                let s = size + 1;
                if s <= self.k1 && !self.m.basis_unchecked(self.a.difference(xs).union(ys)) {
                    return false;
                }
                if s <= self.k2 && !self.m.basis_unchecked(self.b.difference(ys).union(xs)) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn half_up(r: usize) -> usize {
    r.div_ceil(2)
}

/// Strength needed on a pair with `r'` unshared elements for a requested `k`:
/// condition 1 on `X` is condition 2 on `(A−B)−X`, so sizes above `⌈r'/2⌉` add nothing.
pub(crate) fn effective_k(k: usize, free: usize) -> usize {
    k.min(half_up(free))
}

/// Exchange-ordering search fixing `A ∩ B` pointwise, without argument checks.
pub(crate) fn k_ordering_unchecked(m: &Matroid, a: ElementSet, b: ElementSet, k: usize) -> Option<ExchangeOrdering> {
    let fa = a.difference(b);
    let fb = b.difference(a);
    let ke = effective_k(k, fa.len());
    let pairs = Engine::new(m, a, b, fa, fb, ke, ke).run()?;
    let mut map: Vec<(usize, usize)> = a.intersection(b).iter().map(|c| (c, c)).chain(pairs).collect();
    map.sort_unstable();
    Some(ExchangeOrdering { map, strength: k })
}

/// A `k`-exchange-ordering between bases `a` and `b`, or `None` if there is none.
pub fn find_k_exchange_ordering(m: &Matroid, a: ElementSet, b: ElementSet, k: usize) -> Result<Option<ExchangeOrdering>> {
    check_bases(m, a, b)?;
    if k < 1 || k > m.r() {
        return domain(format!("k = {k} outside 1..={}", m.r()));
    }
    Ok(k_ordering_unchecked(m, a, b, k))
}

/// A bijection `σ: a → b` with `(a−X)∪σ(X)` a basis whenever `|X| ≤ k` or `|X| ≥ r − l`.
///
/// Shared elements are not forced to be fixed.
pub fn find_kl_ordering(m: &Matroid, a: ElementSet, b: ElementSet, k: usize, l: usize) -> Result<Option<ExchangeOrdering>> {
    check_bases(m, a, b)?;
    let r = m.r();
    if k > r || l > r || k + l == 0 {
        return domain(format!("(k, l) = ({k}, {l}) needs 0 <= k, l <= {r} and k + l > 0"));
    }
    // |X| ≥ r − l on the first condition is |A − X| ≤ l on the second.
    Ok(Engine::new(m, a, b, a, b, k, l).run().map(|mut map| {
        map.sort_unstable();
        ExchangeOrdering { map, strength: k }
    }))
}

/// Brute-force re-check of an ordering over every `X ⊆ a` with `|X| ≤ k`, both sides.
pub fn verify_k_ordering(m: &Matroid, a: ElementSet, b: ElementSet, ord: &ExchangeOrdering, k: usize) -> bool {
    let bijective = ord.map.len() == a.len()
        && ElementSet::from_indices(ord.map.iter().map(|p| p.0)) == a
        && ElementSet::from_indices(ord.map.iter().map(|p| p.1)) == b;
    bijective
        && (0..=k.min(a.len())).all(|s| {
            a.subsets_of_size(s).all(|x| {
                let y = ord.image_of(x);
                m.basis_unchecked(a.difference(x).union(y)) && m.basis_unchecked(b.difference(y).union(x))
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::{mk4, uniform};

    #[test]
    fn identity_for_equal_bases() {
        let m = mk4();
        let a = ElementSet::from_indices([0, 1, 2]);
        let o = find_k_exchange_ordering(&m, a, a, 3).unwrap().unwrap();
        assert!(o.map.iter().all(|p| p.0 == p.1));
    }

    #[test]
    fn k4_fails_at_level_one() {
        let m = mk4();
        let a = ElementSet::from_indices([0, 1, 2]);
        let b = ElementSet::from_indices([3, 4, 5]);
        assert!(find_k_exchange_ordering(&m, a, b, 1).unwrap().is_none());
        assert!(find_k_exchange_ordering(&m, a, b, 0).is_err());
        assert!(find_k_exchange_ordering(&m, a, b, 4).is_err());
    }

    #[test]
    fn uniform_orderings_are_strong_and_invertible() {
        let u = uniform(3, 6);
        let a = ElementSet::from_indices([0, 1, 2]);
        let b = ElementSet::from_indices([2, 4, 5]);
        let o = find_k_exchange_ordering(&u, a, b, 3).unwrap().unwrap();
        assert_eq!(o.image(2), Some(2));
        assert!(verify_k_ordering(&u, a, b, &o, 3));
        assert!(verify_k_ordering(&u, b, a, &o.inverse(), 3));
    }

    #[test]
    fn kl_one_zero_always_exists() {
        let m = mk4();
        let bases: Vec<_> = m.bases().collect();
        for &a in &bases {
            for &b in &bases {
                assert!(find_kl_ordering(&m, a, b, 1, 0).unwrap().is_some());
            }
        }
        assert!(find_kl_ordering(&m, bases[0], bases[1], 0, 0).is_err());
    }
}

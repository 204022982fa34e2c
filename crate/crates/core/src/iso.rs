//! Matroid isomorphism by backtracking over element bijections, and minor containment.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::set::{Combinations, ElementSet};
use std::collections::{HashMap, HashSet};

/// Largest pattern accepted by [`Matroid::has_minor_isomorphic`].
pub const MINOR_PATTERN_LIMIT: usize = 8;

struct Profile {
    /// Per element: sorted (size, rank) of the cyclic flats containing it.
    sig: Vec<Vec<(usize, usize)>>,
    /// Per pair: sorted (size, rank) of cyclic flats containing both.
    pair: Vec<Vec<Vec<(usize, usize)>>>,
    /// Per element: bitmask of the flats containing it.
    member: Vec<u128>,
}

fn profile(m: &Matroid) -> Option<Profile> {
    let n = m.n();
    let flats = m.cyclic_flats();
    let mut sig = vec![Vec::new(); n];
    let mut pair = vec![vec![Vec::new(); n]; n];
    let mut member = vec![0u128; n];
    for (i, f) in flats.iter().enumerate() {
        let key = (f.set.len(), f.rank);
        for e in f.set.iter() {
            sig[e].push(key);
            if i < 128 {
                member[e] |= 1u128 << i;
            }
            for g in f.set.iter() {
                pair[e][g].push(key);
            }
        }
    }
    for s in sig.iter_mut() {
        s.sort_unstable();
    }
    for row in pair.iter_mut() {
        for p in row.iter_mut() {
            p.sort_unstable();
        }
    }
    // twins are only detected reliably when every flat fits the membership mask
    if flats.len() > 128 {
        member = (0..n).map(|e| e as u128 + (1u128 << 127)).collect();
    }
    Some(Profile { sig, pair, member })
}

fn flat_census(m: &Matroid) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = m.cyclic_flats().iter().map(|f| (f.set.len(), f.rank)).collect();
    v.sort_unstable();
    v
}

/// A bijection `φ` with `φ(Z(a)) = Z(b)` rank-preservingly, if one exists.
pub fn find_isomorphism(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    let n = a.n();
    if n != b.n() || a.r() != b.r() || flat_census(a) != flat_census(b) {
        return None;
    }
    let (pa, pb) = (profile(a)?, profile(b)?);
    let mut sa = pa.sig.clone();
    let mut sb = pb.sig.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    // visit elements from the rarest signature class, keeping twins adjacent
    let class_size = |s: &Vec<(usize, usize)>| pa.sig.iter().filter(|t| *t == s).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (class_size(&pa.sig[e]), pa.sig[e].clone(), pa.member[e], e));
    let target: HashMap<ElementSet, usize> = b.cyclic_flats().iter().map(|f| (f.set, f.rank)).collect();
    let mut st = IsoSearch {
        a,
        pa: &pa,
        pb: &pb,
        order: &order,
        image: vec![usize::MAX; n],
        used: ElementSet::EMPTY,
        target: &target,
    };
    st.go(0).then_some(st.image)
}

pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> bool {
    find_isomorphism(a, b).is_some()
}

struct IsoSearch<'a> {
    a: &'a Matroid,
    pa: &'a Profile,
    pb: &'a Profile,
    order: &'a [usize],
    image: Vec<usize>,
    used: ElementSet,
    target: &'a HashMap<ElementSet, usize>,
}

impl IsoSearch<'_> {
    fn go(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.a.cyclic_flats().iter().all(|f| {
                self.target.get(&f.set.map(&self.image)) == Some(&f.rank)
            });
        }
        let u = self.order[depth];
        // twins of the previous element must take increasing images
        let floor = match depth.checked_sub(1).map(|d| self.order[d]) {
            Some(p) if self.pa.member[p] == self.pa.member[u] => self.image[p] + 1,
            _ => 0,
        };
        let n = self.order.len();
        for v in floor..n {
            if self.used.contains(v) || self.pa.sig[u] != self.pb.sig[v] {
                continue;
            }
            let ok = self.order[..depth]
                .iter()
                .all(|&w| self.pa.pair[u][w] == self.pb.pair[v][self.image[w]]);
            if !ok {
                continue;
            }
            self.image[u] = v;
            self.used = self.used.with(v);
            if self.go(depth + 1) {
                return true;
            }
            self.used = self.used.without(v);
            self.image[u] = usize::MAX;
        }
        false
    }
}

impl Matroid {
    pub fn is_isomorphic(&self, other: &Matroid) -> bool {
        is_isomorphic(self, other)
    }

    /// Some minor `M / C \ D` is isomorphic to `pattern`.
    ///
    /// Searches sets `S` of `|E(pattern)|` elements and independent `C` of size
    /// `r(M) − r(pattern)` outside `S` with `S ∪ C` spanning.
    pub fn has_minor_isomorphic(&self, pattern: &Matroid) -> Result<bool> {
        let p = pattern.n();
        if p > MINOR_PATTERN_LIMIT {
            return Err(Error::Budget(format!(
                "minor patterns are limited to {MINOR_PATTERN_LIMIT} elements, got {p}"
            )));
        }
        let (n, r, q) = (self.n(), self.r(), pattern.r());
        if p > n || q > r || p - q > n - r {
            return Ok(false);
        }
        let census = flat_census(pattern);
        let mut seen = HashSet::new();
        for s in Combinations::new(n, p).map(ElementSet) {
            let rest = self.full().difference(s);
            for c in rest.subsets_of_size(r - q) {
                if self.rank_of(c) != c.len() || self.rank_of(s.union(c)) != r {
                    continue;
                }
                let minor = self.minor(c, rest.difference(c))?;
                if flat_census(&minor) != census || !seen.insert(minor.cyclic_flats().to_vec()) {
                    continue;
                }
                if is_isomorphic(&minor, pattern) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::{mk4, uniform};

    #[test]
    fn permuted_copies_are_isomorphic() {
        let m = mk4();
        let perm = [3, 5, 0, 1, 4, 2];
        let p = m.permuted(&perm).unwrap();
        let phi = find_isomorphism(&m, &p).unwrap();
        for f in m.cyclic_flats() {
            assert_eq!(p.presentation().rank_of_flat(f.set.map(&phi)), Some(f.rank));
        }
        assert!(!is_isomorphic(&m, &uniform(3, 6)));
    }

    #[test]
    fn minor_containment() {
        let k4 = mk4();
        assert!(k4.has_minor_isomorphic(&k4).unwrap());
        assert!(!uniform(2, 4).has_minor_isomorphic(&k4).unwrap());
        assert!(k4.has_minor_isomorphic(&uniform(1, 2)).unwrap());
        // M(K_4) has no U_{2,4} minor (it is binary)
        assert!(!k4.has_minor_isomorphic(&uniform(2, 4)).unwrap());
        let big = uniform(4, 9);
        assert!(matches!(big.has_minor_isomorphic(&big), Err(Error::Budget(_))));
    }

    #[test]
    fn k4_survives_free_extension_as_minor() {
        let m = mk4().free_extension().unwrap();
        assert!(m.has_minor_isomorphic(&mk4()).unwrap());
    }
}

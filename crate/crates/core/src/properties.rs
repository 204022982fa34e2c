//! Paving, sparse paving, weak order and circuit-hyperplane relaxation.

use crate::error::{domain, Result};
use crate::matroid::Matroid;
use crate::set::{Combinations, ElementSet};

impl Matroid {
    /// No circuit has fewer than `r` elements, i.e. every `(r−1)`-set is independent.
    pub fn is_paving(&self) -> bool {
        let r = self.r();
        if r == 0 {
            return true;
        }
        Combinations::new(self.n(), r - 1).all(|x| self.rank_of(ElementSet(x)) == r - 1)
    }

    pub fn is_sparse_paving(&self) -> bool {
        self.is_paving() && self.dual().is_paving()
    }

    /// `self` is freer than `m`: `r_m(X) ≤ r_self(X)` for every `X`.
    ///
    /// Checking the cyclic flats of `self` suffices, since `r_self` is the minimum
    /// of `r_self(F) + |X − F|` and `r_m` is unit-increasing.
    pub fn freer_than(&self, m: &Matroid) -> Result<bool> {
        if self.ground().labels() != m.ground().labels() {
            return domain("freer_than needs identical ground sets");
        }
        Ok(self.cyclic_flats().iter().all(|f| m.rank_of(f.set) <= f.rank))
    }

    pub fn is_circuit_hyperplane(&self, x: ElementSet) -> bool {
        self.r() > 0 && self.is_circuit(x) && self.rank_of(x) + 1 == self.r() && self.is_flat(x)
    }

    /// Declare the circuit-hyperplane `x` a basis.
    pub fn relax_circuit_hyperplane(&self, x: ElementSet) -> Result<Matroid> {
        self.ground().check_subset(x)?;
        if !self.is_circuit_hyperplane(x) {
            return domain(format!("{x:?} is not a circuit-hyperplane"));
        }
        let r = self.r();
        Matroid::from_rank_fn(self.ground().clone(), |s| if s == x { r } else { self.rank_of(s) })
    }

    /// All circuit-hyperplanes, by bitmask.
    pub fn circuit_hyperplanes(&self) -> Vec<ElementSet> {
        if self.r() == 0 {
            return Vec::new();
        }
        Combinations::new(self.n(), self.r())
            .map(ElementSet)
            .filter(|&x| self.is_circuit_hyperplane(x))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::{mk4, uniform};

    #[test]
    fn paving_examples() {
        assert!(uniform(3, 6).is_paving());
        assert!(mk4().is_paving());
        assert!(mk4().is_sparse_paving());
        let two_lines = uniform(1, 2).direct_sum(&uniform(1, 2).relabeled(crate::GroundSet::from_strs(&["x", "y"]).unwrap()).unwrap()).unwrap();
        // circuits of size 2 = rank: paving, and its dual is itself
        assert!(two_lines.is_sparse_paving());
        assert!(!uniform(2, 2).direct_sum(&uniform(0, 1).relabeled(crate::GroundSet::from_strs(&["z"]).unwrap()).unwrap()).unwrap().is_paving());
    }

    #[test]
    fn freer_than_uniform() {
        let m = mk4();
        assert!(m.freer_than(&m).unwrap());
        let u = uniform(3, 6).relabeled(m.ground().clone()).unwrap();
        assert!(u.freer_than(&m).unwrap());
        assert!(!m.freer_than(&u).unwrap());
        for x in 0..64u64 {
            assert!(m.rank_of(ElementSet(x)) <= u.rank_of(ElementSet(x)));
        }
    }

    #[test]
    fn relaxing_k4_towards_u36() {
        let mut m = mk4();
        let mut steps = 0;
        while let Some(&x) = m.circuit_hyperplanes().first() {
            let before = m.bases().count();
            m = m.relax_circuit_hyperplane(x).unwrap();
            m.presentation().validate().unwrap();
            assert_eq!(m.bases().count(), before + 1);
            steps += 1;
        }
        assert_eq!(steps, 4);
        assert!(m.same_structure(&uniform(3, 6)));
        assert!(mk4().relax_circuit_hyperplane(ElementSet::from_indices([0, 1, 2])).is_err());
    }
}

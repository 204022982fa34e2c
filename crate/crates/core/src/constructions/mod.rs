//! The two explicit families: `M_α` (excluded minors for gammoids and BO) and
//! `M_β` (base-orderable excluded minors for SBO and k-BO).
//!
//! Tuples carry part sizes only. Elements are laid out part by part in the order
//! `A, B, C, D, E, F` and labelled `a1.., b1.., .., f1..`.

mod alpha;
mod beta;
mod count;

pub use alpha::{alpha_critical_graph, alpha_tuples, build_m_alpha, verify_alpha_theorem, AlphaReport, AlphaTuple};
pub use beta::{
    beta_forced_images, beta_tuples, build_m_beta, build_m_beta_prime, verify_beta_partial, verify_beta_theorem,
    BetaReport, BetaTuple, BETA_FULL_LIMIT,
};
pub use count::{alpha_count_lower_bound, beta_cycle_classes, count_beta_classes, four_part_partitions, AlphaCount};

use crate::ground::GroundSet;
use crate::set::ElementSet;

/// Six consecutive blocks of elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Parts {
    pub sizes: [usize; 6],
}

impl Parts {
    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// Block `i` (`0 = A`, .., `5 = F`).
    pub fn part(&self, i: usize) -> ElementSet {
        let start: usize = self.sizes[..i].iter().sum();
        ElementSet((ElementSet::full(self.sizes[i]).0) << start)
    }

    /// Union of the named blocks, e.g. `"CBE"`.
    pub fn union(&self, names: &str) -> ElementSet {
        names
            .bytes()
            .map(|c| self.part((c - b'A') as usize))
            .fold(ElementSet::EMPTY, ElementSet::union)
    }

    pub fn ground(&self) -> GroundSet {
        let labels = (0..6)
            .flat_map(|i| {
                let letter = (b'a' + i as u8) as char;
                (1..=self.sizes[i]).map(move |j| format!("{letter}{j}"))
            })
            .collect();
        GroundSet::new(labels).expect("distinct labels")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let p = Parts { sizes: [2, 1, 2, 2, 1, 2] };
        assert_eq!(p.n(), 10);
        assert_eq!(p.part(1), ElementSet::singleton(2));
        assert_eq!(p.union("AB"), ElementSet::full(3));
        let g = p.ground();
        assert_eq!(g.label(0), "a1");
        assert_eq!(g.label(9), "f2");
    }
}

//! Counting formulas for the two families.

use crate::set::binomial;
use serde::Serialize;
use std::collections::BTreeSet;

/// Isomorphism classes of `M_β` for a given `k ≥ 2`: `h²` for `k = 2h+1`, `(h−1)²+h` for `k = 2h`.
pub fn count_beta_classes(k: usize) -> u64 {
    assert!(k >= 2, "k must be at least 2");
    let h = (k / 2) as u64;
    if k % 2 == 1 {
        h * h
    } else {
        (h - 1) * (h - 1) + h
    }
}

/// 4-cycles `(p, q, r, s)` of positive integers with `p + r = q + s = k`, up to
/// rotation, each as its least representative.
///
/// The sizes are read as `(|A|, |D|, |B|, |E|)`. Reflections are not symmetries:
/// the ranks of the four flats orient the cycle `A → E → B → D → A`.
pub fn beta_cycle_classes(k: usize) -> Vec<[usize; 4]> {
    let mut seen = BTreeSet::new();
    for p in 1..k {
        for q in 1..k {
            let c = [p, q, k - p, k - q];
            let least = (0..4)
                .map(|rot| -> [usize; 4] { std::array::from_fn(|i| c[(i + rot) % 4]) })
                .min()
                .expect("four rotations");
            seen.insert(least);
        }
    }
    seen.into_iter().collect()
}

/// Partitions of `n` into exactly four positive parts.
pub fn four_part_partitions(n: usize) -> u64 {
    let mut count = 0;
    for a in 1..=n {
        for b in a..=n {
            for c in b..=n {
                if a + b + c < n && n - a - b - c >= c {
                    count += 1;
                }
            }
        }
    }
    count
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AlphaCount {
    pub r: usize,
    /// Four-part partitions of `r + 1`.
    pub partitions: u64,
    /// `C(r, 3) / 4!`.
    pub crude: f64,
}

/// Lower bound on distinct `M_α` of rank `r`.
pub fn alpha_count_lower_bound(r: usize) -> AlphaCount {
    assert!(r >= 3, "r must be at least 3");
    AlphaCount {
        r,
        partitions: four_part_partitions(r + 1),
        crude: binomial(r as u64, 3) as f64 / 24.0,
    }
}

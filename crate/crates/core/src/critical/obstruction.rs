//! Obstructions `(K, L)`: `K ⊊ X`, `L ⊊ Y` non-empty with every edge between `K`
//! and `Y−L` leaving `K`, and every edge between `L` and `X−K` leaving `L`.

use super::CriticalGraph;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Obstruction {
    /// Subset of `X`, as ground indices.
    pub k_side: ElementSet,
    /// Subset of `Y`, as ground indices.
    pub l_side: ElementSet,
}

impl Obstruction {
    pub fn union(self, o: Obstruction) -> Obstruction {
        Obstruction {
            k_side: self.k_side.union(o.k_side),
            l_side: self.l_side.union(o.l_side),
        }
    }

    pub fn intersection(self, o: Obstruction) -> Obstruction {
        Obstruction {
            k_side: self.k_side.intersection(o.k_side),
            l_side: self.l_side.intersection(o.l_side),
        }
    }

    pub fn is_obstruction_of(&self, d: &CriticalGraph) -> bool {
        is_obstruction(d, self.k_side, self.l_side)
    }
}

/// All obstructions plus the component-wise least and greatest ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstructions {
    pub all: Vec<Obstruction>,
    pub minimum: Option<Obstruction>,
    pub maximum: Option<Obstruction>,
}

impl Obstructions {
    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }
}

fn is_obstruction(d: &CriticalGraph, k: ElementSet, l: ElementSet) -> bool {
    let (x, y) = (d.x(), d.y());
    if k.is_empty() || l.is_empty() || k == x || l == y || !k.is_subset(x) || !l.is_subset(y) {
        return false;
    }
    let out_of_k = k.iter().all(|i| y.difference(l).iter().all(|yj| d.x_to_y(i, yj - d.r)));
    let out_of_l = l.iter().all(|yj| x.difference(k).iter().all(|i| !d.x_to_y(i, yj - d.r)));
    out_of_k && out_of_l
}

/// Every obstruction, in increasing `(K, L)` order. All proper non-empty pairs are tried.
pub fn find_obstructions(d: &CriticalGraph) -> Obstructions {
    let (x, y) = (d.x(), d.y());
    let mut all = Vec::new();
    for k in x.subsets() {
        for l in y.subsets() {
            if is_obstruction(d, k, l) {
                all.push(Obstruction { k_side: k, l_side: l });
            }
        }
    }
    all.sort();
    let minimum = all.iter().copied().reduce(Obstruction::intersection);
    let maximum = all.iter().copied().reduce(Obstruction::union);
    Obstructions { all, minimum, maximum }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critical::enumerate::enumerate_with;
    use crate::critical::fixtures::*;
    use crate::par::Exec;

    #[test]
    fn delta7_minimum() {
        let d = delta7();
        let obs = find_obstructions(&d);
        let g = d.ground();
        let want = Obstruction {
            k_side: g.set_of(&["a3", "a4"]).unwrap(),
            l_side: g.set_of(&["b3", "b4"]).unwrap(),
        };
        assert_eq!(obs.minimum, Some(want));
        assert!(obs.all.contains(&want));
    }

    #[test]
    fn none_below_rank_seven() {
        for r in 3..=6 {
            for d in enumerate_with(r, Exec::Sequential).unwrap() {
                assert!(find_obstructions(&d).is_empty(), "{d:?}");
            }
        }
    }

    #[test]
    fn lattice_and_reversal() {
        let d = delta7();
        let obs = find_obstructions(&d);
        for &p in &obs.all {
            assert!(p.k_side.len() >= 2 && p.l_side.len() >= 2);
            assert!(d.x().difference(p.k_side).len() >= 2 && d.y().difference(p.l_side).len() >= 2);
            for &q in &obs.all {
                assert!(obs.all.contains(&p.union(q)) && obs.all.contains(&p.intersection(q)));
            }
            let rev = Obstruction {
                k_side: d.x().difference(p.k_side),
                l_side: d.y().difference(p.l_side),
            };
            assert!(rev.is_obstruction_of(&d.reversed()));
        }
    }
}

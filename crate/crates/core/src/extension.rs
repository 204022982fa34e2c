//! Principal extensions and the constructions derived from them: free
//! extension, truncation, simultaneous extensions, bipartite induction and
//! parallel connection.

use crate::error::{domain, Error, Result};
use crate::ground::GroundSet;
use crate::matroid::{Matroid, SWEEP_LIMIT};
use crate::set::ElementSet;

/// A bipartite graph from new elements `left` to the ground set `right` of a matroid.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    pub left: GroundSet,
    pub right: GroundSet,
    /// `adjacency[t]` is the neighbourhood of left vertex `t` in `right`.
    pub adjacency: Vec<ElementSet>,
}

impl BipartiteGraph {
    pub fn new(left: GroundSet, right: GroundSet, adjacency: Vec<ElementSet>) -> Result<Self> {
        if adjacency.len() != left.len() {
            return domain("one neighbourhood per left vertex required");
        }
        for &nb in &adjacency {
            right.check_subset(nb)?;
        }
        Ok(BipartiteGraph { left, right, adjacency })
    }

    /// N(Y) for a set of left vertices.
    pub fn neighbourhood(&self, y: ElementSet) -> ElementSet {
        y.iter().fold(ElementSet::EMPTY, |acc, t| acc.union(self.adjacency[t]))
    }
}

impl Matroid {
    /// `M +_Y e`: add `label` freely to the closure of `y`.
    pub fn principal_extension(&self, y: ElementSet, label: &str) -> Result<Matroid> {
        self.simultaneous_extensions(&[(label.to_string(), y)])
    }

    /// Principal extension into the whole ground set, with a fresh label.
    pub fn free_extension(&self) -> Result<Matroid> {
        let label = self.ground().fresh_label("e");
        self.principal_extension(self.full(), &label)
    }

    /// Truncation `(M +_E e) / e`.
    pub fn truncation(&self) -> Result<Matroid> {
        if self.r() == 0 {
            return domain("cannot truncate a rank-0 matroid");
        }
        let m = self.free_extension()?;
        m.contract_element(self.n())
    }

    /// Add each `(label, F_i)` as a principal extension into `F_i`; the new
    /// elements are appended in list order.
    ///
    /// Uses `r(X ∪ e_J) = min over I ⊆ J of r(X ∪ F_I) + |J − I|`, which does not
    /// depend on the order of the additions.
    pub fn simultaneous_extensions(&self, additions: &[(String, ElementSet)]) -> Result<Matroid> {
        let n = self.n();
        let k = additions.len();
        let mut ground = self.ground().clone();
        for (label, target) in additions {
            self.ground().check_subset(*target)?;
            ground.push(label.clone())?;
        }
        if n + k > SWEEP_LIMIT {
            return Err(Error::Budget(format!("extension to {} elements", n + k)));
        }
        let base = self.rank_table()?;
        let targets: Vec<u64> = additions.iter().map(|(_, f)| f.bits()).collect();
        let union_of = |i: u64| -> u64 {
            ElementSet(i).iter().fold(0, |acc, t| acc | targets[t])
        };
        let low = (1u64 << n) - 1;
        Matroid::from_rank_fn(ground, |x| {
            let old = x.bits() & low;
            let j = x.bits() >> n;
            ElementSet(j)
                .subsets()
                .map(|i| base[(old | union_of(i.bits())) as usize] as usize + (j & !i.bits()).count_ones() as usize)
                .min()
                .unwrap()
        })
    }

    /// Matroid induced on `g.left` by `g`: `r(X) = min over Y ⊆ X of r(N(Y)) + |X − Y|`.
    pub fn induce_bipartite(&self, g: &BipartiteGraph) -> Result<Matroid> {
        if g.right.labels() != self.ground().labels() {
            return domain("right side of the graph must be the matroid's ground set");
        }
        if g.left.labels().iter().any(|l| self.ground().index_of(l).is_some()) {
            return domain("left vertices overlap the ground set");
        }
        Matroid::from_rank_fn(g.left.clone(), |x| {
            x.subsets()
                .map(|y| self.rank_of(g.neighbourhood(y)) + x.len() - y.len())
                .min()
                .unwrap()
        })
    }

    /// Parallel connection of `self` and `other` along the single shared label `p`:
    /// `((M ⊕ N′) +_{p, p_N} e) / e \ p_N`. Elements of `self` keep their indices;
    /// the rest of `other` follows in order.
    pub fn parallel_connection(&self, other: &Matroid, p: &str) -> Result<Matroid> {
        let shared: Vec<&String> = self
            .ground()
            .labels()
            .iter()
            .filter(|l| other.ground().index_of(l).is_some())
            .collect();
        if shared.len() != 1 || shared[0] != p {
            return domain(format!("ground sets must share exactly the element {p:?}"));
        }
        let pm = self.ground().index_of(p).unwrap();
        let pn = other.ground().index_of(p).unwrap();
        let mut labels = other.ground().labels().to_vec();
        let mut all = self.ground().clone();
        for l in other.ground().labels().iter().filter(|l| *l != p) {
            all.push(l.clone())?;
        }
        labels[pn] = all.fresh_label(&format!("{p}_N"));
        let renamed = other.relabeled(GroundSet::new(labels)?)?;
        let sum = self.direct_sum(&renamed)?;
        let pn_idx = self.n() + pn;
        let e_label = sum.ground().fresh_label("e");
        let ext = sum.principal_extension(ElementSet::from_indices([pm, pn_idx]), &e_label)?;
        let e_idx = sum.n();
        ext.minor(ElementSet::singleton(e_idx), ElementSet::singleton(pn_idx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::{free, mk4, uniform};

    #[test]
    fn free_extension_of_uniform() {
        let u = uniform(2, 4).free_extension().unwrap();
        assert!(u.same_structure(&uniform(2, 5)));
    }

    #[test]
    fn truncations() {
        assert!(uniform(3, 5).truncation().unwrap().same_structure(&uniform(2, 5)));
        assert!(free(4).truncation().unwrap().same_structure(&uniform(3, 4)));
        assert!(uniform(0, 3).truncation().is_err());
    }

    #[test]
    fn principal_extension_rank_and_bases() {
        let m = mk4();
        let y = ElementSet::from_indices([0, 2]);
        let ext = m.principal_extension(y, "g").unwrap();
        assert_eq!(ext.delete_element(6).unwrap(), m);
        let cly = m.closure(y);
        for x in 0..64u64 {
            let x = ElementSet(x);
            let expect = (m.rank_of(x) + 1).min(m.rank_of(x.union(y)));
            assert_eq!(ext.rank_of(x.with(6)), expect);
        }
        let mut expected: Vec<ElementSet> = m.bases().collect();
        for b in m.bases() {
            for f in b.intersection(cly).iter() {
                expected.push(b.without(f).with(6));
            }
        }
        expected.sort();
        expected.dedup();
        let mut got: Vec<ElementSet> = ext.bases().collect();
        got.sort();
        assert_eq!(got, expected);
        // extension into Y and into cl(Y) agree
        assert_eq!(m.principal_extension(cly, "g").unwrap(), ext);
        assert!(m.principal_extension(y, "a").is_err());
    }

    #[test]
    fn simultaneous_order_independent() {
        let m = mk4();
        let f1 = ElementSet::from_indices([0, 2, 3]);
        let f2 = ElementSet::from_indices([1, 3]);
        let a = m.simultaneous_extensions(&[("x".into(), f1), ("y".into(), f2)]).unwrap();
        let b = m.simultaneous_extensions(&[("y".into(), f2), ("x".into(), f1)]).unwrap();
        // same matroid after swapping the two new indices
        assert_eq!(a, b.permuted(&[0, 1, 2, 3, 4, 5, 7, 6]).unwrap());
        let step = m.principal_extension(f1, "x").unwrap().principal_extension(f2, "y").unwrap();
        assert_eq!(a, step);
    }

    #[test]
    fn two_free_points_on_a_coloop() {
        let m = free(1);
        let iter = m.free_extension().unwrap().free_extension().unwrap();
        let sim = m
            .simultaneous_extensions(&[("e".into(), m.full()), ("e1".into(), m.full())])
            .unwrap();
        assert_eq!(iter, sim);
        assert!(sim.same_structure(&uniform(1, 3)));
    }

    #[test]
    fn perfect_matching_induces_a_copy() {
        let m = mk4();
        let left = GroundSet::from_strs(&["t0", "t1", "t2", "t3", "t4", "t5"]).unwrap();
        let adj = (0..6).map(ElementSet::singleton).collect();
        let g = BipartiteGraph::new(left, m.ground().clone(), adj).unwrap();
        assert!(m.induce_bipartite(&g).unwrap().same_structure(&m));
    }

    #[test]
    fn induction_equals_extend_then_delete() {
        let m = uniform(2, 3);
        let left = GroundSet::from_strs(&["s", "t", "u", "v"]).unwrap();
        let adj: Vec<ElementSet> = [vec![0], vec![0, 1], vec![1, 2], vec![2]]
            .into_iter()
            .map(ElementSet::from_indices)
            .collect();
        let g = BipartiteGraph::new(left.clone(), m.ground().clone(), adj.clone()).unwrap();
        let induced = m.induce_bipartite(&g).unwrap();
        let adds: Vec<(String, ElementSet)> = left.labels().iter().cloned().zip(adj).collect();
        let via = m.simultaneous_extensions(&adds).unwrap().delete(m.full()).unwrap();
        assert_eq!(induced, via);
    }

    #[test]
    fn parallel_connection_of_triangles() {
        let m = uniform(2, 3).relabeled(GroundSet::from_strs(&["p", "a", "b"]).unwrap()).unwrap();
        let n = uniform(2, 3).relabeled(GroundSet::from_strs(&["c", "p", "d"]).unwrap()).unwrap();
        let pc = m.parallel_connection(&n, "p").unwrap();
        assert_eq!(pc.n(), 5);
        assert_eq!(pc.r(), 3);
        assert_eq!(pc.ground().labels(), &["p", "a", "b", "c", "d"]);
        // the two triangles survive as circuits
        assert!(pc.is_circuit(ElementSet::from_indices([0, 1, 2])));
        assert!(pc.is_circuit(ElementSet::from_indices([0, 3, 4])));
        assert!(m.parallel_connection(&m, "p").is_err());
    }
}

//! `Z_Δ` and the matroid `M(Δ)`.

use super::obstruction::{find_obstructions, Obstructions};
use super::CriticalGraph;
use crate::error::{Error, Result};
use crate::exchange::{certify_excluded_minor_census, ExchangeDigraph, ExcludedMinorCertificate, Strength};
use crate::matroid::Matroid;
use crate::par::Exec;
use crate::presentation::{CyclicFlatPresentation, RankedFlat};
use crate::set::ElementSet;
use serde::Serialize;

#[derive(Clone, Debug)]
pub struct ZDeltaPresentation {
    /// `{D_Δ(B′) : B′ ⊆ B}` ranked by `|D ∩ A|`.
    pub z_a: CyclicFlatPresentation,
    /// `{D_Δ(A′) : A′ ⊆ A}` ranked by `|D ∩ B|`.
    pub z_b: CyclicFlatPresentation,
    /// `Z_A ∪ Z_B`.
    pub merged: CyclicFlatPresentation,
    /// `K₀ ∪ L₀` of the minimum obstruction.
    pub p_set: Option<ElementSet>,
    /// `K₁ ∪ L₁ ∪ (A−X) ∪ (B−Y)` of the maximum obstruction.
    pub q_set: Option<ElementSet>,
    pub obstructions: Obstructions,
}

impl ZDeltaPresentation {
    /// `Z_Δ^{P,Q}` when there is an obstruction, `Z_Δ` otherwise.
    pub fn effective(&self) -> Result<CyclicFlatPresentation> {
        let (Some(p), Some(q)) = (self.p_set, self.q_set) else {
            return Ok(self.merged.clone());
        };
        let r = self.merged.ground().len() / 2;
        let mut flats = self.merged.flats().to_vec();
        flats.push(RankedFlat::new(p, p.len() - 1));
        flats.push(RankedFlat::new(q, r - 1));
        CyclicFlatPresentation::new(self.merged.ground().clone(), flats)
    }
}

/// `D_Δ(S′)` for `S′` on one side, given the fundamental circuits into the other side.
///
/// The union `C` of the circuits of `S′` is extended by every `s` on the same side whose
/// circuit minus `s` already lies in `C`. Adding such `s` leaves `C` on the far side
/// unchanged, so one pass reaches the fixed point.
fn d_delta(side: ElementSet, circuits: &[ElementSet], chosen: ElementSet) -> ElementSet {
    let c = chosen.iter().fold(ElementSet::EMPTY, |u, e| u.union(circuits[e]));
    let far = c.difference(side);
    side.iter()
        .filter(|&e| circuits[e].without(e).is_subset(far))
        .fold(c, |u, e| u.with(e))
}

fn family(side: ElementSet, other: ElementSet, circuits: &[ElementSet]) -> Result<Vec<RankedFlat>> {
    let mut out: Vec<RankedFlat> = Vec::new();
    for chosen in side.subsets() {
        let z = d_delta(side, circuits, chosen);
        // the closure is idempotent: D(D ∩ side) = D
        if d_delta(side, circuits, z.intersection(side)) != z {
            return Err(Error::Invariant(format!("D_Δ not idempotent on {chosen:?}")));
        }
        let f = RankedFlat::new(z, z.intersection(other).len());
        if !out.contains(&f) {
            out.push(f);
        }
    }
    Ok(out)
}

pub fn build_z_delta(d: &CriticalGraph) -> Result<ZDeltaPresentation> {
    d.check_shape()?;
    let ground = d.ground();
    let n = d.n();
    let (a, b) = (d.a(), d.b());
    let mut circ = vec![ElementSet::EMPTY; n];
    for e in a.iter() {
        circ[e] = d.circuit_into_b(e);
    }
    for e in b.iter() {
        circ[e] = d.circuit_into_a(e);
    }
    let fa = family(b, a, &circ)?;
    let fb = family(a, b, &circ)?;
    let mut merged = fa.clone();
    for f in &fb {
        match merged.iter().find(|g| g.set == f.set) {
            Some(g) if g.rank != f.rank => {
                return Err(Error::Invariant(format!("{:?} ranked {} and {}", f.set, g.rank, f.rank)));
            }
            Some(_) => {}
            None => merged.push(*f),
        }
    }
    let obstructions = find_obstructions(d);
    let p_set = obstructions.minimum.map(|o| o.k_side.union(o.l_side));
    let q_set = obstructions.maximum.map(|o| {
        o.k_side
            .union(o.l_side)
            .union(a.difference(d.x()))
            .union(b.difference(d.y()))
    });
    Ok(ZDeltaPresentation {
        z_a: CyclicFlatPresentation::new(ground.clone(), fa)?,
        z_b: CyclicFlatPresentation::new(ground.clone(), fb)?,
        merged: CyclicFlatPresentation::new(ground, merged)?,
        p_set,
        q_set,
        obstructions,
    })
}

/// Check that `Ω_{A,B}` of `m` is `Δ` edge for edge, with no edges at isolated vertices.
fn digraph_matches(m: &Matroid, d: &CriticalGraph) -> Result<bool> {
    let g = ExchangeDigraph::new(m, d.a(), d.b())?;
    for x in 0..d.r {
        for j in 0..d.r {
            let y = d.y_index(j);
            let inside = x < d.s && j < d.t;
            let fwd = inside && d.x_to_y(x, j);
            let back = inside && !d.x_to_y(x, j);
            if g.has_ab(x, y) != fwd || g.has_ba(y, x) != back {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `M(Δ)`: cyclic flats `Z_Δ`, or `Z_Δ^{P,Q}` when `Δ` has an obstruction.
pub fn build_m_delta(d: &CriticalGraph) -> Result<Matroid> {
    d.check()?;
    let z = build_z_delta(d)?;
    let m = Matroid::new(z.effective()?).map_err(|e| Error::Invariant(format!("M(Δ) presentation rejected: {e}")))?;
    if !digraph_matches(&m, d)? {
        return Err(Error::Invariant("exchange digraph of M(Δ) differs from Δ".into()));
    }
    Ok(m)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub has_obstruction: bool,
    /// `Z_Δ^{P,Q}` was used; other matroids with the same digraph may exist.
    pub uses_pq_candidate: bool,
    pub bo: ExcludedMinorCertificate,
    pub sbo: ExcludedMinorCertificate,
    pub excluded_minor_bo: bool,
    pub excluded_minor_sbo: bool,
    /// No obstruction: excluded for both. Obstruction: excluded for BO only.
    pub consistent: bool,
}

pub fn conjecture_report(d: &CriticalGraph) -> Result<ConjectureReport> {
    report_with(d, Exec::default())
}

pub fn report_with(d: &CriticalGraph, exec: Exec) -> Result<ConjectureReport> {
    let m = build_m_delta(d)?;
    let has_obstruction = !find_obstructions(d).is_empty();
    let (bo, _) = certify_excluded_minor_census(&m, Strength::K(1), exec);
    let (sbo, _) = certify_excluded_minor_census(&m, Strength::K(d.r.div_ceil(2)), exec);
    let (eb, es) = (bo.excluded_minor, sbo.excluded_minor);
    Ok(ConjectureReport {
        r: d.r,
        s: d.s,
        t: d.t,
        has_obstruction,
        uses_pq_candidate: has_obstruction,
        excluded_minor_bo: eb,
        excluded_minor_sbo: es,
        consistent: eb && es != has_obstruction,
        bo,
        sbo,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::mk4;
    use crate::critical::enumerate::enumerate_with;
    use crate::critical::fixtures::*;
    use crate::presentation::Axiom;

    fn ranked(d: &CriticalGraph, labels: &[&str], rank: usize) -> RankedFlat {
        RankedFlat::new(d.ground().set_of(labels).unwrap(), rank)
    }

    #[test]
    fn delta3_is_k4() {
        let d = delta3();
        let m = build_m_delta(&d).unwrap();
        assert!(m.same_structure(&mk4()));
        assert_eq!(m.bases().count(), 16);
    }

    #[test]
    fn delta5_lattice() {
        let d = delta5();
        let z = build_z_delta(&d).unwrap();
        let mut want = vec![
            ranked(&d, &[], 0),
            ranked(&d, &["a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5"], 5),
            ranked(&d, &["a1", "a3", "a4", "a5", "b1", "b3"], 4),
            ranked(&d, &["a2", "a3", "a4", "a5", "b2"], 4),
            ranked(&d, &["a1", "a4", "a5", "b3"], 3),
            ranked(&d, &["b1", "b3", "b4", "b5", "a2", "a3"], 4),
            ranked(&d, &["b2", "b3", "b4", "b5", "a1", "a3"], 4),
            ranked(&d, &["b2", "b4", "b5", "a1"], 3),
            ranked(&d, &["b3", "b4", "b5", "a3"], 3),
        ];
        want.sort_by_key(|f| f.set.canonical_key());
        assert_eq!(z.merged.flats(), want.as_slice());
        assert!(z.p_set.is_none());
        let m = build_m_delta(&d).unwrap();
        assert_eq!(m.cyclic_flats_by_sweep().unwrap(), want);
    }

    #[test]
    fn z_a_is_transversal_with_a_and_b_bases() {
        for d in [delta3(), delta5(), delta7()] {
            let z = build_z_delta(&d).unwrap();
            let common: Vec<_> = z.z_a.flats().iter().filter(|f| z.z_b.flats().contains(f)).map(|f| f.set).collect();
            assert_eq!(common, vec![ElementSet::EMPTY, d.a().union(d.b())]);
            let m = Matroid::new(z.z_a.clone()).unwrap();
            assert!(m.is_transversal());
            assert!(m.is_basis(d.a()).unwrap() && m.is_basis(d.b()).unwrap());
        }
    }

    #[test]
    fn delta7_obstruction_case() {
        let d = delta7();
        let z = build_z_delta(&d).unwrap();
        let v = z.merged.first_violation().unwrap();
        assert_eq!(v.axiom, Axiom::Z3);
        let p = z.p_set.unwrap();
        let q = z.q_set.unwrap();
        assert_eq!(p, d.ground().set_of(&["a3", "a4", "b3", "b4"]).unwrap());
        let m = build_m_delta(&d).unwrap();
        assert_eq!(m.rank_of(p), 3);
        assert_eq!(m.rank_of(q), 6);
        assert!(m.is_cyclic(p) && m.is_flat(p) && m.is_cyclic(q) && m.is_flat(q));
    }

    #[test]
    fn validity_iff_no_obstruction_and_duality() {
        for r in 3..=6 {
            for d in enumerate_with(r, Exec::Sequential).unwrap() {
                let z = build_z_delta(&d).unwrap();
                assert_eq!(z.merged.validate().is_ok(), z.obstructions.is_empty());
                let m = build_m_delta(&d).unwrap();
                let rev = build_m_delta(&d.reversed()).unwrap();
                assert!(m.dual().same_structure(&rev), "{d:?}");
            }
        }
    }

    #[test]
    fn small_reports() {
        for r in 3..=5 {
            for d in enumerate_with(r, Exec::Sequential).unwrap() {
                let rep = report_with(&d, Exec::Sequential).unwrap();
                assert!(rep.excluded_minor_bo && rep.excluded_minor_sbo && rep.consistent);
            }
        }
    }
}

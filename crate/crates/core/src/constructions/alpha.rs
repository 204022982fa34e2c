//! `M_α`: rank `r`, proper non-empty cyclic flats `CBE`, `CAD`, `FEA`, `FDB`.

use super::Parts;
use crate::critical::CriticalGraph;
use crate::error::{domain, Result};
use crate::exchange::{certify_excluded_minor_census, ExchangeDigraph, Strength};
use crate::matroid::Matroid;
use crate::par::Exec;
use crate::set::ElementSet;
use crate::transversal::mason_ingleton_slack;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlphaTuple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
}

impl AlphaTuple {
    pub fn new(a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> Result<Self> {
        let t = AlphaTuple { a, b, c, d, e, f };
        t.check()?;
        Ok(t)
    }

    pub fn check(&self) -> Result<()> {
        let s = self.sizes();
        if s.contains(&0) {
            return domain(format!("alpha parts must be non-empty, got {s:?}"));
        }
        let r = self.a + self.b + self.c;
        if self.d + self.e + self.f != r {
            return domain(format!("|A∪B∪C| = {r} but |D∪E∪F| = {}", self.d + self.e + self.f));
        }
        if self.a + self.b + self.d + self.e != r + 1 {
            return domain(format!("|A∪B∪D∪E| = {} must be r + 1 = {}", self.a + self.b + self.d + self.e, r + 1));
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.a + self.b + self.c
    }

    pub fn sizes(&self) -> [usize; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    pub fn parts(&self) -> Parts {
        Parts { sizes: self.sizes() }
    }
}

/// Every tuple of rank `r`.
pub fn alpha_tuples(r: usize) -> Vec<AlphaTuple> {
    let mut out = Vec::new();
    for a in 1..r {
        for b in 1..r - a {
            for d in 1..r {
                for e in 1..r - d {
                    if a + b + d + e == r + 1 {
                        out.push(AlphaTuple { a, b, c: r - a - b, d, e, f: r - d - e });
                    }
                }
            }
        }
    }
    out
}

pub fn build_m_alpha(t: &AlphaTuple) -> Result<Matroid> {
    t.check()?;
    let p = t.parts();
    let flats = [
        (ElementSet::EMPTY, 0),
        (p.union("CBE"), t.c + t.b),
        (p.union("CAD"), t.c + t.a),
        (p.union("FEA"), t.f + t.e),
        (p.union("FDB"), t.f + t.d),
        (ElementSet::full(p.n()), t.r()),
    ];
    Matroid::from_flats(p.ground(), flats)
}

/// `Δ_α` with `X = A∪B`, `Y = D∪E`: `A → D`, `E → A`, `D → B`, `B → E`.
pub fn alpha_critical_graph(t: &AlphaTuple) -> Result<CriticalGraph> {
    t.check()?;
    let (s, u) = (t.a + t.b, t.d + t.e);
    let orientation = (0..s).map(|i| (0..u).map(|j| (i < t.a) == (j < t.d)).collect()).collect();
    CriticalGraph::new(t.r(), orientation)
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaReport {
    pub tuple: AlphaTuple,
    pub r: usize,
    pub not_bo: bool,
    pub contractions_transversal: bool,
    pub deletions_cotransversal: bool,
    pub not_transversal: bool,
    pub not_cotransversal: bool,
    pub not_sbo: bool,
    pub excluded_bo: bool,
    pub excluded_sbo: bool,
    /// `(k, excluded minor for k-BO)` for `1 ≤ k ≤ ⌈r/2⌉`.
    pub excluded_kbo: Vec<(usize, bool)>,
    /// Not transversal, cotransversal or SBO, with every contraction transversal and deletion cotransversal.
    pub gammoid_evidence: bool,
    /// `Ω_{A∪B∪C, D∪E∪F}` is exactly the four complete blocks.
    pub digraph_blocks: bool,
    /// Mason–Ingleton slack of the four proper flats (expected −1).
    pub four_flat_slack: i64,
    /// Least slack over triples of proper flats (expected `≥ 0`).
    pub triple_min_slack: i64,
    /// Least slack over `{F − x}` in `M / x`, all `x` and antichains of size ≥ 3.
    pub contraction_min_slack: i64,
    pub holds: bool,
}

fn blocks_match(m: &Matroid, p: &Parts) -> Result<bool> {
    let (a, b, c) = (p.part(0), p.part(1), p.part(2));
    let (d, e, f) = (p.part(3), p.part(4), p.part(5));
    let g = ExchangeDigraph::new(m, a.union(b).union(c), d.union(e).union(f))?;
    let ok = a.union(b).union(c).iter().all(|x| {
        d.union(e).union(f).iter().all(|y| {
            let fwd = (a.contains(x) && d.contains(y)) || (b.contains(x) && e.contains(y));
            let back = (a.contains(x) && e.contains(y)) || (b.contains(x) && d.contains(y));
            g.has_ab(x, y) == fwd && g.has_ba(y, x) == back
        })
    });
    Ok(ok)
}

fn proper_flats(m: &Matroid) -> Vec<ElementSet> {
    m.cyclic_flats()
        .iter()
        .map(|f| f.set)
        .filter(|s| !s.is_empty() && *s != m.full())
        .collect()
}

/// Subfamilies of size at least three.
fn big_subfamilies(flats: &[ElementSet]) -> Vec<Vec<ElementSet>> {
    ElementSet::full(flats.len())
        .subsets()
        .filter(|s| s.len() >= 3)
        .map(|s| s.iter().map(|i| flats[i]).collect())
        .collect()
}

/// Check the four assertions of the theorem on `M_α` and collect the evidence.
pub fn verify_alpha_theorem(t: &AlphaTuple, exec: Exec) -> Result<AlphaReport> {
    let m = build_m_alpha(t)?;
    let p = t.parts();
    let r = t.r();
    let contractions: Vec<Matroid> = (0..m.n()).map(|x| m.contract_element(x)).collect::<Result<_>>()?;
    let deletions: Vec<Matroid> = (0..m.n()).map(|x| m.delete_element(x)).collect::<Result<_>>()?;
    let contractions_transversal = exec.all(&contractions, Matroid::is_transversal);
    let deletions_cotransversal = exec.all(&deletions, |d| d.dual().is_transversal());
    let not_transversal = !m.is_transversal();
    let not_cotransversal = !m.dual().is_transversal();

    let mut excluded_kbo = Vec::new();
    let mut not_bo = false;
    let mut not_sbo = false;
    for k in 1..=r.div_ceil(2) {
        let (cert, census) = certify_excluded_minor_census(&m, Strength::K(k), exec);
        if k == 1 {
            not_bo = !census.member();
        }
        if k == r.div_ceil(2) {
            not_sbo = !census.member();
        }
        excluded_kbo.push((k, cert.excluded_minor));
    }
    let excluded_bo = excluded_kbo[0].1;
    let excluded_sbo = excluded_kbo.last().is_some_and(|x| x.1);

    let flats = proper_flats(&m);
    let four_flat_slack = mason_ingleton_slack(&m, &flats);
    let triple_min_slack = big_subfamilies(&flats)
        .iter()
        .filter(|f| f.len() == 3)
        .map(|f| mason_ingleton_slack(&m, f))
        .min()
        .unwrap_or(0);
    let families = big_subfamilies(&flats);
    let contraction_min_slack = (0..m.n())
        .flat_map(|x| {
            let keep = m.full().without(x);
            let mc = &contractions[x];
            families
                .iter()
                .map(move |fam| {
                    let fx: Vec<ElementSet> = fam.iter().map(|s| s.compress(keep)).collect();
                    mason_ingleton_slack(mc, &fx)
                })
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap_or(0);

    let gammoid_evidence = not_transversal && not_cotransversal && not_sbo && contractions_transversal && deletions_cotransversal;
    let digraph_blocks = blocks_match(&m, &p)?;
    let holds = not_bo
        && contractions_transversal
        && deletions_cotransversal
        && excluded_kbo.iter().all(|x| x.1)
        && gammoid_evidence
        && digraph_blocks
        && four_flat_slack == -1
        && triple_min_slack >= 0
        && contraction_min_slack >= 0;
    Ok(AlphaReport {
        tuple: *t,
        r,
        not_bo,
        contractions_transversal,
        deletions_cotransversal,
        not_transversal,
        not_cotransversal,
        not_sbo,
        excluded_bo,
        excluded_sbo,
        excluded_kbo,
        gammoid_evidence,
        digraph_blocks,
        four_flat_slack,
        triple_min_slack,
        contraction_min_slack,
        holds,
    })
}

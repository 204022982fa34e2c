//! Excluded-minor certificates and the source/sink reduction.

use super::classify::{pair_census, PairCensus, Strength};
use super::{pair_is_orderable, BlockingSubgraph, ExchangeDigraph};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::par::Exec;
use crate::set::ElementSet;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMethod {
    /// Every single-element minor built and tested.
    Explicit,
    /// Read off the failing basis pairs of the matroid itself.
    PairCensus,
}

/// Evidence that a matroid lies outside a class while all its single-element minors lie in it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcludedMinorCertificate {
    pub property: String,
    pub method: CertificateMethod,
    /// The matroid itself has the property.
    pub member: bool,
    /// `(label, M \ x has the property)`.
    pub deletions: Vec<(String, bool)>,
    /// `(label, M / x has the property)`.
    pub contractions: Vec<(String, bool)>,
    pub excluded_minor: bool,
    /// `|E| = 2r` and one side of minors already passes uniformly.
    pub one_side_suffices: bool,
}

impl ExcludedMinorCertificate {
    fn assemble(m: &Matroid, property: String, method: CertificateMethod, member: bool, del: Vec<bool>, con: Vec<bool>) -> Self {
        let labels = m.ground().labels();
        let all_del = del.iter().all(|&b| b);
        let all_con = con.iter().all(|&b| b);
        ExcludedMinorCertificate {
            excluded_minor: !member && all_del && all_con,
            one_side_suffices: !member && m.n() == 2 * m.r() && (all_del || all_con),
            deletions: labels.iter().cloned().zip(del).collect(),
            contractions: labels.iter().cloned().zip(con).collect(),
            property,
            method,
            member,
        }
    }

    pub fn minors_checked(&self) -> usize {
        self.deletions.len() + self.contractions.len()
    }
}

/// Build all `2|E|` single-element minors and test each with `class_test`.
pub fn certify_excluded_minor<F>(m: &Matroid, property: &str, class_test: F, exec: Exec) -> Result<ExcludedMinorCertificate>
where
    F: Fn(&Matroid) -> bool + Sync + Send,
{
    let member = class_test(m);
    let elems: Vec<usize> = (0..m.n()).collect();
    let results = exec.map(&elems, |&e| -> Result<(bool, bool)> {
        Ok((class_test(&m.delete_element(e)?), class_test(&m.contract_element(e)?)))
    });
    let mut del = Vec::with_capacity(m.n());
    let mut con = Vec::with_capacity(m.n());
    for r in results {
        let (d, c) = r?;
        del.push(d);
        con.push(c);
    }
    Ok(ExcludedMinorCertificate::assemble(m, property.to_string(), CertificateMethod::Explicit, member, del, con))
}

/// Certificate for an exchange property from a single pass over basis pairs of `m`.
///
/// `M \ x` fails exactly when some failing pair avoids `x`, and `M / x` fails
/// exactly when some failing pair shares `x`.
pub fn certify_excluded_minor_census(m: &Matroid, s: Strength, exec: Exec) -> (ExcludedMinorCertificate, PairCensus) {
    let census = pair_census(m, s, exec);
    let del = (0..m.n()).map(|e| !census.deletion_fails.contains(e)).collect();
    let con = (0..m.n()).map(|e| !census.contraction_fails.contains(e)).collect();
    let cert = ExcludedMinorCertificate::assemble(m, s.name(), CertificateMethod::PairCensus, census.member(), del, con);
    (cert, census)
}

/// A smaller matroid inheriting a non-orderable pair.
#[derive(Clone, Debug)]
pub struct SourceSinkReduction {
    pub minor: Matroid,
    /// Contracted element.
    pub contracted: usize,
    /// Deleted element.
    pub deleted: usize,
    /// Inherited bases, in the minor's indices.
    pub basis_a: ElementSet,
    pub basis_b: ElementSet,
}

/// If the blocking subgraph has a source or sink `v`, remove `v` and a partner
/// `w` outside the blocking subgraph so that the inherited pair still has no
/// exchange ordering: `M / v \ w` for a source, `M \ v / w` for a sink.
pub fn source_sink_reduction(m: &Matroid, a: ElementSet, b: ElementSet, blocking: &BlockingSubgraph) -> Result<Option<SourceSinkReduction>> {
    if !a.is_disjoint(b) || a.union(b) != m.full() {
        return Err(Error::Precondition("bases must be disjoint and cover the ground set".into()));
    }
    let d = ExchangeDigraph::new(m, a, b)?;
    if !blocking.verify(&d, m.r()) {
        return Err(Error::Precondition("not a blocking subgraph of this pair".into()));
    }
    let side_of = |v: usize| if a.contains(v) { (a, b, blocking.y_side) } else { (b, a, blocking.x_side) };
    let (v, is_source) = match (blocking.source(&d), blocking.sink(&d)) {
        (Some(v), _) => (v, true),
        (None, Some(v)) => (v, false),
        (None, None) => return Ok(None),
    };
    let (own, other, opposite) = side_of(v);
    // partner on the other side, outside the blocking subgraph, admitting a symmetric exchange
    let partner = other.difference(opposite).iter().find(|&w| {
        let swap_other = m.basis_unchecked(other.without(w).with(v));
        let swap_own = m.basis_unchecked(own.without(v).with(w));
        swap_other && swap_own
    });
    let Some(w) = partner else {
        return Err(Error::Invariant("no symmetric exchange partner for a source or sink".into()));
    };
    let (contract, delete) = if is_source { (v, w) } else { (w, v) };
    let minor = m.minor(ElementSet::singleton(contract), ElementSet::singleton(delete))?;
    let keep = m.full().without(v).without(w);
    let (ma, mb) = (a.difference(ElementSet::from_indices([v, w])), b.difference(ElementSet::from_indices([v, w])));
    let red = SourceSinkReduction {
        basis_a: ma.compress(keep),
        basis_b: mb.compress(keep),
        minor,
        contracted: contract,
        deleted: delete,
    };
    if !red.minor.basis_unchecked(red.basis_a) || !red.minor.basis_unchecked(red.basis_b) {
        return Err(Error::Invariant("inherited sets are not bases of the reduced minor".into()));
    }
    if pair_is_orderable(&red.minor, red.basis_a, red.basis_b) {
        return Err(Error::Invariant("reduced minor regained an exchange ordering".into()));
    }
    Ok(Some(red))
}

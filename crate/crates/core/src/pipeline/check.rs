//! Named property checks with JSON certificates.

use crate::error::{domain, Error, Result};
use crate::exchange::{
    find_k_exchange_ordering, first_failing_pair, has_exchange_ordering, is_kl_base_orderable, OrderingOutcome, Strength,
};
use crate::matroid::Matroid;
use crate::par::Exec;
use crate::set::{Combinations, ElementSet};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Bo,
    Kbo(usize),
    Sbo,
    Kl(usize, usize),
    Transversal,
    Paving,
    SparsePaving,
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("unknown property {s:?}; expected bo, kbo=K, sbo, kl=K,L, transversal, paving or sparse-paving"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        Ok(match s {
            "bo" => Property::Bo,
            "sbo" => Property::Sbo,
            "transversal" => Property::Transversal,
            "paving" => Property::Paving,
            "sparse-paving" => Property::SparsePaving,
            _ => {
                if let Some(k) = s.strip_prefix("kbo=") {
                    Property::Kbo(num(k)?)
                } else if let Some(kl) = s.strip_prefix("kl=") {
                    let (k, l) = kl.split_once(',').ok_or_else(bad)?;
                    Property::Kl(num(k)?, num(l)?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Bo => write!(f, "bo"),
            Property::Kbo(k) => write!(f, "kbo={k}"),
            Property::Sbo => write!(f, "sbo"),
            Property::Kl(k, l) => write!(f, "kl={k},{l}"),
            Property::Transversal => write!(f, "transversal"),
            Property::Paving => write!(f, "paving"),
            Property::SparsePaving => write!(f, "sparse-paving"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub verdict: bool,
    pub certificate: Value,
}

fn labels(m: &Matroid, s: ElementSet) -> Value {
    json!(m.ground().labels_of(s))
}

fn exchange_check(m: &Matroid, s: Strength, exec: Exec) -> Result<(bool, Value)> {
    let Some((a, b)) = first_failing_pair(m, s, exec) else {
        return Ok((true, json!({ "bases": m.bases().count() })));
    };
    let mut cert = json!({ "failing_pair": [labels(m, a), labels(m, b)] });
    match has_exchange_ordering(m, a, b)? {
        OrderingOutcome::Blocked(bl) => {
            cert["blocking"] = json!({
                "x": labels(m, bl.x_side),
                "y": labels(m, bl.y_side),
                "shape": format!("K_{{{},{}}}", bl.x_side.len(), bl.y_side.len()),
            });
        }
        OrderingOutcome::Ordering(o) => {
            // orderable at level one; the failure is at a larger exchange size
            let map: Vec<[String; 2]> = o
                .map
                .iter()
                .map(|&(x, y)| [m.ground().label(x).to_string(), m.ground().label(y).to_string()])
                .collect();
            cert["level_one_ordering"] = json!(map);
        }
    }
    Ok((false, cert))
}

fn kl_check(m: &Matroid, k: usize, l: usize) -> Result<(bool, Value)> {
    let ok = is_kl_base_orderable(m, k, l)?;
    Ok((ok, json!({ "k": k, "l": l })))
}

fn small_circuit(m: &Matroid) -> Option<ElementSet> {
    let r = m.r();
    (0..r).find_map(|size| Combinations::new(m.n(), size).map(ElementSet).find(|&c| m.is_circuit(c)))
}

/// Run the classifier for `p` on `m`.
pub fn check_property(m: &Matroid, p: Property, exec: Exec) -> Result<CheckReport> {
    let (verdict, certificate) = match p {
        Property::Bo => exchange_check(m, Strength::K(1), exec)?,
        Property::Kbo(k) => {
            if k == 0 {
                return domain("kbo needs k >= 1");
            }
            exchange_check(m, Strength::K(k), exec)?
        }
        Property::Sbo => exchange_check(m, Strength::K(m.r().div_ceil(2)), exec)?,
        Property::Kl(k, l) => kl_check(m, k, l)?,
        Property::Transversal => match m.transversal_failure() {
            None => (true, json!({ "cyclic_flats": m.cyclic_flats().len() })),
            Some(f) => (
                false,
                json!({
                    "antichain": f.antichain.iter().map(|&s| labels(m, s)).collect::<Vec<_>>(),
                    "rank_of_intersection": f.lhs,
                    "alternating_sum": f.rhs,
                }),
            ),
        },
        Property::Paving => match small_circuit(m) {
            None => (true, json!({})),
            Some(c) => (false, json!({ "small_circuit": labels(m, c) })),
        },
        Property::SparsePaving => {
            let d = m.dual();
            match (small_circuit(m), small_circuit(&d)) {
                (None, None) => (true, json!({})),
                (Some(c), _) => (false, json!({ "small_circuit": labels(m, c) })),
                (None, Some(c)) => (false, json!({ "small_cocircuit": labels(m, c) })),
            }
        }
    };
    Ok(CheckReport {
        property: p.to_string(),
        verdict,
        certificate,
    })
}

/// A `k`-exchange-ordering between two labelled bases, as label pairs.
pub fn ordering_certificate(m: &Matroid, a: ElementSet, b: ElementSet, k: usize) -> Result<Value> {
    Ok(match find_k_exchange_ordering(m, a, b, k)? {
        Some(o) => json!(o
            .map
            .iter()
            .map(|&(x, y)| [m.ground().label(x), m.ground().label(y)])
            .collect::<Vec<_>>()),
        None => Value::Null,
    })
}

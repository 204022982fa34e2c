//! JSON interchange: `{ "ground": [..], "cyclic_flats": [{ "set": [..], "rank": n }, ..] }`.
//!
//! Flats are written in canonical order and members in ground order, so equal
//! matroids serialize to identical bytes. Extra top-level fields are kept on
//! parse and ignored by the matroid itself.

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::matroid::Matroid;
use crate::presentation::{CyclicFlatPresentation, RankedFlat};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FlatJson {
    pub set: Vec<String>,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MatroidJson {
    pub ground: Vec<String>,
    pub cyclic_flats: Vec<FlatJson>,
    #[serde(flatten)]
    pub extra: Map<String, Value>,
}

impl MatroidJson {
    pub fn from_matroid(m: &Matroid) -> Self {
        let g = m.ground();
        MatroidJson {
            ground: g.labels().to_vec(),
            cyclic_flats: m
                .cyclic_flats()
                .iter()
                .map(|f| FlatJson {
                    set: g.labels_of(f.set),
                    rank: f.rank,
                })
                .collect(),
            extra: Map::new(),
        }
    }

    pub fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }

    /// Presentation without axiom checks; label errors are reported as malformed input.
    pub fn presentation(&self) -> Result<CyclicFlatPresentation> {
        let ground = GroundSet::new(self.ground.clone())?;
        let mut flats = Vec::with_capacity(self.cyclic_flats.len());
        for f in &self.cyclic_flats {
            let mut set = crate::set::ElementSet::EMPTY;
            for l in &f.set {
                let e = ground
                    .index_of(l)
                    .ok_or_else(|| Error::Malformed(format!("unknown element {l:?}")))?;
                if set.contains(e) {
                    return Err(Error::Malformed(format!("element {l:?} repeated in a flat")));
                }
                set = set.with(e);
            }
            flats.push(RankedFlat::new(set, f.rank));
        }
        CyclicFlatPresentation::new(ground, flats)
    }

    pub fn to_matroid(&self) -> Result<Matroid> {
        Matroid::new(self.presentation()?)
    }
}

pub fn to_value(m: &Matroid) -> Value {
    serde_json::to_value(MatroidJson::from_matroid(m)).expect("plain data serializes")
}

pub fn to_string_pretty(m: &Matroid) -> String {
    serde_json::to_string_pretty(&MatroidJson::from_matroid(m)).expect("plain data serializes")
}

pub fn parse(s: &str) -> Result<MatroidJson> {
    Ok(serde_json::from_str(s)?)
}

pub fn matroid_from_str(s: &str) -> Result<Matroid> {
    parse(s)?.to_matroid()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::mk4;
    use crate::presentation::Axiom;

    #[test]
    fn roundtrip_is_byte_stable() {
        let m = mk4();
        let s = to_string_pretty(&m);
        let back = matroid_from_str(&s).unwrap();
        assert_eq!(back, m);
        assert_eq!(to_string_pretty(&back), s);
    }

    #[test]
    fn extra_fields_survive() {
        let j = MatroidJson::from_matroid(&mk4()).with("provenance", Value::from("mk4"));
        let s = serde_json::to_string(&j).unwrap();
        let p = parse(&s).unwrap();
        assert_eq!(p.extra["provenance"], "mk4");
    }

    #[test]
    fn bad_inputs() {
        let unknown = r#"{"ground":["a"],"cyclic_flats":[{"set":["z"],"rank":0}]}"#;
        assert!(matches!(matroid_from_str(unknown), Err(Error::Malformed(_))));
        let z1 = r#"{"ground":["a","b"],"cyclic_flats":[{"set":["a","b"],"rank":1}]}"#;
        match matroid_from_str(z1) {
            Err(Error::Axiom(v)) => assert_eq!(v.axiom, Axiom::Z1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(matroid_from_str("{"), Err(Error::Json(_))));
    }
}

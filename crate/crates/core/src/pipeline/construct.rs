//! Family recipes and the JSON they produce.

use crate::basic::{mk4, try_uniform};
use crate::constructions::{build_m_alpha, build_m_beta, AlphaTuple, BetaTuple};
use crate::critical::{build_m_delta, canonical_form, CriticalGraph};
use crate::error::{domain, Error, Result};
use crate::json::MatroidJson;
use crate::matroid::Matroid;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// How a matroid was made. Serialized as the `provenance` field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Recipe {
    Mdelta { graph: CriticalGraph },
    Malpha { tuple: AlphaTuple },
    Mbeta { tuple: BetaTuple },
    Uniform { r: usize, n: usize },
    Mk4,
}

fn numbers(params: &[String]) -> Result<Vec<usize>> {
    params
        .iter()
        .flat_map(|p| p.split([',', ' ']))
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| Error::Domain(format!("expected a number, got {s:?}"))))
        .collect()
}

impl Recipe {
    /// Parse CLI-style parameters. Numbers may be split by spaces or commas.
    /// `mdelta` takes one JSON critical graph `{r, s, t, orientation}`.
    pub fn parse(family: &str, params: &[String]) -> Result<Recipe> {
        match family {
            "mdelta" => {
                let [src] = params else {
                    return domain("mdelta takes one critical-graph JSON argument");
                };
                let graph: CriticalGraph =
                    serde_json::from_str(src).map_err(|e| Error::Malformed(format!("critical graph: {e}")))?;
                graph.check()?;
                Ok(Recipe::Mdelta { graph })
            }
            "malpha" => match numbers(params)?[..] {
                [a, b, c, d, e, f] => Ok(Recipe::Malpha { tuple: AlphaTuple::new(a, b, c, d, e, f)? }),
                _ => domain("malpha takes six sizes |A|,|B|,|C|,|D|,|E|,|F|"),
            },
            "mbeta" => match numbers(params)?[..] {
                [k, a, b, d, e] => Ok(Recipe::Mbeta { tuple: BetaTuple::new(k, a, b, d, e)? }),
                _ => domain("mbeta takes k then |A|,|B|,|D|,|E|"),
            },
            "uniform" => match numbers(params)?[..] {
                [r, n] => {
                    try_uniform(r, n)?;
                    Ok(Recipe::Uniform { r, n })
                }
                _ => domain("uniform takes r n"),
            },
            "mk4" if params.is_empty() => Ok(Recipe::Mk4),
            "mk4" => domain("mk4 takes no parameters"),
            _ => domain(format!("unknown family {family:?}; expected mdelta, malpha, mbeta, uniform or mk4")),
        }
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            Recipe::Mdelta { graph } => build_m_delta(graph),
            Recipe::Malpha { tuple } => build_m_alpha(tuple),
            Recipe::Mbeta { tuple } => build_m_beta(tuple),
            Recipe::Uniform { r, n } => try_uniform(*r, *n),
            Recipe::Mk4 => Ok(mk4()),
        }
    }

    pub fn provenance(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("plain data serializes");
        if let Recipe::Mdelta { graph } = self {
            v["canonical_form"] = Value::from(canonical_form(graph));
        }
        v
    }
}

/// Build and serialize with a `provenance` field.
pub fn cmd_construct(recipe: &Recipe) -> Result<MatroidJson> {
    let m = recipe.build()?;
    Ok(MatroidJson::from_matroid(&m).with("provenance", recipe.provenance()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn uniform_two_four() {
        let j = cmd_construct(&Recipe::parse("uniform", &strs(&["2", "4"])).unwrap()).unwrap();
        assert_eq!(j.cyclic_flats.len(), 2);
        assert_eq!(j.cyclic_flats[1].rank, 2);
        assert_eq!(j.extra["provenance"]["family"], "uniform");
    }

    #[test]
    fn mbeta_shape() {
        let r = Recipe::parse("mbeta", &strs(&["2", "1,1,1,1"])).unwrap();
        let j = cmd_construct(&r).unwrap();
        assert_eq!((j.ground.len(), j.cyclic_flats.len()), (8, 7));
        let back: Recipe = serde_json::from_value(j.extra["provenance"].clone()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn errors_name_the_problem() {
        let e = Recipe::parse("malpha", &strs(&["2,1,1,1,1,1"])).unwrap_err();
        assert!(e.to_string().contains("|D∪E∪F|"), "{e}");
        assert!(Recipe::parse("mk4", &strs(&["1"])).is_err());
        assert!(Recipe::parse("gammoid", &[]).is_err());
        assert!(Recipe::parse("mdelta", &strs(&["{\"r\":3}"])).is_err());
    }

    #[test]
    fn mdelta_from_json() {
        let g = r#"{"r":3,"s":2,"t":2,"orientation":[[true,false],[false,true]]}"#;
        let r = Recipe::parse("mdelta", &strs(&[g])).unwrap();
        let m = r.build().unwrap();
        assert!(m.is_isomorphic(&mk4()));
        assert!(r.provenance().get("canonical_form").is_some());
    }
}

//! On-disk catalog: `<store>/<id>.json` per record, certificates under
//! `<store>/certificates/`, and `<store>/index.jsonl` with one line per record
//! sorted by id.

use super::check::{check_property, Property};
use super::construct::Recipe;
use crate::constructions::{alpha_tuples, beta_tuples};
use crate::critical::enumerate_critical_graphs_with;
use crate::error::{Error, Result};
use crate::json::MatroidJson;
use crate::matroid::Matroid;
use crate::par::Exec;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;

pub const INDEX_FILE: &str = "index.jsonl";
pub const CERT_DIR: &str = "certificates";

/// Which families go in, and which properties get a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSpec {
    pub delta_max_rank: usize,
    pub alpha_max_rank: usize,
    pub beta_max_k: usize,
    pub properties: Vec<Property>,
}

impl Default for CatalogSpec {
    fn default() -> Self {
        CatalogSpec {
            delta_max_rank: 6,
            alpha_max_rank: 5,
            beta_max_k: 3,
            properties: vec![
                Property::Bo,
                Property::Sbo,
                Property::Transversal,
                Property::Paving,
                Property::SparsePaving,
            ],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRef {
    pub verdict: bool,
    /// Path of the certificate relative to the store.
    pub certificate: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub matroid: MatroidJson,
    pub provenance: Recipe,
    pub verdicts: BTreeMap<String, VerdictRef>,
}

impl CatalogRecord {
    /// The stored id is the hash of the stored presentation.
    pub fn id_is_valid(&self) -> bool {
        let mut bare = self.matroid.clone();
        bare.extra.clear();
        hash_json(&bare) == self.id
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexEntry {
    pub id: String,
    pub family: String,
    pub n: usize,
    pub r: usize,
    pub verdicts: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BuildSummary {
    pub records: usize,
    /// Recipes whose presentation was already in the catalog.
    pub duplicates: usize,
    pub by_family: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictChange {
    pub id: String,
    pub property: String,
    pub a: Option<bool>,
    pub b: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CatalogDiff {
    pub only_in_a: Vec<String>,
    pub only_in_b: Vec<String>,
    /// Records present in both whose stored bytes differ.
    pub changed_records: Vec<String>,
    pub changed_verdicts: Vec<VerdictChange>,
}

impl CatalogDiff {
    pub fn is_empty(&self) -> bool {
        self.only_in_a.is_empty()
            && self.only_in_b.is_empty()
            && self.changed_records.is_empty()
            && self.changed_verdicts.is_empty()
    }
}

fn hash_json(j: &MatroidJson) -> String {
    let bytes = serde_json::to_vec(j).expect("plain data serializes");
    hex::encode(Sha256::digest(&bytes))
}

/// Hex SHA-256 of the compact normalized presentation.
pub fn matroid_id(m: &Matroid) -> String {
    hash_json(&MatroidJson::from_matroid(m))
}

fn family(r: &Recipe) -> &'static str {
    match r {
        Recipe::Mdelta { .. } => "mdelta",
        Recipe::Malpha { .. } => "malpha",
        Recipe::Mbeta { .. } => "mbeta",
        Recipe::Uniform { .. } => "uniform",
        Recipe::Mk4 => "mk4",
    }
}

/// The recipes of a catalog, in construction order.
pub fn catalog_recipes(spec: &CatalogSpec, exec: Exec) -> Result<Vec<Recipe>> {
    let mut out = Vec::new();
    for r in 3..=spec.delta_max_rank {
        out.extend(enumerate_critical_graphs_with(r, exec)?.into_iter().map(|graph| Recipe::Mdelta { graph }));
    }
    for r in 3..=spec.alpha_max_rank {
        out.extend(alpha_tuples(r).into_iter().map(|tuple| Recipe::Malpha { tuple }));
    }
    for k in 2..=spec.beta_max_k {
        out.extend(beta_tuples(k).into_iter().map(|tuple| Recipe::Mbeta { tuple }));
    }
    Ok(out)
}

/// Every catalog matroid with its recipe, without touching disk.
pub fn catalog_matroids(spec: &CatalogSpec, exec: Exec) -> Result<Vec<(Recipe, Matroid)>> {
    let recipes = catalog_recipes(spec, exec)?;
    let built = exec.map(&recipes, Recipe::build);
    recipes.into_iter().zip(built).map(|(r, m)| Ok((r, m?))).collect()
}

fn write_json<T: Serialize>(path: &Path, v: &T) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    fs::write(path, s)?;
    Ok(())
}

fn cert_name(id: &str, p: Property) -> String {
    let tag: String = p.to_string().chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect();
    format!("{CERT_DIR}/{id}.{tag}.json")
}

/// Build a catalog into `store`. Output bytes do not depend on `exec`.
pub fn catalog_build(store: &Path, spec: &CatalogSpec, exec: Exec) -> Result<BuildSummary> {
    let items = catalog_matroids(spec, exec)?;
    fs::create_dir_all(store.join(CERT_DIR))?;
    let mut summary = BuildSummary::default();
    let mut seen = BTreeSet::new();
    let mut unique = Vec::new();
    for (recipe, m) in items {
        let id = matroid_id(&m);
        if seen.insert(id.clone()) {
            *summary.by_family.entry(family(&recipe).to_string()).or_default() += 1;
            unique.push((id, recipe, m));
        } else {
            summary.duplicates += 1;
        }
    }
    let checked = exec.map(&unique, |(_, _, m)| {
        spec.properties
            .iter()
            .map(|&p| check_property(m, p, Exec::Sequential))
            .collect::<Result<Vec<_>>>()
    });
    let mut index = Vec::with_capacity(unique.len());
    for ((id, recipe, m), reports) in unique.into_iter().zip(checked) {
        let mut verdicts = BTreeMap::new();
        let mut flags = BTreeMap::new();
        for (&p, rep) in spec.properties.iter().zip(reports?) {
            let name = cert_name(&id, p);
            write_json(&store.join(&name), &rep)?;
            flags.insert(p.to_string(), rep.verdict);
            verdicts.insert(
                p.to_string(),
                VerdictRef {
                    verdict: rep.verdict,
                    certificate: name,
                },
            );
        }
        index.push(IndexEntry {
            id: id.clone(),
            family: family(&recipe).to_string(),
            n: m.n(),
            r: m.r(),
            verdicts: flags,
        });
        let rec = CatalogRecord {
            id: id.clone(),
            matroid: MatroidJson::from_matroid(&m),
            provenance: recipe,
            verdicts,
        };
        write_json(&store.join(format!("{id}.json")), &rec)?;
    }
    index.sort_by(|a, b| a.id.cmp(&b.id));
    let mut lines = String::new();
    for e in &index {
        lines.push_str(&serde_json::to_string(e)?);
        lines.push('\n');
    }
    fs::write(store.join(INDEX_FILE), lines)?;
    summary.records = index.len();
    Ok(summary)
}

pub fn read_index(store: &Path) -> Result<Vec<IndexEntry>> {
    let path = store.join(INDEX_FILE);
    let text = fs::read_to_string(&path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Malformed(format!("{}: {e}", path.display()))))
        .collect()
}

pub fn read_record(store: &Path, id: &str) -> Result<CatalogRecord> {
    let text = fs::read_to_string(store.join(format!("{id}.json")))?;
    let rec: CatalogRecord = serde_json::from_str(&text)?;
    if rec.id != id || !rec.id_is_valid() {
        return Err(Error::Invariant(format!("record {id} does not hash to its id")));
    }
    Ok(rec)
}

/// Index entries whose verdict for `property` equals `verdict`.
pub fn catalog_query(store: &Path, property: Property, verdict: bool) -> Result<Vec<IndexEntry>> {
    let key = property.to_string();
    Ok(read_index(store)?
        .into_iter()
        .filter(|e| e.verdicts.get(&key) == Some(&verdict))
        .collect())
}

/// Record-by-record comparison of two stores.
pub fn catalog_diff(a: &Path, b: &Path) -> Result<CatalogDiff> {
    let ia: BTreeMap<String, IndexEntry> = read_index(a)?.into_iter().map(|e| (e.id.clone(), e)).collect();
    let ib: BTreeMap<String, IndexEntry> = read_index(b)?.into_iter().map(|e| (e.id.clone(), e)).collect();
    let mut d = CatalogDiff::default();
    for (id, ea) in &ia {
        let Some(eb) = ib.get(id) else {
            d.only_in_a.push(id.clone());
            continue;
        };
        let keys: BTreeSet<&String> = ea.verdicts.keys().chain(eb.verdicts.keys()).collect();
        for k in keys {
            let (va, vb) = (ea.verdicts.get(k).copied(), eb.verdicts.get(k).copied());
            if va != vb {
                d.changed_verdicts.push(VerdictChange {
                    id: id.clone(),
                    property: k.clone(),
                    a: va,
                    b: vb,
                });
            }
        }
        let name = format!("{id}.json");
        if fs::read(a.join(&name))? != fs::read(b.join(&name))? {
            d.changed_records.push(id.clone());
        }
    }
    d.only_in_b = ib.keys().filter(|id| !ia.contains_key(*id)).cloned().collect();
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CatalogSpec {
        CatalogSpec {
            delta_max_rank: 4,
            alpha_max_rank: 4,
            beta_max_k: 2,
            properties: vec![Property::Bo, Property::Paving],
        }
    }

    #[test]
    fn build_query_diff() {
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (dir.path().join("a"), dir.path().join("b"));
        let s = catalog_build(&a, &small(), Exec::Sequential).unwrap();
        catalog_build(&b, &small(), Exec::Parallel).unwrap();
        assert!(s.records >= 4);
        assert!(catalog_diff(&a, &b).unwrap().is_empty());
        assert_eq!(fs::read(a.join(INDEX_FILE)).unwrap(), fs::read(b.join(INDEX_FILE)).unwrap());
        let not_bo = catalog_query(&a, Property::Bo, false).unwrap();
        assert!(not_bo.iter().filter(|e| e.family == "mdelta").count() == 2);
        for e in read_index(&a).unwrap() {
            let rec = read_record(&a, &e.id).unwrap();
            assert!(rec.id_is_valid());
            assert_eq!(rec.matroid.to_matroid().unwrap().r(), e.r);
        }
    }

    #[test]
    fn diff_sees_changes() {
        let dir = tempfile::tempdir().unwrap();
        let (a, b) = (dir.path().join("a"), dir.path().join("b"));
        catalog_build(&a, &small(), Exec::Sequential).unwrap();
        let mut fewer = small();
        fewer.beta_max_k = 1;
        catalog_build(&b, &fewer, Exec::Sequential).unwrap();
        let d = catalog_diff(&a, &b).unwrap();
        assert_eq!(d.only_in_a.len(), 1);
        assert!(d.only_in_b.is_empty());
    }

    #[test]
    fn ids_are_stable() {
        let m = crate::basic::mk4();
        assert_eq!(matroid_id(&m), matroid_id(&m.clone()));
        assert_eq!(matroid_id(&m).len(), 64);
        assert_ne!(matroid_id(&m), matroid_id(&crate::basic::uniform(3, 6)));
    }
}

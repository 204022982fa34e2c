//! Labeled ground sets.

use crate::error::{domain, Error, Result};
use crate::set::{ElementSet, MAX_ELEMENTS};
use std::collections::HashMap;

/// A finite ground set `{0, .., n-1}` with one distinct text label per element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<String>,
}

impl GroundSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::Malformed(format!(
                "ground set has {} elements, at most {MAX_ELEMENTS} supported",
                labels.len()
            )));
        }
        let mut seen = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                return Err(Error::Malformed(format!(
                    "label {l:?} used by elements {j} and {i}"
                )));
            }
        }
        Ok(GroundSet { labels })
    }

    /// Ground set labeled by element index.
    pub fn indexed(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        GroundSet {
            labels: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn from_strs(labels: &[&str]) -> Result<Self> {
        Self::new(labels.iter().map(|s| s.to_string()).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn full(&self) -> ElementSet {
        ElementSet::full(self.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Resolve a list of labels to a set.
    pub fn set_of(&self, labels: &[&str]) -> Result<ElementSet> {
        labels.iter().try_fold(ElementSet::EMPTY, |acc, l| match self.index_of(l) {
            Some(i) => Ok(acc.with(i)),
            None => domain(format!("unknown element label {l:?}")),
        })
    }

    pub fn labels_of(&self, s: ElementSet) -> Vec<String> {
        s.iter().map(|e| self.labels[e].clone()).collect()
    }

    pub fn check_subset(&self, s: ElementSet) -> Result<()> {
        if s.is_subset(self.full()) {
            Ok(())
        } else {
            domain(format!(
                "set {:?} is not a subset of a {}-element ground set",
                s,
                self.len()
            ))
        }
    }

    /// Ground set obtained by keeping the members of `keep`, reindexed in order.
    pub fn restrict(&self, keep: ElementSet) -> GroundSet {
        GroundSet {
            labels: keep.iter().map(|e| self.labels[e].clone()).collect(),
        }
    }

    /// Append a fresh element, returning its index.
    pub fn push(&mut self, label: String) -> Result<usize> {
        if self.labels.contains(&label) {
            return domain(format!("element {label:?} already present"));
        }
        if self.labels.len() == MAX_ELEMENTS {
            return Err(Error::Malformed("ground set is full".into()));
        }
        self.labels.push(label);
        Ok(self.labels.len() - 1)
    }

    /// A label not yet in use, derived from `base`.
    pub fn fresh_label(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}{i}"))
            .find(|l| self.index_of(l).is_none())
            .unwrap()
    }

    /// Concatenation; labels must be disjoint.
    pub fn concat(&self, other: &GroundSet) -> Result<GroundSet> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        GroundSet::new(labels).map_err(|e| Error::Domain(format!("ground sets overlap: {e}")))
    }

    /// Same labels with a prefix added.
    pub fn prefixed(&self, prefix: &str) -> GroundSet {
        GroundSet {
            labels: self.labels.iter().map(|l| format!("{prefix}{l}")).collect(),
        }
    }
}

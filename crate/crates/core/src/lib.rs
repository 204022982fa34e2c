//! Cyclic-flat matroid engine: rank oracles, minors and extensions, basis-exchange
//! analysis, critical graphs and the families built from them.

pub mod basic;
pub mod constructions;
pub mod critical;
pub mod error;
pub mod exchange;
pub mod extension;
pub mod ground;
pub mod iso;
pub mod json;
pub mod matching;
pub mod matroid;
pub mod par;
pub mod pipeline;
pub mod presentation;
pub mod properties;
pub mod set;
pub mod transversal;

pub use error::{Error, Result};
pub use extension::BipartiteGraph;
pub use ground::GroundSet;
pub use matroid::Matroid;
pub use presentation::{Axiom, CyclicFlatPresentation, RankedFlat, Violation};
pub use set::ElementSet;

//! Orchestration behind the command-line tool: table reproduction, property
//! checks, family construction and the on-disk catalog.

mod catalog;
mod check;
mod construct;
mod table1;

pub use catalog::{
    catalog_build, catalog_diff, catalog_matroids, catalog_query, catalog_recipes, matroid_id, read_index, read_record,
    BuildSummary, CatalogDiff, CatalogRecord, CatalogSpec, IndexEntry, VerdictChange, VerdictRef, CERT_DIR, INDEX_FILE,
};
pub use check::{check_property, ordering_certificate, CheckReport, Property};
pub use construct::{cmd_construct, Recipe};
pub use table1::{cmd_table1, expected_rows, verify_graphs, GraphVerdict, Table1Report, Table1Row, TABLE1, VERIFY_DEFAULT_LIMIT};

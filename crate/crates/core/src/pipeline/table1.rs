//! Reproduction of the census of `M(Δ)` by rank and bipartite shape.

use crate::critical::{conjecture_report_with, enumerate_critical_graphs_with, find_obstructions, CriticalGraph, MAX_RANK, MIN_RANK};
use crate::error::{Error, Result};
use crate::par::Exec;
use serde::Serialize;

/// Known `(r, s, t, no obstruction, with obstruction)` counts.
pub const TABLE1: &[(usize, usize, usize, usize, usize)] = &[
    (3, 2, 2, 1, 0),
    (4, 2, 3, 1, 0),
    (5, 2, 4, 2, 0),
    (5, 3, 3, 3, 0),
    (6, 2, 5, 2, 0),
    (6, 3, 4, 15, 0),
    (7, 2, 6, 3, 0),
    (7, 3, 5, 34, 0),
    (7, 4, 4, 43, 1),
    (8, 2, 7, 3, 0),
    (8, 3, 6, 68, 0),
    (8, 4, 5, 331, 3),
    (9, 2, 8, 4, 0),
    (9, 3, 7, 120, 0),
    (9, 4, 6, 1111, 8),
    (9, 5, 5, 1203, 10),
];

/// Largest rank verified without `long`.
pub const VERIFY_DEFAULT_LIMIT: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub s: usize,
    pub t: usize,
    pub no_obstruction: usize,
    pub with_obstruction: usize,
    pub total: usize,
    pub expected: [usize; 2],
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphVerdict {
    pub graph: CriticalGraph,
    pub has_obstruction: bool,
    pub bo_member: bool,
    pub excluded_minor_bo: bool,
    pub excluded_minor_sbo: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Report {
    pub r: usize,
    pub rows: Vec<Table1Row>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Vec<GraphVerdict>>,
}

impl Table1Report {
    /// Counts agree with the table and every verified graph behaves as predicted.
    pub fn matches(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
            && self
                .verification
                .as_ref()
                .is_none_or(|v| v.iter().all(|g| g.consistent))
    }
}

pub fn expected_rows(r: usize) -> Vec<(usize, usize, usize, usize)> {
    TABLE1
        .iter()
        .filter(|row| row.0 == r)
        .map(|&(_, s, t, n, w)| (s, t, n, w))
        .collect()
}

/// Excluded-minor verdicts for a list of graphs, in input order.
pub fn verify_graphs(graphs: &[CriticalGraph], exec: Exec) -> Result<Vec<GraphVerdict>> {
    exec.map(graphs, |d| -> Result<GraphVerdict> {
        let rep = conjecture_report_with(d, Exec::Sequential)?;
        Ok(GraphVerdict {
            graph: d.clone(),
            has_obstruction: rep.has_obstruction,
            bo_member: rep.bo.member,
            excluded_minor_bo: rep.excluded_minor_bo,
            excluded_minor_sbo: rep.excluded_minor_sbo,
            consistent: rep.consistent,
        })
    })
    .into_iter()
    .collect()
}

pub fn cmd_table1(r: usize, verify: bool, long: bool, exec: Exec) -> Result<Table1Report> {
    if !(MIN_RANK..=MAX_RANK).contains(&r) {
        return Err(Error::Budget(format!("table rows exist for {MIN_RANK} <= r <= {MAX_RANK}, got {r}")));
    }
    if verify && r > VERIFY_DEFAULT_LIMIT && !long {
        return Err(Error::Budget(format!(
            "verification at r = {r} is hours of work; pass --long to run it"
        )));
    }
    let graphs = enumerate_critical_graphs_with(r, exec)?;
    let obstructed = exec.map(&graphs, |d| !find_obstructions(d).is_empty());
    let rows = expected_rows(r)
        .into_iter()
        .map(|(s, t, en, ew)| {
            let (mut n, mut w) = (0, 0);
            for (d, &o) in graphs.iter().zip(&obstructed) {
                if d.s == s {
                    if o {
                        w += 1;
                    } else {
                        n += 1;
                    }
                }
            }
            Table1Row {
                s,
                t,
                no_obstruction: n,
                with_obstruction: w,
                total: n + w,
                expected: [en, ew],
                matches: n == en && w == ew,
            }
        })
        .collect();
    let verification = if verify { Some(verify_graphs(&graphs, exec)?) } else { None };
    Ok(Table1Report { r, rows, verification })
}

//! `bo`: base-orderability toolkit.
//!
//! JSON goes to stdout (or `--output`), a one-line summary to stderr.
//! Exit status: 0 true / match, 1 false / mismatch, 2 usage or input error.

use anyhow::{Context, Result};
use bo_core::critical::{canonical_form, enumerate_critical_graphs_with, find_obstructions};
use bo_core::json::matroid_from_str;
use bo_core::par::{with_threads, Exec};
use bo_core::pipeline::{
    catalog_build, catalog_diff, catalog_query, check_property, cmd_construct, cmd_table1, CatalogSpec, Property, Recipe,
};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "bo", version, about = "Base-orderability checks, critical graphs and matroid catalogs")]
struct Cli {
    /// Worker threads; defaults to all cores. Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count critical graphs by obstruction status and compare with the known counts.
    Table1 {
        #[arg(long)]
        rank: usize,
        /// Also certify every M(Δ) as an excluded minor.
        #[arg(long)]
        verify: bool,
        /// Allow verification above rank 7.
        #[arg(long)]
        long: bool,
    },
    /// Decide a property of a matroid given as JSON.
    Check {
        file: PathBuf,
        /// bo, kbo=K, sbo, kl=K,L, transversal, paving or sparse-paving
        #[arg(long)]
        property: String,
    },
    /// Build a family member: mdelta GRAPH | malpha A,B,C,D,E,F | mbeta K A,B,D,E | uniform R N | mk4
    Construct {
        family: String,
        /// Family parameters; for mdelta a critical-graph JSON string or a path to one.
        params: Vec<String>,
    },
    /// Build, query or diff an on-disk catalog.
    Catalog(CatalogArgs),
    /// Critical graphs of a rank, one JSON object per line.
    EnumerateCritical {
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Args)]
struct CatalogArgs {
    #[command(subcommand)]
    action: CatalogAction,
}

#[derive(Subcommand)]
enum CatalogAction {
    Build {
        store: PathBuf,
        #[arg(long, default_value_t = 6)]
        delta_max_rank: usize,
        #[arg(long, default_value_t = 5)]
        alpha_max_rank: usize,
        #[arg(long, default_value_t = 3)]
        beta_max_k: usize,
    },
    Query {
        store: PathBuf,
        #[arg(long)]
        property: String,
        #[arg(long)]
        verdict: bool_arg::Verdict,
    },
    Diff {
        a: PathBuf,
        b: PathBuf,
    },
}

mod bool_arg {
    use std::str::FromStr;

    #[derive(Clone, Copy, Debug)]
    pub struct Verdict(pub bool);

    impl FromStr for Verdict {
        type Err = String;
        fn from_str(s: &str) -> Result<Self, String> {
            match s {
                "true" | "yes" | "1" => Ok(Verdict(true)),
                "false" | "no" | "0" => Ok(Verdict(false)),
                _ => Err(format!("expected true or false, got {s:?}")),
            }
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn pretty<T: serde::Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn code(ok: bool) -> ExitCode {
    ExitCode::from(if ok { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let exec = Exec::default();
    let out = cli.output.as_deref();
    match cli.cmd {
        Command::Table1 { rank, verify, long } => {
            let rep = cmd_table1(rank, verify, long, exec)?;
            emit(out, &pretty(&rep)?)?;
            for row in &rep.rows {
                eprintln!(
                    "r={} K_{{{},{}}}: {} + {} = {} (expected {} + {}){}",
                    rank,
                    row.s,
                    row.t,
                    row.no_obstruction,
                    row.with_obstruction,
                    row.total,
                    row.expected[0],
                    row.expected[1],
                    if row.matches { "" } else { "  MISMATCH" }
                );
            }
            if let Some(v) = &rep.verification {
                let bad = v.iter().filter(|g| !g.consistent).count();
                eprintln!("verified {} graphs, {} inconsistent", v.len(), bad);
            }
            Ok(code(rep.matches()))
        }
        Command::Check { file, property } => {
            let p: Property = property.parse()?;
            let text = std::fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let m = matroid_from_str(&text).with_context(|| format!("loading {}", file.display()))?;
            let rep = check_property(&m, p, exec)?;
            emit(out, &pretty(&rep)?)?;
            eprintln!("{}: {} = {}", file.display(), rep.property, rep.verdict);
            Ok(code(rep.verdict))
        }
        Command::Construct { family, params } => {
            let params = if family == "mdelta" {
                params
                    .into_iter()
                    .map(|p| {
                        if p.trim_start().starts_with('{') {
                            Ok(p)
                        } else {
                            std::fs::read_to_string(&p).with_context(|| format!("reading {p}"))
                        }
                    })
                    .collect::<Result<Vec<_>>>()?
            } else {
                params
            };
            let recipe = Recipe::parse(&family, &params)?;
            let j = cmd_construct(&recipe)?;
            emit(out, &pretty(&j)?)?;
            eprintln!("{family}: {} elements, {} cyclic flats", j.ground.len(), j.cyclic_flats.len());
            Ok(ExitCode::SUCCESS)
        }
        Command::Catalog(CatalogArgs { action }) => match action {
            CatalogAction::Build {
                store,
                delta_max_rank,
                alpha_max_rank,
                beta_max_k,
            } => {
                let spec = CatalogSpec {
                    delta_max_rank,
                    alpha_max_rank,
                    beta_max_k,
                    ..CatalogSpec::default()
                };
                let s = catalog_build(&store, &spec, exec)?;
                emit(out, &pretty(&s)?)?;
                eprintln!("{} records in {}", s.records, store.display());
                Ok(ExitCode::SUCCESS)
            }
            CatalogAction::Query { store, property, verdict } => {
                let p: Property = property.parse()?;
                let hits = catalog_query(&store, p, verdict.0)?;
                emit(out, &pretty(&hits)?)?;
                eprintln!("{} records with {} = {}", hits.len(), p, verdict.0);
                Ok(ExitCode::SUCCESS)
            }
            CatalogAction::Diff { a, b } => {
                let d = catalog_diff(&a, &b)?;
                emit(out, &pretty(&d)?)?;
                eprintln!(
                    "{} only in a, {} only in b, {} changed records, {} changed verdicts",
                    d.only_in_a.len(),
                    d.only_in_b.len(),
                    d.changed_records.len(),
                    d.changed_verdicts.len()
                );
                Ok(code(d.is_empty()))
            }
        },
        Command::EnumerateCritical { rank } => {
            let graphs = enumerate_critical_graphs_with(rank, exec)?;
            let mut lines = Vec::with_capacity(graphs.len());
            for d in &graphs {
                let obstructed = !find_obstructions(d).is_empty();
                let mut v = serde_json::to_value(d)?;
                v["canonical_form"] = json!(canonical_form(d));
                v["has_obstruction"] = json!(obstructed);
                lines.push(serde_json::to_string(&v)?);
            }
            emit(out, &lines.join("\n"))?;
            eprintln!("{} critical graphs of rank {rank}", graphs.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let jobs = cli.jobs;
    let result = match jobs {
        Some(0) => {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        Some(n) => with_threads(n, || run(cli)),
        None => run(cli),
    };
    match result {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

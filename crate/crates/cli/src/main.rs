//! `limpack`: exact k-limited packing numbers, bounds, recognizers and
//! theorem-checking campaigns from the command line.

use std::fs;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use limpack::bounds::{bound_report_exact, nordhaus_gaddum};
use limpack::extremal::{
    check_Lk_equals_k, construct_family, recognize_class_G, recognize_class_T, recognize_spider,
    ExtremalError,
};
use limpack::harness::{run_campaign, select_theorems, Corpus, Status};
use limpack::{graph6, profile, solvers, Graph};

#[derive(Parser)]
#[command(name = "limpack", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact L_k(G).
    Solve {
        /// graph6 string, or `@path` to a file holding graph6 or an edge list.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
        /// Force a solver; by default small graphs use exhaustive search.
        #[arg(long, value_enum)]
        method: Option<SolverChoice>,
        /// Also print a maximum packing as a sorted vertex list.
        #[arg(long)]
        witness: bool,
    },
    /// L_1, L_2, L_3, open packing, domination numbers and the structural profile as JSON.
    Params {
        #[arg(long)]
        graph: String,
    },
    /// Every registered lower and upper bound on L_k(G) as JSON.
    Bounds {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
        /// Include the exact value and list any bound it contradicts.
        #[arg(long)]
        exact: bool,
    },
    /// L_k(G) + L_k of the complement against its lower and upper bounds, as JSON.
    Ng {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// Membership in an extremal family, with a witness, as JSON.
    Recognize {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        family: FamilyChoice,
        /// Packing limit; only used by `lk-eq-k`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Builds a named graph and prints it in graph6.
    Generate {
        /// For example `path:7`, `bipartite:2,3`, `spider:2,1`, `diam2:4`, `prescribed:8,12`.
        #[arg(long)]
        family: String,
    },
    /// Runs theorem checks over a corpus; exits nonzero if any statement fails.
    Verify {
        /// Comma-separated theorem ids, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Corpus specification, e.g. `all_labeled(6)+trees(<=9)`.
        #[arg(long)]
        corpus: String,
        /// Limits to check: `A..B`, `A,B,C` or a single value.
        #[arg(long, default_value = "1..3")]
        k: String,
        /// Seed for random corpus terms that do not name their own.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the full report to this file.
        #[arg(long)]
        json: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverChoice {
    Oracle,
    Bb,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyChoice {
    #[value(name = "classG")]
    ClassG,
    Spider,
    #[value(name = "classT")]
    ClassT,
    LkEqK,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            graph,
            k,
            method,
            witness,
        } => {
            let g = load_graph(&graph)?;
            let r = match method {
                Some(SolverChoice::Oracle) => solvers::limited_packing_oracle(&g, k)?,
                Some(SolverChoice::Bb) => solvers::limited_packing_bb(&g, k),
                None => solvers::limited_packing_number(&g, k),
            };
            println!("{}", r.value);
            if witness {
                println!("{}", serde_json::to_string(&r.witness)?);
            }
        }
        Command::Params { graph } => {
            let g = load_graph(&graph)?;
            let lk = |k| solvers::limited_packing_number(&g, k).value;
            let out = json!({
                "graph6": graph6::emit(&g),
                "L1": lk(1),
                "L2": lk(2),
                "L3": lk(3),
                "rho0": solvers::open_packing_number(&g).value,
                "gamma": solvers::domination_number(&g).ok().map(|r| r.value),
                "gamma_t": solvers::total_domination_number(&g).ok().map(|r| r.value),
                "profile": profile::profile(&g),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
        Command::Bounds { graph, k, exact } => {
            let g = load_graph(&graph)?;
            let mut report = bound_report_exact(&g, k);
            if !exact {
                report.exact = None;
            }
            println!("{}", serde_json::to_string_pretty(&report)?);
            if exact && !report.violations().is_empty() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Ng { graph, k } => {
            let g = load_graph(&graph)?;
            println!("{}", serde_json::to_string_pretty(&nordhaus_gaddum(&g, k))?);
        }
        Command::Recognize { graph, family, k } => {
            let g = load_graph(&graph)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&recognize(&g, family, k)?)?
            );
        }
        Command::Generate { family } => {
            println!("{}", graph6::emit(&construct_family(&family)?));
        }
        Command::Verify {
            theorems,
            corpus,
            k,
            seed,
            json,
        } => {
            let theorems = select_theorems(&theorems)?;
            let corpus = Corpus::parse(&corpus, seed)?;
            let report = run_campaign(&theorems, &corpus, parse_k_range(&k)?);
            for v in &report.verdicts {
                let status = match v.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::Vacuous => "vacuous",
                };
                println!(
                    "{status:<8} {:<30} graphs={} substantive={} positive={} violations={}",
                    v.theorem_id,
                    v.graphs_checked,
                    v.substantive_checks,
                    v.positive_cases,
                    v.violations.len()
                );
            }
            if let Some(path) = json {
                fs::write(&path, report.to_json()).with_context(|| format!("writing {path}"))?;
            }
            if !report.all_passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn recognize(g: &Graph, family: FamilyChoice, k: Option<usize>) -> Result<serde_json::Value> {
    // tree-only families report non-trees as non-members
    let tree_only = |r: Result<Option<serde_json::Value>, ExtremalError>| match r {
        Err(ExtremalError::NotATree) => Ok(None),
        other => other,
    };
    let (name, witness) = match family {
        FamilyChoice::ClassG => ("classG", recognize_class_G(g).map(|w| json!(w))),
        FamilyChoice::Spider => (
            "spider",
            tree_only(recognize_spider(g).map(|s| s.map(|s| json!(s))))?,
        ),
        FamilyChoice::ClassT => (
            "classT",
            tree_only(recognize_class_T(g).map(|w| w.map(|w| json!(w))))?,
        ),
        FamilyChoice::LkEqK => {
            let Some(k) = k else {
                bail!("--family lk-eq-k needs --k");
            };
            if k == 0 {
                bail!("--k must be at least 1");
            }
            let member = check_Lk_equals_k(g, k);
            let witness = solvers::limited_packing_number(g, k).witness;
            return Ok(json!({
                "family": "lk-eq-k",
                "k": k,
                "member": member,
                "witness": member.then(|| json!(witness)),
            }));
        }
    };
    Ok(json!({
        "family": name,
        "member": witness.is_some(),
        "witness": witness,
    }))
}

/// Reads a graph given inline as graph6 or as `@path`; a file whose first
/// content line contains whitespace is read as an edge list.
fn load_graph(arg: &str) -> Result<Graph> {
    let Some(path) = arg.strip_prefix('@') else {
        return graph6::parse(arg.trim()).with_context(|| format!("parsing graph6 {arg:?}"));
    };
    let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .with_context(|| format!("{path} holds no graph"))?;
    if first.contains(char::is_whitespace) {
        Graph::parse_edge_list(&text).with_context(|| format!("parsing edge list {path}"))
    } else {
        graph6::parse(first).with_context(|| format!("parsing graph6 in {path}"))
    }
}

fn parse_k_range(s: &str) -> Result<RangeInclusive<usize>> {
    let s = s.trim();
    let parse = |t: &str| -> Result<usize> {
        t.trim()
            .parse()
            .with_context(|| format!("bad limit {t:?} in --k {s:?}"))
    };
    let (lo, hi) = if let Some((a, b)) = s.split_once("..") {
        (parse(a)?, parse(b.trim_start_matches('='))?)
    } else {
        let ks = s.split(',').map(parse).collect::<Result<Vec<_>>>()?;
        let (lo, hi) = (ks.iter().min().copied(), ks.iter().max().copied());
        let (Some(lo), Some(hi)) = (lo, hi) else {
            bail!("empty --k");
        };
        if hi - lo + 1 != ks.len() {
            bail!("--k list {s:?} must be a contiguous run of limits");
        }
        (lo, hi)
    };
    if lo == 0 || lo > hi {
        bail!("--k {s:?} must be a nonempty range of positive limits");
    }
    Ok(lo..=hi)
}

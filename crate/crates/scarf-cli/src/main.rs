//! Command-line front end: parse instance files, dispatch the solvers and
//! validators, emit byte-stable JSON. Exit codes: 0 success, 1 usage
//! error, 2 validation failure with a structured diagnostic on stdout.

use clap::{Parser, Subcommand, ValueEnum};
use scarf::chains2::VertexId;
use scarf::complexes::from_order_family;
use scarf::geom::{
    brouwer_approximate, builtin_brouwer, builtin_kakutani, freudenthal, intersection_number,
    kakutani_approximate, GeometricChain,
};
use scarf::om::{circuits_from_vectors, validate_axioms, AxiomReport, MatroidJson,
    OrientedMatroid, VectorConfiguration};
use scarf::orders::OrderFamily;
use scarf::solver::{
    solve_classical_any, solve_hedgehog, solve_matroid_nd, solve_matroid_nd_path, solve_vector,
    MatroidFramework, SolveMode,
};
use scarf::suite;
use scarf::{parse_rat, rat_to_string, Rat, ScarfError};
use serde::Deserialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(name = "scarf", version, about = "Scarf-style combinatorial fixed-point toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Brute,
    Path,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check the circuit axioms of a matroid file
    ValidateMatroid { input: PathBuf },
    /// Solutions of the classical colored-complex problem
    SolveClassical {
        #[arg(long)]
        input: PathBuf,
    },
    /// Matroid-framework solver, brute force or path following
    SolveMatroid {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "brute")]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Vector-coloring solver over an order family
    SolveVector {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "brute")]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    /// Hedgehog-coloring solver over a matroid framework
    SolveHedgehog {
        #[arg(long)]
        input: PathBuf,
    },
    /// Brouwer fixed-point approximation with a named oracle
    Brouwer {
        #[arg(long)]
        oracle: String,
        /// dimension of the simplex (n + 1 coordinates)
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
        #[arg(long = "max-grid", default_value_t = 64)]
        max_grid: i64,
    },
    /// Kakutani fixed-point approximation with a named oracle
    Kakutani {
        #[arg(long)]
        oracle: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
        #[arg(long = "max-grid", default_value_t = 64)]
        max_grid: i64,
    },
    /// Freudenthal triangulation of the size-N lattice simplex
    Freudenthal {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        big_n: i64,
        /// print the cell count only
        #[arg(long)]
        count: bool,
    },
    /// Mod-2 intersection number of two chains
    Intersect {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run the seeded invariant suites
    CheckInvariants {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// inject a deliberate mutation (self-test of the harness)
        #[arg(long)]
        mutate: bool,
    },
}

fn diag(e: ScarfError) -> Value {
    json!({ "error": e.to_string() })
}

fn read_file<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| json!({ "error": e.to_string(), "path": path.display().to_string() }))?;
    serde_json::from_str(&text)
        .map_err(|e| json!({ "error": e.to_string(), "path": path.display().to_string() }))
}

fn ids(v: &[String]) -> Vec<VertexId> {
    v.iter().map(|s| VertexId::new(s.clone())).collect()
}

fn rats(v: &[String]) -> Result<Vec<Rat>, Value> {
    v.iter().map(|s| parse_rat(s).map_err(diag)).collect()
}

#[derive(Deserialize)]
struct OrdersPart {
    x: Vec<String>,
    orders: Vec<Vec<String>>,
}

impl OrdersPart {
    fn family(&self) -> Result<OrderFamily, Value> {
        let orders = self.orders.iter().map(|o| ids(o)).collect();
        OrderFamily::new(ids(&self.x), orders).map_err(diag)
    }
}

#[derive(Deserialize)]
struct ClassicalFile {
    #[serde(flatten)]
    orders: OrdersPart,
    coloring: BTreeMap<String, usize>,
}

#[derive(Deserialize)]
struct MatroidInstanceFile {
    vectors: BTreeMap<String, Vec<String>>,
    basis: Vec<String>,
    b: String,
    #[serde(flatten)]
    orders: OrdersPart,
    coloring: BTreeMap<String, String>,
}

impl MatroidInstanceFile {
    fn framework(&self) -> Result<MatroidFramework, Value> {
        let cfg = VectorConfiguration::from_json(&self.vectors).map_err(diag)?;
        let m = circuits_from_vectors(&cfg).map_err(diag)?;
        MatroidFramework::new(m, ids(&self.basis), VertexId::new(self.b.clone())).map_err(diag)
    }

    fn coloring(&self) -> BTreeMap<VertexId, VertexId> {
        self.coloring
            .iter()
            .map(|(k, v)| (VertexId::new(k.clone()), VertexId::new(v.clone())))
            .collect()
    }
}

#[derive(Deserialize)]
struct VectorFile {
    #[serde(flatten)]
    orders: OrdersPart,
    colors: BTreeMap<String, Vec<String>>,
    b: Vec<String>,
}

#[derive(Deserialize)]
struct ChainPart {
    dim: usize,
    ambient: usize,
    simplices: Vec<Vec<Vec<String>>>,
}

impl ChainPart {
    fn chain(&self) -> Result<GeometricChain, Value> {
        let mut sims = Vec::new();
        for s in &self.simplices {
            let pts: Result<Vec<Vec<Rat>>, Value> = s.iter().map(|p| rats(p)).collect();
            sims.push(pts?);
        }
        GeometricChain::new(self.dim, self.ambient, sims).map_err(diag)
    }
}

#[derive(Deserialize)]
struct IntersectFile {
    c: ChainPart,
    d: ChainPart,
}

fn validate_matroid(path: &Path) -> Result<Value, Value> {
    let j: MatroidJson = read_file(path)?;
    let m = OrientedMatroid::from_json(&j).map_err(diag)?;
    match validate_axioms(&m) {
        AxiomReport::Pass => Ok(json!({ "valid": true, "circuits": m.circuit_count() })),
        AxiomReport::Fail { axiom, witness } => Err(json!({
            "error": "axiom failure",
            "axiom": axiom,
            "witness": witness,
        })),
    }
}

fn solution_json(s: &scarf::solver::Solution) -> Value {
    serde_json::to_value(s.to_json()).expect("serializable")
}

fn run(cli: Cli) -> Result<Value, Value> {
    match cli.cmd {
        Cmd::ValidateMatroid { input } => validate_matroid(&input),
        Cmd::SolveClassical { input } => {
            let file: ClassicalFile = read_file(&input)?;
            let f = file.orders.family()?;
            let d = from_order_family(&f).map_err(diag)?;
            let coloring: BTreeMap<VertexId, usize> = file
                .coloring
                .iter()
                .map(|(k, v)| (VertexId::new(k.clone()), *v))
                .collect();
            let sols = solve_classical_any(&d, &coloring).map_err(diag)?;
            let out: Vec<Value> = sols
                .iter()
                .map(|(c, sigma)| {
                    json!({
                        "C": c.iter().collect::<Vec<_>>(),
                        "tau": sigma.vertices().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(json!({ "solutions": out }))
        }
        Cmd::SolveMatroid { input, mode, index } => {
            let file: MatroidInstanceFile = read_file(&input)?;
            let fr = file.framework()?;
            let d = from_order_family(&file.orders.family()?).map_err(diag)?;
            let c = file.coloring();
            match mode {
                Mode::Brute => {
                    let sols = solve_matroid_nd(&fr, &d, &c).map_err(diag)?;
                    Ok(json!({ "solutions": sols.iter().map(solution_json).collect::<Vec<_>>() }))
                }
                Mode::Path => {
                    let sol = solve_matroid_nd_path(&fr, &d, &c, index).map_err(diag)?;
                    Ok(solution_json(&sol))
                }
            }
        }
        Cmd::SolveVector { input, mode, index } => {
            let file: VectorFile = read_file(&input)?;
            let f = file.orders.family()?;
            let mut colors = BTreeMap::new();
            for (k, v) in &file.colors {
                colors.insert(VertexId::new(k.clone()), rats(v)?);
            }
            let b = rats(&file.b)?;
            let m = match mode {
                Mode::Brute => SolveMode::Brute,
                Mode::Path => SolveMode::Path,
            };
            let sol = solve_vector(&f, &colors, &b, m, index).map_err(diag)?;
            Ok(solution_json(&sol))
        }
        Cmd::SolveHedgehog { input } => {
            let file: MatroidInstanceFile = read_file(&input)?;
            let fr = file.framework()?;
            let d = from_order_family(&file.orders.family()?).map_err(diag)?;
            let sol = solve_hedgehog(&fr, &d, &file.coloring()).map_err(diag)?;
            Ok(solution_json(&sol))
        }
        Cmd::Brouwer {
            oracle,
            n,
            eps,
            max_grid,
        } => {
            let f = builtin_brouwer(&oracle, n + 1).map_err(diag)?;
            let rep = brouwer_approximate(&*f, n + 1, eps, max_grid).map_err(diag)?;
            Ok(report_json(&rep))
        }
        Cmd::Kakutani {
            oracle,
            n,
            eps,
            max_grid,
        } => {
            let f = builtin_kakutani(&oracle, n + 1).map_err(diag)?;
            let rep = kakutani_approximate(&*f, n + 1, eps, max_grid).map_err(diag)?;
            Ok(report_json(&rep))
        }
        Cmd::Freudenthal { n, big_n, count } => {
            let cells = freudenthal(n, big_n).map_err(diag)?;
            if count {
                Ok(json!({ "cells": cells.len() }))
            } else {
                let listed: Vec<Vec<Vec<i64>>> = cells
                    .iter()
                    .map(|cell| cell.iter().cloned().collect())
                    .collect();
                Ok(json!({ "count": listed.len(), "cells": listed }))
            }
        }
        Cmd::Intersect { input } => {
            let file: IntersectFile = read_file(&input)?;
            let c = file.c.chain()?;
            let d = file.d.chain()?;
            let x = intersection_number(&c, &d).map_err(diag)?;
            Ok(json!({ "intersection": x }))
        }
        Cmd::CheckInvariants { seed, mutate } => {
            let reports = suite::run_all(seed, mutate);
            let out = json!({
                "seed": seed,
                "suites": reports.iter().map(|r| json!({
                    "name": r.name,
                    "cases": r.cases,
                    "failures": r.failures,
                })).collect::<Vec<_>>(),
            });
            if reports.iter().all(|r| r.passed()) {
                Ok(out)
            } else {
                Err(out)
            }
        }
    }
}

fn report_json(rep: &scarf::geom::ApproxReport) -> Value {
    json!({
        "point": rep.point.iter().map(rat_to_string).collect::<Vec<_>>(),
        "residual": rep.residual,
        "grid": rep.grid,
        "warning": rep.warning,
        "levels": rep.levels.iter().map(|(k, r)| json!([k, r])).collect::<Vec<_>>(),
    })
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match run(cli) {
        Ok(v) => println!("{v}"),
        Err(v) => {
            println!("{v}");
            std::process::exit(2);
        }
    }
}

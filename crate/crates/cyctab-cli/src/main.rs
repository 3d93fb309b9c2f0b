//! Command-line front end: parse shapes and tableaux, apply the operators,
//! run verification sweeps and orbit censuses, and emit either ASCII
//! tableaux or machine-readable JSON.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyctab::cyclic::{self, orbit, orbit_census, path_lemma_suite, verify_cdm, OrbitSummary};
use cyctab::dynamics::{demote_with_path, promote_with_path, pseudo_promotion_path, Path};
use cyctab::rotation::{rotate, rotate_inverse};
use cyctab::shape::{enumerate_shapes, Cell, ShapeFilter, Side, SkewShape};
use cyctab::special_cases::coincidence_suite;
use cyctab::tableau::{enumerate_syt, DescentSet, Tableau};

#[derive(Parser)]
#[command(
    name = "cyctab",
    version,
    about = "Cyclic descent maps on skew standard Young tableaux"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for verification sweeps.
    #[arg(long, global = true, env = "CYCTAB_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Apply one operator to a tableau.
    Apply {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        tableau: String,
    },
    /// Print the cyclic descent set of a tableau.
    Cdes {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        tableau: String,
    },
    /// Follow the φ-orbit of a tableau, or census all orbits of a shape.
    Orbit {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        tableau: Option<String>,
    },
    /// Exhaustively verify the cyclic-descent-map axioms and related suites.
    Verify {
        /// Check every canonical shape with up to this many cells.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Check one shape instead of sweeping.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Print the cDes fiber multiset of a shape.
    Fibers {
        #[arg(long)]
        shape: String,
    },
    /// List canonical shapes of a given size, or all tableaux of a shape.
    Enumerate {
        #[arg(long)]
        shapes: bool,
        #[arg(long)]
        tableaux: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
    },
    /// Extract a promotion, demotion, or pseudo-promotion path.
    Paths {
        #[arg(long, value_enum)]
        kind: PathKindArg,
        /// Starting cell "ROW,COL" for pseudo-promotion paths.
        #[arg(long)]
        corner: Option<String>,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        tableau: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Phi,
    PhiInverse,
    Promote,
    Demote,
    RotateSe,
    RotateNw,
    RotateSeInverse,
    RotateNwInverse,
    Transpose,
    Reverse,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Axioms,
    Paths,
    Special,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FilterArg {
    All,
    NonRibbon,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathKindArg {
    Promotion,
    Demotion,
    Pseudo,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs;
    let run_it = || match run(&cli) {
        Ok(verification_failed) => {
            if verification_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    };
    match jobs {
        Some(j) if j >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(run_it),
        _ => run_it(),
    }
}

fn parse_shape(text: &str) -> Result<Arc<SkewShape>, String> {
    text.parse::<SkewShape>()
        .map(Arc::new)
        .map_err(|e| e.to_string())
}

fn parse_tableau(text: &str, shape: &Option<String>) -> Result<Tableau, String> {
    let shape = match shape {
        Some(s) => Some(parse_shape(s)?),
        None => None,
    };
    Tableau::parse(text, shape.as_ref()).map_err(|e| e.to_string())
}

fn parse_cell(text: &str) -> Result<Cell, String> {
    let (r, c) = text
        .split_once(',')
        .ok_or_else(|| format!("expected ROW,COL, got {text:?}"))?;
    let row: usize = r.parse().map_err(|_| format!("bad row {r:?}"))?;
    let col: usize = c.parse().map_err(|_| format!("bad column {c:?}"))?;
    if row == 0 || col == 0 {
        return Err("cells are 1-based".into());
    }
    Ok(Cell::new(row, col))
}

fn tableau_json(t: &Tableau) -> Value {
    let shape = t.shape();
    let rows: Vec<Vec<usize>> = (1..=shape.num_rows())
        .map(|r| {
            (1..=shape.lambda().part(r - 1))
                .map(|c| {
                    if c <= shape.mu_padded()[r - 1] {
                        0
                    } else {
                        t.entry_at(Cell::new(r, c))
                    }
                })
                .collect()
        })
        .collect();
    json!({
        "lambda": shape.lambda().parts(),
        "mu": shape.mu().parts(),
        "rows": rows,
    })
}

fn descent_set_json(d: &DescentSet) -> Value {
    json!(d.as_slice())
}

fn ascii_tableau(t: &Tableau) -> String {
    let shape = t.shape();
    let width = t.n().to_string().len();
    let mut out = String::new();
    for r in 1..=shape.num_rows() {
        let mut line = String::new();
        for c in 1..=shape.lambda().part(r - 1) {
            if c > 1 {
                line.push(' ');
            }
            if c <= shape.mu_padded()[r - 1] {
                line.push_str(&" ".repeat(width));
            } else {
                line.push_str(&format!("{:>width$}", t.entry_at(Cell::new(r, c))));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn emit(format: Format, command: &str, inputs: Value, outputs: Value, text: String) {
    match format {
        Format::Text => print!("{text}"),
        Format::Json => {
            let doc = json!({
                "command": command,
                "inputs": inputs,
                "outputs": outputs,
                "diagnostics": {},
            });
            println!("{doc}");
        }
    }
}

fn cell_json(c: Cell) -> Value {
    json!([c.row, c.col])
}

fn path_json(p: &Path) -> Value {
    json!({
        "kind": match p.kind {
            cyctab::dynamics::PathKind::Promotion => "promotion",
            cyctab::dynamics::PathKind::Demotion => "demotion",
            cyctab::dynamics::PathKind::Pseudo => "pseudo",
        },
        "source": cell_json(p.source()),
        "destination": cell_json(p.destination()),
        "cells": p.cells().iter().map(|&c| cell_json(c)).collect::<Vec<_>>(),
    })
}

fn orbit_json(o: &OrbitSummary) -> Value {
    json!({
        "representative": o.representative.to_string(),
        "size": o.size,
        "cdes_period": o.cdes_period,
        "digest": format!("{:016x}", o.trajectory_digest),
    })
}

/// Returns Ok(true) iff a verification command found a counterexample.
fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Apply { op, shape, tableau } => {
            let t = parse_tableau(tableau, shape)?;
            let result = apply_op(*op, &t)?;
            let text = format!("{}\n{}", result, ascii_tableau(&result));
            emit(
                cli.format,
                "apply",
                json!({
                    "op": op_name(*op),
                    "shape": t.shape().to_string(),
                    "tableau": tableau,
                }),
                json!({ "tableau": tableau_json(&result), "text": result.to_string() }),
                text,
            );
            Ok(false)
        }
        Command::Cdes { shape, tableau } => {
            let t = parse_tableau(tableau, shape)?;
            let d = cyclic::cdes(&t).map_err(|e| e.to_string())?;
            emit(
                cli.format,
                "cdes",
                json!({ "shape": t.shape().to_string(), "tableau": tableau }),
                json!({ "cdes": descent_set_json(&d) }),
                format!("{d}\n"),
            );
            Ok(false)
        }
        Command::Orbit { shape, tableau } => match tableau {
            Some(tableau) => {
                let t = parse_tableau(tableau, shape)?;
                let o = orbit(&t).map_err(|e| e.to_string())?;
                emit(
                    cli.format,
                    "orbit",
                    json!({ "shape": t.shape().to_string(), "tableau": tableau }),
                    orbit_json(&o),
                    format!(
                        "size={} period={} digest={:016x}\n",
                        o.size, o.cdes_period, o.trajectory_digest
                    ),
                );
                Ok(false)
            }
            None => {
                let shape = shape
                    .as_ref()
                    .ok_or("orbit needs --tableau, or --shape for a census")?;
                let s = parse_shape(shape)?;
                let orbits = orbit_census(&s).map_err(|e| e.to_string())?;
                let mut sizes: Vec<usize> = orbits.iter().map(|o| o.size).collect();
                sizes.sort_unstable();
                let mut text = String::new();
                for (i, o) in orbits.iter().enumerate() {
                    text.push_str(&format!(
                        "orbit {}: size={} period={} rep={} digest={:016x}\n",
                        i + 1,
                        o.size,
                        o.cdes_period,
                        o.representative,
                        o.trajectory_digest
                    ));
                }
                text.push_str(&format!("orbits={} sizes={sizes:?}\n", orbits.len()));
                emit(
                    cli.format,
                    "orbit",
                    json!({ "shape": s.to_string() }),
                    json!({
                        "orbits": orbits.iter().map(orbit_json).collect::<Vec<_>>(),
                        "sizes": sizes,
                    }),
                    text,
                );
                Ok(false)
            }
        },
        Command::Verify { max_n, shape, suite } => run_verify(cli, *max_n, shape, *suite),
        Command::Fibers { shape } => {
            let s = parse_shape(shape)?;
            let report = verify_cdm(&s);
            if report.rejected_connected_ribbon {
                return Err(format!("shape {s} is a connected ribbon"));
            }
            let mut text = String::new();
            for (j, count) in &report.fiber_multiset {
                text.push_str(&format!("{j}: {count}\n"));
            }
            text.push_str(&format!(
                "fibers={} rotation_invariant={}\n",
                report.fiber_multiset.len(),
                report.fibers_rotation_invariant
            ));
            emit(
                cli.format,
                "fibers",
                json!({ "shape": s.to_string() }),
                json!({
                    "fibers": report
                        .fiber_multiset
                        .iter()
                        .map(|(j, c)| json!({ "cdes": descent_set_json(j), "count": c }))
                        .collect::<Vec<_>>(),
                    "rotation_invariant": report.fibers_rotation_invariant,
                }),
                text,
            );
            Ok(false)
        }
        Command::Enumerate {
            shapes,
            tableaux,
            n,
            shape,
            filter,
        } => {
            if *shapes == *tableaux {
                return Err("enumerate needs exactly one of --shapes or --tableaux".into());
            }
            if *shapes {
                let n = n.ok_or("enumerate --shapes needs --n")?;
                if n == 0 {
                    return Err("--n must be positive".into());
                }
                let filter = match filter {
                    FilterArg::All => ShapeFilter::All,
                    FilterArg::NonRibbon => ShapeFilter::NonRibbon,
                };
                let list = enumerate_shapes(n, filter);
                let text: String = list.iter().map(|s| format!("{s}\n")).collect();
                emit(
                    cli.format,
                    "enumerate",
                    json!({ "n": n, "filter": match filter {
                        ShapeFilter::All => "all",
                        ShapeFilter::NonRibbon => "non-ribbon",
                    } }),
                    json!({
                        "count": list.len(),
                        "shapes": list.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    }),
                    text,
                );
            } else {
                let shape = shape.as_ref().ok_or("enumerate --tableaux needs --shape")?;
                let s = parse_shape(shape)?;
                let list = enumerate_syt(&s);
                let text: String = list.iter().map(|t| format!("{t}\n")).collect();
                emit(
                    cli.format,
                    "enumerate",
                    json!({ "shape": s.to_string() }),
                    json!({
                        "count": list.len(),
                        "tableaux": list.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    }),
                    text,
                );
            }
            Ok(false)
        }
        Command::Paths {
            kind,
            corner,
            shape,
            tableau,
        } => {
            let t = parse_tableau(tableau, shape)?;
            let path = match kind {
                PathKindArg::Promotion => promote_with_path(&t).1,
                PathKindArg::Demotion => demote_with_path(&t).1,
                PathKindArg::Pseudo => {
                    let corner = corner.as_ref().ok_or("pseudo paths need --corner R,C")?;
                    let z = parse_cell(corner)?;
                    pseudo_promotion_path(&t, z).map_err(|e| e.to_string())?
                }
            };
            let cells: Vec<String> = path.cells().iter().map(|c| c.to_string()).collect();
            emit(
                cli.format,
                "paths",
                json!({
                    "kind": kind_name(*kind),
                    "shape": t.shape().to_string(),
                    "tableau": tableau,
                    "corner": corner,
                }),
                path_json(&path),
                format!(
                    "kind={} source={} destination={} cells={}\n",
                    kind_name(*kind),
                    path.source(),
                    path.destination(),
                    cells.join(",")
                ),
            );
            Ok(false)
        }
    }
}

fn op_name(op: Op) -> &'static str {
    match op {
        Op::Phi => "phi",
        Op::PhiInverse => "phi-inverse",
        Op::Promote => "promote",
        Op::Demote => "demote",
        Op::RotateSe => "rotate-se",
        Op::RotateNw => "rotate-nw",
        Op::RotateSeInverse => "rotate-se-inverse",
        Op::RotateNwInverse => "rotate-nw-inverse",
        Op::Transpose => "transpose",
        Op::Reverse => "reverse",
    }
}

fn kind_name(kind: PathKindArg) -> &'static str {
    match kind {
        PathKindArg::Promotion => "promotion",
        PathKindArg::Demotion => "demotion",
        PathKindArg::Pseudo => "pseudo",
    }
}

fn apply_op(op: Op, t: &Tableau) -> Result<Tableau, String> {
    Ok(match op {
        Op::Phi => cyclic::phi(t).map_err(|e| e.to_string())?,
        Op::PhiInverse => cyclic::phi_inverse(t).map_err(|e| e.to_string())?,
        Op::Promote => promote_with_path(t).0,
        Op::Demote => demote_with_path(t).0,
        Op::RotateSe => rotate(t, Side::Se),
        Op::RotateNw => rotate(t, Side::Nw),
        Op::RotateSeInverse => rotate_inverse(t, Side::Se),
        Op::RotateNwInverse => rotate_inverse(t, Side::Nw),
        Op::Transpose => t.transpose(),
        Op::Reverse => t.reverse(),
    })
}

struct VerifyOutcome {
    shapes_checked: usize,
    tableaux: usize,
    skipped_ribbons: usize,
    violations: Vec<String>,
    lines: Vec<String>,
}

fn verify_one(shape: &Arc<SkewShape>, suite: SuiteArg, out: &mut VerifyOutcome) {
    let mut parts: Vec<String> = Vec::new();
    let mut count = 0usize;
    if matches!(suite, SuiteArg::Axioms | SuiteArg::All) {
        let report = verify_cdm(shape);
        count = report.tableau_count;
        let ok = report.all_axioms_ok();
        parts.push(format!("axioms={}", if ok { "ok" } else { "FAIL" }));
        if !ok {
            for c in &report.counterexamples {
                out.violations.push(format!(
                    "{shape}: {:?} violated by {}",
                    c.axiom, c.tableau
                ));
            }
            if !report.fibers_rotation_invariant {
                out.violations
                    .push(format!("{shape}: fiber multiset not rotation-invariant"));
            }
        }
    }
    if matches!(suite, SuiteArg::Paths | SuiteArg::All) {
        let report = path_lemma_suite(shape).expect("ribbons were filtered out");
        count = count.max(report.tableau_count);
        let ok = report.violations.is_empty();
        parts.push(format!("paths={}", if ok { "ok" } else { "FAIL" }));
        for v in &report.violations {
            out.violations
                .push(format!("{shape}: {:?} violated by {}", v.lemma, v.tableau));
        }
    }
    if matches!(suite, SuiteArg::Special | SuiteArg::All) {
        let report = coincidence_suite(shape).expect("ribbons were filtered out");
        count = count.max(report.tableau_count);
        let ok = report.violations.is_empty();
        parts.push(format!("special={}", if ok { "ok" } else { "FAIL" }));
        for v in &report.violations {
            out.violations
                .push(format!("{shape}: {} violated by {}", v.check, v.tableau));
        }
    }
    out.shapes_checked += 1;
    out.tableaux += count;
    out.lines
        .push(format!("shape {shape}: tableaux={count} {}", parts.join(" ")));
}

fn run_verify(
    cli: &Cli,
    max_n: usize,
    shape: &Option<String>,
    suite: SuiteArg,
) -> Result<bool, String> {
    let mut out = VerifyOutcome {
        shapes_checked: 0,
        tableaux: 0,
        skipped_ribbons: 0,
        violations: Vec::new(),
        lines: Vec::new(),
    };
    match shape {
        Some(text) => {
            let s = parse_shape(text)?;
            if s.is_connected_ribbon() {
                return Err(format!(
                    "shape {s} is a connected ribbon; no cyclic descent map exists"
                ));
            }
            verify_one(&s, suite, &mut out);
        }
        None => {
            if max_n == 0 {
                return Err("--max-n must be positive".into());
            }
            for n in 1..=max_n {
                let all = enumerate_shapes(n, ShapeFilter::All);
                for s in all {
                    if s.is_connected_ribbon() {
                        out.skipped_ribbons += 1;
                    } else {
                        verify_one(&s, suite, &mut out);
                    }
                }
            }
        }
    }
    let pass = out.violations.is_empty();
    let mut text = String::new();
    if shape.is_some() {
        for line in &out.lines {
            text.push_str(line);
            text.push('\n');
        }
    }
    text.push_str(&format!(
        "shapes={} tableaux={} skipped_ribbons={}\n",
        out.shapes_checked, out.tableaux, out.skipped_ribbons
    ));
    for v in &out.violations {
        text.push_str(&format!("violation: {v}\n"));
    }
    text.push_str(if pass { "all shapes pass\n" } else { "FAIL\n" });
    emit(
        cli.format,
        "verify",
        json!({
            "max_n": max_n,
            "shape": shape,
            "suite": match suite {
                SuiteArg::Axioms => "axioms",
                SuiteArg::Paths => "paths",
                SuiteArg::Special => "special",
                SuiteArg::All => "all",
            },
        }),
        json!({
            "shapes": out.shapes_checked,
            "tableaux": out.tableaux,
            "skipped_ribbons": out.skipped_ribbons,
            "violations": out.violations,
            "pass": pass,
        }),
        text,
    );
    Ok(!pass)
}

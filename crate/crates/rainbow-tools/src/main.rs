//! `rainbow` — exact rainbow-connection computations on small graphs.
//!
//! Exit codes: 0 success, 1 negative verification, 2 input error,
//! 3 search budget exhausted.

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use rainbow_core::bounds::{self, Applicability, BoundValue, Direction};
use rainbow_core::construct::{build_cycle_bouquet, build_named, NamedKind};
use rainbow_core::enumerate::ConnectedClasses;
use rainbow_core::extremal::{ExtremalError, GraphSource, InternalSource};
use rainbow_core::graph6;
use rainbow_core::solver::{rc_exact, SolverConfig};
use rainbow_core::verify::{check_certificate, is_rainbow_connected, ConnectivityCheck};
use rainbow_core::Graph;
use rainbow_tools::formats::{read_coloring_file, read_graph_file, write_coloring};
use rainbow_tools::report::{self, TndRecord};
use rainbow_tools::runner::{compute_tnd_parallel, Graph6FileSource, RunnerConfig, RunnerError};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Exact rainbow connection numbers, extremal t(n,d) searches, and bound reports on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BudgetArgs {
    /// Assignment budget for the coloring search.
    #[arg(long, env = "RAINBOW_BUDGET", default_value_t = 100_000_000)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact rainbow connection number of one graph.
    Rc {
        /// Graph file: one graph6 line, or an edge list ("n m" then "u v" lines).
        input: Option<PathBuf>,
        /// Inline graph6 instead of a file.
        #[arg(long, conflicts_with = "input")]
        g6: Option<String>,
        /// Largest color count to try (default n-1, always sufficient).
        #[arg(long)]
        kmax: Option<usize>,
        /// Write the witness coloring here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a coloring file against a graph for rainbow connectivity.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Build a named graph and its coloring, writing .g6 and .col files.
    Construct {
        /// One of: gdn (hub-glued cycle bouquet), path, cycle, complete, star.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        /// Target bound for the bouquet (ignored by the other kinds).
        #[arg(long)]
        d: Option<usize>,
        /// Output prefix: writes <prefix>.g6 and <prefix>.col.
        #[arg(long)]
        out_prefix: PathBuf,
    },
    /// Compute t(n,d) exactly, for one cell or a table of ranges.
    Tnd {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Inclusive order range, e.g. 4..7.
        #[arg(long, conflicts_with = "n")]
        n_range: Option<String>,
        /// Inclusive bound range, e.g. 1..6 (clipped to d <= n-1 per cell).
        #[arg(long, conflicts_with = "d")]
        d_range: Option<String>,
        /// graph6 file of connected graphs of order n (single-cell runs).
        #[arg(long)]
        graph6: Option<PathBuf>,
        /// Output format: md, csv, or json.
        #[arg(long, default_value = "md")]
        format: String,
        #[arg(long, env = "RAINBOW_WORKERS", default_value_t = 1)]
        workers: usize,
        /// Progress log enabling interrupted single-cell runs to resume.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Evaluate the closed-form bounds at (n, d).
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Rc {
            input,
            g6,
            kmax,
            out,
            budget,
        } => cmd_rc(input, g6, kmax, out, budget),
        Command::Verify { graph, coloring } => cmd_verify(graph, coloring),
        Command::Construct {
            kind,
            n,
            d,
            out_prefix,
        } => cmd_construct(&kind, n, d, out_prefix),
        Command::Tnd {
            n,
            d,
            n_range,
            d_range,
            graph6,
            format,
            workers,
            checkpoint,
            out,
            budget,
        } => cmd_tnd(
            n, d, n_range, d_range, graph6, &format, workers, checkpoint, out, budget,
        ),
        Command::Bounds { n, d } => cmd_bounds(n, d),
    }
}

fn load_graph(input: Option<PathBuf>, g6: Option<String>) -> anyhow::Result<Graph> {
    match (input, g6) {
        (Some(path), None) => {
            read_graph_file(&path).map_err(|e| anyhow!("{}: {e}", path.display()))
        }
        (None, Some(line)) => graph6::decode(&line).map_err(|e| anyhow!("--g6: {e}")),
        (None, None) => Err(anyhow!("provide a graph file or --g6")),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

fn cmd_rc(
    input: Option<PathBuf>,
    g6: Option<String>,
    kmax: Option<usize>,
    out: Option<PathBuf>,
    budget: BudgetArgs,
) -> anyhow::Result<ExitCode> {
    let g = load_graph(input, g6)?;
    let kmax = kmax.unwrap_or_else(|| (g.n() - 1).max(1));
    let cfg = SolverConfig {
        budget: budget.budget,
    };
    let started = Instant::now();
    let mut result = match rc_exact(&g, kmax, &cfg) {
        Ok(r) => r,
        Err(e @ rainbow_core::solver::SolverError::BudgetExceeded { .. }) => {
            eprintln!("error: {e}");
            return Ok(ExitCode::from(EXIT_BUDGET));
        }
        Err(e) => return Err(anyhow!("{e}")),
    };
    result.stats.elapsed_micros = started.elapsed().as_micros() as u64;
    let diam = g.diameter().expect("solver checked connectivity");
    let bridges = g.bridges().len();
    println!("rc={}", result.rc);
    println!(
        "lower_bound diameter={diam} bridges={bridges} -> {}",
        diam.max(bridges)
    );
    println!(
        "stats assignments={} colorings_tested={} elapsed_micros={}",
        result.stats.assignments, result.stats.colorings_tested, result.stats.elapsed_micros
    );
    let coloring_text = write_coloring(&result.witness);
    match out {
        Some(path) => {
            std::fs::write(&path, coloring_text)
                .with_context(|| format!("writing {}", path.display()))?;
            println!("witness={}", path.display());
        }
        None => print!("{coloring_text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(graph: PathBuf, coloring: PathBuf) -> anyhow::Result<ExitCode> {
    let g = read_graph_file(&graph).map_err(|e| anyhow!("{}: {e}", graph.display()))?;
    let col = read_coloring_file(&coloring).map_err(|e| anyhow!("{}: {e}", coloring.display()))?;
    col.check_total_on(&g)
        .map_err(|e| anyhow!("{}: {e}", coloring.display()))?;
    match is_rainbow_connected(&g, &col).map_err(|e| anyhow!("{e}"))? {
        ConnectivityCheck::RainbowConnected(cert) => {
            check_certificate(&g, &col, &cert)
                .map_err(|e| anyhow!("certificate re-validation failed: {e}"))?;
            println!("VALID paths={}", cert.pair_count());
            Ok(ExitCode::SUCCESS)
        }
        ConnectivityCheck::Obstructed { pair } => {
            println!("INVALID failing_pair=({}, {})", pair.0, pair.1);
            Ok(ExitCode::from(EXIT_NEGATIVE))
        }
    }
}

fn cmd_construct(
    kind: &str,
    n: usize,
    d: Option<usize>,
    out_prefix: PathBuf,
) -> anyhow::Result<ExitCode> {
    let (g, col) = match kind {
        "gdn" => {
            let d = d.ok_or_else(|| anyhow!("--kind gdn requires --d"))?;
            let (g, col, plan) = build_cycle_bouquet(n, d).map_err(|e| anyhow!("{e}"))?;
            let formula = bounds::construction_upper(n, d).map_err(|e| anyhow!("{e}"))?;
            println!(
                "edges={} construction_upper={} {} (q={} pendants={})",
                g.edge_count(),
                formula,
                if g.edge_count() as u64 == formula {
                    "match"
                } else {
                    "MISMATCH"
                },
                plan.q,
                plan.pendant_count
            );
            (g, col)
        }
        named => {
            let kind = match named {
                "path" => NamedKind::Path,
                "cycle" => NamedKind::Cycle,
                "complete" => NamedKind::Complete,
                "star" => NamedKind::Star,
                other => return Err(anyhow!("unknown kind {other:?}")),
            };
            let (g, col) = build_named(kind, n).map_err(|e| anyhow!("{e}"))?;
            println!("edges={}", g.edge_count());
            (g, col)
        }
    };
    let g6_path = out_prefix.with_extension("g6");
    let col_path = out_prefix.with_extension("col");
    std::fs::write(&g6_path, format!("{}\n", graph6::encode(&g)))
        .with_context(|| format!("writing {}", g6_path.display()))?;
    std::fs::write(&col_path, write_coloring(&col))
        .with_context(|| format!("writing {}", col_path.display()))?;
    println!("wrote {} and {}", g6_path.display(), col_path.display());
    Ok(ExitCode::SUCCESS)
}

fn parse_range(text: &str) -> anyhow::Result<(usize, usize)> {
    let parts: Vec<&str> = if text.contains("..") {
        text.splitn(2, "..").collect()
    } else {
        text.splitn(2, ':').collect()
    };
    if parts.len() == 2 {
        let lo = parts[0].trim().parse()?;
        let hi = parts[1].trim().parse()?;
        return Ok((lo, hi));
    }
    let v = text.trim().parse()?;
    Ok((v, v))
}

#[allow(clippy::too_many_arguments)]
fn cmd_tnd(
    n: Option<usize>,
    d: Option<usize>,
    n_range: Option<String>,
    d_range: Option<String>,
    graph6_file: Option<PathBuf>,
    format: &str,
    workers: usize,
    checkpoint: Option<PathBuf>,
    out: Option<PathBuf>,
    budget: BudgetArgs,
) -> anyhow::Result<ExitCode> {
    if !matches!(format, "md" | "csv" | "json") {
        return Err(anyhow!("--format must be md, csv, or json"));
    }
    let cfg = RunnerConfig {
        workers: workers.max(1),
        solver: SolverConfig {
            budget: budget.budget,
        },
        checkpoint,
        ..RunnerConfig::default()
    };
    let single = match (n, d, &n_range, &d_range) {
        (Some(n), Some(d), None, None) => Some((n, d)),
        (None, None, _, _) if n_range.is_some() || d_range.is_some() => None,
        _ => {
            return Err(anyhow!(
                "provide --n and --d for one cell, or --n-range/--d-range for a table"
            ));
        }
    };

    let rendered = match single {
        Some((n, d)) => {
            let mut classes = ConnectedClasses::new();
            let mut file_source;
            let mut internal_source;
            let source: &mut dyn GraphSource = match &graph6_file {
                Some(path) => {
                    file_source = Graph6FileSource::new(path.clone(), n);
                    &mut file_source
                }
                None => {
                    internal_source = InternalSource::new(n, &mut classes);
                    &mut internal_source
                }
            };
            let result = match compute_tnd_parallel(n, d, source, &cfg) {
                Ok(r) => r,
                Err(RunnerError::Extremal(ExtremalError::BudgetExceeded {
                    assignments,
                    tallies,
                })) => {
                    eprintln!("budget exhausted after {assignments} assignments; partial tallies:");
                    for t in &tallies {
                        eprintln!(
                            "  m={} classes={} searched={} (filters: diam={} bridges={} deg={})",
                            t.m,
                            t.classes,
                            t.searched,
                            t.filtered_diameter,
                            t.filtered_bridges,
                            t.filtered_degree
                        );
                    }
                    return Ok(ExitCode::from(EXIT_BUDGET));
                }
                Err(e) => return Err(anyhow!("{e}")),
            };
            let record = TndRecord::from(&result);
            match format {
                "json" => report::to_json(&record),
                _ => {
                    let sandwich = bounds::sandwich_check(n, d, result.t_value as u64);
                    let status = match sandwich {
                        Ok(s) if s.pass() => "within-bounds".to_string(),
                        Ok(_) => "BOUND-VIOLATION".to_string(),
                        Err(_) => "n/a".to_string(),
                    };
                    let mut text = format!(
                        "t({n},{d}) = {}\nwitness {}\nstatus {status}\n",
                        result.t_value, record.witness_graph6
                    );
                    if format == "csv" {
                        text = format!(
                            "n,d,t,witness,status\n{n},{d},{},{},{status}\n",
                            result.t_value, record.witness_graph6
                        );
                    }
                    text
                }
            }
        }
        None => {
            if graph6_file.is_some() {
                return Err(anyhow!("--graph6 applies to single-cell runs (--n/--d)"));
            }
            if cfg.checkpoint.is_some() {
                return Err(anyhow!(
                    "--checkpoint applies to single-cell runs (--n/--d)"
                ));
            }
            let nr = parse_range(n_range.as_deref().unwrap_or("2..7"))?;
            let dr = parse_range(d_range.as_deref().unwrap_or("1..8"))?;
            let mut classes = ConnectedClasses::new();
            let cells = rainbow_core::extremal::tnd_table(nr, dr, &mut classes, &cfg.solver);
            match format {
                "json" => report::table_json(&cells),
                "csv" => report::table_csv(&cells),
                _ => report::table_markdown(&cells),
            }
        }
    };
    match out {
        Some(path) => std::fs::write(&path, rendered)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(n: usize, d: usize) -> anyhow::Result<ExitCode> {
    let report = bounds::bound_report(n, d).map_err(|e| anyhow!("{e}"))?;
    println!("bounds for t({n},{d}):");
    for entry in &report.entries {
        let direction = match entry.direction {
            Direction::Lower => "lower",
            Direction::Upper => "upper",
            Direction::Exact => "exact",
        };
        let status = match entry.applicability {
            Applicability::Valid => "",
            Applicability::Vacuous => " [vacuous]",
            Applicability::OutOfRange => " [out-of-range]",
        };
        match entry.value {
            BoundValue::Edges(v) if entry.applicability == Applicability::OutOfRange => {
                let _ = v;
                println!("  {:28} {direction}{status}", entry.name);
            }
            value => println!("  {:28} {direction} {value}{status}", entry.name),
        }
    }
    Ok(ExitCode::SUCCESS)
}

//! rvdkit: compute, verify, and construct rainbow vertex-disconnection
//! colorings from the command line.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 on success (or
//! a valid coloring), 1 when a verification fails, a cut is absent, or the
//! audit finds a violation, 2 on usage or input errors.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use rvdkit_core::audit::{audit, AuditOptions};
use rvdkit_core::coloring::VertexColoring;
use rvdkit_core::enumerate::connected_representatives;
use rvdkit_core::extremal::{gen_clique_chain, gen_gk, gen_h, gen_triangle_blocks, size_bounds};
use rvdkit_core::families::{family_coloring, family_value, wheel_graph, FamilySpec};
use rvdkit_core::graph::{parse_graph, Graph, GraphFormat};
use rvdkit_core::graph6;
use rvdkit_core::rainbow::{find_rainbow_cut, verify_coloring, CutCertificate, Verification};
use rvdkit_core::solver::{rvd_exact_with, SolverOptions, DEFAULT_CAP};

#[derive(Parser)]
#[command(
    name = "rvdkit",
    version,
    about = "Rainbow vertex-disconnection colorings: exact values, verification, \
             families, extremal sizes, and exhaustive audits"
)]
struct Cli {
    /// Machine-readable JSON on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// One `u v` pair per line; `#` starts a comment.
    Edges,
    /// One graph6 string.
    Graph6,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, or `-` for stdin.
    #[arg(value_name = "GRAPH")]
    path: String,
    /// Input format.
    #[arg(long, value_enum, default_value_t = Format::Edges)]
    format: Format,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        let text = read_input(&self.path)?;
        let format = match self.format {
            Format::Edges => GraphFormat::EdgeList,
            Format::Graph6 => GraphFormat::Graph6,
        };
        parse_graph(&text, format)
            .with_context(|| format!("failed to parse graph from `{}`", self.path))
    }
}

#[derive(Args)]
struct ColoringInput {
    /// Coloring file with `vertex color` lines, or `-` for stdin.
    #[arg(long, value_name = "FILE", conflicts_with = "colors")]
    coloring: Option<String>,
    /// Inline colors by vertex index, e.g. `1,1,2,2`.
    #[arg(long, value_name = "LIST")]
    colors: Option<String>,
}

impl ColoringInput {
    fn load(&self, n: usize) -> Result<VertexColoring> {
        let coloring = match (&self.coloring, &self.colors) {
            (Some(path), None) => {
                let text = read_input(path)?;
                VertexColoring::parse(&text)
                    .with_context(|| format!("failed to parse coloring from `{path}`"))?
            }
            (None, Some(list)) => {
                let colors = list
                    .split(|ch: char| ch == ',' || ch.is_whitespace())
                    .filter(|tok| !tok.is_empty())
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| anyhow!("bad color {tok:?} in --colors"))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                VertexColoring::new(colors).context("bad --colors list")?
            }
            _ => bail!("provide a coloring with --coloring FILE or --colors LIST"),
        };
        if coloring.len() != n {
            bail!(
                "coloring covers {} vertices but the graph has {n}",
                coloring.len()
            );
        }
        Ok(coloring)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact rvd value with a verified witness coloring.
    Rvd {
        #[command(flatten)]
        input: GraphInput,
        /// Largest search component (block) the solver will attempt.
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
        /// Include one rainbow-cut certificate per vertex pair.
        #[arg(long)]
        certificates: bool,
    },
    /// Check a proposed coloring; exits 1 when some pair has no rainbow cut.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        coloring: ColoringInput,
        /// Print one rainbow-cut certificate per vertex pair.
        #[arg(long)]
        certificates: bool,
    },
    /// Find a rainbow cut for one vertex pair; exits 1 when none exists.
    Cut {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        coloring: ColoringInput,
        /// Vertex pair `x,y`.
        #[arg(long, value_name = "X,Y")]
        pair: String,
    },
    /// Closed-form value and verified coloring for a named family instance.
    Family {
        /// Descriptor: `tree:n=9`, `cycle:n=6`, `complete:n=5`, `wheel:n=8`,
        /// or `kpartite:1,2,3`.
        descriptor: String,
    },
    /// Edge-count bounds by value at a given order, with witness graphs.
    Extremal {
        /// Graph order (≥ 4 for the closed-form bounds).
        #[arg(long)]
        order: usize,
        /// Restrict to a single value k; default covers 1 ..= order.
        #[arg(long)]
        value: Option<usize>,
        /// Also print graph6 witnesses attaining the bounds.
        #[arg(long)]
        witness: bool,
    },
    /// Check every implemented law against exhaustively enumerated graphs.
    Audit {
        /// Largest order enumerated (≤ 7).
        #[arg(long, default_value_t = 6, value_name = "N")]
        n_max: usize,
        /// Run only the named check; repeatable. Defaults to all checks.
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
        /// Wall-clock budget per check, in seconds; an expired check is
        /// reported as skipped, never as passed.
        #[arg(long, value_name = "SECONDS")]
        budget: Option<f64>,
        /// Solver cap override.
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
        /// Seed for sampled-coloring checks; overrides RVDKIT_SEED.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Stream connected graphs of order n, one graph6 line per isomorphism
    /// class (n ≤ 7).
    Enumerate {
        #[arg(value_name = "N")]
        n: usize,
    },
}

/// Print to stdout, exiting quietly when the reader has gone away (broken
/// pipe, e.g. `rvdkit enumerate 7 | head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut stdout = std::io::stdout().lock();
        if let Err(e) = writeln!(stdout, $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            eprintln!("rvdkit: failed to write stdout: {e}");
            std::process::exit(2);
        }
    }};
}

/// Like [`out!`] but without the trailing newline (for pre-formatted blocks).
macro_rules! out_raw {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut stdout = std::io::stdout().lock();
        if let Err(e) = write!(stdout, $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            eprintln!("rvdkit: failed to write stdout: {e}");
            std::process::exit(2);
        }
    }};
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("failed to read stdin")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("failed to read `{path}`"))
    }
}

fn cert_line(c: &CutCertificate) -> String {
    let cut: Vec<String> = c.cut.iter().map(ToString::to_string).collect();
    let mut line = format!("pair ({}, {}): cut [{}]", c.x, c.y, cut.join(", "));
    if let Some(v) = c.witness {
        line.push_str(&format!(" with endpoint {v}"));
    }
    line
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // Ignore the error: the pool can only be initialized once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("rvdkit: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Rvd { input, cap, certificates } => {
            let g = input.load()?;
            let opts = SolverOptions { cap: cap.unwrap_or(DEFAULT_CAP) };
            let r = rvd_exact_with(&g, opts)?;
            if cli.json {
                let mut obj = json!({
                    "value": r.value,
                    "lower_bound_reason": r.lower_bound_reason,
                    "witness": r.witness.colors(),
                });
                if *certificates {
                    obj["certificates"] = serde_json::to_value(&r.certificates)?;
                }
                out!("{obj}");
            } else {
                out!("rvd = {}", r.value);
                out!("coloring:");
                out_raw!("{}", r.witness.to_text());
                if *certificates {
                    for c in &r.certificates {
                        out!("{}", cert_line(c));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { input, coloring, certificates } => {
            let g = input.load()?;
            let c = coloring.load(g.n())?;
            match verify_coloring(&g, &c)? {
                Verification::Valid(certs) => {
                    if cli.json {
                        let mut obj = json!({ "valid": true });
                        if *certificates {
                            obj["certificates"] = serde_json::to_value(&certs)?;
                        }
                        out!("{obj}");
                    } else {
                        out!("valid");
                        if *certificates {
                            for cert in &certs {
                                out!("{}", cert_line(cert));
                            }
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Verification::Invalid { x, y } => {
                    if cli.json {
                        out!("{}", json!({ "valid": false, "pair": [x, y] }));
                    } else {
                        out!("invalid: pair ({x}, {y}) has no rainbow vertex cut");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Cut { input, coloring, pair } => {
            let g = input.load()?;
            let c = coloring.load(g.n())?;
            let (x, y) = parse_pair(pair, g.n())?;
            match find_rainbow_cut(&g, &c, x, y)? {
                Some(cert) => {
                    if cli.json {
                        let mut obj = serde_json::to_value(&cert)?;
                        obj["found"] = json!(true);
                        out!("{obj}");
                    } else {
                        out!("{}", cert_line(&cert));
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    if cli.json {
                        out!("{}", json!({ "found": false, "pair": [x, y] }));
                    } else {
                        out!("no rainbow cut for pair ({x}, {y})");
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Family { descriptor } => {
            let spec = FamilySpec::parse(descriptor)?;
            let value = family_value(&spec)?;
            let (g, c) = family_coloring(&spec)?;
            let g6 = graph6::encode(&g).ok();
            if cli.json {
                out!(
                    "{}",
                    json!({
                        "descriptor": spec.describe(),
                        "order": g.n(),
                        "size": g.m(),
                        "value": value,
                        "coloring": c.colors(),
                        "graph6": g6,
                    })
                );
            } else {
                out!("{} (order {}, size {}): rvd = {value}", spec.describe(), g.n(), g.m());
                if let Some(g6) = g6 {
                    out!("graph6: {g6}");
                }
                out!("coloring:");
                out_raw!("{}", c.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extremal { order, value, witness } => {
            cmd_extremal(cli, *order, *value, *witness)
        }
        Command::Audit { n_max, checks, budget, cap, seed } => {
            let mut opts = AuditOptions { n_max: *n_max, ..AuditOptions::default() };
            if let Some(cap) = cap {
                opts.cap = *cap;
            }
            if let Some(seed) = seed {
                opts.seed = *seed;
            }
            if let Some(secs) = budget {
                if !secs.is_finite() || *secs < 0.0 {
                    bail!("--budget must be a non-negative number of seconds");
                }
                opts.budget = Some(Duration::from_secs_f64(*secs));
            }
            if !checks.is_empty() {
                opts.selection = Some(checks.iter().cloned().collect::<BTreeSet<_>>());
            }
            let report = audit(&opts)?;
            if cli.json {
                out!("{}", serde_json::to_string(&report)?);
            } else {
                out_raw!("{}", report.to_text());
            }
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Enumerate { n } => {
            let reps = connected_representatives(*n)?;
            let lines = reps
                .iter()
                .map(|g| graph6::encode(g).context("graph6 encoding failed"))
                .collect::<Result<Vec<String>>>()?;
            if cli.json {
                out!("{}", json!({ "n": n, "count": lines.len(), "graphs": lines }));
            } else {
                for line in lines {
                    out!("{line}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_pair(s: &str, n: usize) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("--pair expects `x,y`, got {s:?}"))?;
    let x: usize = a.trim().parse().map_err(|_| anyhow!("bad vertex {a:?}"))?;
    let y: usize = b.trim().parse().map_err(|_| anyhow!("bad vertex {b:?}"))?;
    if x >= n || y >= n {
        bail!("pair ({x}, {y}) out of range for a graph on {n} vertices");
    }
    if x == y {
        bail!("--pair needs two distinct vertices");
    }
    Ok((x, y))
}

fn cmd_extremal(cli: &Cli, order: usize, value: Option<usize>, witness: bool) -> Result<ExitCode> {
    let ks: Vec<usize> = match value {
        Some(k) => vec![k],
        None => (1..=order).collect(),
    };
    let mut rows = Vec::new();
    for k in ks {
        let b = size_bounds(order, k)?;
        let min_witness = if witness {
            let g = if k == order {
                gen_h(order)?
            } else {
                gen_gk(order, k)?.0
            };
            Some(graph6::encode(&g)?)
        } else {
            None
        };
        let max_witness = if witness { max_witness_graph6(order, k)? } else { None };
        rows.push((b, min_witness, max_witness));
    }
    if cli.json {
        let rows: Vec<serde_json::Value> = rows
            .iter()
            .map(|(b, min_w, max_w)| {
                json!({
                    "value": b.k,
                    "min_size": b.min_size,
                    "max_size_lower": b.max_size_lower,
                    "max_size_upper": b.max_size_upper,
                    "min_witness": min_w,
                    "max_witness": max_w,
                })
            })
            .collect();
        out!("{}", json!({ "order": order, "rows": rows }));
    } else {
        out!("order {order}: edge counts attainable at each rvd value");
        for (b, min_w, max_w) in &rows {
            if b.max_size_lower == b.max_size_upper {
                out!("k={}: min {}, max {}", b.k, b.min_size, b.max_size_upper);
            } else {
                out!(
                    "k={}: min {}, max in [{}, {}]",
                    b.k, b.min_size, b.max_size_lower, b.max_size_upper
                );
            }
            if let Some(w) = min_w {
                out!("  min witness: {w}");
            }
            if let Some(w) = max_w {
                out!("  max witness: {w}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Witness attaining the maximum size (k ≤ 3) or its interval lower bound
/// (k ≥ 4), where one is known.
fn max_witness_graph6(n: usize, k: usize) -> Result<Option<String>> {
    let g = match k {
        1 => None,
        2 => Some(gen_triangle_blocks(n)?),
        3 => {
            if (n - 1) % 4 == 0 {
                Some(wheel_graph(n - 1)?)
            } else {
                None
            }
        }
        _ if k <= n => Some(gen_clique_chain(n, k)?),
        _ => None,
    };
    Ok(match g {
        Some(g) => Some(graph6::encode(&g)?),
        None => None,
    })
}

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spx_core::canonical::canonical_form;
use spx_core::complexity::{boundary_count_with, cv_verdict_with, manifold_complexity, Assertions};
use spx_core::complexity::{BoundaryCount, ComplexityVerdict, VerdictKind};
use spx_core::epsilon::epsilon_invariant;
use spx_core::generators::{
    bipyramid_spine, family_ograph, family_spine, ograph_to_spine, triangulation_export,
    triangulation_import,
};
use spx_core::io::{parse_ograph, parse_spine_parts, parse_tri, write_ograph, write_spine, write_tri};
use spx_core::moves::{apply_t, apply_t_inverse, MoveSite};
use spx_core::polyhedron::validate_parts;
use spx_core::search::search_equivalents;
use spx_core::subcomplex::enumerate_simple_subpolyhedra;
use spx_core::tv::{tv_report, TVContext};
use spx_core::{SpecialPolyhedron, Stratification};

#[derive(Parser)]
#[command(name = "spx", version, about = "Special polyhedra, their invariants and complexity verdicts")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
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
    /// Check gluing data and report every problem found.
    Validate { file: PathBuf },
    /// Vertices, 2-components, boundary curves, Euler characteristic.
    Info { file: PathBuf },
    /// Simple subpolyhedra made of closed 2-components.
    Subpolyhedra { file: PathBuf },
    /// Exact ε-invariant in Z[ε].
    Epsilon { file: PathBuf },
    /// Turaev–Viro state sum.
    Tv {
        file: PathBuf,
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u32).range(3..))]
        r: u32,
        /// Tolerance for symbol checks.
        #[arg(long, default_value_t = 1e-9, value_parser = positive)]
        tol: f64,
        /// Print every admissible coloring with its weight.
        #[arg(long)]
        list_colorings: bool,
        /// Use q = exp(iπ·ROOT/r).
        #[arg(long, default_value_t = 1)]
        root: u32,
    },
    /// Apply T or T⁻¹ and print the resulting polyhedron.
    Move {
        #[command(subcommand)]
        kind: MoveKind,
    },
    /// Bounded exploration of polyhedra reachable by T and T⁻¹.
    Search {
        file: PathBuf,
        /// Allow at most this many vertices above the start.
        #[arg(long, default_value_t = 2)]
        max_extra: usize,
        /// Stop after recording this many distinct polyhedra.
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
        /// Write a smallest polyhedron found here.
        #[arg(long)]
        emit_min: Option<PathBuf>,
    },
    /// Complexity verdicts for the virtual manifold and, for manifold spines, for M.
    Complexity {
        file: PathBuf,
        /// Take on trust that M is hyperbolic with totally geodesic boundary.
        #[arg(long)]
        assert_hyperbolic: bool,
    },
    /// Generate example polyhedra.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Convert between `.spine`, `.tri` and `.ograph`.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum MoveKind {
    T {
        file: PathBuf,
        #[arg(long)]
        edge: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Tinv {
        file: PathBuf,
        #[arg(long)]
        component: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Spine P_{n,k} of the n-gonal bipyramid with twist k.
    Bipyramid {
        n: usize,
        k: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Spine P_{5+4s} of the block family, or its o-graph with `--ograph`.
    Family {
        s: usize,
        #[arg(long)]
        ograph: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dual spine of a `.tri` face pairing.
    FromTriangulation {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Spine,
    Tri,
}

fn positive(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("expected a positive number, found `{s}`")),
    }
}

/// Contents and display name; `-` reads stdin.
fn read_input(path: &Path) -> Result<(String, String)> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
        Ok((text, "<stdin>".to_string()))
    } else {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))?;
        Ok((text, path.display().to_string()))
    }
}

fn header(text: &str) -> Option<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
}

/// Any of the three formats, recognized by header.
fn load(path: &Path) -> Result<SpecialPolyhedron> {
    let (text, name) = read_input(path)?;
    let p = match header(&text) {
        Some(h) if h.starts_with("tri") => triangulation_import(&parse_tri(&text, &name)?)?,
        Some(h) if h.starts_with("ograph") => ograph_to_spine(&parse_ograph(&text, &name)?)?,
        _ => spx_core::io::parse_spine(&text, &name)?,
    };
    Ok(p)
}

fn emit_text(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) if path != Path::new("-") => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        _ => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn print_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn complex(z: spx_core::tv::Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn fmt_complex(z: spx_core::tv::Complex64) -> String {
    format!("{:.12} {} {:.12}i", z.re, if z.im < 0.0 { '-' } else { '+' }, z.im.abs())
}

fn verdict_text(v: &ComplexityVerdict) -> String {
    let value = match v.kind {
        VerdictKind::Exact { value } => format!("{value}"),
        VerdictKind::Range { lo, hi } => format!("in [{lo}, {hi}]"),
    };
    let mut out = format!("{value} (rules: {})", v.rule_tags().join(", "));
    if !v.assertions_used.is_empty() {
        out.push_str(&format!("; assumed: {}", v.assertions_used.join(", ")));
    }
    out
}

fn b_text(b: BoundaryCount) -> String {
    match b {
        BoundaryCount::Exact { b } => format!("{b}"),
        BoundaryCount::DefaultLowerBound { b } => format!(">= {b} (not computed)"),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Validate { file } => {
            let (text, name) = read_input(&file)?;
            let (n, gluings) = parse_spine_parts(&text, &name)?;
            let report = validate_parts(n, &gluings);
            if json {
                print_json(&serde_json::to_value(&report)?)?;
            } else {
                let status = if report.valid { "valid" } else { "invalid" };
                println!("{name}: {status}, {} vertices, {} edges", report.vertex_count, report.edge_count);
                if let Some(d) = report.component_count {
                    println!("2-components: {d}");
                }
                for issue in &report.issues {
                    println!("error: {issue}");
                }
                for w in &report.warnings {
                    println!("warning: {w}");
                }
            }
            return Ok(if report.valid { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Command::Info { file } => {
            let p = load(&file)?;
            let st = Stratification::new(&p);
            let b = boundary_count_with(&p, &st);
            if json {
                let mut v = st.to_json(&p);
                v["boundary_components"] = serde_json::to_value(b)?;
                v["canonical_form"] = json!(canonical_form(&p).to_hex());
                print_json(&v)?;
            } else {
                let n = p.vertex_count();
                let d = st.component_count();
                if let Some(name) = p.name() {
                    println!("name: {name}");
                }
                println!("vertices: {n}");
                println!("edges: {}", p.edge_count());
                println!("2-components: {d}");
                println!("euler characteristic: {}", d as i64 - n as i64);
                println!("orientable: {}", p.is_orientable());
                println!("boundary components: {}", b_text(b));
                for c in &st.components {
                    let cv = &c.curve;
                    let visits: Vec<String> =
                        cv.vertex_multiplicity.iter().map(|(v, m)| format!("{v}x{m}")).collect();
                    println!(
                        "component {}: curve length {}, vertices [{}], {}, normal bundle {}",
                        c.id,
                        cv.len(),
                        visits.join(" "),
                        if cv.is_short { "short" } else { "not short" },
                        match cv.normal_bundle {
                            spx_core::NormalBundle::Trivial => "trivial",
                            spx_core::NormalBundle::NonTrivial => "nontrivial",
                        }
                    );
                }
            }
        }
        Command::Subpolyhedra { file } => {
            let p = load(&file)?;
            let all = enumerate_simple_subpolyhedra(&p);
            if json {
                print_json(&serde_json::to_value(&all)?)?;
            } else {
                println!("{} simple subpolyhedra ({} proper)", all.len(), all.len() - 2);
                for q in &all {
                    println!(
                        "{{{}}}: k0={} k1={} chi={} V={}",
                        q.components.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
                        q.k0,
                        q.k1,
                        q.chi,
                        q.true_vertices
                    );
                }
            }
        }
        Command::Epsilon { file } => {
            let p = load(&file)?;
            let t = epsilon_invariant(&p);
            if json {
                print_json(&json!({
                    "a": t.a.to_string(),
                    "b": t.b.to_string(),
                    "text": t.to_string(),
                    "value": t.to_f64(),
                }))?;
            } else {
                println!("t = {t} ~ {:.12}", t.to_f64());
            }
        }
        Command::Tv { file, r, tol, list_colorings, root } => {
            let p = load(&file)?;
            let mut ctx = TVContext::with_root(r, root)?;
            ctx.tolerance = tol;
            let report = tv_report(&p, &ctx);
            if json {
                print_json(&json!({
                    "r": report.r,
                    "root": root,
                    "colorings": report.colorings,
                    "weights": report.weights.iter().map(|w| complex(*w)).collect::<Vec<_>>(),
                    "invariant": complex(report.invariant),
                }))?;
            } else {
                println!("r = {r}, {} admissible colorings", report.colorings.len());
                if list_colorings {
                    for (c, w) in report.colorings.iter().zip(&report.weights) {
                        let colors: Vec<String> = c.0.iter().map(|x| x.to_string()).collect();
                        println!("({}): {}", colors.join(","), fmt_complex(*w));
                    }
                }
                println!("tv = {}", fmt_complex(report.invariant));
            }
        }
        Command::Move { kind } => {
            let (p, site, output) = match kind {
                MoveKind::T { file, edge, output } => (load(&file)?, MoveSite::T { edge }, output),
                MoveKind::Tinv { file, component, output } => {
                    (load(&file)?, MoveSite::TInverse { component }, output)
                }
            };
            let q = match site {
                MoveSite::T { .. } => apply_t(&p, site)?,
                MoveSite::TInverse { .. } => apply_t_inverse(&p, site)?,
            };
            emit_text(output.as_deref(), &write_spine(&q))?;
        }
        Command::Search { file, max_extra, budget, emit_min } => {
            let p = load(&file)?;
            let report = search_equivalents(&p, p.vertex_count() + max_extra, budget);
            if let (Some(path), Some(q)) = (emit_min, &report.min_example) {
                emit_text(Some(&path), &write_spine(q))?;
            }
            if json {
                let mut v = serde_json::to_value(&report)?;
                v["visited"] = json!(report.visited());
                print_json(&v)?;
            } else {
                println!(
                    "visited {} polyhedra in {} levels{}",
                    report.visited(),
                    report.levels,
                    if report.truncated { " (budget reached)" } else { "" }
                );
                for (n, count) in &report.by_vertex_count {
                    println!("  {n} vertices: {count}");
                }
                println!("fewest vertices reached: {}", report.min_vertices);
            }
        }
        Command::Complexity { file, assert_hyperbolic } => {
            let p = load(&file)?;
            let st = Stratification::new(&p);
            let cv = cv_verdict_with(&p, &st);
            let assertions = Assertions { hyperbolic_geodesic_boundary: assert_hyperbolic };
            let manifold = if st.nontrivial_count() == 0 {
                Some(manifold_complexity(&p, assertions)?)
            } else if assert_hyperbolic {
                bail!("not a manifold spine: some boundary curve has a nontrivial normal bundle");
            } else {
                None
            };
            if json {
                print_json(&json!({ "cv": cv, "manifold": manifold }))?;
            } else {
                println!("cv[P] = {}", verdict_text(&cv));
                println!("b = {}", b_text(cv.b_used));
                match &manifold {
                    Some(m) => println!("c(M) = {}", verdict_text(m)),
                    None => println!("c(M): not a manifold spine"),
                }
            }
        }
        Command::Gen { kind } => match kind {
            GenKind::Bipyramid { n, k, output } => {
                emit_text(output.as_deref(), &write_spine(&bipyramid_spine(n, k)?))?;
            }
            GenKind::Family { s, ograph, output } => {
                let text = if ograph {
                    write_ograph(&family_ograph(s))
                } else {
                    write_spine(&family_spine(s)?)
                };
                emit_text(output.as_deref(), &text)?;
            }
            GenKind::FromTriangulation { file, output } => {
                let (text, name) = read_input(&file)?;
                let p = triangulation_import(&parse_tri(&text, &name)?)?;
                emit_text(output.as_deref(), &write_spine(&p))?;
            }
        },
        Command::Convert { file, to, output } => {
            let p = load(&file)?;
            let text = match to {
                Target::Spine => write_spine(&p),
                Target::Tri => write_tri(&triangulation_export(&p)?),
            };
            emit_text(output.as_deref(), &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(threads) = std::env::var("SPX_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

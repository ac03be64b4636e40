//! `cq` — crossed-cube topology and orbit toolkit.
//!
//! Subcommands: `gen` writes a cube's edge list or DOT rendering, `orbits`
//! computes orbit partitions by one or all methods, `p4` emits the derived
//! P4 graph of a neighborhood with its K4 verdict, and `verify` replays the
//! whole invariant suite over a dimension range.
//!
//! Exit codes: 0 all good, 1 a verification check failed, 2 usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crossed_cubes::bitaddress::{MAX_BUILD_DIM, MAX_DIM};
use crossed_cubes::orbits::{
    closure_orbits, exact_orbits_detailed, exact_orbits_parity_seeded, naive_orbits, render_report,
    signature_partition, OrbitMethod, OrbitPartition, DEFAULT_EXACT_CAP, NAIVE_CAP,
};
use crossed_cubes::p4::neighborhood_p4;
use crossed_cubes::topology::{build_cq, build_hypercube, CubeGraph};
use crossed_cubes::{automorphism::generator_set, bitaddress::Vertex};

mod verify;

#[derive(Parser)]
#[command(
    name = "cq",
    version,
    about = "crossed-cube topology and orbit toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a cube's edge list or DOT rendering
    Gen(GenArgs),
    /// Compute vertex-orbit partitions and print orbit reports
    Orbits(OrbitsArgs),
    /// Emit the P4 graph of a vertex neighborhood with its K4 verdict
    P4(P4Args),
    /// Replay the invariant suite over a dimension range
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Crossed,
    Hypercube,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Edges,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closure,
    Exact,
    Signature,
    Naive,
    All,
}

#[derive(Args)]
struct GenArgs {
    /// Cube family
    #[arg(long, value_enum, default_value_t = KindArg::Crossed)]
    kind: KindArg,
    /// Dimension, 1..=20
    #[arg(long)]
    n: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Edges)]
    format: FormatArg,
    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OrbitsArgs {
    /// Dimension, 3..=28 for signature, 3..=20 for the other methods
    #[arg(long)]
    n: usize,
    /// Orbit computation method; `all` cross-checks every applicable one
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    method: MethodArg,
    /// Vertex cap for the exact solver
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    exact_cap: usize,
    /// Seed the exact solver with the structural parity classifier
    #[arg(long)]
    seed_parity: bool,
    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct P4Args {
    /// Dimension, 5..=20
    #[arg(long)]
    n: usize,
    /// Neighborhood center vertex
    #[arg(long)]
    vertex: Vertex,
    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Edges)]
    format: FormatArg,
    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Lowest dimension to verify
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    /// Highest dimension to verify
    #[arg(long, default_value_t = 6)]
    n_max: usize,
    /// Verify a single dimension (overrides --n-min/--n-max)
    #[arg(long)]
    n: Option<usize>,
    /// Run the exact orbit solver where the cube fits under the cap
    #[arg(long)]
    exact: bool,
    /// Vertex cap for the exact solver
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    exact_cap: usize,
    /// Only run the checks for one numbered statement (1..=15)
    #[arg(long)]
    lemma: Option<u32>,
    /// Worker threads for the per-dimension fan-out
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen(args) => cmd_gen(&args).map(|()| true),
        Command::Orbits(args) => cmd_orbits(&args),
        Command::P4(args) => cmd_p4(&args).map(|()| true),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn build(kind: KindArg, n: usize) -> Result<CubeGraph> {
    let built = match kind {
        KindArg::Crossed => build_cq(n),
        KindArg::Hypercube => build_hypercube(n),
    };
    Ok(built?)
}

fn cmd_gen(args: &GenArgs) -> Result<()> {
    let g = build(args.kind, args.n)?;
    let content = match args.format {
        FormatArg::Edges => g.to_edge_list(),
        FormatArg::Dot => g.to_dot(),
    };
    emit(args.out.as_ref(), &content)
}

fn cmd_p4(args: &P4Args) -> Result<()> {
    if args.n < 5 {
        bail!("--n must be at least 5: the K4 verdict is only meaningful from dimension 5 up");
    }
    let g = build_cq(args.n)?;
    if (args.vertex as usize) >= g.vertex_count() {
        bail!("--vertex {} out of range for n={}", args.vertex, args.n);
    }
    let h = neighborhood_p4(&g, args.vertex);
    let content = match args.format {
        FormatArg::Edges => h.to_edge_list(),
        FormatArg::Dot => h.to_dot(),
    };
    emit(args.out.as_ref(), &content)
}

/// Streamed signature report for dimensions too big to materialize the
/// partition: block representatives are the signature bits spread over the
/// even positions, block sizes are uniform.
fn streamed_signature_report(n: usize) -> String {
    let width = n.div_ceil(2) - 2;
    let mut out = String::new();
    let _ = writeln!(out, "n={n}");
    let _ = writeln!(out, "method=signature");
    let _ = writeln!(out, "orbit_count={}", 1u64 << width);
    for s in 0..1u64 << width {
        let mut rep = 0u64;
        let mut sig = String::new();
        for i in 0..width {
            let b = (s >> i) & 1;
            rep |= b << (2 * i);
            let _ = write!(sig, "{b}");
        }
        if sig.is_empty() {
            sig.push('-');
        }
        let _ = writeln!(
            out,
            "block size={} rep={} sig={}",
            1u64 << (n - width),
            rep,
            sig
        );
    }
    out
}

fn cmd_orbits(args: &OrbitsArgs) -> Result<bool> {
    let n = args.n;
    if n < 3 {
        bail!("--n must be at least 3");
    }
    let method_max = if args.method == MethodArg::Signature {
        MAX_DIM
    } else {
        MAX_BUILD_DIM
    };
    if n > method_max {
        bail!("--n {n} over the cap of {method_max} for this method");
    }

    if args.method == MethodArg::Signature && n > MAX_BUILD_DIM {
        return emit(args.out.as_ref(), &streamed_signature_report(n)).map(|()| true);
    }

    let size = 1usize << n;
    let mut sections: Vec<(OrbitMethod, OrbitPartition)> = Vec::new();
    let wants = |m: MethodArg| args.method == m || args.method == MethodArg::All;

    if wants(MethodArg::Closure) {
        sections.push((OrbitMethod::Closure, closure_orbits(&generator_set(n)?)));
    }
    if wants(MethodArg::Exact) {
        let fits = size <= args.exact_cap;
        if !fits && args.method == MethodArg::Exact {
            bail!(
                "2^{n} vertices over the exact solver cap of {}",
                args.exact_cap
            );
        }
        if fits {
            let g = build_cq(n)?;
            let found = if args.seed_parity {
                exact_orbits_parity_seeded(&g, args.exact_cap)?
            } else {
                exact_orbits_detailed(g.graph(), args.exact_cap, None)?
            };
            sections.push((OrbitMethod::Exact, found.partition));
        }
    }
    if wants(MethodArg::Signature) {
        sections.push((OrbitMethod::Signature, signature_partition(n)?));
    }
    if wants(MethodArg::Naive) {
        let fits = size <= NAIVE_CAP;
        if !fits && args.method == MethodArg::Naive {
            bail!("2^{n} vertices over the naive solver cap of {NAIVE_CAP}");
        }
        if fits {
            sections.push((OrbitMethod::Naive, naive_orbits(build_cq(n)?.graph())?));
        }
    }

    let mut content = String::new();
    for (i, (method, partition)) in sections.iter().enumerate() {
        if i > 0 {
            content.push('\n');
        }
        content.push_str(&render_report(n, *method, partition));
    }
    let mut pass = true;
    if args.method == MethodArg::All {
        pass = sections.windows(2).all(|w| w[0].1 == w[1].1);
        content.push('\n');
        let _ = writeln!(content, "crosscheck={}", if pass { "PASS" } else { "FAIL" });
    }
    emit(args.out.as_ref(), &content)?;
    Ok(pass)
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool> {
    let (n_min, n_max) = match args.n {
        Some(n) => (n, n),
        None => (args.n_min, args.n_max),
    };
    if n_min < 3 || n_max > MAX_BUILD_DIM || n_min > n_max {
        bail!("dimension range {n_min}..={n_max} invalid; need 3 <= n-min <= n-max <= {MAX_BUILD_DIM}");
    }
    if let Some(lemma) = args.lemma {
        if !(1..=15).contains(&lemma) {
            bail!("--lemma {lemma} out of range 1..=15");
        }
    }
    if args.threads == 0 {
        bail!("--threads must be positive");
    }
    let options = verify::Options {
        n_min,
        n_max,
        exact: args.exact,
        exact_cap: args.exact_cap,
        lemma: args.lemma,
        threads: args.threads,
    };
    let outcome = verify::run(&options)?;
    emit(args.out.as_ref(), &outcome.report)?;
    Ok(outcome.all_pass)
}

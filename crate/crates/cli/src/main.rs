//! Command line front end: solve, verify, and generate instances.
//!
//! Exit codes: 0 solvable/verified, 1 unsolvable/failed (the verdict
//! document is still written), 2 input or usage errors. Documents go to
//! standard output or `--out`; diagnostics go to standard error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use orthocut_core::foldcut::{unfold_generate, GenParams};
use orthocut_core::formats::{
    parse_instance, parse_solution, serialize_instance, serialize_solution, InstanceDocument, Kind,
};
use orthocut_core::rational::Rational;
use orthocut_core::registry::Registry;
use orthocut_core::svg::render_svg;

#[derive(Parser)]
#[command(
    name = "orthocut",
    about = "Exact solver for orthogonal fold & cut and its 1D and punch variants",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance document of any kind.
    Solve {
        /// Instance JSON file.
        input: PathBuf,
        /// Write the solution document here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also render the instance and solution to an SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Re-check a solution document against its instance.
    Verify {
        /// Instance JSON file.
        instance: PathBuf,
        /// Solution JSON file.
        solution: PathBuf,
    },
    /// Solve a fold & punch instance.
    Punch {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Solve a 1D instance of the given variant.
    Oned {
        variant: OnedVariant,
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Generate a solvable fold & cut instance by unfolding.
    Gen {
        /// Seed for the pinned splitmix64 stream.
        #[arg(long)]
        seed: u64,
        /// Number of vertical creases to unfold.
        #[arg(long)]
        kx: usize,
        /// Number of horizontal creases to unfold.
        #[arg(long)]
        ky: usize,
        /// Folded rectangle size as WIDTHxHEIGHT, e.g. 3x4 or 3/2x2.
        #[arg(long)]
        folded: String,
        /// Write the instance document here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OnedVariant {
    Unsigned,
    Signed,
    Interval,
}

impl OnedVariant {
    fn kind(self) -> Kind {
        match self {
            OnedVariant::Unsigned => Kind::OnedUnsigned,
            OnedVariant::Signed => Kind::OnedSigned,
            OnedVariant::Interval => Kind::OnedInterval,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve { input, out, svg } => solve_command(&input, None, out, svg),
        Command::Punch { input, out, svg } => solve_command(&input, Some(Kind::Punch), out, svg),
        Command::Oned {
            variant,
            input,
            out,
            svg,
        } => solve_command(&input, Some(variant.kind()), out, svg),
        Command::Verify { instance, solution } => verify_command(&instance, &solution),
        Command::Gen {
            seed,
            kx,
            ky,
            folded,
            out,
        } => gen_command(seed, kx, ky, &folded, out),
    }
}

fn read_instance(path: &Path) -> Result<InstanceDocument> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_instance(&bytes).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .context("cannot write to standard output")?;
        }
    }
    Ok(())
}

fn solve_command(
    input: &Path,
    expected_kind: Option<Kind>,
    out: Option<PathBuf>,
    svg: Option<PathBuf>,
) -> Result<u8> {
    let instance = read_instance(input)?;
    if let Some(expected) = expected_kind {
        if instance.kind() != expected {
            bail!(
                "{}: expected a {expected} instance, found {}",
                input.display(),
                instance.kind()
            );
        }
    }
    let registry = Registry::builtin();
    let solution = registry
        .solve(&instance)
        .context("solver dispatch failed")?;
    emit(&serialize_solution(&solution), out.as_deref())?;
    if let Some(svg_path) = svg {
        let rendered = render_svg(&instance, Some(&solution));
        fs::write(&svg_path, rendered)
            .with_context(|| format!("cannot write {}", svg_path.display()))?;
    }
    if solution.is_solvable() {
        Ok(0)
    } else {
        eprintln!("unsolvable: see the verdict document for the witness");
        Ok(1)
    }
}

fn verify_command(instance_path: &Path, solution_path: &Path) -> Result<u8> {
    let instance = read_instance(instance_path)?;
    let bytes = fs::read(solution_path)
        .with_context(|| format!("cannot read {}", solution_path.display()))?;
    let solution =
        parse_solution(&bytes).map_err(|e| anyhow!("{}: {e}", solution_path.display()))?;
    if solution.kind() != instance.kind() {
        bail!(
            "solution kind {} does not match instance kind {}",
            solution.kind(),
            instance.kind()
        );
    }
    let report = Registry::builtin()
        .verify(&instance, &solution)
        .context("verifier dispatch failed")?;
    println!(
        "{{\"verified\":{},\"detail\":{}}}",
        report.verified,
        json_string(&report.detail)
    );
    Ok(if report.verified { 0 } else { 1 })
}

/// Minimal JSON string escaping for the verify report.
fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn gen_command(seed: u64, kx: usize, ky: usize, folded: &str, out: Option<PathBuf>) -> Result<u8> {
    let (width, height) = parse_folded_size(folded)?;
    let params = GenParams {
        creases_x: kx,
        creases_y: ky,
        folded_width: width,
        folded_height: height,
        line_offset: None,
        slope: None,
    };
    let generated =
        unfold_generate(seed, &params).map_err(|e| anyhow!("generation failed: {e}"))?;
    let doc = InstanceDocument::Foldcut(generated.instance);
    emit(&serialize_instance(&doc), out.as_deref())?;
    Ok(0)
}

fn parse_folded_size(s: &str) -> Result<(Rational, Rational)> {
    let (w, h) = s
        .split_once('x')
        .ok_or_else(|| anyhow!("--folded expects WIDTHxHEIGHT, got {s:?}"))?;
    let width: Rational = w
        .parse()
        .map_err(|e| anyhow!("--folded width {w:?}: {e}"))?;
    let height: Rational = h
        .parse()
        .map_err(|e| anyhow!("--folded height {h:?}: {e}"))?;
    Ok((width, height))
}

//! `curvegaps`: Weierstrass semigroups, pure gaps, and AG-code
//! parameters for two towers of maximal curves, with machine-readable
//! output and a built-in verification harness.

mod cmds;
mod envelope;
mod errs;
mod fixtures;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::envelope::Envelope;
use crate::errs::CliError;

#[derive(Parser)]
#[command(
    name = "curvegaps",
    version,
    about = "Exact semigroup, pure-gap, and code-parameter queries on two maximal curve families"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json, env = "CURVEGAPS_FORMAT")]
    pub format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, env = "CURVEGAPS_OUT")]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Curve invariants and one-point semigroup generators.
    CurveInfo(CurveInfoArgs),
    /// Minimal generating set of the (m+1)-point semigroup inside a box.
    Gamma(GammaArgs),
    /// Pure-gap membership checks and closed-form families.
    Puregaps(PuregapsArgs),
    /// AG-code parameters from pure gaps or an explicit divisor.
    Code(CodeArgs),
    /// Re-run the verification suites; exits 3 on any mismatch.
    Verify(VerifyArgs),
}

/// Curve selection, shared by every query command.
#[derive(Args)]
pub struct CurveArgs {
    /// Curve family: X or Y.
    #[arg(long)]
    pub family: String,
    /// Characteristic (family X).
    #[arg(long)]
    pub p: Option<u64>,
    /// Exponent with q = p^a (family X).
    #[arg(long)]
    pub a: Option<u32>,
    /// Subfield exponent; must divide a (family X).
    #[arg(long)]
    pub b: Option<u32>,
    /// Tower level; odd and at least 3.
    #[arg(long)]
    pub n: u32,
    /// Field size q (family Y).
    #[arg(long)]
    pub q: Option<u64>,
    /// Divisor of (q^n + 1)/(q + 1).
    #[arg(long, default_value_t = 1)]
    pub s: u64,
}

#[derive(Args)]
pub struct CurveInfoArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
}

#[derive(Args)]
pub struct GammaArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Number of affine places (vectors have arity m + 1).
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    /// Per-axis inclusive bounds, comma-separated. Default: conductor - 1
    /// on each axis, which encloses the complete generating set.
    #[arg(long)]
    pub bound: Option<String>,
    /// Print at most this many elements.
    #[arg(long, env = "CURVEGAPS_LIMIT")]
    pub limit: Option<usize>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum PureOp {
    /// Decide whether --at is a pure gap at --points.
    Check,
    /// ((q^2/p^b - m)(q^n + 1) - k q^3, k, ..., k, k - 1) at (Pinf, P1..Pm).
    KFamily,
    /// (alpha, 1, ..., 1) at (Pinf, P1..Pm).
    AlphaOnes,
    /// Two affine places (P1, P2).
    PairAffine,
    /// (Pinf, P1) pairs indexed by alpha.
    PairInfty,
}

#[derive(Args)]
pub struct PuregapsArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    #[arg(long, value_enum)]
    pub op: PureOp,
    /// Number of affine places (k-family, alpha-ones).
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub alpha: Option<u64>,
    #[arg(long)]
    pub beta: Option<u64>,
    /// Candidate vector for check, comma-separated.
    #[arg(long)]
    pub at: Option<String>,
    /// Places for check: `inf` or an affine index, comma-separated.
    #[arg(long)]
    pub points: Option<String>,
}

#[derive(Args)]
pub struct CodeArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
    /// Pure-gap vector used as both endpoints of the coefficient range.
    #[arg(long)]
    pub pure_gap: Option<String>,
    /// Lower pure-gap vector, comma-separated.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Upper pure-gap vector, comma-separated.
    #[arg(long)]
    pub beta: Option<String>,
    /// Support places: `inf` or an affine index, comma-separated.
    #[arg(long)]
    pub points: Option<String>,
    /// Explicit divisor as place:coefficient pairs, e.g. inf:461,1:3.
    #[arg(long)]
    pub goppa: Option<String>,
    /// Attach an externally computed true distance as an annotation;
    /// never merged into the derived bound.
    #[arg(long)]
    pub annotate_external_d: Option<u64>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Replay the committed example fixtures byte for byte.
    #[arg(long)]
    pub examples: bool,
    /// Closed forms against oracles over both auxiliary family grids.
    #[arg(long)]
    pub grids: bool,
    /// One-point semigroup genus agreement on the reference curves.
    #[arg(long)]
    pub one_point: bool,
    /// Pure-gap families and reference code parameters.
    #[arg(long)]
    pub families: bool,
    /// Skip grid tuples whose conductor exceeds this cap.
    #[arg(long, env = "CURVEGAPS_MAX_CONDUCTOR")]
    pub max_conductor: Option<u128>,
    /// Worker threads for the grid scan; results merge deterministically.
    #[arg(long, default_value_t = 1, env = "CURVEGAPS_THREADS")]
    pub threads: usize,
    /// Largest N in the (P, N, K) grid scan.
    #[arg(long, default_value_t = 60)]
    pub spnk_max_n: u64,
}

/// Runs a parsed command; every command yields an envelope plus the
/// process exit status (verify reports mismatches through it).
pub fn execute(cmd: &Cmd) -> Result<(Envelope, u8), CliError> {
    match cmd {
        Cmd::CurveInfo(args) => cmds::curve_info(args).map(|e| (e, 0)),
        Cmd::Gamma(args) => cmds::gamma(args).map(|e| (e, 0)),
        Cmd::Puregaps(args) => cmds::puregaps(args).map(|e| (e, 0)),
        Cmd::Code(args) => cmds::code(args).map(|e| (e, 0)),
        Cmd::Verify(args) => verify::run(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.cmd) {
        Ok((env, exit)) => {
            let rendered = env.render(cli.format == Format::Text);
            let written = match &cli.out {
                Some(path) => std::fs::write(path, rendered.as_bytes()).map_err(|e| {
                    CliError::validation("io", format!("cannot write {}: {e}", path.display()))
                }),
                None => std::io::stdout()
                    .write_all(rendered.as_bytes())
                    .map_err(|e| CliError::validation("io", e.to_string())),
            };
            if let Err(e) = written {
                eprint!("{}", e.render_json());
                return ExitCode::from(e.exit);
            }
            ExitCode::from(exit)
        }
        Err(e) => {
            eprint!("{}", e.render_json());
            ExitCode::from(e.exit)
        }
    }
}

//! Command-line front end: `smooth`, `texture` and `quantize`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{Prior, SmootherConfig};
use crate::error::{Error, Result};
use crate::guidance::gaussian_blur;
use crate::image::ImageBuffer;
use crate::imgio::{read_pnm, write_pnm};
use crate::potential::Potential;
use crate::reweighted::{firl1, firls};
use crate::smoother::smooth;
use crate::trace::SolverTrace;
use crate::weights::{compute_weights, uniform_weights};

/// Standard deviation of the blur that builds texture-mode guidance.
const TEXTURE_BLUR_SIGMA: f64 = 2.0;

#[derive(Debug, Parser)]
#[command(name = "splitsmooth", version, about = "Edge-preserving global image smoothing")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Smooth with a WLS or WTV prior and guidance weights.
    Smooth(SmoothArgs),
    /// Remove small-scale texture with a Welsch potential.
    Texture(TextureArgs),
    /// Flatten colours with a sparse log prior.
    Quantize(QuantizeArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PriorArg {
    Wls,
    Wtv,
}

#[derive(Debug, Args)]
struct Io {
    /// Input PGM/PPM.
    #[arg(long)]
    input: PathBuf,
    /// Output PGM/PPM.
    #[arg(long)]
    output: PathBuf,
    /// Write a per-iteration CSV trace here.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SmoothArgs {
    #[command(flatten)]
    io: Io,
    /// Guidance image; defaults to the input.
    #[arg(long)]
    guidance: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "wls")]
    prior: PriorArg,
    #[arg(long, default_value_t = 400.0)]
    lambda: f64,
    #[arg(long, default_value_t = 7.65)]
    kappa: f64,
    #[arg(long, default_value_t = 4.0)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long, default_value_t = 5)]
    iters: usize,
}

#[derive(Debug, Args)]
struct TextureArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long)]
    lambda: f64,
    /// Welsch scale.
    #[arg(long, default_value_t = 7.65)]
    sigma: f64,
    #[arg(long, default_value_t = 5.0)]
    kappa: f64,
    /// Outer re-weighting iterations.
    #[arg(long = "K", default_value_t = 5)]
    outer: usize,
    /// Inner smoothing iterations.
    #[arg(long = "T", default_value_t = 5)]
    inner: usize,
}

#[derive(Debug, Args)]
struct QuantizeArgs {
    #[command(flatten)]
    io: Io,
    #[arg(long)]
    lambda: f64,
    #[arg(long = "K", default_value_t = 5)]
    outer: usize,
    #[arg(long = "T", default_value_t = 5)]
    inner: usize,
}

/// Parses `args` (program name first), runs the command and maps errors to
/// exit codes: 1 for IO and decoding, 2 for bad parameters or usage.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code().clamp(0, 255) as u8);
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parameter(_) | Error::DimensionMismatch(_) => 2,
        _ => 1,
    }
}

fn execute(cmd: Command) -> Result<()> {
    match cmd {
        Command::Smooth(a) => {
            let f = load(&a.io.input)?;
            let g = match &a.guidance {
                Some(p) => load(p)?,
                None => f.clone(),
            };
            let w = compute_weights(&g, a.kappa)?;
            let cfg = SmootherConfig {
                lambda: a.lambda,
                kappa: a.kappa,
                alpha: a.alpha,
                beta1: a.beta,
                iters_t: a.iters,
                prior: match a.prior {
                    PriorArg::Wls => Prior::Wls,
                    PriorArg::Wtv => Prior::Wtv,
                },
                ..SmootherConfig::default()
            };
            let (u, trace) = smooth(&f, &w, &cfg)?;
            finish(&a.io, &u, &trace)
        }
        Command::Texture(a) => {
            let f = load(&a.io.input)?;
            let pot = Potential::welsch(a.sigma)?;
            let g = gaussian_blur(&f, TEXTURE_BLUR_SIGMA)?;
            let w = compute_weights(&g, a.kappa)?;
            let cfg = SmootherConfig {
                lambda: a.lambda,
                kappa: a.kappa,
                iters_t: a.inner,
                iters_k: a.outer,
                prior: Prior::Firls(pot),
                ..SmootherConfig::default()
            };
            let (u, trace) = firls(&f, &w, &cfg, &pot)?;
            finish(&a.io, &u, &trace)
        }
        Command::Quantize(a) => {
            let f = load(&a.io.input)?;
            let w = uniform_weights(f.width(), f.height())?;
            let cfg = SmootherConfig {
                lambda: a.lambda,
                iters_t: a.inner,
                iters_k: a.outer,
                prior: Prior::Firl1(Potential::LogAbs),
                ..SmootherConfig::default()
            };
            let (u, trace) = firl1(&f, &w, &cfg, &Potential::LogAbs)?;
            finish(&a.io, &u, &trace)
        }
    }
}

fn load(path: &Path) -> Result<ImageBuffer> {
    read_pnm(&std::fs::read(path)?)
}

fn finish(io: &Io, u: &ImageBuffer, trace: &SolverTrace) -> Result<()> {
    std::fs::write(&io.output, write_pnm(u))?;
    if let Some(path) = &io.trace {
        std::fs::write(path, trace.to_csv())?;
    }
    Ok(())
}

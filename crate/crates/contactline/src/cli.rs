//! Command-line surface.
//!
//! Five subcommands expose the library: `scatter` (transmission/reflection
//! or identical-pair exchange amplitudes), `spectrum` (box levels), `flow`
//! (spectral continuation around closed eigenphase loops), `decompose`
//! (canonical coordinates of an interaction), and `duality-check`
//! (kinematic and statistics dualities on a wavenumber grid).
//!
//! Output is deterministic: fixed row ordering, 12-significant-digit
//! shortest decimal formatting, `\n` line endings. Formats are CSV
//! (default), JSON, and — for `scatter` sweeps and `flow` traces — a
//! self-contained SVG plot. The environment variable `CONTACTLINE_L0`
//! overrides the default length scale of the connection condition.
//!
//! Exit codes: 0 on success (including a FAIL verdict from
//! `duality-check`, which is a result, not an error), 2 on argument
//! errors, 1 on computational errors with the error name on stderr.

use crate::scattering::{
    check_kinematic_duality, check_statistics_duality, default_k_grid, logspace,
    scatter_exchange, scatter_single, ContactInteraction, DualityReport, ScatteringResult,
    Statistics,
};
use crate::spectral::{solve_spectrum, solve_spectrum_angles, trace_flow, BoxConfig, FlowTrace};
use crate::u2_algebra::{eigen_decompose, SpectralCoordinates, TransferMatrix, UnitaryU2};
use clap::{Parser, Subcommand, ValueEnum};
use std::f64::consts::TAU;
use std::path::PathBuf;

/// Contact interactions on a line: scattering, box spectra, spectral flow.
#[derive(Parser, Debug)]
#[command(name = "contactline", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Transmission/reflection (or exchange amplitude) over wavenumbers
    Scatter(ScatterArgs),
    /// Box levels of an interaction or an explicit eigenphase pair
    Spectrum(SpectrumArgs),
    /// Carry the box spectrum around a closed eigenphase loop
    Flow(FlowArgs),
    /// Canonical eigenphase/sphere coordinates of an interaction
    Decompose(DecomposeArgs),
    /// Verify the kinematic or statistics duality on a wavenumber grid
    #[command(name = "duality-check")]
    DualityCheck(DualityArgs),
}

/// One interaction, in exactly one of the five accepted forms.
#[derive(clap::Args, Debug, Default)]
struct InteractionArgs {
    /// Derivative-jump defect of this strength
    #[arg(long, value_name = "V", allow_negative_numbers = true)]
    delta: Option<f64>,
    /// Value-jump defect of this strength
    #[arg(long, value_name = "U", allow_negative_numbers = true)]
    epsilon: Option<f64>,
    /// Transfer form: LAMBDA S T U V (with S T - U V = 1)
    #[arg(long, num_args = 5, value_name = "X", allow_negative_numbers = true)]
    transfer: Option<Vec<f64>>,
    /// Unitary matrix entries: RE00 IM00 RE01 IM01 RE10 IM10 RE11 IM11
    #[arg(long, num_args = 8, value_name = "X", allow_negative_numbers = true)]
    unitary: Option<Vec<f64>>,
    /// Canonical coordinates: THETA_PLUS THETA_MINUS MU NU
    #[arg(long, num_args = 4, value_name = "X", allow_negative_numbers = true)]
    spectral: Option<Vec<f64>>,
}

impl InteractionArgs {
    fn count(&self) -> usize {
        [
            self.delta.is_some(),
            self.epsilon.is_some(),
            self.transfer.is_some(),
            self.unitary.is_some(),
            self.spectral.is_some(),
        ]
        .iter()
        .filter(|p| **p)
        .count()
    }

    fn build(&self) -> Result<ContactInteraction, CliError> {
        if self.count() != 1 {
            return Err(CliError::Usage(
                "exactly one of --delta, --epsilon, --transfer, --unitary, --spectral must be given"
                    .into(),
            ));
        }
        if let Some(v) = self.delta {
            return Ok(ContactInteraction::delta(v));
        }
        if let Some(u) = self.epsilon {
            return Ok(ContactInteraction::epsilon(u));
        }
        if let Some(x) = &self.transfer {
            let lam = TransferMatrix::new(x[0], x[1], x[2], x[3], x[4])
                .map_err(|e| CliError::Compute(e.to_string()))?;
            return Ok(ContactInteraction::Transfer(lam));
        }
        if let Some(x) = &self.unitary {
            let arr: [f64; 8] = x.as_slice().try_into().expect("clap enforces 8 values");
            let u = UnitaryU2::from_components(arr)
                .map_err(|e| CliError::Compute(e.to_string()))?;
            return Ok(ContactInteraction::Unitary(u));
        }
        let x = self.spectral.as_ref().expect("one form present");
        let sc = SpectralCoordinates {
            theta_plus: x[0],
            theta_minus: x[1],
            mu: x[2],
            nu: x[3],
            degenerate: false,
        };
        Ok(ContactInteraction::Unitary(sc.reconstruct()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(clap::Args, Debug)]
struct OutputArgs {
    /// Write to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StatArg {
    Boson,
    Fermion,
}

impl From<StatArg> for Statistics {
    fn from(s: StatArg) -> Statistics {
        match s {
            StatArg::Boson => Statistics::Boson,
            StatArg::Fermion => Statistics::Fermion,
        }
    }
}

#[derive(clap::Args, Debug)]
struct ScatterArgs {
    #[command(flatten)]
    interaction: InteractionArgs,
    /// Single wavenumber
    #[arg(long, value_name = "K", conflicts_with = "kgrid")]
    k: Option<f64>,
    /// Log-spaced wavenumber grid: LO HI COUNT
    #[arg(long, num_args = 3, value_names = ["LO", "HI", "COUNT"])]
    kgrid: Option<Vec<f64>>,
    /// Exchange amplitude of an identical pair instead of T/R
    #[arg(long, value_enum, value_name = "STATISTICS")]
    exchange: Option<StatArg>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(clap::Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    interaction: InteractionArgs,
    /// Explicit eigenphase pair THETA_PLUS THETA_MINUS (radians)
    #[arg(long, num_args = 2, value_name = "THETA", allow_negative_numbers = true)]
    theta: Option<Vec<f64>>,
    /// Box half-length
    #[arg(long, default_value_t = 1.0)]
    l: f64,
    /// Upper end of the wavenumber window
    #[arg(long)]
    kmax: f64,
    /// Scan points per pi/l of wavenumber
    #[arg(long, default_value_t = 16)]
    density: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LoopKind {
    /// Wind the plus eigenphase once, minus fixed
    WindPlus,
    /// Wind the minus eigenphase once, plus fixed
    WindMinus,
    /// Wind both eigenphases together
    WindBoth,
    /// A closed circle that winds neither eigenphase
    Contractible,
}

#[derive(clap::Args, Debug)]
struct FlowArgs {
    /// Loop to traverse in the eigenphase torus
    #[arg(long = "loop", value_enum)]
    loop_kind: LoopKind,
    /// Base point THETA_PLUS THETA_MINUS of the loop (radians)
    #[arg(long, num_args = 2, value_name = "THETA", allow_negative_numbers = true,
          default_values_t = [0.0, 0.0])]
    base: Vec<f64>,
    /// Radius of the contractible circle
    #[arg(long, default_value_t = 0.8)]
    amplitude: f64,
    /// Box half-length
    #[arg(long, default_value_t = 1.0)]
    l: f64,
    /// Upper end of the wavenumber window
    #[arg(long)]
    kmax: f64,
    /// Scan points per pi/l of wavenumber
    #[arg(long, default_value_t = 16)]
    density: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(clap::Args, Debug)]
struct DecomposeArgs {
    #[command(flatten)]
    interaction: InteractionArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(clap::Args, Debug)]
struct DualityArgs {
    /// Check the exchange-statistics duality (needs --u)
    #[arg(long)]
    statistics: bool,
    /// Check the kinematic k <-> 1/k duality (needs --v and --u)
    #[arg(long)]
    kinematic: bool,
    /// Value-jump strength
    #[arg(long, allow_negative_numbers = true)]
    u: Option<f64>,
    /// Derivative-jump strength
    #[arg(long, allow_negative_numbers = true)]
    v: Option<f64>,
    /// Log-spaced wavenumber grid: LO HI COUNT
    #[arg(long, num_args = 3, value_names = ["LO", "HI", "COUNT"])]
    kgrid: Option<Vec<f64>>,
    /// Write the report line to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    /// Bad arguments or environment; exits 2.
    Usage(String),
    /// A computation or I/O step failed; exits 1.
    Compute(String),
}

/// Parses argv, runs the requested command, and returns the process exit
/// code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Compute(msg)) => {
            eprintln!("{msg}");
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    let l0 = env_l0()?;
    match &cli.command {
        Command::Scatter(a) => {
            let content = run_scatter(a, l0)?;
            write_output(&a.out.output, &content)
        }
        Command::Spectrum(a) => {
            let content = run_spectrum(a, l0)?;
            write_output(&a.out.output, &content)
        }
        Command::Flow(a) => {
            let content = run_flow(a, l0)?;
            write_output(&a.out.output, &content)
        }
        Command::Decompose(a) => {
            let content = run_decompose(a, l0)?;
            write_output(&a.out.output, &content)
        }
        Command::DualityCheck(a) => {
            let content = run_duality(a)?;
            write_output(&a.output, &content)
        }
    }
}

/// Length scale of the connection condition, overridable via the
/// `CONTACTLINE_L0` environment variable.
fn env_l0() -> Result<f64, CliError> {
    match std::env::var("CONTACTLINE_L0") {
        Err(std::env::VarError::NotPresent) => Ok(1.0),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(CliError::Usage("CONTACTLINE_L0 must be valid UTF-8".into()))
        }
        Ok(s) => s
            .trim()
            .parse::<f64>()
            .ok()
            .filter(|x| x.is_finite() && *x > 0.0)
            .ok_or_else(|| {
                CliError::Usage(format!("CONTACTLINE_L0 must be a positive number, got {s:?}"))
            }),
    }
}

fn write_output(path: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Compute(format!("Io: {e} ({})", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// Formats with at most 12 significant digits, shortest form: fixed
/// notation for decimal exponents in [-4, 12), exponential otherwise,
/// trailing zeros trimmed.
fn fmt_g12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let sci = format!("{:.11e}", x);
    let (mant, exp) = sci.split_once('e').expect("exponential format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(char::is_ascii_digit).collect();
    let digits = digits.trim_end_matches('0');
    if digits.is_empty() {
        return "0".to_string();
    }
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    if (-4..12).contains(&exp) {
        if exp >= 0 {
            let ip = exp as usize + 1;
            if digits.len() > ip {
                s.push_str(&digits[..ip]);
                s.push('.');
                s.push_str(&digits[ip..]);
            } else {
                s.push_str(digits);
                s.push_str(&"0".repeat(ip - digits.len()));
            }
        } else {
            s.push_str("0.");
            s.push_str(&"0".repeat((-exp - 1) as usize));
            s.push_str(digits);
        }
    } else {
        s.push_str(&digits[..1]);
        if digits.len() > 1 {
            s.push('.');
            s.push_str(&digits[1..]);
        }
        s.push('e');
        s.push_str(&exp.to_string());
    }
    s
}

/// Expands `--k` / `--kgrid` / default into a wavenumber list.
fn wavenumbers(k: Option<f64>, kgrid: &Option<Vec<f64>>) -> Result<Vec<f64>, CliError> {
    if let Some(k) = k {
        return Ok(vec![k]);
    }
    if let Some(g) = kgrid {
        let (lo, hi, n) = (g[0], g[1], g[2]);
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && hi > lo) {
            return Err(CliError::Usage(
                "--kgrid endpoints must be finite, positive, and increasing".into(),
            ));
        }
        if n.fract() != 0.0 || n < 1.0 || n > 1e6 {
            return Err(CliError::Usage("--kgrid COUNT must be a positive integer".into()));
        }
        return Ok(logspace(lo, hi, n as usize));
    }
    Ok(default_k_grid())
}

fn run_scatter(a: &ScatterArgs, l0: f64) -> Result<String, CliError> {
    let interaction = a.interaction.build()?;
    let ks = wavenumbers(a.k, &a.kgrid)?;
    if let Some(stat) = a.exchange {
        if a.out.format == Format::Svg {
            return Err(CliError::Usage("--format svg is not available with --exchange".into()));
        }
        let mut rows = Vec::with_capacity(ks.len());
        for &k in &ks {
            let ex = scatter_exchange(&interaction, stat.into(), k, l0)
                .map_err(|e| CliError::Compute(e.to_string()))?;
            rows.push(ex);
        }
        return Ok(match a.out.format {
            Format::Csv => {
                let mut out = String::from("k,re_C,im_C\n");
                for ex in &rows {
                    out.push_str(&format!(
                        "{},{},{}\n",
                        fmt_g12(ex.k),
                        fmt_g12(ex.c.re),
                        fmt_g12(ex.c.im)
                    ));
                }
                out
            }
            Format::Json => {
                let rows: Vec<serde_json::Value> = rows
                    .iter()
                    .map(|ex| {
                        serde_json::json!({ "k": ex.k, "re_C": ex.c.re, "im_C": ex.c.im })
                    })
                    .collect();
                format!("{}\n", serde_json::json!({ "rows": rows }))
            }
            Format::Svg => unreachable!("rejected above"),
        });
    }
    let mut rows = Vec::with_capacity(ks.len());
    for &k in &ks {
        let sc = scatter_single(&interaction, k, l0)
            .map_err(|e| CliError::Compute(e.to_string()))?;
        rows.push(sc);
    }
    Ok(match a.out.format {
        Format::Csv => {
            let mut out = String::from("k,T,R\n");
            for sc in &rows {
                out.push_str(&format!(
                    "{},{},{}\n",
                    fmt_g12(sc.k),
                    fmt_g12(sc.t),
                    fmt_g12(sc.r)
                ));
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|sc| serde_json::json!({ "k": sc.k, "T": sc.t, "R": sc.r }))
                .collect();
            format!("{}\n", serde_json::json!({ "rows": rows }))
        }
        Format::Svg => {
            if rows.len() < 2 {
                return Err(CliError::Usage(
                    "svg output needs a --kgrid sweep with at least 2 points".into(),
                ));
            }
            svg_scatter(&rows)
        }
    })
}

fn run_spectrum(a: &SpectrumArgs, l0: f64) -> Result<String, CliError> {
    let cfg = BoxConfig { l: a.l, l0, k_max: a.kmax, grid_density: a.density };
    let spectrum = match (&a.theta, a.interaction.count()) {
        (Some(t), 0) => solve_spectrum_angles(t[0], t[1], &cfg),
        (None, 1..) => {
            let u = a
                .interaction
                .build()?
                .to_unitary(l0)
                .map_err(|e| CliError::Compute(e.to_string()))?;
            solve_spectrum(&u, &cfg)
        }
        _ => {
            return Err(CliError::Usage(
                "give exactly one interaction form or --theta, not both".into(),
            ))
        }
    }
    .map_err(|e| CliError::Compute(e.to_string()))?;
    Ok(match a.out.format {
        Format::Csv => {
            let mut out = String::from("k,channel,multiplicity\n");
            for r in &spectrum.roots {
                out.push_str(&format!(
                    "{},{},{}\n",
                    fmt_g12(r.k),
                    r.channel.label(),
                    r.multiplicity
                ));
            }
            out
        }
        Format::Json => {
            let roots: Vec<serde_json::Value> = spectrum
                .roots
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "k": r.k,
                        "channel": r.channel.label(),
                        "multiplicity": r.multiplicity,
                    })
                })
                .collect();
            format!("{}\n", serde_json::json!({ "roots": roots }))
        }
        Format::Svg => {
            return Err(CliError::Usage(
                "svg output is available for scatter sweeps and flow traces only".into(),
            ))
        }
    })
}

fn run_flow(a: &FlowArgs, l0: f64) -> Result<String, CliError> {
    let cfg = BoxConfig { l: a.l, l0, k_max: a.kmax, grid_density: a.density };
    let (b0, b1, amp) = (a.base[0], a.base[1], a.amplitude);
    let path: Box<dyn Fn(f64) -> (f64, f64)> = match a.loop_kind {
        LoopKind::WindPlus => Box::new(move |t| (b0 + TAU * t, b1)),
        LoopKind::WindMinus => Box::new(move |t| (b0, b1 + TAU * t)),
        LoopKind::WindBoth => Box::new(move |t| (b0 + TAU * t, b1 + TAU * t)),
        LoopKind::Contractible => Box::new(move |t| {
            let w = TAU * t;
            (b0 + amp * w.sin(), b1 + amp * (w.cos() - 1.0))
        }),
    };
    let trace = trace_flow(|t| path(t), &cfg).map_err(|e| CliError::Compute(e.to_string()))?;
    Ok(match a.out.format {
        Format::Csv => {
            let mut out = String::from("t,theta_plus,theta_minus,k\n");
            for s in &trace.samples {
                for &k in &s.levels {
                    out.push_str(&format!(
                        "{},{},{},{}\n",
                        fmt_g12(s.t),
                        fmt_g12(s.theta_plus),
                        fmt_g12(s.theta_minus),
                        fmt_g12(k)
                    ));
                }
            }
            out.push_str(&format!("# shift_plus={}\n", trace.shift_plus));
            out.push_str(&format!("# shift_minus={}\n", trace.shift_minus));
            out.push_str(&format!("# net_shift={}\n", trace.net_shift));
            out.push_str(&format!("# closure_defect={}\n", fmt_g12(trace.closure_defect)));
            out
        }
        Format::Json => {
            let samples: Vec<serde_json::Value> = trace
                .samples
                .iter()
                .map(|s| {
                    serde_json::json!({
                        "t": s.t,
                        "theta_plus": s.theta_plus,
                        "theta_minus": s.theta_minus,
                        "levels": s.levels,
                    })
                })
                .collect();
            let tracked: Vec<serde_json::Value> = trace
                .tracked
                .iter()
                .map(|tr| {
                    serde_json::json!({
                        "channel": tr.channel.label(),
                        "birth_index": tr.birth_index,
                        "points": tr.points.iter().map(|&(t, k)| vec![t, k]).collect::<Vec<_>>(),
                    })
                })
                .collect();
            format!(
                "{}\n",
                serde_json::json!({
                    "samples": samples,
                    "tracked": tracked,
                    "shift_plus": trace.shift_plus,
                    "shift_minus": trace.shift_minus,
                    "net_shift": trace.net_shift,
                    "closure_defect": trace.closure_defect,
                })
            )
        }
        Format::Svg => svg_flow(&trace, &cfg),
    })
}

fn run_decompose(a: &DecomposeArgs, l0: f64) -> Result<String, CliError> {
    let u = a
        .interaction
        .build()?
        .to_unitary(l0)
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let sc = eigen_decompose(&u);
    Ok(match a.out.format {
        Format::Csv => format!(
            "theta_plus,theta_minus,mu,nu,degenerate\n{},{},{},{},{}\n",
            fmt_g12(sc.theta_plus),
            fmt_g12(sc.theta_minus),
            fmt_g12(sc.mu),
            fmt_g12(sc.nu),
            u8::from(sc.degenerate)
        ),
        Format::Json => format!(
            "{}\n",
            serde_json::json!({
                "theta_plus": sc.theta_plus,
                "theta_minus": sc.theta_minus,
                "mu": sc.mu,
                "nu": sc.nu,
                "degenerate": sc.degenerate,
            })
        ),
        Format::Svg => {
            return Err(CliError::Usage(
                "svg output is available for scatter sweeps and flow traces only".into(),
            ))
        }
    })
}

/// Renders a duality report as the one-line verdict.
fn report_line(r: &DualityReport) -> String {
    if r.passed {
        format!("max_dev < {}, PASS\n", fmt_g12(r.tolerance))
    } else if !r.condition_met {
        format!("condition not met: max_dev = {}, FAIL\n", fmt_g12(r.max_deviation))
    } else {
        format!("max_dev = {}, FAIL\n", fmt_g12(r.max_deviation))
    }
}

fn run_duality(a: &DualityArgs) -> Result<String, CliError> {
    if a.statistics == a.kinematic {
        return Err(CliError::Usage(
            "give exactly one of --statistics or --kinematic".into(),
        ));
    }
    let grid = wavenumbers(None, &a.kgrid)?;
    let report = if a.statistics {
        let u = a
            .u
            .ok_or_else(|| CliError::Usage("--statistics requires --u".into()))?;
        check_statistics_duality(u, &grid).map_err(|e| CliError::Compute(e.to_string()))?
    } else {
        let v = a
            .v
            .ok_or_else(|| CliError::Usage("--kinematic requires --v".into()))?;
        let u = a
            .u
            .ok_or_else(|| CliError::Usage("--kinematic requires --u".into()))?;
        check_kinematic_duality(v, u, &grid).map_err(|e| CliError::Compute(e.to_string()))?
    };
    Ok(report_line(&report))
}

const SVG_W: f64 = 640.0;
const SVG_H: f64 = 400.0;
const SVG_ML: f64 = 56.0;
const SVG_MR: f64 = 16.0;
const SVG_MT: f64 = 16.0;
const SVG_MB: f64 = 40.0;

fn svg_open() -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SVG_W}\" height=\"{SVG_H}\" \
         viewBox=\"0 0 {SVG_W} {SVG_H}\">\n\
         <rect x=\"0\" y=\"0\" width=\"{SVG_W}\" height=\"{SVG_H}\" fill=\"#ffffff\"/>\n\
         <rect x=\"{SVG_ML}\" y=\"{SVG_MT}\" width=\"{:.2}\" height=\"{:.2}\" \
         fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n",
        SVG_W - SVG_ML - SVG_MR,
        SVG_H - SVG_MT - SVG_MB,
    )
}

fn svg_polyline(points: &[(f64, f64)], color: &str) -> String {
    let mut s = format!(
        "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\""
    );
    for (i, (x, y)) in points.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&format!("{x:.2},{y:.2}"));
    }
    s.push_str("\"/>\n");
    s
}

fn svg_text(x: f64, y: f64, color: &str, msg: &str) -> String {
    format!(
        "<text x=\"{x:.2}\" y=\"{y:.2}\" fill=\"{color}\" \
         font-family=\"monospace\" font-size=\"12\">{msg}</text>\n"
    )
}

/// Transmission/reflection sweep: T and R versus log-scaled wavenumber.
fn svg_scatter(rows: &[ScatteringResult]) -> String {
    let (x0, x1) = (rows[0].k.ln(), rows[rows.len() - 1].k.ln());
    let px = |k: f64| SVG_ML + (k.ln() - x0) / (x1 - x0) * (SVG_W - SVG_ML - SVG_MR);
    let py = |v: f64| SVG_MT + (1.0 - v) * (SVG_H - SVG_MT - SVG_MB);
    let t_pts: Vec<(f64, f64)> = rows.iter().map(|r| (px(r.k), py(r.t))).collect();
    let r_pts: Vec<(f64, f64)> = rows.iter().map(|r| (px(r.k), py(r.r))).collect();
    let mut s = svg_open();
    s.push_str(&svg_polyline(&t_pts, "#1f77b4"));
    s.push_str(&svg_polyline(&r_pts, "#d95f02"));
    s.push_str(&svg_text(SVG_W - 90.0, SVG_MT + 16.0, "#1f77b4", "T"));
    s.push_str(&svg_text(SVG_W - 70.0, SVG_MT + 16.0, "#d95f02", "R"));
    s.push_str(&svg_text(SVG_ML, SVG_H - 12.0, "#444444", &format!(
        "k = {} .. {} (log scale)",
        fmt_g12(rows[0].k),
        fmt_g12(rows[rows.len() - 1].k)
    )));
    s.push_str(&svg_text(8.0, SVG_MT + 12.0, "#444444", "1"));
    s.push_str(&svg_text(8.0, SVG_H - SVG_MB, "#444444", "0"));
    s.push_str("</svg>\n");
    s
}

/// Flow staircase: every tracked level's wavenumber versus loop parameter.
fn svg_flow(trace: &FlowTrace, cfg: &BoxConfig) -> String {
    let px = |t: f64| SVG_ML + t * (SVG_W - SVG_ML - SVG_MR);
    let py = |k: f64| SVG_MT + (1.0 - k / cfg.k_max) * (SVG_H - SVG_MT - SVG_MB);
    let mut s = svg_open();
    for tr in &trace.tracked {
        let color = match tr.channel {
            crate::spectral::Channel::Plus => "#1f77b4",
            crate::spectral::Channel::Minus => "#d95f02",
        };
        let pts: Vec<(f64, f64)> = tr.points.iter().map(|&(t, k)| (px(t), py(k))).collect();
        if pts.len() >= 2 {
            s.push_str(&svg_polyline(&pts, color));
        }
    }
    s.push_str(&svg_text(
        SVG_ML,
        SVG_H - 12.0,
        "#444444",
        &format!(
            "loop parameter t = 0 .. 1; shift: plus={} minus={} net={}",
            trace.shift_plus, trace.shift_minus, trace.net_shift
        ),
    ));
    s.push_str(&svg_text(8.0, SVG_MT + 12.0, "#444444", &format!("k={}", fmt_g12(cfg.k_max))));
    s.push_str(&svg_text(8.0, SVG_H - SVG_MB, "#444444", "k=0"));
    s.push_str("</svg>\n");
    s
}

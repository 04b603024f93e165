//! Command-line front end: generate family meshes, sweep soliton residuals,
//! check the reduced ODEs against the closed forms, and run discrete-flow
//! convergence studies.
//!
//! Exit codes: 0 ok, 1 usage, 2 invalid parameters, 3 domain violation,
//! 4 threshold/ratio/discrepancy exceeded, 5 mean curvature zero,
//! 6 ODE singularity.

use clap::{Args, Parser, Subcommand, ValueEnum};
use imcf_ruled::families::{
    CylEqualFamily, CylGeneralFamily, CylTimelikeFamily, FamilySpec, NonCylFamily,
};
use imcf_ruled::flow::{
    flow_direction_sign, flow_to_time, sample_patch, translation_deviation, CylinderSurface,
    FlowConfig, PlaneSurface,
};
use imcf_ruled::format::{fmt_f64, write_curve_csv, write_obj, write_residual_csv};
use imcf_ruled::grid::GridAxis;
use imcf_ruled::jet::ParamSurface;
use imcf_ruled::mink::{causal_class, default_causal_tau, lorentz_inner, lorentz_norm, LVec3};
use imcf_ruled::ode::{cyl_spacelike_oracle, cyl_timelike_oracle, noncyl_u_oracle};
use imcf_ruled::report::residual_sweep;
use imcf_ruled::ruled::noncyl_poly_coeffs;
use imcf_ruled::{Error, Result};
use std::collections::HashMap;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "imcf",
    about = "Ruled translating solitons of inverse mean curvature flow in Lorentz-Minkowski 3-space",
    disable_version_flag = true
)]
struct Cli {
    /// Plain-text `key=value` defaults; explicit flags override.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Causal classification of a vector in the ambient inner product.
    Classify(ClassifyArgs),
    /// Export a family patch as OBJ and/or its base curve as CSV.
    Family(FamilyArgs),
    /// Sweep the soliton residual of a family over a parameter grid.
    Residual(ResidualArgs),
    /// Discrete-flow convergence study of the translation property.
    Flow(FlowArgs),
    /// Integrate the reduced ODE system and compare to the closed form.
    OdeCheck(OdeCheckArgs),
    /// Coefficients of the residual's quartic expansion in the ruling parameter.
    PolyCoeffs(PolyCoeffsArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    /// ruling beta(s) = (1,s,s)
    Noncyl,
    /// spacelike ruling, |v2| = |v3|
    CylEq,
    /// spacelike ruling, v2^2 != v3^2
    CylGen,
    /// timelike ruling
    CylTime,
}

/// Family parameters shared by all family-consuming subcommands. Everything
/// is textual so a config file can supply any of it.
#[derive(Args, Clone, Default)]
struct FamilyOpts {
    /// Velocity `v1,v2,v3` (noncyl).
    #[arg(long = "V", value_name = "v1,v2,v3", allow_hyphen_values = true)]
    vel_upper: Option<String>,
    /// Velocity components: `v2` (cyl-eq), `v2,v3` (cyl-gen), `v1,v2` (cyl-time).
    #[arg(long = "v", value_name = "LIST", allow_hyphen_values = true)]
    vel_lower: Option<String>,
    /// +1 or -1; `<gamma',gamma'>` for the spacelike-ruling families.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    /// +1 or -1; v3 = sigma*v2 for cyl-eq.
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    /// +1 or -1 square-root branch (cyl-gen, cyl-time).
    #[arg(long, allow_hyphen_values = true)]
    branch: Option<String>,
    /// Integration constants `c1,c2[,c3]`; default all 0.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    c: Option<String>,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Vector `x1,x2,x3`.
    #[arg(long, value_name = "x1,x2,x3", allow_hyphen_values = true)]
    vec: Option<String>,
    /// Classification tolerance; default `1e-10*max(1, |v|_eucl^2)`.
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    kind: FamilyKind,
    #[command(flatten)]
    fam: FamilyOpts,
    /// Base-curve grid `lo:hi:n`.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Ruling grid `lo:hi:n` (needed for --out).
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// OBJ mesh output path.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Base-curve CSV path; defaults to `<out stem>.curve.csv` when --out is set.
    #[arg(long, value_name = "PATH")]
    curve_out: Option<PathBuf>,
}

#[derive(Args)]
struct ResidualArgs {
    #[arg(value_enum)]
    kind: FamilyKind,
    #[command(flatten)]
    fam: FamilyOpts,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Exit 4 when max |residual_norm| exceeds this.
    #[arg(long, allow_hyphen_values = true)]
    threshold: Option<String>,
    /// CSV report output path.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FlowArgs {
    #[arg(value_enum)]
    kind: Option<FamilyKind>,
    #[command(flatten)]
    fam: FamilyOpts,
    /// Debug control surfaces instead of a family.
    #[arg(long, value_enum, conflicts_with = "kind")]
    surface: Option<ControlSurface>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Comma-separated time-step list (at least two entries).
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    dt: Option<String>,
    /// Total flow time; default 0.1.
    #[arg(long, allow_hyphen_values = true)]
    time: Option<String>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ControlSurface {
    /// X = (s,t,0): H = 0, the flow must refuse it.
    Plane,
    /// X = (cos s, sin s, t): flows, but is no translator.
    Cylinder,
}

#[derive(Args)]
struct OdeCheckArgs {
    #[arg(value_enum)]
    kind: FamilyKind,
    #[command(flatten)]
    fam: FamilyOpts,
    /// Integration interval `s0:s1`.
    #[arg(long, allow_hyphen_values = true)]
    interval: Option<String>,
    /// RK4 step; default 1e-3.
    #[arg(long, allow_hyphen_values = true)]
    h: Option<String>,
}

#[derive(Args)]
struct PolyCoeffsArgs {
    #[arg(value_enum)]
    kind: FamilyKind,
    #[command(flatten)]
    fam: FamilyOpts,
    /// Base-curve parameter at which to expand.
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
}

/// A usage-level problem (missing/inconsistent arguments): exit code 1,
/// distinct from invalid *values* which exit 2.
struct UsageError(String);

enum Failure {
    Usage(String),
    Domain(Error),
    /// A numeric verdict failed (threshold/ratio/discrepancy): exit 4.
    Verdict,
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidParameter(_) | Error::AssumptionViolated(_) => 2,
        Error::DomainError(_) | Error::DegenerateSurface { .. } => 3,
        Error::MeanCurvatureZero(_) => 5,
        Error::SingularRhs(_) => 6,
    }
}

fn main() -> ExitCode {
    // Die quietly when the reader closes the pipe (`imcf ... | head`), like
    // standard utilities; the Rust runtime ignores SIGPIPE, which would turn
    // EPIPE into a panic inside println!.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/--help print to stdout and are not errors
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let cfg = match load_config(cli.config.as_deref()) {
        Ok(m) => m,
        Err(f) => return report(f),
    };
    let outcome = match cli.cmd {
        Cmd::Classify(a) => cmd_classify(&a, &cfg),
        Cmd::Family(a) => cmd_family(&a, &cfg),
        Cmd::Residual(a) => cmd_residual(&a, &cfg),
        Cmd::Flow(a) => cmd_flow(&a, &cfg),
        Cmd::OdeCheck(a) => cmd_ode_check(&a, &cfg),
        Cmd::PolyCoeffs(a) => cmd_poly_coeffs(&a, &cfg),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => report(f),
    }
}

fn report(f: Failure) -> ExitCode {
    match f {
        Failure::Usage(msg) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Failure::Domain(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e))
        }
        Failure::Verdict => ExitCode::from(4),
        Failure::Io(e) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(1)
        }
    }
}

type ConfigMap = HashMap<String, String>;

fn load_config(path: Option<&Path>) -> std::result::Result<ConfigMap, Failure> {
    let mut map = ConfigMap::new();
    let Some(path) = path else { return Ok(map) };
    let text = std::fs::read_to_string(path)?;
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(UsageError(format!(
                "{}:{}: expected key=value, got {line:?}",
                path.display(),
                ln + 1
            ))
            .into());
        };
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

/// CLI flag if present, else config-file value.
fn pick(flag: &Option<String>, cfg: &ConfigMap, key: &str) -> Option<String> {
    flag.clone().or_else(|| cfg.get(key).cloned())
}

fn required(flag: &Option<String>, cfg: &ConfigMap, key: &str) -> std::result::Result<String, UsageError> {
    pick(flag, cfg, key).ok_or_else(|| UsageError(format!("missing --{key}")))
}

fn parse_f64(name: &str, text: &str) -> Result<f64> {
    let x: f64 = text
        .trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("{name}: expected a number, got {text:?}")))?;
    if !x.is_finite() {
        return Err(Error::InvalidParameter(format!("{name} must be finite, got {text:?}")));
    }
    Ok(x)
}

fn parse_list(name: &str, text: &str, want: usize) -> Result<Vec<f64>> {
    let vals: Result<Vec<f64>> = text.split(',').map(|p| parse_f64(name, p)).collect();
    let vals = vals?;
    if vals.len() != want {
        return Err(Error::InvalidParameter(format!(
            "{name}: expected {want} comma-separated values, got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

fn parse_sign(name: &str, text: &str) -> Result<i32> {
    match text.trim() {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        other => Err(Error::InvalidParameter(format!("{name} must be +1 or -1, got {other:?}"))),
    }
}

fn parse_interval(text: &str) -> Result<(f64, f64)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 2 {
        return Err(Error::InvalidParameter(format!(
            "interval must look like s0:s1, got {text:?}"
        )));
    }
    Ok((parse_f64("interval start", parts[0])?, parse_f64("interval end", parts[1])?))
}

fn constants(opts: &FamilyOpts, cfg: &ConfigMap, want: usize) -> Result<Vec<f64>> {
    match pick(&opts.c, cfg, "c") {
        Some(text) => parse_list("c", &text, want),
        None => Ok(vec![0.0; want]),
    }
}

fn sign_opt(flag: &Option<String>, cfg: &ConfigMap, key: &str) -> Result<i32> {
    match pick(flag, cfg, key) {
        Some(text) => parse_sign(key, &text),
        None => Ok(1),
    }
}

fn build_family(
    kind: FamilyKind,
    opts: &FamilyOpts,
    cfg: &ConfigMap,
) -> std::result::Result<FamilySpec, Failure> {
    let fam = match kind {
        FamilyKind::Noncyl => {
            let v = parse_list("V", &required(&opts.vel_upper, cfg, "V")?, 3)?;
            let c = constants(opts, cfg, 3)?;
            FamilySpec::NonCyl(NonCylFamily::new(LVec3::new(v[0], v[1], v[2]), c[0], c[1], c[2])?)
        }
        FamilyKind::CylEq => {
            let v = parse_list("v", &required(&opts.vel_lower, cfg, "v")?, 1)?;
            let c = constants(opts, cfg, 2)?;
            FamilySpec::CylEqual(CylEqualFamily::new(
                v[0],
                sign_opt(&opts.sigma, cfg, "sigma")?,
                sign_opt(&opts.delta, cfg, "delta")?,
                c[0],
                c[1],
            )?)
        }
        FamilyKind::CylGen => {
            let v = parse_list("v", &required(&opts.vel_lower, cfg, "v")?, 2)?;
            let c = constants(opts, cfg, 2)?;
            FamilySpec::CylGeneral(CylGeneralFamily::new(
                v[0],
                v[1],
                sign_opt(&opts.delta, cfg, "delta")?,
                sign_opt(&opts.branch, cfg, "branch")?,
                c[0],
                c[1],
            )?)
        }
        FamilyKind::CylTime => {
            let v = parse_list("v", &required(&opts.vel_lower, cfg, "v")?, 2)?;
            let c = constants(opts, cfg, 2)?;
            FamilySpec::CylTimelike(CylTimelikeFamily::new(
                v[0],
                v[1],
                sign_opt(&opts.branch, cfg, "branch")?,
                c[0],
                c[1],
            )?)
        }
    };
    Ok(fam)
}

/// Parses `lo:hi:n`, shrinks endpoints off excluded loci, and rejects ranges
/// straddling a domain gap.
fn family_axis(fam: &FamilySpec, text: &str) -> Result<Vec<f64>> {
    let axis = GridAxis::parse(text)?;
    let vals = axis.values_shrunk(|s| fam.in_domain(s));
    if !fam.domain_connected(vals[0], vals[vals.len() - 1]) {
        return Err(Error::DomainError(format!(
            "s-range [{}, {}] is not inside one component of the {} domain",
            vals[0],
            vals[vals.len() - 1],
            fam.name()
        )));
    }
    Ok(vals)
}

fn cmd_classify(a: &ClassifyArgs, cfg: &ConfigMap) -> std::result::Result<(), Failure> {
    let v = parse_list("vec", &required(&a.vec, cfg, "vec")?, 3)?;
    let v = LVec3::new(v[0], v[1], v[2]);
    let tau = match pick(&a.tau, cfg, "tau") {
        Some(t) => {
            let t = parse_f64("tau", &t)?;
            if t < 0.0 {
                return Err(Error::InvalidParameter(format!("tau must be >= 0, got {t}")).into());
            }
            t
        }
        None => default_causal_tau(v),
    };
    println!("class={}", causal_class(v, tau));
    println!("inner={}", fmt_f64(lorentz_inner(v, v)));
    println!("norm={}", fmt_f64(lorentz_norm(v)));
    println!("tau={}", fmt_f64(tau));
    Ok(())
}

fn curve_rows(fam: &FamilySpec, s_vals: &[f64]) -> Vec<(f64, LVec3)> {
    s_vals.iter().map(|&s| (s, fam.gamma_jet(s).p)).collect()
}

fn write_file(path: &Path, write: impl FnOnce(&mut dyn std::io::Write) -> std::io::Result<()>) -> std::result::Result<(), Failure> {
    let mut buf = Vec::new();
    write(&mut buf)?;
    std::fs::write(path, buf)?;
    Ok(())
}

fn cmd_family(a: &FamilyArgs, cfg: &ConfigMap) -> std::result::Result<(), Failure> {
    let fam = build_family(a.kind, &a.fam, cfg)?;
    let s_vals = family_axis(&fam, &required(&a.s, cfg, "s")?)?;
    if a.out.is_none() && a.curve_out.is_none() {
        return Err(UsageError("family needs --out and/or --curve-out".into()).into());
    }
    if let Some(out) = &a.out {
        let t_text = pick(&a.t, cfg, "t")
            .ok_or_else(|| UsageError("--out writes a mesh, which needs --t".into()))?;
        let t_vals = GridAxis::parse(&t_text)?.values();
        let patch = sample_patch(&fam, &s_vals, &t_vals)?;
        write_file(out, |w| write_obj(w, &patch))?;
        println!(
            "wrote {} ({} vertices, {} quads)",
            out.display(),
            patch.vertices.len(),
            (patch.n_s - 1) * (patch.n_t - 1)
        );
    }
    let curve_path = a.curve_out.clone().or_else(|| {
        a.out.as_ref().map(|o| {
            let stem = o.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            o.with_file_name(format!("{stem}.curve.csv"))
        })
    });
    if let Some(path) = curve_path {
        let rows = curve_rows(&fam, &s_vals);
        write_file(&path, |w| write_curve_csv(w, &rows))?;
        println!("wrote {} ({} rows)", path.display(), rows.len());
    }
    Ok(())
}

fn cmd_residual(a: &ResidualArgs, cfg: &ConfigMap) -> std::result::Result<(), Failure> {
    let fam = build_family(a.kind, &a.fam, cfg)?;
    let s_vals = family_axis(&fam, &required(&a.s, cfg, "s")?)?;
    let t_vals = GridAxis::parse(&required(&a.t, cfg, "t")?)?.values();
    let threshold = match pick(&a.threshold, cfg, "threshold") {
        Some(t) => parse_f64("threshold", &t)?,
        None => 1e-8,
    };
    let rep = residual_sweep(&fam, &s_vals, &t_vals)?;
    if let Some(out) = &a.out {
        write_file(out, |w| write_residual_csv(w, &rep))?;
        println!("wrote {} ({} rows)", out.display(), rep.count);
    }
    println!("velocity_sign={}", if rep.velocity_sign > 0 { "+1" } else { "-1" });
    println!("count={}", rep.count);
    println!("mean_residual_norm={}", fmt_f64(rep.mean_norm));
    println!("max_residual_norm={}", fmt_f64(rep.max_norm));
    println!("threshold={}", fmt_f64(threshold));
    if rep.max_norm <= threshold {
        println!("status=ok");
        Ok(())
    } else {
        println!("status=exceeded");
        Err(Failure::Verdict)
    }
}

fn cmd_flow(a: &FlowArgs, cfg: &ConfigMap) -> std::result::Result<(), Failure> {
    let dt_text = required(&a.dt, cfg, "dt")?;
    let dts: Result<Vec<f64>> = dt_text.split(',').map(|p| parse_f64("dt", p)).collect();
    let dts = dts?;
    if dts.len() < 2 {
        return Err(UsageError("--dt needs at least two entries for a convergence ratio".into()).into());
    }
    let total: f64 = match pick(&a.time, cfg, "time") {
        Some(t) => parse_f64("time", &t)?,
        None => 0.1,
    };
    if total <= 0.0 {
        return Err(Error::InvalidParameter(format!("--time must be positive, got {total}")).into());
    }

    // Resolve the surface and the translation velocity to test against.
    enum Subject {
        Family(FamilySpec),
        Control(ControlSurface),
    }
    let subject = match (a.kind, a.surface) {
        (Some(kind), None) => Subject::Family(build_family(kind, &a.fam, cfg)?),
        (None, Some(ctrl)) => Subject::Control(ctrl),
        (None, None) => return Err(UsageError("flow needs a family kind or --surface".into()).into()),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let (surface, s_vals, t_vals, velocity): (&dyn ParamSurface, Vec<f64>, Vec<f64>, LVec3) =
        match &subject {
            Subject::Family(fam) => {
                let s_vals = family_axis(fam, &required(&a.s, cfg, "s")?)?;
                let t_vals = GridAxis::parse(&required(&a.t, cfg, "t")?)?.values();
                // Translators flow along +V or -V depending on the causal
                // character; read the sign off the patch midpoint.
                let mid = fam.jet(
                    s_vals[s_vals.len() / 2],
                    t_vals[t_vals.len() / 2],
                )?;
                let sigma = flow_direction_sign(&mid, fam.velocity())?;
                (fam as &dyn ParamSurface, s_vals, t_vals, sigma * fam.velocity())
            }
            Subject::Control(ControlSurface::Plane) => {
                let s_vals = GridAxis::parse(&required(&a.s, cfg, "s")?)?.values();
                let t_vals = GridAxis::parse(&required(&a.t, cfg, "t")?)?.values();
                (&PlaneSurface, s_vals, t_vals, LVec3::new(0.0, 0.0, 1.0))
            }
            Subject::Control(ControlSurface::Cylinder) => {
                let s_vals = GridAxis::parse(&required(&a.s, cfg, "s")?)?.values();
                let t_vals = GridAxis::parse(&required(&a.t, cfg, "t")?)?.values();
                (&CylinderSurface, s_vals, t_vals, LVec3::new(0.0, 0.0, 1.0))
            }
        };

    let mut deviations = Vec::new();
    for &dt in &dts {
        if dt <= 0.0 {
            return Err(Error::InvalidParameter(format!("dt must be positive, got {dt}")).into());
        }
        let steps = (total / dt).round().max(1.0) as usize;
        let cfg_run = FlowConfig::new(dt, steps)?;
        let flowed = flow_to_time(surface, &s_vals, &t_vals, &cfg_run)?;
        let dev = translation_deviation(&flowed, surface, velocity, cfg_run.total_time(), 2)?;
        println!("dt={} steps={} deviation={}", fmt_f64(dt), steps, fmt_f64(dev));
        deviations.push(dev);
    }
    let mut all_in_band = true;
    for w in deviations.windows(2) {
        let ratio = w[0] / w[1];
        all_in_band &= (1.7..=2.3).contains(&ratio);
        println!("ratio={}", fmt_f64(ratio));
    }
    if all_in_band {
        println!("status=ok");
        Ok(())
    } else {
        println!("status=no-first-order-convergence");
        Err(Failure::Verdict)
    }
}

fn cmd_ode_check(a: &OdeCheckArgs, cfg: &ConfigMap) -> std::result::Result<(), Failure> {
    let fam = build_family(a.kind, &a.fam, cfg)?;
    let (s0, s1) = parse_interval(&required(&a.interval, cfg, "interval")?)?;
    let h = match pick(&a.h, cfg, "h") {
        Some(t) => parse_f64("h", &t)?,
        None => 1e-3,
    };
    let disc = match &fam {
        FamilySpec::NonCyl(f) => {
            let u = noncyl_u_oracle(f.v, s0, s1, h)?;
            let closed = (f.v.x3 - f.v.x2) / (8.0 * s1);
            println!("u_oracle={} u_closed={}", fmt_f64(u), fmt_f64(closed));
            (u - closed).abs()
        }
        FamilySpec::CylEqual(_) | FamilySpec::CylGeneral(_) => {
            let (dx, dy) = cyl_spacelike_oracle(&fam, s0, s1, h)?;
            let g = fam.gamma_jet(s1);
            println!(
                "xp_oracle={} xp_closed={} yp_oracle={} yp_closed={}",
                fmt_f64(dx),
                fmt_f64(g.d1.x2),
                fmt_f64(dy),
                fmt_f64(g.d1.x3)
            );
            (dx - g.d1.x2).abs().max((dy - g.d1.x3).abs())
        }
        FamilySpec::CylTimelike(f) => {
            let (dx, dy) = cyl_timelike_oracle(f, s0, s1, h)?;
            let (_, d1, _) = f.profile(s1);
            println!(
                "xp_oracle={} xp_closed={} yp_oracle={} yp_closed={}",
                fmt_f64(dx),
                fmt_f64(d1[0]),
                fmt_f64(dy),
                fmt_f64(d1[1])
            );
            (dx - d1[0]).abs().max((dy - d1[1]).abs())
        }
    };
    println!("max_discrepancy={}", fmt_f64(disc));
    if disc <= 1e-6 {
        println!("status=ok");
        Ok(())
    } else {
        println!("status=exceeded");
        Err(Failure::Verdict)
    }
}

fn cmd_poly_coeffs(a: &PolyCoeffsArgs, cfg: &ConfigMap) -> std::result::Result<(), Failure> {
    let fam = build_family(a.kind, &a.fam, cfg)?;
    let s = parse_f64("s", &required(&a.s, cfg, "s")?)?;
    let coeffs = noncyl_poly_coeffs(&fam.to_ruled(), fam.velocity(), fam.ruling_delta(), s)?;
    let mut out = std::io::stdout().lock();
    for (name, val) in [
        ("A0", coeffs.a0),
        ("A1", coeffs.a1),
        ("A2", coeffs.a2),
        ("A3", coeffs.a3),
        ("A4", coeffs.a4),
        ("scale", coeffs.scale),
    ] {
        writeln!(out, "{name}={}", fmt_f64(val))?;
    }
    Ok(())
}

use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{ArgGroup, Args};
use rayon::prelude::*;
use sadik_core::control::{
    impulse_response, impulse_response_numeric, step_response, step_response_numeric,
    TransferFunction,
};
use sadik_core::fode::{
    adams_oracle, adams_oracle_extrapolated, solve_relaxation, RelaxationProblem,
};
use sadik_core::fractional::{caputo_derivative_with, rl_integral, DerivativeData, FracOptions};
use sadik_core::mittag_leffler::ml_evaluate;
use sadik_core::transform::{forward_known, InverseOptions};
use sadik_core::verify::{run_all, Suite, SuiteReport};
use sadik_core::{image_of, FracOrder, KnownFunction, MLSpec, SadikParams};

use crate::config::{self, RunConfig};
use crate::output::{rel_err, Table};
use crate::{Outcome, UsageError};

#[derive(Args, Debug)]
pub struct Common {
    /// JSON file with default values for the flags
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Pass/fail tolerance on the rel_err column
    #[arg(long)]
    tol: Option<f64>,
}

impl Common {
    fn load(&self) -> anyhow::Result<RunConfig> {
        RunConfig::load(self.config.as_deref())
    }

    fn out<'a>(&'a self, cfg: &'a RunConfig) -> Option<&'a Path> {
        self.out.as_deref().or(cfg.out.as_deref())
    }
}

fn par_eval<T, F>(grid: &[f64], f: F) -> sadik_core::Result<Vec<T>>
where
    T: Send,
    F: Fn(f64) -> sadik_core::Result<T> + Sync,
{
    grid.par_iter().map(|&x| f(x)).collect()
}

fn verdict(what: &str, worst: f64, tol: f64) -> Outcome {
    if worst <= tol {
        eprintln!("{what}: max rel_err {worst:.3e} <= {tol:.0e}");
        Outcome::Pass
    } else {
        eprintln!("{what}: max rel_err {worst:.3e} exceeds {tol:.0e}");
        Outcome::Fail
    }
}

fn known_function(func: &str, a: Option<f64>, n: Option<u32>) -> anyhow::Result<KnownFunction> {
    let descriptor = if func.contains(':') {
        func.to_string()
    } else {
        match func {
            "exp" | "sin" | "heaviside" | "step" => {
                let a = a.ok_or_else(|| UsageError(format!("--func {func} needs --a")))?;
                format!("{func}:{a}")
            }
            "power" | "t" => {
                let n = n.ok_or_else(|| UsageError(format!("--func {func} needs --n")))?;
                format!("power:{n}")
            }
            _ => func.to_string(),
        }
    };
    Ok(descriptor.parse::<KnownFunction>()?)
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct TransformArgs {
    /// one, power:n, exp:a, sin:a, heaviside:a, dirac or ml:p,q,m,±a
    #[arg(long)]
    func: String,
    /// Parameter of exp, sin or heaviside
    #[arg(long)]
    a: Option<f64>,
    /// Exponent of power
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// v grid, a:b:n or a single value
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[command(flatten)]
    common: Common,
}

pub fn transform(args: TransformArgs) -> anyhow::Result<Outcome> {
    let cfg = args.common.load()?;
    let f = known_function(&args.func, args.a, args.n)?;
    let alpha = config::required(args.alpha, cfg.alpha, "alpha")?;
    let beta = config::required(args.beta, cfg.beta, "beta")?;
    let tol = config::tolerance(args.common.tol, cfg.tol, 1e-6)?;
    let grid = config::grid(args.v.as_deref(), cfg.grid, None, "v")?;
    if grid.iter().any(|&v| !(v > 0.0)) {
        return Err(UsageError("v must be positive".into()).into());
    }
    let params = SadikParams::numeric(alpha, beta)?;
    let image = image_of(&f)?;
    let rows = par_eval(&grid, |v| {
        let num = forward_known(&f, &params, v)?;
        let closed = image.eval(v, &params)?;
        Ok([v, num, closed, rel_err(closed, num)])
    })?;
    let mut table = Table::new(&["v", "numeric", "closed_form", "rel_err"]);
    rows.into_iter().for_each(|r| table.push(r.to_vec()));
    table.emit(args.common.out(&cfg))?;
    Ok(verdict(&format!("transform {f}"), table.column_max(3), tol))
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// derivative, caputo, convolution, delay, ivt, fvt, tn, inversion or all
    suite: String,
}

pub fn verify(args: VerifyArgs) -> anyhow::Result<Outcome> {
    let reports: Vec<SuiteReport> = if args.suite == "all" {
        run_all()
    } else {
        let suite: Suite = args
            .suite
            .parse()
            .map_err(|_| UsageError(format!("unknown suite '{}'", args.suite)))?;
        vec![suite.run()]
    };
    for r in &reports {
        print!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    if reports.len() > 1 {
        println!(
            "{} of {} suites passed",
            reports.len() - failed,
            reports.len()
        );
    }
    Ok(if failed == 0 {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct FodeArgs {
    /// Caputo order, 0 < gamma <= 1
    #[arg(long)]
    gamma: Option<f64>,
    /// Rate in D^gamma y = b y
    #[arg(long)]
    b: Option<f64>,
    /// Initial value [default: 1]
    #[arg(long)]
    y0: Option<f64>,
    /// Time grid a:b:n [default: 0:1:101]
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Oracle step
    #[arg(long, default_value_t = 1e-3)]
    h: f64,
    /// Use the plain PECE oracle without Richardson extrapolation
    #[arg(long)]
    raw: bool,
    /// Write the gamma sweep 0.5, 0.7, 0.9, 1 (b = 3, y0 = 1, t in [0, 1])
    #[arg(long)]
    fig1: bool,
    /// Directory for preset output files
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[command(flatten)]
    common: Common,
}

pub const FIG1_GAMMAS: [f64; 4] = [0.5, 0.7, 0.9, 1.0];

fn fode_table(p: &RelaxationProblem, grid: &[f64], h: f64, raw: bool) -> anyhow::Result<Table> {
    let t_end = *grid.last().expect("grid is non-empty");
    if !(t_end > 0.0) {
        return Err(UsageError("fode grid must end at t > 0".into()).into());
    }
    if !(h > 0.0) || h > t_end {
        return Err(UsageError(format!("oracle step must be in (0, {t_end}], got {h}")).into());
    }
    // land the oracle grid exactly on t_end
    let steps = (t_end / h - 1e-9).ceil().max(1.0);
    let h = t_end / steps;
    let rhs = |_: f64, y: f64| p.b * y;
    let oracle = if raw {
        adams_oracle(p.gamma, rhs, p.y0, h, t_end)?
    } else {
        adams_oracle_extrapolated(p.gamma, rhs, p.y0, h, t_end)?
    };
    let ys = oracle.y();
    let at = |t: f64| {
        let x = t / h;
        let k = x.round();
        if (x - k).abs() < 1e-6 {
            return ys[(k as usize).min(ys.len() - 1)];
        }
        let i = (x.floor() as usize).min(ys.len() - 2);
        let w = x - i as f64;
        (1.0 - w) * ys[i] + w * ys[i + 1]
    };
    let closed = solve_relaxation(p, grid)?;
    let mut table = Table::new(&["t", "y_closed", "y_oracle", "rel_err"]);
    for (t, y) in closed.iter() {
        let o = at(t);
        table.push(vec![t, y, o, rel_err(y, o)]);
    }
    Ok(table)
}

pub fn fode(args: FodeArgs) -> anyhow::Result<Outcome> {
    let cfg = args.common.load()?;
    let tol = config::tolerance(args.common.tol, cfg.tol, 5e-3)?;
    if args.fig1 {
        std::fs::create_dir_all(&args.out_dir)
            .with_context(|| format!("creating {}", args.out_dir.display()))?;
        let grid = config::grid(None, None, Some("0:1:101"), "t")?;
        let mut outcome = Outcome::Pass;
        for g in FIG1_GAMMAS {
            let p = RelaxationProblem::new(g, 3.0, 1.0)?;
            let table = fode_table(&p, &grid, args.h, args.raw)?;
            let path = args.out_dir.join(format!("fig1_gamma_{g}.csv"));
            table
                .emit(Some(&path))
                .with_context(|| format!("writing {}", path.display()))?;
            if verdict(&path.display().to_string(), table.column_max(3), tol) == Outcome::Fail {
                outcome = Outcome::Fail;
            }
        }
        return Ok(outcome);
    }
    let gamma = config::required(args.gamma, cfg.gamma, "gamma")?;
    let b = config::required(args.b, cfg.b, "b")?;
    let y0 = args.y0.or(cfg.y0).unwrap_or(1.0);
    let grid = config::grid(args.t.as_deref(), cfg.grid, Some("0:1:101"), "t")?;
    let p = RelaxationProblem::new(gamma, b, y0)?;
    let table = fode_table(&p, &grid, args.h, args.raw)?;
    table.emit(args.common.out(&cfg))?;
    Ok(verdict(
        &format!("fode gamma={gamma} b={b}"),
        table.column_max(3),
        tol,
    ))
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
#[command(group(ArgGroup::new("kind").args(["impulse", "step", "fig2", "fig3"]).required(true)))]
pub struct ControlArgs {
    #[arg(long)]
    impulse: bool,
    #[arg(long)]
    step: bool,
    /// Impulse responses for gamma 0.5, 0.8, 1 with r = d = 1, t in [1e-3, 5]
    #[arg(long)]
    fig2: bool,
    /// Step responses for the same sweep
    #[arg(long)]
    fig3: bool,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    d: Option<f64>,
    /// Transform parameters used by the numeric inversion [default: 1, 0]
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long)]
    beta: Option<f64>,
    /// Time grid a:b:n [default: 1e-3:5:200]
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[command(flatten)]
    common: Common,
}

pub const FIG_CONTROL_GAMMAS: [f64; 3] = [0.5, 0.8, 1.0];
const IMPULSE_T_MIN: f64 = 1e-3;

fn control_table(
    step: bool,
    r: f64,
    d: f64,
    gamma: f64,
    params: &SadikParams,
    grid: &[f64],
) -> anyhow::Result<Table> {
    let tf = TransferFunction::two_term(r, gamma, d)?;
    let opts = InverseOptions::default();
    let closed = if step {
        step_response(r, d, gamma, grid)?
    } else {
        impulse_response(r, d, gamma, grid)?
    };
    let numeric = par_eval(grid, |t| {
        if t == 0.0 {
            return Ok(0.0);
        }
        let s = if step {
            step_response_numeric(&tf, params, &[t], &opts)?
        } else {
            impulse_response_numeric(&tf, params, &[t], &opts)?
        };
        Ok(s.y()[0])
    })?;
    let mut table = Table::new(&["t", "closed_form", "numeric_inverse", "rel_err"]);
    for ((t, c), n) in closed.iter().zip(numeric) {
        table.push(vec![t, c, n, rel_err(c, n)]);
    }
    Ok(table)
}

pub fn control(args: ControlArgs) -> anyhow::Result<Outcome> {
    let cfg = args.common.load()?;
    let tol = config::tolerance(args.common.tol, cfg.tol, 1e-4)?;
    let alpha = args.alpha.or(cfg.alpha).unwrap_or(1.0);
    let beta = args.beta.or(cfg.beta).unwrap_or(0.0);
    let params = SadikParams::numeric(alpha, beta)?;
    if args.fig2 || args.fig3 {
        std::fs::create_dir_all(&args.out_dir)
            .with_context(|| format!("creating {}", args.out_dir.display()))?;
        let grid = config::grid(None, None, Some("1e-3:5:200"), "t")?;
        let (step, tag) = if args.fig3 {
            (true, "fig3")
        } else {
            (false, "fig2")
        };
        let mut outcome = Outcome::Pass;
        for g in FIG_CONTROL_GAMMAS {
            let table = control_table(step, 1.0, 1.0, g, &params, &grid)?;
            let path = args.out_dir.join(format!("{tag}_gamma_{g}.csv"));
            table
                .emit(Some(&path))
                .with_context(|| format!("writing {}", path.display()))?;
            if verdict(&path.display().to_string(), table.column_max(3), tol) == Outcome::Fail {
                outcome = Outcome::Fail;
            }
        }
        return Ok(outcome);
    }
    let gamma = config::required(args.gamma, cfg.gamma, "gamma")?;
    let r = config::required(args.r, cfg.r, "r")?;
    let d = config::required(args.d, cfg.d, "d")?;
    let mut grid = config::grid(args.t.as_deref(), cfg.grid, Some("1e-3:5:200"), "t")?;
    if args.impulse && grid[0] <= 0.0 {
        if grid.len() > 1 && grid[1] <= IMPULSE_T_MIN {
            return Err(UsageError("impulse grid must start above 0".into()).into());
        }
        eprintln!("impulse response is singular at t = 0; first point moved to {IMPULSE_T_MIN}");
        grid[0] = IMPULSE_T_MIN;
    }
    let table = control_table(args.step, r, d, gamma, &params, &grid)?;
    table.emit(args.common.out(&cfg))?;
    let kind = if args.step { "step" } else { "impulse" };
    Ok(verdict(
        &format!("control {kind} gamma={gamma}"),
        table.column_max(3),
        tol,
    ))
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct MlArgs {
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 1.0)]
    q: f64,
    /// Derivative order in z
    #[arg(long, default_value_t = 0)]
    m: u32,
    /// z grid, a:b:n or a single value
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn ml(args: MlArgs) -> anyhow::Result<Outcome> {
    let spec = MLSpec::new(args.p, args.q, args.m)?;
    let grid = config::GridSpec::parse(&args.z)?.points();
    let evals = par_eval(&grid, |z| ml_evaluate(&spec, z))?;
    let mut table = Table::new(&["z", "value", "error_estimate"]);
    for (z, e) in grid.iter().zip(evals) {
        table.push(vec![*z, e.value, e.error_estimate]);
    }
    table.emit(args.out.as_deref())?;
    Ok(Outcome::Pass)
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct CaputoArgs {
    /// Table function, as for `transform`
    #[arg(long)]
    func: String,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long)]
    n: Option<u32>,
    /// Order of the derivative (or of the integral with --integral)
    #[arg(long)]
    gamma: Option<f64>,
    /// Time grid a:b:n or a single value
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// Product-integration panels
    #[arg(long, default_value_t = 200)]
    panels: usize,
    /// Riemann-Liouville integral instead of the Caputo derivative
    #[arg(long)]
    integral: bool,
    #[command(flatten)]
    common: Common,
}

pub fn caputo(args: CaputoArgs) -> anyhow::Result<Outcome> {
    let cfg = args.common.load()?;
    let f = known_function(&args.func, args.a, args.n)?;
    if f == KnownFunction::Dirac {
        return Err(UsageError("dirac cannot be sampled".into()).into());
    }
    let gamma = config::required(args.gamma, cfg.gamma, "gamma")?;
    let rtol = config::tolerance(args.common.tol, cfg.tol, 1e-3)?;
    let grid = config::grid(args.t.as_deref(), cfg.grid, None, "t")?;
    let phi = |t: f64| f.eval(t).unwrap_or(f64::NAN);
    let values = if args.integral {
        par_eval(&grid, |t| rl_integral(phi, gamma, t, args.panels))
    } else {
        let order = FracOrder::new(gamma)?;
        let opts = FracOptions::default().with_rtol(rtol);
        par_eval(&grid, |t| {
            caputo_derivative_with(
                phi,
                DerivativeData::Differenced,
                order,
                t,
                args.panels,
                &opts,
            )
        })
    }?;
    let mut table = Table::new(&["t", "value"]);
    for (t, v) in grid.iter().zip(values) {
        table.push(vec![*t, v]);
    }
    table.emit(args.common.out(&cfg))?;
    Ok(Outcome::Pass)
}

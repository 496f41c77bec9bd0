//! Command-line surface and subcommand execution.

use std::path::PathBuf;

use analytic_core::{
    limits, n_total, qcrb, qfi_baseline_ideal, qfi_ideal, sensitivity_analytic,
    sensitivity_lossy_optimal, BaselineInput,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fock_oracle::{pure_qfi_numeric_with, sensitivity_numeric_with};
use lossy_qfi::{lossy_qfi, lossy_qfi_baseline, LossyBaselineInput};

use crate::angles::parse_angle;
use crate::cfgfile;
use crate::csvout::CsvDoc;
use crate::error::CliError;
use crate::figures;
use crate::params::{RawParams, Resolved};
use crate::sweep::ResultRow;
use crate::verify::{self, FaultKind, Grid, VerifyOptions};

#[derive(Parser, Debug)]
#[command(
    name = "ksu11",
    version,
    about = "Phase-sensitivity and Fisher-information bench for the Kerr-enhanced SU(1,1) interferometer"
)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Homodyne phase sensitivity at the configured working point
    Sensitivity(SensitivityArgs),
    /// Quantum Fisher information and the Cramer-Rao bound
    Qfi(QfiArgs),
    /// Benchmark limits (SQL, HL, super-HL) for the configured state
    Limits(LimitsArgs),
    /// Emit one figure curve as a CSV file
    Figure(FigureArgs),
    /// Run the verification battery of named cross-checks
    Verify(VerifyArgs),
}

/// Shared parameter flags. Angles are in radians and accept pi-expressions
/// (pi/2, -pi/4, 2pi, 0.75pi).
#[derive(Args, Debug, Clone)]
pub struct ParamFlags {
    /// Gain of the first OPA (the second follows unless --g2 is given)
    #[arg(long)]
    pub g: Option<f64>,
    /// Gain of the second OPA
    #[arg(long)]
    pub g2: Option<f64>,
    /// Pump phase of the first OPA
    #[arg(long, value_parser = parse_angle)]
    pub theta1: Option<f64>,
    /// Pump phase of the second OPA (balanced default: theta1 + pi)
    #[arg(long, value_parser = parse_angle)]
    pub theta2: Option<f64>,
    /// Coherent input amplitude |alpha|
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Coherent input phase theta_alpha
    #[arg(long = "theta-alpha", value_parser = parse_angle)]
    pub theta_alpha: Option<f64>,
    /// Kerr order of the phase element (1 or 2)
    #[arg(long)]
    pub k: Option<u8>,
    /// Probe phase
    #[arg(long, value_parser = parse_angle)]
    pub phi: Option<f64>,
    /// Internal transmissivity (loss between the OPAs)
    #[arg(long = "T1")]
    pub t1: Option<f64>,
    /// External transmissivity (loss after the second OPA)
    #[arg(long = "T2")]
    pub t2: Option<f64>,
    /// Detection transmissivity for the Fisher-information loss model
    #[arg(long)]
    pub eta: Option<f64>,
    /// Initial Fock cutoff for the oracle (adaptive growth still applies)
    #[arg(long)]
    pub cutoff: Option<usize>,
    /// Finite-difference step for oracle derivatives
    #[arg(long = "fd-step")]
    pub fd_step: Option<f64>,
    /// Number of independent repetitions in the Cramer-Rao bound
    #[arg(long)]
    pub trials: Option<u64>,
    /// Flat key = value configuration file; flags override its entries
    #[arg(long)]
    pub config: Option<PathBuf>,
}

impl ParamFlags {
    fn to_raw(&self) -> RawParams {
        RawParams {
            g: self.g,
            g2: self.g2,
            theta1: self.theta1,
            theta2: self.theta2,
            alpha: self.alpha,
            theta_alpha: self.theta_alpha,
            k: self.k,
            phi: self.phi,
            t1: self.t1,
            t2: self.t2,
            eta: self.eta,
            cutoff: self.cutoff,
            fd_step: self.fd_step,
            trials: self.trials,
        }
    }

    pub fn gather(&self) -> Result<RawParams, CliError> {
        let base = match &self.config {
            Some(path) => cfgfile::load(path)?,
            None => RawParams::default(),
        };
        Ok(self.to_raw().merged_over(base))
    }
}

#[derive(Args, Debug)]
pub struct SensitivityArgs {
    #[command(flatten)]
    pub params: ParamFlags,
    /// Cross-check the closed form against the truncated-Fock oracle
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaselineKind {
    /// One coherent input, vacuum on the other port
    CsVs,
    /// Two coherent inputs (second amplitude from --beta)
    CsCs,
    /// Coherent plus squeezed-vacuum input (squeezing from --r)
    CsSvs,
}

impl BaselineKind {
    fn label(self) -> &'static str {
        match self {
            BaselineKind::CsVs => "cs-vs",
            BaselineKind::CsCs => "cs-cs",
            BaselineKind::CsSvs => "cs-svs",
        }
    }
}

#[derive(Args, Debug)]
pub struct QfiArgs {
    #[command(flatten)]
    pub params: ParamFlags,
    /// Cross-check the lossless QFI against the truncated-Fock oracle
    #[arg(long)]
    pub oracle: bool,
    /// Evaluate a reference interferometer instead of the Kerr one
    #[arg(long, value_enum)]
    pub baseline: Option<BaselineKind>,
    /// Second coherent amplitude for --baseline cs-cs
    #[arg(long)]
    pub beta: Option<f64>,
    /// Squeezing parameter for --baseline cs-svs
    #[arg(long)]
    pub r: Option<f64>,
}

#[derive(Args, Debug)]
pub struct LimitsArgs {
    #[command(flatten)]
    pub params: ParamFlags,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    /// Figure id (one of 2a, 2b, 3a, 3b, 4, 5qcrb, 6a, 6b, 7, 9a, 9b, 10,
    /// 11a, 11b, 14a, 14b, 15)
    pub id: String,
    /// Output path (default: figure_<id>.csv)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridArg {
    Small,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    Abar1,
    Abar2,
    Abar3,
    Abar4,
    LossyBracket,
    KerrPhase,
}

impl From<FaultArg> for FaultKind {
    fn from(f: FaultArg) -> Self {
        match f {
            FaultArg::Abar1 => FaultKind::Abar1,
            FaultArg::Abar2 => FaultKind::Abar2,
            FaultArg::Abar3 => FaultKind::Abar3,
            FaultArg::Abar4 => FaultKind::Abar4,
            FaultArg::LossyBracket => FaultKind::LossyBracket,
            FaultArg::KerrPhase => FaultKind::KerrPhase,
        }
    }
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Check grid size
    #[arg(long, value_enum, default_value = "small")]
    pub grid: GridArg,
    /// Override a check tolerance: NAME=VALUE (repeatable)
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tol: Vec<String>,
    #[arg(long = "inject-fault", hide = true, value_enum)]
    pub inject_fault: Option<FaultArg>,
}

impl VerifyArgs {
    fn to_options(&self) -> Result<VerifyOptions, CliError> {
        let mut overrides = Vec::new();
        for spec in &self.tol {
            let (name, val) = spec.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("--tol expects NAME=VALUE, got `{spec}`"))
            })?;
            let v: f64 = val
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad tolerance value `{val}`")))?;
            overrides.push((name.trim().to_string(), v));
        }
        Ok(VerifyOptions {
            grid: match self.grid {
                GridArg::Small => Grid::Small,
                GridArg::Full => Grid::Full,
            },
            tol_overrides: overrides,
            fault: self.inject_fault.map(Into::into),
        })
    }
}

pub fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::Sensitivity(a) => {
            cmd_sensitivity(&a)?;
            Ok(0)
        }
        Cmd::Qfi(a) => {
            cmd_qfi(&a)?;
            Ok(0)
        }
        Cmd::Limits(a) => {
            cmd_limits(&a)?;
            Ok(0)
        }
        Cmd::Figure(a) => {
            cmd_figure(&a)?;
            Ok(0)
        }
        Cmd::Verify(a) => verify::run_verify(&a.to_options()?),
    }
}

fn config_comment(r: &Resolved) -> String {
    let c = &r.config;
    format!(
        "config: g1 = {}, g2 = {}, theta1 = {}, theta2 = {}, |alpha| = {}, theta_alpha = {}, \
         k = {}, phi = {}, T1 = {}, T2 = {}, eta = {}",
        c.g1, c.g2, c.theta1, c.theta2, c.alpha_abs, c.theta_alpha, c.k, c.phi, r.loss.t1,
        r.loss.t2, r.eta
    )
}

fn cmd_sensitivity(a: &SensitivityArgs) -> Result<(), CliError> {
    let r = a.params.gather()?.resolve();
    r.config.validate()?;
    r.loss.validate()?;
    let lossless = r.loss.is_lossless();
    let dphi = if lossless {
        sensitivity_analytic(&r.config)?
    } else {
        if r.config.phi != 0.0 {
            return Err(CliError::Usage(
                "the lossy sensitivity closed form is evaluated at the optimal point phi = 0; \
                 rerun with --phi 0"
                    .into(),
            ));
        }
        sensitivity_lossy_optimal(&r.config, &r.loss)?
    };
    let nt = n_total(&r.config);
    let (sql, hl, shl) = limits(nt)?;
    let mut row = ResultRow {
        phi: Some(r.config.phi),
        k: Some(r.config.k),
        t1: Some(r.loss.t1),
        t2: Some(r.loss.t2),
        dphi_analytic: Some(dphi),
        n_total: Some(nt),
        sql: Some(sql),
        hl: Some(hl),
        shl: Some(shl),
        converged: true,
        ..Default::default()
    };
    if a.oracle {
        let numeric = sensitivity_numeric_with(&r.config, &r.loss, r.fd_step, r.cutoff)?;
        row.dphi_oracle = Some(numeric);
        row.rel_dev = Some((dphi - numeric).abs() / numeric.abs().max(1e-300));
    }
    let mut doc = CsvDoc::new();
    doc.comment("homodyne phase sensitivity at the configured working point");
    doc.comment(&config_comment(&r));
    doc.comment(if lossless {
        "method: closed-form error propagation"
    } else {
        "method: closed-form lossy optimal-point sensitivity"
    });
    if a.oracle {
        doc.comment(
            "oracle: truncated-Fock finite difference (central + one Richardson refinement)",
        );
    }
    let mut cols: Vec<&str> = vec!["phi", "k", "t1", "t2", "dphi_analytic"];
    if a.oracle {
        cols.extend(["dphi_oracle", "rel_dev"]);
    }
    cols.extend(["n_total", "sql", "hl", "shl", "converged"]);
    doc.columns(&cols);
    let cells = row.cells(&cols)?;
    doc.push_row(cells)?;
    print!("{}", doc.render());
    Ok(())
}

fn cmd_qfi(a: &QfiArgs) -> Result<(), CliError> {
    let mut raw = a.params.gather()?;
    // Reference interferometers model the linear phase element; default the
    // Kerr order accordingly when it was not given explicitly.
    if a.baseline.is_some() && raw.k.is_none() {
        raw.k = Some(1);
    }
    let r = raw.resolve();
    r.config.validate()?;
    let k = r.config.k;
    let g = r.config.g1;
    let aa = r.config.alpha_abs;
    let eta = r.eta;
    if !eta.is_finite() || !(eta > 0.0 && eta <= 1.0) {
        return Err(CliError::Usage(format!(
            "eta must lie in (0, 1], got {eta}"
        )));
    }
    if a.baseline.is_some() && k != 1 {
        return Err(CliError::Usage(
            "reference interferometers model the linear phase element; pass --k 1 or omit --k"
                .into(),
        ));
    }
    if a.oracle && (eta < 1.0 || a.baseline.is_some()) {
        return Err(CliError::Usage(
            "the oracle cross-check supports the lossless interferometer QFI only".into(),
        ));
    }
    let beta_abs = a.beta.unwrap_or(0.0);
    let sq_r = a.r.unwrap_or(0.0);
    let lossless = eta == 1.0;
    let (fisher, kind): (f64, &str) = match a.baseline {
        None if lossless => (qfi_ideal(&r.config, k)?, "qfi"),
        None => match k {
            1 => (
                lossy_qfi_baseline(&LossyBaselineInput::CsVs { alpha_abs: aa }, g, eta)?,
                "upper-bound",
            ),
            2 => (lossy_qfi(g, aa, eta)?, "upper-bound"),
            other => return Err(CliError::Usage(format!("unsupported Kerr order {other}"))),
        },
        Some(b) if lossless => {
            let input = match b {
                BaselineKind::CsVs => BaselineInput::CsCs {
                    alpha_abs: aa,
                    beta_abs: 0.0,
                },
                BaselineKind::CsCs => BaselineInput::CsCs {
                    alpha_abs: aa,
                    beta_abs,
                },
                BaselineKind::CsSvs => BaselineInput::CsSvs {
                    alpha_abs: aa,
                    r: sq_r,
                },
            };
            (qfi_baseline_ideal(&input, g), "qfi")
        }
        Some(b) => {
            let input = match b {
                BaselineKind::CsVs => LossyBaselineInput::CsVs { alpha_abs: aa },
                BaselineKind::CsCs => LossyBaselineInput::CsCs {
                    alpha_abs: aa,
                    beta_abs,
                },
                BaselineKind::CsSvs => LossyBaselineInput::CsSvs {
                    alpha_abs: aa,
                    r: sq_r,
                },
            };
            (lossy_qfi_baseline(&input, g, eta)?, "upper-bound")
        }
    };
    let information_free = !(fisher > 0.0);
    let qcrb_value = if information_free {
        f64::INFINITY
    } else {
        qcrb(fisher, r.trials)?
    };
    let n_input = match a.baseline {
        None | Some(BaselineKind::CsVs) => aa * aa,
        Some(BaselineKind::CsCs) => aa * aa + beta_abs * beta_abs,
        Some(BaselineKind::CsSvs) => aa * aa + sq_r.sinh().powi(2),
    };
    let mut row = ResultRow {
        k: Some(k),
        eta: Some(eta),
        n_input: Some(n_input),
        fisher: Some(fisher),
        kind: Some(kind.to_string()),
        qcrb: Some(qcrb_value),
        information_free: Some(information_free),
        converged: true,
        ..Default::default()
    };
    let mut cols: Vec<&str> = vec!["k", "eta"];
    if let Some(b) = a.baseline {
        row.baseline = Some(b.label().to_string());
        cols.push("baseline");
    }
    cols.extend(["n_input"]);
    if a.baseline.is_none() {
        row.n_total = Some(n_total(&r.config));
        cols.push("n_total");
    }
    cols.extend(["fisher", "kind", "qcrb", "information_free"]);
    if a.oracle {
        let f_oracle = pure_qfi_numeric_with(&r.config, r.cutoff)?;
        row.fisher_oracle = Some(f_oracle);
        row.rel_dev = Some(if fisher == 0.0 {
            (fisher - f_oracle).abs()
        } else {
            (fisher - f_oracle).abs() / fisher.abs()
        });
        cols.extend(["fisher_oracle", "rel_dev"]);
    }
    let mut doc = CsvDoc::new();
    doc.comment("quantum Fisher information and Cramer-Rao bound");
    doc.comment(&config_comment(&r));
    doc.comment(&format!(
        "qcrb: 1/sqrt(trials * F) with trials = {}; kind `upper-bound` marks a loss-degraded \
         variational value rather than an exact QFI",
        r.trials
    ));
    doc.columns(&cols);
    let cells = row.cells(&cols)?;
    doc.push_row(cells)?;
    print!("{}", doc.render());
    Ok(())
}

fn cmd_limits(a: &LimitsArgs) -> Result<(), CliError> {
    let r = a.params.gather()?.resolve();
    r.config.validate()?;
    let nt = n_total(&r.config);
    let (sql, hl, shl) = limits(nt)?;
    let row = ResultRow {
        n_input: Some(r.config.alpha_abs * r.config.alpha_abs),
        n_total: Some(nt),
        sql: Some(sql),
        hl: Some(hl),
        shl: Some(shl),
        converged: true,
        ..Default::default()
    };
    let cols = ["n_input", "n_total", "sql", "hl", "shl"];
    let mut doc = CsvDoc::new();
    doc.comment("benchmark limits for the configured state");
    doc.comment(&config_comment(&r));
    doc.comment("N_total = |alpha|^2 cosh 2g + 2 sinh^2 g; SQL = 1/sqrt(N), HL = 1/N, super-HL = 1/N^2");
    doc.columns(&cols);
    let cells = row.cells(&cols)?;
    doc.push_row(cells)?;
    print!("{}", doc.render());
    Ok(())
}

fn cmd_figure(a: &FigureArgs) -> Result<(), CliError> {
    let doc = figures::figure_doc(&a.id)?;
    let path = a
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("figure_{}.csv", a.id)));
    std::fs::write(&path, doc.render())?;
    println!("wrote {} ({} rows)", path.display(), doc.row_count());
    Ok(())
}

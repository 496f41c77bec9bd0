//! Figure-curve CSV emission.
//!
//! Each figure id maps to a fixed parameter set and grid, both recorded in
//! the CSV header comments so the files are self-describing. Grids are
//! chosen for visual density; endpoints and symmetric midpoints are exact.
//! Point evaluations run concurrently and are gathered in index order, so
//! repeated runs are byte-identical.

use analytic_core::{
    n_total, qcrb, qfi_baseline_ideal, qfi_ideal_parts, sensitivity_analytic,
    sensitivity_lossy_optimal, sensitivity_optimal, BaselineInput, InterferometerConfig,
    LossConfig,
};
use fock_oracle::signal_curve;
use lossy_qfi::{lossy_qfi, lossy_qfi_baseline, LossyBaselineInput};
use rayon::prelude::*;

use crate::csvout::CsvDoc;
use crate::error::CliError;
use crate::sweep::linspace;

pub const FIGURE_IDS: [&str; 17] = [
    "2a", "2b", "3a", "3b", "4", "5qcrb", "6a", "6b", "7", "9a", "9b", "10", "11a", "11b",
    "14a", "14b", "15",
];

pub fn figure_doc(id: &str) -> Result<CsvDoc, CliError> {
    match id {
        "2a" => fig_2a(),
        "2b" => fig_2b(),
        "3a" => fig_3(1, "3a"),
        "3b" => fig_3(2, "3b"),
        "4" => fig_4(),
        "5qcrb" => fig_5qcrb(),
        "6a" => fig_6a(),
        "6b" => fig_6b(),
        "7" => fig_7(),
        "9a" => fig_9(1, "9a"),
        "9b" => fig_9(2, "9b"),
        "10" => fig_10(),
        "11a" => fig_11(true, "11a"),
        "11b" => fig_11(false, "11b"),
        "14a" => fig_14a(),
        "14b" => fig_14b(),
        "15" => fig_15(),
        other => Err(CliError::Usage(format!(
            "unknown figure id `{other}`; known ids: {}",
            FIGURE_IDS.join(", ")
        ))),
    }
}

/// Balanced default configuration (g = 1, |alpha| = 1, theta_alpha = pi/2,
/// phi = 0) with the given Kerr order.
fn base(k: u8) -> InterferometerConfig {
    InterferometerConfig {
        k,
        ..InterferometerConfig::default()
    }
}

/// Evaluate `f` over `xs` concurrently, gather in index order, abort on
/// oracle non-convergence, log and omit points with domain errors.
fn eval_grid<T: Send>(
    id: &str,
    what: &str,
    xs: &[f64],
    f: impl Fn(f64) -> Result<T, CliError> + Sync,
) -> Result<Vec<(f64, T)>, CliError> {
    let computed: Vec<(f64, Result<T, CliError>)> =
        xs.par_iter().map(|&x| (x, f(x))).collect();
    let mut out = Vec::with_capacity(xs.len());
    for (x, r) in computed {
        match r {
            Ok(t) => out.push((x, t)),
            Err(e @ CliError::NonConvergence(_)) => return Err(e),
            Err(e) => eprintln!("figure {id}: omitting {what} = {x}: {e}"),
        }
    }
    Ok(out)
}

/// Several oracle signal curves over one phase grid, one parallel task per
/// curve. A whole curve is a single oracle call so the loss-branch ensemble
/// is built once per curve, not once per phase.
fn signal_curves(
    tasks: &[(InterferometerConfig, LossConfig)],
    phis: &[f64],
) -> Result<Vec<Vec<(f64, f64)>>, CliError> {
    let curves: Vec<Result<Vec<(f64, f64)>, _>> = tasks
        .par_iter()
        .map(|(config, loss)| signal_curve(config, phis, loss))
        .collect();
    let mut out = Vec::with_capacity(tasks.len());
    for c in curves {
        out.push(c?);
    }
    Ok(out)
}

fn fig_2a() -> Result<CsvDoc, CliError> {
    let phis = linspace(-0.6, 0.6, 601);
    let rows = eval_grid("2a", "phi", &phis, |phi| {
        let mut c1 = base(1);
        c1.phi = phi;
        let mut c2 = base(2);
        c2.phi = phi;
        Ok::<_, CliError>([phi, sensitivity_analytic(&c1)?, sensitivity_analytic(&c2)?])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 2a");
    doc.comment("phase sensitivity vs probe phase for the linear (k = 1) and quadratic (k = 2) Kerr phase elements");
    doc.comment("fixed: g1 = g2 = 1, theta1 = 0, theta2 = pi, |alpha| = 1, theta_alpha = pi/2, lossless");
    doc.comment("grid: phi in [-0.6, 0.6], 601 points");
    doc.comment("method: closed-form error propagation of the homodyne signal");
    doc.columns(&["phi", "dphi_k1", "dphi_k2"]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

fn fig_2b() -> Result<CsvDoc, CliError> {
    let phis = linspace(-0.6, 0.6, 601);
    let lossless = LossConfig::default();
    let mut curves = signal_curves(
        &[(base(1), lossless.clone()), (base(2), lossless)],
        &phis,
    )?;
    let s2 = curves.pop().expect("two curves requested");
    let s1 = curves.pop().expect("two curves requested");
    let mut doc = CsvDoc::new();
    doc.comment("figure 2b");
    doc.comment("mean homodyne output signal vs probe phase for k = 1 and k = 2");
    doc.comment("fixed: g1 = g2 = 1, theta1 = 0, theta2 = pi, |alpha| = 1, theta_alpha = pi/2, lossless");
    doc.comment("grid: phi in [-0.6, 0.6], 601 points");
    doc.comment("method: truncated-Fock-space evaluation, adaptive cutoff with doubling confirmation");
    doc.columns(&["phi", "signal_k1", "signal_k2"]);
    for (i, &phi) in phis.iter().enumerate() {
        doc.push_nums(&[phi, s1[i].0, s2[i].0])?;
    }
    Ok(doc)
}

fn fig_3(k: u8, id: &str) -> Result<CsvDoc, CliError> {
    let gs = linspace(0.1, 2.0, 39);
    let aas = linspace(0.1, 3.0, 59);
    let cells: Vec<(f64, f64)> = gs
        .iter()
        .flat_map(|&g| aas.iter().map(move |&a| (g, a)))
        .collect();
    let computed: Vec<Result<f64, CliError>> = cells
        .par_iter()
        .map(|&(g, a)| {
            let mut c = base(k);
            c.g1 = g;
            c.g2 = g;
            c.alpha_abs = a;
            Ok(sensitivity_optimal(&c)?)
        })
        .collect();
    let mut doc = CsvDoc::new();
    doc.comment(&format!("figure {id}"));
    doc.comment(&format!(
        "optimal-point phase sensitivity vs OPA gain g and coherent amplitude |alpha|, k = {k}"
    ));
    doc.comment("fixed: theta1 = 0, theta2 = pi, theta_alpha = pi/2, phi = 0, lossless");
    doc.comment("grid: g in [0.1, 2.0], 39 points; |alpha| in [0.1, 3.0], 59 points; long format");
    doc.comment("method: closed-form optimal-point sensitivity");
    doc.columns(&["g", "alpha", "dphi"]);
    for (&(g, a), r) in cells.iter().zip(computed) {
        match r {
            Ok(d) => doc.push_nums(&[g, a, d])?,
            Err(e @ CliError::NonConvergence(_)) => return Err(e),
            Err(e) => eprintln!("figure {id}: omitting (g, alpha) = ({g}, {a}): {e}"),
        }
    }
    Ok(doc)
}

fn fig_4() -> Result<CsvDoc, CliError> {
    let gs = linspace(0.2, 3.0, 141);
    let rows = eval_grid("4", "g", &gs, |g| {
        let mut c = base(1);
        c.g1 = g;
        c.g2 = g;
        let d1 = sensitivity_optimal(&c)?;
        c.k = 2;
        let d2 = sensitivity_optimal(&c)?;
        let nt = n_total(&c);
        let (sql, hl, shl) = analytic_core::limits(nt)?;
        Ok::<_, CliError>([g, d1, d2, sql, hl, shl, nt])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 4");
    doc.comment("optimal-point sensitivity vs OPA gain for k = 1 and k = 2, against the N_Total benchmark limits");
    doc.comment("fixed: |alpha| = 1, theta_alpha = pi/2, phi = 0, lossless; N_Total = |alpha|^2 cosh 2g + 2 sinh^2 g");
    doc.comment("grid: g in [0.2, 3.0], 141 points");
    doc.columns(&["g", "dphi_k1", "dphi_k2", "sql", "hl", "shl", "n_total"]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

/// Split a total input photon number between the two probe inputs:
/// coherent + coherent gets |alpha|^2 = |beta|^2 = N/2, coherent + squeezed
/// vacuum gets |alpha|^2 = sinh^2 r = N/2.
fn split_inputs(n_in: f64) -> (BaselineInput, BaselineInput) {
    let half = n_in / 2.0;
    let a = half.sqrt();
    (
        BaselineInput::CsCs {
            alpha_abs: a,
            beta_abs: a,
        },
        BaselineInput::CsSvs {
            alpha_abs: a,
            r: half.sqrt().asinh(),
        },
    )
}

fn fig_5qcrb() -> Result<CsvDoc, CliError> {
    let ns = linspace(0.2, 8.0, 79);
    let rows = eval_grid("5qcrb", "n_input", &ns, |n_in| {
        let mut c = base(2);
        c.alpha_abs = n_in.sqrt();
        let (f1, f2) = qfi_ideal_parts(c.g1, c.alpha_abs);
        let (cs_cs, cs_svs) = split_inputs(n_in);
        Ok::<_, CliError>([
            n_in,
            n_total(&c),
            qcrb(f1, 1)?,
            qcrb(f2, 1)?,
            qcrb(qfi_baseline_ideal(&cs_svs, c.g1), 1)?,
            qcrb(qfi_baseline_ideal(&cs_cs, c.g1), 1)?,
        ])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 5qcrb");
    doc.comment("quantum Cramer-Rao bound vs input photon number for k = 1, k = 2, and the external-reference interferometers");
    doc.comment("fixed: g1 = g2 = 1, theta_alpha = pi/2, lossless; equal input split |alpha|^2 = |beta|^2 = N/2 (two coherent) and |alpha|^2 = sinh^2 r = N/2 (coherent + squeezed vacuum)");
    doc.comment("grid: N_input in [0.2, 8.0], 79 points");
    doc.comment("note: only the Cramer-Rao curves are emitted; the homodyne baselines of the corresponding sensitivity plot are outside the modeled detection scheme and are omitted");
    doc.columns(&[
        "n_input",
        "n_total",
        "qcrb_k1",
        "qcrb_k2",
        "qcrb_cs_svs",
        "qcrb_cs_cs",
    ]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

fn fig_6a() -> Result<CsvDoc, CliError> {
    let gs = linspace(0.0, 3.0, 151);
    let rows = eval_grid("6a", "g", &gs, |g| {
        let (f1, f2) = qfi_ideal_parts(g, 1.0);
        Ok::<_, CliError>([g, f1, f2])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 6a");
    doc.comment("quantum Fisher information vs OPA gain for k = 1 and k = 2");
    doc.comment("fixed: |alpha| = 1, theta_alpha = pi/2, lossless");
    doc.comment("grid: g in [0.0, 3.0], 151 points");
    doc.columns(&["g", "f_k1", "f_k2"]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

fn fig_6b() -> Result<CsvDoc, CliError> {
    let gs = linspace(0.1, 3.0, 146);
    let rows = eval_grid("6b", "g", &gs, |g| {
        let (f1, f2) = qfi_ideal_parts(g, 1.0);
        Ok::<_, CliError>([g, qcrb(f1, 1)?, qcrb(f2, 1)?])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 6b");
    doc.comment("quantum Cramer-Rao bound vs OPA gain for k = 1 and k = 2");
    doc.comment("fixed: |alpha| = 1, theta_alpha = pi/2, lossless");
    doc.comment("grid: g in [0.1, 3.0], 146 points (g = 0 is excluded: the Fisher information vanishes there and the bound diverges)");
    doc.columns(&["g", "qcrb_k1", "qcrb_k2"]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

fn fig_7() -> Result<CsvDoc, CliError> {
    let ns = linspace(0.2, 8.0, 79);
    let rows = eval_grid("7", "n_input", &ns, |n_in| {
        let mut c = base(1);
        c.alpha_abs = n_in.sqrt();
        let (f1, f2) = qfi_ideal_parts(c.g1, c.alpha_abs);
        let d1 = sensitivity_optimal(&c)?;
        c.k = 2;
        let d2 = sensitivity_optimal(&c)?;
        let (cs_cs, cs_svs) = split_inputs(n_in);
        Ok::<_, CliError>([
            n_in,
            n_total(&c),
            qcrb(f1, 1)?,
            qcrb(f2, 1)?,
            d1,
            d2,
            qcrb(qfi_baseline_ideal(&cs_svs, c.g1), 1)?,
            qcrb(qfi_baseline_ideal(&cs_cs, c.g1), 1)?,
        ])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 7");
    doc.comment("quantum Cramer-Rao bound and homodyne sensitivity vs input photon number for k = 1 and k = 2");
    doc.comment("fixed: g1 = g2 = 1, theta_alpha = pi/2, phi = 0, lossless; input split as in figure 5qcrb");
    doc.comment("grid: N_input in [0.2, 8.0], 79 points");
    doc.comment("note: the external-reference curves are Cramer-Rao bounds only; their homodyne counterparts are outside the modeled detection scheme and are omitted");
    doc.columns(&[
        "n_input",
        "n_total",
        "qcrb_k1",
        "qcrb_k2",
        "dphi_k1",
        "dphi_k2",
        "qcrb_cs_svs",
        "qcrb_cs_cs",
    ]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

fn fig_9(k: u8, id: &str) -> Result<CsvDoc, CliError> {
    let t1s = linspace(0.05, 1.0, 39);
    let t2s = linspace(0.05, 1.0, 39);
    let cells: Vec<(f64, f64)> = t1s
        .iter()
        .flat_map(|&t1| t2s.iter().map(move |&t2| (t1, t2)))
        .collect();
    let computed: Vec<Result<f64, CliError>> = cells
        .par_iter()
        .map(|&(t1, t2)| {
            let c = base(k);
            Ok(sensitivity_lossy_optimal(&c, &LossConfig { t1, t2 })?)
        })
        .collect();
    let mut doc = CsvDoc::new();
    doc.comment(&format!("figure {id}"));
    doc.comment(&format!(
        "optimal-point sensitivity vs internal (T1) and external (T2) transmissivity, k = {k}"
    ));
    doc.comment("fixed: g1 = g2 = 1, |alpha| = 1, theta_alpha = pi/2, phi = 0");
    doc.comment("grid: T1 in [0.05, 1.0], 39 points; T2 in [0.05, 1.0], 39 points; long format");
    if k == 2 {
        doc.comment("note: the k = 2 closed form is exact under external-only loss (T1 = 1); with internal loss it underestimates the phase uncertainty relative to the full truncated-Fock computation");
    }
    doc.columns(&["t1", "t2", "dphi"]);
    for (&(t1, t2), r) in cells.iter().zip(computed) {
        match r {
            Ok(d) => doc.push_nums(&[t1, t2, d])?,
            Err(e @ CliError::NonConvergence(_)) => return Err(e),
            Err(e) => eprintln!("figure {id}: omitting (T1, T2) = ({t1}, {t2}): {e}"),
        }
    }
    Ok(doc)
}

fn fig_10() -> Result<CsvDoc, CliError> {
    let phis = linspace(-0.6, 0.6, 121);
    let lossless = LossConfig::default();
    let lossy = LossConfig { t1: 0.6, t2: 0.6 };
    let mut curves = signal_curves(
        &[
            (base(1), lossless.clone()),
            (base(2), lossless),
            (base(1), lossy.clone()),
            (base(2), lossy),
        ],
        &phis,
    )?;
    let l2 = curves.pop().expect("four curves requested");
    let l1 = curves.pop().expect("four curves requested");
    let i2 = curves.pop().expect("four curves requested");
    let i1 = curves.pop().expect("four curves requested");
    let mut doc = CsvDoc::new();
    doc.comment("figure 10");
    doc.comment("mean homodyne output signal vs probe phase, ideal and with T1 = T2 = 0.6 photon loss");
    doc.comment("fixed: g1 = g2 = 1, |alpha| = 1, theta_alpha = pi/2");
    doc.comment("grid: phi in [-0.6, 0.6], 121 points");
    doc.comment("method: truncated-Fock-space evaluation; internal loss via a Kraus branch sum, external loss via exact quadrature-moment damping");
    doc.columns(&[
        "phi",
        "signal_k1_ideal",
        "signal_k2_ideal",
        "signal_k1_lossy",
        "signal_k2_lossy",
    ]);
    for (i, &phi) in phis.iter().enumerate() {
        doc.push_nums(&[phi, i1[i].0, i2[i].0, l1[i].0, l2[i].0])?;
    }
    Ok(doc)
}

fn fig_11(vs_g: bool, id: &str) -> Result<CsvDoc, CliError> {
    let xs = linspace(0.2, 3.0, 141);
    let internal = LossConfig { t1: 0.6, t2: 1.0 };
    let external = LossConfig { t1: 1.0, t2: 0.6 };
    let rows = eval_grid(id, if vs_g { "g" } else { "alpha" }, &xs, |x| {
        let mut c = base(1);
        if vs_g {
            c.g1 = x;
            c.g2 = x;
        } else {
            c.alpha_abs = x;
        }
        let mut out = [x, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        for (i, k) in [1u8, 2u8].iter().enumerate() {
            c.k = *k;
            out[1 + 3 * i] = sensitivity_optimal(&c)?;
            out[2 + 3 * i] = sensitivity_lossy_optimal(&c, &internal)?;
            out[3 + 3 * i] = sensitivity_lossy_optimal(&c, &external)?;
        }
        Ok::<_, CliError>(out)
    })?;
    let mut doc = CsvDoc::new();
    doc.comment(&format!("figure {id}"));
    doc.comment(
        "optimal-point sensitivity: lossless, internal loss (T1 = 0.6, T2 = 1), and external loss (T1 = 1, T2 = 0.6)",
    );
    if vs_g {
        doc.comment("fixed: |alpha| = 1, theta_alpha = pi/2, phi = 0");
        doc.comment("grid: g in [0.2, 3.0], 141 points");
    } else {
        doc.comment("fixed: g1 = g2 = 1, theta_alpha = pi/2, phi = 0");
        doc.comment("grid: |alpha| in [0.2, 3.0], 141 points");
    }
    doc.comment("note: the k = 2 closed form is exact under external-only loss; with internal loss it underestimates the phase uncertainty relative to the full truncated-Fock computation");
    doc.columns(&[
        if vs_g { "g" } else { "alpha" },
        "dphi_k1",
        "dphi_k1_int",
        "dphi_k1_ext",
        "dphi_k2",
        "dphi_k2_int",
        "dphi_k2_ext",
    ]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

/// Lossy Cramer-Rao data shared by figures 14a/14b: ideal and eta-degraded
/// bounds for k = 1 (variational baseline bound for one coherent input) and
/// k = 2 (variational bound for the Kerr-enhanced state).
fn lossy_qcrb_cells(g: f64, alpha_abs: f64, eta: f64) -> Result<[f64; 4], CliError> {
    let (f1, f2) = qfi_ideal_parts(g, alpha_abs);
    let f1_lossy = lossy_qfi_baseline(&LossyBaselineInput::CsVs { alpha_abs }, g, eta)?;
    let f2_lossy = lossy_qfi(g, alpha_abs, eta)?;
    Ok([qcrb(f1, 1)?, qcrb(f1_lossy, 1)?, qcrb(f2, 1)?, qcrb(f2_lossy, 1)?])
}

fn fig_14a() -> Result<CsvDoc, CliError> {
    let etas = linspace(0.05, 1.0, 191);
    let rows = eval_grid("14a", "eta", &etas, |eta| {
        let c = lossy_qcrb_cells(1.0, 1.0, eta)?;
        Ok::<_, CliError>([eta, c[0], c[1], c[2], c[3]])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 14a");
    doc.comment("quantum Cramer-Rao bound vs detection transmissivity eta, ideal and loss-degraded, for k = 1 and k = 2");
    doc.comment("fixed: g1 = g2 = 1, |alpha| = 1");
    doc.comment("grid: eta in [0.05, 1.0], 191 points");
    doc.comment("method: loss-degraded values are variational upper bounds on the lossy Fisher information (lower bounds on the uncertainty are obtained at eta = 1)");
    doc.columns(&[
        "eta",
        "qcrb_k1_ideal",
        "qcrb_k1_lossy",
        "qcrb_k2_ideal",
        "qcrb_k2_lossy",
    ]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

fn fig_14b() -> Result<CsvDoc, CliError> {
    let gs = linspace(0.1, 3.0, 146);
    let rows = eval_grid("14b", "g", &gs, |g| {
        let c = lossy_qcrb_cells(g, 1.0, 0.6)?;
        Ok::<_, CliError>([g, c[0], c[1], c[2], c[3]])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 14b");
    doc.comment("quantum Cramer-Rao bound vs OPA gain, ideal and loss-degraded at eta = 0.6, for k = 1 and k = 2");
    doc.comment("fixed: |alpha| = 1, eta = 0.6");
    doc.comment("grid: g in [0.1, 3.0], 146 points");
    doc.columns(&["g", "qcrb_k1_ideal", "qcrb_k1_lossy", "qcrb_k2_ideal", "qcrb_k2_lossy"]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

fn fig_15() -> Result<CsvDoc, CliError> {
    let ns = linspace(0.2, 8.0, 79);
    let g = 1.0;
    let eta = 0.6;
    let rows = eval_grid("15", "n_input", &ns, |n_in| {
        let alpha_abs = n_in.sqrt();
        let c = lossy_qcrb_cells(g, alpha_abs, eta)?;
        let (cs_cs, cs_svs) = split_inputs(n_in);
        let half = n_in / 2.0;
        let a = half.sqrt();
        let cs_svs_lossy = lossy_qfi_baseline(
            &LossyBaselineInput::CsSvs {
                alpha_abs: a,
                r: half.sqrt().asinh(),
            },
            g,
            eta,
        )?;
        let cs_cs_lossy = lossy_qfi_baseline(
            &LossyBaselineInput::CsCs {
                alpha_abs: a,
                beta_abs: a,
            },
            g,
            eta,
        )?;
        Ok::<_, CliError>([
            n_in,
            c[0],
            c[1],
            c[2],
            c[3],
            qcrb(qfi_baseline_ideal(&cs_svs, g), 1)?,
            qcrb(cs_svs_lossy, 1)?,
            qcrb(qfi_baseline_ideal(&cs_cs, g), 1)?,
            qcrb(cs_cs_lossy, 1)?,
        ])
    })?;
    let mut doc = CsvDoc::new();
    doc.comment("figure 15");
    doc.comment("quantum Cramer-Rao bound vs input photon number at eta = 0.6: Kerr interferometer (k = 1, k = 2) and external-reference interferometers, ideal and loss-degraded");
    doc.comment("fixed: g1 = g2 = 1, eta = 0.6; input split as in figure 5qcrb");
    doc.comment("grid: N_input in [0.2, 8.0], 79 points");
    doc.columns(&[
        "n_input",
        "qcrb_k1_ideal",
        "qcrb_k1_lossy",
        "qcrb_k2_ideal",
        "qcrb_k2_lossy",
        "qcrb_cs_svs_ideal",
        "qcrb_cs_svs_lossy",
        "qcrb_cs_cs_ideal",
        "qcrb_cs_cs_lossy",
    ]);
    for (_, cells) in rows {
        doc.push_nums(&cells)?;
    }
    Ok(doc)
}

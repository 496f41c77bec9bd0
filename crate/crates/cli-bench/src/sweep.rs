//! One-dimensional parameter sweeps and the common result-row shape.

use analytic_core::{InterferometerConfig, LossConfig};

use crate::error::CliError;

pub const MAX_SWEEP_POINTS: usize = 100_000;

/// Which quantity a sweep varies. `NInput` sweeps the input photon number
/// N_in = |alpha|^2 of the coherent probe (|alpha| = sqrt(N_in)).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Phi,
    G,
    AlphaAbs,
    T1,
    T2,
    Eta,
    NInput,
}

/// A validated 1-D grid plus the fixed base configuration it perturbs.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub variable: SweepVariable,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub config: InterferometerConfig,
    pub loss: LossConfig,
    pub eta: f64,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        if !self.start.is_finite() || !self.stop.is_finite() || self.start >= self.stop {
            return Err(CliError::Usage(format!(
                "sweep endpoints must be finite with start < stop, got [{}, {}]",
                self.start, self.stop
            )));
        }
        if self.points < 2 || self.points > MAX_SWEEP_POINTS {
            return Err(CliError::Usage(format!(
                "sweep needs between 2 and {MAX_SWEEP_POINTS} points, got {}",
                self.points
            )));
        }
        Ok(())
    }

    /// Grid values with exact endpoints: v_i = (start (n-1-i) + stop i)/(n-1).
    /// Symmetric grids hit exact zero at the midpoint.
    pub fn values(&self) -> Vec<f64> {
        linspace(self.start, self.stop, self.points)
    }

    /// The base configuration with the swept variable substituted.
    pub fn at(&self, v: f64) -> (InterferometerConfig, LossConfig, f64) {
        let mut config = self.config;
        let mut loss = self.loss;
        let mut eta = self.eta;
        match self.variable {
            SweepVariable::Phi => config.phi = v,
            SweepVariable::G => {
                config.g1 = v;
                config.g2 = v;
            }
            SweepVariable::AlphaAbs => config.alpha_abs = v,
            SweepVariable::T1 => loss.t1 = v,
            SweepVariable::T2 => loss.t2 = v,
            SweepVariable::Eta => eta = v,
            SweepVariable::NInput => config.alpha_abs = v.sqrt(),
        }
        (config, loss, eta)
    }
}

/// Evenly spaced grid with exact endpoints.
pub fn linspace(start: f64, stop: f64, points: usize) -> Vec<f64> {
    assert!(points >= 2);
    let n1 = (points - 1) as f64;
    (0..points)
        .map(|i| (start * (n1 - i as f64) + stop * i as f64) / n1)
        .collect()
}

/// One emitted result line. Optional fields cover the union of the scalar
/// subcommand schemas; `cells` materializes the named columns and refuses
/// missing fields and NaN.
#[derive(Debug, Clone, Default)]
pub struct ResultRow {
    pub swept: Option<f64>,
    pub phi: Option<f64>,
    pub k: Option<u8>,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub eta: Option<f64>,
    pub baseline: Option<String>,
    pub kind: Option<String>,
    pub n_input: Option<f64>,
    pub n_total: Option<f64>,
    pub dphi_analytic: Option<f64>,
    pub dphi_oracle: Option<f64>,
    pub rel_dev: Option<f64>,
    pub fisher: Option<f64>,
    pub fisher_oracle: Option<f64>,
    pub qcrb: Option<f64>,
    pub sql: Option<f64>,
    pub hl: Option<f64>,
    pub shl: Option<f64>,
    pub information_free: Option<bool>,
    pub converged: bool,
}

impl ResultRow {
    pub fn cells(&self, cols: &[&str]) -> Result<Vec<String>, CliError> {
        let mut out = Vec::with_capacity(cols.len());
        for &name in cols {
            let cell = match name {
                "swept" => self.swept.map(crate::csvout::num).transpose()?,
                "phi" => self.phi.map(crate::csvout::num).transpose()?,
                "k" => self.k.map(|k| Ok::<_, CliError>(k.to_string())).transpose()?,
                "t1" => self.t1.map(crate::csvout::num).transpose()?,
                "t2" => self.t2.map(crate::csvout::num).transpose()?,
                "eta" => self.eta.map(crate::csvout::num).transpose()?,
                "baseline" => self.baseline.clone(),
                "kind" => self.kind.clone(),
                "n_input" => self.n_input.map(crate::csvout::num).transpose()?,
                "n_total" => self.n_total.map(crate::csvout::num).transpose()?,
                "dphi_analytic" => self.dphi_analytic.map(crate::csvout::num).transpose()?,
                "dphi_oracle" => self.dphi_oracle.map(crate::csvout::num).transpose()?,
                "rel_dev" => self.rel_dev.map(crate::csvout::num).transpose()?,
                "fisher" => self.fisher.map(crate::csvout::num).transpose()?,
                "fisher_oracle" => self.fisher_oracle.map(crate::csvout::num).transpose()?,
                "qcrb" => self.qcrb.map(crate::csvout::num).transpose()?,
                "sql" => self.sql.map(crate::csvout::num).transpose()?,
                "hl" => self.hl.map(crate::csvout::num).transpose()?,
                "shl" => self.shl.map(crate::csvout::num).transpose()?,
                "information_free" => self.information_free.map(|b| b.to_string()),
                "converged" => Some(self.converged.to_string()),
                other => {
                    return Err(CliError::Verification(format!(
                        "unknown result column `{other}`"
                    )))
                }
            };
            match cell {
                Some(c) => out.push(c),
                None => {
                    return Err(CliError::Verification(format!(
                        "result column `{name}` has no value"
                    )))
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_exact_endpoints_and_midzero() {
        let v = linspace(-0.6, 0.6, 601);
        assert_eq!(v.len(), 601);
        assert_eq!(v[0], -0.6);
        assert_eq!(v[600], 0.6);
        assert_eq!(v[300], 0.0);
    }

    #[test]
    fn sweep_validation() {
        let base = SweepSpec {
            variable: SweepVariable::G,
            start: 0.2,
            stop: 1.0,
            points: 5,
            config: InterferometerConfig::default(),
            loss: LossConfig::default(),
            eta: 1.0,
        };
        assert!(base.validate().is_ok());
        let mut bad = base.clone();
        bad.points = 1;
        assert!(bad.validate().is_err());
        let mut bad = base.clone();
        bad.stop = bad.start;
        assert!(bad.validate().is_err());
        let mut bad = base;
        bad.points = MAX_SWEEP_POINTS + 1;
        assert!(bad.validate().is_err());
    }

    #[test]
    fn substitution_touches_the_right_field() {
        let spec = SweepSpec {
            variable: SweepVariable::NInput,
            start: 1.0,
            stop: 4.0,
            points: 4,
            config: InterferometerConfig::default(),
            loss: LossConfig::default(),
            eta: 1.0,
        };
        let (c, _, _) = spec.at(4.0);
        assert_eq!(c.alpha_abs, 2.0);
        let spec = SweepSpec {
            variable: SweepVariable::T2,
            ..spec
        };
        let (_, l, _) = spec.at(0.7);
        assert_eq!(l.t2, 0.7);
        assert_eq!(l.t1, 1.0);
    }

    #[test]
    fn row_cells_reject_missing_and_unknown() {
        let row = ResultRow {
            dphi_analytic: Some(0.25),
            ..Default::default()
        };
        assert_eq!(row.cells(&["dphi_analytic"]).unwrap(), vec!["2.50000000e-1"]);
        assert!(row.cells(&["fisher"]).is_err());
        assert!(row.cells(&["no_such_column"]).is_err());
    }
}

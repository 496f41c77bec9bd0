//! Parameter resolution: defaults < config file < command-line flags.
//!
//! All sources fill the same `RawParams` option-set; `resolve` then applies
//! the documented defaults (balanced interferometer, g = 1, |alpha| = 1,
//! theta_alpha = pi/2, k = 2, phi = 0, no loss).

use std::f64::consts::PI;

use analytic_core::{InterferometerConfig, LossConfig};
use fock_oracle::Cutoff;

use crate::angles::parse_angle;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RawParams {
    pub g: Option<f64>,
    pub g2: Option<f64>,
    pub theta1: Option<f64>,
    pub theta2: Option<f64>,
    pub alpha: Option<f64>,
    pub theta_alpha: Option<f64>,
    pub k: Option<u8>,
    pub phi: Option<f64>,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub eta: Option<f64>,
    pub cutoff: Option<usize>,
    pub fd_step: Option<f64>,
    pub trials: Option<u64>,
}

fn num(v: &str) -> Result<f64, String> {
    v.parse::<f64>().map_err(|_| format!("bad number `{v}`"))
}

impl RawParams {
    /// Set one field from a config-file `key = value` pair. Keys mirror the
    /// long flag names.
    pub fn set_key(&mut self, key: &str, val: &str) -> Result<(), String> {
        match key {
            "g" => self.g = Some(num(val)?),
            "g2" => self.g2 = Some(num(val)?),
            "theta1" => self.theta1 = Some(parse_angle(val)?),
            "theta2" => self.theta2 = Some(parse_angle(val)?),
            "alpha" => self.alpha = Some(num(val)?),
            "theta-alpha" => self.theta_alpha = Some(parse_angle(val)?),
            "k" => self.k = Some(val.parse::<u8>().map_err(|_| format!("bad k `{val}`"))?),
            "phi" => self.phi = Some(parse_angle(val)?),
            "T1" => self.t1 = Some(num(val)?),
            "T2" => self.t2 = Some(num(val)?),
            "eta" => self.eta = Some(num(val)?),
            "cutoff" => {
                self.cutoff =
                    Some(val.parse::<usize>().map_err(|_| format!("bad cutoff `{val}`"))?)
            }
            "fd-step" => self.fd_step = Some(num(val)?),
            "trials" => {
                self.trials =
                    Some(val.parse::<u64>().map_err(|_| format!("bad trials `{val}`"))?)
            }
            other => return Err(format!("unknown configuration key `{other}`")),
        }
        Ok(())
    }

    /// Overlay: fields set on `self` win, missing ones fall back to `base`.
    pub fn merged_over(self, base: RawParams) -> RawParams {
        RawParams {
            g: self.g.or(base.g),
            g2: self.g2.or(base.g2),
            theta1: self.theta1.or(base.theta1),
            theta2: self.theta2.or(base.theta2),
            alpha: self.alpha.or(base.alpha),
            theta_alpha: self.theta_alpha.or(base.theta_alpha),
            k: self.k.or(base.k),
            phi: self.phi.or(base.phi),
            t1: self.t1.or(base.t1),
            t2: self.t2.or(base.t2),
            eta: self.eta.or(base.eta),
            cutoff: self.cutoff.or(base.cutoff),
            fd_step: self.fd_step.or(base.fd_step),
            trials: self.trials.or(base.trials),
        }
    }

    pub fn resolve(&self) -> Resolved {
        let g = self.g.unwrap_or(1.0);
        let config = InterferometerConfig {
            g1: g,
            g2: self.g2.unwrap_or(g),
            theta1: self.theta1.unwrap_or(0.0),
            theta2: self.theta2.unwrap_or(PI),
            alpha_abs: self.alpha.unwrap_or(1.0),
            theta_alpha: self.theta_alpha.unwrap_or(PI / 2.0),
            k: self.k.unwrap_or(2),
            phi: self.phi.unwrap_or(0.0),
        };
        let loss = LossConfig {
            t1: self.t1.unwrap_or(1.0),
            t2: self.t2.unwrap_or(1.0),
        };
        Resolved {
            config,
            loss,
            eta: self.eta.unwrap_or(1.0),
            cutoff: match self.cutoff {
                Some(n) => Cutoff::adaptive_from(n),
                None => Cutoff::auto(),
            },
            fd_step: self.fd_step.unwrap_or(1e-3),
            trials: self.trials.unwrap_or(1),
        }
    }
}

/// Fully resolved run parameters.
pub struct Resolved {
    pub config: InterferometerConfig,
    pub loss: LossConfig,
    pub eta: f64,
    pub cutoff: Cutoff,
    pub fd_step: f64,
    pub trials: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_balanced_k2() {
        let r = RawParams::default().resolve();
        assert_eq!(r.config.g1, 1.0);
        assert_eq!(r.config.g2, 1.0);
        assert_eq!(r.config.theta1, 0.0);
        assert_eq!(r.config.theta2, PI);
        assert_eq!(r.config.k, 2);
        assert_eq!(r.config.phi, 0.0);
        assert_eq!(r.loss.t1, 1.0);
        assert_eq!(r.eta, 1.0);
        assert_eq!(r.fd_step, 1e-3);
        assert_eq!(r.trials, 1);
        assert!(r.config.is_balanced());
    }

    #[test]
    fn g2_follows_g_unless_set() {
        let mut p = RawParams::default();
        p.set_key("g", "0.7").unwrap();
        assert_eq!(p.resolve().config.g2, 0.7);
        p.set_key("g2", "0.9").unwrap();
        assert_eq!(p.resolve().config.g2, 0.9);
    }

    #[test]
    fn flags_override_file() {
        let mut file = RawParams::default();
        file.set_key("g", "0.5").unwrap();
        file.set_key("k", "1").unwrap();
        let mut flags = RawParams::default();
        flags.set_key("g", "1.5").unwrap();
        let merged = flags.merged_over(file);
        let r = merged.resolve();
        assert_eq!(r.config.g1, 1.5);
        assert_eq!(r.config.k, 1);
    }

    #[test]
    fn unknown_key_rejected() {
        let mut p = RawParams::default();
        assert!(p.set_key("gain", "1").is_err());
    }

    #[test]
    fn angles_accept_pi_tokens() {
        let mut p = RawParams::default();
        p.set_key("theta-alpha", "pi/2").unwrap();
        assert_eq!(p.theta_alpha, Some(PI / 2.0));
        p.set_key("phi", "-pi/4").unwrap();
        assert_eq!(p.phi, Some(-PI / 4.0));
    }
}

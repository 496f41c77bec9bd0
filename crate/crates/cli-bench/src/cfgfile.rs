//! Flat `key = value` configuration files.
//!
//! One assignment per line; `#` starts a full-line comment; blank lines are
//! ignored. Keys mirror the long flag names (`g`, `g2`, `theta1`, `theta2`,
//! `alpha`, `theta-alpha`, `k`, `phi`, `T1`, `T2`, `eta`, `cutoff`,
//! `fd-step`, `trials`).

use std::path::Path;

use crate::error::CliError;
use crate::params::RawParams;

pub fn load(path: &Path) -> Result<RawParams, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    parse(&text).map_err(|msg| CliError::Usage(format!("{}: {msg}", path.display())))
}

pub fn parse(text: &str) -> Result<RawParams, String> {
    let mut params = RawParams::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, val) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", idx + 1))?;
        params
            .set_key(key.trim(), val.trim())
            .map_err(|e| format!("line {}: {e}", idx + 1))?;
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_assignments() {
        let text = "# run setup\n\ng = 0.5\nk=1\ntheta-alpha = pi/2\nT1 = 0.6\n";
        let p = parse(text).unwrap();
        assert_eq!(p.g, Some(0.5));
        assert_eq!(p.k, Some(1));
        assert_eq!(p.theta_alpha, Some(std::f64::consts::FRAC_PI_2));
        assert_eq!(p.t1, Some(0.6));
        assert_eq!(p.t2, None);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        assert!(parse("foo = 1\n").is_err());
        assert!(parse("just words\n").is_err());
        assert!(parse("k = three\n").is_err());
    }
}

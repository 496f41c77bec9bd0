//! Angle parsing with `pi` literals.
//!
//! Accepted forms, all in radians: a plain float (`1.5707963`), `pi`, `-pi`,
//! `2pi`, `0.75pi`, `pi/2`, `-pi/4`, `3pi/2`.

use std::f64::consts::PI;

pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty angle".into());
    }
    let Some(pos) = t.find("pi") else {
        return t
            .parse::<f64>()
            .map_err(|_| format!("`{t}` is neither a number nor a pi-expression like pi/2"));
    };
    let (head, rest) = (&t[..pos], &t[pos + 2..]);
    let coef = match head {
        "" | "+" => 1.0,
        "-" => -1.0,
        h => h
            .parse::<f64>()
            .map_err(|_| format!("bad coefficient `{h}` in angle `{t}`"))?,
    };
    let div = if rest.is_empty() {
        1.0
    } else if let Some(d) = rest.strip_prefix('/') {
        let v = d
            .parse::<f64>()
            .map_err(|_| format!("bad divisor `{d}` in angle `{t}`"))?;
        if v == 0.0 {
            return Err(format!("zero divisor in angle `{t}`"));
        }
        v
    } else {
        return Err(format!("unrecognized angle syntax `{t}`"));
    };
    let val = coef * PI / div;
    if !val.is_finite() {
        return Err(format!("angle `{t}` is not finite"));
    }
    Ok(val)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_numbers() {
        assert_eq!(parse_angle("0"), Ok(0.0));
        assert_eq!(parse_angle("1.25"), Ok(1.25));
        assert_eq!(parse_angle("-0.3"), Ok(-0.3));
        assert_eq!(parse_angle(" 2e-3 "), Ok(2e-3));
    }

    #[test]
    fn pi_forms() {
        assert_eq!(parse_angle("pi"), Ok(PI));
        assert_eq!(parse_angle("-pi"), Ok(-PI));
        assert_eq!(parse_angle("2pi"), Ok(2.0 * PI));
        assert_eq!(parse_angle("pi/2"), Ok(PI / 2.0));
        assert_eq!(parse_angle("-pi/4"), Ok(-PI / 4.0));
        assert_eq!(parse_angle("0.75pi"), Ok(0.75 * PI));
        assert_eq!(parse_angle("3pi/2"), Ok(3.0 * PI / 2.0));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_angle("").is_err());
        assert!(parse_angle("pie").is_err());
        assert!(parse_angle("pi/0").is_err());
        assert!(parse_angle("xpi").is_err());
        assert!(parse_angle("pi/two").is_err());
    }
}

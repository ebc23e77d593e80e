//! The function mini-language:
//!
//! ```text
//! exp:h=3                      e^{2πi·3x}
//! bernoulli:m=4                B*_4(x)
//! mono:l=2                     (x-1/2)²/2!
//! poly:c0,c1,...               Σ c_j x^j, complex literals like 1.5 or 2-0.5i
//! trig:3=1+0.5i;-1=0.25        Σ f̂_h e^{2πihx}
//! bump:y,w,s,sign,scale        sign·scale·cos^{2s}(π(x-y)/(2w)) on [y-w,y+w]
//! sum:(spec|spec|...)          sum of parts
//! ```
//!
//! `Oracle::label` emits the same syntax, so parse → label round-trips.

use num_complex::Complex64;
use oscquad_core::oracle::{
    make_bernoulli, make_centered_monomial, make_exponential, make_polynomial, make_smooth_bump,
    make_sum, make_trig, Oracle,
};

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "bad function spec: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

type Result<T> = std::result::Result<T, ParseError>;

pub fn parse_function(input: &str) -> Result<Oracle> {
    let s = input.trim();
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| ParseError(format!("missing ':' in '{s}'")))?;
    match head {
        "exp" => {
            let h = parse_keyed_int(rest, "h")?;
            Ok(make_exponential(h))
        }
        "bernoulli" => {
            let m = parse_keyed_int(rest, "m")? as usize;
            make_bernoulli(m).map_err(|e| ParseError(e.to_string()))
        }
        "mono" => {
            let l = parse_keyed_int(rest, "l")? as usize;
            Ok(make_centered_monomial(l))
        }
        "poly" => {
            let coeffs = rest
                .split(',')
                .map(parse_complex)
                .collect::<Result<Vec<_>>>()?;
            if coeffs.is_empty() {
                return Err(ParseError("poly needs at least one coefficient".into()));
            }
            Ok(make_polynomial(coeffs))
        }
        "trig" => {
            let mut coeffs = Vec::new();
            for part in rest.split(';').filter(|p| !p.is_empty()) {
                let (h, c) = part
                    .split_once('=')
                    .ok_or_else(|| ParseError(format!("trig term '{part}' needs h=coeff")))?;
                let h: i64 = h
                    .trim()
                    .parse()
                    .map_err(|_| ParseError(format!("bad frequency '{h}'")))?;
                coeffs.push((h, parse_complex(c)?));
            }
            if coeffs.is_empty() {
                return Err(ParseError("trig needs at least one term".into()));
            }
            Ok(make_trig(coeffs))
        }
        "bump" => {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 5 {
                return Err(ParseError("bump:y,w,s,sign,scale needs five fields".into()));
            }
            let y = parse_real(parts[0])?;
            let w = parse_real(parts[1])?;
            let s: u32 = parts[2]
                .trim()
                .parse()
                .map_err(|_| ParseError(format!("bad exponent '{}'", parts[2])))?;
            let sign = parse_real(parts[3])?;
            let scale = parse_real(parts[4])?;
            make_smooth_bump(y, w, s, sign, scale).map_err(|e| ParseError(e.to_string()))
        }
        "sum" => {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| ParseError("sum:(a|b|...) needs parentheses".into()))?;
            let parts = split_top_level(inner, '|');
            if parts.is_empty() {
                return Err(ParseError("sum needs at least one part".into()));
            }
            Ok(make_sum(
                parts
                    .into_iter()
                    .map(parse_function)
                    .collect::<Result<Vec<_>>>()?,
            ))
        }
        other => Err(ParseError(format!("unknown family '{other}'"))),
    }
}

/// Splits at `sep` while respecting parenthesis nesting.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn parse_keyed_int(s: &str, key: &str) -> Result<i64> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| ParseError(format!("expected {key}=<int> in '{s}'")))?;
    if k.trim() != key {
        return Err(ParseError(format!("expected key '{key}', found '{k}'")));
    }
    v.trim()
        .parse()
        .map_err(|_| ParseError(format!("bad integer '{v}'")))
}

fn parse_real(s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| ParseError(format!("bad number '{s}'")))
}

/// Complex literal: `a`, `a+bi`, or `a-bi`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t = s.trim();
    if let Some(body) = t.strip_suffix('i') {
        // find the sign splitting re and im, skipping exponent signs and a
        // leading sign
        let bytes = body.as_bytes();
        let mut split = None;
        for i in (1..bytes.len()).rev() {
            let c = bytes[i] as char;
            if (c == '+' || c == '-') && !matches!(bytes[i - 1] as char, 'e' | 'E') {
                split = Some(i);
                break;
            }
        }
        let i = split.ok_or_else(|| ParseError(format!("bad complex literal '{t}'")))?;
        let re = parse_real(&body[..i])?;
        let im_str = &body[i..];
        let im = if im_str == "+" {
            1.0
        } else if im_str == "-" {
            -1.0
        } else {
            parse_real(im_str)?
        };
        Ok(Complex64::new(re, im))
    } else {
        Ok(Complex64::new(parse_real(t)?, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_family() {
        assert!(parse_function("exp:h=3").is_ok());
        assert!(parse_function("bernoulli:m=4").is_ok());
        assert!(parse_function("mono:l=2").is_ok());
        assert!(parse_function("poly:0,0,1").is_ok());
        assert!(parse_function("poly:1.5,2-0.5i").is_ok());
        assert!(parse_function("trig:3=1+0.5i;-1=0.25").is_ok());
        assert!(parse_function("bump:0.5,0.25,2,1,1.5").is_ok());
        assert!(parse_function("sum:(exp:h=1|poly:0,1)").is_ok());
        assert!(parse_function("sum:(sum:(exp:h=1|exp:h=2)|mono:l=0)").is_ok());
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!(parse_function("exp").is_err());
        assert!(parse_function("exp:h=x").is_err());
        assert!(parse_function("unknown:1").is_err());
        assert!(parse_function("bump:0.9,0.5,1,1,1").is_err()); // support leaves [0,1]
        assert!(parse_function("poly:").is_err());
        assert!(parse_function("trig:5").is_err());
        assert!(parse_function("sum:exp:h=1").is_err());
    }

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("2").unwrap(), Complex64::new(2.0, 0.0));
        assert_eq!(parse_complex("1+2i").unwrap(), Complex64::new(1.0, 2.0));
        assert_eq!(
            parse_complex("-0.5-0.25i").unwrap(),
            Complex64::new(-0.5, -0.25)
        );
        assert_eq!(
            parse_complex("1e-3+2e-4i").unwrap(),
            Complex64::new(1e-3, 2e-4)
        );
        assert!(parse_complex("i").is_err());
    }

    #[test]
    fn parse_label_round_trip_is_stable() {
        for s in [
            "exp:h=-2",
            "poly:1,0,0.5",
            "poly:1+1i,2-3i",
            "trig:3=1+0.5i;-1=0.25",
            "bump:0.5,0.25,2,1,1.5",
            "sum:(exp:h=1|poly:0,1|bump:0.25,0.125,1,-1,2)",
            "mono:l=4",
            "bernoulli:m=6",
        ] {
            let f1 = parse_function(s).unwrap();
            let label = f1.label();
            let f2 = parse_function(&label).unwrap();
            assert_eq!(label, f2.label(), "spec '{s}'");
        }
    }
}

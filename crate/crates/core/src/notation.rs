//! Textual ring notation: components joined by `*`, each either `Z<n>` with
//! `n` a prime power or `F<p>x<d>` for `F_p[x]/(x^d)`. Whitespace is ignored.

use crate::error::{Error, Result};
use crate::ring::{is_prime, ChainRingSpec};

fn syntax(token: &str, position: usize, message: impl Into<String>) -> Error {
    Error::RingSyntax {
        token: token.to_string(),
        position,
        message: message.into(),
    }
}

/// Splits `n` as `p^d`, if it is a prime power.
fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|&k| n.is_multiple_of(k))?;
    let (mut m, mut d) = (n, 0);
    while m % p == 0 {
        m /= p;
        d += 1;
    }
    (m == 1).then_some((p, d))
}

fn parse_component(token: &str, position: usize) -> Result<ChainRingSpec> {
    let number = |s: &str| -> Result<u64> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax(token, position, "expected a decimal number"));
        }
        s.parse::<u64>()
            .map_err(|_| syntax(token, position, "number out of range"))
    };
    let wrap = |e: Error| match e {
        Error::RingSyntax { .. } => e,
        other => syntax(token, position, other.to_string()),
    };
    if let Some(rest) = token.strip_prefix('Z') {
        let n = number(rest)?;
        let (p, d) = prime_power(n)
            .ok_or_else(|| syntax(token, position, format!("{n} is not a prime power")))?;
        ChainRingSpec::integer_residue(p as u32, d).map_err(wrap)
    } else if let Some(rest) = token.strip_prefix('F') {
        let (p, d) = rest
            .split_once('x')
            .ok_or_else(|| syntax(token, position, "expected F<p>x<d>"))?;
        let (p, d) = (number(p)?, number(d)?);
        if !is_prime(p) {
            return Err(syntax(token, position, format!("{p} is not prime")));
        }
        if d == 0 {
            return Err(syntax(
                token,
                position,
                "nilpotency index must be at least 1",
            ));
        }
        let d = u32::try_from(d).map_err(|_| syntax(token, position, "number out of range"))?;
        ChainRingSpec::truncated_polynomial(p as u32, d).map_err(wrap)
    } else {
        Err(syntax(token, position, "expected `Z<n>` or `F<p>x<d>`"))
    }
}

/// Parses ring notation such as `Z2*Z4` or `F2x2 * Z9`.
pub fn parse_ring_spec(input: &str) -> Result<Vec<ChainRingSpec>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in input.split('*') {
        let lead = raw.len() - raw.trim_start().len();
        let token: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let position = offset + lead;
        if token.is_empty() {
            return Err(syntax(raw, position, "empty component"));
        }
        out.push(parse_component(&token, position)?);
        offset += raw.len() + 1;
    }
    Ok(out)
}

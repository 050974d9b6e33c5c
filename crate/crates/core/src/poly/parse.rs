//! Text grammar shared by the CLI and the JSON formats.
//!
//! `term (('+'|'-') term)*` where a term is a `*`-separated product of
//! rational constants (`3`, `3/2`) and variables `z<i>` with optional `^<e>`.
//! Whitespace is ignored. The same grammar with prefix `c` reads Chern
//! polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, PolyError, Polynomial, Rational};

/// Parses over `z1..z{nvars}`.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial, PolyError> {
    parse_with_prefix(text, 'z', Some(nvars))
}

/// Parses with variables `<prefix><i>`. When `nvars` is `None` the ambient is the
/// largest index that occurs.
pub fn parse_with_prefix(text: &str, prefix: char, nvars: Option<usize>) -> Result<Polynomial, PolyError> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(PolyError::Parse { input: text.to_string(), reason: "empty input".into() });
    }
    let err = |reason: &str| PolyError::Parse { input: text.to_string(), reason: reason.to_string() };

    // (sign, exponent map, coefficient)
    let mut raw_terms: Vec<(Vec<(usize, u32)>, Rational)> = Vec::new();
    let mut pos = 0;
    let mut max_index = 0usize;
    loop {
        let mut sign = Rational::one();
        while pos < chars.len() && (chars[pos] == '+' || chars[pos] == '-') {
            if chars[pos] == '-' {
                sign = -sign;
            }
            pos += 1;
        }
        let mut coef = sign;
        let mut factors: Vec<(usize, u32)> = Vec::new();
        loop {
            if pos >= chars.len() {
                return Err(err("expected a factor"));
            }
            let c = chars[pos];
            if c.is_ascii_digit() {
                let (num, next) = read_uint(&chars, pos);
                pos = next;
                let mut value = Rational::from_integer(num);
                if pos < chars.len() && chars[pos] == '/' {
                    pos += 1;
                    if pos >= chars.len() || !chars[pos].is_ascii_digit() {
                        return Err(err("expected denominator after '/'"));
                    }
                    let (den, next) = read_uint(&chars, pos);
                    pos = next;
                    if den.is_zero() {
                        return Err(err("zero denominator"));
                    }
                    value = Rational::new(value.to_integer(), den);
                }
                coef *= value;
            } else if c == prefix {
                pos += 1;
                if pos >= chars.len() || !chars[pos].is_ascii_digit() {
                    return Err(err("expected variable index"));
                }
                let (idx, next) = read_uint(&chars, pos);
                pos = next;
                let idx: usize = idx.try_into().map_err(|_| err("variable index too large"))?;
                if idx == 0 {
                    return Err(err("variables are numbered from 1"));
                }
                let mut e = 1u32;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    if pos >= chars.len() || !chars[pos].is_ascii_digit() {
                        return Err(err("expected exponent after '^'"));
                    }
                    let (ev, next) = read_uint(&chars, pos);
                    pos = next;
                    e = ev.try_into().map_err(|_| err("exponent too large"))?;
                }
                max_index = max_index.max(idx);
                factors.push((idx - 1, e));
            } else {
                return Err(err(&format!("unexpected character '{}'", c)));
            }
            if pos < chars.len() && chars[pos] == '*' {
                pos += 1;
                continue;
            }
            break;
        }
        raw_terms.push((factors, coef));
        if pos >= chars.len() {
            break;
        }
        if chars[pos] != '+' && chars[pos] != '-' {
            return Err(err(&format!("unexpected character '{}'", chars[pos])));
        }
    }

    let n = match nvars {
        Some(n) => {
            if max_index > n {
                return Err(PolyError::VariableOutOfRange { index: max_index, nvars: n });
            }
            n
        }
        None => max_index,
    };
    let mut p = Polynomial::zero(n);
    for (factors, coef) in raw_terms {
        let mut e = vec![0u32; n];
        for (i, x) in factors {
            e[i] += x;
        }
        p.add_term(Monomial::from_exponents(e), coef);
    }
    Ok(p)
}

fn read_uint(chars: &[char], mut pos: usize) -> (BigInt, usize) {
    let start = pos;
    while pos < chars.len() && chars[pos].is_ascii_digit() {
        pos += 1;
    }
    let s: String = chars[start..pos].iter().collect();
    (s.parse().expect("digits"), pos)
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational, PolyError> {
    let t = text.trim();
    let err = || PolyError::Parse { input: text.to_string(), reason: "not a rational number".into() };
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

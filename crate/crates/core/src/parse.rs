//! Parser for Delsarte potentials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! POLY   := MONO (('+'|'-') MONO)*
//! MONO   := [COEFF '*'?] FACTOR (('*'|e) FACTOR)*
//! FACTOR := IDENT ['^' UINT]
//! IDENT  := letter (letter | digit | '_')*
//! ```
//!
//! Coefficients (including the sign of a leading '-') are accepted, recorded
//! as warnings and discarded: rescaling the variables normalises every
//! coefficient to one, so only the exponent matrix matters.

use std::collections::BTreeMap;

use crate::delsarte::DelsartePolynomial;
use crate::error::{Error, Result};

/// A parsed potential together with the warnings emitted while reading it.
#[derive(Debug, Clone)]
pub struct ParseOutcome {
    pub polynomial: DelsartePolynomial,
    pub warnings: Vec<String>,
}

/// Parse with variables taken in order of first appearance.
pub fn parse(text: &str) -> Result<ParseOutcome> {
    parse_impl(text, None)
}

/// Parse against a fixed, ordered variable list. Monomials may use the
/// declared variables only.
pub fn parse_with_variables(text: &str, variables: &[String]) -> Result<ParseOutcome> {
    parse_impl(text, Some(variables))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Number(u64),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                tokens.push(Token::Plus);
            }
            '-' => {
                chars.next();
                tokens.push(Token::Minus);
            }
            '*' => {
                chars.next();
                tokens.push(Token::Star);
            }
            '^' => {
                chars.next();
                tokens.push(Token::Caret);
            }
            c if c.is_ascii_digit() => {
                let mut value: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or_else(|| {
                            Error::NegativeOrMalformedExponent("integer literal overflows".into())
                        })?;
                    chars.next();
                }
                tokens.push(Token::Number(value));
            }
            c if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                tokens.push(Token::Ident(name));
            }
            other => {
                return Err(Error::NegativeOrMalformedExponent(format!(
                    "unexpected character `{other}`"
                )))
            }
        }
    }
    Ok(tokens)
}

struct RawMonomial {
    text: String,
    coefficient: i64,
    factors: Vec<(String, u64)>,
}

fn parse_impl(text: &str, declared: Option<&[String]>) -> Result<ParseOutcome> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::NegativeOrMalformedExponent("empty input".into()));
    }

    // Split the token stream at top-level '+' / '-' into monomials.
    let mut monomials: Vec<RawMonomial> = Vec::new();
    let mut pos = 0usize;
    let mut sign = 1i64;
    loop {
        // leading sign of the next monomial
        while pos < tokens.len() {
            match tokens[pos] {
                Token::Plus => pos += 1,
                Token::Minus => {
                    sign = -sign;
                    pos += 1;
                }
                _ => break,
            }
        }
        if pos >= tokens.len() {
            return Err(Error::NegativeOrMalformedExponent(
                "expected a monomial".into(),
            ));
        }
        let (mono, next) = parse_monomial(&tokens, pos, sign)?;
        monomials.push(mono);
        pos = next;
        sign = 1;
        if pos >= tokens.len() {
            break;
        }
        match tokens[pos] {
            Token::Plus => {
                pos += 1;
            }
            Token::Minus => {
                sign = -1;
                pos += 1;
            }
            _ => {
                return Err(Error::NegativeOrMalformedExponent(format!(
                    "expected `+` or `-` between monomials near `{}`",
                    describe(&tokens[pos])
                )))
            }
        }
    }

    let mut warnings = Vec::new();

    // Variable order: declared, or first appearance.
    let var_names: Vec<String> = match declared {
        Some(vars) => {
            for mono in &monomials {
                for (name, _) in &mono.factors {
                    if !vars.contains(name) {
                        return Err(Error::UnknownVariable(name.clone()));
                    }
                }
            }
            vars.to_vec()
        }
        None => {
            let mut vars: Vec<String> = Vec::new();
            for mono in &monomials {
                for (name, _) in &mono.factors {
                    if !vars.contains(name) {
                        vars.push(name.clone());
                    }
                }
            }
            vars
        }
    };

    let mut rows = Vec::with_capacity(monomials.len());
    for mono in &monomials {
        if mono.coefficient != 1 {
            warnings.push(format!(
                "coefficient {} on `{}` discarded (coefficients are normalised to 1)",
                mono.coefficient, mono.text
            ));
        }
        let mut row = vec![0u64; var_names.len()];
        let mut grouped: BTreeMap<&str, u64> = BTreeMap::new();
        for (name, exp) in &mono.factors {
            let entry = grouped.entry(name).or_insert(0);
            *entry = entry
                .checked_add(*exp)
                .ok_or_else(|| Error::NegativeOrMalformedExponent("exponent overflows".into()))?;
        }
        for (name, exp) in grouped {
            let idx = var_names.iter().position(|v| v == name).expect("validated");
            row[idx] = exp;
        }
        rows.push(row);
    }

    let polynomial = DelsartePolynomial::new(var_names, rows)?;
    Ok(ParseOutcome {
        polynomial,
        warnings,
    })
}

fn parse_monomial(tokens: &[Token], start: usize, sign: i64) -> Result<(RawMonomial, usize)> {
    let mut pos = start;
    let mut coefficient: i64 = sign;
    let mut factors: Vec<(String, u64)> = Vec::new();
    let mut text = String::new();

    if let Token::Number(value) = tokens[pos] {
        let value = i64::try_from(value)
            .map_err(|_| Error::NegativeOrMalformedExponent("coefficient overflows".into()))?;
        if value == 0 {
            return Err(Error::NegativeOrMalformedExponent(
                "zero coefficient annihilates the monomial".into(),
            ));
        }
        coefficient *= value;
        text.push_str(&value.to_string());
        pos += 1;
        if pos < tokens.len() && tokens[pos] == Token::Star {
            pos += 1;
        }
    }

    while let Some(Token::Ident(name)) = tokens.get(pos) {
        pos += 1;
        let mut exp = 1u64;
        if tokens.get(pos) == Some(&Token::Caret) {
            pos += 1;
            match tokens.get(pos) {
                Some(Token::Number(e)) => {
                    exp = *e;
                    pos += 1;
                }
                Some(Token::Minus) => {
                    return Err(Error::NegativeOrMalformedExponent(format!(
                        "negative exponent on `{name}`"
                    )))
                }
                _ => {
                    return Err(Error::NegativeOrMalformedExponent(format!(
                        "expected an exponent after `{name}^`"
                    )))
                }
            }
        }
        if !text.is_empty() {
            text.push('*');
        }
        text.push_str(name);
        if exp != 1 {
            text.push('^');
            text.push_str(&exp.to_string());
        }
        factors.push((name.clone(), exp));
        // optional explicit '*'
        if tokens.get(pos) == Some(&Token::Star) {
            pos += 1;
            // a '*' must be followed by another factor
            if !matches!(tokens.get(pos), Some(Token::Ident(_))) {
                return Err(Error::NegativeOrMalformedExponent("dangling `*`".into()));
            }
        }
    }

    if factors.is_empty() {
        return Err(Error::NegativeOrMalformedExponent(
            "monomial has no variables".into(),
        ));
    }
    Ok((
        RawMonomial {
            text,
            coefficient,
            factors,
        },
        pos,
    ))
}

fn describe(token: &Token) -> String {
    match token {
        Token::Ident(s) => s.clone(),
        Token::Number(n) => n.to_string(),
        Token::Plus => "+".into(),
        Token::Minus => "-".into(),
        Token::Star => "*".into(),
        Token::Caret => "^".into(),
    }
}

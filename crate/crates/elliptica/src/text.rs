//! Text formats: the polynomial grammar, presentation files, and degree-type
//! literals.
//!
//! Polynomial grammar: terms joined by `+`/`-`; a term is an optional
//! rational coefficient (`3`, `-1/2`) followed by `*`-separated powers
//! `xN^E`; whitespace is insignificant. Example: `x1^2 - 1/2*x2^2`.
//!
//! Presentation file format:
//!
//! ```text
//! vars: x1:2 x2:2
//! rels: x1^2 - x2^2 ; x1*x2
//! ```
//!
//! one `vars:` line with name:weight pairs and one `rels:` line with
//! semicolon-separated polynomials. Blank lines and `#` comments are ignored.

use crate::quotient::{DegreeType, Presentation, QuotientError};
use crate::ring::{GradedContext, Monomial, Polynomial, Rational, RingError};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;
use std::sync::Arc;

/// Parse failure with source position, 1-based.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str, line: usize, col: usize) -> Self {
        Scanner {
            src: src.as_bytes(),
            pos: 0,
            line,
            col,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.bump();
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col, message)
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn uint(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected an identifier"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .to_string())
    }
}

/// Parse a polynomial in the common grammar against a fixed context.
pub fn parse_polynomial(
    ctx: &Arc<GradedContext>,
    src: &str,
) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(ctx, src, 1, 1)
}

fn parse_polynomial_at(
    ctx: &Arc<GradedContext>,
    src: &str,
    line: usize,
    col: usize,
) -> Result<Polynomial, ParseError> {
    let mut sc = Scanner::new(src, line, col);
    let mut poly = Polynomial::zero(ctx);
    let mut first = true;
    loop {
        sc.skip_ws();
        let mut sign = 1i32;
        match sc.peek() {
            Some(b'+') => {
                sc.bump();
            }
            Some(b'-') => {
                sign = -1;
                sc.bump();
            }
            None if first => return Err(sc.error("empty polynomial")),
            None => return Err(sc.error("dangling operator")),
            _ if first => {}
            Some(c) => {
                return Err(sc.error(format!("expected '+' or '-', found '{}'", c as char)))
            }
        }
        sc.skip_ws();
        let term = parse_term(ctx, &mut sc)?;
        let term = if sign < 0 { term.neg() } else { term };
        poly = &poly + &term;
        first = false;
        sc.skip_ws();
        if sc.peek().is_none() {
            break;
        }
    }
    Ok(poly)
}

fn parse_term(ctx: &Arc<GradedContext>, sc: &mut Scanner) -> Result<Polynomial, ParseError> {
    let mut coeff = Rational::one();
    let mut exps = vec![0u32; ctx.nvars()];
    let mut saw_factor = false;

    if matches!(sc.peek(), Some(c) if c.is_ascii_digit()) {
        let numer = sc.uint()?;
        let denom = if sc.peek() == Some(b'/') {
            sc.bump();
            let d = sc.uint()?;
            if d == BigInt::from(0) {
                return Err(sc.error("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        coeff = Rational::new(numer, denom);
        saw_factor = true;
        sc.skip_ws();
        if sc.peek() == Some(b'*') {
            sc.bump();
            sc.skip_ws();
        } else {
            // bare constant term
            return Polynomial::from_terms(ctx, vec![(Monomial::from_exponents(exps), coeff)])
                .map_err(|e| sc.error(e.to_string()));
        }
    }

    loop {
        let (vline, vcol) = (sc.line, sc.col);
        let name = sc.ident()?;
        let idx = ctx.var_index(&name).ok_or_else(|| {
            ParseError::new(vline, vcol, format!("unknown variable '{name}'"))
        })?;
        let exp = if sc.peek() == Some(b'^') {
            sc.bump();
            let e = sc.uint()?;
            u32::try_from(e).map_err(|_| sc.error("exponent too large"))?
        } else {
            1
        };
        exps[idx] += exp;
        saw_factor = true;
        sc.skip_ws();
        if sc.peek() == Some(b'*') {
            sc.bump();
            sc.skip_ws();
        } else {
            break;
        }
    }

    if !saw_factor {
        return Err(sc.error("empty term"));
    }
    Polynomial::from_terms(ctx, vec![(Monomial::from_exponents(exps), coeff)])
        .map_err(|e| sc.error(e.to_string()))
}

/// Errors from reading a presentation file.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid context: {0}")]
    Context(#[from] RingError),
    #[error(transparent)]
    Validation(#[from] QuotientError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Parse the two-line presentation format from a string.
pub fn parse_presentation(src: &str) -> Result<Presentation, FileError> {
    let mut vars_line: Option<(usize, &str)> = None;
    let mut rels_line: Option<(usize, &str)> = None;
    for (i, raw) in src.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("vars:") {
            if vars_line.is_some() {
                return Err(ParseError::new(lineno, 1, "duplicate vars: line").into());
            }
            vars_line = Some((lineno, rest));
        } else if let Some(rest) = line.strip_prefix("rels:") {
            if rels_line.is_some() {
                return Err(ParseError::new(lineno, 1, "duplicate rels: line").into());
            }
            rels_line = Some((lineno, rest));
        } else {
            return Err(ParseError::new(
                lineno,
                1,
                "expected a 'vars:' or 'rels:' line",
            )
            .into());
        }
    }
    let (vline, vars_src) =
        vars_line.ok_or_else(|| ParseError::new(1, 1, "missing vars: line"))?;
    let (rline, rels_src) =
        rels_line.ok_or_else(|| ParseError::new(1, 1, "missing rels: line"))?;

    let mut pairs = Vec::new();
    for tok in vars_src.split_whitespace() {
        let (name, weight) = tok.split_once(':').ok_or_else(|| {
            ParseError::new(vline, 1, format!("expected name:weight, found '{tok}'"))
        })?;
        let w: u32 = weight.parse().map_err(|_| {
            ParseError::new(vline, 1, format!("invalid weight '{weight}' for '{name}'"))
        })?;
        if w < 2 || w % 2 != 0 {
            return Err(ParseError::new(
                vline,
                1,
                format!("weight must be positive even, got {w} for '{name}'"),
            )
            .into());
        }
        pairs.push((name.to_string(), w));
    }
    let ctx = GradedContext::new(pairs)?;

    let mut rels = Vec::new();
    for chunk in rels_src.split(';') {
        let trimmed = chunk.trim();
        if trimmed.is_empty() {
            return Err(ParseError::new(rline, 1, "empty relation").into());
        }
        rels.push(parse_polynomial_at(&ctx, trimmed, rline, 1)?);
    }
    Ok(Presentation::new(ctx, rels)?)
}

/// Read and parse a presentation file.
pub fn read_presentation_file(path: &std::path::Path) -> Result<Presentation, FileError> {
    let src = std::fs::read_to_string(path)?;
    parse_presentation(&src)
}

/// Serialize a presentation back to the two-line file format.
pub fn format_presentation(p: &Presentation) -> String {
    let ctx = p.context();
    let vars = (0..ctx.nvars())
        .map(|i| format!("{}:{}", ctx.var_name(i), ctx.weights()[i]))
        .collect::<Vec<_>>()
        .join(" ");
    let rels = p
        .relations()
        .iter()
        .map(|r| r.to_string())
        .collect::<Vec<_>>()
        .join(" ; ");
    format!("vars: {vars}\nrels: {rels}\n")
}

/// Parse a degree-type literal of the form `2,2,4,4:4,6,8,12`.
pub fn parse_degree_type(text: &str) -> Result<DegreeType, ParseError> {
    let (a_part, b_part) = text
        .split_once(':')
        .ok_or_else(|| ParseError::new(1, 1, "expected ':' between generator and relation degrees"))?;
    let parse_list = |s: &str| -> Result<Vec<u32>, ParseError> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| ParseError::new(1, 1, format!("invalid degree '{}'", t.trim())))
            })
            .collect()
    };
    let a = parse_list(a_part)?;
    let b = parse_list(b_part)?;
    DegreeType::new(a, b).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

impl fmt::Display for DegreeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{}:{}", join(self.generator_degrees()), join(self.relation_degrees()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_two_line_format() {
        let p = parse_presentation("vars: x1:2 x2:2\nrels: x1^2 - x2^2 ; x1*x2\n").unwrap();
        assert_eq!(p.context().nvars(), 2);
        assert_eq!(p.relations().len(), 2);
        assert_eq!(p.relations()[0].to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn rejects_inhomogeneous_relation() {
        let err = parse_presentation("vars: x1:2\nrels: x1^2 + x1\n").unwrap_err();
        assert!(err.to_string().contains("homogeneous"), "{err}");
    }

    #[test]
    fn rejects_odd_weight() {
        let err = parse_presentation("vars: x1:3\nrels: x1^2\n").unwrap_err();
        assert!(err.to_string().contains("positive even"), "{err}");
    }

    #[test]
    fn format_round_trip() {
        let src = "vars: x1:2 x2:4\nrels: x1^2 - x2 ; x2^3\n";
        let p = parse_presentation(src).unwrap();
        let out = format_presentation(&p);
        let p2 = parse_presentation(&out).unwrap();
        assert_eq!(p, p2);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_presentation("vars: x1:2\nrels: x1^2 + ?\n").unwrap_err();
        let FileError::Parse(pe) = err else {
            panic!("expected parse error, got {err}")
        };
        assert_eq!(pe.line, 2);
        assert!(pe.col > 1);
    }

    #[test]
    fn degree_type_literals() {
        let dt = parse_degree_type("2,2:4,4").unwrap();
        assert_eq!(dt.generator_degrees(), &[2, 2]);
        assert_eq!(dt.relation_degrees(), &[4, 4]);
        assert_eq!(parse_degree_type("2:4").unwrap().to_string(), "2:4");
        assert!(parse_degree_type("2,4:4").is_err());
        assert!(parse_degree_type("2,3:4,6").is_err());
        assert!(parse_degree_type("4,2:8,8").is_err());
    }

    #[test]
    fn coefficient_forms() {
        let ctx = GradedContext::new(vec![("x1", 2), ("x2", 2)]).unwrap();
        let p = parse_polynomial(&ctx, "3*x1^2 - 1/2*x2^2 + 5").unwrap();
        assert_eq!(p.to_string(), "5 + 3*x1^2 - 1/2*x2^2");
        let q = parse_polynomial(&ctx, " x1 * x2 ").unwrap();
        assert_eq!(q.to_string(), "x1*x2");
    }
}

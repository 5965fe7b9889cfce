//! Text input: polynomial expressions and net files.
//!
//! Grammar for polynomials (multiplication is always explicit):
//!
//! ```text
//! expr   := ['+' | '-'] term { ('+' | '-') term }
//! term   := factor { '*' factor }
//! factor := base ['^' uint]
//! base   := uint ['/' uint] | variable | '(' expr ')'
//! ```
//!
//! Net files are line oriented: `field = Q` (or `GF(p)`), then `Q1 = ...`,
//! `Q2 = ...`, `Q3 = ...` with quadratic homogeneous right-hand sides.
//! Blank lines and `#` comments are skipped.

use crate::error::{Error, Result};
use crate::exact::{Field, MultiPoly, Scalar};
use num_bigint::BigInt;

/// Variables X, Y, Z, W for quadric input.
pub const NET_VARS: [&str; 4] = ["X", "Y", "Z", "W"];

/// Display names for quartic coordinates.
pub const QUARTIC_VARS: [&str; 3] = ["a", "b", "c"];

#[derive(Clone, PartialEq, Eq, Debug)]
enum TokenKind {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    kind: TokenKind,
    line: usize,
    col: usize,
}

fn tokenize(src: &str, line: usize, col_offset: usize) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = col_offset + i + 1;
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        let kind = match ch {
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '^' => TokenKind::Caret,
            '/' => TokenKind::Slash,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            _ if ch.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                tokens.push(Token {
                    kind: TokenKind::Int(text.parse().unwrap()),
                    line,
                    col,
                });
                continue;
            }
            _ if ch.is_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_alphanumeric() {
                    i += 1;
                }
                tokens.push(Token {
                    kind: TokenKind::Ident(chars[start..i].iter().collect()),
                    line,
                    col,
                });
                continue;
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    col,
                    msg: format!("unexpected character '{ch}'"),
                })
            }
        };
        tokens.push(Token { kind, line, col });
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    field: Field,
    nvars: usize,
    vars: &'a [(&'a str, usize)],
    end_line: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, msg: impl Into<String>) -> Error {
        let (line, col) = self
            .peek()
            .map(|t| (t.line, t.col))
            .unwrap_or((self.end_line, self.end_col));
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut negate = false;
        if let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Minus => {
                    negate = true;
                    self.next();
                }
                TokenKind::Plus => {
                    self.next();
                }
                _ => {}
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(t) = self.peek() {
            match t.kind {
                TokenKind::Plus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs);
                }
                TokenKind::Minus => {
                    self.next();
                    let rhs = self.term()?;
                    acc = acc.sub(&rhs);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Star)) {
            self.next();
            let rhs = self.factor()?;
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.base()?;
        if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Caret)) {
            self.next();
            match self.next() {
                Some(Token {
                    kind: TokenKind::Int(n),
                    line,
                    col,
                }) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        line,
                        col,
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err_here("expected an integer exponent after '^'")),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly> {
        let Some(t) = self.next() else {
            return Err(self.err_here("unexpected end of expression"));
        };
        match t.kind {
            TokenKind::Int(num) => {
                let mut den = BigInt::from(1);
                if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Slash)) {
                    self.next();
                    match self.next() {
                        Some(Token {
                            kind: TokenKind::Int(d),
                            line,
                            col,
                        }) => {
                            if d == BigInt::from(0) {
                                return Err(Error::Parse {
                                    line,
                                    col,
                                    msg: "zero denominator".into(),
                                });
                            }
                            den = d;
                        }
                        _ => return Err(self.err_here("expected an integer denominator")),
                    }
                }
                let value =
                    Scalar::embed_ratio(self.field, &num, &den).ok_or(Error::Parse {
                        line: t.line,
                        col: t.col,
                        msg: format!("denominator {den} vanishes in the coefficient field"),
                    })?;
                Ok(MultiPoly::constant(self.nvars, value))
            }
            TokenKind::Ident(name) => {
                match self.vars.iter().find(|(n, _)| *n == name) {
                    Some(&(_, idx)) => Ok(MultiPoly::var(self.nvars, idx, self.field)),
                    None => Err(Error::Parse {
                        line: t.line,
                        col: t.col,
                        msg: format!("unknown variable '{name}'"),
                    }),
                }
            }
            TokenKind::LParen => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token {
                        kind: TokenKind::RParen,
                        ..
                    }) => Ok(inner),
                    _ => Err(self.err_here("expected ')'")),
                }
            }
            _ => Err(Error::Parse {
                line: t.line,
                col: t.col,
                msg: "expected a number, variable, or '('".into(),
            }),
        }
    }
}

/// Parse a polynomial expression with the given variable table.
/// `line` and `col_offset` locate `src` inside a larger document so
/// diagnostics can point at the original text.
pub fn parse_polynomial_at(
    src: &str,
    field: Field,
    nvars: usize,
    vars: &[(&str, usize)],
    line: usize,
    col_offset: usize,
) -> Result<MultiPoly> {
    let tokens = tokenize(src, line, col_offset)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            line,
            col: col_offset + 1,
            msg: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        field,
        nvars,
        vars,
        end_line: line,
        end_col: col_offset + src.chars().count() + 1,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.err_here("unexpected trailing input"));
    }
    Ok(poly)
}

/// Polynomial in X, Y, Z, W.
pub fn parse_net_polynomial(src: &str, field: Field) -> Result<MultiPoly> {
    let vars: Vec<(&str, usize)> =
        NET_VARS.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    parse_polynomial_at(src, field, 4, &vars, 1, 0)
}

/// Polynomial in the quartic coordinates a, b, c (aliases λ1/l1, λ2/l2,
/// λ3/l3).
pub fn parse_quartic_polynomial(src: &str, field: Field) -> Result<MultiPoly> {
    let vars: [(&str, usize); 9] = [
        ("a", 0),
        ("b", 1),
        ("c", 2),
        ("λ1", 0),
        ("λ2", 1),
        ("λ3", 2),
        ("l1", 0),
        ("l2", 1),
        ("l3", 2),
    ];
    parse_polynomial_at(src, field, 3, &vars, 1, 0)
}

/// Parsed net file: a coefficient field and three quadratic forms.
#[derive(Clone, Debug)]
pub struct NetFile {
    pub field: Field,
    pub forms: [MultiPoly; 3],
}

fn parse_field_name(value: &str, line: usize, col: usize) -> Result<Field> {
    let v = value.trim();
    if v == "Q" {
        return Ok(Field::Rational);
    }
    if let Some(inner) = v.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let p: u64 = inner.trim().parse().map_err(|_| Error::Parse {
            line,
            col,
            msg: format!("bad prime '{inner}'"),
        })?;
        let is_prime = p >= 2 && (2..=p.isqrt()).all(|d| p % d != 0);
        if !is_prime {
            return Err(Error::Parse {
                line,
                col,
                msg: format!("{p} is not prime"),
            });
        }
        return Ok(Field::Fp(p));
    }
    Err(Error::Parse {
        line,
        col,
        msg: format!("expected field 'Q' or 'GF(p)', found '{v}'"),
    })
}

/// Parse a net file. Each form must be homogeneous of degree 2; violations
/// are reported with the line of the offending entry.
pub fn parse_net_file(src: &str) -> Result<NetFile> {
    let mut field: Option<Field> = None;
    let mut entries: [Option<(String, usize, usize)>; 3] = [None, None, None];

    for (idx, raw) in src.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let Some(eq) = line.find('=') else {
            return Err(Error::Parse {
                line: line_no,
                col: 1,
                msg: "expected 'key = value'".into(),
            });
        };
        let key = line[..eq].trim();
        let value = &line[eq + 1..];
        let value_col = eq + 1 + (value.len() - value.trim_start().len());
        let value = value.trim();
        match key {
            "field" => {
                if field.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        col: 1,
                        msg: "duplicate 'field' entry".into(),
                    });
                }
                field = Some(parse_field_name(value, line_no, value_col + 1)?);
            }
            "Q1" | "Q2" | "Q3" => {
                let slot = (key.as_bytes()[1] - b'1') as usize;
                if entries[slot].is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        col: 1,
                        msg: format!("duplicate '{key}' entry"),
                    });
                }
                entries[slot] = Some((value.to_string(), line_no, value_col));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    col: 1,
                    msg: format!("unknown key '{key}' (expected field, Q1, Q2, Q3)"),
                });
            }
        }
    }

    let field = field.ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "missing 'field' entry".into(),
    })?;
    let vars: Vec<(&str, usize)> =
        NET_VARS.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let mut forms = Vec::with_capacity(3);
    for (slot, entry) in entries.into_iter().enumerate() {
        let (text, line_no, col) = entry.ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: format!("missing 'Q{}' entry", slot + 1),
        })?;
        let poly = parse_polynomial_at(&text, field, 4, &vars, line_no, col)?;
        if poly.is_zero() || !poly.is_homogeneous() || poly.total_degree() != Some(2) {
            return Err(Error::Parse {
                line: line_no,
                col: col + 1,
                msg: format!("Q{} must be homogeneous of degree 2", slot + 1),
            });
        }
        forms.push(poly);
    }
    Ok(NetFile {
        field,
        forms: forms.try_into().unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_expression() {
        let p = parse_net_polynomial("X*Y + W^2", Field::Rational).unwrap();
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.terms().count(), 2);
    }

    #[test]
    fn parenthesized_products() {
        let p = parse_net_polynomial("(X+Y)*(Z+W)", Field::Rational).unwrap();
        let q = parse_net_polynomial("X*Z + X*W + Y*Z + Y*W", Field::Rational).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_net_polynomial("1/2*X^2 - 3*Y*Z", Field::Rational).unwrap();
        let half = Scalar::embed_ratio(
            Field::Rational,
            &BigInt::from(1),
            &BigInt::from(2),
        )
        .unwrap();
        let xx = p
            .terms()
            .find(|(e, _)| **e == [2, 0, 0, 0])
            .expect("X^2 term present");
        assert_eq!(xx.1, &half);
    }

    #[test]
    fn unary_minus_and_leading_plus() {
        let p = parse_net_polynomial("-X*Y + Z^2", Field::Rational).unwrap();
        let q = parse_net_polynomial("+Z^2 - X*Y", Field::Rational).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn implicit_multiplication_rejected() {
        let err = parse_net_polynomial("X Y", Field::Rational).unwrap_err();
        match err {
            Error::Parse { col, .. } => assert_eq!(col, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable_rejected() {
        assert!(parse_net_polynomial("X*V", Field::Rational).is_err());
    }

    #[test]
    fn quartic_aliases() {
        let field = Field::Rational;
        let p = parse_quartic_polynomial("a*b*c*(a+b)", field).unwrap();
        let q = parse_quartic_polynomial("λ1*λ2*λ3*(λ1+λ2)", field).unwrap();
        let r = parse_quartic_polynomial("l1*l2*l3*(l1+l2)", field).unwrap();
        assert_eq!(p, q);
        assert_eq!(p, r);
        assert_eq!(p.total_degree(), Some(4));
    }

    #[test]
    fn gf2_coefficients_fold() {
        let p = parse_net_polynomial("3*X*Y + 2*Z^2", Field::Fp(2)).unwrap();
        let q = parse_net_polynomial("X*Y", Field::Fp(2)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn net_file_round_trip() {
        let src = "\
# a commented header
field = Q

Q1 = X*Y
Q2 = Z*W
Q3 = (X+Y)*(Z+W)
";
        let net = parse_net_file(src).unwrap();
        assert_eq!(net.field, Field::Rational);
        assert_eq!(net.forms[0], parse_net_polynomial("X*Y", Field::Rational).unwrap());
    }

    #[test]
    fn net_file_gf_field() {
        let src = "field = GF(7)\nQ1 = X^2\nQ2 = Y^2\nQ3 = Z*W\n";
        let net = parse_net_file(src).unwrap();
        assert_eq!(net.field, Field::Fp(7));
    }

    #[test]
    fn net_file_diagnostics() {
        // non-quadratic entry is pinned to its line
        let src = "field = Q\nQ1 = X*Y\nQ2 = Z\nQ3 = W^2\n";
        match parse_net_file(src) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        // non-prime modulus
        assert!(parse_net_file("field = GF(6)\nQ1 = X^2\nQ2 = Y^2\nQ3 = Z^2\n").is_err());
        // missing entry
        assert!(parse_net_file("field = Q\nQ1 = X^2\nQ2 = Y^2\n").is_err());
    }
}

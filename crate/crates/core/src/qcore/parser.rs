//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' UINT)?
//! atom   := NUMBER | IDENT | '(' expr ')'
//! NUMBER := DIGITS ('/' DIGITS)?      no spaces inside a rational literal
//! ```

use num::bigint::BigInt;
use num::Zero;

use super::mpoly::MPoly;
use super::scalar::Q;
use super::xpoly::XPoly;
use crate::error::{Error, Result};

const MAX_EXPONENT: u32 = 4096;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [String],
}

fn syntax(offset: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { offset, msg: msg.into() }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = &acc * &rhs;
                }
                Some(b'/') => {
                    return Err(syntax(self.pos, "'/' is only allowed inside a rational literal"))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.src.get(self.pos) {
            Some(b'-') => {
                return Err(Error::Exponent { offset: at, msg: "negative exponent".into() })
            }
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(syntax(at, "expected a nonnegative integer exponent")),
        }
        let d = self.digits();
        if matches!(self.src.get(self.pos), Some(b'.' | b'/')) {
            return Err(Error::Exponent { offset: at, msg: "fractional exponent".into() });
        }
        let k: u32 = d
            .parse()
            .ok()
            .filter(|&k| k <= MAX_EXPONENT)
            .ok_or_else(|| Error::Exponent { offset: at, msg: format!("exponent exceeds {MAX_EXPONENT}") })?;
        Ok(base.pow(k as usize))
    }

    fn atom(&mut self) -> Result<MPoly> {
        let n = self.vars.len();
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.src.get(self.pos).copied() {
            None => Err(syntax(at, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(syntax(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().unwrap();
                let mut val = Q::from_integer(num);
                if self.src.get(self.pos) == Some(&b'/')
                    && self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit())
                {
                    let slash = self.pos;
                    self.pos += 1;
                    let den: BigInt = self.digits().parse().unwrap();
                    if den.is_zero() {
                        return Err(syntax(slash, "zero denominator in rational literal"));
                    }
                    val /= Q::from_integer(den);
                }
                if self.src.get(self.pos) == Some(&b'.') {
                    return Err(syntax(self.pos, "decimal literals are not supported"));
                }
                Ok(MPoly::constant(n, val))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.iter().position(|v| v == name) {
                    Some(i) => Ok(MPoly::var(n, i)),
                    None => Err(syntax(start, format!("unknown variable '{name}'"))),
                }
            }
            Some(_) => Err(syntax(at, "unexpected character")),
        }
    }
}

/// Parse an expression over the given variable names.
pub fn parse_mpoly(text: &str, vars: &[String]) -> Result<MPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, vars };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.pos, "unexpected trailing input"));
    }
    Ok(e)
}

/// Parse a polynomial in `x`.
pub fn parse_xpoly(text: &str) -> Result<XPoly> {
    let m = parse_mpoly(text, &["x".to_string()])?;
    Ok(m.to_univariate().unwrap())
}

/// Parse a homogeneous polynomial in `x0..x{n}`.
pub fn parse_hompoly(text: &str, n: usize) -> Result<MPoly> {
    let m = parse_mpoly(text, &MPoly::default_names(n + 1))?;
    if !m.is_homogeneous() {
        return Err(syntax(0, "polynomial is not homogeneous"));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::scalar::{q, qr};

    #[test]
    fn spec_examples() {
        assert_eq!(parse_xpoly("x^2 - 3*x + 1/2").unwrap().coeffs(), &[qr(1, 2), q(-3), q(1)]);
        assert!(parse_xpoly("0").unwrap().is_zero());
        assert_eq!(parse_xpoly("(x-2)*(x-3)").unwrap().coeffs(), &[q(6), q(-5), q(1)]);
    }

    #[test]
    fn precedence_and_unary() {
        assert_eq!(parse_xpoly("-x^2").unwrap().coeffs(), &[q(0), q(0), q(-1)]);
        assert_eq!(parse_xpoly("2*-x").unwrap().coeffs(), &[q(0), q(-2)]);
        assert_eq!(parse_xpoly("(1+x)^2").unwrap().coeffs(), &[q(1), q(2), q(1)]);
        assert_eq!(parse_xpoly(" 3/6 ").unwrap().coeffs(), &[qr(1, 2)]);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_xpoly("x^-1") {
            Err(Error::Exponent { offset, .. }) => assert_eq!(offset, 2),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_xpoly("x^1/2"), Err(Error::Exponent { .. })));
        match parse_xpoly("x + y") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 4),
            e => panic!("{e:?}"),
        }
        assert!(matches!(parse_xpoly("x / 2"), Err(Error::Syntax { offset: 2, .. })));
        assert!(matches!(parse_xpoly("1 /2"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_xpoly("(x"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_xpoly("2x"), Err(Error::Syntax { offset: 1, .. })));
        assert!(matches!(parse_xpoly(""), Err(Error::Syntax { offset: 0, .. })));
    }

    #[test]
    fn homogeneous_forms() {
        let m = parse_hompoly("x0*x1 + x1^2", 1).unwrap();
        assert_eq!(m.total_degree(), 2);
        assert!(parse_hompoly("x0 + 1", 1).is_err());
    }
}

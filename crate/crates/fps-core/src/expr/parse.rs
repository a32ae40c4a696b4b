//! Recursive-descent parser for the expression grammar.
//!
//! Grammar: function application `Head[arg1, arg2]`, `^` right-associative,
//! `*` `/` `+` `-`, unary minus, integers, `I`, `Pi`, parenthesized
//! subexpressions. Implicit multiplication is a syntax error. Identifiers
//! start with a letter; identifiers named in `vars` become expansion
//! variables, all others become parameters. `E^x` is accepted as a
//! spelling of `Exp[x]`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::rat::Rat;

use super::{normalize, Expr, Head};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_tok(&mut self) -> Result<Option<(Tok, usize)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b',' => Tok::Comma,
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                return Ok(Some((Tok::Int(text.parse().unwrap()), start)));
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                return Ok(Some((Tok::Ident(text), start)));
            }
            other => {
                return Err(Error::Syntax {
                    offset: self.pos,
                    message: format!("unexpected character `{}`", other as char),
                })
            }
        };
        self.pos += 1;
        Ok(Some((tok, start)))
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    idx: usize,
    vars: &'a [&'a str],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.idx).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&t) {
            self.idx += 1;
            Ok(())
        } else {
            Err(Error::Syntax { offset: self.offset(), message: format!("expected {what}") })
        }
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { offset: self.offset(), message: message.to_string() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    terms.push(Expr::Mul(vec![Expr::int(-1), self.term()?]));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Add(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.unary()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.idx += 1;
                    factors.push(self.unary()?);
                }
                Some(Tok::Slash) => {
                    self.idx += 1;
                    let rhs = self.unary()?;
                    factors.push(Expr::Pow(Box::new(rhs), Box::new(Expr::int(-1))));
                }
                // implicit multiplication shows up as two adjacent primaries
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return self.err("implicit multiplication is not allowed; use `*`");
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Mul(factors) })
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.idx += 1;
            let inner = self.unary()?;
            return Ok(Expr::Mul(vec![Expr::int(-1), inner]));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.idx += 1;
            let exp = self.unary()?; // right-associative, allows -2 exponents
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Expr::Const(Rat::from_integer(n))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => self.ident(name),
            Some(t) => {
                self.idx -= 1;
                self.err(&format!("unexpected token `{t:?}`"))
            }
            None => self.err("unexpected end of input"),
        }
    }

    fn ident(&mut self, name: String) -> Result<Expr> {
        if self.peek() == Some(&Tok::LBracket) {
            self.idx += 1;
            let head = Head::from_name(&name)
                .ok_or_else(|| Error::UnknownHead(name.clone()))?;
            let mut args = Vec::new();
            if self.peek() == Some(&Tok::RBracket) {
                return self.err("function application needs at least one argument");
            }
            loop {
                args.push(self.expr()?);
                match self.bump() {
                    Some(Tok::Comma) => continue,
                    Some(Tok::RBracket) => break,
                    _ => {
                        self.idx = self.idx.saturating_sub(1);
                        return self.err("expected `,` or `]`");
                    }
                }
            }
            if !head.arities().contains(&args.len()) {
                return self.err(&format!(
                    "{} takes {:?} arguments, got {}",
                    head.name(),
                    head.arities(),
                    args.len()
                ));
            }
            return Ok(Expr::App(head, args));
        }
        match name.as_str() {
            "I" => Ok(Expr::I),
            "Pi" => Ok(Expr::Pi),
            "E" => Ok(Expr::App(Head::Exp, vec![Expr::int(1)])),
            "Infinity" => self.err("Infinity is not a value in this grammar"),
            _ => {
                if self.vars.contains(&name.as_str()) {
                    Ok(Expr::Var(name))
                } else {
                    Ok(Expr::Param(name))
                }
            }
        }
    }
}

/// Parse `text` into a canonical expression. Identifiers listed in `vars`
/// become expansion variables; every other identifier is a parameter.
pub fn parse(text: &str, vars: &[&str]) -> Result<Expr> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next_tok()? {
        toks.push(t);
    }
    let end = text.len();
    let mut p = Parser { toks, idx: 0, vars, end };
    let e = p.expr()?;
    if p.idx != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(normalize(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_shapes() {
        let e = parse("x", &["x"]).unwrap();
        assert_eq!(e, Expr::var("x"));
        let e = parse("Sin[x]*Exp[x]", &["x"]).unwrap();
        match &e {
            Expr::Mul(xs) => {
                assert_eq!(xs.len(), 2);
            }
            other => panic!("expected product, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_offset() {
        let err = parse("ArcTan[(", &["x"]).unwrap_err();
        match err {
            Error::Syntax { offset, .. } => assert_eq!(offset, 8),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_head() {
        let err = parse("Foo[x]", &["x"]).unwrap_err();
        assert!(matches!(err, Error::UnknownHead(h) if h == "Foo"));
    }

    #[test]
    fn implicit_multiplication_rejected() {
        assert!(parse("2 x", &["x"]).is_err());
        assert!(parse("(1+x)(1-x)", &["x"]).is_err());
    }

    #[test]
    fn rationals_and_powers() {
        let e = parse("3/4", &[]).unwrap();
        assert_eq!(e, Expr::frac(3, 4));
        // right-associative power
        let e = parse("2^3^2", &[]).unwrap();
        assert_eq!(e, Expr::int(512));
        let e = parse("x^-1", &["x"]).unwrap();
        assert_eq!(e, Expr::pow(Expr::var("x"), Expr::int(-1)));
    }

    #[test]
    fn e_notation() {
        let e = parse("E^(alpha*x)", &["x"]).unwrap();
        let direct = parse("Exp[alpha*x]", &["x"]).unwrap();
        assert_eq!(e, direct);
    }

    #[test]
    fn vars_vs_params() {
        let e = parse("alpha*x", &["x"]).unwrap();
        assert!(e.depends_on_var("x"));
        assert!(e.depends_on_param("alpha"));
        assert!(!e.depends_on_var("alpha"));
    }
}

//! Canonical text form of rational functions and its parser.
//!
//! A value prints as `NUM` or `NUM/DEN`, where `NUM` is the integer part of
//! the unit times the numerator factors and `DEN` the unit's denominator times
//! the denominator factors. Each non-variable factor is parenthesized and
//! powers use `^` with a positive integer exponent, e.g.
//! `-2*kappa/(kappa + 1)` or `N*(kappa*N - kappa + a)/(2*kappa*N - 2*kappa + a + b)`.

use std::fmt::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::poly::{MultiPoly, Var};
use super::scalar::ParamScalar;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Latex,
}

fn write_factor(out: &mut String, f: &MultiPoly, e: i32, style: Style, alone: bool) {
    // inside \frac a lone unpowered factor needs no parentheses
    let bare = f.len() == 1 || (alone && e == 1 && style == Style::Latex);
    let mut body = String::new();
    match style {
        Style::Plain => f.fmt_with(&mut body, Var::name, "*").unwrap(),
        Style::Latex => f.fmt_with(&mut body, Var::latex, " ").unwrap(),
    }
    match style {
        Style::Plain => {
            if bare {
                out.push_str(&body);
            } else {
                write!(out, "({body})").unwrap();
            }
            if e != 1 {
                write!(out, "^{e}").unwrap();
            }
        }
        Style::Latex => {
            if bare {
                out.push_str(&body);
            } else {
                write!(out, "\\left({body}\\right)").unwrap();
            }
            if e != 1 {
                write!(out, "^{{{e}}}").unwrap();
            }
        }
    }
}

/// Numerator and denominator strings; the denominator is `None` when it is 1.
pub fn split_text(x: &ParamScalar, style: Style) -> (String, Option<String>) {
    let unit = x.unit();
    let n = unit.numer();
    let d = unit.denom();
    let sep = if style == Style::Plain { "*" } else { " " };
    let pos: Vec<_> = x.factors().filter(|(_, e)| *e > 0).collect();
    let neg: Vec<_> = x.factors().filter(|(_, e)| *e < 0).collect();

    let mut num = String::new();
    if pos.is_empty() {
        write!(num, "{n}").unwrap();
    } else {
        if n == &BigInt::from(-1) {
            num.push('-');
        } else if !n.is_one() {
            write!(num, "{n}{sep}").unwrap();
        }
        let alone = pos.len() == 1 && (n.is_one() || n == &BigInt::from(-1));
        for (i, (f, e)) in pos.iter().enumerate() {
            if i > 0 {
                num.push_str(sep);
            }
            write_factor(&mut num, f, *e, style, alone);
        }
    }

    let mut items = Vec::new();
    if !d.is_one() {
        items.push(d.to_string());
    }
    let alone = neg.len() == 1 && d.is_one();
    for (f, e) in &neg {
        let mut s = String::new();
        write_factor(&mut s, f, -e, style, alone);
        items.push(s);
    }
    if items.is_empty() {
        (num, None)
    } else {
        (num, Some(items.join(sep)))
    }
}

pub(crate) fn write_scalar(f: &mut fmt::Formatter<'_>, x: &ParamScalar, style: Style) -> fmt::Result {
    f.write_str(&to_text(x, style))
}

/// Renders in the requested style.
pub fn to_text(x: &ParamScalar, style: Style) -> String {
    let mut fs = x.factors();
    if let (Some((f, 1)), None) = (fs.next(), fs.next()) {
        if x.unit().is_one() {
            let mut s = String::new();
            match style {
                Style::Plain => f.fmt_with(&mut s, Var::name, "*").unwrap(),
                Style::Latex => f.fmt_with(&mut s, Var::latex, " ").unwrap(),
            }
            return s;
        }
    }
    let (num, den) = split_text(x, style);
    match (style, den) {
        (_, None) => num,
        (Style::Plain, Some(den)) => {
            let single = x.factors().filter(|(_, e)| *e < 0).count() + usize::from(!x.unit().denom().is_one()) == 1;
            if single {
                format!("{num}/{den}")
            } else {
                format!("{num}/({den})")
            }
        }
        (Style::Latex, Some(den)) => {
            if let Some(rest) = num.strip_prefix('-') {
                format!("-\\frac{{{rest}}}{{{den}}}")
            } else {
                format!("\\frac{{{num}}}{{{den}}}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Int(text.parse().expect("digits")));
        } else if c.is_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ParamScalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ParamScalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamScalar> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<ParamScalar> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let Some(Tok::Int(e)) = self.peek().cloned() else {
                return Err(Error::Parse("expected integer exponent".into()));
            };
            self.pos += 1;
            let e: i32 = e
                .try_into()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ParamScalar> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(ParamScalar::constant(BigRational::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Var::from_name(&name)
                    .map(ParamScalar::var)
                    .ok_or_else(|| Error::Parse(format!("unknown indeterminate `{name}`")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses an infix rational expression in the indeterminates.
pub fn parse_scalar(s: &str) -> Result<ParamScalar> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if d.is_negative() || d == BigInt::from(0) {
        return Err(Error::Parse(format!("bad denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonical_forms() {
        let k = ParamScalar::var(Var::Kappa);
        let x = k
            .scale(&BigRational::from_integer((-2).into()))
            .div(&k.add(&ParamScalar::one()))
            .unwrap();
        assert_eq!(x.to_string(), "-2*kappa/(kappa + 1)");
        assert_eq!(ParamScalar::ratio(3, 8).to_string(), "3/8");
        assert_eq!(ParamScalar::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(ParamScalar::zero().to_string(), "0");
    }

    #[test]
    fn parse_roundtrip_examples() {
        for s in [
            "-2*kappa/(kappa + 1)",
            "N*(kappa*N - kappa + a)/(2*kappa*N - 2*kappa + a + b)",
            "kappa + 1",
            "3/8",
            "ell*(ell^2 + ell + 1)/(ell + 1)^3",
            "(q + 1)^2/(3*(t - 1)*(q*t - 1))",
        ] {
            let v = parse_scalar(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn parse_accepts_unicode_names() {
        let a = parse_scalar("κ*ℓ").unwrap();
        let b = parse_scalar("kappa*ell").unwrap();
        assert!(a.same_repr(&b));
    }

    #[test]
    fn parse_errors() {
        assert!(parse_scalar("x + 1").is_err());
        assert!(parse_scalar("(a + 1").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
    }
}

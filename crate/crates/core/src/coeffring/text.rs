//! Text form of elements of `ℚ(α)`: `3/(a*(2*a+1))`, `-(a+1)^2/2`.
//! The variable is written `a`; `α` and `alpha` are accepted on input.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use super::{AlphaPoly, AlphaRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub input: String,
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(input: &str, offset: usize, message: &str) -> Self {
        ParseError { input: input.to_string(), offset, message: message.to_string() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse {:?} at offset {}: {}", self.input, self.offset, self.message)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Alpha,
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let end = chars.get(j).map_or(s.len(), |p| p.0);
                out.push((pos, Tok::Int(s[pos..end].parse().unwrap())));
                i = j;
            }
            'α' => {
                out.push((pos, Tok::Alpha));
                i += 1;
            }
            'a' => {
                if s[pos..].starts_with("alpha") {
                    i += 5;
                } else {
                    i += 1;
                }
                out.push((pos, Tok::Alpha));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push((pos, Tok::Op(c)));
                i += 1;
            }
            _ => return Err(ParseError::new(s, pos, "unexpected character")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |t| t.0)
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::new(self.src, self.offset(), msg)
    }

    fn expr(&mut self) -> Result<AlphaRational, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Op('+')) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Op('-')) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<AlphaRational, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = &acc / &d;
                }
                Some(Tok::Alpha) | Some(Tok::Op('(')) | Some(Tok::Int(_)) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<AlphaRational, ParseError> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<AlphaRational, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Op('^')) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Op('-')) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = match self.peek() {
            Some(Tok::Int(n)) => n.to_i32().ok_or_else(|| self.err("exponent too large"))?,
            _ => return Err(self.err("expected integer exponent")),
        };
        self.pos += 1;
        if neg && base.is_zero() {
            return Err(self.err("division by zero"));
        }
        Ok(base.pow(if neg { -e } else { e }))
    }

    fn atom(&mut self) -> Result<AlphaRational, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(AlphaRational::from_poly(AlphaPoly::constant(n)))
            }
            Some(Tok::Alpha) => {
                self.pos += 1;
                Ok(AlphaRational::alpha())
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(&Tok::Op(')')) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err("expected a number, 'a' or '('")),
        }
    }
}

/// Parses the text form produced by `Display for AlphaRational`, or any
/// arithmetic expression in `a` built from `+ - * / ^` and parentheses.
pub fn parse_alpha_rational(s: &str) -> Result<AlphaRational, ParseError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(ParseError::new(s, 0, "empty expression"));
    }
    let mut p = Parser { src: s, toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

pub(crate) fn format_poly(p: &AlphaPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        match k {
            0 => s += &mag.to_string(),
            _ => {
                if !mag.is_one() {
                    s += &format!("{mag}*");
                }
                s.push('a');
                if k > 1 {
                    s += &format!("^{k}");
                }
            }
        }
    }
    s
}

const FACTOR_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > FACTOR_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// `t^deg p(s/t)`, zero iff `s/t` is a root.
fn homogeneous_eval(p: &AlphaPoly, s: &BigInt, t: &BigInt) -> BigInt {
    let d = p.degree().unwrap_or(0);
    let mut acc = BigInt::zero();
    let mut spow = BigInt::one();
    let mut tpows = vec![BigInt::one(); d + 1];
    for k in 1..=d {
        tpows[k] = &tpows[k - 1] * t;
    }
    for (k, c) in p.coeffs().iter().enumerate() {
        acc += c * &spow * &tpows[d - k];
        spow *= s;
    }
    acc
}

/// Splits `p` into sign and content, primitive linear factors with
/// rational roots (with multiplicity), and a primitive remainder.
fn factor_linear(p: &AlphaPoly) -> (BigInt, Vec<(AlphaPoly, usize)>, AlphaPoly) {
    let mut c = p.content();
    if p.lead().is_negative() {
        c = -c;
    }
    let mut rest = p.div_scalar(&c);
    let mut factors: Vec<(AlphaPoly, usize)> = Vec::new();
    let push = |f: AlphaPoly, factors: &mut Vec<(AlphaPoly, usize)>| {
        if let Some(e) = factors.iter_mut().find(|e| e.0 == f) {
            e.1 += 1;
        } else {
            factors.push((f, 1));
        }
    };
    while rest.degree().unwrap_or(0) >= 1 && rest.coeff(0).is_zero() {
        rest = rest.div_exact(&AlphaPoly::alpha()).unwrap();
        push(AlphaPoly::alpha(), &mut factors);
    }
    'outer: while rest.degree().unwrap_or(0) >= 1 {
        let (Some(ds), Some(dt)) = (divisors(&rest.coeff(0)), divisors(&rest.lead())) else {
            break;
        };
        for t in &dt {
            for s in &ds {
                let t = BigInt::from(*t);
                for s in [BigInt::from(*s), -BigInt::from(*s)] {
                    if !s.gcd(&t).is_one() {
                        continue;
                    }
                    if homogeneous_eval(&rest, &s, &t).is_zero() {
                        let f = AlphaPoly::new(vec![-s, t.clone()]);
                        rest = rest.div_exact(&f).expect("rational root divides");
                        push(f, &mut factors);
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    factors.sort_by(|a, b| {
        let ka = (a.0.coeff(0).is_zero(), a.0.lead().clone());
        let kb = (b.0.coeff(0).is_zero(), b.0.lead().clone());
        kb.0.cmp(&ka.0).then(ka.1.cmp(&kb.1)).then(a.0.coeff(0).cmp(&b.0.coeff(0)))
    });
    (c, factors, rest)
}

fn format_factor(f: &AlphaPoly, e: usize) -> String {
    let body = format_poly(f);
    let single = f.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
        && f.lead().is_one();
    let base = if single { body } else { format!("({body})") };
    if e > 1 {
        format!("{base}^{e}")
    } else {
        base
    }
}

/// Factored product of the polynomial part, without the scalar.
fn format_product(factors: &[(AlphaPoly, usize)], rest: &AlphaPoly) -> Vec<String> {
    let mut parts: Vec<String> = factors.iter().map(|(f, e)| format_factor(f, *e)).collect();
    if rest.degree().unwrap_or(0) >= 1 {
        parts.push(format_factor(rest, 1));
    }
    parts
}

pub(crate) fn format_rational_function(r: &AlphaRational) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let (nc, nf, nrest) = factor_linear(r.numer());
    let (dc, df, drest) = factor_linear(r.denom());
    if nf.is_empty() && df.is_empty() && drest.is_constant() && dc.is_one() && nc.is_one() {
        return format_poly(r.numer());
    }
    let nparts = format_product(&nf, &nrest);
    let dparts = format_product(&df, &drest);
    let mut s = String::new();
    if nc.is_negative() {
        s.push('-');
    }
    let nmag = nc.abs();
    if nparts.is_empty() {
        s += &nmag.to_string();
    } else {
        if !nmag.is_one() {
            s += &format!("{nmag}*");
        }
        if nparts.len() == 1 && nmag.is_one() {
            s += &nparts[0];
        } else {
            s += &nparts.join("*");
        }
    }
    if dparts.is_empty() {
        if !dc.is_one() {
            s += &format!("/{dc}");
        }
        return s;
    }
    let mut d = dparts;
    if !dc.is_one() {
        d.insert(0, dc.to_string());
    }
    if d.len() == 1 {
        s += &format!("/{}", d[0]);
    } else {
        s += &format!("/({})", d.join("*"));
    }
    s
}

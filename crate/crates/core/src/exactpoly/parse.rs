//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (('*'|'·'|'/') power)*
//! power  := atom ['^' ['-'] integer]
//! atom   := integer | var index | '(' expr ')'
//! ```
//!
//! Division is only allowed by a nonzero constant, and negative powers only
//! of monomials. Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Exponent, Poly, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str, var: char) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push((pos, Tok::Plus));
                i += 1
            }
            '-' | '−' => {
                out.push((pos, Tok::Minus));
                i += 1
            }
            '*' | '·' => {
                out.push((pos, Tok::Star));
                i += 1
            }
            '/' => {
                out.push((pos, Tok::Slash));
                i += 1
            }
            '^' => {
                out.push((pos, Tok::Caret));
                i += 1
            }
            '(' => {
                out.push((pos, Tok::LParen));
                i += 1
            }
            ')' => {
                out.push((pos, Tok::RParen));
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().map(|(_, c)| *c).collect();
                out.push((pos, Tok::Int(digits.parse().unwrap())));
            }
            c if c.is_alphabetic() => {
                if c != var {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unexpected variable letter '{c}', expected '{var}'"),
                    });
                }
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("variable '{var}' needs an index"),
                    });
                }
                let digits: String = chars[start..i].iter().map(|(_, c)| *c).collect();
                let idx: usize = digits.parse().map_err(|_| Error::Parse {
                    pos,
                    msg: "variable index too large".into(),
                })?;
                if idx == 0 {
                    return Err(Error::Parse {
                        pos,
                        msg: "variables are numbered from 1".into(),
                    });
                }
                out.push((pos, Tok::Var(idx)));
            }
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    nvars: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly<i32>> {
        let mut acc = Poly::zero(self.nvars);
        let mut sign = match self.peek() {
            Some(Tok::Plus) => {
                self.at += 1;
                1
            }
            Some(Tok::Minus) => {
                self.at += 1;
                -1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => break,
            }
            self.at += 1;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly<i32>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    let rhs = self.power()?;
                    acc = &acc * &rhs;
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    let rhs = self.power()?;
                    if !rhs.is_constant() || rhs.is_zero() {
                        return self.err("division only by a nonzero constant");
                    }
                    acc = acc.scale(&rhs.constant_term().recip());
                }
                // juxtaposition such as `2t1` or `(t1)(t2)`
                Some(Tok::Var(_)) | Some(Tok::LParen) | Some(Tok::Int(_)) => {
                    let rhs = self.power()?;
                    acc = &acc * &rhs;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly<i32>> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                true
            }
            Some(Tok::Plus) => {
                self.at += 1;
                false
            }
            _ => false,
        };
        let k = match self.peek() {
            Some(Tok::Int(k)) => {
                let k = u32::try_from(k.clone()).or_else(|_| self.err("exponent too large"))?;
                self.at += 1;
                k
            }
            _ => return self.err("expected integer exponent"),
        };
        if !neg {
            return Ok(base.pow(k));
        }
        if base.len() != 1 {
            return self.err("negative powers are only defined for monomials");
        }
        let (e, c) = base.leading_term().unwrap();
        let inv: Vec<i32> = e.iter().map(|x| -x).collect();
        Ok(Poly::monomial(inv, c.recip()).pow(k))
    }

    fn atom(&mut self) -> Result<Poly<i32>> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                Ok(Poly::constant(self.nvars, Rational::from_integer(n)))
            }
            Some(Tok::Var(i)) => {
                self.at += 1;
                Ok(Poly::var(self.nvars, i - 1))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.at += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `s` in the variable letter `var`. With `nvars = None` the count
/// is the largest index mentioned (at least 1).
pub fn parse_poly<E: Exponent>(s: &str, var: char, nvars: Option<usize>) -> Result<Poly<E>> {
    let toks = tokenize(s, var)?;
    let max_idx = toks
        .iter()
        .filter_map(|(_, t)| match t {
            Tok::Var(i) => Some(*i),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let n = match nvars {
        Some(n) if max_idx > n => {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("variable {var}{max_idx} exceeds the {n} available"),
            })
        }
        Some(n) => n,
        None => max_idx.max(1),
    };
    if toks.is_empty() {
        return Err(Error::Parse {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let mut p = Parser {
        toks: &toks,
        at: 0,
        nvars: n,
        end: s.len(),
    };
    let value = p.expr()?;
    if p.at != toks.len() {
        return p.err("trailing input");
    }
    let mut out: Poly<E> = Poly::zero(n);
    for (e, c) in value.terms() {
        let mut conv = Vec::with_capacity(n);
        for x in e {
            match E::from_i64(*x as i64) {
                Some(v) => conv.push(v),
                None => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: "negative exponent in an ordinary polynomial".into(),
                    })
                }
            }
        }
        out.add_term(conv, c.clone());
    }
    Ok(out)
}

/// Parses `a`, `-a` or `a/b`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("not a rational number: {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

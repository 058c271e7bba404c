//! Text expressions over the formal ring.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ['-'] power ('*' power)*
//! power  := atom ('^' ['-'] int)?
//! atom   := int | pi | pi2 | w | w2 | x1 | x2 | chi | '[' int ']'
//!         | Sym '[' int ']' '(' expr ')' | Ext '[' int ']' '(' expr ')' | '(' expr ')'
//! ```
//!
//! `[n]` is the `n`-dimensional irreducible of `SU(2)`; an expression using it
//! is compared after setting every twist to 1.

use alloc::boxed::Box;
use alloc::string::{String, ToString};

use super::{RingElem, RingError, Twist, TWIST_SYMBOLS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Pi,
    Pi2,
    Twist(usize),
    Bracket(u32),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i32),
    Sym(u32, Box<Expr>),
    Ext(u32, Box<Expr>),
}

impl Expr {
    pub fn uses_brackets(&self) -> bool {
        match self {
            Expr::Bracket(_) => true,
            Expr::Int(_) | Expr::Pi | Expr::Pi2 | Expr::Twist(_) => false,
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.uses_brackets() || b.uses_brackets(),
            Expr::Neg(a) | Expr::Pow(a, _) | Expr::Sym(_, a) | Expr::Ext(_, a) => a.uses_brackets(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: &str) -> Result<T, RingError> {
        Err(RingError::Parse { position: self.pos, message: message.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), RingError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&alloc::format!("expected '{c}'"))
        }
    }

    fn int(&mut self) -> Result<i64, RingError> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        match self.src[start..self.pos].parse() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("expected an integer")
            }
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self) -> Result<Expr, RingError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, RingError> {
        let neg = self.eat('-');
        let mut lhs = self.power()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(if neg { Expr::Neg(Box::new(lhs)) } else { lhs })
    }

    fn power(&mut self) -> Result<Expr, RingError> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = self.int()?;
            let e = i32::try_from(e).or_else(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }));
        }
        Ok(base)
    }

    fn bracketed_index(&mut self) -> Result<u32, RingError> {
        self.expect('[')?;
        let k = self.int()?;
        self.expect(']')?;
        u32::try_from(k).or_else(|_| self.err("index too large"))
    }

    fn atom(&mut self) -> Result<Expr, RingError> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('[') => {
                let n = self.bracketed_index()?;
                if n == 0 {
                    return self.err("SU(2) brackets start at [1]");
                }
                Ok(Expr::Bracket(n))
            }
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.int()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let id = self.ident();
                match id {
                    "pi" => Ok(Expr::Pi),
                    "pi2" => Ok(Expr::Pi2),
                    "Sym" | "Ext" => {
                        let k = self.bracketed_index()?;
                        self.expect('(')?;
                        let inner = Box::new(self.expr()?);
                        self.expect(')')?;
                        Ok(if id == "Sym" { Expr::Sym(k, inner) } else { Expr::Ext(k, inner) })
                    }
                    _ => match TWIST_SYMBOLS.iter().position(|s| *s == id) {
                        Some(i) => Ok(Expr::Twist(i)),
                        None => {
                            self.pos = start;
                            self.err(&alloc::format!("unknown symbol '{id}'"))
                        }
                    },
                }
            }
            Some(_) => self.err("unexpected character"),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<Expr, RingError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn eval_expr(e: &Expr) -> Result<RingElem, RingError> {
    Ok(match e {
        Expr::Int(n) => RingElem::constant(*n),
        Expr::Pi => RingElem::sym_pi(1),
        Expr::Pi2 => RingElem::sym_pi2(1),
        Expr::Twist(i) => {
            let mut t: Twist = [0; 5];
            t[*i] = 1;
            RingElem::twist(t)
        }
        Expr::Bracket(n) => RingElem::sym_pi(n - 1),
        Expr::Add(a, b) => eval_expr(a)?.add(&eval_expr(b)?),
        Expr::Sub(a, b) => eval_expr(a)?.sub(&eval_expr(b)?),
        Expr::Mul(a, b) => eval_expr(a)?.mul(&eval_expr(b)?),
        Expr::Neg(a) => eval_expr(a)?.scale(-1),
        Expr::Pow(a, k) => eval_expr(a)?.pow(*k)?,
        Expr::Sym(k, a) => eval_expr(a)?.sym(*k)?,
        Expr::Ext(k, a) => eval_expr(a)?.ext(*k)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub lhs: RingElem,
    pub rhs: RingElem,
    /// `lhs - rhs`, zero exactly when the identity holds.
    pub difference: RingElem,
    /// Compared after setting all twists to 1 (an `[n]` bracket was used).
    pub specialized: bool,
}

impl IdentityCheck {
    pub fn summary(&self) -> String {
        alloc::format!("lhs = {} ; rhs = {} ; lhs - rhs = {}", self.lhs, self.rhs, self.difference)
    }
}

pub fn verify_identity(lhs: &str, rhs: &str) -> Result<IdentityCheck, RingError> {
    let (le, re) = (parse_expr(lhs)?, parse_expr(rhs)?);
    let specialized = le.uses_brackets() || re.uses_brackets();
    let (mut l, mut r) = (eval_expr(&le)?, eval_expr(&re)?);
    if specialized {
        l = l.specialize_trivial_twists();
        r = r.specialize_trivial_twists();
    }
    let difference = l.sub(&r);
    Ok(IdentityCheck { holds: difference.is_zero(), lhs: l, rhs: r, difference, specialized })
}

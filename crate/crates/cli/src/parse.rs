//! ASCII surface syntax.
//!
//! Input is parsed into a raw tree first and then elaborated against a
//! context, because the context of `t` in `t[s]` is only known once `s`
//! has been checked. Elaboration turns `#n` into a Zero/Suc chain and
//! gives `id` its source context.

use std::fmt;

use sortsubst::{Con, Expr, ISub, ITm, Sort, Ty};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SourceSpan {
    /// Byte offsets into the input.
    pub start: usize,
    pub end: usize,
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
}

impl SourceSpan {
    fn new(input: &str, start: usize, end: usize) -> SourceSpan {
        let before = &input[..start];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |k| k + 1);
        let column = input[line_start..start].chars().count() + 1;
        SourceSpan { start, end, line, column }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    /// Well-formed text that does not elaborate: unbound index, ill-typed
    /// application, projection out of the empty context.
    Type,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{} at {}:{}: {message}", match kind { ErrorKind::Syntax => "syntax error", ErrorKind::Type => "type error" }, span.line, span.column)]
pub struct ParseError {
    pub kind: ErrorKind,
    pub span: SourceSpan,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Var(usize),
    Tick,
    Lambda,
    LParen,
    RParen,
    LBrack,
    RBrack,
    Dot,
    Comma,
    Semi,
    Arrow,
    Base,
    Id,
    Eps,
    P0,
    P1,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Var(n) => return write!(f, "`#{n}`"),
            Tok::Tick => "'`'",
            Tok::Lambda => "'\\'",
            Tok::LParen => "'('",
            Tok::RParen => "')'",
            Tok::LBrack => "'['",
            Tok::RBrack => "']'",
            Tok::Dot => "'.'",
            Tok::Comma => "','",
            Tok::Semi => "';'",
            Tok::Arrow => "'->'",
            Tok::Base => "'o'",
            Tok::Id => "'id'",
            Tok::Eps => "'eps'",
            Tok::P0 => "'p0'",
            Tok::P1 => "'p1'",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    start: usize,
    end: usize,
}

fn lex(input: &str) -> Result<Vec<Token>, ParseError> {
    let err = |start: usize, end: usize, message: String| ParseError {
        kind: ErrorKind::Syntax,
        span: SourceSpan::new(input, start, end),
        message,
    };
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = input[k..].chars().next().expect("in bounds");
        if c.is_whitespace() {
            k += c.len_utf8();
            continue;
        }
        let start = k;
        let single = match c {
            '`' => Some(Tok::Tick),
            '\\' => Some(Tok::Lambda),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBrack),
            ']' => Some(Tok::RBrack),
            '.' => Some(Tok::Dot),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            _ => None,
        };
        if let Some(tok) = single {
            k += 1;
            out.push(Token { tok, start, end: k });
            continue;
        }
        if c == '-' {
            if bytes.get(k + 1) == Some(&b'>') {
                k += 2;
                out.push(Token { tok: Tok::Arrow, start, end: k });
                continue;
            }
            return Err(err(start, k + 1, "expected '->'".into()));
        }
        if c == '#' {
            k += 1;
            let digits = bytes[k..].iter().take_while(|b| b.is_ascii_digit()).count();
            if digits == 0 {
                return Err(err(start, k, "expected a number after '#'".into()));
            }
            let text = &input[k..k + digits];
            k += digits;
            let n = text.parse().map_err(|_| err(start, k, format!("index {text} is too large")))?;
            out.push(Token { tok: Tok::Var(n), start, end: k });
            continue;
        }
        if c.is_ascii_alphanumeric() || c == '_' {
            let len = bytes[k..].iter().take_while(|b| b.is_ascii_alphanumeric() || **b == b'_').count();
            let word = &input[k..k + len];
            k += len;
            let tok = match word {
                "o" => Tok::Base,
                "id" => Tok::Id,
                "eps" => Tok::Eps,
                "p0" => Tok::P0,
                "p1" => Tok::P1,
                _ => return Err(err(start, k, format!("unknown word `{word}`"))),
            };
            out.push(Token { tok, start, end: k });
            continue;
        }
        return Err(err(start, k + c.len_utf8(), format!("unexpected character `{c}`")));
    }
    out.push(Token { tok: Tok::Eof, start: input.len(), end: input.len() });
    Ok(out)
}

#[derive(Clone, Debug)]
enum RawTm {
    Var(usize),
    Embed(Box<Raw<RawTm>>),
    App(Box<Raw<RawTm>>, Box<Raw<RawTm>>),
    Lam(Ty, Box<Raw<RawTm>>),
    SubApply(Box<Raw<RawTm>>, Box<Raw<RawSub>>),
    Pi1(Box<Raw<RawSub>>),
}

#[derive(Clone, Debug)]
enum RawSub {
    Id,
    Eps,
    Ext(Box<Raw<RawSub>>, Box<Raw<RawTm>>),
    Pi0(Box<Raw<RawSub>>),
    /// `a ; b`: first `a`, then `b`.
    Seq(Box<Raw<RawSub>>, Box<Raw<RawSub>>),
}

#[derive(Clone, Debug)]
struct Raw<T> {
    node: T,
    start: usize,
    end: usize,
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Result<Parser<'a>, ParseError> {
        Ok(Parser { input, toks: lex(input)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn here(&self) -> usize {
        self.toks[self.pos].start
    }

    fn last_end(&self) -> usize {
        if self.pos == 0 {
            0
        } else {
            self.toks[self.pos - 1].end
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: String) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError { kind: ErrorKind::Syntax, span: SourceSpan::new(self.input, t.start, t.end), message }
    }

    fn expect(&mut self, tok: Tok, context: &str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected {tok} {context}, found {}", self.peek())))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            t => Err(self.error(format!("unexpected {t} after the end of the input"))),
        }
    }

    fn ty(&mut self) -> Result<Ty, ParseError> {
        let dom = match self.bump() {
            Tok::Base => Ty::Base,
            Tok::LParen => {
                let t = self.ty()?;
                self.expect(Tok::RParen, "to close the type")?;
                t
            }
            t => {
                self.pos -= usize::from(t != Tok::Eof);
                return Err(self.error(format!("expected a type, found {t}")));
            }
        };
        if *self.peek() == Tok::Arrow {
            self.bump();
            Ok(Ty::arrow(dom, self.ty()?))
        } else {
            Ok(dom)
        }
    }

    fn con(&mut self) -> Result<Con, ParseError> {
        self.expect(Tok::LBrack, "to open the context")?;
        let mut types = Vec::new();
        if *self.peek() != Tok::RBrack {
            types.push(self.ty()?);
            while *self.peek() == Tok::Comma {
                self.bump();
                types.push(self.ty()?);
            }
        }
        self.expect(Tok::RBrack, "to close the context")?;
        Ok(Con::from(types))
    }

    fn raw<T>(&self, node: T, start: usize) -> Raw<T> {
        Raw { node, start, end: self.last_end() }
    }

    fn term(&mut self) -> Result<Raw<RawTm>, ParseError> {
        if *self.peek() == Tok::Lambda {
            return self.lam();
        }
        let start = self.here();
        let mut head = if *self.peek() == Tok::P1 {
            self.bump();
            let s = self.sub_proj()?;
            self.raw(RawTm::Pi1(Box::new(s)), start)
        } else {
            self.postfix()?
        };
        loop {
            match self.peek() {
                Tok::Lambda => {
                    let arg = self.lam()?;
                    return Ok(self.raw(RawTm::App(Box::new(head), Box::new(arg)), start));
                }
                Tok::Var(_) | Tok::Tick | Tok::LParen => {
                    let arg = self.postfix()?;
                    head = self.raw(RawTm::App(Box::new(head), Box::new(arg)), start);
                }
                _ => return Ok(head),
            }
        }
    }

    fn lam(&mut self) -> Result<Raw<RawTm>, ParseError> {
        let start = self.here();
        self.expect(Tok::Lambda, "")?;
        self.expect(Tok::LParen, "before the binder's type")?;
        let dom = self.ty()?;
        self.expect(Tok::RParen, "after the binder's type")?;
        self.expect(Tok::Dot, "after the binder")?;
        let body = self.term()?;
        Ok(self.raw(RawTm::Lam(dom, Box::new(body)), start))
    }

    fn postfix(&mut self) -> Result<Raw<RawTm>, ParseError> {
        let start = self.here();
        let mut t = self.atom()?;
        while *self.peek() == Tok::LBrack {
            self.bump();
            let s = self.sub()?;
            self.expect(Tok::RBrack, "to close the substitution")?;
            t = self.raw(RawTm::SubApply(Box::new(t), Box::new(s)), start);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Raw<RawTm>, ParseError> {
        let start = self.here();
        match self.peek().clone() {
            Tok::Var(n) => {
                self.bump();
                Ok(self.raw(RawTm::Var(n), start))
            }
            Tok::Tick => {
                self.bump();
                let inner = self.postfix()?;
                Ok(self.raw(RawTm::Embed(Box::new(inner)), start))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "to close the term")?;
                Ok(t)
            }
            t => Err(self.error(format!("expected a term, found {t}"))),
        }
    }

    fn sub(&mut self) -> Result<Raw<RawSub>, ParseError> {
        let start = self.here();
        let mut s = self.sub_proj()?;
        while *self.peek() == Tok::Semi {
            self.bump();
            let next = self.sub_proj()?;
            s = self.raw(RawSub::Seq(Box::new(s), Box::new(next)), start);
        }
        Ok(s)
    }

    fn sub_proj(&mut self) -> Result<Raw<RawSub>, ParseError> {
        let start = self.here();
        match self.peek() {
            Tok::P0 => {
                self.bump();
                let s = self.sub_proj()?;
                Ok(self.raw(RawSub::Pi0(Box::new(s)), start))
            }
            Tok::Id => {
                self.bump();
                Ok(self.raw(RawSub::Id, start))
            }
            Tok::Eps => {
                self.bump();
                Ok(self.raw(RawSub::Eps, start))
            }
            Tok::LParen => {
                self.bump();
                let s = self.sub()?;
                match self.bump() {
                    Tok::RParen => Ok(s),
                    Tok::Comma => {
                        let t = self.term()?;
                        self.expect(Tok::RParen, "to close the extension")?;
                        Ok(self.raw(RawSub::Ext(Box::new(s), Box::new(t)), start))
                    }
                    t => {
                        self.pos -= usize::from(t != Tok::Eof);
                        Err(self.error(format!("expected ',' or ')' in a substitution, found {t}")))
                    }
                }
            }
            t => Err(self.error(format!("expected a substitution, found {t}"))),
        }
    }
}

struct Elab<'a> {
    input: &'a str,
}

impl Elab<'_> {
    fn fail<T, R>(&self, at: &Raw<R>, message: String) -> Result<T, ParseError> {
        Err(ParseError { kind: ErrorKind::Type, span: SourceSpan::new(self.input, at.start, at.end), message })
    }

    fn expr(&self, ctx: &Con, t: &Raw<RawTm>) -> Result<(Expr, Ty), ParseError> {
        match &t.node {
            RawTm::Var(n) => match (Expr::var(ctx, *n), ctx.lookup(*n)) {
                (Some(v), Some(ty)) => Ok((v, ty.clone())),
                _ => self.fail(t, format!("#{n} is out of scope in a context of length {}", ctx.len())),
            },
            RawTm::Embed(inner) => {
                let (v, ty) = self.expr(ctx, inner)?;
                if v.var_index().is_none() {
                    return self.fail(t, "'`' applies to a variable `#n` only".into());
                }
                Ok((Expr::embed(v), ty))
            }
            RawTm::App(f, x) => {
                let (fe, fty) = self.term_sorted(ctx, f)?;
                let (xe, xty) = self.term_sorted(ctx, x)?;
                let Some((dom, cod)) = fty.as_arrow() else {
                    return self.fail(f, format!("applying a term of type {fty}, which is not a function"));
                };
                if *dom != xty {
                    return self.fail(x, format!("argument has type {xty}, expected {dom}"));
                }
                Ok((Expr::app(fe, xe), cod.clone()))
            }
            RawTm::Lam(dom, body) => {
                let (b, cod) = self.term_sorted(&ctx.extend(dom.clone()), body)?;
                Ok((Expr::lam(dom.clone(), b), Ty::arrow(dom.clone(), cod)))
            }
            RawTm::SubApply(..) | RawTm::Pi1(_) => {
                self.fail(t, "explicit-substitution syntax in a core expression".into())
            }
        }
    }

    /// Subterms of application and λ must be terms, not bare variables.
    fn term_sorted(&self, ctx: &Con, t: &Raw<RawTm>) -> Result<(Expr, Ty), ParseError> {
        let (e, ty) = self.expr(ctx, t)?;
        if sortsubst::sort_of(&e) == Sort::V {
            return self.fail(t, "a variable used as a term needs '`', as in `#0".into());
        }
        Ok((e, ty))
    }

    fn itm(&self, ctx: &Con, t: &Raw<RawTm>) -> Result<(ITm, Ty), ParseError> {
        match &t.node {
            RawTm::SubApply(inner, s) => {
                let (s, mid) = self.isub(ctx, s)?;
                let (inner, ty) = self.itm(&mid, inner)?;
                Ok((ITm::sub_apply(inner, s), ty))
            }
            RawTm::Pi1(s) => {
                let (s_el, tgt) = self.isub(ctx, s)?;
                match tgt.last() {
                    Some(ty) => Ok((ITm::pi1(s_el), ty.clone())),
                    None => self.fail(s, "p1 of a substitution into the empty context".into()),
                }
            }
            RawTm::App(f, x) => {
                let (fe, fty) = self.itm(ctx, f)?;
                let (xe, xty) = self.itm(ctx, x)?;
                let Some((dom, cod)) = fty.as_arrow() else {
                    return self.fail(f, format!("applying a term of type {fty}, which is not a function"));
                };
                if *dom != xty {
                    return self.fail(x, format!("argument has type {xty}, expected {dom}"));
                }
                Ok((ITm::app(fe, xe), cod.clone()))
            }
            RawTm::Lam(dom, body) => {
                let (b, cod) = self.itm(&ctx.extend(dom.clone()), body)?;
                Ok((ITm::lam(dom.clone(), b), Ty::arrow(dom.clone(), cod)))
            }
            RawTm::Var(_) | RawTm::Embed(_) => {
                self.fail(t, "core variable syntax in an explicit term; variables are p1/p0 chains".into())
            }
        }
    }

    fn isub(&self, src: &Con, s: &Raw<RawSub>) -> Result<(ISub, Con), ParseError> {
        match &s.node {
            RawSub::Id => Ok((ISub::Id(src.clone()), src.clone())),
            RawSub::Eps => Ok((ISub::Eps, Con::empty())),
            RawSub::Ext(inner, t) => {
                let (inner, tgt) = self.isub(src, inner)?;
                let (t, ty) = self.itm(src, t)?;
                Ok((ISub::ext(inner, t), tgt.extend(ty)))
            }
            RawSub::Pi0(inner) => {
                let (inner_el, tgt) = self.isub(src, inner)?;
                match tgt.split_last() {
                    Some((init, _)) => Ok((ISub::pi0(inner_el), init)),
                    None => self.fail(inner, "p0 of a substitution into the empty context".into()),
                }
            }
            RawSub::Seq(first, then) => {
                let (first, mid) = self.isub(src, first)?;
                let (then, tgt) = self.isub(&mid, then)?;
                Ok((ISub::comp(then, first), tgt))
            }
        }
    }
}

pub fn parse_ty(input: &str) -> Result<Ty, ParseError> {
    let mut p = Parser::new(input)?;
    let t = p.ty()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_con(input: &str) -> Result<Con, ParseError> {
    let mut p = Parser::new(input)?;
    let c = p.con()?;
    p.finish()?;
    Ok(c)
}

fn parse_raw_term(input: &str) -> Result<Raw<RawTm>, ParseError> {
    let mut p = Parser::new(input)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// A core expression in `ctx`, with its type.
pub fn parse_expr(input: &str, ctx: &Con) -> Result<(Expr, Ty), ParseError> {
    Elab { input }.expr(ctx, &parse_raw_term(input)?)
}

/// An explicit term in `ctx`, with its type.
pub fn parse_itm(input: &str, ctx: &Con) -> Result<(ITm, Ty), ParseError> {
    Elab { input }.itm(ctx, &parse_raw_term(input)?)
}

/// An explicit substitution out of `src`, with its target.
pub fn parse_isub(input: &str, src: &Con) -> Result<(ISub, Con), ParseError> {
    let mut p = Parser::new(input)?;
    let s = p.sub()?;
    p.finish()?;
    Elab { input }.isub(src, &s)
}

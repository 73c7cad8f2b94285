//! ASCII rendering with minimal parentheses.
//!
//! ```text
//! Ty   o | A -> B                  (right-associative)
//! Con  [] | [A, B, C]              (rightmost is most recent)
//! Expr #n | `e | e e | \(A). e
//! ITm  t[s] | p1 s | t u | \(A). t
//! ISub id | eps | (s, t) | p0 s | s ; d   (s ; d means d ∘ s)
//! ```
//!
//! `id` is printed without its context; the parser recovers it from the
//! source context. A λ in the last position of an application is left
//! unparenthesized.

use std::fmt::{self, Display, Formatter, Write};

use crate::explicit::{ISub, ITm};
use crate::syntax::{Con, Expr, SubList, Ty};

fn ty(f: &mut Formatter<'_>, t: &Ty, left_of_arrow: bool) -> fmt::Result {
    match t {
        Ty::Base => f.write_char('o'),
        Ty::Arrow(a, b) => {
            if left_of_arrow {
                f.write_char('(')?;
            }
            ty(f, a, true)?;
            f.write_str(" -> ")?;
            ty(f, b, false)?;
            if left_of_arrow {
                f.write_char(')')?;
            }
            Ok(())
        }
    }
}

impl Display for Ty {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        ty(f, self, false)
    }
}

impl Display for Con {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_char('[')?;
        for (k, t) in self.types().iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_char(']')
    }
}

// Precedence levels shared by both term languages.
const LAM: u8 = 0;
const APP: u8 = 1;
const ARG: u8 = 2;

fn expr(f: &mut Formatter<'_>, e: &Expr, prec: u8, tail: bool) -> fmt::Result {
    if let Some(n) = e.var_index() {
        return write!(f, "#{n}");
    }
    match e {
        Expr::Embed(v) => {
            f.write_char('`')?;
            expr(f, v, ARG, false)
        }
        Expr::App(t, u) => {
            let paren = prec > APP;
            if paren {
                f.write_char('(')?;
            }
            expr(f, t, APP, false)?;
            f.write_char(' ')?;
            expr(f, u, ARG, tail || paren)?;
            if paren {
                f.write_char(')')?;
            }
            Ok(())
        }
        Expr::Lam(dom, body) => {
            let paren = prec > LAM && !tail;
            if paren {
                f.write_char('(')?;
            }
            write!(f, "\\({dom}). ")?;
            expr(f, body, LAM, true)?;
            if paren {
                f.write_char(')')?;
            }
            Ok(())
        }
        Expr::Zero | Expr::Suc(..) => unreachable!("variables handled above"),
    }
}

impl Display for Expr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        expr(f, self, LAM, true)
    }
}

impl Display for SubList {
    /// `eps` followed by one `, e` per entry, wrapped like nested pairs:
    /// `((eps, x), y)`.
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for _ in &self.entries {
            f.write_char('(')?;
        }
        f.write_str("eps")?;
        for e in &self.entries {
            write!(f, ", {e})")?;
        }
        Ok(())
    }
}

// ITm levels: LAM < APP (application, p1) < POST (t[s]).
const POST: u8 = 2;

fn itm(f: &mut Formatter<'_>, t: &ITm, prec: u8, tail: bool) -> fmt::Result {
    match t {
        ITm::SubApply(t, s) => {
            let paren = prec > POST;
            if paren {
                f.write_char('(')?;
            }
            itm(f, t, POST, false)?;
            f.write_char('[')?;
            isub(f, s, SEQ)?;
            f.write_char(']')?;
            if paren {
                f.write_char(')')?;
            }
            Ok(())
        }
        ITm::Pi1(s) => {
            let paren = prec > APP;
            if paren {
                f.write_char('(')?;
            }
            f.write_str("p1 ")?;
            isub(f, s, PROJ)?;
            if paren {
                f.write_char(')')?;
            }
            Ok(())
        }
        ITm::App(t, u) => {
            let paren = prec > APP;
            if paren {
                f.write_char('(')?;
            }
            itm(f, t, APP, false)?;
            f.write_char(' ')?;
            itm(f, u, POST, tail || paren)?;
            if paren {
                f.write_char(')')?;
            }
            Ok(())
        }
        ITm::Lam(dom, body) => {
            let paren = prec > LAM && !tail;
            if paren {
                f.write_char('(')?;
            }
            write!(f, "\\({dom}). ")?;
            itm(f, body, LAM, true)?;
            if paren {
                f.write_char(')')?;
            }
            Ok(())
        }
    }
}

impl Display for ITm {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        itm(f, self, LAM, true)
    }
}

// ISub levels: SEQ (`;` chains) < PROJ (p0) < atoms.
const SEQ: u8 = 0;
const PROJ: u8 = 1;

fn isub(f: &mut Formatter<'_>, s: &ISub, prec: u8) -> fmt::Result {
    match s {
        ISub::Id(_) => f.write_str("id"),
        ISub::Eps => f.write_str("eps"),
        ISub::Ext(s, t) => {
            f.write_char('(')?;
            isub(f, s, SEQ)?;
            f.write_str(", ")?;
            itm(f, t, LAM, true)?;
            f.write_char(')')
        }
        ISub::Pi0(s) => {
            f.write_str("p0 ")?;
            isub(f, s, PROJ)
        }
        ISub::Comp(sigma, delta) => {
            let paren = prec > SEQ;
            if paren {
                f.write_char('(')?;
            }
            isub(f, delta, SEQ)?;
            f.write_str(" ; ")?;
            isub(f, sigma, PROJ)?;
            if paren {
                f.write_char(')')?;
            }
            Ok(())
        }
    }
}

impl Display for ISub {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        isub(f, self, SEQ)
    }
}

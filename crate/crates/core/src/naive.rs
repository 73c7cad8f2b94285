//! The duplicated engine: renamings and substitutions kept apart, with four
//! application operations and separate weakening, lifting and identity for
//! renamings. Used only as a differential-testing reference for
//! [`crate::subst`]; it shares nothing with that module beyond the syntax
//! types.

use std::cell::Cell;

use crate::syntax::{Con, Expr, Sort, SubList, Ty};

thread_local! {
    static VISITS: Cell<u64> = const { Cell::new(0) };
}

pub fn visits() -> u64 {
    VISITS.with(Cell::get)
}

pub fn reset_visits() {
    VISITS.with(|v| v.set(0));
}

#[inline]
fn visit() {
    VISITS.with(|v| v.set(v.get() + 1));
}

fn is_var(e: &Expr) -> bool {
    matches!(e, Expr::Zero | Expr::Suc(..))
}

/// A renaming: every entry is a variable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ren(Vec<Expr>);

/// A substitution: every entry is a term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sub(Vec<Expr>);

impl Ren {
    pub fn new(entries: Vec<Expr>) -> Option<Ren> {
        entries.iter().all(is_var).then_some(Ren(entries))
    }

    pub fn entries(&self) -> &[Expr] {
        &self.0
    }

    pub fn into_sublist(self) -> SubList {
        SubList::new(Sort::V, self.0)
    }
}

impl Sub {
    pub fn new(entries: Vec<Expr>) -> Option<Sub> {
        entries.iter().all(|e| !is_var(e)).then_some(Sub(entries))
    }

    pub fn entries(&self) -> &[Expr] {
        &self.0
    }

    pub fn into_sublist(self) -> SubList {
        SubList::new(Sort::T, self.0)
    }
}

impl TryFrom<&SubList> for Ren {
    type Error = ();

    fn try_from(s: &SubList) -> Result<Ren, ()> {
        if s.sort != Sort::V {
            return Err(());
        }
        Ren::new(s.entries.clone()).ok_or(())
    }
}

impl TryFrom<&SubList> for Sub {
    type Error = ();

    fn try_from(s: &SubList) -> Result<Sub, ()> {
        if s.sort != Sort::T {
            return Err(());
        }
        Sub::new(s.entries.clone()).ok_or(())
    }
}

/// `i v[ is ]v`
pub fn var_ren(i: &Expr, is: &Ren) -> Expr {
    var_ren_in(i, &is.0)
}

fn var_ren_in(i: &Expr, is: &[Expr]) -> Expr {
    visit();
    match (i, is.split_last()) {
        (Expr::Zero, Some((j, _))) => j.clone(),
        (Expr::Suc(i, _), Some((_, is))) => var_ren_in(i, is),
        (Expr::Zero | Expr::Suc(..), None) => {
            panic!("contract violation in var_ren: variable against empty renaming")
        }
        _ => panic!("contract violation in var_ren: not a variable"),
    }
}

/// `t [ is ]v`
pub fn tm_ren(t: &Expr, is: &Ren) -> Expr {
    visit();
    match t {
        Expr::Embed(i) => Expr::embed(var_ren(i, is)),
        Expr::App(t, u) => Expr::app(tm_ren(t, is), tm_ren(u, is)),
        Expr::Lam(a, body) => Expr::lam(a.clone(), tm_ren(body, &ren_lift(is, a))),
        _ => panic!("contract violation in tm_ren: not a term"),
    }
}

/// `is ⁺v A`
pub fn ren_weaken(is: &Ren, a: &Ty) -> Ren {
    visit();
    Ren(is.0.iter().map(|i| Expr::suc(i.clone(), a.clone())).collect())
}

/// `is ↑v A = is ⁺v A , zero`
pub fn ren_lift(is: &Ren, a: &Ty) -> Ren {
    let mut out = ren_weaken(is, a);
    out.0.push(Expr::Zero);
    out
}

/// `idv`
pub fn id_ren(ctx: &Con) -> Ren {
    visit();
    match ctx.split_last() {
        None => Ren(Vec::new()),
        Some((init, a)) => ren_lift(&id_ren(&init), a),
    }
}

/// `i v[ ts ]`
pub fn var_sub(i: &Expr, ts: &Sub) -> Expr {
    var_sub_in(i, &ts.0)
}

fn var_sub_in(i: &Expr, ts: &[Expr]) -> Expr {
    visit();
    match (i, ts.split_last()) {
        (Expr::Zero, Some((t, _))) => t.clone(),
        (Expr::Suc(i, _), Some((_, ts))) => var_sub_in(i, ts),
        (Expr::Zero | Expr::Suc(..), None) => {
            panic!("contract violation in var_sub: variable against empty substitution")
        }
        _ => panic!("contract violation in var_sub: not a variable"),
    }
}

/// `t [ ts ]`, with `ts : src ⊩ Γ`.
pub fn tm_sub(t: &Expr, ts: &Sub, src: &Con) -> Expr {
    visit();
    match t {
        Expr::Embed(i) => var_sub(i, ts),
        Expr::App(t, u) => Expr::app(tm_sub(t, ts, src), tm_sub(u, ts, src)),
        Expr::Lam(a, body) => Expr::lam(a.clone(), tm_sub(body, &sub_lift_naive(ts, a, src), &src.extend(a.clone()))),
        _ => panic!("contract violation in tm_sub: not a term"),
    }
}

/// `suc-tm t A = t [ idv ⁺v A ]v`, with `t` in `ctx`.
pub fn suc_tm(t: &Expr, a: &Ty, ctx: &Con) -> Expr {
    tm_ren(t, &ren_weaken(&id_ren(ctx), a))
}

/// `ts ⁺ A`, with `ts : ctx ⊩ Δ`.
pub fn sub_weaken_naive(ts: &Sub, a: &Ty, ctx: &Con) -> Sub {
    visit();
    Sub(ts.0.iter().map(|t| suc_tm(t, a, ctx)).collect())
}

/// `ts ↑ A = ts ⁺ A , ` zero`
pub fn sub_lift_naive(ts: &Sub, a: &Ty, ctx: &Con) -> Sub {
    let mut out = sub_weaken_naive(ts, a, ctx);
    out.0.push(Expr::embed(Expr::Zero));
    out
}

// Composition is not part of the duplicated engine proper; these four
// variants map the matching application over the entries of the first
// argument, for cross-checking `subst::compose`.

pub fn ren_comp_ren(is: &Ren, js: &Ren) -> Ren {
    Ren(is.0.iter().map(|i| var_ren(i, js)).collect())
}

pub fn ren_comp_sub(is: &Ren, ts: &Sub) -> Sub {
    Sub(is.0.iter().map(|i| var_sub(i, ts)).collect())
}

pub fn sub_comp_ren(ts: &Sub, is: &Ren) -> Sub {
    Sub(ts.0.iter().map(|t| tm_ren(t, is)).collect())
}

pub fn sub_comp_sub(ts: &Sub, us: &Sub, src: &Con) -> Sub {
    Sub(ts.0.iter().map(|t| tm_sub(t, us, src)).collect())
}

/// Dispatches to the application operation matching the sorts of `x` and
/// `ys`, mirroring the single factored `_[_]`.
pub fn apply_dispatch(x: &Expr, ys: &SubList, src: &Con) -> Expr {
    match (is_var(x), ys.sort) {
        (true, Sort::V) => var_ren(x, &Ren::try_from(ys).expect("renaming entries")),
        (true, Sort::T) => var_sub(x, &Sub::try_from(ys).expect("substitution entries")),
        (false, Sort::V) => tm_ren(x, &Ren::try_from(ys).expect("renaming entries")),
        (false, Sort::T) => tm_sub(x, &Sub::try_from(ys).expect("substitution entries"), src),
    }
}

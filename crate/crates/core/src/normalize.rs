//! Normalization of explicit-substitution terms into the factored calculus,
//! the embedding back, and the equality test for the CwF theory that the
//! two together induce.

use thiserror::Error;

use crate::explicit::{i_suc, i_zero, infer_isub, infer_itm, ISub, ITm};
use crate::subst::{coerce_sub, compose, id_sub, subst_apply};
use crate::syntax::{Con, Expr, Sort, SubList, Ty};

#[track_caller]
fn contract(op: &str, msg: &str) -> ! {
    panic!("contract violation in {op}: {msg}")
}

/// Normal form of `t : ctx ⊢ A`, a sort-`T` expression of type `A`.
pub fn norm(ctx: &Con, t: &ITm) -> Expr {
    norm_typed(ctx, t).0
}

/// [`norm`] together with the inferred type.
pub fn norm_typed(ctx: &Con, t: &ITm) -> (Expr, Ty) {
    match t {
        ITm::SubApply(t, s) => {
            let (ys, mid) = norm_sub_typed(ctx, s);
            let (x, ty) = norm_typed(&mid, t);
            (subst_apply(&x, &ys, ctx), ty)
        }
        ITm::Pi1(s) => {
            let (mut ys, tgt) = norm_sub_typed(ctx, s);
            match (ys.entries.pop(), tgt.last()) {
                (Some(x), Some(ty)) => (x, ty.clone()),
                _ => contract("norm", "π₁ of a substitution into the empty context"),
            }
        }
        ITm::App(t, u) => {
            let (f, fty) = norm_typed(ctx, t);
            let (a, aty) = norm_typed(ctx, u);
            match fty.as_arrow() {
                Some((dom, cod)) if *dom == aty => (Expr::app(f, a), cod.clone()),
                _ => contract("norm", "ill-typed application"),
            }
        }
        ITm::Lam(dom, body) => {
            let (b, cod) = norm_typed(&ctx.extend(dom.clone()), body);
            (Expr::lam(dom.clone(), b), Ty::arrow(dom.clone(), cod))
        }
    }
}

/// Normal form of `s : src ⊩ Δ`, a sort-`T` list.
pub fn norm_sub(src: &Con, s: &ISub) -> SubList {
    norm_sub_typed(src, s).0
}

/// [`norm_sub`] together with the target context `Δ`.
pub fn norm_sub_typed(src: &Con, s: &ISub) -> (SubList, Con) {
    match s {
        ISub::Id(ctx) => {
            if ctx != src {
                contract("norm_sub", "identity annotated with a different context");
            }
            (coerce_sub(Sort::T, id_sub(src)), src.clone())
        }
        ISub::Comp(sigma, delta) => {
            let (ys, mid) = norm_sub_typed(src, delta);
            let (xs, tgt) = norm_sub_typed(&mid, sigma);
            (compose(&xs, &ys, src), tgt)
        }
        ISub::Eps => (SubList::empty(Sort::T), Con::empty()),
        ISub::Ext(s, t) => {
            let (mut xs, tgt) = norm_sub_typed(src, s);
            let (x, ty) = norm_typed(src, t);
            xs.entries.push(x);
            (xs, tgt.extend(ty))
        }
        ISub::Pi0(s) => {
            let (mut xs, tgt) = norm_sub_typed(src, s);
            match tgt.split_last() {
                Some((init, _)) => {
                    xs.entries.pop();
                    (xs, init)
                }
                None => contract("norm_sub", "π₀ of a substitution into the empty context"),
            }
        }
    }
}

/// `⌜ x ⌝` for `x` in `ctx`, at either sort.
pub fn embed(ctx: &Con, x: &Expr) -> ITm {
    match x {
        Expr::Zero => {
            if ctx.is_empty() {
                contract("embed", "variable in the empty context");
            }
            i_zero(ctx)
        }
        Expr::Suc(i, skipped) => match ctx.split_last() {
            Some((init, last)) if last == skipped => i_suc(embed(&init, i), skipped, &init),
            Some(_) => contract("embed", "successor annotation disagrees with the context"),
            None => contract("embed", "variable in the empty context"),
        },
        Expr::Embed(i) => embed(ctx, i),
        Expr::App(t, u) => ITm::app(embed(ctx, t), embed(ctx, u)),
        Expr::Lam(dom, body) => ITm::lam(dom.clone(), embed(&ctx.extend(dom.clone()), body)),
    }
}

/// `⌜ xs ⌝*` for `xs : src ⊩ _`.
pub fn embed_sub(src: &Con, xs: &SubList) -> ISub {
    xs.entries.iter().fold(ISub::Eps, |acc, x| ISub::ext(acc, embed(src, x)))
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EqError {
    #[error("{side} side is ill-formed in {ctx:?}")]
    IllFormed { side: &'static str, ctx: Con },
    #[error("sides have different types: {lhs:?} and {rhs:?}")]
    TypeMismatch { lhs: Ty, rhs: Ty },
    #[error("sides have different target contexts: {lhs:?} and {rhs:?}")]
    TargetMismatch { lhs: Con, rhs: Con },
}

/// Whether `a` and `b` are equal in the CwF theory, decided by comparing
/// normal forms.
pub fn decide_eq(ctx: &Con, a: &ITm, b: &ITm) -> Result<bool, EqError> {
    let ill = |side| EqError::IllFormed { side, ctx: ctx.clone() };
    let lty = infer_itm(ctx, a).ok_or_else(|| ill("left"))?;
    let rty = infer_itm(ctx, b).ok_or_else(|| ill("right"))?;
    if lty != rty {
        return Err(EqError::TypeMismatch { lhs: lty, rhs: rty });
    }
    Ok(norm(ctx, a) == norm(ctx, b))
}

/// [`decide_eq`] for substitutions out of `src`.
pub fn decide_eq_sub(src: &Con, a: &ISub, b: &ISub) -> Result<bool, EqError> {
    let ill = |side| EqError::IllFormed { side, ctx: src.clone() };
    let ltgt = infer_isub(src, a).ok_or_else(|| ill("left"))?;
    let rtgt = infer_isub(src, b).ok_or_else(|| ill("right"))?;
    if ltgt != rtgt {
        return Err(EqError::TargetMismatch { lhs: ltgt, rhs: rtgt });
    }
    Ok(norm_sub(src, a) == norm_sub(src, b))
}

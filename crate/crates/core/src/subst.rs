//! The sort-factored substitution calculus.
//!
//! One application operation covers renaming and substitution of variables
//! and terms alike; the result sort is the join of the input sorts. Weakening
//! a term (`suc_at` at sort `T`) applies the weakened identity *renaming*,
//! which is what makes the mutual recursion terminate: every cycle through
//! `suc_at` drops from sort `T` to sort `V`.
//!
//! Operations whose `T` case needs the identity renaming take the source
//! context of their substitution argument explicitly, since an extrinsic
//! `Expr` does not carry its context.

use std::cell::Cell;

use crate::monitor::{self, con_nodes, list_nodes, ty_nodes};
use crate::syntax::{sort_of, Con, Expr, Sort, SubList, Ty};

thread_local! {
    static VISITS: Cell<u64> = const { Cell::new(0) };
}

/// Recursive engine calls made on this thread since the last reset.
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

#[track_caller]
fn contract(op: &str, msg: &str) -> ! {
    panic!("contract violation in {op}: {msg}")
}

/// `q ⊔ r`: `V` only if both are `V`.
pub fn join(q: Sort, r: Sort) -> Sort {
    match q {
        Sort::V => r,
        Sort::T => Sort::T,
    }
}

/// `q ⊑ r`
pub fn leq(q: Sort, r: Sort) -> bool {
    q == r || (q == Sort::V && r == Sort::T)
}

/// Lifts `x` to sort `target`, wrapping a variable in `Embed` when moving
/// from `V` to `T`. Requires `sort_of(x) ⊑ target`.
pub fn coerce_expr(target: Sort, x: Expr) -> Expr {
    match (sort_of(&x), target) {
        (Sort::V, Sort::T) => Expr::embed(x),
        (q, r) if q == r => x,
        _ => contract("coerce_expr", "cannot coerce a term down to a variable"),
    }
}

/// Entrywise [`coerce_expr`]. Requires `xs.sort ⊑ target`.
pub fn coerce_sub(target: Sort, xs: SubList) -> SubList {
    if !leq(xs.sort, target) {
        contract("coerce_sub", "cannot coerce a substitution down to a renaming");
    }
    if xs.sort == target {
        return xs;
    }
    SubList { sort: target, entries: xs.entries.into_iter().map(|e| coerce_expr(target, e)).collect() }
}

/// `zero[ q ]`
pub fn zero_at(q: Sort) -> Expr {
    match q {
        Sort::V => Expr::Zero,
        Sort::T => Expr::embed(Expr::Zero),
    }
}

/// `suc[ q ] x A`: weakens `x : Γ ⊢[q] B` to `Γ ▷ A ⊢[q] B`. `ctx` is `Γ`.
pub fn suc_at(q: Sort, x: &Expr, ty: &Ty, ctx: &Con) -> Expr {
    let _frame = monitor::enter("suc_at", || x.size() + ty_nodes(ty) + con_nodes(ctx));
    visit();
    if sort_of(x) != q {
        contract("suc_at", "expression sort differs from the requested sort");
    }
    match q {
        Sort::V => Expr::suc(x.clone(), ty.clone()),
        Sort::T => {
            let wk = weaken_entries(Sort::V, &id_sub(ctx).entries, ty, ctx);
            apply(x, Sort::V, &wk, &ctx.extend(ty.clone()))
        }
    }
}

/// `x [ ys ]`, where `ys : src ⊩[r] Γ` and `x : Γ ⊢[q] A`.
/// The result has sort `q ⊔ r` and lives in `src`.
pub fn subst_apply(x: &Expr, ys: &SubList, src: &Con) -> Expr {
    apply(x, ys.sort, &ys.entries, src)
}

fn apply(x: &Expr, sort: Sort, entries: &[Expr], src: &Con) -> Expr {
    let _frame = monitor::enter("subst_apply", || x.size() + list_nodes(entries) + con_nodes(src));
    visit();
    match x {
        Expr::Zero => match entries.last() {
            Some(e) => e.clone(),
            None => contract("subst_apply", "variable applied to an empty substitution"),
        },
        Expr::Suc(i, _) => match entries.split_last() {
            Some((_, init)) => apply(i, sort, init, src),
            None => contract("subst_apply", "variable applied to an empty substitution"),
        },
        Expr::Embed(i) => coerce_expr(Sort::T, apply(i, sort, entries, src)),
        Expr::App(t, u) => Expr::app(apply(t, sort, entries, src), apply(u, sort, entries, src)),
        Expr::Lam(dom, body) => {
            let lifted = lift_entries(sort, entries, dom, src);
            Expr::lam(dom.clone(), apply(body, sort, &lifted, &src.extend(dom.clone())))
        }
    }
}

/// `xs ⁺ A`: `xs : src ⊩[q] Δ` becomes `src ▷ A ⊩[q] Δ`.
pub fn sub_weaken(xs: &SubList, ty: &Ty, src: &Con) -> SubList {
    SubList { sort: xs.sort, entries: weaken_entries(xs.sort, &xs.entries, ty, src) }
}

/// The weakened entries, with room for one more.
fn weaken_entries(sort: Sort, entries: &[Expr], ty: &Ty, src: &Con) -> Vec<Expr> {
    let _frame = monitor::enter("sub_weaken", || list_nodes(entries) + ty_nodes(ty) + con_nodes(src));
    visit();
    let mut out = Vec::with_capacity(entries.len() + 1);
    out.extend(entries.iter().map(|e| suc_at(sort, e, ty, src)));
    out
}

/// `xs ↑ A = xs ⁺ A , zero[ q ]`: `src ▷ A ⊩[q] Δ ▷ A`.
pub fn sub_lift(xs: &SubList, ty: &Ty, src: &Con) -> SubList {
    SubList { sort: xs.sort, entries: lift_entries(xs.sort, &xs.entries, ty, src) }
}

fn lift_entries(sort: Sort, entries: &[Expr], ty: &Ty, src: &Con) -> Vec<Expr> {
    let _frame = monitor::enter("sub_lift", || list_nodes(entries) + ty_nodes(ty) + con_nodes(src));
    visit();
    let mut lifted = weaken_entries(sort, entries, ty, src);
    lifted.push(zero_at(sort));
    lifted
}

/// The identity renaming `ctx ⊩[V] ctx`, built as `((ε ↑ A₀) ↑ A₁) …`.
pub fn id_sub(ctx: &Con) -> SubList {
    let _frame = monitor::enter("id_sub", || con_nodes(ctx));
    visit();
    let mut entries = Vec::with_capacity(ctx.len());
    let mut prefix = Con::empty();
    for ty in ctx.types() {
        entries = lift_entries(Sort::V, &entries, ty, &prefix);
        prefix.push(ty.clone());
    }
    SubList { sort: Sort::V, entries }
}

/// `xs ∘ ys`, where `xs : Γ ⊩[q] Θ` and `ys : src ⊩[r] Γ`; the result is
/// `src ⊩[q ⊔ r] Θ`.
pub fn compose(xs: &SubList, ys: &SubList, src: &Con) -> SubList {
    let _frame = monitor::enter("compose", || list_nodes(&xs.entries) + list_nodes(&ys.entries) + con_nodes(src));
    visit();
    SubList {
        sort: join(xs.sort, ys.sort),
        entries: xs.entries.iter().map(|x| apply(x, ys.sort, &ys.entries, src)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::infer_expr;

    fn o() -> Ty {
        Ty::Base
    }

    fn oo() -> Ty {
        Ty::arrow(o(), o())
    }

    fn con(types: &[Ty]) -> Con {
        Con::from(types.to_vec())
    }

    #[test]
    fn lattice_tables() {
        use Sort::{T, V};
        assert_eq!(join(V, V), V);
        assert_eq!(join(V, T), T);
        assert_eq!(join(T, V), T);
        assert_eq!(join(T, T), T);
        assert!(leq(V, V) && leq(V, T) && leq(T, T));
        assert!(!leq(T, V));
    }

    #[test]
    fn lattice_laws_exhaustive() {
        for q in Sort::ALL {
            // ⊔v, ⊔t
            assert_eq!(join(q, Sort::V), q);
            assert_eq!(join(q, Sort::T), Sort::T);
            for r in Sort::ALL {
                assert!(leq(q, join(q, r)));
                assert!(leq(r, join(q, r)));
                for s in Sort::ALL {
                    // ⊔⊔
                    assert_eq!(join(q, join(r, s)), join(join(q, r), s));
                }
            }
        }
    }

    #[test]
    fn coercions() {
        assert_eq!(coerce_expr(Sort::T, Expr::Zero), Expr::embed(Expr::Zero));
        assert_eq!(coerce_expr(Sort::V, Expr::Zero), Expr::Zero);
        let app = Expr::app(Expr::embed(Expr::Zero), Expr::embed(Expr::Zero));
        assert_eq!(coerce_expr(Sort::T, app.clone()), app);

        assert_eq!(coerce_sub(Sort::T, SubList::empty(Sort::V)), SubList::empty(Sort::T));
        assert_eq!(
            coerce_sub(Sort::T, SubList::new(Sort::V, vec![Expr::Zero])),
            SubList::new(Sort::T, vec![Expr::embed(Expr::Zero)])
        );
        let ren = SubList::new(Sort::V, vec![Expr::Zero]);
        assert_eq!(coerce_sub(Sort::V, ren.clone()), ren);
    }

    #[test]
    #[should_panic(expected = "contract violation in coerce_expr")]
    fn coerce_down_is_a_contract_error() {
        coerce_expr(Sort::V, Expr::embed(Expr::Zero));
    }

    #[test]
    #[should_panic(expected = "contract violation in subst_apply")]
    fn zero_against_empty_is_a_contract_error() {
        subst_apply(&Expr::Zero, &SubList::empty(Sort::V), &Con::empty());
    }

    #[test]
    fn apply_examples() {
        let t = Expr::lam(o(), Expr::embed(Expr::Zero));
        let xs = SubList::new(Sort::T, vec![Expr::embed(Expr::Zero), t.clone()]);
        let src = con(&[o()]);
        assert_eq!(subst_apply(&Expr::Zero, &xs, &src), t);
        let one = Expr::suc(Expr::Zero, oo());
        assert_eq!(subst_apply(&one, &xs, &src), Expr::embed(Expr::Zero));
        let single = SubList::new(Sort::T, vec![t.clone()]);
        assert_eq!(subst_apply(&Expr::embed(Expr::Zero), &single, &Con::empty()), t);
    }

    #[test]
    fn apply_under_binder_weakens_substitution() {
        // (λ. `1) [ ε , `0 ] in Δ = [o] gives λ. `1
        let body = Expr::embed(Expr::suc(Expr::Zero, o()));
        let x = Expr::lam(o(), body.clone());
        let ys = SubList::new(Sort::T, vec![Expr::embed(Expr::Zero)]);
        let out = subst_apply(&x, &ys, &con(&[o()]));
        assert_eq!(out, x);
        assert_eq!(infer_expr(&con(&[o()]), &out), Some(oo()));
    }

    #[test]
    fn weaken_examples() {
        assert_eq!(sub_weaken(&SubList::empty(Sort::V), &o(), &Con::empty()), SubList::empty(Sort::V));
        let ren = SubList::new(Sort::V, vec![Expr::Zero]);
        assert_eq!(sub_weaken(&ren, &o(), &con(&[o()])), SubList::new(Sort::V, vec![Expr::suc(Expr::Zero, o())]));
        let sub = SubList::new(Sort::T, vec![Expr::embed(Expr::Zero)]);
        let g = con(&[o()]);
        let expected = subst_apply(&Expr::embed(Expr::Zero), &sub_weaken(&id_sub(&g), &o(), &g), &g.extend(o()));
        assert_eq!(sub_weaken(&sub, &o(), &g).entries, vec![expected.clone()]);
        assert_eq!(expected, Expr::embed(Expr::suc(Expr::Zero, o())));
    }

    #[test]
    fn lift_examples() {
        assert_eq!(sub_lift(&SubList::empty(Sort::V), &o(), &Con::empty()), SubList::new(Sort::V, vec![Expr::Zero]));
        assert_eq!(
            sub_lift(&SubList::empty(Sort::T), &o(), &Con::empty()),
            SubList::new(Sort::T, vec![Expr::embed(Expr::Zero)])
        );
        assert_eq!(
            sub_lift(&id_sub(&con(&[o()])), &o(), &con(&[o()])),
            SubList::new(Sort::V, vec![Expr::suc(Expr::Zero, o()), Expr::Zero])
        );
    }

    #[test]
    fn zero_and_suc_at() {
        for q in Sort::ALL {
            assert_eq!(sort_of(&zero_at(q)), q);
        }
        assert_eq!(zero_at(Sort::V), Expr::Zero);
        assert_eq!(zero_at(Sort::T), Expr::embed(Expr::Zero));
        assert_eq!(suc_at(Sort::V, &Expr::Zero, &o(), &con(&[o()])), Expr::suc(Expr::Zero, o()));
        assert_eq!(
            suc_at(Sort::T, &Expr::embed(Expr::Zero), &o(), &con(&[o()])),
            Expr::embed(Expr::suc(Expr::Zero, o()))
        );
        let closed = Expr::lam(o(), Expr::embed(Expr::Zero));
        assert_eq!(suc_at(Sort::T, &closed, &o(), &Con::empty()), closed);
    }

    #[test]
    fn identity_examples() {
        assert_eq!(id_sub(&Con::empty()), SubList::empty(Sort::V));
        assert_eq!(id_sub(&con(&[o()])), SubList::new(Sort::V, vec![Expr::Zero]));
        assert_eq!(id_sub(&con(&[o(), o()])), SubList::new(Sort::V, vec![Expr::suc(Expr::Zero, o()), Expr::Zero]));
        let mixed = con(&[oo(), o(), oo()]);
        let id = id_sub(&mixed);
        for (k, e) in id.entries.iter().enumerate() {
            assert_eq!(e.var_index(), Some(mixed.len() - 1 - k));
        }
        assert!(crate::syntax::check_sub(&mixed, &id, &mixed));
    }

    #[test]
    fn compose_examples() {
        let ys = SubList::new(Sort::T, vec![Expr::embed(Expr::Zero)]);
        let g = con(&[o()]);
        assert_eq!(compose(&SubList::empty(Sort::V), &ys, &g), SubList::empty(Sort::T));
        assert_eq!(compose(&id_sub(&g), &ys, &g), ys);
        let xs = SubList::new(Sort::V, vec![Expr::Zero, Expr::Zero]);
        let out = compose(&xs, &ys, &g);
        assert_eq!(out.sort, Sort::T);
        assert_eq!(out.entries, vec![subst_apply(&Expr::Zero, &ys, &g); 2]);
    }
}

//! Seeded generation of well-typed terms and substitutions, for
//! benchmarks and randomized law checks beyond the exhaustive bounds.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::syntax::{Con, Expr, Sort, SubList, Ty};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn o() -> Ty {
    Ty::Base
}

/// A context that every generated term can live in: it always holds a
/// base-typed variable and a binary function.
pub fn base_context() -> Con {
    Con::from(vec![o(), Ty::arrow(o(), Ty::arrow(o(), o())), Ty::arrow(o(), o())])
}

/// A random variable of type `ty`, if `ctx` has one.
pub fn random_var<R: Rng>(rng: &mut R, ctx: &Con, ty: &Ty) -> Option<Expr> {
    let hits: Vec<usize> = ctx.types().iter().rev().enumerate().filter(|(_, t)| *t == ty).map(|(k, _)| k).collect();
    if hits.is_empty() {
        return None;
    }
    Expr::var(ctx, hits[rng.gen_range(0..hits.len())])
}

/// A random sort-`T` expression of type `ty` with roughly `size`
/// constructors. `ctx` must hold a variable of type `o`.
pub fn random_expr<R: Rng>(rng: &mut R, ctx: &Con, ty: &Ty, size: usize) -> Expr {
    if let Some((dom, cod)) = ty.as_arrow() {
        if size <= 2 {
            if let Some(v) = random_var(rng, ctx, ty) {
                return Expr::embed(v);
            }
        }
        let body = random_expr(rng, &ctx.extend(dom.clone()), cod, size.saturating_sub(1));
        return Expr::lam(dom.clone(), body);
    }
    if size <= 2 {
        if let Some(v) = random_var(rng, ctx, ty) {
            return Expr::embed(v);
        }
    }
    // application at a random argument type, splitting the budget
    let arg_ty = if rng.gen_bool(0.8) { o() } else { Ty::arrow(o(), o()) };
    let rest = size.saturating_sub(1).max(2);
    let left = rng.gen_range(1..rest);
    let fun = random_expr(rng, ctx, &Ty::arrow(arg_ty.clone(), ty.clone()), left);
    let arg = random_expr(rng, ctx, &arg_ty, rest - left);
    Expr::app(fun, arg)
}

/// A random `xs : src ⊩ tgt` at `sort`, each entry of roughly
/// `entry_size` constructors.
pub fn random_sub<R: Rng>(rng: &mut R, src: &Con, tgt: &Con, sort: Sort, entry_size: usize) -> SubList {
    let entries = tgt
        .types()
        .iter()
        .map(|ty| match sort {
            Sort::V => random_var(rng, src, ty).expect("source lacks a variable of the required type"),
            Sort::T => random_expr(rng, src, ty, entry_size),
        })
        .collect();
    SubList::new(sort, entries)
}

/// A random context extending [`base_context`] with `extra` types.
pub fn random_context<R: Rng>(rng: &mut R, extra: usize) -> Con {
    let mut ctx = base_context();
    for _ in 0..extra {
        ctx.push(if rng.gen_bool(0.6) { o() } else { Ty::arrow(o(), o()) });
    }
    ctx
}

/// A renaming `src ⊩ tgt`, available whenever every type of `tgt` occurs
/// in `src`.
pub fn random_renaming<R: Rng>(rng: &mut R, src: &Con, tgt: &Con) -> SubList {
    random_sub(rng, src, tgt, Sort::V, 0)
}

/// A seeded input for comparing the two engines: a term of about `size`
/// constructors, a renaming and a substitution of about the same total
/// size, both into the term's context.
#[derive(Clone, Debug)]
pub struct Workload {
    pub size: usize,
    /// Context of `term`.
    pub target: Con,
    /// Source context of both substitutions.
    pub src: Con,
    pub term: Expr,
    pub renaming: SubList,
    pub substitution: SubList,
}

pub fn workload(size: usize, seed: u64) -> Workload {
    let mut r = rng(seed ^ (size as u64).rotate_left(32));
    let target = random_context(&mut r, 3);
    let src = random_context(&mut r, 2);
    let term = random_expr(&mut r, &target, &o(), size);
    let renaming = random_renaming(&mut r, &src, &target);
    let substitution = random_sub(&mut r, &src, &target, Sort::T, (size / target.len()).max(1));
    Workload { size, target, src, term, renaming, substitution }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{check_sub, infer_expr};

    #[test]
    fn generated_terms_are_well_typed() {
        let mut r = rng(7);
        for size in [1, 5, 50, 1000] {
            let ctx = random_context(&mut r, 2);
            let x = random_expr(&mut r, &ctx, &o(), size);
            assert_eq!(infer_expr(&ctx, &x), Some(o()));
            if size >= 50 {
                assert!(x.size() * 2 >= size, "{} vs {size}", x.size());
            }
            let src = random_context(&mut r, 1);
            let ys = random_sub(&mut r, &src, &ctx, Sort::T, 10);
            assert!(check_sub(&src, &ys, &ctx));
            let is = random_renaming(&mut r, &src, &ctx);
            assert!(check_sub(&src, &is, &ctx));
        }
    }

    #[test]
    fn workloads_are_well_formed() {
        let w = workload(300, 5);
        assert_eq!(infer_expr(&w.target, &w.term), Some(o()));
        assert!(check_sub(&w.src, &w.renaming, &w.target));
        assert!(check_sub(&w.src, &w.substitution, &w.target));
        assert!(w.substitution.size() >= 150, "{}", w.substitution.size());
    }

    #[test]
    fn seeds_are_reproducible() {
        let a = random_expr(&mut rng(3), &base_context(), &o(), 200);
        let b = random_expr(&mut rng(3), &base_context(), &o(), 200);
        assert_eq!(a, b);
    }
}

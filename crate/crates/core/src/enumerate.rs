//! Exhaustive enumeration of small well-formed values.
//!
//! Order is size first, then constructor tag, then the order of the
//! children, so every run lists the same values in the same sequence.

use std::rc::Rc;

use rustc_hash::FxHashMap;

use crate::explicit::{Filling, ISub, ITm, Shape, TypedSub, TypedTm};
use crate::syntax::{Con, Expr, Sort, SubList, Ty};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_type_depth: usize,
    pub max_ctx_len: usize,
    pub max_expr_size: usize,
    pub max_sub_entry_size: usize,
    pub max_itm_size: usize,
    pub sorts: Vec<Sort>,
    /// Context length bound for laws that quantify over two or more
    /// substitutions at once; the product of such instances grows too
    /// fast for `max_ctx_len`.
    pub max_chain_ctx_len: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_type_depth: 2,
            max_ctx_len: 3,
            max_expr_size: 6,
            max_sub_entry_size: 4,
            max_itm_size: 6,
            sorts: vec![Sort::V, Sort::T],
            max_chain_ctx_len: 2,
        }
    }
}

fn ty_size(ty: &Ty) -> usize {
    match ty {
        Ty::Base => 1,
        Ty::Arrow(a, b) => 1 + ty_size(a) + ty_size(b),
    }
}

/// All types of depth at most `max_depth`, smallest first.
pub fn types_up_to(max_depth: usize) -> Vec<Ty> {
    let mut tys = vec![Ty::Base];
    for _ in 0..max_depth {
        let mut next = vec![Ty::Base];
        for a in &tys {
            for b in &tys {
                next.push(Ty::arrow(a.clone(), b.clone()));
            }
        }
        tys = next;
    }
    tys.sort_by(|a, b| ty_size(a).cmp(&ty_size(b)).then_with(|| a.cmp(b)));
    tys
}

pub fn enum_types(cfg: &EnumConfig) -> Vec<Ty> {
    types_up_to(cfg.max_type_depth)
}

/// All contexts of length at most `max_len` over `types`, shortest first.
pub fn contexts_up_to(types: &[Ty], max_len: usize) -> Vec<Con> {
    let mut out = vec![Con::empty()];
    let mut layer = vec![Con::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * types.len());
        for ctx in &layer {
            for ty in types {
                next.push(ctx.extend(ty.clone()));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn enum_contexts(cfg: &EnumConfig) -> Vec<Con> {
    contexts_up_to(&enum_types(cfg), cfg.max_ctx_len)
}

type Typed<T> = Rc<Vec<(Ty, T)>>;

/// Memoizing generator of well-formed values of an exact size.
/// λ-domains range over the configured types.
pub struct Enumerator {
    domains: Vec<Ty>,
    exprs: Memo<Vec<(Ty, Expr)>>,
    itms: Memo<Vec<(Ty, ITm)>>,
    isubs: Memo<Vec<(Con, ISub)>>,
}

/// Results per context, indexed by a small integer; looked up without
/// cloning the context.
struct Memo<T> {
    map: FxHashMap<Con, Vec<Option<Rc<T>>>>,
}

impl<T> Memo<T> {
    fn new() -> Self {
        Memo { map: FxHashMap::default() }
    }

    fn get(&self, ctx: &Con, k: usize) -> Option<Rc<T>> {
        self.map.get(ctx)?.get(k)?.clone()
    }

    fn put(&mut self, ctx: &Con, k: usize, v: Rc<T>) {
        let slots = match self.map.get_mut(ctx) {
            Some(slots) => slots,
            None => self.map.entry(ctx.clone()).or_default(),
        };
        if slots.len() <= k {
            slots.resize(k + 1, None);
        }
        slots[k] = Some(v);
    }
}

impl Enumerator {
    pub fn new(cfg: &EnumConfig) -> Enumerator {
        Enumerator::with_domains(enum_types(cfg))
    }

    pub fn with_domains(domains: Vec<Ty>) -> Enumerator {
        Enumerator { domains, exprs: Memo::new(), itms: Memo::new(), isubs: Memo::new() }
    }

    /// Every well-formed expression of exactly `size` constructors at
    /// `sort` in `ctx`, with its type.
    pub fn exprs_of_size(&mut self, ctx: &Con, sort: Sort, size: usize) -> Typed<Expr> {
        let key = 2 * size + (sort == Sort::T) as usize;
        if let Some(hit) = self.exprs.get(ctx, key) {
            return hit;
        }
        let mut out = Vec::new();
        if size > 0 {
            match sort {
                Sort::V => {
                    if let (Some(ty), Some(var)) = (ctx.lookup(size - 1), Expr::var(ctx, size - 1)) {
                        out.push((ty.clone(), var));
                    }
                }
                Sort::T => self.terms_of_size(ctx, size, &mut out),
            }
        }
        let out = Rc::new(out);
        self.exprs.put(ctx, key, out.clone());
        out
    }

    fn terms_of_size(&mut self, ctx: &Con, size: usize, out: &mut Vec<(Ty, Expr)>) {
        for (ty, v) in self.exprs_of_size(ctx, Sort::V, size - 1).iter() {
            out.push((ty.clone(), Expr::embed(v.clone())));
        }
        for a in 1..size.saturating_sub(1) {
            let funs = self.exprs_of_size(ctx, Sort::T, a);
            let args = self.exprs_of_size(ctx, Sort::T, size - 1 - a);
            for (fty, f) in funs.iter() {
                let Some((dom, cod)) = fty.as_arrow() else { continue };
                for (aty, x) in args.iter() {
                    if aty == dom {
                        out.push((cod.clone(), Expr::app(f.clone(), x.clone())));
                    }
                }
            }
        }
        for dom in self.domains.clone() {
            let inner = ctx.extend(dom.clone());
            for (cod, body) in self.exprs_of_size(&inner, Sort::T, size - 1).iter() {
                out.push((Ty::arrow(dom.clone(), cod.clone()), Expr::lam(dom.clone(), body.clone())));
            }
        }
    }

    /// Well-formed expressions of type `ty` with at most `max_size`
    /// constructors.
    pub fn exprs(&mut self, ctx: &Con, ty: &Ty, sort: Sort, max_size: usize) -> Vec<Expr> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            for (t, e) in self.exprs_of_size(ctx, sort, n).iter() {
                if t == ty {
                    out.push(e.clone());
                }
            }
        }
        out
    }

    /// Well-formed expressions of any type, with their types.
    pub fn all_exprs(&mut self, ctx: &Con, sort: Sort, max_size: usize) -> Vec<(Ty, Expr)> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            out.extend(self.exprs_of_size(ctx, sort, n).iter().cloned());
        }
        out
    }

    /// All `src ⊩[sort] tgt` lists whose entries have at most
    /// `max_entry_size` constructors each. Earlier entries vary slowest.
    pub fn subs(&mut self, src: &Con, tgt: &Con, sort: Sort, max_entry_size: usize) -> Vec<SubList> {
        let mut lists = vec![Vec::new()];
        for ty in tgt.types() {
            let choices = self.exprs(src, ty, sort, max_entry_size);
            let mut next = Vec::with_capacity(lists.len() * choices.len());
            for prefix in &lists {
                for e in &choices {
                    let mut l: Vec<Expr> = Vec::with_capacity(tgt.len());
                    l.extend(prefix.iter().cloned());
                    l.push(e.clone());
                    next.push(l);
                }
            }
            lists = next;
        }
        lists.into_iter().map(|entries| SubList::new(sort, entries)).collect()
    }

    /// Every well-formed explicit term of exactly `size` nodes in `ctx`.
    pub fn itms_of_size(&mut self, ctx: &Con, size: usize) -> Typed<ITm> {
        if let Some(hit) = self.itms.get(ctx, size) {
            return hit;
        }
        let mut out = Vec::new();
        if size >= 2 {
            // t [ δ ]
            for b in 1..size - 1 {
                let subs = self.isubs_of_size(ctx, b);
                for (mid, s) in subs.iter() {
                    for (ty, t) in self.itms_of_size(mid, size - 1 - b).iter() {
                        out.push((ty.clone(), ITm::sub_apply(t.clone(), s.clone())));
                    }
                }
            }
            // π₁ δ
            for (tgt, s) in self.isubs_of_size(ctx, size - 1).iter() {
                if let Some(ty) = tgt.last() {
                    out.push((ty.clone(), ITm::pi1(s.clone())));
                }
            }
            for a in 1..size - 1 {
                let funs = self.itms_of_size(ctx, a);
                let args = self.itms_of_size(ctx, size - 1 - a);
                for (fty, f) in funs.iter() {
                    let Some((dom, cod)) = fty.as_arrow() else { continue };
                    for (aty, x) in args.iter() {
                        if aty == dom {
                            out.push((cod.clone(), ITm::app(f.clone(), x.clone())));
                        }
                    }
                }
            }
            for dom in self.domains.clone() {
                let inner = ctx.extend(dom.clone());
                for (cod, body) in self.itms_of_size(&inner, size - 1).iter() {
                    out.push((Ty::arrow(dom.clone(), cod.clone()), ITm::lam(dom.clone(), body.clone())));
                }
            }
        }
        let out = Rc::new(out);
        self.itms.put(ctx, size, out.clone());
        out
    }

    /// Every well-formed explicit substitution of exactly `size` nodes out
    /// of `src`, with its target.
    pub fn isubs_of_size(&mut self, src: &Con, size: usize) -> Rc<Vec<(Con, ISub)>> {
        if let Some(hit) = self.isubs.get(src, size) {
            return hit;
        }
        let mut out = Vec::new();
        if size == 1 {
            out.push((src.clone(), ISub::Id(src.clone())));
        }
        if size >= 3 {
            // σ ∘ δ
            for b in 1..size - 1 {
                let firsts = self.isubs_of_size(src, b);
                for (mid, delta) in firsts.iter() {
                    for (tgt, sigma) in self.isubs_of_size(mid, size - 1 - b).iter() {
                        out.push((tgt.clone(), ISub::comp(sigma.clone(), delta.clone())));
                    }
                }
            }
        }
        if size == 1 {
            out.push((Con::empty(), ISub::Eps));
        }
        if size >= 3 {
            for a in 1..size - 1 {
                let subs = self.isubs_of_size(src, a);
                let tms = self.itms_of_size(src, size - 1 - a);
                for (tgt, s) in subs.iter() {
                    for (ty, t) in tms.iter() {
                        out.push((tgt.extend(ty.clone()), ISub::ext(s.clone(), t.clone())));
                    }
                }
            }
        }
        if size >= 2 {
            for (tgt, s) in self.isubs_of_size(src, size - 1).iter() {
                if let Some((init, _)) = tgt.split_last() {
                    out.push((init, ISub::pi0(s.clone())));
                }
            }
        }
        let out = Rc::new(out);
        self.isubs.put(src, size, out.clone());
        out
    }

    pub fn itms(&mut self, ctx: &Con, max_size: usize) -> Vec<(Ty, ITm)> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            out.extend(self.itms_of_size(ctx, n).iter().cloned());
        }
        out
    }

    pub fn isubs(&mut self, src: &Con, max_size: usize) -> Vec<(Con, ISub)> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            out.extend(self.isubs_of_size(src, n).iter().cloned());
        }
        out
    }
}

impl Enumerator {
    fn isubs_sized(&mut self, src: &Con, max_size: usize) -> Vec<(usize, TypedSub)> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            for (tgt, s) in self.isubs_of_size(src, n).iter() {
                out.push((n, TypedSub { src: src.clone(), sub: s.clone(), tgt: tgt.clone() }));
            }
        }
        out
    }

    fn itms_sized(&mut self, ctx: &Con, max_size: usize) -> Vec<(usize, TypedTm)> {
        let mut out = Vec::new();
        for n in 1..=max_size {
            for (ty, t) in self.itms_of_size(ctx, n).iter() {
                out.push((n, TypedTm { ctx: ctx.clone(), tm: t.clone(), ty: ty.clone() }));
            }
        }
        out
    }

    /// Every well-formed filling of `shape` whose innermost source (or
    /// term context, for [`Shape::Tm`]) is `ctx`, with the metavariables'
    /// sizes summing to at most `budget`.
    pub fn fillings(&mut self, shape: Shape, ctx: &Con, budget: usize) -> Vec<Filling> {
        let mut out = Vec::new();
        let fill = |subs: Vec<TypedSub>, tms: Vec<TypedTm>| Filling { subs, tms };
        match shape {
            Shape::SubToEmpty | Shape::Sub | Shape::SubToExtended => {
                for (_, d) in self.isubs_sized(ctx, budget) {
                    let keep = match shape {
                        Shape::SubToEmpty => d.tgt.is_empty(),
                        Shape::SubToExtended => !d.tgt.is_empty(),
                        _ => true,
                    };
                    if keep {
                        out.push(fill(vec![d], vec![]));
                    }
                }
            }
            Shape::SubTm => {
                for (n, d) in self.isubs_sized(ctx, budget.saturating_sub(2)) {
                    for (_, t) in self.itms_sized(ctx, budget - n) {
                        out.push(fill(vec![d.clone()], vec![t]));
                    }
                }
            }
            Shape::ChainToExtended => {
                for (n, d) in self.isubs_sized(ctx, budget.saturating_sub(1)) {
                    for (_, th) in self.isubs_sized(&d.tgt, budget - n) {
                        if !th.tgt.is_empty() {
                            out.push(fill(vec![th, d.clone()], vec![]));
                        }
                    }
                }
            }
            Shape::Chain3 => {
                for (n, d) in self.isubs_sized(ctx, budget.saturating_sub(2)) {
                    for (m, th) in self.isubs_sized(&d.tgt, budget - n - 1) {
                        for (_, xi) in self.isubs_sized(&th.tgt, budget - n - m) {
                            out.push(fill(vec![xi, th.clone(), d.clone()], vec![]));
                        }
                    }
                }
            }
            Shape::Tm => {
                for (_, t) in self.itms_sized(ctx, budget) {
                    out.push(fill(vec![], vec![t]));
                }
            }
            Shape::TmChain2 => {
                for (n, d) in self.isubs_sized(ctx, budget.saturating_sub(3)) {
                    for (m, th) in self.isubs_sized(&d.tgt, budget - n - 2) {
                        for (_, t) in self.itms_sized(&th.tgt, budget - n - m) {
                            out.push(fill(vec![th.clone(), d.clone()], vec![t]));
                        }
                    }
                }
            }
            Shape::AppSub => {
                for (n, d) in self.isubs_sized(ctx, budget.saturating_sub(4)) {
                    for (m, t) in self.itms_sized(&d.tgt, budget - n - 2) {
                        let Some((dom, _)) = t.ty.as_arrow() else { continue };
                        let dom = dom.clone();
                        for (_, u) in self.itms_sized(&d.tgt, budget - n - m) {
                            if u.ty == dom {
                                out.push(fill(vec![d.clone()], vec![t.clone(), u]));
                            }
                        }
                    }
                }
            }
            Shape::LamSub => {
                for (n, d) in self.isubs_sized(ctx, budget.saturating_sub(2)) {
                    for dom in self.domains.clone() {
                        for (_, t) in self.itms_sized(&d.tgt.extend(dom), budget - n) {
                            out.push(fill(vec![d.clone()], vec![t]));
                        }
                    }
                }
            }
            Shape::TmSubTm => {
                for (n, d) in self.isubs_sized(ctx, budget.saturating_sub(4)) {
                    for (m, t) in self.itms_sized(&d.tgt, budget - n - 2) {
                        for (_, u) in self.itms_sized(ctx, budget - n - m) {
                            out.push(fill(vec![d.clone()], vec![t.clone(), u]));
                        }
                    }
                }
            }
            Shape::SubTmSub => {
                for (n, sigma) in self.isubs_sized(ctx, budget.saturating_sub(3)) {
                    for (m, d) in self.isubs_sized(&sigma.tgt, budget - n - 2) {
                        for (_, t) in self.itms_sized(&sigma.tgt, budget - n - m) {
                            out.push(fill(vec![d.clone(), sigma.clone()], vec![t]));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Well-formed expressions of type `ty` and sort `sort` in `ctx`.
pub fn enum_exprs(cfg: &EnumConfig, ctx: &Con, ty: &Ty, sort: Sort, max_size: usize) -> Vec<Expr> {
    Enumerator::new(cfg).exprs(ctx, ty, sort, max_size)
}

pub fn enum_subs(cfg: &EnumConfig, src: &Con, tgt: &Con, sort: Sort, max_entry_size: usize) -> Vec<SubList> {
    Enumerator::new(cfg).subs(src, tgt, sort, max_entry_size)
}

pub fn enum_itms(cfg: &EnumConfig, ctx: &Con, max_size: usize) -> Vec<(Ty, ITm)> {
    Enumerator::new(cfg).itms(ctx, max_size)
}

pub fn enum_isubs(cfg: &EnumConfig, src: &Con, max_size: usize) -> Vec<(Con, ISub)> {
    Enumerator::new(cfg).isubs(src, max_size)
}

/// Generate-and-filter reference: every raw tree up to `max_size` whose
/// type annotations come from `annots`, kept if it is well-formed. Slow;
/// for cross-checking [`Enumerator`] at small bounds.
pub mod raw {
    use crate::explicit::{infer_isub, infer_itm, ISub, ITm};
    use crate::syntax::{infer_expr, sort_of, Con, Expr, Sort, Ty};

    pub fn exprs(annots: &[Ty], max_size: usize) -> Vec<Expr> {
        let mut by_size: Vec<Vec<Expr>> = vec![Vec::new(); max_size + 1];
        for n in 1..=max_size {
            let mut layer = Vec::new();
            if n == 1 {
                layer.push(Expr::Zero);
            } else {
                for e in &by_size[n - 1] {
                    for a in annots {
                        layer.push(Expr::suc(e.clone(), a.clone()));
                        layer.push(Expr::lam(a.clone(), e.clone()));
                    }
                    layer.push(Expr::embed(e.clone()));
                }
                for a in 1..n - 1 {
                    for f in &by_size[a] {
                        for x in &by_size[n - 1 - a] {
                            layer.push(Expr::app(f.clone(), x.clone()));
                        }
                    }
                }
            }
            by_size[n] = layer;
        }
        by_size.into_iter().flatten().collect()
    }

    pub fn well_formed_exprs(annots: &[Ty], ctx: &Con, ty: &Ty, sort: Sort, max_size: usize) -> Vec<Expr> {
        exprs(annots, max_size)
            .into_iter()
            .filter(|e| sort_of(e) == sort && infer_expr(ctx, e).as_ref() == Some(ty))
            .collect()
    }

    /// Raw explicit terms and substitutions up to `max_size`; `Id` is
    /// annotated with every context in `ctxs`.
    pub fn explicit(annots: &[Ty], ctxs: &[Con], max_size: usize) -> (Vec<ITm>, Vec<ISub>) {
        let mut tms: Vec<Vec<ITm>> = vec![Vec::new(); max_size + 1];
        let mut subs: Vec<Vec<ISub>> = vec![Vec::new(); max_size + 1];
        for n in 1..=max_size {
            let mut tl = Vec::new();
            let mut sl = Vec::new();
            if n == 1 {
                sl.extend(ctxs.iter().map(|c| ISub::Id(c.clone())));
                sl.push(ISub::Eps);
            } else {
                for s in &subs[n - 1] {
                    tl.push(ITm::pi1(s.clone()));
                    sl.push(ISub::pi0(s.clone()));
                }
                for t in &tms[n - 1] {
                    for a in annots {
                        tl.push(ITm::lam(a.clone(), t.clone()));
                    }
                }
                for a in 1..n - 1 {
                    let b = n - 1 - a;
                    for t in &tms[a] {
                        for s in &subs[b] {
                            tl.push(ITm::sub_apply(t.clone(), s.clone()));
                        }
                        for u in &tms[b] {
                            tl.push(ITm::app(t.clone(), u.clone()));
                        }
                    }
                    for s in &subs[a] {
                        for s2 in &subs[b] {
                            sl.push(ISub::comp(s.clone(), s2.clone()));
                        }
                        for t in &tms[b] {
                            sl.push(ISub::ext(s.clone(), t.clone()));
                        }
                    }
                }
            }
            tms[n] = tl;
            subs[n] = sl;
        }
        (tms.into_iter().flatten().collect(), subs.into_iter().flatten().collect())
    }

    pub fn well_formed_itms(annots: &[Ty], ctxs: &[Con], ctx: &Con, max_size: usize) -> Vec<ITm> {
        explicit(annots, ctxs, max_size).0.into_iter().filter(|t| infer_itm(ctx, t).is_some()).collect()
    }

    pub fn well_formed_isubs(annots: &[Ty], ctxs: &[Con], src: &Con, max_size: usize) -> Vec<ISub> {
        explicit(annots, ctxs, max_size).1.into_iter().filter(|s| infer_isub(src, s).is_some()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn o() -> Ty {
        Ty::Base
    }

    fn cfg() -> EnumConfig {
        EnumConfig::default()
    }

    #[test]
    fn type_enumeration() {
        assert_eq!(types_up_to(0), vec![o()]);
        assert_eq!(types_up_to(1), vec![o(), Ty::arrow(o(), o())]);
        let d2 = types_up_to(2);
        assert_eq!(d2.len(), 5);
        let set: BTreeSet<_> = d2.iter().cloned().collect();
        assert_eq!(set.len(), 5);
        assert!(d2.iter().all(|t| t.depth() <= 2));
    }

    #[test]
    fn context_enumeration() {
        let ctxs = enum_contexts(&cfg());
        assert_eq!(ctxs.len(), 1 + 5 + 25 + 125);
        assert_eq!(ctxs[0], Con::empty());
        let set: BTreeSet<_> = ctxs.iter().cloned().collect();
        assert_eq!(set.len(), ctxs.len());
    }

    #[test]
    fn variable_enumeration() {
        let c = cfg();
        assert_eq!(enum_exprs(&c, &Con::from(vec![o()]), &o(), Sort::V, 6), vec![Expr::Zero]);
        assert_eq!(
            enum_exprs(&c, &Con::from(vec![o(), o()]), &o(), Sort::V, 6),
            vec![Expr::Zero, Expr::suc(Expr::Zero, o())]
        );
    }

    #[test]
    fn closed_identity_type_count() {
        let oo = Ty::arrow(o(), o());
        let got = enum_exprs(&cfg(), &Con::empty(), &oo, Sort::T, 4);
        // only λ `0 fits in four nodes
        assert_eq!(got.len(), 1);
        assert_eq!(got[0], Expr::lam(o(), Expr::embed(Expr::Zero)));
    }

    #[test]
    fn variable_count_matches_occurrences() {
        let c = cfg();
        let mut en = Enumerator::new(&c);
        for ctx in enum_contexts(&c) {
            for ty in enum_types(&c) {
                let n = ctx.types().iter().filter(|t| **t == ty).count();
                assert_eq!(en.exprs(&ctx, &ty, Sort::V, 6).len(), n);
            }
        }
    }

    #[test]
    fn sub_enumeration() {
        let c = cfg();
        let one = Con::from(vec![o()]);
        assert_eq!(enum_subs(&c, &one, &Con::empty(), Sort::V, 4), vec![SubList::empty(Sort::V)]);
        assert_eq!(enum_subs(&c, &one, &one, Sort::V, 4), vec![SubList::new(Sort::V, vec![Expr::Zero])]);
        assert_eq!(enum_subs(&c, &Con::from(vec![o(), o()]), &one, Sort::V, 4).len(), 2);
    }

    #[test]
    fn expr_enumeration_matches_raw_oracle() {
        let annots = types_up_to(1);
        let mut en = Enumerator::with_domains(annots.clone());
        for ctx in contexts_up_to(&annots, 2) {
            for ty in types_up_to(2) {
                for sort in Sort::ALL {
                    let fast: BTreeSet<_> = en.exprs(&ctx, &ty, sort, 5).into_iter().collect();
                    let slow: BTreeSet<_> = raw::well_formed_exprs(&annots, &ctx, &ty, sort, 5).into_iter().collect();
                    assert_eq!(fast, slow, "ctx {ctx:?} ty {ty:?} sort {sort}");
                }
            }
        }
    }

    #[test]
    fn explicit_enumeration_matches_raw_oracle() {
        let annots = types_up_to(0);
        let ctxs = contexts_up_to(&annots, 5);
        let mut en = Enumerator::with_domains(annots.clone());
        for ctx in contexts_up_to(&annots, 1) {
            let fast: BTreeSet<_> = en.itms(&ctx, 5).into_iter().map(|(_, t)| t).collect();
            let slow: BTreeSet<_> = raw::well_formed_itms(&annots, &ctxs, &ctx, 5).into_iter().collect();
            assert_eq!(fast, slow, "terms in {ctx:?}");
            let fast: BTreeSet<_> = en.isubs(&ctx, 5).into_iter().map(|(_, s)| s).collect();
            let slow: BTreeSet<_> = raw::well_formed_isubs(&annots, &ctxs, &ctx, 5).into_iter().collect();
            assert_eq!(fast, slow, "substitutions out of {ctx:?}");
        }
    }

    #[test]
    fn enumeration_is_ordered_by_size() {
        let c = cfg();
        let ctx = Con::from(vec![o(), Ty::arrow(o(), o())]);
        let all = Enumerator::new(&c).all_exprs(&ctx, Sort::T, 6);
        assert!(all.windows(2).all(|w| w[0].1.size() <= w[1].1.size()));
        let its = enum_itms(&c, &ctx, 5);
        assert!(its.windows(2).all(|w| w[0].1.size() <= w[1].1.size()));
    }
}

//! Sorts, simple types, contexts, sort-indexed terms and substitutions.
//!
//! Terms are plain trees; well-formedness is a separate judgment
//! ([`infer_expr`], [`check_sub`]). De Bruijn indices are unary
//! `Zero`/`Suc` chains, with each `Suc` recording the type it skips.

use std::fmt;
use std::sync::Arc;

/// Variables/renamings (`V`) or terms/substitutions (`T`), ordered `V ⊑ T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    V,
    T,
}

impl Sort {
    pub const ALL: [Sort; 2] = [Sort::V, Sort::T];
}

/// Simple types over a single base type. Subtrees are shared, since
/// every `Suc` and every context entry holds a copy.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ty {
    Base,
    Arrow(Arc<Ty>, Arc<Ty>),
}

impl Ty {
    pub fn arrow(dom: Ty, cod: Ty) -> Ty {
        Ty::Arrow(Arc::new(dom), Arc::new(cod))
    }

    /// Nesting depth of arrows; `Base` has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Ty::Base => 0,
            Ty::Arrow(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn as_arrow(&self) -> Option<(&Ty, &Ty)> {
        match self {
            Ty::Arrow(a, b) => Some((a, b)),
            Ty::Base => None,
        }
    }
}

/// A context: the rightmost entry is the most recently bound variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Con(Vec<Ty>);

impl Con {
    pub fn empty() -> Con {
        Con(Vec::new())
    }

    pub fn from_types(types: Vec<Ty>) -> Con {
        Con(types)
    }

    pub fn types(&self) -> &[Ty] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Γ ▷ A`
    pub fn extend(&self, ty: Ty) -> Con {
        let mut types = Vec::with_capacity(self.0.len() + 1);
        types.extend_from_slice(&self.0);
        types.push(ty);
        Con(types)
    }

    pub fn push(&mut self, ty: Ty) {
        self.0.push(ty);
    }

    pub fn last(&self) -> Option<&Ty> {
        self.0.last()
    }

    /// Splits `Γ ▷ A` into `(Γ, A)`.
    pub fn split_last(&self) -> Option<(Con, &Ty)> {
        let (last, init) = self.0.split_last()?;
        Some((Con(init.to_vec()), last))
    }

    /// Type of de Bruijn index `index` (0 = most recent).
    pub fn lookup(&self, index: usize) -> Option<&Ty> {
        self.0.len().checked_sub(index + 1).map(|k| &self.0[k])
    }
}

impl From<Vec<Ty>> for Con {
    fn from(types: Vec<Ty>) -> Con {
        Con(types)
    }
}

/// A sort-indexed λ-term. `Zero` and `Suc` live at sort `V`; `Embed`,
/// `App` and `Lam` at sort `T`. Children are shared, so substituting a
/// variable by a large term does not copy it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Expr {
    Zero,
    /// A variable one further out, skipping a binder of the given type.
    Suc(Arc<Expr>, Ty),
    /// A variable used as a term.
    Embed(Arc<Expr>),
    App(Arc<Expr>, Arc<Expr>),
    /// λ-abstraction with its domain annotation.
    Lam(Ty, Arc<Expr>),
}

impl Expr {
    pub fn suc(var: Expr, skipped: Ty) -> Expr {
        Expr::Suc(Arc::new(var), skipped)
    }

    pub fn embed(var: Expr) -> Expr {
        Expr::Embed(Arc::new(var))
    }

    pub fn app(fun: Expr, arg: Expr) -> Expr {
        Expr::App(Arc::new(fun), Arc::new(arg))
    }

    pub fn lam(dom: Ty, body: Expr) -> Expr {
        Expr::Lam(dom, Arc::new(body))
    }

    /// Builds the unary variable for de Bruijn index `index` in `ctx`,
    /// reading the skipped types off the context.
    pub fn var(ctx: &Con, index: usize) -> Option<Expr> {
        let types = ctx.types();
        if index >= types.len() {
            return None;
        }
        let n = types.len();
        let mut var = Expr::Zero;
        for skipped in &types[n - index..] {
            var = Expr::suc(var, skipped.clone());
        }
        Some(var)
    }

    /// The de Bruijn index of a `Zero`/`Suc` chain.
    pub fn var_index(&self) -> Option<usize> {
        let mut e = self;
        let mut n = 0;
        loop {
            match e {
                Expr::Zero => return Some(n),
                Expr::Suc(inner, _) => {
                    n += 1;
                    e = inner;
                }
                _ => return None,
            }
        }
    }

    /// Number of constructors (types are not counted).
    pub fn size(&self) -> usize {
        match self {
            Expr::Zero => 1,
            Expr::Suc(e, _) | Expr::Embed(e) | Expr::Lam(_, e) => 1 + e.size(),
            Expr::App(t, u) => 1 + t.size() + u.size(),
        }
    }
}

pub fn sort_of(e: &Expr) -> Sort {
    match e {
        Expr::Zero | Expr::Suc(..) => Sort::V,
        Expr::Embed(_) | Expr::App(..) | Expr::Lam(..) => Sort::T,
    }
}

/// A simultaneous substitution (sort `T`) or renaming (sort `V`).
/// Entry `k` replaces variable `k` of the target context counted from the
/// left, so the last entry replaces the most recent variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubList {
    pub sort: Sort,
    pub entries: Vec<Expr>,
}

impl SubList {
    /// `ε` at the given sort.
    pub fn empty(sort: Sort) -> SubList {
        SubList { sort, entries: Vec::new() }
    }

    pub fn new(sort: Sort, entries: Vec<Expr>) -> SubList {
        SubList { sort, entries }
    }

    /// `(xs , x)`
    pub fn snoc(mut self, entry: Expr) -> SubList {
        self.entries.push(entry);
        self
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total constructor count of all entries.
    pub fn size(&self) -> usize {
        self.entries.iter().map(Expr::size).sum()
    }
}

/// Infers the type of `e` in `ctx`, or `None` if `e` is ill-formed
/// (including sort violations such as `App(Zero, _)`).
pub fn infer_expr(ctx: &Con, e: &Expr) -> Option<Ty> {
    match sort_of(e) {
        Sort::V => infer_var(ctx.types(), e).cloned(),
        Sort::T => {
            let mut scope = ctx.types().to_vec();
            infer_term(&mut scope, e)
        }
    }
}

fn infer_var<'a>(ctx: &'a [Ty], e: &Expr) -> Option<&'a Ty> {
    match e {
        Expr::Zero => ctx.last(),
        Expr::Suc(i, skipped) => {
            let (last, init) = ctx.split_last()?;
            if last != skipped {
                return None;
            }
            infer_var(init, i)
        }
        _ => None,
    }
}

fn infer_term(scope: &mut Vec<Ty>, e: &Expr) -> Option<Ty> {
    match e {
        Expr::Embed(i) => infer_var(scope, i).cloned(),
        Expr::App(t, u) => {
            if sort_of(t) != Sort::T || sort_of(u) != Sort::T {
                return None;
            }
            let fun = infer_term(scope, t)?;
            let arg = infer_term(scope, u)?;
            let (dom, cod) = fun.as_arrow()?;
            (*dom == arg).then(|| cod.clone())
        }
        Expr::Lam(dom, body) => {
            if sort_of(body) != Sort::T {
                return None;
            }
            scope.push(dom.clone());
            let cod = infer_term(scope, body);
            scope.pop();
            Some(Ty::arrow(dom.clone(), cod?))
        }
        Expr::Zero | Expr::Suc(..) => None,
    }
}

/// Checks `s : src ⊩[s.sort] tgt`.
pub fn check_sub(src: &Con, s: &SubList, tgt: &Con) -> bool {
    s.entries.len() == tgt.len()
        && s.entries
            .iter()
            .zip(tgt.types())
            .all(|(e, ty)| sort_of(e) == s.sort && infer_expr(src, e).as_ref() == Some(ty))
}

/// Structural equality; `Expr` implements `Eq` with the same meaning.
pub fn expr_eq(a: &Expr, b: &Expr) -> bool {
    a == b
}

pub fn sub_eq(a: &SubList, b: &SubList) -> bool {
    a == b
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::V => "V",
            Sort::T => "T",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o() -> Ty {
        Ty::Base
    }

    #[test]
    fn sort_of_follows_constructor() {
        assert_eq!(sort_of(&Expr::Zero), Sort::V);
        assert_eq!(sort_of(&Expr::embed(Expr::Zero)), Sort::T);
        assert_eq!(sort_of(&Expr::lam(o(), Expr::embed(Expr::Zero))), Sort::T);
    }

    #[test]
    fn sort_order() {
        assert!(Sort::V < Sort::T);
    }

    #[test]
    fn infer_examples() {
        let ctx = Con::from(vec![o()]);
        assert_eq!(infer_expr(&ctx, &Expr::Zero), Some(o()));
        assert_eq!(infer_expr(&ctx, &Expr::lam(o(), Expr::embed(Expr::Zero))), Some(Ty::arrow(o(), o())));
        assert_eq!(infer_expr(&Con::empty(), &Expr::Zero), None);
    }

    #[test]
    fn infer_rejects_sort_violations() {
        let ctx = Con::from(vec![Ty::arrow(o(), o()), o()]);
        // App over raw variables
        assert_eq!(infer_expr(&ctx, &Expr::app(Expr::Zero, Expr::Zero)), None);
        // Embed of a term
        let t = Expr::embed(Expr::embed(Expr::Zero));
        assert_eq!(infer_expr(&ctx, &t), None);
        // Suc of a term
        let s = Expr::suc(Expr::embed(Expr::Zero), o());
        assert_eq!(infer_expr(&ctx, &s), None);
        // Lam with a variable body
        assert_eq!(infer_expr(&ctx, &Expr::lam(o(), Expr::Zero)), None);
    }

    #[test]
    fn infer_checks_suc_annotation() {
        let ctx = Con::from(vec![o(), Ty::arrow(o(), o())]);
        let good = Expr::suc(Expr::Zero, Ty::arrow(o(), o()));
        let bad = Expr::suc(Expr::Zero, o());
        assert_eq!(infer_expr(&ctx, &good), Some(o()));
        assert_eq!(infer_expr(&ctx, &bad), None);
    }

    #[test]
    fn application_typing() {
        let f = Ty::arrow(o(), o());
        let ctx = Con::from(vec![o(), f.clone()]);
        let fx = Expr::app(Expr::embed(Expr::Zero), Expr::embed(Expr::suc(Expr::Zero, f.clone())));
        assert_eq!(infer_expr(&ctx, &fx), Some(o()));
        let xf = Expr::app(Expr::embed(Expr::suc(Expr::Zero, f)), Expr::embed(Expr::Zero));
        assert_eq!(infer_expr(&ctx, &xf), None);
    }

    #[test]
    fn check_sub_examples() {
        let one = Con::from(vec![o()]);
        assert!(check_sub(&one, &SubList::empty(Sort::V), &Con::empty()));
        let zs = SubList::new(Sort::V, vec![Expr::Zero]);
        assert!(check_sub(&one, &zs, &one));
        assert!(!check_sub(&Con::empty(), &zs, &one));
        // wrong sort tag
        let mixed = SubList::new(Sort::T, vec![Expr::Zero]);
        assert!(!check_sub(&one, &mixed, &one));
    }

    #[test]
    fn structural_equality() {
        assert!(expr_eq(&Expr::Zero, &Expr::Zero));
        assert!(!expr_eq(&Expr::Zero, &Expr::suc(Expr::Zero, o())));
        let id = Expr::lam(o(), Expr::embed(Expr::Zero));
        assert!(expr_eq(&id, &id.clone()));
        let a = SubList::new(Sort::V, vec![Expr::Zero]);
        let b = SubList::new(Sort::T, vec![Expr::Zero]);
        assert!(sub_eq(&a, &a.clone()));
        assert!(!sub_eq(&a, &b));
    }

    #[test]
    fn var_builds_unary_chain() {
        let ctx = Con::from(vec![Ty::arrow(o(), o()), o(), o()]);
        let v2 = Expr::var(&ctx, 2).unwrap();
        assert_eq!(v2.var_index(), Some(2));
        assert_eq!(infer_expr(&ctx, &v2), Some(Ty::arrow(o(), o())));
        assert!(Expr::var(&ctx, 3).is_none());
        assert_eq!(ctx.lookup(0), Some(&o()));
        assert_eq!(ctx.lookup(2), Some(&Ty::arrow(o(), o())));
    }
}

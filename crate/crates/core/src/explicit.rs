//! Explicit-substitution terms: the free term algebra of the initial simply
//! typed category with families, with λ and application.
//!
//! The equations of the theory are not built into the syntax; they are
//! listed as schemas in [`equation_catalog`] and decided by
//! [`crate::normalize::decide_eq`].

use crate::syntax::{Con, Ty};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ITm {
    /// `t [ δ ]`
    SubApply(Box<ITm>, Box<ISub>),
    /// `π₁ δ`
    Pi1(Box<ISub>),
    App(Box<ITm>, Box<ITm>),
    Lam(Ty, Box<ITm>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ISub {
    /// The identity on the annotated context.
    Id(Con),
    /// `σ ∘ δ`: `δ` is applied first.
    Comp(Box<ISub>, Box<ISub>),
    Eps,
    /// `(δ , t)`
    Ext(Box<ISub>, Box<ITm>),
    /// `π₀ δ`
    Pi0(Box<ISub>),
}

impl ITm {
    pub fn sub_apply(t: ITm, s: ISub) -> ITm {
        ITm::SubApply(Box::new(t), Box::new(s))
    }

    pub fn pi1(s: ISub) -> ITm {
        ITm::Pi1(Box::new(s))
    }

    pub fn app(t: ITm, u: ITm) -> ITm {
        ITm::App(Box::new(t), Box::new(u))
    }

    pub fn lam(dom: Ty, body: ITm) -> ITm {
        ITm::Lam(dom, Box::new(body))
    }

    pub fn size(&self) -> usize {
        match self {
            ITm::SubApply(t, s) => 1 + t.size() + s.size(),
            ITm::Pi1(s) => 1 + s.size(),
            ITm::App(t, u) => 1 + t.size() + u.size(),
            ITm::Lam(_, t) => 1 + t.size(),
        }
    }
}

impl ISub {
    pub fn comp(sigma: ISub, delta: ISub) -> ISub {
        ISub::Comp(Box::new(sigma), Box::new(delta))
    }

    pub fn ext(s: ISub, t: ITm) -> ISub {
        ISub::Ext(Box::new(s), Box::new(t))
    }

    pub fn pi0(s: ISub) -> ISub {
        ISub::Pi0(Box::new(s))
    }

    pub fn size(&self) -> usize {
        match self {
            ISub::Id(_) | ISub::Eps => 1,
            ISub::Comp(a, b) => 1 + a.size() + b.size(),
            ISub::Ext(s, t) => 1 + s.size() + t.size(),
            ISub::Pi0(s) => 1 + s.size(),
        }
    }
}

/// Type of `t` in `ctx`, or `None` if ill-formed.
pub fn infer_itm(ctx: &Con, t: &ITm) -> Option<Ty> {
    match t {
        ITm::SubApply(t, s) => {
            let mid = infer_isub(ctx, s)?;
            infer_itm(&mid, t)
        }
        ITm::Pi1(s) => infer_isub(ctx, s)?.last().cloned(),
        ITm::App(t, u) => {
            let fun = infer_itm(ctx, t)?;
            let arg = infer_itm(ctx, u)?;
            let (dom, cod) = fun.as_arrow()?;
            (*dom == arg).then(|| cod.clone())
        }
        ITm::Lam(dom, body) => {
            let cod = infer_itm(&ctx.extend(dom.clone()), body)?;
            Some(Ty::arrow(dom.clone(), cod))
        }
    }
}

/// Target context of `s : src ⊩ _`, or `None` if ill-formed.
pub fn infer_isub(src: &Con, s: &ISub) -> Option<Con> {
    match s {
        ISub::Id(ctx) => (ctx == src).then(|| ctx.clone()),
        ISub::Comp(sigma, delta) => {
            let mid = infer_isub(src, delta)?;
            infer_isub(&mid, sigma)
        }
        ISub::Eps => Some(Con::empty()),
        ISub::Ext(s, t) => {
            let tgt = infer_isub(src, s)?;
            let ty = infer_itm(src, t)?;
            Some(tgt.extend(ty))
        }
        ISub::Pi0(s) => {
            let tgt = infer_isub(src, s)?;
            tgt.split_last().map(|(init, _)| init)
        }
    }
}

fn require_nonempty(op: &str, ctx: &Con) {
    if ctx.is_empty() {
        panic!("contract violation in {op}: context must be nonempty");
    }
}

/// `zeroᴵ = π₁ id` at `Γ ▷ A`.
pub fn i_zero(ctx: &Con) -> ITm {
    require_nonempty("i_zero", ctx);
    ITm::pi1(ISub::Id(ctx.clone()))
}

/// `wkᴵ = π₀ id : Γ ▷ A ⊩ Γ`.
pub fn i_wk(ctx: &Con) -> ISub {
    require_nonempty("i_wk", ctx);
    ISub::pi0(ISub::Id(ctx.clone()))
}

/// `sucᴵ t B = t [ wkᴵ ]`, for `t` in `ctx`; the result lives in `ctx ▷ B`.
pub fn i_suc(t: ITm, skipped: &Ty, ctx: &Con) -> ITm {
    ITm::sub_apply(t, i_wk(&ctx.extend(skipped.clone())))
}

/// `δ ↑ A = (δ ∘ π₀ id) , π₁ id`, for `δ : src ⊩ Δ`.
pub fn i_lift(s: ISub, ty: &Ty, src: &Con) -> ISub {
    let ext = src.extend(ty.clone());
    ISub::ext(ISub::comp(s, i_wk(&ext)), i_zero(&ext))
}

/// A term in a context with its type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedTm {
    pub ctx: Con,
    pub tm: ITm,
    pub ty: Ty,
}

/// A substitution with its source and target contexts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedSub {
    pub src: Con,
    pub sub: ISub,
    pub tgt: Con,
}

/// How the metavariables of an equation schema depend on each other.
/// Substitution slots are listed outermost first, so a chain `ξ, θ, δ`
/// composes as `ξ ∘ θ ∘ δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `δ : Γ ⊩ •`
    SubToEmpty,
    /// `δ : Γ ⊩ Δ`
    Sub,
    /// `δ : Γ ⊩ Δ ▷ A`
    SubToExtended,
    /// `δ : Γ ⊩ Δ`, `t : Γ ⊢ A`
    SubTm,
    /// `θ : Δ ⊩ Θ ▷ A`, `δ : Γ ⊩ Δ`
    ChainToExtended,
    /// `ξ : Θ ⊩ Ξ`, `θ : Δ ⊩ Θ`, `δ : Γ ⊩ Δ`
    Chain3,
    /// `t : Γ ⊢ A`
    Tm,
    /// `t : Θ ⊢ A`, `θ : Δ ⊩ Θ`, `δ : Γ ⊩ Δ`
    TmChain2,
    /// `t : Θ ⊢ A ⇒ B`, `u : Θ ⊢ A`, `δ : Γ ⊩ Θ`
    AppSub,
    /// `t : Θ ▷ A ⊢ B`, `δ : Γ ⊩ Θ`
    LamSub,
    /// `t : Δ ⊢ A`, `δ : Γ ⊩ Δ`, `u : Γ ⊢ B`
    TmSubTm,
    /// `δ : Δ ⊩ Θ`, `t : Δ ⊢ A`, `σ : Γ ⊩ Δ`
    SubTmSub,
}

/// Metavariable assignment for an equation schema, laid out per [`Shape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filling {
    pub subs: Vec<TypedSub>,
    pub tms: Vec<TypedTm>,
}

/// Both sides of an instantiated equation, with the context they live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sides {
    Tm { ctx: Con, lhs: ITm, rhs: ITm },
    Sub { src: Con, lhs: ISub, rhs: ISub },
}

/// An equation of the theory as a schema over a [`Filling`].
#[derive(Clone, Copy, Debug)]
pub struct CwfEquation {
    pub name: &'static str,
    pub shape: Shape,
    /// Derived from the primitive equations rather than postulated.
    pub derived: bool,
    build: fn(&Filling) -> Sides,
}

impl CwfEquation {
    pub fn instantiate(&self, filling: &Filling) -> Sides {
        (self.build)(filling)
    }
}

fn sub(f: &Filling, k: usize) -> ISub {
    f.subs[k].sub.clone()
}

fn tm(f: &Filling, k: usize) -> ITm {
    f.tms[k].tm.clone()
}

fn innermost_src(f: &Filling) -> Con {
    f.subs.last().expect("filling has a substitution").src.clone()
}

/// The thirteen equations of a simply typed CwF with λ and application,
/// followed by three derived β-laws for variables and extension.
pub fn equation_catalog() -> Vec<CwfEquation> {
    vec![
        CwfEquation {
            name: "•-η",
            shape: Shape::SubToEmpty,
            derived: false,
            build: |f| Sides::Sub { src: f.subs[0].src.clone(), lhs: sub(f, 0), rhs: ISub::Eps },
        },
        CwfEquation {
            name: "▷-β₀",
            shape: Shape::SubTm,
            derived: false,
            build: |f| Sides::Sub {
                src: f.subs[0].src.clone(),
                lhs: ISub::pi0(ISub::ext(sub(f, 0), tm(f, 0))),
                rhs: sub(f, 0),
            },
        },
        CwfEquation {
            name: "▷-β₁",
            shape: Shape::SubTm,
            derived: false,
            build: |f| Sides::Tm {
                ctx: f.subs[0].src.clone(),
                lhs: ITm::pi1(ISub::ext(sub(f, 0), tm(f, 0))),
                rhs: tm(f, 0),
            },
        },
        CwfEquation {
            name: "▷-η",
            shape: Shape::SubToExtended,
            derived: false,
            build: |f| Sides::Sub {
                src: f.subs[0].src.clone(),
                lhs: ISub::ext(ISub::pi0(sub(f, 0)), ITm::pi1(sub(f, 0))),
                rhs: sub(f, 0),
            },
        },
        CwfEquation {
            name: "π₀∘",
            shape: Shape::ChainToExtended,
            derived: false,
            build: |f| Sides::Sub {
                src: innermost_src(f),
                lhs: ISub::pi0(ISub::comp(sub(f, 0), sub(f, 1))),
                rhs: ISub::comp(ISub::pi0(sub(f, 0)), sub(f, 1)),
            },
        },
        CwfEquation {
            name: "π₁∘",
            shape: Shape::ChainToExtended,
            derived: false,
            build: |f| Sides::Tm {
                ctx: innermost_src(f),
                lhs: ITm::pi1(ISub::comp(sub(f, 0), sub(f, 1))),
                rhs: ITm::sub_apply(ITm::pi1(sub(f, 0)), sub(f, 1)),
            },
        },
        CwfEquation {
            name: "id∘",
            shape: Shape::Sub,
            derived: false,
            build: |f| Sides::Sub {
                src: f.subs[0].src.clone(),
                lhs: ISub::comp(ISub::Id(f.subs[0].tgt.clone()), sub(f, 0)),
                rhs: sub(f, 0),
            },
        },
        CwfEquation {
            name: "∘id",
            shape: Shape::Sub,
            derived: false,
            build: |f| Sides::Sub {
                src: f.subs[0].src.clone(),
                lhs: ISub::comp(sub(f, 0), ISub::Id(f.subs[0].src.clone())),
                rhs: sub(f, 0),
            },
        },
        CwfEquation {
            name: "∘∘",
            shape: Shape::Chain3,
            derived: false,
            build: |f| Sides::Sub {
                src: innermost_src(f),
                lhs: ISub::comp(ISub::comp(sub(f, 0), sub(f, 1)), sub(f, 2)),
                rhs: ISub::comp(sub(f, 0), ISub::comp(sub(f, 1), sub(f, 2))),
            },
        },
        CwfEquation {
            name: "[id]",
            shape: Shape::Tm,
            derived: false,
            build: |f| Sides::Tm {
                ctx: f.tms[0].ctx.clone(),
                lhs: ITm::sub_apply(tm(f, 0), ISub::Id(f.tms[0].ctx.clone())),
                rhs: tm(f, 0),
            },
        },
        CwfEquation {
            name: "[∘]",
            shape: Shape::TmChain2,
            derived: false,
            build: |f| Sides::Tm {
                ctx: innermost_src(f),
                lhs: ITm::sub_apply(ITm::sub_apply(tm(f, 0), sub(f, 0)), sub(f, 1)),
                rhs: ITm::sub_apply(tm(f, 0), ISub::comp(sub(f, 0), sub(f, 1))),
            },
        },
        CwfEquation {
            name: "·[]",
            shape: Shape::AppSub,
            derived: false,
            build: |f| Sides::Tm {
                ctx: innermost_src(f),
                lhs: ITm::sub_apply(ITm::app(tm(f, 0), tm(f, 1)), sub(f, 0)),
                rhs: ITm::app(ITm::sub_apply(tm(f, 0), sub(f, 0)), ITm::sub_apply(tm(f, 1), sub(f, 0))),
            },
        },
        CwfEquation {
            name: "λ[]",
            shape: Shape::LamSub,
            derived: false,
            build: |f| {
                let (_, dom) = f.tms[0].ctx.split_last().expect("λ body context is extended");
                let dom = dom.clone();
                let src = innermost_src(f);
                Sides::Tm {
                    lhs: ITm::sub_apply(ITm::lam(dom.clone(), tm(f, 0)), sub(f, 0)),
                    rhs: ITm::lam(dom.clone(), ITm::sub_apply(tm(f, 0), i_lift(sub(f, 0), &dom, &src))),
                    ctx: src,
                }
            },
        },
        CwfEquation {
            name: "zero[]ᴵ",
            shape: Shape::SubTm,
            derived: true,
            build: |f| Sides::Tm {
                ctx: f.subs[0].src.clone(),
                lhs: ITm::sub_apply(i_zero(&f.subs[0].tgt.extend(f.tms[0].ty.clone())), ISub::ext(sub(f, 0), tm(f, 0))),
                rhs: tm(f, 0),
            },
        },
        CwfEquation {
            name: "suc[]ᴵ",
            shape: Shape::TmSubTm,
            derived: true,
            build: |f| Sides::Tm {
                ctx: innermost_src(f),
                lhs: ITm::sub_apply(i_suc(tm(f, 0), &f.tms[1].ty, &f.tms[0].ctx), ISub::ext(sub(f, 0), tm(f, 1))),
                rhs: ITm::sub_apply(tm(f, 0), sub(f, 0)),
            },
        },
        CwfEquation {
            name: ",∘ᴵ",
            shape: Shape::SubTmSub,
            derived: true,
            build: |f| Sides::Sub {
                src: innermost_src(f),
                lhs: ISub::comp(ISub::ext(sub(f, 0), tm(f, 0)), sub(f, 1)),
                rhs: ISub::ext(ISub::comp(sub(f, 0), sub(f, 1)), ITm::sub_apply(tm(f, 0), sub(f, 1))),
            },
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o() -> Ty {
        Ty::Base
    }

    fn one() -> Con {
        Con::from(vec![o()])
    }

    #[test]
    fn inference_examples() {
        assert_eq!(infer_itm(&one(), &ITm::pi1(ISub::Id(one()))), Some(o()));
        assert_eq!(infer_isub(&Con::empty(), &ISub::Eps), Some(Con::empty()));
        let two = Con::from(vec![o(), o()]);
        assert_eq!(infer_isub(&one(), &ISub::Id(two)), None);
        // π₀ / π₁ of the empty substitution are ill-formed
        assert_eq!(infer_isub(&one(), &ISub::pi0(ISub::Eps)), None);
        assert_eq!(infer_itm(&one(), &ITm::pi1(ISub::Eps)), None);
    }

    #[test]
    fn composition_chains_contexts() {
        // (wk ∘ id) : [o, o] ⊩ [o]
        let two = Con::from(vec![o(), o()]);
        let s = ISub::comp(i_wk(&two), ISub::Id(two.clone()));
        assert_eq!(infer_isub(&two, &s), Some(one()));
        // reversed order does not chain
        let bad = ISub::comp(ISub::Id(two.clone()), i_wk(&two));
        assert_eq!(infer_isub(&two, &bad), None);
    }

    #[test]
    fn derived_forms() {
        assert_eq!(i_zero(&one()), ITm::pi1(ISub::Id(one())));
        assert_eq!(i_wk(&one()), ISub::pi0(ISub::Id(one())));
        assert_eq!(
            i_lift(ISub::Eps, &o(), &Con::empty()),
            ISub::ext(ISub::comp(ISub::Eps, ISub::pi0(ISub::Id(one()))), ITm::pi1(ISub::Id(one())))
        );
        let t = i_suc(i_zero(&one()), &o(), &one());
        assert_eq!(infer_itm(&Con::from(vec![o(), o()]), &t), Some(o()));
    }

    #[test]
    #[should_panic(expected = "contract violation in i_zero")]
    fn zero_of_empty_context() {
        i_zero(&Con::empty());
    }

    #[test]
    fn catalog_has_sixteen_distinct_names() {
        let cat = equation_catalog();
        assert_eq!(cat.len(), 16);
        assert_eq!(cat.iter().filter(|e| e.derived).count(), 3);
        let mut names: Vec<_> = cat.iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), 16);
    }

    #[test]
    fn beta1_instance_is_well_typed() {
        let cat = equation_catalog();
        let beta1 = cat.iter().find(|e| e.name == "▷-β₁").unwrap();
        let t = ITm::lam(o(), ITm::pi1(ISub::Id(one())));
        let filling = Filling {
            subs: vec![TypedSub { src: Con::empty(), sub: ISub::Eps, tgt: Con::empty() }],
            tms: vec![TypedTm { ctx: Con::empty(), tm: t, ty: Ty::arrow(o(), o()) }],
        };
        let Sides::Tm { ctx, lhs, rhs } = beta1.instantiate(&filling) else {
            panic!("▷-β₁ relates terms");
        };
        let ty = infer_itm(&ctx, &lhs);
        assert_eq!(ty, Some(Ty::arrow(o(), o())));
        assert_eq!(ty, infer_itm(&ctx, &rhs));
    }
}

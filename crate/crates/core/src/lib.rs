//! A sort-indexed substitution calculus for simply typed λ-terms, where
//! renaming and substitution share one implementation, together with an
//! explicit-substitution presentation, a normalizer between the two, and
//! exhaustive law checking over small instances.

pub mod display;
pub mod enumerate;
pub mod explicit;
pub mod laws;
pub mod monitor;
pub mod naive;
pub mod normalize;
pub mod random;
pub mod subst;
pub mod syntax;

pub use enumerate::EnumConfig;
pub use explicit::{equation_catalog, infer_isub, infer_itm, CwfEquation, ISub, ITm};
pub use laws::{registry, run_laws, run_suite, LawReport, SuiteReport};
pub use normalize::{decide_eq, decide_eq_sub, embed, embed_sub, norm, norm_sub, EqError};
pub use subst::{
    coerce_expr, coerce_sub, compose, id_sub, join, leq, sub_lift, sub_weaken, subst_apply, suc_at, zero_at,
};
pub use syntax::{check_sub, infer_expr, sort_of, Con, Expr, Sort, SubList, Ty};

//! The law registry: every equational property of the engine, the oracle
//! and the normalizer, checked exhaustively over enumerated instances.

use std::collections::HashMap;
use std::fmt::{self, Display};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::rc::Rc;
use std::time::{Duration, Instant};

use rustc_hash::FxHashMap;

use crate::enumerate::{contexts_up_to, enum_types, EnumConfig, Enumerator};
use crate::explicit::{equation_catalog, i_lift, i_wk, infer_isub, infer_itm, ISub, ITm, Sides};
use crate::monitor::{self, DepthReport};
use crate::naive;
use crate::normalize::{decide_eq, decide_eq_sub, embed, embed_sub, norm, norm_sub};
use crate::subst::{
    coerce_expr, coerce_sub, compose, id_sub, join, sub_lift, sub_weaken, subst_apply, suc_at, zero_at,
};
use crate::syntax::{check_sub, infer_expr, sort_of, Con, Expr, Sort, SubList, Ty};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub checked: u64,
    pub counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Signals that a counterexample was found and enumeration should stop.
#[derive(Debug)]
pub struct Stop;

pub type Flow = Result<(), Stop>;

/// Counts instances and keeps the first failure, including contract
/// panics raised while evaluating either side.
#[derive(Default)]
pub struct Checker {
    checked: u64,
    cex: Option<Counterexample>,
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = p.downcast_ref::<&str>() {
        (*s).to_string()
    } else if let Some(s) = p.downcast_ref::<String>() {
        s.clone()
    } else {
        "panic".to_string()
    }
}

impl Checker {
    /// Evaluates `sides` and records a counterexample unless the flag it
    /// returns is set.
    pub fn check_with<L, R, D, F>(&mut self, describe: D, sides: F) -> Flow
    where
        L: Display,
        R: Display,
        D: FnOnce() -> String,
        F: FnOnce() -> (L, R, bool),
    {
        if self.cex.is_some() {
            return Err(Stop);
        }
        self.checked += 1;
        match catch_unwind(AssertUnwindSafe(sides)) {
            Ok((_, _, true)) => Ok(()),
            Ok((l, r, false)) => {
                self.cex = Some(Counterexample { instance: describe(), lhs: l.to_string(), rhs: r.to_string() });
                Err(Stop)
            }
            Err(p) => {
                self.cex = Some(Counterexample { instance: describe(), lhs: panic_message(p), rhs: String::new() });
                Err(Stop)
            }
        }
    }

    pub fn check_eq<T, D, F>(&mut self, describe: D, sides: F) -> Flow
    where
        T: Display + PartialEq,
        D: FnOnce() -> String,
        F: FnOnce() -> (T, T),
    {
        self.check_with(describe, || {
            let (l, r) = sides();
            let eq = l == r;
            (l, r, eq)
        })
    }

    pub fn checked(&self) -> u64 {
        self.checked
    }

    fn finish(self, law: &str, elapsed: Duration) -> LawReport {
        LawReport { law: law.to_string(), checked: self.checked, counterexample: self.cex, elapsed }
    }
}

/// Checks `lhs(i) == rhs(i)` for every instance, stopping at the first
/// failure.
pub fn check_equation<I, T>(
    name: &str,
    instances: impl IntoIterator<Item = I>,
    lhs: impl Fn(&I) -> T,
    rhs: impl Fn(&I) -> T,
    describe: impl Fn(&I) -> String,
) -> LawReport
where
    T: Display + PartialEq,
{
    let start = Instant::now();
    let mut chk = Checker::default();
    for i in instances {
        if chk.check_eq(|| describe(&i), || (lhs(&i), rhs(&i))).is_err() {
            break;
        }
    }
    chk.finish(name, start.elapsed())
}

/// `Option` rendered with `-` for absence.
#[derive(PartialEq, Eq)]
pub struct Opt<T>(pub Option<T>);

impl<T: Display> Display for Opt<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Some(v) => v.fmt(f),
            None => f.write_str("-"),
        }
    }
}

/// A typing judgment outcome: the inferred type (or target) and sort.
#[derive(PartialEq, Eq)]
struct Judged<T>(Option<T>, Sort);

impl<T: Display> Display for Judged<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", Opt(self.0.as_ref()), self.1)
    }
}

/// Shared enumeration state for one suite run.
pub struct Suite {
    cfg: EnumConfig,
    en: Enumerator,
    types: Vec<Ty>,
    ctxs: Vec<Con>,
    terms: FxHashMap<Con, Rc<Vec<(Ty, Expr)>>>,
    subs: FxHashMap<(Con, Con, Sort), Rc<Vec<SubList>>>,
}

impl Suite {
    pub fn new(cfg: &EnumConfig) -> Suite {
        let types = enum_types(cfg);
        let ctxs = contexts_up_to(&types, cfg.max_ctx_len.max(cfg.max_chain_ctx_len));
        Suite {
            cfg: cfg.clone(),
            en: Enumerator::new(cfg),
            types,
            ctxs,
            terms: FxHashMap::default(),
            subs: FxHashMap::default(),
        }
    }

    pub fn config(&self) -> &EnumConfig {
        &self.cfg
    }

    fn ctxs(&self, max_len: usize) -> Vec<Con> {
        self.ctxs.iter().filter(|c| c.len() <= max_len).cloned().collect()
    }

    fn full(&self) -> Vec<Con> {
        self.ctxs(self.cfg.max_ctx_len)
    }

    fn chain(&self) -> Vec<Con> {
        self.ctxs(self.cfg.max_chain_ctx_len.min(self.cfg.max_ctx_len))
    }

    fn sorts(&self) -> Vec<Sort> {
        self.cfg.sorts.clone()
    }

    /// Expressions in `ctx` at every configured type and sort.
    fn terms(&mut self, ctx: &Con) -> Rc<Vec<(Ty, Expr)>> {
        if let Some(hit) = self.terms.get(ctx) {
            return hit.clone();
        }
        let mut out = Vec::new();
        for sort in self.cfg.sorts.clone() {
            for ty in self.types.clone() {
                for e in self.en.exprs(ctx, &ty, sort, self.cfg.max_expr_size) {
                    out.push((ty.clone(), e));
                }
            }
        }
        let out = Rc::new(out);
        self.terms.insert(ctx.clone(), out.clone());
        out
    }

    fn subs(&mut self, src: &Con, tgt: &Con, sort: Sort) -> Rc<Vec<SubList>> {
        let key = (src.clone(), tgt.clone(), sort);
        if let Some(hit) = self.subs.get(&key) {
            return hit.clone();
        }
        let out = Rc::new(self.en.subs(src, tgt, sort, self.cfg.max_sub_entry_size));
        self.subs.insert(key, out.clone());
        out
    }

    /// `f(Γ, x, A)` for every enumerated `x : Γ ⊢ A`.
    fn each_term(&mut self, ctxs: &[Con], mut f: impl FnMut(&Con, &Expr, &Ty) -> Flow) -> Flow {
        for g in ctxs {
            for (ty, x) in self.terms(g).iter() {
                f(g, x, ty)?;
            }
        }
        Ok(())
    }

    /// `f(Δ, ys, Γ)` for every enumerated `ys : Δ ⊩ Γ`.
    fn each_sub(&mut self, ctxs: &[Con], mut f: impl FnMut(&Con, &SubList, &Con) -> Flow) -> Flow {
        for tgt in ctxs {
            for src in ctxs {
                for r in self.sorts() {
                    for ys in self.subs(src, tgt, r).iter() {
                        f(src, ys, tgt)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// `f(Γ, x, A, Δ, ys)` for every `x : Γ ⊢ A` and `ys : Δ ⊩ Γ`.
    fn each_pair(&mut self, ctxs: &[Con], mut f: impl FnMut(&Con, &Expr, &Ty, &Con, &SubList) -> Flow) -> Flow {
        for g in ctxs {
            let terms = self.terms(g);
            if terms.is_empty() {
                continue;
            }
            for d in ctxs {
                for r in self.sorts() {
                    for ys in self.subs(d, g, r).iter() {
                        for (ty, x) in terms.iter() {
                            f(g, x, ty, d, ys)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `f(Θ, xs, Γ, ys, Δ)` for every `xs : Γ ⊩ Θ` and `ys : Δ ⊩ Γ`.
    fn each_chain(&mut self, ctxs: &[Con], mut f: impl FnMut(&Con, &SubList, &Con, &SubList, &Con) -> Flow) -> Flow {
        for th in ctxs {
            for g in ctxs {
                for d in ctxs {
                    for q in self.sorts() {
                        let xss = self.subs(g, th, q);
                        for r in self.sorts() {
                            let yss = self.subs(d, g, r);
                            for xs in xss.iter() {
                                for ys in yss.iter() {
                                    f(th, xs, g, ys, d)?;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl Suite {
    /// `f(Γ, Δ, ys, terms)` once per `ys : Δ ⊩ Γ`, with every enumerated
    /// term of `Γ`, so per-substitution work can be shared.
    fn each_pair_block(
        &mut self,
        ctxs: &[Con],
        mut f: impl FnMut(&Con, &Con, &SubList, &[(Ty, Expr)]) -> Flow,
    ) -> Flow {
        for g in ctxs {
            let terms = self.terms(g);
            if terms.is_empty() {
                continue;
            }
            for d in ctxs {
                for r in self.sorts() {
                    for ys in self.subs(d, g, r).iter() {
                        f(g, d, ys, &terms)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// `f(Θ, Γ, Δ, xss, yss)` with all `xs : Γ ⊩ Θ` and `ys : Δ ⊩ Γ` at
    /// one choice of sorts.
    fn each_chain_block(
        &mut self,
        ctxs: &[Con],
        mut f: impl FnMut(&Con, &Con, &Con, &[SubList], &[SubList]) -> Flow,
    ) -> Flow {
        for th in ctxs {
            for g in ctxs {
                for d in ctxs {
                    for q in self.sorts() {
                        let xss = self.subs(g, th, q);
                        for r in self.sorts() {
                            let yss = self.subs(d, g, r);
                            f(th, g, d, &xss, &yss)?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

type Runner = fn(&mut Suite, &mut Checker) -> Flow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    Oracle,
    Subst,
    Coercion,
    Types,
    Normalizer,
    Cwf,
    Embedding,
}

#[derive(Clone, Copy)]
enum Body {
    Plain(Runner),
    Equation(usize),
}

/// One registered property.
#[derive(Clone)]
pub struct Law {
    pub name: String,
    pub group: Group,
    body: Body,
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Law").field("name", &self.name).field("group", &self.group).finish()
    }
}

impl Law {
    pub fn run(&self, suite: &mut Suite) -> LawReport {
        let start = Instant::now();
        let mut chk = Checker::default();
        let _ = match self.body {
            Body::Plain(run) => run(suite, &mut chk),
            Body::Equation(k) => cwf_equation(k, suite, &mut chk),
        };
        chk.finish(&self.name, start.elapsed())
    }
}

/// Number of registered laws; a dropped law fails the build's tests.
pub const REGISTRY_SIZE: usize = 64;

pub fn registry() -> Vec<Law> {
    use Group::*;
    let plain = |name: &str, group, run: Runner| Law { name: name.to_string(), group, body: Body::Plain(run) };
    let mut laws = vec![
        plain("oracle:subst_apply", Oracle, oracle_apply),
        plain("oracle:sub_weaken", Oracle, oracle_weaken),
        plain("oracle:sub_lift", Oracle, oracle_lift),
        plain("oracle:id_sub", Oracle, oracle_id),
        plain("oracle:suc_at", Oracle, oracle_suc),
        plain("oracle:compose", Oracle, oracle_compose),
        plain("oracle:types", Oracle, oracle_types),
        plain("[id]", Subst, law_apply_id),
        plain("⁺-nat[]v", Subst, law_weaken_nat_var),
        plain("∘id", Subst, law_comp_id),
        plain("id∘", Subst, law_id_comp),
        plain("suc[]", Subst, law_suc_beta),
        plain("⁺∘", Subst, law_weaken_comp_ext),
        plain("[∘]", Subst, law_apply_comp),
        plain("∘∘", Subst, law_comp_assoc),
        plain("tm[]", Subst, law_tm_apply),
        plain("↑∘", Subst, law_lift_comp),
        plain("⁺-nat∘", Subst, law_comp_weaken),
        plain("⁺-nat[]", Subst, law_weaken_nat),
        plain("zero[]", Subst, law_zero_beta),
        plain("tm⊑zero", Subst, law_tm_zero),
        plain("suc[id⁺]", Subst, law_suc_id_weaken),
        plain("⊑∘", Coercion, law_coerce_comp_left),
        plain("∘⊑", Coercion, law_coerce_comp_right),
        plain("t[⊑]", Coercion, law_apply_coerced),
        plain("⊑⁺", Coercion, law_coerce_weaken),
        plain("⊑↑", Coercion, law_coerce_lift),
        plain("v[⊑]", Coercion, law_var_coerced),
        plain("types:subst_apply", Types, types_apply),
        plain("types:sub_weaken", Types, types_weaken),
        plain("types:sub_lift", Types, types_lift),
        plain("types:suc_at", Types, types_suc),
        plain("types:compose", Types, types_compose),
        plain("types:id_sub", Types, types_id),
        plain("types:norm", Types, types_norm),
        plain("types:norm_sub", Types, types_norm_sub),
        plain("types:embed", Types, types_embed),
        plain("types:embed_sub", Types, types_embed_sub),
        plain("stab", Normalizer, law_stab),
        plain("stab*", Normalizer, law_stab_sub),
        plain("norm-idempotent", Normalizer, law_norm_idempotent),
    ];
    for (k, eq) in equation_catalog().into_iter().enumerate() {
        laws.push(Law { name: format!("cwf:{}", eq.name), group: Cwf, body: Body::Equation(k) });
    }
    laws.extend([
        plain("⌜[]⌝", Embedding, law_embed_apply),
        plain("⌜↑⌝", Embedding, law_embed_lift),
        plain("⌜⁺⌝", Embedding, law_embed_weaken),
        plain("⌜id⌝", Embedding, law_embed_id),
        plain("⌜suc⌝", Embedding, law_embed_suc),
        plain("⌜∘⌝", Embedding, law_embed_compose),
        plain("⌜⊑⌝", Embedding, law_embed_coerce),
    ]);
    laws
}

/// Results of a suite run plus the recursion-depth statistics gathered
/// while it ran.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub laws: Vec<LawReport>,
    pub depth: DepthReport,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.laws.iter().all(LawReport::holds)
    }
}

/// Runs `laws` in order over one shared enumeration. Depth statistics
/// are reset first.
pub fn run_laws(cfg: &EnumConfig, laws: &[Law]) -> SuiteReport {
    monitor::reset();
    let mut suite = Suite::new(cfg);
    let reports = laws.iter().map(|law| law.run(&mut suite)).collect();
    SuiteReport { laws: reports, depth: monitor::report() }
}

pub fn run_suite(cfg: &EnumConfig) -> SuiteReport {
    run_laws(cfg, &registry())
}

// ---- rendering helpers for instance descriptions ----

fn pair_desc(g: &Con, x: &Expr, d: &Con, ys: &SubList) -> String {
    format!("x = {x} in {g}; ys = {ys} : {d} ⊩[{}] {g}", ys.sort)
}

fn chain_desc(th: &Con, xs: &SubList, g: &Con, ys: &SubList, d: &Con) -> String {
    format!("xs = {xs} : {g} ⊩[{}] {th}; ys = {ys} : {d} ⊩[{}] {g}", xs.sort, ys.sort)
}

fn sub_desc(src: &Con, xs: &SubList, tgt: &Con) -> String {
    format!("xs = {xs} : {src} ⊩[{}] {tgt}", xs.sort)
}

// ---- oracle agreement ----

fn oracle_apply(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_pair(&ctxs, |g, x, _, d, ys| {
        c.check_eq(|| pair_desc(g, x, d, ys), || (subst_apply(x, ys, d), naive::apply_dispatch(x, ys, d)))
    })
}

fn naive_weaken(xs: &SubList, a: &Ty, src: &Con) -> SubList {
    match xs.sort {
        Sort::V => naive::ren_weaken(&naive::Ren::try_from(xs).expect("renaming"), a).into_sublist(),
        Sort::T => naive::sub_weaken_naive(&naive::Sub::try_from(xs).expect("substitution"), a, src).into_sublist(),
    }
}

fn naive_lift(xs: &SubList, a: &Ty, src: &Con) -> SubList {
    match xs.sort {
        Sort::V => naive::ren_lift(&naive::Ren::try_from(xs).expect("renaming"), a).into_sublist(),
        Sort::T => naive::sub_lift_naive(&naive::Sub::try_from(xs).expect("substitution"), a, src).into_sublist(),
    }
}

fn naive_compose(xs: &SubList, ys: &SubList, src: &Con) -> SubList {
    use naive::{Ren, Sub};
    let ren = |s: &SubList| Ren::try_from(s).expect("renaming");
    let sub = |s: &SubList| Sub::try_from(s).expect("substitution");
    match (xs.sort, ys.sort) {
        (Sort::V, Sort::V) => naive::ren_comp_ren(&ren(xs), &ren(ys)).into_sublist(),
        (Sort::V, Sort::T) => naive::ren_comp_sub(&ren(xs), &sub(ys)).into_sublist(),
        (Sort::T, Sort::V) => naive::sub_comp_ren(&sub(xs), &ren(ys)).into_sublist(),
        (Sort::T, Sort::T) => naive::sub_comp_sub(&sub(xs), &sub(ys), src).into_sublist(),
    }
}

fn oracle_weaken(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_sub(&ctxs, |src, xs, tgt| {
        for a in &types {
            c.check_eq(
                || format!("{}; A = {a}", sub_desc(src, xs, tgt)),
                || (sub_weaken(xs, a, src), naive_weaken(xs, a, src)),
            )?;
        }
        Ok(())
    })
}

fn oracle_lift(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_sub(&ctxs, |src, xs, tgt| {
        for a in &types {
            c.check_eq(
                || format!("{}; A = {a}", sub_desc(src, xs, tgt)),
                || (sub_lift(xs, a, src), naive_lift(xs, a, src)),
            )?;
        }
        Ok(())
    })
}

fn oracle_id(s: &mut Suite, c: &mut Checker) -> Flow {
    for g in s.full() {
        c.check_eq(|| format!("Γ = {g}"), || (id_sub(&g), naive::id_ren(&g).into_sublist()))?;
    }
    Ok(())
}

fn oracle_suc(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_term(&ctxs, |g, x, _| {
        for a in &types {
            c.check_eq(
                || format!("x = {x} in {g}; A = {a}"),
                || {
                    let q = sort_of(x);
                    let expected = match q {
                        Sort::V => Expr::suc(x.clone(), a.clone()),
                        Sort::T => naive::suc_tm(x, a, g),
                    };
                    (suc_at(q, x, a, g), expected)
                },
            )?;
        }
        Ok(())
    })
}

fn oracle_compose(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    s.each_chain(&ctxs, |th, xs, g, ys, d| {
        c.check_eq(|| chain_desc(th, xs, g, ys, d), || (compose(xs, ys, d), naive_compose(xs, ys, d)))
    })
}

fn oracle_types(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_pair(&ctxs, |g, x, ty, d, ys| {
        c.check_eq(
            || pair_desc(g, x, d, ys),
            || {
                let out = naive::apply_dispatch(x, ys, d);
                (Judged(infer_expr(d, &out), sort_of(&out)), Judged(Some(ty.clone()), join(sort_of(x), ys.sort)))
            },
        )
    })
}

// ---- substitution laws ----

fn law_apply_id(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_term(&ctxs, |g, x, _| {
        c.check_eq(|| format!("x = {x} in {g}"), || (subst_apply(x, &id_sub(g), g), x.clone()))
    })
}

fn law_weaken_nat_var(s: &mut Suite, c: &mut Checker) -> Flow {
    weaken_nat(s, c, true)
}

fn law_comp_id(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_sub(&ctxs, |src, xs, tgt| {
        c.check_eq(|| sub_desc(src, xs, tgt), || (compose(xs, &id_sub(src), src), xs.clone()))
    })
}

fn law_id_comp(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_sub(&ctxs, |src, xs, tgt| {
        c.check_eq(|| sub_desc(src, xs, tgt), || (compose(&id_sub(tgt), xs, src), xs.clone()))
    })
}

/// Substitutions into a nonempty target, split as `(ys , y)`.
fn each_ext_pair(s: &mut Suite, mut f: impl FnMut(&Con, &Ty, &Con, &SubList) -> Flow) -> Flow {
    let ctxs = s.full();
    for tgt in ctxs.iter().filter(|t| !t.is_empty()) {
        let (g, a) = tgt.split_last().expect("nonempty");
        for d in &ctxs {
            for r in s.sorts() {
                for zs in s.subs(d, tgt, r).iter() {
                    f(&g, a, d, zs)?;
                }
            }
        }
    }
    Ok(())
}

fn init(zs: &SubList) -> SubList {
    SubList::new(zs.sort, zs.entries[..zs.entries.len() - 1].to_vec())
}

fn law_suc_beta(s: &mut Suite, c: &mut Checker) -> Flow {
    let mut jobs = Vec::new();
    each_ext_pair(s, |g, a, d, zs| {
        jobs.push((g.clone(), a.clone(), d.clone(), zs.clone()));
        Ok(())
    })?;
    for (g, a, d, zs) in jobs {
        let ys = init(&zs);
        for (_, x) in s.terms(&g).iter() {
            c.check_eq(
                || format!("x = {x} in {g}; A = {a}; (ys, y) = {zs} : {d} ⊩[{}] {}", zs.sort, g.extend(a.clone())),
                || (subst_apply(&suc_at(sort_of(x), x, &a, &g), &zs, &d), subst_apply(x, &ys, &d)),
            )?;
        }
    }
    Ok(())
}

fn law_weaken_comp_ext(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    for th in &ctxs {
        for ga in ctxs.iter().filter(|t| !t.is_empty()) {
            let (g, a) = ga.split_last().expect("nonempty");
            for d in &ctxs {
                for q in s.sorts() {
                    let xss = s.subs(&g, th, q);
                    for r in s.sorts() {
                        let zss = s.subs(d, ga, r);
                        for xs in xss.iter() {
                            for zs in zss.iter() {
                                c.check_eq(
                                    || format!("{}; A = {a}; (ys, y) = {zs} : {d} ⊩[{r}] {ga}", sub_desc(&g, xs, th)),
                                    || {
                                        let lhs = compose(&sub_weaken(xs, a, &g), zs, d);
                                        (lhs, compose(xs, &init(zs), d))
                                    },
                                )?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn law_apply_comp(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    for th in &ctxs {
        let terms = s.terms(th);
        for g in &ctxs {
            for d in &ctxs {
                for q in s.sorts() {
                    let xss = s.subs(g, th, q);
                    for r in s.sorts() {
                        let yss = s.subs(d, g, r);
                        for xs in xss.iter() {
                            for ys in yss.iter() {
                                let xys = compose(xs, ys, d);
                                for (_, x) in terms.iter() {
                                    c.check_eq(
                                        || format!("x = {x} in {th}; {}", chain_desc(th, xs, g, ys, d)),
                                        || (subst_apply(x, &xys, d), subst_apply(&subst_apply(x, xs, g), ys, d)),
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn law_comp_assoc(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    // every zs : E ⊩ Δ, grouped by Δ
    let mut zss_into: Vec<Vec<(Con, Rc<Vec<SubList>>)>> = Vec::new();
    for d in &ctxs {
        let mut here = Vec::new();
        for e in &ctxs {
            for r in s.sorts() {
                here.push((e.clone(), s.subs(e, d, r)));
            }
        }
        zss_into.push(here);
    }
    let index: HashMap<Con, usize> = ctxs.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
    s.each_chain_block(&ctxs, |th, g, d, xss, yss| {
        for ys in yss {
            let xys: Vec<SubList> = xss.iter().map(|xs| compose(xs, ys, d)).collect();
            for (e, zss) in &zss_into[index[d]] {
                for zs in zss.iter() {
                    let yzs = compose(ys, zs, e);
                    for (xs, xy) in xss.iter().zip(&xys) {
                        c.check_eq(
                            || format!("{}; zs = {zs} : {e} ⊩[{}] {d}", chain_desc(th, xs, g, ys, d), zs.sort),
                            || (compose(xs, &yzs, e), compose(xy, zs, e)),
                        )?;
                    }
                }
            }
        }
        Ok(())
    })
}

fn law_tm_apply(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_pair(&ctxs, |g, x, _, d, ys| {
        c.check_eq(
            || pair_desc(g, x, d, ys),
            || {
                let lhs = coerce_expr(Sort::T, subst_apply(x, ys, d));
                (lhs, subst_apply(&coerce_expr(Sort::T, x.clone()), ys, d))
            },
        )
    })
}

fn law_lift_comp(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    let types = s.types.clone();
    s.each_chain_block(&ctxs, |th, g, d, xss, yss| {
        for a in &types {
            let da = d.extend(a.clone());
            let lifted_ys: Vec<SubList> = yss.iter().map(|ys| sub_lift(ys, a, d)).collect();
            for xs in xss {
                let lifted_xs = sub_lift(xs, a, g);
                for (ys, lys) in yss.iter().zip(&lifted_ys) {
                    c.check_eq(
                        || format!("{}; A = {a}", chain_desc(th, xs, g, ys, d)),
                        || (sub_lift(&compose(xs, ys, d), a, d), compose(&lifted_xs, lys, &da)),
                    )?;
                }
            }
        }
        Ok(())
    })
}

fn law_comp_weaken(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    let types = s.types.clone();
    s.each_chain_block(&ctxs, |th, g, d, xss, yss| {
        for ys in yss {
            let weakened: Vec<(Con, SubList)> =
                types.iter().map(|a| (d.extend(a.clone()), sub_weaken(ys, a, d))).collect();
            for xs in xss {
                let xy = compose(xs, ys, d);
                for (a, (da, wk)) in types.iter().zip(&weakened) {
                    c.check_eq(
                        || format!("{}; A = {a}", chain_desc(th, xs, g, ys, d)),
                        || (compose(xs, wk, da), sub_weaken(&xy, a, d)),
                    )?;
                }
            }
        }
        Ok(())
    })
}

fn law_weaken_nat(s: &mut Suite, c: &mut Checker) -> Flow {
    weaken_nat(s, c, false)
}

/// `x [ xs ⁺ A ] ≡ suc[ q ⊔ r ] (x [ xs ]) A`, optionally for variables only.
fn weaken_nat(s: &mut Suite, c: &mut Checker, vars_only: bool) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_pair_block(&ctxs, |g, d, xs, terms| {
        let weakened: Vec<(Con, SubList)> = types.iter().map(|a| (d.extend(a.clone()), sub_weaken(xs, a, d))).collect();
        for (_, x) in terms {
            if vars_only && sort_of(x) != Sort::V {
                continue;
            }
            let q = join(sort_of(x), xs.sort);
            let base = subst_apply(x, xs, d);
            for (a, (da, wk)) in types.iter().zip(&weakened) {
                c.check_eq(
                    || format!("{}; A = {a}", pair_desc(g, x, d, xs)),
                    || (subst_apply(x, wk, da), suc_at(q, &base, a, d)),
                )?;
            }
        }
        Ok(())
    })
}

fn law_zero_beta(s: &mut Suite, c: &mut Checker) -> Flow {
    let sorts = s.sorts();
    each_ext_pair(s, |g, a, d, zs| {
        for &q in &sorts {
            c.check_eq(
                || format!("q = {q}; (xs, x) = {zs} : {d} ⊩[{}] {}", zs.sort, g.extend(a.clone())),
                || {
                    let x = zs.entries.last().expect("nonempty").clone();
                    (subst_apply(&zero_at(q), zs, d), coerce_expr(join(q, zs.sort), x))
                },
            )?;
        }
        Ok(())
    })
}

fn law_tm_zero(_: &mut Suite, c: &mut Checker) -> Flow {
    c.check_eq(String::new, || (zero_at(Sort::T), coerce_expr(Sort::T, zero_at(Sort::V))))
}

fn law_suc_id_weaken(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_term(&ctxs, |g, i, _| {
        if sort_of(i) != Sort::V {
            return Ok(());
        }
        for a in &types {
            c.check_eq(
                || format!("i = {i} in {g}; A = {a}"),
                || {
                    let wk = sub_weaken(&id_sub(g), a, g);
                    (subst_apply(i, &wk, &g.extend(a.clone())), Expr::suc(i.clone(), a.clone()))
                },
            )?;
        }
        Ok(())
    })
}

// ---- coercion lemmas ----

fn law_coerce_comp_left(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    s.each_chain(&ctxs, |th, xs, g, ys, d| {
        c.check_eq(
            || chain_desc(th, xs, g, ys, d),
            || {
                let lhs = compose(&coerce_sub(Sort::T, xs.clone()), ys, d);
                (lhs, coerce_sub(Sort::T, compose(xs, ys, d)))
            },
        )
    })
}

fn law_coerce_comp_right(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    s.each_chain(&ctxs, |th, xs, g, ys, d| {
        c.check_eq(
            || chain_desc(th, xs, g, ys, d),
            || {
                let lhs = compose(xs, &coerce_sub(Sort::T, ys.clone()), d);
                (lhs, coerce_sub(Sort::T, compose(xs, ys, d)))
            },
        )
    })
}

fn law_apply_coerced(s: &mut Suite, c: &mut Checker) -> Flow {
    apply_coerced(s, c, false)
}

/// `x [ tm⊑ ys ] ≡ tm⊑ (x [ ys ])`, optionally for variables only.
fn apply_coerced(s: &mut Suite, c: &mut Checker, vars_only: bool) -> Flow {
    let ctxs = s.full();
    s.each_pair_block(&ctxs, |g, d, ys, terms| {
        let coerced = coerce_sub(Sort::T, ys.clone());
        for (_, x) in terms {
            if vars_only && sort_of(x) != Sort::V {
                continue;
            }
            c.check_eq(
                || pair_desc(g, x, d, ys),
                || (subst_apply(x, &coerced, d), coerce_expr(Sort::T, subst_apply(x, ys, d))),
            )?;
        }
        Ok(())
    })
}

fn law_coerce_weaken(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_sub(&ctxs, |src, xs, tgt| {
        for a in &types {
            c.check_eq(
                || format!("{}; A = {a}", sub_desc(src, xs, tgt)),
                || {
                    let lhs = sub_weaken(&coerce_sub(Sort::T, xs.clone()), a, src);
                    (lhs, coerce_sub(Sort::T, sub_weaken(xs, a, src)))
                },
            )?;
        }
        Ok(())
    })
}

fn law_coerce_lift(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_sub(&ctxs, |src, xs, tgt| {
        for a in &types {
            c.check_eq(
                || format!("{}; A = {a}", sub_desc(src, xs, tgt)),
                || {
                    let lhs = sub_lift(&coerce_sub(Sort::T, xs.clone()), a, src);
                    (lhs, coerce_sub(Sort::T, sub_lift(xs, a, src)))
                },
            )?;
        }
        Ok(())
    })
}

fn law_var_coerced(s: &mut Suite, c: &mut Checker) -> Flow {
    apply_coerced(s, c, true)
}

fn types_apply(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_pair(&ctxs, |g, x, ty, d, ys| {
        c.check_eq(
            || pair_desc(g, x, d, ys),
            || {
                let out = subst_apply(x, ys, d);
                (Judged(infer_expr(d, &out), sort_of(&out)), Judged(Some(ty.clone()), join(sort_of(x), ys.sort)))
            },
        )
    })
}

fn types_weaken(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_sub(&ctxs, |src, xs, tgt| {
        for a in &types {
            c.check_eq(
                || format!("{}; A = {a}", sub_desc(src, xs, tgt)),
                || {
                    let out = sub_weaken(xs, a, src);
                    (check_sub(&src.extend(a.clone()), &out, tgt) && out.sort == xs.sort, true)
                },
            )?;
        }
        Ok(())
    })
}

fn types_lift(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_sub(&ctxs, |src, xs, tgt| {
        for a in &types {
            c.check_eq(
                || format!("{}; A = {a}", sub_desc(src, xs, tgt)),
                || {
                    let out = sub_lift(xs, a, src);
                    let ok = check_sub(&src.extend(a.clone()), &out, &tgt.extend(a.clone()));
                    (ok && out.sort == xs.sort, true)
                },
            )?;
        }
        Ok(())
    })
}

fn types_suc(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_term(&ctxs, |g, x, ty| {
        for a in &types {
            c.check_eq(
                || format!("x = {x} in {g}; A = {a}"),
                || {
                    let out = suc_at(sort_of(x), x, a, g);
                    let got = Judged(infer_expr(&g.extend(a.clone()), &out), sort_of(&out));
                    (got, Judged(Some(ty.clone()), sort_of(x)))
                },
            )?;
        }
        Ok(())
    })
}

fn types_compose(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    s.each_chain(&ctxs, |th, xs, g, ys, d| {
        c.check_eq(
            || chain_desc(th, xs, g, ys, d),
            || {
                let out = compose(xs, ys, d);
                (check_sub(d, &out, th) && out.sort == join(xs.sort, ys.sort), true)
            },
        )
    })
}

fn types_id(s: &mut Suite, c: &mut Checker) -> Flow {
    for g in s.full() {
        c.check_eq(
            || format!("Γ = {g}"),
            || {
                let out = id_sub(&g);
                (check_sub(&g, &out, &g) && out.sort == Sort::V, true)
            },
        )?;
    }
    Ok(())
}

fn each_itm(s: &mut Suite, mut f: impl FnMut(&Con, &ITm, &Ty) -> Flow) -> Flow {
    let max = s.cfg.max_itm_size;
    for g in s.full() {
        for n in 1..=max {
            for (ty, t) in s.en.itms_of_size(&g, n).iter() {
                f(&g, t, ty)?;
            }
        }
    }
    Ok(())
}

fn each_isub(s: &mut Suite, mut f: impl FnMut(&Con, &ISub, &Con) -> Flow) -> Flow {
    let max = s.cfg.max_itm_size;
    for g in s.full() {
        for n in 1..=max {
            for (tgt, d) in s.en.isubs_of_size(&g, n).iter() {
                f(&g, d, tgt)?;
            }
        }
    }
    Ok(())
}

fn types_norm(s: &mut Suite, c: &mut Checker) -> Flow {
    each_itm(s, |g, t, ty| {
        c.check_eq(
            || format!("t = {t} in {g}"),
            || {
                let out = norm(g, t);
                (Judged(infer_expr(g, &out), sort_of(&out)), Judged(Some(ty.clone()), Sort::T))
            },
        )
    })
}

fn types_norm_sub(s: &mut Suite, c: &mut Checker) -> Flow {
    each_isub(s, |g, d, tgt| {
        c.check_eq(
            || format!("δ = {d} out of {g}"),
            || {
                let out = norm_sub(g, d);
                (check_sub(g, &out, tgt) && out.sort == Sort::T, true)
            },
        )
    })
}

fn types_embed(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_term(&ctxs, |g, x, ty| {
        c.check_eq(|| format!("x = {x} in {g}"), || (Opt(infer_itm(g, &embed(g, x))), Opt(Some(ty.clone()))))
    })
}

fn types_embed_sub(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_sub(&ctxs, |src, xs, tgt| {
        c.check_eq(|| sub_desc(src, xs, tgt), || (Opt(infer_isub(src, &embed_sub(src, xs))), Opt(Some(tgt.clone()))))
    })
}

// ---- normalizer ----

fn law_stab(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_term(&ctxs, |g, x, _| {
        c.check_eq(|| format!("x = {x} in {g}"), || (norm(g, &embed(g, x)), coerce_expr(Sort::T, x.clone())))
    })
}

fn law_stab_sub(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_sub(&ctxs, |src, xs, tgt| {
        c.check_eq(|| sub_desc(src, xs, tgt), || (norm_sub(src, &embed_sub(src, xs)), coerce_sub(Sort::T, xs.clone())))
    })
}

fn law_norm_idempotent(s: &mut Suite, c: &mut Checker) -> Flow {
    each_itm(s, |g, t, _| {
        c.check_eq(
            || format!("t = {t} in {g}"),
            || {
                let n = norm(g, t);
                (norm(g, &embed(g, &n)), n)
            },
        )
    })
}

fn cwf_equation(k: usize, s: &mut Suite, c: &mut Checker) -> Flow {
    let eq = equation_catalog()[k];
    let budget = s.cfg.max_itm_size;
    for g in s.full() {
        for filling in s.en.fillings(eq.shape, &g, budget) {
            let sides = eq.instantiate(&filling);
            match &sides {
                Sides::Tm { ctx, lhs, rhs } => c.check_with(
                    || format!("in {ctx}"),
                    || {
                        let l = (infer_itm(ctx, lhs), norm(ctx, lhs));
                        let r = (infer_itm(ctx, rhs), norm(ctx, rhs));
                        (lhs, rhs, l.0.is_some() && l == r)
                    },
                )?,
                Sides::Sub { src, lhs, rhs } => c.check_with(
                    || format!("out of {src}"),
                    || {
                        let l = (infer_isub(src, lhs), norm_sub(src, lhs));
                        let r = (infer_isub(src, rhs), norm_sub(src, rhs));
                        (lhs, rhs, l.0.is_some() && l == r)
                    },
                )?,
            }
        }
    }
    Ok(())
}

// ---- embedding laws, decided in the CwF theory ----

fn law_embed_apply(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_pair_block(&ctxs, |g, d, ys, terms| {
        let eys = embed_sub(d, ys);
        for (_, x) in terms {
            c.check_with(
                || pair_desc(g, x, d, ys),
                || {
                    let lhs = embed(d, &subst_apply(x, ys, d));
                    let rhs = ITm::sub_apply(embed(g, x), eys.clone());
                    let ok = decide_eq(d, &lhs, &rhs) == Ok(true);
                    (lhs, rhs, ok)
                },
            )?;
        }
        Ok(())
    })
}

fn law_embed_lift(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_sub(&ctxs, |src, xs, tgt| {
        for a in &types {
            c.check_with(
                || format!("{}; A = {a}", sub_desc(src, xs, tgt)),
                || {
                    let ext = src.extend(a.clone());
                    let lhs = embed_sub(&ext, &sub_lift(xs, a, src));
                    let rhs = i_lift(embed_sub(src, xs), a, src);
                    let ok = decide_eq_sub(&ext, &lhs, &rhs) == Ok(true);
                    (lhs, rhs, ok)
                },
            )?;
        }
        Ok(())
    })
}

fn law_embed_weaken(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_sub(&ctxs, |src, xs, tgt| {
        for a in &types {
            c.check_with(
                || format!("{}; A = {a}", sub_desc(src, xs, tgt)),
                || {
                    let ext = src.extend(a.clone());
                    let lhs = embed_sub(&ext, &sub_weaken(xs, a, src));
                    let rhs = ISub::comp(embed_sub(src, xs), i_wk(&ext));
                    let ok = decide_eq_sub(&ext, &lhs, &rhs) == Ok(true);
                    (lhs, rhs, ok)
                },
            )?;
        }
        Ok(())
    })
}

fn law_embed_id(s: &mut Suite, c: &mut Checker) -> Flow {
    for g in s.full() {
        c.check_with(
            || format!("Γ = {g}"),
            || {
                let lhs = embed_sub(&g, &id_sub(&g));
                let rhs = ISub::Id(g.clone());
                let ok = decide_eq_sub(&g, &lhs, &rhs) == Ok(true);
                (lhs, rhs, ok)
            },
        )?;
    }
    Ok(())
}

fn law_embed_suc(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    let types = s.types.clone();
    s.each_term(&ctxs, |g, x, _| {
        for b in &types {
            c.check_with(
                || format!("x = {x} in {g}; B = {b}"),
                || {
                    let ext = g.extend(b.clone());
                    let lhs = embed(&ext, &suc_at(sort_of(x), x, b, g));
                    let rhs = ITm::sub_apply(embed(g, x), i_wk(&ext));
                    let ok = decide_eq(&ext, &lhs, &rhs) == Ok(true);
                    (lhs, rhs, ok)
                },
            )?;
        }
        Ok(())
    })
}

fn law_embed_compose(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.chain();
    s.each_chain(&ctxs, |th, xs, g, ys, d| {
        c.check_with(
            || chain_desc(th, xs, g, ys, d),
            || {
                let lhs = embed_sub(d, &compose(xs, ys, d));
                let rhs = ISub::comp(embed_sub(g, xs), embed_sub(d, ys));
                let ok = decide_eq_sub(d, &lhs, &rhs) == Ok(true);
                (lhs, rhs, ok)
            },
        )
    })
}

fn law_embed_coerce(s: &mut Suite, c: &mut Checker) -> Flow {
    let ctxs = s.full();
    s.each_term(&ctxs, |g, x, _| {
        c.check_with(
            || format!("x = {x} in {g}"),
            || {
                let lhs = embed(g, &coerce_expr(Sort::T, x.clone()));
                let rhs = embed(g, x);
                let ok = decide_eq(g, &lhs, &rhs) == Ok(true);
                (lhs, rhs, ok)
            },
        )
    })
}

// ---- randomized checks on larger instances ----

/// Settings for [`run_random`].
#[derive(Clone, Debug)]
pub struct RandomConfig {
    pub seed: u64,
    pub instances: u64,
    /// Approximate constructor count of generated terms.
    pub size: usize,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig { seed: 0, instances: 200, size: 40 }
    }
}

struct RandomPair {
    g: Con,
    x: Expr,
    ty: Ty,
    d: Con,
    ys: SubList,
    e: Con,
    zs: SubList,
}

fn random_pair(rng: &mut rand_chacha::ChaCha8Rng, size: usize) -> RandomPair {
    use crate::random::{random_context, random_expr, random_renaming, random_sub};
    use rand::Rng;
    let n = rng.gen_range(0..3);
    let g = random_context(rng, n);
    let n = rng.gen_range(0..3);
    let d = random_context(rng, n);
    let n = rng.gen_range(0..3);
    let e = random_context(rng, n);
    let ty = if rng.gen_bool(0.7) { Ty::Base } else { Ty::arrow(Ty::Base, Ty::Base) };
    let x = if rng.gen_bool(0.8) {
        random_expr(rng, &g, &ty, size)
    } else {
        crate::random::random_var(rng, &g, &ty).expect("base context has every small type")
    };
    let pick = |rng: &mut rand_chacha::ChaCha8Rng, src: &Con, tgt: &Con| {
        if rng.gen_bool(0.5) {
            random_renaming(rng, src, tgt)
        } else {
            random_sub(rng, src, tgt, Sort::T, size / 4 + 1)
        }
    };
    let ys = pick(rng, &d, &g);
    let zs = pick(rng, &e, &d);
    RandomPair { g, x, ty, d, ys, e, zs }
}

/// Checks a handful of laws on seeded random instances far larger than
/// the exhaustive bounds.
pub fn run_random(cfg: &RandomConfig) -> Vec<LawReport> {
    type Check = fn(&RandomPair, &mut Checker) -> Flow;
    let checks: [(&str, Check); 6] = [
        ("oracle:subst_apply", |p, c| {
            c.check_eq(
                || pair_desc(&p.g, &p.x, &p.d, &p.ys),
                || (subst_apply(&p.x, &p.ys, &p.d), naive::apply_dispatch(&p.x, &p.ys, &p.d)),
            )
        }),
        ("types:subst_apply", |p, c| {
            c.check_eq(
                || pair_desc(&p.g, &p.x, &p.d, &p.ys),
                || {
                    let out = subst_apply(&p.x, &p.ys, &p.d);
                    let want = Judged(Some(p.ty.clone()), join(sort_of(&p.x), p.ys.sort));
                    (Judged(infer_expr(&p.d, &out), sort_of(&out)), want)
                },
            )
        }),
        ("[∘]", |p, c| {
            c.check_eq(
                || format!("{}; zs = {} : {} ⊩ {}", pair_desc(&p.g, &p.x, &p.d, &p.ys), p.zs, p.e, p.d),
                || {
                    let lhs = subst_apply(&p.x, &compose(&p.ys, &p.zs, &p.e), &p.e);
                    (lhs, subst_apply(&subst_apply(&p.x, &p.ys, &p.d), &p.zs, &p.e))
                },
            )
        }),
        ("∘∘", |p, c| {
            c.check_eq(
                || format!("ys = {}; zs = {}; x = {}", p.ys, p.zs, p.x),
                || {
                    let xs = SubList::new(Sort::T, vec![p.x.clone()]);
                    let lhs = compose(&xs, &compose(&p.ys, &p.zs, &p.e), &p.e);
                    (lhs, compose(&compose(&xs, &p.ys, &p.d), &p.zs, &p.e))
                },
            )
        }),
        ("stab", |p, c| {
            c.check_eq(
                || format!("x = {} in {}", p.x, p.g),
                || (norm(&p.g, &embed(&p.g, &p.x)), coerce_expr(Sort::T, p.x.clone())),
            )
        }),
        ("⌜[]⌝", |p, c| {
            c.check_with(
                || pair_desc(&p.g, &p.x, &p.d, &p.ys),
                || {
                    let lhs = embed(&p.d, &subst_apply(&p.x, &p.ys, &p.d));
                    let rhs = ITm::sub_apply(embed(&p.g, &p.x), embed_sub(&p.d, &p.ys));
                    let ok = decide_eq(&p.d, &lhs, &rhs) == Ok(true);
                    (lhs, rhs, ok)
                },
            )
        }),
    ];
    let mut rng = crate::random::rng(cfg.seed);
    let pairs: Vec<RandomPair> = (0..cfg.instances).map(|_| random_pair(&mut rng, cfg.size)).collect();
    checks
        .iter()
        .map(|(name, check)| {
            let start = Instant::now();
            let mut chk = Checker::default();
            for p in &pairs {
                if check(p, &mut chk).is_err() {
                    break;
                }
            }
            chk.finish(name, start.elapsed())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_pinned() {
        let laws = registry();
        assert_eq!(laws.len(), REGISTRY_SIZE);
        let mut names: Vec<_> = laws.iter().map(|l| l.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), REGISTRY_SIZE, "law names are unique");
        assert_eq!(laws.iter().filter(|l| l.group == Group::Cwf).count(), 16);
    }

    #[test]
    fn harness_reports_smallest_counterexample() {
        let xs = vec![Expr::Zero, Expr::suc(Expr::Zero, Ty::Base)];
        let report =
            check_equation("wrong", xs, |x| x.clone(), |x| Expr::suc(x.clone(), Ty::Base), |x| format!("x = {x}"));
        assert!(!report.holds());
        assert_eq!(report.checked, 1);
        let cex = report.counterexample.unwrap();
        assert_eq!(cex.instance, "x = #0");
        assert_eq!((cex.lhs.as_str(), cex.rhs.as_str()), ("#0", "#1"));
    }

    #[test]
    fn harness_reports_contract_panics() {
        let report = check_equation(
            "panics",
            [()],
            |_| subst_apply(&Expr::Zero, &SubList::empty(Sort::V), &Con::empty()),
            |_| Expr::Zero,
            |_| "empty".to_string(),
        );
        let cex = report.counterexample.expect("panic is a failure");
        assert!(cex.lhs.contains("contract violation in subst_apply"), "{}", cex.lhs);
    }

    #[test]
    fn random_mode_holds_and_is_reproducible() {
        let cfg = RandomConfig { seed: 11, instances: 60, size: 30 };
        let a = run_random(&cfg);
        assert!(a.iter().all(|r| r.holds() && r.checked == 60), "{a:?}");
        let b = run_random(&cfg);
        let strip = |rs: &[LawReport]| rs.iter().map(|r| (r.law.clone(), r.checked)).collect::<Vec<_>>();
        assert_eq!(strip(&a), strip(&b));
    }

    #[test]
    fn small_suite_holds() {
        let cfg = EnumConfig {
            max_type_depth: 2,
            max_ctx_len: 1,
            max_expr_size: 4,
            max_sub_entry_size: 3,
            max_itm_size: 6,
            sorts: vec![Sort::V, Sort::T],
            max_chain_ctx_len: 1,
        };
        let report = run_suite(&cfg);
        for law in &report.laws {
            assert!(law.holds(), "{}: {:?}", law.law, law.counterexample);
            assert!(law.checked > 0, "{} checked nothing", law.law);
        }
    }
}

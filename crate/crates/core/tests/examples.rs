use sortsubst::enumerate::{enum_exprs, enum_subs, enum_types, EnumConfig};
use sortsubst::explicit::{i_lift, i_wk, i_zero};
use sortsubst::naive::{id_ren, suc_tm, tm_ren, var_ren, var_sub, Ren, Sub};
use sortsubst::*;

fn o() -> Ty {
    Ty::Base
}

fn oo() -> Ty {
    Ty::arrow(o(), o())
}

fn con(tys: &[Ty]) -> Con {
    Con::from(tys.to_vec())
}

fn v(entries: Vec<Expr>) -> SubList {
    SubList::new(Sort::V, entries)
}

fn t(entries: Vec<Expr>) -> SubList {
    SubList::new(Sort::T, entries)
}

fn ez() -> Expr {
    Expr::embed(Expr::Zero)
}

fn id_lam() -> Expr {
    Expr::lam(o(), ez())
}

#[test]
fn sorts_and_inference() {
    assert_eq!(sort_of(&Expr::Zero), Sort::V);
    assert_eq!(sort_of(&ez()), Sort::T);
    assert_eq!(sort_of(&id_lam()), Sort::T);

    assert_eq!(infer_expr(&con(&[o()]), &Expr::Zero), Some(o()));
    assert_eq!(infer_expr(&con(&[o()]), &id_lam()), Some(oo()));
    assert_eq!(infer_expr(&Con::empty(), &Expr::Zero), None);

    assert!(check_sub(&con(&[o()]), &v(vec![]), &Con::empty()));
    assert!(check_sub(&con(&[o()]), &v(vec![Expr::Zero]), &con(&[o()])));
    assert!(!check_sub(&Con::empty(), &v(vec![Expr::Zero]), &con(&[o()])));

    assert_ne!(Expr::Zero, Expr::suc(Expr::Zero, o()));
    assert_eq!(id_lam(), id_lam());
}

#[test]
fn lattice_and_coercions() {
    assert_eq!(join(Sort::V, Sort::V), Sort::V);
    assert_eq!(join(Sort::V, Sort::T), Sort::T);
    assert_eq!(join(Sort::T, Sort::V), Sort::T);
    assert!(leq(Sort::V, Sort::T));
    assert!(leq(Sort::T, Sort::T));
    assert!(!leq(Sort::T, Sort::V));

    assert_eq!(coerce_expr(Sort::T, Expr::Zero), ez());
    assert_eq!(coerce_expr(Sort::V, Expr::Zero), Expr::Zero);
    let app = Expr::app(ez(), ez());
    assert_eq!(coerce_expr(Sort::T, app.clone()), app);

    assert_eq!(coerce_sub(Sort::T, v(vec![])), t(vec![]));
    assert_eq!(coerce_sub(Sort::T, v(vec![Expr::Zero])), t(vec![ez()]));
    assert_eq!(coerce_sub(Sort::V, v(vec![Expr::Zero])), v(vec![Expr::Zero]));
}

#[test]
fn engine_cases() {
    let one = Expr::suc(Expr::Zero, o());
    // zero and suc look up the last and earlier entries
    let xs = v(vec![one.clone(), Expr::Zero]);
    let src = con(&[o(), o()]);
    assert_eq!(subst_apply(&Expr::Zero, &xs, &src), Expr::Zero);
    assert_eq!(subst_apply(&Expr::suc(Expr::Zero, o()), &xs, &src), one);
    let body = Expr::app(id_lam(), ez());
    assert_eq!(subst_apply(&ez(), &t(vec![body.clone()]), &src), body);

    assert_eq!(sub_weaken(&v(vec![]), &o(), &Con::empty()), v(vec![]));
    assert_eq!(sub_weaken(&v(vec![Expr::Zero]), &o(), &con(&[o()])), v(vec![one.clone()]));
    let wk_t = sub_weaken(&t(vec![ez()]), &o(), &con(&[o()]));
    let by_hand = subst_apply(&ez(), &sub_weaken(&id_sub(&con(&[o()])), &o(), &con(&[o()])), &con(&[o(), o()]));
    assert_eq!(wk_t, t(vec![by_hand.clone()]));
    assert_eq!(by_hand, Expr::embed(one.clone()));

    assert_eq!(sub_lift(&v(vec![]), &o(), &Con::empty()), v(vec![Expr::Zero]));
    assert_eq!(sub_lift(&t(vec![]), &o(), &Con::empty()), t(vec![ez()]));
    assert_eq!(sub_lift(&id_sub(&con(&[o()])), &o(), &con(&[o()])), v(vec![one.clone(), Expr::Zero]));

    assert_eq!(zero_at(Sort::V), Expr::Zero);
    assert_eq!(zero_at(Sort::T), ez());

    assert_eq!(suc_at(Sort::V, &Expr::Zero, &o(), &con(&[o()])), one);
    assert_eq!(suc_at(Sort::T, &ez(), &o(), &con(&[o()])), Expr::embed(one.clone()));
    assert_eq!(suc_at(Sort::T, &id_lam(), &o(), &Con::empty()), id_lam());

    assert_eq!(id_sub(&Con::empty()), v(vec![]));
    assert_eq!(id_sub(&con(&[o()])), v(vec![Expr::Zero]));
    assert_eq!(id_sub(&con(&[o(), o()])), v(vec![one, Expr::Zero]));

    let ys = t(vec![ez()]);
    assert_eq!(compose(&v(vec![]), &ys, &con(&[o()])), t(vec![]));
    assert_eq!(compose(&id_sub(&con(&[o()])), &ys, &con(&[o()])), t(vec![ez()]));
    let xs = v(vec![Expr::Zero, Expr::Zero]);
    let ys = t(vec![Expr::app(Expr::embed(Expr::suc(Expr::Zero, o())), ez())]);
    let src = con(&[oo(), o()]);
    let composed = compose(&xs, &ys, &src);
    assert_eq!(composed.entries[1], subst_apply(&xs.entries[1], &ys, &src));
    assert_eq!(composed.sort, Sort::T);
}

#[test]
fn naive_engine_cases() {
    let one = Expr::suc(Expr::Zero, o());
    let ren = Ren::new(vec![one.clone()]).unwrap();
    assert_eq!(var_ren(&Expr::Zero, &ren), one);
    let ren2 = Ren::new(vec![one.clone(), Expr::Zero]).unwrap();
    assert_eq!(var_ren(&Expr::suc(Expr::Zero, o()), &ren2), one);
    assert_eq!(tm_ren(&ez(), &ren), Expr::embed(one.clone()));
    assert_eq!(tm_ren(&id_lam(), &Ren::new(vec![]).unwrap()), id_lam());

    let sub = Sub::new(vec![id_lam()]).unwrap();
    assert_eq!(var_sub(&Expr::Zero, &sub), id_lam());
    let sub2 = Sub::new(vec![id_lam(), ez()]).unwrap();
    assert_eq!(var_sub(&Expr::suc(Expr::Zero, o()), &sub2), id_lam());

    assert_eq!(id_ren(&Con::empty()).entries(), &[] as &[Expr]);
    assert_eq!(id_ren(&con(&[o()])).entries(), &[Expr::Zero]);
    assert_eq!(suc_tm(&ez(), &o(), &con(&[o()])), Expr::embed(one));
}

#[test]
fn explicit_terms() {
    let g = con(&[o()]);
    assert_eq!(infer_itm(&g, &ITm::pi1(ISub::Id(g.clone()))), Some(o()));
    assert_eq!(infer_isub(&Con::empty(), &ISub::Eps), Some(Con::empty()));
    assert_eq!(infer_isub(&g, &ISub::Id(con(&[o(), o()]))), None);

    assert_eq!(i_zero(&g), ITm::pi1(ISub::Id(g.clone())));
    assert_eq!(i_wk(&g), ISub::pi0(ISub::Id(g.clone())));
    assert_eq!(
        i_lift(ISub::Eps, &o(), &Con::empty()),
        ISub::ext(ISub::comp(ISub::Eps, ISub::pi0(ISub::Id(g.clone()))), ITm::pi1(ISub::Id(g)))
    );
    assert_eq!(equation_catalog().len(), 16);
}

#[test]
fn normalizer_and_embedding() {
    let g = con(&[o()]);
    let zero = ITm::pi1(ISub::Id(g.clone()));
    assert_eq!(norm(&g, &zero), ez());
    assert_eq!(norm(&Con::empty(), &ITm::lam(o(), zero.clone())), id_lam());
    let inner = ITm::pi1(ISub::Id(con(&[o(), o()])));
    let t0 = ITm::app(ITm::lam(o(), inner.clone()), zero.clone());
    assert_eq!(norm(&g, &ITm::sub_apply(t0.clone(), ISub::Id(g.clone()))), norm(&g, &t0));

    assert_eq!(norm_sub(&g, &ISub::Id(g.clone())), t(vec![ez()]));
    assert_eq!(norm_sub(&g, &ISub::Eps), t(vec![]));
    assert_eq!(norm_sub(&g, &ISub::pi0(ISub::ext(ISub::Eps, zero.clone()))), t(vec![]));

    assert_eq!(embed(&g, &Expr::Zero), zero);
    assert_eq!(embed(&g, &ez()), zero);
    let h = con(&[oo(), o()]);
    let a = Expr::embed(Expr::suc(Expr::Zero, o()));
    assert_eq!(embed(&h, &Expr::app(a.clone(), ez())), ITm::app(embed(&h, &a), embed(&h, &ez())));

    assert_eq!(decide_eq(&g, &ITm::sub_apply(zero.clone(), ISub::Id(g.clone())), &zero), Ok(true));
    let f = embed(&h, &a);
    let x = embed(&h, &ez());
    let d = ISub::Id(h.clone());
    assert_eq!(
        decide_eq(
            &h,
            &ITm::sub_apply(ITm::app(f.clone(), x.clone()), d.clone()),
            &ITm::app(ITm::sub_apply(f, d.clone()), ITm::sub_apply(x, d))
        ),
        Ok(true)
    );
    // different types are an error, not a verdict
    assert!(matches!(decide_eq(&g, &zero, &ITm::lam(o(), inner)), Err(EqError::TypeMismatch { .. })));
    let two = con(&[o(), o()]);
    let outer = ITm::pi1(ISub::pi0(ISub::Id(two.clone())));
    assert_eq!(decide_eq(&two, &ITm::pi1(ISub::Id(two.clone())), &outer), Ok(false));
}

/// Closed `o -> o` terms of at most 4 constructors; a regression value.
const CLOSED_ENDO_TERMS: usize = 1;

#[test]
fn enumeration() {
    let cfg = |d| EnumConfig { max_type_depth: d, ..EnumConfig::default() };
    assert_eq!(enum_types(&cfg(0)), vec![o()]);
    assert_eq!(enum_types(&cfg(1)), vec![o(), oo()]);
    assert_eq!(enum_types(&cfg(2)).len(), 5);

    let c = EnumConfig::default();
    assert_eq!(enum_exprs(&c, &con(&[o()]), &o(), Sort::V, 6), vec![Expr::Zero]);
    let two = enum_exprs(&c, &con(&[o(), o()]), &o(), Sort::V, 6);
    assert_eq!(two.len(), 2);
    assert!(two.contains(&Expr::Zero) && two.contains(&Expr::suc(Expr::Zero, o())));
    let closed = enum_exprs(&c, &Con::empty(), &oo(), Sort::T, 4);
    assert!(closed.contains(&id_lam()));
    assert!(closed.iter().all(|e| infer_expr(&Con::empty(), e) == Some(oo())));
    assert_eq!(closed.len(), CLOSED_ENDO_TERMS);
    // V-sorted count at a type is the number of its occurrences in the context
    let g = con(&[o(), oo(), o()]);
    for ty in [o(), oo()] {
        let n = g.types().iter().filter(|t| **t == ty).count();
        assert_eq!(enum_exprs(&c, &g, &ty, Sort::V, 6).len(), n);
    }

    assert_eq!(enum_subs(&c, &con(&[o()]), &Con::empty(), Sort::V, 4), vec![v(vec![])]);
    assert_eq!(enum_subs(&c, &con(&[o()]), &con(&[o()]), Sort::V, 4), vec![v(vec![Expr::Zero])]);
    assert_eq!(enum_subs(&c, &con(&[o(), o()]), &con(&[o()]), Sort::V, 4).len(), 2);
}

#[test]
fn harness_self_test() {
    let g = con(&[o(), o()]);
    let xs = enum_exprs(&EnumConfig::default(), &g, &o(), Sort::V, 3);
    let bad = laws::check_equation("wrong", xs, |x| x.clone(), |x| Expr::suc(x.clone(), o()), |x| format!("x = {x}"));
    assert!(!bad.holds());
    assert_eq!(bad.checked, 1);
    let good = laws::check_equation(
        "[id]",
        enum_exprs(&EnumConfig::default(), &g, &o(), Sort::T, 4),
        |x| subst_apply(x, &id_sub(&g), &g),
        |x| x.clone(),
        |x| format!("x = {x}"),
    );
    assert!(good.holds() && good.checked > 0);
}

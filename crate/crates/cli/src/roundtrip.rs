//! Exhaustive parse-after-render check over enumerated values.

use sortsubst::enumerate::{enum_contexts, enum_types, EnumConfig, Enumerator};

use crate::parse::{parse_con, parse_expr, parse_isub, parse_itm, parse_ty};

/// How many values of each kind survived `parse(render(v)) == v`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RoundTrip {
    pub types: u64,
    pub contexts: u64,
    pub exprs: u64,
    pub itms: u64,
    pub isubs: u64,
}

impl RoundTrip {
    pub fn total(&self) -> u64 {
        self.types + self.contexts + self.exprs + self.itms + self.isubs
    }
}

fn mismatch(kind: &str, text: &str, got: impl std::fmt::Debug, want: impl std::fmt::Debug) -> String {
    format!("{kind} `{text}` parsed back as {got:?}, expected {want:?}")
}

/// Checks every type, context, expression, explicit term and explicit
/// substitution within `cfg`, returning the first failure.
pub fn check_round_trip(cfg: &EnumConfig) -> Result<RoundTrip, String> {
    let mut n = RoundTrip::default();
    for ty in enum_types(cfg) {
        let text = ty.to_string();
        match parse_ty(&text) {
            Ok(back) if back == ty => n.types += 1,
            other => return Err(mismatch("type", &text, other, ty)),
        }
    }
    let mut en = Enumerator::new(cfg);
    for ctx in enum_contexts(cfg) {
        let text = ctx.to_string();
        match parse_con(&text) {
            Ok(back) if back == ctx => n.contexts += 1,
            other => return Err(mismatch("context", &text, other, ctx)),
        }
        for &sort in &cfg.sorts {
            for (ty, e) in en.all_exprs(&ctx, sort, cfg.max_expr_size) {
                let text = e.to_string();
                match parse_expr(&text, &ctx) {
                    Ok(back) if back == (e.clone(), ty.clone()) => n.exprs += 1,
                    other => return Err(mismatch(&format!("expression in {ctx}"), &text, other, (e, ty))),
                }
            }
        }
        for (ty, t) in en.itms(&ctx, cfg.max_itm_size) {
            let text = t.to_string();
            match parse_itm(&text, &ctx) {
                Ok(back) if back == (t.clone(), ty.clone()) => n.itms += 1,
                other => return Err(mismatch(&format!("explicit term in {ctx}"), &text, other, (t, ty))),
            }
        }
        for (tgt, s) in en.isubs(&ctx, cfg.max_itm_size) {
            let text = s.to_string();
            match parse_isub(&text, &ctx) {
                Ok(back) if back == (s.clone(), tgt.clone()) => n.isubs += 1,
                other => return Err(mismatch(&format!("explicit substitution from {ctx}"), &text, other, (s, tgt))),
            }
        }
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_round_trip() {
        let cfg = EnumConfig { max_ctx_len: 1, max_expr_size: 4, max_itm_size: 4, ..EnumConfig::default() };
        let n = check_round_trip(&cfg).unwrap();
        assert_eq!(n.types, 5);
        assert_eq!(n.contexts, 6);
        assert!(n.exprs > 0 && n.itms > 0 && n.isubs > 0);
    }
}

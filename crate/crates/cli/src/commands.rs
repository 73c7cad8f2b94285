//! Command implementations. Each returns its exit code and output instead
//! of printing, so tests can drive them directly.

use std::fmt::Write;
use std::time::Instant;

use serde::Serialize;
use sortsubst::enumerate::EnumConfig;
use sortsubst::laws::{registry, run_laws, run_random, LawReport, RandomConfig};
use sortsubst::random::{workload, Workload};
use sortsubst::{decide_eq, infer_expr, infer_itm, naive, norm, subst, Con};

use crate::parse::{parse_con, parse_expr, parse_itm, ParseError};

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn error(message: impl std::fmt::Display) -> Outcome {
        Outcome { code: 1, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn input_error(what: &str, text: &str, e: &ParseError) -> Outcome {
    let mut msg = format!("in {what}: {e}\n  {text}\n  ");
    let col = text[..e.span.start].rsplit('\n').next().map_or(0, |l| l.chars().count());
    let width = text[e.span.start..e.span.end].chars().count().max(1);
    msg.push_str(&" ".repeat(col));
    msg.push_str(&"^".repeat(width));
    Outcome::error(msg)
}

fn context(text: &str) -> Result<Con, Outcome> {
    parse_con(text).map_err(|e| input_error("--ctx", text, &e))
}

pub fn cmd_check(ctx: &str, term: &str, explicit: bool) -> Outcome {
    let ctx_v = match context(ctx) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let ty = if explicit {
        parse_itm(term, &ctx_v).map(|(t, ty)| (infer_itm(&ctx_v, &t), ty))
    } else {
        parse_expr(term, &ctx_v).map(|(e, ty)| (infer_expr(&ctx_v, &e), ty))
    };
    match ty {
        Ok((Some(inferred), _)) => Outcome::ok(format!("{inferred}\n")),
        Ok((None, _)) => Outcome::error("term elaborated but the kernel rejects it"),
        Err(e) => input_error("--term", term, &e),
    }
}

pub fn cmd_norm(ctx: &str, term: &str) -> Outcome {
    let ctx_v = match context(ctx) {
        Ok(c) => c,
        Err(o) => return o,
    };
    match parse_itm(term, &ctx_v) {
        Ok((t, _)) => Outcome::ok(format!("{}\n", norm(&ctx_v, &t))),
        Err(e) => input_error("--term", term, &e),
    }
}

/// Exit code 0 when equal, 2 when distinct.
pub fn cmd_eq(ctx: &str, lhs: &str, rhs: &str) -> Outcome {
    let ctx_v = match context(ctx) {
        Ok(c) => c,
        Err(o) => return o,
    };
    let l = match parse_itm(lhs, &ctx_v) {
        Ok((t, _)) => t,
        Err(e) => return input_error("--lhs", lhs, &e),
    };
    let r = match parse_itm(rhs, &ctx_v) {
        Ok((t, _)) => t,
        Err(e) => return input_error("--rhs", rhs, &e),
    };
    match decide_eq(&ctx_v, &l, &r) {
        Ok(equal) => {
            let verdict = if equal { "EQUAL" } else { "DISTINCT" };
            let out = format!("{verdict}\nlhs: {}\nrhs: {}\n", norm(&ctx_v, &l), norm(&ctx_v, &r));
            Outcome { code: if equal { 0 } else { 2 }, stdout: out, stderr: String::new() }
        }
        Err(e) => Outcome::error(e),
    }
}

#[derive(Clone, Debug, Default)]
pub struct LawsOptions {
    pub bounds: EnumConfig,
    pub only: Vec<String>,
    pub json: bool,
    pub timings: bool,
    /// Additional seeded random instances per randomized law; 0 disables.
    pub random: u64,
    pub seed: u64,
}

#[derive(Serialize)]
struct CounterexampleJson<'a> {
    instance: &'a str,
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Serialize)]
struct LawJson<'a> {
    law: &'a str,
    checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<CounterexampleJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u64>,
}

fn law_json(r: &LawReport, timings: bool) -> LawJson<'_> {
    LawJson {
        law: &r.law,
        checked: r.checked,
        counterexample: r.counterexample.as_ref().map(|c| CounterexampleJson {
            instance: &c.instance,
            lhs: &c.lhs,
            rhs: &c.rhs,
        }),
        elapsed_ms: timings.then_some(r.elapsed.as_millis() as u64),
    }
}

pub fn cmd_laws(opts: &LawsOptions) -> Outcome {
    let mut laws = registry();
    if !opts.only.is_empty() {
        for name in &opts.only {
            if !laws.iter().any(|l| &l.name == name) {
                return Outcome::error(format!("no law named `{name}`"));
            }
        }
        laws.retain(|l| opts.only.contains(&l.name));
    }
    let suite = run_laws(&opts.bounds, &laws);
    let mut reports = suite.laws;
    if opts.random > 0 {
        let cfg = RandomConfig { seed: opts.seed, instances: opts.random, ..RandomConfig::default() };
        reports.extend(run_random(&cfg).into_iter().map(|mut r| {
            r.law = format!("random:{}", r.law);
            r
        }));
    }
    let failed = reports.iter().filter(|r| !r.holds()).count();
    let d = &suite.depth;
    let depth_line = if d.enabled {
        format!(
            "depth monitor: {} top-level calls, max depth {}, max depth/budget {}.{:03}, {} violations",
            d.top_level_calls,
            d.max_depth,
            d.max_ratio_permille / 1000,
            d.max_ratio_permille % 1000,
            d.violations
        )
    } else {
        "depth monitor: off in this build".to_string()
    };
    let code = i32::from(failed > 0 || d.violations > 0);
    if opts.json {
        let items: Vec<_> = reports.iter().map(|r| law_json(r, opts.timings)).collect();
        let mut out = serde_json::to_string_pretty(&items).expect("plain data serializes");
        out.push('\n');
        return Outcome { code, stdout: out, stderr: format!("{depth_line}\n") };
    }
    let mut out = String::new();
    let width = reports.iter().map(|r| r.law.chars().count()).max().unwrap_or(0);
    for r in &reports {
        let pad = " ".repeat(width - r.law.chars().count());
        let verdict = if r.holds() { "PASS" } else { "FAIL" };
        let _ = write!(out, "{verdict}  {}{pad}  {:>9}", r.law, r.checked);
        if opts.timings {
            let _ = write!(out, "  {:>8} ms", r.elapsed.as_millis());
        }
        out.push('\n');
        if let Some(c) = &r.counterexample {
            let _ = writeln!(out, "      instance: {}\n      lhs: {}\n      rhs: {}", c.instance, c.lhs, c.rhs);
        }
    }
    let _ = writeln!(out, "{depth_line}");
    let _ = writeln!(out, "{} laws, {} hold, {} fail", reports.len(), reports.len() - failed, failed);
    Outcome { code, stdout: out, stderr: String::new() }
}

/// One engine's run on one benchmark input.
#[derive(Clone, Debug, Serialize)]
pub struct EngineRun {
    pub engine: &'static str,
    pub wall_ms: f64,
    pub visits: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub size: usize,
    /// `renaming` or `substitution`.
    pub operation: &'static str,
    pub term_nodes: usize,
    pub sub_nodes: usize,
    pub factored: EngineRun,
    pub naive: EngineRun,
}

fn time_engine<T>(engine: &'static str, visits: fn() -> u64, reset: fn(), run: impl Fn() -> T) -> (T, EngineRun) {
    reset();
    let start = Instant::now();
    let out = run();
    let wall_ms = start.elapsed().as_secs_f64() * 1000.0;
    (out, EngineRun { engine, wall_ms, visits: visits() })
}

/// Runs both engines on the seeded workload of each size. Fails if they
/// ever disagree.
pub fn bench_rows(sizes: &[usize], seed: u64) -> Result<Vec<BenchRow>, String> {
    let mut rows = Vec::new();
    for &size in sizes {
        let w: Workload = workload(size, seed);
        for (operation, ys) in [("renaming", &w.renaming), ("substitution", &w.substitution)] {
            let (fast, factored) = time_engine("factored", subst::visits, subst::reset_visits, || {
                sortsubst::subst_apply(&w.term, ys, &w.src)
            });
            let (slow, naive_run) =
                time_engine("naive", naive::visits, naive::reset_visits, || naive::apply_dispatch(&w.term, ys, &w.src));
            if fast != slow {
                return Err(format!("engines disagree on the {operation} input of size {size} (seed {seed})"));
            }
            rows.push(BenchRow {
                size,
                operation,
                term_nodes: w.term.size(),
                sub_nodes: ys.size(),
                factored,
                naive: naive_run,
            });
        }
    }
    Ok(rows)
}

pub fn cmd_bench(sizes: &[usize], seed: u64, json: bool) -> Outcome {
    let rows = match bench_rows(sizes, seed) {
        Ok(rows) => rows,
        Err(e) => return Outcome::error(e),
    };
    if json {
        let mut out = serde_json::to_string_pretty(&rows).expect("plain data serializes");
        out.push('\n');
        return Outcome::ok(out);
    }
    let mut out =
        String::from("size  operation     term  subst   factored ms   naive ms   factored visits   naive visits\n");
    for r in &rows {
        let _ = writeln!(
            out,
            "{:<5} {:<12} {:>5} {:>6} {:>13.3} {:>10.3} {:>17} {:>14}",
            r.size,
            r.operation,
            r.term_nodes,
            r.sub_nodes,
            r.factored.wall_ms,
            r.naive.wall_ms,
            r.factored.visits,
            r.naive.visits
        );
    }
    out.push_str("outputs identical on every input\n");
    Outcome::ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_reports_types_and_errors() {
        let out = cmd_check("[o -> o, o]", "`#1 `#0", false);
        assert_eq!((out.code, out.stdout.as_str()), (0, "o\n"));
        let out = cmd_check("[o]", "\\(o). p1 id", true);
        assert_eq!(out.stdout, "o -> o\n");
        let out = cmd_check("[o]", "#3", false);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("type error"), "{}", out.stderr);
        let out = cmd_check("[o", "#0", false);
        assert_eq!(out.code, 1);
        assert!(out.stderr.contains("syntax error"));
    }

    #[test]
    fn norm_and_eq() {
        let out = cmd_norm("[]", "\\(o). p1 id");
        assert_eq!((out.code, out.stdout.as_str()), (0, "\\(o). `#0\n"));
        let out = cmd_eq("[o]", "(p1 id)[id]", "p1 id");
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("EQUAL\n"));
        let out = cmd_eq("[o, o]", "p1 id", "p1 p0 id");
        assert_eq!(out.code, 2);
        assert!(out.stdout.starts_with("DISTINCT\n"));
        let out = cmd_eq("[o]", "p1 id", "\\(o). p1 id");
        assert_eq!(out.code, 1);
    }

    #[test]
    fn bench_agrees() {
        let rows = bench_rows(&[10, 50], 1).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.factored.visits > 0 && r.naive.visits > 0));
    }
}

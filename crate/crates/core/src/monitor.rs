//! Recursion-depth monitor for the substitution engine.
//!
//! Every recursive engine call opens a [`Frame`]. The outermost frame on a
//! thread fixes a budget of twice the node count of that call's inputs;
//! any nested frame deeper than the budget is recorded as a violation.
//! Node counts include the list constructors of contexts (`•`, `▷`) and
//! substitutions (`ε`, `,`) as well as type nodes.
//!
//! Active with debug assertions or the `depth-monitor` feature; otherwise
//! every function here compiles to nothing.

use crate::syntax::{Con, Expr, Ty};

/// Aggregate statistics since the last [`reset`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DepthReport {
    pub enabled: bool,
    /// Outermost engine calls observed.
    pub top_level_calls: u64,
    /// Deepest nesting observed.
    pub max_depth: usize,
    /// Largest `depth / budget` ratio observed, in thousandths.
    pub max_ratio_permille: u64,
    pub violations: u64,
    /// `(operation, depth, budget)` of the first violation.
    pub first_violation: Option<(&'static str, usize, usize)>,
}

pub(crate) fn ty_nodes(ty: &Ty) -> usize {
    match ty {
        Ty::Base => 1,
        Ty::Arrow(a, b) => 1 + ty_nodes(a) + ty_nodes(b),
    }
}

pub(crate) fn con_nodes(ctx: &Con) -> usize {
    1 + ctx.types().iter().map(|t| 1 + ty_nodes(t)).sum::<usize>()
}

pub(crate) fn list_nodes(entries: &[Expr]) -> usize {
    1 + entries.iter().map(|e| 1 + e.size()).sum::<usize>()
}

#[cfg(any(debug_assertions, feature = "depth-monitor"))]
mod imp {
    use super::DepthReport;
    use std::cell::Cell;
    use std::sync::Mutex;

    thread_local! {
        static DEPTH: Cell<usize> = const { Cell::new(0) };
        static BUDGET: Cell<usize> = const { Cell::new(0) };
    }

    static STATS: Mutex<DepthReport> = Mutex::new(DepthReport {
        enabled: true,
        top_level_calls: 0,
        max_depth: 0,
        max_ratio_permille: 0,
        violations: 0,
        first_violation: None,
    });

    // Per-thread scratch merged into STATS when the outermost frame closes.
    thread_local! {
        static LOCAL_MAX: Cell<usize> = const { Cell::new(0) };
        static LOCAL_VIOLATION: Cell<Option<(&'static str, usize)>> = const { Cell::new(None) };
        static LOCAL_VIOLATIONS: Cell<u64> = const { Cell::new(0) };
    }

    pub struct Frame {
        _private: (),
    }

    #[inline]
    pub fn enter(op: &'static str, input_nodes: impl FnOnce() -> usize) -> Frame {
        let depth = DEPTH.with(|d| {
            let v = d.get() + 1;
            d.set(v);
            v
        });
        if depth == 1 {
            BUDGET.with(|b| b.set(2 * input_nodes()));
            LOCAL_MAX.with(|m| m.set(1));
            LOCAL_VIOLATIONS.with(|v| v.set(0));
            LOCAL_VIOLATION.with(|v| v.set(None));
        } else {
            LOCAL_MAX.with(|m| m.set(m.get().max(depth)));
        }
        let budget = BUDGET.with(Cell::get);
        if depth > budget {
            LOCAL_VIOLATIONS.with(|v| v.set(v.get() + 1));
            LOCAL_VIOLATION.with(|v| {
                if v.get().is_none() {
                    v.set(Some((op, depth)));
                }
            });
        }
        Frame { _private: () }
    }

    impl Drop for Frame {
        fn drop(&mut self) {
            let depth = DEPTH.with(|d| {
                let v = d.get() - 1;
                d.set(v);
                v
            });
            if depth == 0 {
                let budget = BUDGET.with(Cell::get);
                let max = LOCAL_MAX.with(Cell::get);
                let violations = LOCAL_VIOLATIONS.with(Cell::get);
                let first = LOCAL_VIOLATION.with(Cell::get);
                let mut stats = STATS.lock().unwrap_or_else(|e| e.into_inner());
                stats.top_level_calls += 1;
                stats.max_depth = stats.max_depth.max(max);
                let ratio = (max as u64 * 1000) / budget.max(1) as u64;
                stats.max_ratio_permille = stats.max_ratio_permille.max(ratio);
                stats.violations += violations;
                if stats.first_violation.is_none() {
                    stats.first_violation = first.map(|(op, d)| (op, d, budget));
                }
            }
        }
    }

    pub fn reset() {
        let mut stats = STATS.lock().unwrap_or_else(|e| e.into_inner());
        *stats = DepthReport { enabled: true, ..DepthReport::default() };
    }

    pub fn report() -> DepthReport {
        STATS.lock().unwrap_or_else(|e| e.into_inner()).clone()
    }
}

#[cfg(not(any(debug_assertions, feature = "depth-monitor")))]
mod imp {
    use super::DepthReport;

    pub struct Frame;

    #[inline(always)]
    pub fn enter(_op: &'static str, _input_nodes: impl FnOnce() -> usize) -> Frame {
        Frame
    }

    pub fn reset() {}

    pub fn report() -> DepthReport {
        DepthReport::default()
    }
}

pub(crate) use imp::enter;
pub use imp::{report, reset};

/// Whether frames are being recorded in this build.
pub fn enabled() -> bool {
    cfg!(any(debug_assertions, feature = "depth-monitor"))
}

//! Inputs shared by the engine benchmarks.

use sortsubst::random::workload;
use sortsubst::{Con, Expr, SubList};

/// One benchmark case: apply `ys` to `term`, where `ys` maps out of `src`.
pub struct Input {
    pub size: usize,
    /// `renaming` or `substitution`.
    pub operation: &'static str,
    pub term: Expr,
    pub ys: SubList,
    pub src: Con,
}

impl Input {
    pub fn label(&self) -> String {
        format!("{}/{}", self.operation, self.size)
    }
}

/// A renaming and a substitution case for each size, seeded.
pub fn inputs(sizes: &[usize], seed: u64) -> Vec<Input> {
    let mut out = Vec::new();
    for &size in sizes {
        let w = workload(size, seed);
        for (operation, ys) in [("renaming", w.renaming.clone()), ("substitution", w.substitution.clone())] {
            out.push(Input { size, operation, term: w.term.clone(), ys, src: w.src.clone() });
        }
    }
    out
}

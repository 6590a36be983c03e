//! Pass/fail reports with bounded, deterministic counterexample lists.

use crate::field::FieldElem;
use crate::linmap::{unflatten, LinMap};

pub const DEFAULT_VIOLATION_CAP: usize = 16;

/// One failing basis input: the two sides of an identity evaluated on
/// the basis tensor with multi-index `index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub index: Vec<usize>,
    pub lhs: Vec<FieldElem>,
    pub rhs: Vec<FieldElem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomStatus {
    pub axiom: String,
    pub failures: usize,
}

impl AxiomStatus {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

/// Outcome of a checker. Axioms are listed in evaluation order; within an
/// axiom, violations follow the lexicographic order of basis multi-indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    axioms: Vec<AxiomStatus>,
    violations: Vec<Violation>,
    cap: usize,
}

impl Default for CheckReport {
    fn default() -> Self {
        CheckReport::new()
    }
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::with_cap(DEFAULT_VIOLATION_CAP)
    }

    /// A report keeping at most `cap` counterexamples (at least one).
    pub fn with_cap(cap: usize) -> CheckReport {
        CheckReport {
            axioms: Vec::new(),
            violations: Vec::new(),
            cap: cap.max(1),
        }
    }

    pub fn pass(&self) -> bool {
        self.violations.is_empty() && self.axioms.iter().all(AxiomStatus::pass)
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn axioms(&self) -> &[AxiomStatus] {
        &self.axioms
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `Some(pass)` if `axiom` was evaluated.
    pub fn status(&self, axiom: &str) -> Option<bool> {
        self.axioms.iter().find(|a| a.axiom == axiom).map(AxiomStatus::pass)
    }

    pub fn failed(&self, axiom: &str) -> bool {
        self.status(axiom) == Some(false)
    }

    pub fn failed_axioms(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|a| !a.pass())
            .map(|a| a.axiom.as_str())
            .collect()
    }

    fn entry(&mut self, axiom: &str) -> &mut AxiomStatus {
        let pos = match self.axioms.iter().position(|a| a.axiom == axiom) {
            Some(p) => p,
            None => {
                self.axioms.push(AxiomStatus {
                    axiom: axiom.to_string(),
                    failures: 0,
                });
                self.axioms.len() - 1
            }
        };
        &mut self.axioms[pos]
    }

    /// Marks `axiom` as evaluated without recording anything.
    pub fn touch(&mut self, axiom: &str) {
        self.entry(axiom);
    }

    pub fn record(&mut self, axiom: &str, index: Vec<usize>, lhs: Vec<FieldElem>, rhs: Vec<FieldElem>) {
        self.entry(axiom).failures += 1;
        if self.violations.len() < self.cap {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                index,
                lhs,
                rhs,
            });
        }
    }

    /// Compares two maps column by column. Column `c` is the value of each
    /// side on the basis tensor `unflatten(c, input_dims)`.
    pub fn compare(&mut self, axiom: &str, lhs: &LinMap, rhs: &LinMap, input_dims: &[usize]) {
        self.touch(axiom);
        debug_assert_eq!(lhs.cols(), input_dims.iter().product::<usize>());
        if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
            self.record(axiom, Vec::new(), Vec::new(), Vec::new());
            return;
        }
        for c in 0..lhs.cols() {
            let differs = (0..lhs.rows()).any(|r| lhs.get(r, c) != rhs.get(r, c));
            if differs {
                self.record(axiom, unflatten(c, input_dims), lhs.column(c), rhs.column(c));
            }
        }
    }

    /// Compares two vectors that do not depend on a basis input.
    pub fn compare_vectors(&mut self, axiom: &str, lhs: &[FieldElem], rhs: &[FieldElem]) {
        self.touch(axiom);
        if lhs != rhs {
            self.record(axiom, Vec::new(), lhs.to_vec(), rhs.to_vec());
        }
    }

    /// Appends another report, keeping this report's cap.
    pub fn merge(&mut self, other: CheckReport) {
        for a in other.axioms {
            self.entry(&a.axiom).failures += a.failures;
        }
        for v in other.violations {
            if self.violations.len() < self.cap {
                self.violations.push(v);
            }
        }
    }
}

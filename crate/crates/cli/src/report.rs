//! Machine-readable reports: one entry per axiom id, in evaluation order.

use std::time::Duration;

use homcat_core::{CheckReport, FieldElem};
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: Option<String>,
    pub index: Vec<usize>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomEntry {
    pub axiom_id: String,
    pub failures: usize,
    pub counterexample: Option<Counterexample>,
}

impl AxiomEntry {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

/// Accumulates checker reports, possibly over several instances.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReportFile {
    pub command: Vec<String>,
    pub axioms: Vec<AxiomEntry>,
}

fn strings(xs: &[FieldElem]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

impl ReportFile {
    pub fn new(command: Vec<String>) -> ReportFile {
        ReportFile {
            command,
            axioms: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.axioms.iter().all(AxiomEntry::pass)
    }

    pub fn entry(&self, axiom_id: &str) -> Option<&AxiomEntry> {
        self.axioms.iter().find(|a| a.axiom_id == axiom_id)
    }

    /// Adds a checker report; `instance` names the inputs it was run on.
    pub fn absorb(&mut self, instance: Option<String>, report: &CheckReport) {
        for status in report.axioms() {
            let pos = match self.axioms.iter().position(|a| a.axiom_id == status.axiom) {
                Some(p) => p,
                None => {
                    self.axioms.push(AxiomEntry {
                        axiom_id: status.axiom.clone(),
                        failures: 0,
                        counterexample: None,
                    });
                    self.axioms.len() - 1
                }
            };
            let entry = &mut self.axioms[pos];
            entry.failures += status.failures;
            if entry.counterexample.is_none() {
                entry.counterexample =
                    report
                        .violations()
                        .iter()
                        .find(|v| v.axiom == status.axiom)
                        .map(|v| Counterexample {
                            instance: instance.clone(),
                            index: v.index.clone(),
                            lhs: strings(&v.lhs),
                            rhs: strings(&v.rhs),
                        });
            }
        }
    }

    pub fn to_json(&self, elapsed: Duration) -> Value {
        let axioms = self
            .axioms
            .iter()
            .map(|a| {
                let mut obj = Map::new();
                obj.insert("axiom_id".into(), json!(a.axiom_id));
                obj.insert("pass".into(), json!(a.pass()));
                obj.insert("failures".into(), json!(a.failures));
                if let Some(c) = &a.counterexample {
                    let mut ce = Map::new();
                    if let Some(i) = &c.instance {
                        ce.insert("instance".into(), json!(i));
                    }
                    ce.insert("index".into(), json!(c.index));
                    ce.insert("lhs".into(), json!(c.lhs));
                    ce.insert("rhs".into(), json!(c.rhs));
                    obj.insert("counterexample".into(), Value::Object(ce));
                }
                Value::Object(obj)
            })
            .collect();
        json!({
            "command": self.command,
            "axioms": Value::Array(axioms),
            "pass": self.pass(),
            "timing": { "elapsed_ms": elapsed.as_secs_f64() * 1000.0 },
        })
    }

    /// One line per failing axiom, then a total.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for a in self.axioms.iter().filter(|a| !a.pass()) {
            out.push_str(&format!("FAIL {} ({} failing inputs)", a.axiom_id, a.failures));
            if let Some(c) = &a.counterexample {
                if let Some(i) = &c.instance {
                    out.push_str(&format!(" at {i}"));
                }
                out.push_str(&format!(
                    " index {:?}: [{}] != [{}]",
                    c.index,
                    c.lhs.join(", "),
                    c.rhs.join(", ")
                ));
            }
            out.push('\n');
        }
        let failed = self.axioms.iter().filter(|a| !a.pass()).count();
        out.push_str(&format!(
            "{} axioms checked, {} failed: {}\n",
            self.axioms.len(),
            failed,
            if failed == 0 { "PASS" } else { "FAIL" }
        ));
        out
    }
}

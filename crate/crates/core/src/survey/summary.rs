use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::structure::Rule;

use super::Mode;

/// Running totals over the classes written so far.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub classes: u64,
    pub by_cop_number: BTreeMap<usize, u64>,
    pub by_rule: BTreeMap<Rule, u64>,
    /// Canonical graph6 of every class at or above the threshold, in order.
    pub at_threshold: Vec<String>,
    pub states_explored: u64,
    /// Classes whose solved cop number fell below the structural lower bound.
    pub bound_violations: Vec<String>,
}

impl Totals {
    pub fn pruned(&self) -> u64 {
        self.by_rule.values().sum()
    }

    pub fn with_cop_number(&self, pred: impl Fn(usize) -> bool) -> u64 {
        self.by_cop_number
            .iter()
            .filter(|(&c, _)| pred(c))
            .map(|(_, &v)| v)
            .sum()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub seed: u64,
    pub requested: usize,
    /// Pruned classes that were re-solved.
    pub solved: usize,
    pub by_cop_number: BTreeMap<usize, u64>,
    /// Sampled pruned classes that need at least three cops or whose
    /// certificate does not re-check, as graph6.
    pub contradictions: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveySummary {
    pub n: usize,
    pub mode: Mode,
    pub threshold: usize,
    pub k_max: usize,
    /// Where the classes came from: "generator" or the input path.
    pub source: String,
    pub totals: Totals,
    pub audit: Option<AuditReport>,
    pub seconds: f64,
}

#[derive(Serialize)]
struct CsvRow {
    n: usize,
    mode: Mode,
    classes: u64,
    c1: u64,
    c2: u64,
    c3plus: u64,
    pruned: u64,
    seconds: String,
}

impl SurveySummary {
    pub fn c3plus(&self) -> u64 {
        self.totals.with_cop_number(|c| c >= 3)
    }

    /// Totals add up to the classes processed.
    pub fn is_balanced(&self) -> bool {
        self.totals.with_cop_number(|_| true) + self.totals.pruned() == self.totals.classes
    }

    pub fn has_contradictions(&self) -> bool {
        !self.totals.bound_violations.is_empty()
            || self
                .audit
                .as_ref()
                .is_some_and(|a| !a.contradictions.is_empty())
    }

    /// Writes the header and one row.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.serialize(CsvRow {
            n: self.n,
            mode: self.mode,
            classes: self.totals.classes,
            c1: self.totals.with_cop_number(|c| c == 1),
            c2: self.totals.with_cop_number(|c| c == 2),
            c3plus: self.c3plus(),
            pruned: self.totals.pruned(),
            seconds: format!("{:.3}", self.seconds),
        })?;
        w.flush()?;
        Ok(())
    }
}

impl fmt::Display for SurveySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = &self.totals;
        writeln!(
            f,
            "n = {}, mode = {}, source = {}",
            self.n, self.mode, self.source
        )?;
        writeln!(f, "classes: {}", t.classes)?;
        for (c, count) in &t.by_cop_number {
            writeln!(f, "  cop_number = {c}: {count}")?;
        }
        for (rule, count) in &t.by_rule {
            writeln!(f, "  pruned by {rule}: {count}")?;
        }
        writeln!(
            f,
            "cop_number >= {}: {}",
            self.threshold,
            t.at_threshold.len()
        )?;
        for g in &t.at_threshold {
            writeln!(f, "  {g}")?;
        }
        if let Some(a) = &self.audit {
            writeln!(
                f,
                "audit (seed {}): re-solved {} of {} requested pruned classes, {} contradictions",
                a.seed,
                a.solved,
                a.requested,
                a.contradictions.len()
            )?;
            for g in &a.contradictions {
                writeln!(f, "  contradiction: {g}")?;
            }
        }
        for g in &t.bound_violations {
            writeln!(f, "  below lower bound: {g}")?;
        }
        write!(f, "seconds: {:.3}", self.seconds)
    }
}

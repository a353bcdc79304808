//! Structural bounds on the cop number and sound "at most two cops" filters.
//!
//! Every filter that reports [`PruneVerdict::ProvedAtMost2`] carries a
//! certificate naming the rule and the witness vertices, so a failed audit
//! can be replayed by hand.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Girth, Graph, GraphError, VertexSet};
use crate::solver::safe_neighborhood;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundReason {
    Trivial,
    NotDismantleable,
    Girth5MinDegree,
}

impl fmt::Display for BoundReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundReason::Trivial => "trivial",
            BoundReason::NotDismantleable => "not-dismantleable",
            BoundReason::Girth5MinDegree => "girth5-min-degree",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub reason: BoundReason,
}

/// Largest of: 1, 2 when the graph is not dismantleable, and the minimum
/// degree when the girth is finite and at least 5.
pub fn lower_bound(g: &Graph) -> Result<LowerBound, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let mut best = LowerBound {
        value: 1,
        reason: BoundReason::Trivial,
    };
    if !g.dismantling_order()?.is_dismantleable() {
        best = LowerBound {
            value: 2,
            reason: BoundReason::NotDismantleable,
        };
    }
    if let Girth::Finite(girth) = g.girth() {
        let delta = g.min_degree();
        if girth >= 5 && delta > best.value {
            best = LowerBound {
                value: delta,
                reason: BoundReason::Girth5MinDegree,
            };
        }
    }
    Ok(best)
}

/// Which rule proved the bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// Some vertex has degree at least n − 5.
    #[serde(rename = "max-degree-n-5")]
    MaxDegree,
    /// A vertex of degree at least n − 6 whose non-neighborhood is not a 5-cycle.
    #[serde(rename = "codegree5-not-c5")]
    CodegreeFiveNotCycle,
    /// A vertex of degree at least n − 6 and a non-neighbor of degree at most 3.
    #[serde(rename = "codegree5-low-degree")]
    CodegreeFiveLowDegree,
    /// Ten vertices and maximum degree at least 4.
    #[serde(rename = "order10-max-degree4")]
    OrderTenDegreeFour,
    /// A maximum-degree vertex of degree n − 7, all non-neighbors of degree at
    /// most 3, and a non-neighborhood that is not a 6-cycle.
    #[serde(rename = "codegree6-not-c6")]
    CodegreeSixNotCycle,
}

impl Rule {
    pub const ALL: [Rule; 5] = [
        Rule::MaxDegree,
        Rule::CodegreeFiveNotCycle,
        Rule::CodegreeFiveLowDegree,
        Rule::OrderTenDegreeFour,
        Rule::CodegreeSixNotCycle,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Rule::MaxDegree => "max-degree-n-5",
            Rule::CodegreeFiveNotCycle => "codegree5-not-c5",
            Rule::CodegreeFiveLowDegree => "codegree5-low-degree",
            Rule::OrderTenDegreeFour => "order10-max-degree4",
            Rule::CodegreeSixNotCycle => "codegree6-not-c6",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.tag() == tag)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub rule: Rule,
    pub witness: Vec<usize>,
}

impl Certificate {
    /// Re-checks the rule's hypotheses on `g` for this witness.
    pub fn holds(&self, g: &Graph) -> bool {
        let n = g.n();
        let w = &self.witness;
        if w.iter().any(|&v| v >= n) {
            return false;
        }
        match (self.rule, w.as_slice()) {
            (Rule::MaxDegree, &[u]) => g.degree(u) + 5 >= n,
            (Rule::CodegreeFiveNotCycle, &[u]) => {
                g.degree(u) + 6 >= n && !g.induced_is_cycle(outside(g, u), 5)
            }
            (Rule::CodegreeFiveLowDegree, &[u, v]) => {
                g.degree(u) + 6 >= n && outside(g, u).contains(v) && g.degree(v) <= 3
            }
            (Rule::OrderTenDegreeFour, &[u]) => n == 10 && g.degree(u) >= 4,
            (Rule::CodegreeSixNotCycle, &[u]) => {
                let out = outside(g, u);
                g.degree(u) + 7 == n
                    && g.max_degree() == g.degree(u)
                    && out.iter().all(|v| g.degree(v) <= 3)
                    && !g.induced_is_cycle(out, 6)
            }
            _ => false,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.rule, self.witness)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PruneVerdict {
    ProvedAtMost2(Certificate),
    Unknown,
}

impl PruneVerdict {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            PruneVerdict::ProvedAtMost2(c) => Some(c),
            PruneVerdict::Unknown => None,
        }
    }
}

fn outside(g: &Graph, u: usize) -> VertexSet {
    g.vertices() - g.closed_neighbors(u)
}

/// First rule, in a fixed order, proving that two cops suffice.
pub fn prune_c_at_most_2(g: &Graph) -> Result<PruneVerdict, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    let delta_max = g.max_degree();
    let proved = |rule, witness| Ok(PruneVerdict::ProvedAtMost2(Certificate { rule, witness }));

    let hubs: Vec<usize> = (0..n).filter(|&u| g.degree(u) + 6 >= n).collect();
    if delta_max + 5 >= n {
        let u = (0..n).find(|&u| g.degree(u) == delta_max).unwrap();
        return proved(Rule::MaxDegree, vec![u]);
    }
    for &u in &hubs {
        if !g.induced_is_cycle(outside(g, u), 5) {
            return proved(Rule::CodegreeFiveNotCycle, vec![u]);
        }
    }
    for &u in &hubs {
        if let Some(v) = outside(g, u).iter().find(|&v| g.degree(v) <= 3) {
            return proved(Rule::CodegreeFiveLowDegree, vec![u, v]);
        }
    }
    if n == 10 && delta_max >= 4 {
        let u = (0..n).find(|&u| g.degree(u) == delta_max).unwrap();
        return proved(Rule::OrderTenDegreeFour, vec![u]);
    }
    if delta_max + 7 == n {
        for u in (0..n).filter(|&u| g.degree(u) == delta_max) {
            let out = outside(g, u);
            if out.iter().all(|v| g.degree(v) <= 3) && !g.induced_is_cycle(out, 6) {
                return proved(Rule::CodegreeSixNotCycle, vec![u]);
            }
        }
    }
    Ok(PruneVerdict::Unknown)
}

/// 3-regular on ten vertices with every non-neighborhood inducing a 6-cycle.
pub fn is_petersen_by_property(g: &Graph) -> bool {
    g.n() == 10 && g.is_regular(3) && (0..10).all(|u| g.induced_is_cycle(outside(g, u), 6))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct EndgameFlags {
    /// At most two safe vertices with at most 2k − 1 outside neighbors.
    pub small_safe_region: bool,
    /// Safe vertices all of degree at most 3, at most one of them of degree 3.
    pub low_degree_safe_region: bool,
}

/// Evaluates the two sufficient endgame conditions for the cops at `cops`
/// against a robber at `r`.
pub fn endgame_predicates(g: &Graph, cops: &[usize], r: usize) -> EndgameFlags {
    let k = cops.len();
    let safe = safe_neighborhood(g, cops, r);
    let boundary = g.open_neighborhood(safe);
    let degrees: Vec<usize> = safe.iter().map(|v| g.degree(v)).collect();
    EndgameFlags {
        small_safe_region: safe.len() <= 2 && boundary.len() < 2 * k,
        low_degree_safe_region: degrees.iter().all(|&d| d <= 3)
            && degrees.iter().filter(|&&d| d == 3).count() <= 1,
    }
}

use serde::{Deserialize, Serialize};

use crate::gft::MembershipReport;
use crate::special::BesselParams;

/// Relative slack under which a non-strict inequality still counts as
/// satisfied; the stated conditions include their equality cases.
pub const EQUALITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremId {
    ThmPe,
    ThmKe,
    ThmSe,
    #[serde(rename = "CorBessel_a")]
    CorBesselA,
    #[serde(rename = "CorBessel_b")]
    CorBesselB,
    #[serde(rename = "CorSpherical_a")]
    CorSphericalA,
    #[serde(rename = "CorSpherical_b")]
    CorSphericalB,
    CorLibera,
    ThmOmegaSe,
    ThmBkcChain,
    CorBkcBessel,
    #[serde(rename = "Ex_linear")]
    ExLinear,
    #[serde(rename = "Ex_product")]
    ExProduct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">")]
    Above,
    #[serde(rename = "!=")]
    NotEqual,
}

/// One hypothesis with its evaluated sides.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
    pub lhs: f64,
    pub relation: Relation,
    pub rhs: f64,
    /// Signed distance to the boundary, positive when the hypothesis holds.
    pub slack: f64,
}

impl Hypothesis {
    pub fn new(name: impl Into<String>, lhs: f64, relation: Relation, rhs: f64) -> Self {
        let tol = EQUALITY_TOL * rhs.abs().max(1.0);
        let (holds, slack) = match relation {
            Relation::AtMost => (lhs <= rhs + tol, rhs - lhs),
            Relation::AtLeast => (lhs >= rhs - tol, lhs - rhs),
            Relation::Below => (lhs < rhs, rhs - lhs),
            Relation::Above => (lhs > rhs, lhs - rhs),
            Relation::NotEqual => (lhs != rhs, (lhs - rhs).abs()),
        };
        Self { name: name.into(), holds, lhs, relation, rhs, slack }
    }

    /// A hypothesis decided by a sampled check passing.
    pub fn from_check(name: impl Into<String>, report: &MembershipReport) -> Self {
        Self {
            name: name.into(),
            holds: report.passed(),
            lhs: report.sup_value,
            relation: Relation::Below,
            rhs: report.threshold,
            slack: report.margin,
        }
    }
}

/// Hypothesis arithmetic and (optionally) a sampled confirmation of the
/// conclusion for one theorem instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<BesselParams>,
    pub hypotheses: Vec<Hypothesis>,
    /// Conjunction of all hypotheses.
    pub applicable: bool,
    /// Present only when requested and the hypotheses hold.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion_check: Option<MembershipReport>,
    /// Sampled checks backing numeric hypotheses or companion conclusions.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub supporting_checks: Vec<MembershipReport>,
}

impl TheoremReport {
    pub(crate) fn new(theorem: TheoremId, params: Option<BesselParams>, hypotheses: Vec<Hypothesis>) -> Self {
        let applicable = hypotheses.iter().all(|h| h.holds);
        Self {
            theorem,
            params,
            hypotheses,
            applicable,
            conclusion_check: None,
            supporting_checks: Vec::new(),
        }
    }

    pub(crate) fn push_hypothesis(&mut self, h: Hypothesis) {
        self.applicable &= h.holds;
        self.hypotheses.push(h);
    }

    /// `Some(true)` if the conclusion was checked and passed.
    pub fn conclusion_passed(&self) -> Option<bool> {
        self.conclusion_check.as_ref().map(MembershipReport::passed)
    }

    /// True when the theorem applied but its sampled conclusion failed.
    pub fn is_counterexample(&self) -> bool {
        self.applicable
            && (self.conclusion_check.as_ref().is_some_and(MembershipReport::failed)
                || self.supporting_checks.iter().any(MembershipReport::failed))
    }

    pub fn hypothesis(&self, name: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.name == name)
    }
}

//! Verification records and their serialization.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::Error;

fn decimal<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    #[serde(rename = "thm21")]
    Thm21,
    #[serde(rename = "thm31")]
    Thm31,
    #[serde(rename = "thm32")]
    Thm32,
    #[serde(rename = "cor31")]
    Cor31,
    #[serde(rename = "lemma31")]
    Lemma31,
    #[serde(rename = "thm33")]
    Thm33,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Thm21,
        TheoremId::Thm31,
        TheoremId::Thm32,
        TheoremId::Cor31,
        TheoremId::Lemma31,
        TheoremId::Thm33,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm21 => "thm21",
            TheoremId::Thm31 => "thm31",
            TheoremId::Thm32 => "thm32",
            TheoremId::Cor31 => "cor31",
            TheoremId::Lemma31 => "lemma31",
            TheoremId::Thm33 => "thm33",
        }
    }

    /// Whether the check is parameterized by a second order `m`.
    pub fn uses_m(self) -> bool {
        !matches!(self, TheoremId::Thm21 | TheoremId::Thm31)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown theorem id {s:?}")))
    }
}

/// Relation asserted between the directly computed value and the formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equality,
    /// direct value ≤ formula value
    AtMost,
}

impl Relation {
    pub fn holds(self, direct: &BigInt, formula: &BigInt) -> bool {
        match self {
            Relation::Equality => direct == formula,
            Relation::AtMost => direct <= formula,
        }
    }
}

/// The same bound evaluated under a second reading of an ambiguous symbol.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlternateReading {
    pub reading: String,
    #[serde(serialize_with = "decimal")]
    pub formula: BigInt,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub relation: Relation,
    /// Value computed from scratch on the graph itself.
    #[serde(serialize_with = "decimal")]
    pub oracle: BigInt,
    /// Value of the formula under test.
    #[serde(serialize_with = "decimal")]
    pub formula: BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reading: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alternate: Option<AlternateReading>,
    /// `metric(G ∪ H) >= metric(G) + metric(H)`, for union checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub superadditive: Option<bool>,
    /// The relation holds (under at least one reading, if there are two).
    pub matched: bool,
}

impl InstanceRecord {
    pub(crate) fn new(
        params: (usize, Option<usize>, Option<usize>),
        relation: Relation,
        oracle: BigInt,
        formula: BigInt,
    ) -> Self {
        let matched = relation.holds(&oracle, &formula);
        InstanceRecord {
            n: params.0,
            m: params.1,
            i: params.2,
            relation,
            oracle,
            formula,
            reading: None,
            alternate: None,
            superadditive: None,
            matched,
        }
    }

    pub(crate) fn with_alternate(mut self, reading: &str, alt: &str, formula: BigInt) -> Self {
        let holds = self.relation.holds(&self.oracle, &formula);
        self.reading = Some(reading.to_string());
        self.matched |= holds;
        self.alternate = Some(AlternateReading {
            reading: alt.to_string(),
            formula,
            holds,
        });
        self
    }

    fn sort_key(&self) -> (usize, usize, usize) {
        (self.n, self.m.unwrap_or(0), self.i.unwrap_or(0))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub theorem: TheoremId,
    pub summary: Summary,
    pub records: Vec<InstanceRecord>,
}

impl VerifyReport {
    /// Accepts records in any order and stores them sorted by parameters.
    pub fn from_records(theorem: TheoremId, mut records: Vec<InstanceRecord>) -> Self {
        records.sort_by_key(InstanceRecord::sort_key);
        let matched = records.iter().filter(|r| r.matched).count();
        VerifyReport {
            theorem,
            summary: Summary {
                total: records.len(),
                matched,
                mismatched: records.len() - matched,
            },
            records,
        }
    }

    pub fn all_matched(&self) -> bool {
        self.summary.mismatched == 0
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records.iter().filter(|r| !r.matched)
    }
}

/// Reports for several theorems from one sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub summary: Summary,
    pub reports: Vec<VerifyReport>,
}

impl SweepReport {
    pub fn new(reports: Vec<VerifyReport>) -> Self {
        let mut summary = Summary::default();
        for r in &reports {
            summary.total += r.summary.total;
            summary.matched += r.summary.matched;
            summary.mismatched += r.summary.mismatched;
        }
        SweepReport { summary, reports }
    }

    pub fn all_matched(&self) -> bool {
        self.summary.mismatched == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report json")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let _ = writeln!(
                out,
                "{:<8} {:>6} checked  {:>6} matched  {:>6} mismatched",
                r.theorem.as_str(),
                r.summary.total,
                r.summary.matched,
                r.summary.mismatched
            );
            for rec in r.mismatches().take(5) {
                let _ = writeln!(
                    out,
                    "    n={}{}{}: oracle {} vs formula {} ({:?})",
                    rec.n,
                    rec.m.map(|m| format!(" m={m}")).unwrap_or_default(),
                    rec.i.map(|i| format!(" i={i}")).unwrap_or_default(),
                    rec.oracle,
                    rec.formula,
                    rec.relation
                );
            }
            let hidden = r.summary.mismatched.saturating_sub(5);
            if hidden > 0 {
                let _ = writeln!(out, "    ... {hidden} more");
            }
        }
        let _ = writeln!(
            out,
            "total    {:>6} checked  {:>6} matched  {:>6} mismatched",
            self.summary.total, self.summary.matched, self.summary.mismatched
        );
        out
    }
}

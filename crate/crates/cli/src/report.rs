//! Report records and their deterministic JSON form.
//!
//! Per-criterion wall-clock timings are kept on the in-memory records for
//! human-readable output but never serialized: report JSON must be
//! byte-identical across runs and thread counts.

use gsep_core::criteria::{CriterionId, Verdict};
use gsep_core::oracle::{EntangledReason, OracleVerdict, SeparableReason, UnknownReason};
use serde::Serialize;
use std::fmt::Write as _;

pub const REPORT_SCHEMA: u32 = 1;

/// One criterion outcome with its diagnostic and timing.
#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: CriterionId,
    pub separable: bool,
    pub detail: String,
    pub micros: u128,
}

impl CriterionOutcome {
    pub fn from_verdict(id: CriterionId, verdict: &Verdict, micros: u128) -> Self {
        let (separable, detail) = match verdict {
            Verdict::Separable { witness, .. } => {
                let detail = match witness {
                    Some(w) => format!(
                        "feasible after {} iterations (gap {:e})",
                        w.iterations, w.gap
                    ),
                    None => String::new(),
                };
                (true, detail)
            }
            Verdict::Inconclusive { diagnostic } => (false, diagnostic.clone()),
        };
        Self {
            id,
            separable,
            detail,
            micros,
        }
    }
}

/// Witness summary: present exactly when a TH1/C1 witness exists.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessSummary {
    pub terms: usize,
    pub reconstruction_error: f64,
}

/// Oracle summary for reports.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub verdict: OracleVerdict,
    pub min_pt_eig: f64,
}

pub fn oracle_verdict_str(v: &OracleVerdict) -> String {
    match v {
        OracleVerdict::Separable(SeparableReason::PptConclusive2x2) => "separable(ppt-2x2)".into(),
        OracleVerdict::Separable(SeparableReason::ProductPureState) => {
            "separable(product-pure-state)".into()
        }
        OracleVerdict::Entangled(EntangledReason::Npt { .. }) => "entangled(npt)".into(),
        OracleVerdict::Entangled(EntangledReason::PureSchmidtRank { rank }) => {
            format!("entangled(schmidt-rank-{rank})")
        }
        OracleVerdict::Unknown(UnknownReason::PptButInconclusiveDims) => {
            "unknown(ppt-inconclusive-dims)".into()
        }
    }
}

/// Full per-input report.
#[derive(Debug, Clone)]
pub struct CriterionReport {
    /// Fixture id or `file:sha256:<hex>` content hash.
    pub input: String,
    pub cut: u32,
    pub criteria: Vec<CriterionOutcome>,
    pub oracle: Option<OracleOutcome>,
    pub witness: Option<WitnessSummary>,
    pub disagreements: Vec<DisagreementRecord>,
}

/// A criterion that claimed separability against an oracle entanglement
/// proof. `Unknown` oracle verdicts never count.
#[derive(Debug, Clone, Serialize)]
pub struct DisagreementRecord {
    pub input: String,
    pub cut: u32,
    pub criterion: String,
    pub criterion_verdict: String,
    pub oracle_verdict: String,
    pub min_pt_eig: f64,
    /// Full input serialization for replay.
    pub replay: String,
}

#[derive(Serialize)]
struct CriterionJson<'a> {
    id: &'a str,
    verdict: &'a str,
    detail: &'a str,
}

#[derive(Serialize)]
struct OracleJson {
    verdict: String,
    min_pt_eig: f64,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema: u32,
    input: &'a str,
    cut: u32,
    criteria: Vec<CriterionJson<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a WitnessSummary>,
    disagreements: &'a [DisagreementRecord],
}

impl CriterionReport {
    pub fn to_json_value(&self) -> serde_json::Value {
        let json = ReportJson {
            schema: REPORT_SCHEMA,
            input: &self.input,
            cut: self.cut,
            criteria: self
                .criteria
                .iter()
                .map(|c| CriterionJson {
                    id: c.id.as_str(),
                    verdict: if c.separable {
                        "separable"
                    } else {
                        "inconclusive"
                    },
                    detail: &c.detail,
                })
                .collect(),
            oracle: self.oracle.as_ref().map(|o| OracleJson {
                verdict: oracle_verdict_str(&o.verdict),
                min_pt_eig: o.min_pt_eig,
            }),
            witness: self.witness.as_ref(),
            disagreements: &self.disagreements,
        };
        serde_json::to_value(json).expect("report serializes")
    }

    /// Human-readable rendering, timings included.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}  (cut m={})", self.input, self.cut);
        for c in &self.criteria {
            let verdict = if c.separable {
                "separable"
            } else {
                "inconclusive"
            };
            let _ = write!(
                out,
                "  {:<20} {:<13} [{} us]",
                c.id.as_str(),
                verdict,
                c.micros
            );
            if c.detail.is_empty() {
                out.push('\n');
            } else {
                let _ = writeln!(out, " {}", c.detail);
            }
        }
        if let Some(oracle) = &self.oracle {
            let _ = writeln!(
                out,
                "  oracle: {} (min PT eigenvalue {:.6e})",
                oracle_verdict_str(&oracle.verdict),
                oracle.min_pt_eig
            );
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(
                out,
                "  witness: {} product terms, reconstruction error {:.3e}",
                w.terms, w.reconstruction_error
            );
        }
        for d in &self.disagreements {
            let _ = writeln!(
                out,
                "  DISAGREEMENT: {} claimed separable, oracle {} (min PT eig {:.6e})",
                d.criterion, d.oracle_verdict, d.min_pt_eig
            );
        }
        out
    }
}

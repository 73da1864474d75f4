//! JSON and text renderings of analysis results. Field order in the structs
//! is the key order in the output.

use std::fmt::Write as _;

use hypermat::classify::AnalysisReport;
use hypermat::degeneracy::{HintOutcome, KernelTriple};
use hypermat::polyalg::format_rational;
use hypermat::schemes::{P1Locus, PointDiagnosis, ProjPoint};
use hypermat::tensor::Axis;
use serde::Serialize;

pub const TOOL: &str = "hypermat";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn point(p: &ProjPoint) -> Vec<String> {
    p.coords().iter().map(format_rational).collect()
}

#[derive(Debug, Serialize)]
pub struct CertificateDocument {
    #[serde(rename = "P")]
    pub p: Vec<String>,
    #[serde(rename = "Q")]
    pub q: Vec<String>,
    #[serde(rename = "T")]
    pub t: Vec<String>,
}

impl From<&KernelTriple> for CertificateDocument {
    fn from(c: &KernelTriple) -> Self {
        CertificateDocument {
            p: point(&c.p),
            q: point(&c.q),
            t: point(&c.t),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DiagnosisDocument {
    pub axis: String,
    pub point: Vec<String>,
    pub on_scheme: bool,
    pub rank_at: usize,
    pub jacobian_rank: usize,
    pub degenerate: bool,
    pub bidegenerate: bool,
}

impl DiagnosisDocument {
    pub fn new(axis: Axis, p: &ProjPoint, d: &PointDiagnosis) -> Self {
        DiagnosisDocument {
            axis: axis.to_string(),
            point: point(p),
            on_scheme: d.on_scheme,
            rank_at: d.rank_at,
            jacobian_rank: d.jacobian_rank,
            degenerate: d.degenerate,
            bidegenerate: d.bidegenerate,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HintDocument {
    pub outcome: &'static str,
    #[serde(flatten)]
    pub diagnosis: DiagnosisDocument,
}

impl From<&HintOutcome> for HintDocument {
    fn from(h: &HintOutcome) -> Self {
        HintDocument {
            outcome: h.outcome,
            diagnosis: DiagnosisDocument::new(h.axis, &h.point, &h.diagnosis),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct QuadricDocument {
    pub gram_rank: usize,
    pub label: String,
}

#[derive(Debug, Serialize)]
pub struct SchemesDocument {
    #[serde(rename = "L")]
    pub l: Option<String>,
    #[serde(rename = "M")]
    pub m: Option<String>,
    #[serde(rename = "N")]
    pub n: Option<String>,
    #[serde(rename = "det_N")]
    pub det_n: Option<QuadricDocument>,
}

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub input_format: [usize; 3],
    pub axis_permutation: [usize; 3],
    pub format: [usize; 3],
    pub det_zero: Option<bool>,
    pub degenerate: &'static str,
    pub reason: String,
    /// In the axes of the sorted format.
    pub certificate: Option<CertificateDocument>,
    pub hints: Vec<HintDocument>,
    pub concise: bool,
    pub essential_format: [usize; 3],
    pub trk: Option<usize>,
    pub canonical_type: Option<&'static str>,
    pub branch_trace: Vec<String>,
    pub schemes: SchemesDocument,
}

impl From<&AnalysisReport> for ReportDocument {
    fn from(r: &AnalysisReport) -> Self {
        let d = &r.degeneracy;
        ReportDocument {
            tool: TOOL,
            version: VERSION,
            input_format: r.input_format,
            axis_permutation: r.axis_permutation,
            format: r.format,
            det_zero: r.det_zero,
            degenerate: d.status.code(),
            reason: d.reason.clone(),
            certificate: d.certificate.as_ref().map(CertificateDocument::from),
            hints: d.hints.iter().map(HintDocument::from).collect(),
            concise: r.concise,
            essential_format: r.essential_format.as_array(),
            trk: r.tensor_rank,
            canonical_type: r.canonical_type.map(|t| t.label()),
            branch_trace: r.branch_trace.clone(),
            schemes: SchemesDocument {
                l: r.schemes.l.as_ref().map(P1Locus::describe),
                m: r.schemes.m.as_ref().map(P1Locus::describe),
                n: r.schemes.n.as_ref().map(P1Locus::describe),
                det_n: r.schemes.det_n.map(|c| QuadricDocument {
                    gram_rank: c.gram_rank,
                    label: c.label.to_string(),
                }),
            },
        }
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn triple(f: [usize; 3]) -> String {
    format!("({},{},{})", f[0], f[1], f[2])
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "format            {} (input {})", triple(self.format), triple(self.input_format));
        let _ = writeln!(s, "det_zero          {}", opt(&self.det_zero));
        let _ = writeln!(s, "degenerate        {} ({})", self.degenerate, self.reason);
        if let Some(c) = &self.certificate {
            let _ = writeln!(
                s,
                "certificate       P=({}) Q=({}) T=({})",
                c.p.join(","),
                c.q.join(","),
                c.t.join(",")
            );
        }
        for h in &self.hints {
            let _ = writeln!(
                s,
                "hint              {}:({}) {}",
                h.diagnosis.axis,
                h.diagnosis.point.join(","),
                h.outcome
            );
        }
        let _ = writeln!(s, "concise           {}", self.concise);
        let _ = writeln!(s, "essential_format  {}", triple(self.essential_format));
        let _ = writeln!(s, "trk               {}", opt(&self.trk));
        let _ = writeln!(s, "canonical_type    {}", opt(&self.canonical_type));
        let _ = writeln!(s, "branch_trace      {}", self.branch_trace.join(" > "));
        let sc = &self.schemes;
        for (name, v) in [("L", &sc.l), ("M", &sc.m), ("N", &sc.n)] {
            if let Some(v) = v {
                let _ = writeln!(s, "scheme {name}          {v}");
            }
        }
        if let Some(q) = &sc.det_n {
            let _ = writeln!(s, "det N             {} (Gram rank {})", q.label, q.gram_rank);
        }
        s
    }
}

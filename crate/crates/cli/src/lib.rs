//! Command implementations for the `hypermat` binary.
//!
//! Exit codes: 0 success, 2 bad input, 3 zero tensor, 4 unsupported format,
//! 1 internal error.

pub mod document;
pub mod report;

use std::path::Path;

use hypermat::classify::classify_with_hints;
use hypermat::degeneracy::{hyperdet_222, hyperdeterminant_defined, schlafli_binary, sorting_permutation};
use hypermat::error::Error;
use hypermat::polyalg::format_rational;
use hypermat::schemes::{DetScheme, ProjPoint};
use hypermat::tensor::{Axis, Tensor3};
use thiserror::Error;

pub use document::{parse_hint, TensorDocument};
pub use report::{DiagnosisDocument, ReportDocument};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid JSON at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Json { .. } | CliError::Input(_) => 2,
            CliError::Unsupported(_) => 4,
            CliError::Core(Error::ZeroTensor) => 3,
            CliError::Core(Error::WrongFormat { .. }) => 4,
            CliError::Core(Error::UnexpectedBranch(_)) => 1,
            CliError::Core(_) => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

pub fn load(path: &Path) -> Result<TensorDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    TensorDocument::from_json(&text)
}

/// Full analysis. Hints stored in the file are replayed before those given
/// on the command line.
pub fn analyze(doc: &TensorDocument, extra_hints: &[String], out: OutputFormat) -> Result<String, CliError> {
    let a = doc.tensor()?;
    let mut hints = doc.parsed_hints()?;
    for h in extra_hints {
        hints.push(parse_hint(h)?);
    }
    let report = classify_with_hints(&a, &hints)?;
    let rendered = ReportDocument::from(&report);
    Ok(match out {
        OutputFormat::Json => rendered.to_json(),
        OutputFormat::Text => rendered.to_text(),
    })
}

/// Diagnoses one point of the scheme attached to `axis`.
pub fn scheme(doc: &TensorDocument, axis: &str, point: &str) -> Result<String, CliError> {
    let a = doc.tensor()?;
    let axis: Axis = axis.parse().map_err(|e: Error| CliError::Input(e.to_string()))?;
    let p = ProjPoint::parse(point).map_err(|e| CliError::Input(format!("point {point:?}: {e}")))?;
    if p.dim() != a.extent(axis) {
        return Err(CliError::Input(format!(
            "point has {} coordinates, axis {axis} needs {}",
            p.dim(),
            a.extent(axis)
        )));
    }
    let d = DetScheme::associated(&a, axis)?.diagnose_point(&p)?;
    Ok(serde_json::to_string_pretty(&DiagnosisDocument::new(axis, &p, &d)).expect("diagnosis serializes"))
}

/// The hyperdeterminant for `(2,2,2)`, or the discriminant of `det L` for
/// `(2,q,q)`, after sorting the extents.
pub fn hyperdet(doc: &TensorDocument) -> Result<String, CliError> {
    let a = doc.tensor()?;
    let sorted: Tensor3 = a.permute(sorting_permutation(a.dims()));
    let [p, q, r] = sorted.dims();
    let value = if [p, q, r] == [2, 2, 2] {
        hyperdet_222(&sorted)?
    } else if p == 2 && q == r {
        schlafli_binary(&sorted)?.value
    } else if hyperdeterminant_defined([p, q, r]) {
        return Err(CliError::Unsupported(format!(
            "format ({p},{q},{r}) has a hyperdeterminant (r <= p+q-1) but only (2,2,2) and (2,q,q) are computed"
        )));
    } else {
        return Err(CliError::Unsupported(format!(
            "format ({p},{q},{r}) has no hyperdeterminant: it needs r <= p+q-1, here {r} > {}",
            p + q - 1
        )));
    };
    Ok(format_rational(&value))
}

use thiserror::Error;

use crate::tensor::Axis;

/// Why a point was refused as the seed of a kernel certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointIssue {
    OffScheme,
    NotDegenerate,
    Bidegenerate,
}

impl std::fmt::Display for PointIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            PointIssue::OffScheme => "point does not lie on the scheme",
            PointIssue::NotDegenerate => "point is not a degenerate point of the scheme",
            PointIssue::Bidegenerate => "point is bi-degenerate (evaluated rank drops by two or more)",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("the zero tensor has no meaningful classification")]
    ZeroTensor,
    #[error("change-of-coordinates matrix is singular")]
    SingularChange,
    #[error("unsupported format {found:?}: {expected}")]
    WrongFormat {
        expected: &'static str,
        found: [usize; 3],
    },
    #[error("the zero form is not allowed here")]
    ZeroForm,
    #[error("expected a binary form of degree at least {min}, got degree {found}")]
    DegreeTooLow { min: u32, found: u32 },
    #[error("polynomial is not a form of the expected shape: {0}")]
    NotAForm(String),
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("index {index} out of range for axis {axis:?} of extent {extent}")]
    IndexOutOfRange {
        axis: Axis,
        index: usize,
        extent: usize,
    },
    #[error("operation needs a scheme in P^1, this one lives in P^{0}")]
    NotOnProjectiveLine(usize),
    #[error("cannot build a certificate on axis {axis:?}: {issue}")]
    Precondition { axis: Axis, issue: PointIssue },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("classification reached a branch with no matching case: {0}")]
    UnexpectedBranch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

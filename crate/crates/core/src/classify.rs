//! Degeneracy, conciseness, essential format, tensor rank and normal form
//! for `(2,2,r)` tensors, read off the schemes `L`, `M`, `N`.
//!
//! Other formats get a partial report: index ranks plus whatever
//! `decide_degeneracy` can settle.

use crate::canonical::CanonicalType;
use crate::degeneracy::{decide_degeneracy, hyperdeterminant_defined, sorting_permutation, DegeneracyVerdict};
use crate::error::{Error, Result};
use crate::polyalg::quadric::QuadricClass;
use crate::schemes::{classify_det_n_quadric, DetScheme, P1Locus, ProjPoint};
use crate::tensor::{Axis, EssentialFormat, Tensor3};

/// Shapes of the associated schemes that the branches looked at.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchemeSummary {
    pub l: Option<P1Locus>,
    pub m: Option<P1Locus>,
    /// `N` when it lives on a projective line (`r = 2`).
    pub n: Option<P1Locus>,
    /// Quadric class of `det N` for `(2,2,r)`, `r >= 3`.
    pub det_n: Option<QuadricClass>,
}

impl SchemeSummary {
    fn of(a: &Tensor3) -> Result<Self> {
        let [p, q, r] = a.dims();
        let locus = |axis: Axis| -> Result<P1Locus> { DetScheme::associated(a, axis)?.points_on_p1() };
        Ok(SchemeSummary {
            l: if p == 2 { Some(locus(Axis::X)?) } else { None },
            m: if q == 2 { Some(locus(Axis::Y)?) } else { None },
            n: if r == 2 { Some(locus(Axis::Z)?) } else { None },
            det_n: if p == 2 && q == 2 && r >= 3 {
                Some(classify_det_n_quadric(a)?)
            } else {
                None
            },
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub input_format: [usize; 3],
    /// Axis `a` of the analysed tensor is axis `axis_permutation[a]` of the input.
    pub axis_permutation: [usize; 3],
    /// Format after sorting the extents.
    pub format: [usize; 3],
    pub det_zero: Option<bool>,
    pub degeneracy: DegeneracyVerdict,
    pub concise: bool,
    pub essential_format: EssentialFormat,
    pub tensor_rank: Option<usize>,
    pub canonical_type: Option<CanonicalType>,
    pub branch_trace: Vec<String>,
    pub schemes: SchemeSummary,
}

/// The part of a report that is invariant under changes of bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportInvariants {
    pub format: [usize; 3],
    pub det_zero: Option<bool>,
    pub degenerate: Option<bool>,
    pub concise: bool,
    pub essential_format: EssentialFormat,
    pub tensor_rank: Option<usize>,
    pub canonical_type: Option<CanonicalType>,
    pub l: Option<String>,
    pub m: Option<String>,
    pub n: Option<String>,
    pub det_n_rank: Option<usize>,
}

impl AnalysisReport {
    pub fn invariants(&self) -> ReportInvariants {
        ReportInvariants {
            format: self.format,
            det_zero: self.det_zero,
            degenerate: self.degeneracy.status.is_degenerate(),
            concise: self.concise,
            essential_format: self.essential_format,
            tensor_rank: self.tensor_rank,
            canonical_type: self.canonical_type,
            l: self.schemes.l.as_ref().map(P1Locus::describe),
            m: self.schemes.m.as_ref().map(P1Locus::describe),
            n: self.schemes.n.as_ref().map(P1Locus::describe),
            det_n_rank: self.schemes.det_n.map(|c| c.gram_rank),
        }
    }
}

/// What a branch of the decision tree concludes.
struct Conclusion {
    degenerate: bool,
    essential: [usize; 3],
    rank: usize,
    canonical: CanonicalType,
    trace: Vec<&'static str>,
}

fn conclude(
    degenerate: bool,
    essential: [usize; 3],
    rank: usize,
    canonical: CanonicalType,
    trace: Vec<&'static str>,
) -> Result<Conclusion> {
    Ok(Conclusion {
        degenerate,
        essential,
        rank,
        canonical,
        trace,
    })
}

fn unexpected(trace: &[&str], what: String) -> Error {
    Error::UnexpectedBranch(format!("after [{}]: {what}", trace.join(", ")))
}

fn check_format(a: &Tensor3, expected: &'static str, ok: bool) -> Result<()> {
    if !ok {
        return Err(Error::WrongFormat {
            expected,
            found: a.dims(),
        });
    }
    if a.is_zero() {
        return Err(Error::ZeroTensor);
    }
    Ok(())
}

/// Builds the report and checks the branch against the index ranks and the
/// degeneracy verdict, which are computed independently.
fn finish(a: &Tensor3, c: Conclusion, hints: &[(Axis, ProjPoint)]) -> Result<AnalysisReport> {
    let essential = a.essential_format();
    if essential.as_array() != c.essential {
        return Err(unexpected(
            &c.trace,
            format!("branch gives essential format {:?}, index ranks are {essential}", c.essential),
        ));
    }
    let degeneracy = decide_degeneracy(a, hints)?;
    if let Some(d) = degeneracy.status.is_degenerate() {
        if d != c.degenerate {
            return Err(unexpected(
                &c.trace,
                format!("branch says degenerate={}, schemes say {}", c.degenerate, degeneracy.status),
            ));
        }
    }
    let dims = a.dims();
    Ok(AnalysisReport {
        input_format: dims,
        axis_permutation: [0, 1, 2],
        format: dims,
        det_zero: hyperdeterminant_defined(dims).then_some(c.degenerate),
        degeneracy,
        concise: essential.as_array() == dims,
        essential_format: essential,
        tensor_rank: Some(c.rank),
        canonical_type: Some(c.canonical),
        branch_trace: c.trace.into_iter().map(String::from).collect(),
        schemes: SchemeSummary::of(a)?,
    })
}

fn locus(a: &Tensor3, axis: Axis) -> Result<P1Locus> {
    DetScheme::associated(a, axis)?.points_on_p1()
}

fn decide_222(a: &Tensor3) -> Result<Conclusion> {
    let l = locus(a, Axis::X)?;
    if l.is_two_simple_points() {
        return conclude(false, [2, 2, 2], 2, CanonicalType::IV, vec!["det-L:two-distinct-roots"]);
    }
    let mut trace = vec!["det-L:double-root-or-zero"];
    if !(l.is_double_point() || l.is_whole_line()) {
        return Err(unexpected(&trace, format!("det L has roots {:?}", l.multiplicities())));
    }
    let m = locus(a, Axis::Y)?;
    let n = locus(a, Axis::Z)?;
    let loci = [&l, &m, &n];
    let doubles = loci.iter().filter(|s| s.is_double_point()).count();
    let zeros = loci.iter().filter(|s| s.is_whole_line()).count();
    match (doubles, zeros) {
        (3, 0) => {
            trace.push("det-LMN:all-double-root");
            conclude(true, [2, 2, 2], 3, CanonicalType::III, trace)
        }
        (1, 2) => {
            trace.push("det-LMN:two-zero-one-double-root");
            let (essential, canonical) = if l.is_double_point() {
                ([1, 2, 2], CanonicalType::IIc)
            } else if m.is_double_point() {
                ([2, 1, 2], CanonicalType::IIb)
            } else {
                ([2, 2, 1], CanonicalType::IIa)
            };
            conclude(true, essential, 2, canonical, trace)
        }
        (0, 3) => {
            trace.push("det-LMN:all-zero");
            conclude(true, [1, 1, 1], 1, CanonicalType::I, trace)
        }
        _ => Err(unexpected(
            &trace,
            format!("det L, det M, det N give {}, {}, {}", l.describe(), m.describe(), n.describe()),
        )),
    }
}

/// Branches shared by `(2,2,3)` and `(2,2,r)` once `det N` is known to be
/// singular: `rank` is its Gram rank (0, 1 or 2).
fn decide_singular_det_n(a: &Tensor3, rank: usize, mut trace: Vec<&'static str>) -> Result<Conclusion> {
    let r = a.dims()[2];
    let l = locus(a, Axis::X)?;
    match rank {
        2 => {
            trace.push("det-N:two-hyperplanes");
            if l.is_simple_point() {
                trace.push("L:simple-point");
                conclude(true, [2, 2, 3], 3, CanonicalType::V, trace)
            } else if l.is_two_simple_points() {
                trace.push("L:two-simple-points");
                conclude(true, [2, 2, 2], 2, CanonicalType::IVEmbedded, trace)
            } else {
                Err(unexpected(&trace, format!("L is {}", l.describe())))
            }
        }
        1 => {
            trace.push("det-N:double-hyperplane");
            if l.is_double_point() {
                trace.push("L:double-point");
                conclude(true, [2, 2, 2], 3, CanonicalType::III, trace)
            } else if l.is_whole_line() {
                trace.push("L:whole-line");
                conclude(true, [2, 2, 1], 2, CanonicalType::IIa, trace)
            } else {
                Err(unexpected(&trace, format!("L is {}", l.describe())))
            }
        }
        0 => {
            trace.push("det-N:zero");
            let m = locus(a, Axis::Y)?;
            // with three slices either double point decides; beyond that
            // the other scheme must be the whole line
            let other_ok = |s: &P1Locus| r == 3 || s.is_whole_line();
            if l.is_double_point() && other_ok(&m) {
                trace.push("L:double-point");
                conclude(true, [1, 2, 2], 2, CanonicalType::IIc, trace)
            } else if m.is_double_point() && other_ok(&l) {
                trace.push("M:double-point");
                conclude(true, [2, 1, 2], 2, CanonicalType::IIb, trace)
            } else if l.is_whole_line() && m.is_whole_line() {
                trace.push("L-M:whole-line");
                conclude(true, [1, 1, 1], 1, CanonicalType::I, trace)
            } else {
                Err(unexpected(&trace, format!("L is {}, M is {}", l.describe(), m.describe())))
            }
        }
        _ => Err(unexpected(&trace, format!("det N has Gram rank {rank}"))),
    }
}

fn decide_223(a: &Tensor3) -> Result<Conclusion> {
    let class = classify_det_n_quadric(a)?;
    if class.gram_rank == 3 {
        return conclude(false, [2, 2, 3], 3, CanonicalType::VI, vec!["det-N:smooth-conic"]);
    }
    decide_singular_det_n(a, class.gram_rank, vec!["det-N:singular"])
}

fn decide_22r(a: &Tensor3) -> Result<Conclusion> {
    let r = a.dims()[2];
    let class = classify_det_n_quadric(a)?;
    match class.gram_rank {
        4 if r == 4 => conclude(false, [2, 2, 4], 4, CanonicalType::Concise224, vec!["det-N:smooth-quadric"]),
        4 => conclude(
            false,
            [2, 2, 4],
            4,
            CanonicalType::Concise224,
            vec!["det-N:cone-over-smooth-quadric"],
        ),
        3 => conclude(
            false,
            [2, 2, 3],
            3,
            CanonicalType::VI,
            vec!["det-N:not-smooth-quadric", "det-N:cone-over-smooth-conic"],
        ),
        k => decide_singular_det_n(a, k, vec!["det-N:not-smooth-quadric", "det-N:not-cone-over-smooth-conic"]),
    }
}

pub fn classify_222(a: &Tensor3) -> Result<AnalysisReport> {
    classify_222_with_hints(a, &[])
}

pub fn classify_223(a: &Tensor3) -> Result<AnalysisReport> {
    classify_223_with_hints(a, &[])
}

pub fn classify_22r(a: &Tensor3) -> Result<AnalysisReport> {
    classify_22r_with_hints(a, &[])
}

fn classify_222_with_hints(a: &Tensor3, hints: &[(Axis, ProjPoint)]) -> Result<AnalysisReport> {
    check_format(a, "(2,2,2)", a.dims() == [2, 2, 2])?;
    finish(a, decide_222(a)?, hints)
}

fn classify_223_with_hints(a: &Tensor3, hints: &[(Axis, ProjPoint)]) -> Result<AnalysisReport> {
    check_format(a, "(2,2,3)", a.dims() == [2, 2, 3])?;
    finish(a, decide_223(a)?, hints)
}

fn classify_22r_with_hints(a: &Tensor3, hints: &[(Axis, ProjPoint)]) -> Result<AnalysisReport> {
    let [p, q, r] = a.dims();
    check_format(a, "(2,2,r) with r >= 4", p == 2 && q == 2 && r >= 4)?;
    finish(a, decide_22r(a)?, hints)
}

fn partial_report(a: &Tensor3, hints: &[(Axis, ProjPoint)]) -> Result<AnalysisReport> {
    let dims = a.dims();
    let degeneracy = decide_degeneracy(a, hints)?;
    let essential = a.essential_format();
    Ok(AnalysisReport {
        input_format: dims,
        axis_permutation: [0, 1, 2],
        format: dims,
        det_zero: if hyperdeterminant_defined(dims) {
            degeneracy.status.is_degenerate()
        } else {
            None
        },
        degeneracy,
        concise: essential.as_array() == dims,
        essential_format: essential,
        tensor_rank: None,
        canonical_type: None,
        branch_trace: vec!["partial".into()],
        schemes: SchemeSummary::of(a)?,
    })
}

/// Full analysis after sorting the extents. Everything in the report,
/// including the certificate, refers to the sorted tensor.
pub fn classify(a: &Tensor3) -> Result<AnalysisReport> {
    classify_with_hints(a, &[])
}

/// Like [`classify`], with candidate degenerate points given in the axes of
/// the input tensor.
pub fn classify_with_hints(a: &Tensor3, hints: &[(Axis, ProjPoint)]) -> Result<AnalysisReport> {
    if a.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let perm = sorting_permutation(a.dims());
    let sorted = a.permute(perm);
    let hints: Vec<(Axis, ProjPoint)> = hints
        .iter()
        .map(|(axis, pt)| {
            let new = perm.iter().position(|&o| o == axis.index()).expect("permutation");
            (Axis::from_index(new), pt.clone())
        })
        .collect();
    let mut report = match sorted.dims() {
        [2, 2, 2] => classify_222_with_hints(&sorted, &hints)?,
        [2, 2, 3] => classify_223_with_hints(&sorted, &hints)?,
        [2, 2, _] => classify_22r_with_hints(&sorted, &hints)?,
        _ => partial_report(&sorted, &hints)?,
    };
    report.input_format = a.dims();
    report.axis_permutation = perm;
    Ok(report)
}

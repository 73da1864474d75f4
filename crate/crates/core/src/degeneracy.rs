//! The kernel of a hypermatrix: triples `(P,Q,T)` with `tQ L(P) = 0`,
//! `tP N(T) = 0` and `M(Q) T = 0`. A tensor is degenerate iff such a triple
//! exists.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, PointIssue, Result};
use crate::polyalg::matrix::is_zero_vector;
use crate::polyalg::quadric::gram_determinant;
use crate::polyalg::rational::rat;
use crate::polyalg::{binary_roots, discriminant_binary, Matrix, Rational};
use crate::schemes::{DetScheme, P1Locus, PointDiagnosis, ProjPoint};
use crate::tensor::{Axis, Tensor3};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KernelTriple {
    pub p: ProjPoint,
    pub q: ProjPoint,
    pub t: ProjPoint,
}

impl KernelTriple {
    pub fn point(&self, axis: Axis) -> &ProjPoint {
        match axis {
            Axis::X => &self.p,
            Axis::Y => &self.q,
            Axis::Z => &self.t,
        }
    }

    fn from_axes(points: [ProjPoint; 3]) -> Self {
        let [p, q, t] = points;
        KernelTriple { p, q, t }
    }
}

impl fmt::Display for KernelTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P={} Q={} T={}", self.p, self.q, self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegeneracyStatus {
    /// Degenerate, with a verified kernel triple.
    Certified,
    /// Degenerate, but no kernel triple with rational coordinates was found.
    DegenerateUncertified,
    NonDegenerate,
    Undetermined,
}

impl DegeneracyStatus {
    pub fn is_degenerate(self) -> Option<bool> {
        match self {
            DegeneracyStatus::Certified | DegeneracyStatus::DegenerateUncertified => Some(true),
            DegeneracyStatus::NonDegenerate => Some(false),
            DegeneracyStatus::Undetermined => None,
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            DegeneracyStatus::Certified => "certified",
            DegeneracyStatus::DegenerateUncertified => "degenerate-uncertified",
            DegeneracyStatus::NonDegenerate => "non-degenerate",
            DegeneracyStatus::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for DegeneracyStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// What happened to one hint point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HintOutcome {
    pub axis: Axis,
    pub point: ProjPoint,
    pub diagnosis: PointDiagnosis,
    pub outcome: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyVerdict {
    pub status: DegeneracyStatus,
    pub certificate: Option<KernelTriple>,
    pub reason: String,
    pub hints: Vec<HintOutcome>,
}

fn scheme_name(axis: Axis) -> &'static str {
    match axis {
        Axis::X => "L",
        Axis::Y => "M",
        Axis::Z => "N",
    }
}

fn check_dims(a: &Tensor3, t: &KernelTriple) -> Result<()> {
    let got = [t.p.dim(), t.q.dim(), t.t.dim()];
    if got != a.dims() {
        return Err(Error::Dimension(format!(
            "triple has lengths {got:?}, tensor has format {:?}",
            a.dims()
        )));
    }
    Ok(())
}

/// All `p + q + r` equations of the kernel system hold exactly.
pub fn verify_kernel_triple(a: &Tensor3, t: &KernelTriple) -> Result<bool> {
    check_dims(a, t)?;
    let l = a.contract(Axis::X, t.p.coords())?;
    let n = a.contract(Axis::Z, t.t.coords())?;
    let m = a.contract(Axis::Y, t.q.coords())?;
    Ok(is_zero_vector(&l.vec_mul(t.q.coords())?)
        && is_zero_vector(&n.vec_mul(t.p.coords())?)
        && is_zero_vector(&m.mul_vec(t.t.coords())?))
}

/// `contract(axis, v)` with rows indexed by `row_axis`.
fn oriented(a: &Tensor3, axis: Axis, v: &[Rational], row_axis: Axis) -> Result<Matrix> {
    let m = a.contract(axis, v)?;
    let (first, _) = axis.others();
    Ok(if first == row_axis { m } else { m.transpose() })
}

/// Completes a point on one axis to a kernel triple, if the linear systems
/// allow it. Every returned triple has been verified.
pub fn complete_certificate(a: &Tensor3, axis: Axis, point: &ProjPoint) -> Result<Option<KernelTriple>> {
    if point.dim() != a.extent(axis) {
        return Err(Error::Dimension(format!(
            "point has {} coordinates, axis {axis} has extent {}",
            point.dim(),
            a.extent(axis)
        )));
    }
    let (b, c) = axis.others();
    let cm = a.contract(axis, point.coords())?;
    let assemble = |wb: &[Rational], wc: &[Rational]| -> Result<Option<KernelTriple>> {
        let mut pts: [Option<ProjPoint>; 3] = [None, None, None];
        pts[axis.index()] = Some(point.clone());
        pts[b.index()] = Some(ProjPoint::new(wb.to_vec())?);
        pts[c.index()] = Some(ProjPoint::new(wc.to_vec())?);
        let triple = KernelTriple::from_axes(pts.map(|p| p.expect("all axes set")));
        Ok(verify_kernel_triple(a, &triple)?.then_some(triple))
    };
    // fix the b-vector from the left kernel, solve for the c-vector
    for wb in cm.left_kernel() {
        let d = oriented(a, b, &wb, axis)?;
        let system = cm.vstack(&d)?;
        if let Some(wc) = system.kernel().into_iter().next() {
            if let Some(t) = assemble(&wb, &wc)? {
                return Ok(Some(t));
            }
        }
    }
    // fix the c-vector from the right kernel, solve for the b-vector
    for wc in cm.kernel() {
        let e = oriented(a, c, &wc, axis)?;
        let system = cm.transpose().vstack(&e)?;
        if let Some(wb) = system.kernel().into_iter().next() {
            if let Some(t) = assemble(&wb, &wc)? {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

/// Builds a kernel triple from a degenerate, non-bidegenerate point of the
/// scheme on `axis`.
pub fn certificate_from_point(a: &Tensor3, axis: Axis, point: &ProjPoint) -> Result<Option<KernelTriple>> {
    let d = DetScheme::associated(a, axis)?.diagnose_point(point)?;
    let issue = if !d.on_scheme {
        Some(PointIssue::OffScheme)
    } else if d.bidegenerate {
        Some(PointIssue::Bidegenerate)
    } else if !d.degenerate {
        Some(PointIssue::NotDegenerate)
    } else {
        None
    };
    if let Some(issue) = issue {
        return Err(Error::Precondition { axis, issue });
    }
    complete_certificate(a, axis, point)
}

/// Permutation putting the extents in non-decreasing order (stable).
pub fn sorting_permutation(dims: [usize; 3]) -> [usize; 3] {
    let mut perm = [0, 1, 2];
    perm.sort_by_key(|&a| dims[a]);
    perm
}

/// Points tried when a whole line of candidates is available.
pub fn candidate_points() -> Vec<ProjPoint> {
    [[1, 0], [0, 1], [1, 1], [1, -1], [1, 2]]
        .iter()
        .map(|c| ProjPoint::from_i64(c).expect("nonzero"))
        .collect()
}

fn verdict(status: DegeneracyStatus, certificate: Option<KernelTriple>, reason: &str) -> DegeneracyVerdict {
    DegeneracyVerdict {
        status,
        certificate,
        reason: reason.to_string(),
        hints: Vec::new(),
    }
}

fn first_certificate(
    a: &Tensor3,
    points: impl IntoIterator<Item = ProjPoint>,
) -> Result<Option<KernelTriple>> {
    for p in points {
        if let Some(t) = complete_certificate(a, Axis::X, &p)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Decision for a sorted tensor (`p <= q <= r`) from its own schemes.
fn decide_sorted(a: &Tensor3) -> Result<DegeneracyVerdict> {
    use DegeneracyStatus::*;
    let [p, q, r] = a.dims();
    if p == 1 {
        let one = ProjPoint::from_i64(&[1])?;
        return Ok(match complete_certificate(a, Axis::X, &one)? {
            Some(t) => verdict(Certified, Some(t), "certificate-from-matrix-kernels"),
            None => verdict(NonDegenerate, None, "matrix-full-rank"),
        });
    }
    if p > 2 {
        return Ok(verdict(Undetermined, None, "no-decision-procedure"));
    }
    if r > q {
        // boundary or exterior: degenerate iff L is nonempty
        let locus = DetScheme::associated(a, Axis::X)?.points_on_p1()?;
        return Ok(match locus {
            P1Locus::Empty => verdict(NonDegenerate, None, "L-empty"),
            P1Locus::WholeLine => match first_certificate(a, candidate_points())? {
                Some(t) => verdict(Certified, Some(t), "certificate-built-from-L-point"),
                None => verdict(DegenerateUncertified, None, "L-nonempty-no-certificate"),
            },
            points => {
                let pts = points.rational_points().into_iter().map(|(p, _)| p);
                match first_certificate(a, pts)? {
                    Some(t) => verdict(Certified, Some(t), "certificate-built-from-L-point"),
                    None => verdict(DegenerateUncertified, None, "degenerate-no-rational-certificate"),
                }
            }
        });
    }
    // r == q: interior, decided by the discriminant of det L
    let s = schlafli_binary(a)?;
    if s.det_l_vanishes {
        return Ok(match first_certificate(a, candidate_points())? {
            Some(t) => verdict(Certified, Some(t), "certificate-built-from-L-point"),
            None => verdict(DegenerateUncertified, None, "det-L-vanishes-no-certificate"),
        });
    }
    if !s.value.is_zero() {
        return Ok(verdict(NonDegenerate, None, "schlafli-discriminant-nonzero"));
    }
    let det_l = a.assoc_matrix(Axis::X).det()?;
    let multiple = binary_roots(&det_l)?
        .rational
        .into_iter()
        .filter(|(_, m)| *m >= 2)
        .map(|(c, _)| ProjPoint::new(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(match first_certificate(a, multiple)? {
        Some(t) => verdict(Certified, Some(t), "certificate-from-multiple-root"),
        None => verdict(DegenerateUncertified, None, "degenerate-no-rational-certificate"),
    })
}

fn diagnose_hint(a: &Tensor3, axis: Axis, point: &ProjPoint) -> Result<(HintOutcome, Option<KernelTriple>)> {
    let diagnosis = DetScheme::associated(a, axis)?.diagnose_point(point)?;
    let mut cert = None;
    let outcome = if !diagnosis.on_scheme {
        "off-scheme"
    } else if diagnosis.bidegenerate {
        "bidegenerate"
    } else if !diagnosis.degenerate {
        "not-degenerate"
    } else {
        cert = complete_certificate(a, axis, point)?;
        if cert.is_some() {
            "certified"
        } else {
            "completion-failed"
        }
    };
    Ok((
        HintOutcome {
            axis,
            point: point.clone(),
            diagnosis,
            outcome,
        },
        cert,
    ))
}

/// Decides degeneracy from the schemes when a procedure exists (first
/// index 1 or 2 after sorting the extents) and from hint points otherwise.
/// Hint points are diagnosed in order; the first degenerate,
/// non-bidegenerate one is completed to a certificate. The certificate is
/// reported in the coordinates of `a`.
pub fn decide_degeneracy(a: &Tensor3, hints: &[(Axis, ProjPoint)]) -> Result<DegeneracyVerdict> {
    if a.is_zero() {
        return Err(Error::ZeroTensor);
    }
    let perm = sorting_permutation(a.dims());
    let sorted = a.permute(perm);
    let to_sorted = |axis: Axis| Axis::from_index(perm.iter().position(|&o| o == axis.index()).expect("permutation"));

    let mut outcomes = Vec::new();
    let mut hint_cert = None;
    for (axis, point) in hints {
        let (outcome, cert) = diagnose_hint(&sorted, to_sorted(*axis), point)?;
        outcomes.push(HintOutcome {
            axis: *axis,
            ..outcome
        });
        if hint_cert.is_none() {
            hint_cert = cert.map(|c| (*axis, c));
        }
    }

    let mut v = decide_sorted(&sorted)?;
    match (&v.status, hint_cert) {
        (DegeneracyStatus::NonDegenerate, Some(_)) => {
            return Err(Error::UnexpectedBranch(
                "a hint produced a kernel triple for a tensor proven non-degenerate".into(),
            ))
        }
        (DegeneracyStatus::Undetermined | DegeneracyStatus::DegenerateUncertified, Some((axis, c))) => {
            v.status = DegeneracyStatus::Certified;
            v.certificate = Some(c);
            v.reason = format!("certificate-built-from-{}-point", scheme_name(axis));
        }
        _ => {}
    }
    if v.status == DegeneracyStatus::Undetermined && !hints.is_empty() {
        v.reason = "no-usable-hint".into();
    }
    v.certificate = v.certificate.map(|c| {
        let pts = [c.p, c.q, c.t];
        let mut orig: [Option<ProjPoint>; 3] = [None, None, None];
        for (new_axis, pt) in pts.into_iter().enumerate() {
            orig[perm[new_axis]] = Some(pt);
        }
        KernelTriple::from_axes(orig.map(|p| p.expect("all axes")))
    });
    v.hints = outcomes;
    Ok(v)
}

fn require_format(a: &Tensor3, expected: &'static str, ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::WrongFormat {
            expected,
            found: a.dims(),
        })
    }
}

/// The degree-4 hyperdeterminant of a `(2,2,2)` tensor.
pub fn hyperdet_222(a: &Tensor3) -> Result<Rational> {
    require_format(a, "(2,2,2)", a.dims() == [2, 2, 2])?;
    let e = |i: usize, j: usize, k: usize| a.get(i - 1, j - 1, k - 1).clone();
    let (a111, a112, a121, a122) = (e(1, 1, 1), e(1, 1, 2), e(1, 2, 1), e(1, 2, 2));
    let (a211, a212, a221, a222) = (e(2, 1, 1), e(2, 1, 2), e(2, 2, 1), e(2, 2, 2));
    let sq = |x: &Rational| x * x;
    let squares = sq(&a111) * sq(&a222) + sq(&a112) * sq(&a221) + sq(&a121) * sq(&a212) + sq(&a122) * sq(&a211);
    let pairs = &a111 * &a112 * &a221 * &a222
        + &a111 * &a121 * &a212 * &a222
        + &a111 * &a122 * &a211 * &a222
        + &a112 * &a121 * &a212 * &a221
        + &a112 * &a122 * &a221 * &a211
        + &a121 * &a122 * &a212 * &a211;
    let quads = &a111 * &a122 * &a212 * &a221 + &a112 * &a121 * &a211 * &a222;
    Ok(squares - rat(2) * pairs + rat(4) * quads)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schlafli {
    pub value: Rational,
    pub det_l_vanishes: bool,
}

/// Discriminant of `det L` for a `(2,q,q)` tensor, `q >= 2`. When `det L`
/// is identically zero the value is reported as zero with the flag set.
pub fn schlafli_binary(a: &Tensor3) -> Result<Schlafli> {
    let [p, q, r] = a.dims();
    require_format(a, "(2,q,q) with q >= 2", p == 2 && q == r && q >= 2)?;
    let det_l = a.assoc_matrix(Axis::X).det()?;
    if det_l.is_zero() {
        return Ok(Schlafli {
            value: Rational::zero(),
            det_l_vanishes: true,
        });
    }
    Ok(Schlafli {
        value: discriminant_binary(&det_l)?,
        det_l_vanishes: false,
    })
}

/// Determinant of the Gram matrix of the conic `det N` of a `(2,2,3)` tensor.
pub fn conic_discriminant_223(a: &Tensor3) -> Result<Rational> {
    require_format(a, "(2,2,3)", a.dims() == [2, 2, 3])?;
    gram_determinant(&a.assoc_matrix(Axis::Z).det()?)
}

/// True when the hyperdeterminant exists for the sorted format: `r <= p + q - 1`.
pub fn hyperdeterminant_defined(dims: [usize; 3]) -> bool {
    let mut d = dims;
    d.sort_unstable();
    d[2] < d[0] + d[1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn degenerate_334() -> Tensor3 {
        Tensor3::from_z_slices(&[
            &[&[1, 0, 0], &[0, 0, 1], &[1, 0, 0]],
            &[&[0, 0, 1], &[0, 1, 0], &[0, 0, 0]],
            &[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]],
            &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]],
        ])
    }

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_i64(c).unwrap()
    }

    #[test]
    fn verify_small_triples() {
        let one = Tensor3::from_ones([2, 2, 2], &[(1, 1, 1)]);
        let e2 = pt(&[0, 1]);
        let t = KernelTriple { p: e2.clone(), q: e2.clone(), t: e2 };
        assert!(verify_kernel_triple(&one, &t).unwrap());
        let iv = Tensor3::from_ones([2, 2, 2], &[(1, 1, 1), (2, 2, 2)]);
        let e1 = pt(&[1, 0]);
        let t = KernelTriple { p: e1.clone(), q: e1.clone(), t: e1.clone() };
        assert!(!verify_kernel_triple(&iv, &t).unwrap());
        let bad = KernelTriple { p: e1.clone(), q: e1.clone(), t: pt(&[1, 0, 0]) };
        assert!(verify_kernel_triple(&iv, &bad).is_err());
    }

    #[test]
    fn known_certificate_verifies() {
        let t = KernelTriple {
            p: pt(&[1, 0, -1]),
            q: pt(&[1, 0, 0]),
            t: pt(&[0, 1, 1, 0]),
        };
        assert!(verify_kernel_triple(&degenerate_334(), &t).unwrap());
    }

    #[test]
    fn certificate_from_degenerate_point() {
        let a = degenerate_334();
        let c = certificate_from_point(&a, Axis::Z, &pt(&[0, 1, 1, 0])).unwrap().unwrap();
        assert!(verify_kernel_triple(&a, &c).unwrap());
        assert_eq!(c.t, pt(&[0, 1, 1, 0]));
        assert!(matches!(
            certificate_from_point(&a, Axis::Z, &pt(&[0, 0, 1, 0])),
            Err(Error::Precondition { issue: PointIssue::Bidegenerate, .. })
        ));
        assert!(matches!(
            certificate_from_point(&a, Axis::Z, &pt(&[1, 0, 0, 1])),
            Err(Error::Precondition { issue: PointIssue::OffScheme, .. })
        ));
    }

    #[test]
    fn certificate_from_double_point_of_l() {
        let iii = Tensor3::from_ones([2, 2, 3], &[(1, 1, 1), (1, 2, 2), (2, 1, 2)]);
        let l = DetScheme::associated(&iii, Axis::X).unwrap().points_on_p1().unwrap();
        assert!(l.is_double_point());
        let (p, _) = l.rational_points().remove(0);
        let c = certificate_from_point(&iii, Axis::X, &p).unwrap().unwrap();
        assert!(verify_kernel_triple(&iii, &c).unwrap());
    }

    #[test]
    fn hyperdeterminant_values() {
        let iv = Tensor3::from_ones([2, 2, 2], &[(1, 1, 1), (2, 2, 2)]);
        assert_eq!(hyperdet_222(&iv).unwrap(), rat(1));
        let iii = Tensor3::from_ones([2, 2, 2], &[(1, 1, 2), (1, 2, 1), (2, 1, 1)]);
        assert_eq!(hyperdet_222(&iii).unwrap(), rat(0));
        assert_eq!(hyperdet_222(&Tensor3::zeros([2, 2, 2])).unwrap(), rat(0));
        assert!(hyperdet_222(&Tensor3::zeros([2, 2, 3])).is_err());
        assert_eq!(schlafli_binary(&iv).unwrap().value, rat(1));
        assert_eq!(schlafli_binary(&iii).unwrap().value, rat(0));
        let one = Tensor3::from_ones([2, 2, 2], &[(1, 1, 1)]);
        assert!(schlafli_binary(&one).unwrap().det_l_vanishes);
        assert!(schlafli_binary(&Tensor3::zeros([2, 2, 3])).is_err());
    }

    #[test]
    fn diagonal_conic_discriminant() {
        let t = Tensor3::from_fn([2, 2, 3], |i, j, k| match (i, j, k) {
            (0, 0, 0) => rat(2),
            (1, 0, 1) => rat(3),
            (0, 1, 1) => rat(5),
            (1, 1, 2) => rat(7),
            _ => rat(0),
        });
        // det N = 14 z1 z3 - 15 z2^2
        assert_eq!(conic_discriminant_223(&t).unwrap(), rat(735));
        let vi = Tensor3::from_ones([2, 2, 3], &[(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 3)]);
        assert!(!conic_discriminant_223(&vi).unwrap().is_zero());
        let iii = Tensor3::from_ones([2, 2, 3], &[(1, 1, 1), (1, 2, 2), (2, 1, 2)]);
        assert!(conic_discriminant_223(&iii).unwrap().is_zero());
    }

    #[test]
    fn decisions_by_format() {
        let c224 = Tensor3::from_ones([2, 2, 4], &[(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 1, 4)]);
        let v = decide_degeneracy(&c224, &[]).unwrap();
        assert_eq!(v.status, DegeneracyStatus::NonDegenerate);
        assert_eq!(v.reason, "L-empty");

        let a = degenerate_334();
        let v = decide_degeneracy(&a, &[(Axis::Z, pt(&[0, 1, 1, 0]))]).unwrap();
        assert_eq!(v.status, DegeneracyStatus::Certified);
        assert!(verify_kernel_triple(&a, v.certificate.as_ref().unwrap()).unwrap());
        assert_eq!(v.reason, "certificate-built-from-N-point");

        let v = decide_degeneracy(&a, &[(Axis::Z, pt(&[0, 0, 1, 0]))]).unwrap();
        assert_eq!(v.status, DegeneracyStatus::Undetermined);
        assert_eq!(v.hints[0].outcome, "bidegenerate");

        assert!(matches!(decide_degeneracy(&Tensor3::zeros([2, 2, 2]), &[]), Err(Error::ZeroTensor)));
    }

    #[test]
    fn certificates_map_back_to_input_axes() {
        // (4,2,2) input: sorted internally to (2,2,4)
        let t = Tensor3::from_ones([2, 2, 4], &[(1, 1, 1), (1, 2, 2), (2, 1, 2)]).permute([2, 0, 1]);
        assert_eq!(t.dims(), [4, 2, 2]);
        let v = decide_degeneracy(&t, &[]).unwrap();
        assert_eq!(v.status, DegeneracyStatus::Certified);
        assert!(verify_kernel_triple(&t, v.certificate.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn matrix_formats() {
        let full = Tensor3::from_fn([1, 2, 2], |_, j, k| rat(i64::from(j == k)));
        assert_eq!(decide_degeneracy(&full, &[]).unwrap().status, DegeneracyStatus::NonDegenerate);
        let low = Tensor3::from_fn([1, 2, 2], |_, _, _| rat(1));
        let v = decide_degeneracy(&low, &[]).unwrap();
        assert_eq!(v.status, DegeneracyStatus::Certified);
        assert!(verify_kernel_triple(&low, v.certificate.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn hint_errors() {
        let a = degenerate_334();
        assert!(decide_degeneracy(&a, &[(Axis::Z, pt(&[0, 1, 1]))]).is_err());
        assert!(matches!(ProjPoint::from_i64(&[0, 0, 0, 0]), Err(Error::ZeroPoint)));
    }

    fn arb_tensor(dims: [usize; 3], lo: i64, hi: i64) -> impl Strategy<Value = Tensor3> {
        proptest::collection::vec(lo..=hi, dims.iter().product::<usize>()).prop_map(move |v| {
            Tensor3::from_fn(dims, |i, j, k| rat(v[(i * dims[1] + j) * dims[2] + k]))
        })
    }

    fn all_points_degenerate(a: &Tensor3, c: &KernelTriple) -> bool {
        Axis::ALL.iter().all(|&axis| {
            DetScheme::associated(a, axis)
                .unwrap()
                .diagnose_point(c.point(axis))
                .unwrap()
                .degenerate
        })
    }

    proptest! {
        #[test]
        fn schlafli_equals_hyperdeterminant(a in arb_tensor([2, 2, 2], -5, 5)) {
            prop_assert_eq!(schlafli_binary(&a).unwrap().value, hyperdet_222(&a).unwrap());
        }

        #[test]
        fn vanishing_agrees_across_222_invariants(a in arb_tensor([2, 2, 2], -2, 2)) {
            let h = hyperdet_222(&a).unwrap().is_zero();
            let gram = gram_determinant(&a.assoc_matrix(Axis::Z).det().unwrap()).unwrap().is_zero();
            prop_assert_eq!(h, schlafli_binary(&a).unwrap().value.is_zero());
            prop_assert_eq!(h, gram);
        }

        #[test]
        fn hyperdeterminant_vanishing_invariant_under_slice_changes(
            a in arb_tensor([2, 2, 2], -3, 3),
            e in proptest::collection::vec(-3i64..=3, 4),
            ax in 0usize..3,
        ) {
            let e = Matrix::from_fn(2, 2, |i, j| rat(e[i * 2 + j]));
            prop_assume!(e.rank() == 2);
            let b = a.combine_slices(Axis::from_index(ax), &e).unwrap();
            prop_assert_eq!(hyperdet_222(&a).unwrap().is_zero(), hyperdet_222(&b).unwrap().is_zero());
        }

        #[test]
        fn decided_certificates_verify_and_are_degenerate_points(
            a in (2usize..=2, 2usize..=3, 2usize..=5).prop_flat_map(|(p, q, r)| arb_tensor([p, q, r], -1, 1))
        ) {
            prop_assume!(!a.is_zero());
            let v = decide_degeneracy(&a, &[]).unwrap();
            if let Some(c) = &v.certificate {
                prop_assert!(verify_kernel_triple(&a, c).unwrap());
                prop_assert!(all_points_degenerate(&a, c));
            }
            prop_assert!(v.status != DegeneracyStatus::Undetermined);
        }

        #[test]
        fn no_non_degenerate_verdict_with_a_certifying_hint(
            a in arb_tensor([2, 2, 3], -1, 1)
        ) {
            prop_assume!(!a.is_zero());
            let v = decide_degeneracy(&a, &[]).unwrap();
            if let Some(c) = v.certificate.clone() {
                let again = decide_degeneracy(&a, &[(Axis::X, c.p.clone()), (Axis::Z, c.t.clone())]).unwrap();
                prop_assert!(again.status != DegeneracyStatus::NonDegenerate);
            }
        }
    }
}

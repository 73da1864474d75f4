//! Small hand-checked examples run through the public API.

use hypermat::canonical::{bidegenerate_node_334, concise_224, degenerate_334, CanonicalType, Form222, Form223};
use hypermat::classify::{classify, classify_222, classify_223, classify_22r, classify_with_hints};
use hypermat::degeneracy::{
    certificate_from_point, conic_discriminant_223, decide_degeneracy, hyperdet_222, schlafli_binary,
    verify_kernel_triple, DegeneracyStatus, KernelTriple,
};
use hypermat::error::{Error, PointIssue};
use hypermat::polyalg::{
    discriminant_binary, gcd_binary, gram_rank, rat, rats, resultant_binary, squarefree_structure, var_names, MPoly,
    Matrix, QuadricLabel, Vars,
};
use hypermat::schemes::{classify_det_n_quadric, DetScheme, ProjPoint};
use hypermat::tensor::{Axis, Tensor3};

fn poly(s: &str, vars: &Vars) -> MPoly {
    MPoly::parse(s, vars).unwrap()
}

fn pt(c: &[i64]) -> ProjPoint {
    ProjPoint::from_i64(c).unwrap()
}

fn x() -> Vars {
    var_names("x", 2)
}

#[test]
fn binary_form_operations() {
    let x = x();
    assert_eq!(resultant_binary(&poly("x1x2", &x), &poly("x1^2", &x)).unwrap(), rat(0));
    assert_eq!(resultant_binary(&poly("x1^2", &x), &poly("x2^2", &x)).unwrap(), rat(1));
    assert_eq!(resultant_binary(&poly("x1 - x2", &x), &poly("x1 + x2", &x)).unwrap(), rat(2));

    assert_eq!(discriminant_binary(&poly("x1x2", &x)).unwrap(), rat(1));
    assert_eq!(discriminant_binary(&poly("x1^2", &x)).unwrap(), rat(0));

    let g = gcd_binary(&[poly("x1^2", &x), poly("x1x2", &x)]).unwrap().unwrap();
    assert_eq!(g, poly("x1", &x));
    let g = gcd_binary(&[poly("x1x2", &x)]).unwrap().unwrap();
    assert_eq!(g, poly("x1x2", &x));
    let g = gcd_binary(&[poly("x1^2 + x2^2", &x), poly("x1", &x)]).unwrap().unwrap();
    assert_eq!(g.degree(), Some(0));

    let mut s = squarefree_structure(&poly("x1^2x2", &x)).unwrap();
    s.sort_unstable();
    assert_eq!(s, vec![1, 2]);
    assert_eq!(squarefree_structure(&poly("x1^2", &x)).unwrap(), vec![2]);
}

#[test]
fn quadric_labels() {
    let z3 = var_names("z", 3);
    let z4 = var_names("z", 4);
    let c = gram_rank(&poly("z1z3 - z2^2", &z3)).unwrap();
    assert_eq!((c.gram_rank, c.label), (3, QuadricLabel::SmoothConic));
    let c = gram_rank(&poly("z1z3 - z2z4", &z4)).unwrap();
    assert_eq!((c.gram_rank, c.label), (4, QuadricLabel::SmoothQuadric));
    let c = gram_rank(&poly("z1^2", &z4)).unwrap();
    assert_eq!((c.gram_rank, c.label), (1, QuadricLabel::DoubleHyperplane));
}

#[test]
fn associated_determinants_of_the_334_tensors() {
    let a = bidegenerate_node_334();
    let z = a.axis_vars(Axis::Z);
    let det = a.assoc_matrix(Axis::Z).det().unwrap();
    let expected = "2z1^3 - 2z1^2z2 - 2z1z2^2 + z2^3 - z2z3^2 + 3z1^2z4 - 6z1z2z4 + z2^2z4 \
                    - 3z1z3z4 + 3z2z3z4 + z3^2z4 - z2z4^2";
    assert_eq!(det, poly(expected, &z));
    assert_eq!(det.eval(&rats(&[1, 1, 0, -1])).unwrap(), rat(0));
    assert_eq!(det.partial(2), poly("-2z2z3 - 3z1z4 + 3z2z4 + 2z3z4", &z));

    let b = degenerate_334();
    let z = b.axis_vars(Axis::Z);
    assert_eq!(
        b.assoc_matrix(Axis::Z).det().unwrap(),
        poly("-z1z2^2 + z1z2z3 + z1^2z4 - z3z4^2", &z)
    );
    assert_eq!(b.slice(Axis::Z, 0).unwrap(), Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 1], &[1, 0, 0]]));
    assert_eq!(a.slice(Axis::Z, 2).unwrap(), Matrix::from_i64(&[&[1, 1, 2], &[0, -1, 0], &[0, 0, 0]]));
}

#[test]
fn point_diagnoses() {
    let n = DetScheme::associated(&bidegenerate_node_334(), Axis::Z).unwrap();
    assert_eq!(n.expected_codim(), 1);
    let d = n.diagnose_point(&pt(&[1, 1, 0, -1])).unwrap();
    assert!(d.on_scheme && d.bidegenerate);
    assert_eq!(d.rank_at, 1);

    let n = DetScheme::associated(&degenerate_334(), Axis::Z).unwrap();
    let d = n.diagnose_point(&pt(&[0, 1, 1, 0])).unwrap();
    assert!(d.degenerate && !d.bidegenerate);
    assert!(n.diagnose_point(&pt(&[0, 0, 1, 0])).unwrap().bidegenerate);
}

#[test]
fn loci_on_the_projective_line() {
    let l = DetScheme::associated(&Form222::IV.tensor(), Axis::X).unwrap().points_on_p1().unwrap();
    assert!(l.is_two_simple_points());
    let pts: Vec<ProjPoint> = l.rational_points().into_iter().map(|(p, _)| p).collect();
    assert!(pts.contains(&pt(&[1, 0])) && pts.contains(&pt(&[0, 1])));

    let l = DetScheme::associated(&Form223::Va.tensor(), Axis::X).unwrap();
    assert_eq!(l.expected_codim(), 2);
    assert!(l.points_on_p1().unwrap().is_simple_point());
    let l = DetScheme::associated(&Form222::III.tensor(), Axis::X).unwrap();
    assert!(l.points_on_p1().unwrap().is_double_point());
}

#[test]
fn det_n_quadrics() {
    assert_eq!(classify_det_n_quadric(&concise_224()).unwrap().label, QuadricLabel::SmoothQuadric);
    assert_eq!(classify_det_n_quadric(&Form223::VI.tensor()).unwrap().label, QuadricLabel::SmoothConic);
    let c = classify_det_n_quadric(&Form223::IIa.tensor()).unwrap();
    assert_eq!((c.gram_rank, c.label), (1, QuadricLabel::DoubleHyperplane));
}

#[test]
fn kernel_triples() {
    let one = |i: usize| {
        let mut c = vec![0, 0];
        c[i] = 1;
        pt(&c)
    };
    let t = KernelTriple { p: one(1), q: one(1), t: one(1) };
    assert!(verify_kernel_triple(&Form222::I.tensor(), &t).unwrap());
    let t = KernelTriple { p: one(0), q: one(0), t: one(0) };
    assert!(!verify_kernel_triple(&Form222::IV.tensor(), &t).unwrap());

    let a = degenerate_334();
    let c = certificate_from_point(&a, Axis::Z, &pt(&[0, 1, 1, 0])).unwrap().unwrap();
    assert!(verify_kernel_triple(&a, &c).unwrap());

    match certificate_from_point(&bidegenerate_node_334(), Axis::Z, &pt(&[1, 1, 0, -1])) {
        Err(Error::Precondition { issue: PointIssue::Bidegenerate, .. }) => {}
        other => panic!("{other:?}"),
    }

    let iii = Form223::III.tensor();
    let l = DetScheme::associated(&iii, Axis::X).unwrap().points_on_p1().unwrap();
    let (double, mult) = l.rational_points().remove(0);
    assert_eq!(mult, 2);
    let c = certificate_from_point(&iii, Axis::X, &double).unwrap().unwrap();
    assert!(verify_kernel_triple(&iii, &c).unwrap());
}

#[test]
fn degeneracy_verdicts() {
    let v = decide_degeneracy(&concise_224(), &[]).unwrap();
    assert_eq!((v.status, v.reason.as_str()), (DegeneracyStatus::NonDegenerate, "L-empty"));

    let v = decide_degeneracy(&degenerate_334(), &[(Axis::Z, pt(&[0, 1, 1, 0]))]).unwrap();
    assert_eq!(v.status, DegeneracyStatus::Certified);

    let v = decide_degeneracy(&bidegenerate_node_334(), &[(Axis::Z, pt(&[1, 1, 0, -1]))]).unwrap();
    assert_eq!(v.status, DegeneracyStatus::Undetermined);
    assert_eq!(v.hints[0].outcome, "bidegenerate");
}

#[test]
fn discriminant_values() {
    assert_eq!(hyperdet_222(&Form222::IV.tensor()).unwrap(), rat(1));
    assert_eq!(hyperdet_222(&Form222::III.tensor()).unwrap(), rat(0));
    assert_eq!(hyperdet_222(&Tensor3::zeros([2, 2, 2])).unwrap(), rat(0));
    assert_eq!(schlafli_binary(&Form222::IV.tensor()).unwrap().value, rat(1));
    assert_eq!(schlafli_binary(&Form222::III.tensor()).unwrap().value, rat(0));

    assert_ne!(conic_discriminant_223(&Form223::VI.tensor()).unwrap(), rat(0));
    assert_eq!(conic_discriminant_223(&Form223::III.tensor()).unwrap(), rat(0));
    assert!(matches!(
        conic_discriminant_223(&concise_224()),
        Err(Error::WrongFormat { .. })
    ));
}

#[test]
fn classification_of_small_formats() {
    let r = classify_222(&Form222::IV.tensor()).unwrap();
    assert_eq!((r.det_zero, r.concise, r.tensor_rank), (Some(false), true, Some(2)));
    let r = classify_222(&Form222::III.tensor()).unwrap();
    assert_eq!((r.det_zero, r.concise, r.tensor_rank), (Some(true), true, Some(3)));
    let r = classify_222(&Form222::I.tensor()).unwrap();
    assert_eq!((r.tensor_rank, r.essential_format.as_array()), (Some(1), [1, 1, 1]));

    let r = classify_223(&Form223::VI.tensor()).unwrap();
    assert_eq!((r.det_zero, r.concise, r.tensor_rank), (Some(false), true, Some(3)));
    let r = classify_223(&Form223::Va.tensor()).unwrap();
    assert_eq!((r.det_zero, r.concise, r.tensor_rank), (Some(true), true, Some(3)));
    let r = classify_223(&Form223::IIa.tensor()).unwrap();
    assert_eq!((r.essential_format.as_array(), r.tensor_rank), ([2, 2, 1], Some(2)));

    let r = classify_22r(&concise_224()).unwrap();
    assert_eq!(r.degeneracy.status, DegeneracyStatus::NonDegenerate);
    assert_eq!((r.concise, r.tensor_rank), (true, Some(4)));
    assert_eq!(r.canonical_type, Some(CanonicalType::Concise224));
    let r = classify_22r(&concise_224().pad_z(5)).unwrap();
    assert_eq!(r.degeneracy.status, DegeneracyStatus::NonDegenerate);
    assert_eq!((r.essential_format.as_array(), r.tensor_rank), ([2, 2, 4], Some(4)));
    let r = classify_22r(&Form223::VI.tensor().pad_z(4)).unwrap();
    assert_eq!(r.degeneracy.status, DegeneracyStatus::NonDegenerate);
    assert_eq!((r.essential_format.as_array(), r.tensor_rank), ([2, 2, 3], Some(3)));
}

#[test]
fn classification_of_larger_and_permuted_formats() {
    let r = classify_with_hints(&degenerate_334(), &[(Axis::Z, pt(&[0, 1, 1, 0]))]).unwrap();
    assert_eq!(r.degeneracy.status, DegeneracyStatus::Certified);
    assert!(r.concise);
    assert_eq!(r.tensor_rank, None);

    let r = classify(&bidegenerate_node_334()).unwrap();
    assert_eq!(r.degeneracy.status, DegeneracyStatus::Undetermined);
    assert!(r.concise);

    let r = classify(&concise_224().permute([2, 0, 1])).unwrap();
    assert_eq!(r.input_format, [4, 2, 2]);
    assert_eq!(r.format, [2, 2, 4]);
    assert_eq!(r.tensor_rank, Some(4));
}

#[test]
fn tensor_reductions() {
    let iv = Form222::IV.tensor();
    let padded = iv.pad_z(3);
    assert_eq!(padded.essential_format().as_array(), [2, 2, 2]);

    let s: &[&[i64]] = &[&[1, 2], &[3, 4]];
    let s2: &[&[i64]] = &[&[2, 4], &[6, 8]];
    let t = Tensor3::from_z_slices(&[s, s, s2]);
    let red = t.reduce_to_essential().unwrap();
    assert_eq!(red.core().essential_format().as_array()[2], 1);

    let u = rats(&[1, 2]);
    let w = rats(&[0, 1, 3]);
    let rank_one = Tensor3::outer(&u, &u, &w);
    assert_eq!(rank_one.index_ranks(), [1, 1, 1]);
    assert_eq!(Tensor3::zeros([2, 2, 3]).index_ranks(), [0, 0, 0]);

    let a = degenerate_334();
    let swap = Matrix::from_i64(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
    let twice = a.combine_slices(Axis::Z, &swap).unwrap().combine_slices(Axis::Z, &swap).unwrap();
    assert_eq!(twice, a);
    assert_eq!(a.combine_slices(Axis::Z, &Matrix::identity(4)).unwrap(), a);
}

#[test]
fn trilinear_form() {
    let i = Form222::I.tensor();
    let vars = i.poly_pa().vars().clone();
    assert_eq!(i.poly_pa(), poly("x1y1z1", &vars));
    let e2 = rats(&[0, 1]);
    assert_eq!(i.eval_fa(&e2, &e2, &e2).unwrap(), rat(0));
    let ones = rats(&[1, 1]);
    assert_eq!(Form222::IV.tensor().eval_fa(&ones, &ones, &ones).unwrap(), rat(2));
}

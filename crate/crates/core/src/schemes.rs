//! Determinantal schemes cut out by the maximal minors of a matrix of
//! linear forms, and their points.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyalg::binary::binary_roots;
use crate::polyalg::polymatrix::column_subsets;
use crate::polyalg::rational::{format_rational, parse_rational};
use crate::polyalg::{gcd_binary, gram_rank, BinaryRoots, MPoly, Matrix, Monomial, PolyMatrix};
use crate::polyalg::{QuadricClass, Rational};
use crate::tensor::{Axis, Tensor3};

/// A point of projective space, scaled so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(Vec<Rational>);

impl ProjPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(Error::ZeroPoint)?;
        Ok(ProjPoint(coords.into_iter().map(|c| c / &lead).collect()))
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        ProjPoint::new(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Parses comma-separated coordinates such as `1,0,-1/2`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        ProjPoint::new(coords)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointDiagnosis {
    pub on_scheme: bool,
    pub rank_at: usize,
    pub jacobian_rank: usize,
    pub degenerate: bool,
    pub bidegenerate: bool,
}

/// The scheme of the `u x u` minors of a `u x v` matrix of linear forms
/// (`u <= v`) in `n` variables.
#[derive(Clone, Debug)]
pub struct DetScheme {
    b: PolyMatrix,
    transposed: bool,
    minors: Vec<MPoly>,
    jacobian: Vec<Vec<MPoly>>,
}

impl DetScheme {
    /// Transposes `b` when it has more rows than columns.
    pub fn new(b: PolyMatrix) -> Result<Self> {
        if !b.is_linear_forms() {
            return Err(Error::NotAForm("scheme matrix must consist of linear forms".into()));
        }
        let transposed = b.rows() > b.cols();
        let b = if transposed { b.transpose() } else { b };
        let minors = b.maximal_minors()?;
        let n = b.vars().len();
        let jacobian = minors
            .iter()
            .map(|m| (0..n).map(|k| m.partial(k)).collect())
            .collect();
        Ok(DetScheme {
            b,
            transposed,
            minors,
            jacobian,
        })
    }

    /// L, M or N of a tensor.
    pub fn associated(a: &Tensor3, axis: Axis) -> Result<Self> {
        DetScheme::new(a.assoc_matrix(axis))
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.b
    }

    pub fn was_transposed(&self) -> bool {
        self.transposed
    }

    pub fn u(&self) -> usize {
        self.b.rows()
    }

    pub fn v(&self) -> usize {
        self.b.cols()
    }

    pub fn n(&self) -> usize {
        self.b.vars().len()
    }

    pub fn expected_codim(&self) -> usize {
        (self.v() - self.u() + 1).min(self.n())
    }

    /// Maximal minors in lexicographic column order.
    pub fn minors(&self) -> &[MPoly] {
        &self.minors
    }

    /// `J[alpha][k]` is the partial derivative of minor `alpha` in variable `k`.
    pub fn jacobian(&self) -> &[Vec<MPoly>] {
        &self.jacobian
    }

    fn check_point(&self, point: &ProjPoint) -> Result<()> {
        if point.dim() != self.n() {
            return Err(Error::Dimension(format!(
                "point has {} coordinates, scheme lives in {} variables",
                point.dim(),
                self.n()
            )));
        }
        Ok(())
    }

    pub fn jacobian_at(&self, point: &ProjPoint) -> Result<Matrix> {
        self.check_point(point)?;
        let rows = self
            .jacobian
            .iter()
            .map(|row| row.iter().map(|d| d.eval(point.coords())).collect())
            .collect::<Result<Vec<Vec<Rational>>>>()?;
        if rows.is_empty() {
            return Ok(Matrix::zeros(0, self.n()));
        }
        Ok(Matrix::from_rows(rows))
    }

    /// Jacobian at a point by the row-replacement expansion of the derivative
    /// of a determinant: `d_k B_alpha` is the sum over rows `i` of the minor
    /// with row `i` replaced by the `x_k` coefficients of that row.
    pub fn jacobian_by_row_expansion(&self, point: &ProjPoint) -> Result<Matrix> {
        self.check_point(point)?;
        let (u, n) = (self.u(), self.n());
        let bp = self.b.eval(point.coords())?;
        let coeff = |i: usize, j: usize, k: usize| {
            self.b.get(i, j).coeff(&Monomial::var(n, k))
        };
        let subsets = column_subsets(self.v(), u);
        Ok(Matrix::from_fn(subsets.len(), n, |alpha, k| {
            let cols = &subsets[alpha];
            (0..u)
                .map(|i| {
                    Matrix::from_fn(u, u, |r, c| {
                        if r == i {
                            coeff(i, cols[c], k)
                        } else {
                            bp[(r, cols[c])].clone()
                        }
                    })
                    .det()
                    .expect("square")
                })
                .sum()
        }))
    }

    pub fn diagnose_point(&self, point: &ProjPoint) -> Result<PointDiagnosis> {
        self.check_point(point)?;
        let u = self.u();
        let rank_at = self.b.eval(point.coords())?.rank();
        let jacobian_rank = self.jacobian_at(point)?.rank();
        let on_scheme = rank_at < u;
        let degenerate = on_scheme && jacobian_rank < self.expected_codim();
        let bidegenerate = on_scheme && u >= 2 && rank_at + 2 <= u;
        Ok(PointDiagnosis {
            on_scheme,
            rank_at,
            jacobian_rank,
            degenerate,
            bidegenerate,
        })
    }

    /// The scheme as a subset of P^1: the common zeros of the minors are the
    /// zeros of their gcd.
    pub fn points_on_p1(&self) -> Result<P1Locus> {
        if self.n() != 2 {
            return Err(Error::NotOnProjectiveLine(self.n().saturating_sub(1)));
        }
        Ok(match gcd_binary(&self.minors)? {
            None => P1Locus::WholeLine,
            Some(g) if g.homogeneous_degree() == Some(0) => P1Locus::Empty,
            Some(g) => P1Locus::Points {
                roots: binary_roots(&g)?,
                gcd: g,
            },
        })
    }
}

/// A determinantal scheme inside P^1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum P1Locus {
    WholeLine,
    Empty,
    Points { gcd: MPoly, roots: BinaryRoots },
}

impl P1Locus {
    /// Multiplicities of the points, largest first; empty for the whole line.
    pub fn multiplicities(&self) -> Vec<u32> {
        match self {
            P1Locus::Points { roots, .. } => roots.multiplicities(),
            _ => Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, P1Locus::Empty)
    }

    pub fn is_whole_line(&self) -> bool {
        matches!(self, P1Locus::WholeLine)
    }

    pub fn is_simple_point(&self) -> bool {
        self.multiplicities() == [1]
    }

    pub fn is_two_simple_points(&self) -> bool {
        self.multiplicities() == [1, 1]
    }

    pub fn is_double_point(&self) -> bool {
        self.multiplicities() == [2]
    }

    /// Rational points with multiplicities.
    pub fn rational_points(&self) -> Vec<(ProjPoint, u32)> {
        match self {
            P1Locus::Points { roots, .. } => roots
                .rational
                .iter()
                .map(|(c, m)| (ProjPoint::new(c.clone()).expect("root is nonzero"), *m))
                .collect(),
            _ => Vec::new(),
        }
    }

    /// Short description, e.g. `two-simple-points` or `points[2,1]`.
    pub fn describe(&self) -> String {
        match self {
            P1Locus::WholeLine => "whole-line".into(),
            P1Locus::Empty => "empty".into(),
            _ if self.is_simple_point() => "simple-point".into(),
            _ if self.is_double_point() => "double-point".into(),
            _ if self.is_two_simple_points() => "two-simple-points".into(),
            _ => {
                let m: Vec<String> = self.multiplicities().iter().map(u32::to_string).collect();
                format!("points[{}]", m.join(","))
            }
        }
    }
}

/// Gram-rank class of `det N` for a `(2,2,r)` tensor.
pub fn classify_det_n_quadric(a: &Tensor3) -> Result<QuadricClass> {
    let [p, q, _] = a.dims();
    if p != 2 || q != 2 {
        return Err(Error::WrongFormat {
            expected: "(2,2,r)",
            found: a.dims(),
        });
    }
    gram_rank(&a.assoc_matrix(Axis::Z).det()?)
}

/// The coordinate vector `e_1 = (1,0,...,0)`.
pub fn first_basis_point(n: usize) -> ProjPoint {
    let mut c = vec![Rational::zero(); n];
    c[0] = Rational::one();
    ProjPoint::new(c).expect("nonzero")
}
